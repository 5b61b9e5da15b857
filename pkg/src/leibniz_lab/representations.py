"""Representations of Leibniz algebras and the constructions they carry."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, NotRotaBaxter
from .leibniz import CheckResult, LeibnizAlgebra, OK
from .linalg import Matrix, matrices_equal
from .scalars import Scalar


@dataclass(frozen=True)
class Representation:
    algebra: LeibnizAlgebra
    rep_dim: int
    left_maps: tuple   # l(e_i), m x m matrices, one per basis index
    right_maps: tuple  # r(e_i)

    @staticmethod
    def build(algebra: LeibnizAlgebra, left_maps: Sequence[Matrix],
              right_maps: Sequence[Matrix]) -> "Representation":
        if len(left_maps) != algebra.dim or len(right_maps) != algebra.dim:
            raise DimensionMismatch("need one l and one r matrix per basis index")
        m = left_maps[0].rows if left_maps else 0
        for M in list(left_maps) + list(right_maps):
            if M.rows != m or M.cols != m:
                raise DimensionMismatch("representation matrices must be m x m")
        return Representation(algebra, m, tuple(left_maps), tuple(right_maps))

    @staticmethod
    def zero(algebra: LeibnizAlgebra, rep_dim: int) -> "Representation":
        z = Matrix.zero(rep_dim, rep_dim, algebra.gaussian)
        return Representation(algebra, rep_dim,
                              tuple(z for _ in range(algebra.dim)),
                              tuple(z for _ in range(algebra.dim)))

    def left_of(self, x) -> Matrix:
        """l(x) for an arbitrary element, assembled by linearity."""
        acc = Matrix.zero(self.rep_dim, self.rep_dim, self.algebra.gaussian)
        for i, xi in enumerate(x):
            if not xi.is_zero():
                acc = acc + self.left_maps[i].scale(xi)
        return acc

    def right_of(self, x) -> Matrix:
        acc = Matrix.zero(self.rep_dim, self.rep_dim, self.algebra.gaussian)
        for i, xi in enumerate(x):
            if not xi.is_zero():
                acc = acc + self.right_maps[i].scale(xi)
        return acc


def _commutator(A: Matrix, B: Matrix) -> Matrix:
    return A @ B - B @ A


def _flatten(M: Matrix) -> list:
    return [e for row in M.entries for e in row]


def verify_representation(R: Representation) -> CheckResult:
    """Check the three representation axioms on all basis pairs.

    Witnesses report both sides as row-major flattened matrices.
    """
    A = R.algebra
    for i in range(A.dim):
        for j in range(A.dim):
            bij = A.bracket_basis(i, j)
            l_b = R.left_of(bij)
            r_b = R.right_of(bij)
            li, lj = R.left_maps[i], R.left_maps[j]
            ri, rj = R.right_maps[i], R.right_maps[j]
            if not matrices_equal(l_b, _commutator(li, lj)):
                return CheckResult(False, "AXIOM_L_BRACKET", (i, j),
                                   _flatten(l_b), _flatten(_commutator(li, lj)))
            if not matrices_equal(r_b, _commutator(li, rj)):
                return CheckResult(False, "AXIOM_R_BRACKET", (i, j),
                                   _flatten(r_b), _flatten(_commutator(li, rj)))
            if not matrices_equal(rj @ li, (rj @ ri).scale(Scalar.of(-1))):
                return CheckResult(False, "AXIOM_R_COMPOSE", (i, j),
                                   _flatten(rj @ li),
                                   _flatten((rj @ ri).scale(Scalar.of(-1))))
    return OK


def regular_rep(A: LeibnizAlgebra) -> Representation:
    return Representation.build(
        A,
        [A.left_mult_matrix(i) for i in range(A.dim)],
        [A.right_mult_matrix(i) for i in range(A.dim)])


def dual_rep(R: Representation) -> Representation:
    """The induced action (l*, -l*-r*) on the dual space.

    In matrix terms the new left maps are -l(e_i)^T and the new right maps
    are l(e_i)^T + r(e_i)^T.
    """
    lefts = [l.transpose().scale(Scalar.of(-1)) for l in R.left_maps]
    rights = [l.transpose() + r.transpose()
              for l, r in zip(R.left_maps, R.right_maps)]
    return Representation.build(R.algebra, lefts, rights)


def semidirect_product(R: Representation) -> LeibnizAlgebra:
    """[x+u, y+v] = [x,y] + l_x(v) + r_y(u) on the space E + V."""
    A = R.algebra
    n, m = A.dim, R.rep_dim
    brackets = {}
    for i in range(n):
        for j in range(n):
            value = {k: A.constants[i][j][k] for k in range(n)
                     if not A.constants[i][j][k].is_zero()}
            if value:
                brackets[(i, j)] = value
    for i in range(n):
        for b in range(m):
            col = R.left_maps[i].col(b)
            value = {n + k: col[k] for k in range(m) if not col[k].is_zero()}
            if value:
                brackets[(i, n + b)] = value
            col = R.right_maps[i].col(b)
            value = {n + k: col[k] for k in range(m) if not col[k].is_zero()}
            if value:
                brackets[(n + b, i)] = value
    return LeibnizAlgebra.from_brackets(n + m, brackets, A.field)


def bowtie_algebra(A: LeibnizAlgebra, R: Representation,
                   T: Matrix) -> LeibnizAlgebra:
    """The twisted double on E + V induced by a relative Rota-Baxter T."""
    from .dendriform import verify_rota_baxter  # cycle-free at call time

    check = verify_rota_baxter(A, R, T)
    if not check.ok:
        raise NotRotaBaxter("T is not a relative Rota-Baxter operator: %s"
                            % (check.indices,))
    n, m = A.dim, R.rep_dim
    gaussian = A.gaussian
    zero_n = [Scalar.zero(gaussian)] * n
    zero_m = [Scalar.zero(gaussian)] * m

    def t_of(u):
        return T.apply(u)

    tensor = []
    for p in range(n + m):
        plane = []
        for q in range(n + m):
            x, u = (A.basis_vector(p), zero_m) if p < n else \
                   (list(zero_n), _unit(m, p - n, gaussian))
            y, v = (A.basis_vector(q), zero_m) if q < n else \
                   (list(zero_n), _unit(m, q - n, gaussian))
            e_part = A.bracket(x, y)
            tu, tv = t_of(u), t_of(v)
            e_part = _vadd(e_part, A.bracket(tu, y))
            e_part = _vsub(e_part, t_of(R.right_of(y).apply(u)))
            e_part = _vadd(e_part, A.bracket(x, tv))
            e_part = _vsub(e_part, t_of(R.left_of(x).apply(v)))
            v_part = _vadd(R.left_of(tu).apply(v), R.right_of(tv).apply(u))
            v_part = _vadd(v_part, R.left_of(x).apply(v))
            v_part = _vadd(v_part, R.right_of(y).apply(u))
            plane.append(tuple(e_part + v_part))
        tensor.append(tuple(plane))
    return LeibnizAlgebra.from_constants(tensor, A.field)


def _unit(m, b, gaussian):
    u = [Scalar.zero(gaussian) for _ in range(m)]
    u[b] = Scalar.one(gaussian)
    return u


def _vadd(x, y):
    return [a + b for a, b in zip(x, y)]


def _vsub(x, y):
    return [a - b for a, b in zip(x, y)]
