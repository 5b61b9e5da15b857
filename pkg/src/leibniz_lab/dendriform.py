"""Leibniz-dendriform algebras, Rota-Baxter operators and invariant forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (DegenerateForm, DimensionMismatch, NotRotaBaxter,
                     NotSymmetric, SingularMatrix)
from .leibniz import CheckResult, LeibnizAlgebra, OK
from .linalg import Matrix, invert, is_singular
from .representations import Representation
from .scalars import GAUSSIAN, RATIONAL, Scalar


@dataclass(frozen=True)
class DendriformAlgebra:
    dim: int
    left_constants: tuple   # tensor for the left product
    right_constants: tuple  # tensor for the right product
    field: str = RATIONAL

    @staticmethod
    def from_constants(left, right, field: str = RATIONAL) -> "DendriformAlgebra":
        n = len(left)
        for tensor in (left, right):
            if len(tensor) != n or any(
                    len(plane) != n or any(len(row) != n for row in plane)
                    for plane in tensor):
                raise DimensionMismatch("product tensors must be n x n x n")
        freeze = lambda t: tuple(tuple(tuple(row) for row in plane)
                                 for plane in t)
        return DendriformAlgebra(n, freeze(left), freeze(right), field)

    @staticmethod
    def zero(dim: int, field: str = RATIONAL) -> "DendriformAlgebra":
        z = Scalar.zero(field == GAUSSIAN)
        t = tuple(tuple(tuple(z for _ in range(dim)) for _ in range(dim))
                  for _ in range(dim))
        return DendriformAlgebra(dim, t, t, field)

    @property
    def gaussian(self) -> bool:
        return self.field == GAUSSIAN

    def zero_vector(self):
        return [Scalar.zero(self.gaussian) for _ in range(self.dim)]

    def basis_vector(self, i: int):
        v = self.zero_vector()
        v[i] = Scalar.one(self.gaussian)
        return v

    def _product(self, tensor, x, y):
        out = self.zero_vector()
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                f = xi * yj
                for k in range(self.dim):
                    c = tensor[i][j][k]
                    if not c.is_zero():
                        out[k] = out[k] + f * c
        return out

    def left(self, x, y):
        """x left-product y."""
        return self._product(self.left_constants, x, y)

    def right(self, x, y):
        """x right-product y."""
        return self._product(self.right_constants, x, y)

    def both(self, x, y):
        """The sub-adjacent bracket value x<y + x>y."""
        return [a + b for a, b in zip(self.left(x, y), self.right(x, y))]


def dendriforms_equal(D1: DendriformAlgebra, D2: DendriformAlgebra) -> bool:
    return (D1.dim == D2.dim
            and D1.left_constants == D2.left_constants
            and D1.right_constants == D2.right_constants)


def verify_dendriform(D: DendriformAlgebra) -> CheckResult:
    """Check the three defining identities on all basis triples."""
    for i in range(D.dim):
        x = D.basis_vector(i)
        for j in range(D.dim):
            y = D.basis_vector(j)
            for k in range(D.dim):
                z = D.basis_vector(k)
                lhs = D.left(D.left(x, y), z)
                rhs = _sub(_sub(D.left(x, D.left(y, z)),
                                D.left(y, D.left(x, z))),
                           D.left(D.right(x, y), z))
                if lhs != rhs:
                    return CheckResult(False, "p1", (i, j, k), lhs, rhs)
                lhs = D.left(x, D.right(y, z))
                rhs = _add(_add(D.right(D.left(x, y), z),
                                D.right(y, D.left(x, z))),
                           D.right(y, D.right(x, z)))
                if lhs != rhs:
                    return CheckResult(False, "p2", (i, j, k), lhs, rhs)
                lhs = D.right(x, D.right(y, z))
                rhs = _sub(_add(D.right(D.right(x, y), z),
                                D.left(y, D.right(x, z))),
                           D.right(x, D.left(y, z)))
                if lhs != rhs:
                    return CheckResult(False, "p3", (i, j, k), lhs, rhs)
    return OK


def _add(x, y):
    return [a + b for a, b in zip(x, y)]


def _sub(x, y):
    return [a - b for a, b in zip(x, y)]


def subadjacent(D: DendriformAlgebra) -> LeibnizAlgebra:
    """The Leibniz algebra with bracket x<y + x>y."""
    tensor = [[[D.left_constants[i][j][k] + D.right_constants[i][j][k]
                for k in range(D.dim)]
               for j in range(D.dim)]
              for i in range(D.dim)]
    return LeibnizAlgebra.from_constants(tensor, D.field)


def dendriform_rep(D: DendriformAlgebra) -> Representation:
    """(L, l, r) with l(x)y = x<y and r(x)y = y>x, over the sub-adjacent algebra."""
    A = subadjacent(D)
    lefts, rights = [], []
    for i in range(D.dim):
        lefts.append(Matrix.from_rows(
            [[D.left_constants[i][j][k] for j in range(D.dim)]
             for k in range(D.dim)]))
        rights.append(Matrix.from_rows(
            [[D.right_constants[j][i][k] for j in range(D.dim)]
             for k in range(D.dim)]))
    return Representation.build(A, lefts, rights)


def verify_rota_baxter(A: LeibnizAlgebra, R: Representation,
                       T: Matrix) -> CheckResult:
    """[Tu, Tv] = T(l(Tu)v + r(Tv)u), checked on all basis pairs of V."""
    if T.rows != A.dim or T.cols != R.rep_dim:
        raise DimensionMismatch("T must map the %d-dim module into the algebra"
                                % R.rep_dim)
    m = R.rep_dim
    for a in range(m):
        u = _unit(m, a, A.gaussian)
        tu = T.apply(u)
        for b in range(m):
            v = _unit(m, b, A.gaussian)
            tv = T.apply(v)
            lhs = A.bracket(tu, tv)
            rhs = T.apply(_add(R.left_of(tu).apply(v),
                               R.right_of(tv).apply(u)))
            if lhs != rhs:
                return CheckResult(False, "ROTA_BAXTER_FAILS", (a, b), lhs, rhs)
    return OK


def _unit(m, b, gaussian):
    u = [Scalar.zero(gaussian) for _ in range(m)]
    u[b] = Scalar.one(gaussian)
    return u


def rb_to_dendriform(A: LeibnizAlgebra, R: Representation,
                     T: Matrix) -> DendriformAlgebra:
    """Dendriform structure on V: u<v = l(Tu)v, u>v = r(Tv)u."""
    check = verify_rota_baxter(A, R, T)
    if not check.ok:
        raise NotRotaBaxter("identity fails at basis pair %s" % (check.indices,))
    m = R.rep_dim
    left = [[[None] * m for _ in range(m)] for _ in range(m)]
    right = [[[None] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        u = _unit(m, a, A.gaussian)
        tu = T.apply(u)
        for b in range(m):
            v = _unit(m, b, A.gaussian)
            tv = T.apply(v)
            lv = R.left_of(tu).apply(v)
            rv = R.right_of(tv).apply(u)
            for k in range(m):
                left[a][b][k] = lv[k]
                right[a][b][k] = rv[k]
    return DendriformAlgebra.from_constants(left, right, A.field)


def compatible_dendriform_from_invertible_rb(
        A: LeibnizAlgebra, R: Representation, T: Matrix) -> DendriformAlgebra:
    """Dendriform structure on the algebra itself: x<y = T(l(x)T^{-1}y)."""
    if T.rows != T.cols:
        raise SingularMatrix("invertible T must be square")
    t_inv = invert(T)
    check = verify_rota_baxter(A, R, T)
    if not check.ok:
        raise NotRotaBaxter("identity fails at basis pair %s" % (check.indices,))
    n = A.dim
    left = [[[None] * n for _ in range(n)] for _ in range(n)]
    right = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        x = A.basis_vector(i)
        for j in range(n):
            y = A.basis_vector(j)
            lv = T.apply(R.left_of(x).apply(t_inv.apply(y)))
            rv = T.apply(R.right_of(y).apply(t_inv.apply(x)))
            for k in range(n):
                left[i][j][k] = lv[k]
                right[i][j][k] = rv[k]
    return DendriformAlgebra.from_constants(left, right, A.field)


def _form_value(B: Matrix, x, y) -> Scalar:
    acc = Scalar.zero()
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        for j, yj in enumerate(y):
            if not yj.is_zero():
                acc = acc + xi * yj * B[i, j]
    return acc


def verify_invariant_form(D: DendriformAlgebra, omega: Matrix) -> CheckResult:
    """Invariance of a nondegenerate form with respect to both products."""
    if is_singular(omega):
        raise DegenerateForm("invariant forms must be nondegenerate")
    for i in range(D.dim):
        x = D.basis_vector(i)
        for j in range(D.dim):
            y = D.basis_vector(j)
            for k in range(D.dim):
                z = D.basis_vector(k)
                lhs = _form_value(omega, D.left(x, y), z)
                rhs = -_form_value(omega, y, D.left(x, z))
                if lhs != rhs:
                    return CheckResult(False, "INVARIANT_LEFT_FAILS",
                                       (i, j, k), [lhs], [rhs])
                lhs = _form_value(omega, D.right(x, y), z)
                rhs = _form_value(omega, x,
                                  _add(D.left(y, z), D.right(z, y)))
                if lhs != rhs:
                    return CheckResult(False, "INVARIANT_RIGHT_FAILS",
                                       (i, j, k), [lhs], [rhs])
    return OK


def verify_quadratic_dendriform(D: DendriformAlgebra,
                                B: Matrix) -> CheckResult:
    """Invariance conditions tying the products to the sub-adjacent bracket."""
    if B != B.transpose():
        raise NotSymmetric("quadratic forms must be symmetric")
    if is_singular(B):
        raise DegenerateForm("quadratic forms must be nondegenerate")
    for i in range(D.dim):
        x = D.basis_vector(i)
        for j in range(D.dim):
            y = D.basis_vector(j)
            for k in range(D.dim):
                z = D.basis_vector(k)
                lhs = _form_value(B, D.left(x, y), z)
                rhs = -_form_value(B, y, D.both(x, z))
                if lhs != rhs:
                    return CheckResult(False, "QUADRATIC_LEFT_FAILS",
                                       (i, j, k), [lhs], [rhs])
                lhs = _form_value(B, D.right(x, y), z)
                rhs = (_form_value(B, x, D.both(y, z))
                       + _form_value(B, x, D.both(z, y)))
                if lhs != rhs:
                    return CheckResult(False, "QUADRATIC_RIGHT_FAILS",
                                       (i, j, k), [lhs], [rhs])
    return OK
