"""Leibniz algebras as exact structure-constant tensors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .linalg import Matrix, column_span_matrix, in_span, rank, trace
from .scalars import GAUSSIAN, RATIONAL, Scalar

Vector = list  # coordinate list of Scalar relative to the ambient basis


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a verification, with a re-checkable witness on failure."""
    ok: bool
    reason: Optional[str] = None
    indices: Optional[tuple] = None
    lhs: Optional[list] = None
    rhs: Optional[list] = None

    def __bool__(self) -> bool:
        return self.ok


OK = CheckResult(True)


@dataclass(frozen=True)
class Subspace:
    """Span of linearly independent coordinate vectors."""
    basis: tuple  # tuple of coordinate tuples

    @staticmethod
    def from_vectors(vectors: Sequence[Sequence[Scalar]]) -> "Subspace":
        vecs = tuple(tuple(v) for v in vectors)
        if vecs:
            cols = [Matrix.column(list(v)) for v in vecs]
            if rank(column_span_matrix(cols)) != len(vecs):
                raise DimensionMismatch("subspace basis is linearly dependent")
        return Subspace(vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    def columns(self) -> list:
        return [Matrix.column(list(v)) for v in self.basis]

    def contains(self, coords: Sequence[Scalar]) -> bool:
        return in_span(self.columns(), Matrix.column(list(coords)))


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    constants: tuple  # c[i][j][k], tuple of tuples of tuples of Scalar
    field: str = RATIONAL
    labels: Optional[tuple] = None

    @staticmethod
    def from_constants(constants, field: str = RATIONAL,
                       labels=None) -> "LeibnizAlgebra":
        n = len(constants)
        for plane in constants:
            if len(plane) != n or any(len(row) != n for row in plane):
                raise DimensionMismatch("structure tensor must be n x n x n")
        gaussian = field == GAUSSIAN
        tensor = tuple(
            tuple(tuple(c if not gaussian else c.promote() for c in row)
                  for row in plane)
            for plane in constants)
        return LeibnizAlgebra(n, tensor,
                              field, tuple(labels) if labels else None)

    @staticmethod
    def from_brackets(dim: int, brackets: dict, field: str = RATIONAL,
                      labels=None) -> "LeibnizAlgebra":
        """Build from a sparse map (i, j) -> {k: Scalar}."""
        gaussian = field == GAUSSIAN
        zero = Scalar.zero(gaussian)
        tensor = [[[zero for _ in range(dim)] for _ in range(dim)]
                  for _ in range(dim)]
        for (i, j), value in brackets.items():
            for k, c in value.items():
                tensor[i][j][k] = c.promote() if gaussian else c
        return LeibnizAlgebra.from_constants(tensor, field, labels)

    @staticmethod
    def abelian(dim: int, field: str = RATIONAL) -> "LeibnizAlgebra":
        return LeibnizAlgebra.from_brackets(dim, {}, field)

    @property
    def gaussian(self) -> bool:
        return self.field == GAUSSIAN

    def zero_vector(self) -> Vector:
        return [Scalar.zero(self.gaussian) for _ in range(self.dim)]

    def basis_vector(self, i: int) -> Vector:
        v = self.zero_vector()
        v[i] = Scalar.one(self.gaussian)
        return v

    def bracket(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vectors of length %d expected" % self.dim)
        out = self.zero_vector()
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                f = xi * yj
                for k in range(self.dim):
                    c = self.constants[i][j][k]
                    if not c.is_zero():
                        out[k] = out[k] + f * c
        return out

    def bracket_basis(self, i: int, j: int) -> Vector:
        return list(self.constants[i][j])

    def left_mult_matrix(self, i: int) -> Matrix:
        """Matrix of y -> [e_i, y]."""
        return Matrix.from_rows([[self.constants[i][j][k]
                                  for j in range(self.dim)]
                                 for k in range(self.dim)])

    def right_mult_matrix(self, i: int) -> Matrix:
        """Matrix of y -> [y, e_i]."""
        return Matrix.from_rows([[self.constants[j][i][k]
                                  for j in range(self.dim)]
                                 for k in range(self.dim)])

    def full_subspace(self) -> Subspace:
        return Subspace.from_vectors([self.basis_vector(i)
                                      for i in range(self.dim)])


def tensors_equal(A: LeibnizAlgebra, B: LeibnizAlgebra) -> bool:
    return A.dim == B.dim and all(
        A.constants[i][j][k] == B.constants[i][j][k]
        for i in range(A.dim) for j in range(A.dim) for k in range(A.dim))


def verify_leibniz(A: LeibnizAlgebra) -> CheckResult:
    """Check [x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis triples.

    Trilinearity of both sides certifies the identity for all elements.
    """
    for i in range(A.dim):
        ei = A.basis_vector(i)
        for j in range(A.dim):
            ej = A.basis_vector(j)
            for k in range(A.dim):
                ek = A.basis_vector(k)
                lhs = A.bracket(ei, A.bracket(ej, ek))
                rhs = _add(A.bracket(A.bracket(ei, ej), ek),
                           A.bracket(ej, A.bracket(ei, ek)))
                if lhs != rhs:
                    return CheckResult(False, "LEIBNIZ_FAILS", (i, j, k),
                                       lhs, rhs)
    return OK


def _add(x: Vector, y: Vector) -> Vector:
    return [a + b for a, b in zip(x, y)]


def is_subalgebra(A: LeibnizAlgebra, W: Subspace) -> bool:
    if W.basis and W.ambient_dim != A.dim:
        raise DimensionMismatch("subspace lives in the wrong ambient space")
    for w1 in W.basis:
        for w2 in W.basis:
            if not W.contains(A.bracket(list(w1), list(w2))):
                return False
    return True


def is_abelian_subalgebra(A: LeibnizAlgebra, W: Subspace) -> bool:
    if W.basis and W.ambient_dim != A.dim:
        raise DimensionMismatch("subspace lives in the wrong ambient space")
    for w1 in W.basis:
        for w2 in W.basis:
            if any(not c.is_zero() for c in A.bracket(list(w1), list(w2))):
                return False
    return True


def is_two_sided_ideal(A: LeibnizAlgebra, W: Subspace) -> bool:
    if W.basis and W.ambient_dim != A.dim:
        raise DimensionMismatch("subspace lives in the wrong ambient space")
    for i in range(A.dim):
        ei = A.basis_vector(i)
        for w in W.basis:
            if not W.contains(A.bracket(ei, list(w))):
                return False
            if not W.contains(A.bracket(list(w), ei)):
                return False
    return True


def direct_sum(A: LeibnizAlgebra, B: LeibnizAlgebra) -> LeibnizAlgebra:
    if A.field != B.field:
        raise FieldMismatch("direct sum of algebras over different fields")
    n, m = A.dim, B.dim
    brackets = {}
    for i in range(n):
        for j in range(n):
            value = {k: A.constants[i][j][k] for k in range(n)
                     if not A.constants[i][j][k].is_zero()}
            if value:
                brackets[(i, j)] = value
    for i in range(m):
        for j in range(m):
            value = {n + k: B.constants[i][j][k] for k in range(m)
                     if not B.constants[i][j][k].is_zero()}
            if value:
                brackets[(n + i, n + j)] = value
    return LeibnizAlgebra.from_brackets(n + m, brackets, A.field)


def killing_form(A: LeibnizAlgebra) -> Matrix:
    """B(e_i, e_j) = tr(L_i L_j) built from left multiplications.

    For Lie algebras this is the classical Killing form; no symmetry is
    claimed for general Leibniz algebras.
    """
    lefts = [A.left_mult_matrix(i) for i in range(A.dim)]
    return Matrix.from_rows([[trace(lefts[i] @ lefts[j])
                              for j in range(A.dim)]
                             for i in range(A.dim)])
