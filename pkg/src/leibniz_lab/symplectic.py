"""Symplectic structures, the linear solver, phase spaces and Manin triples."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .dendriform import (DendriformAlgebra, dendriform_rep,
                         verify_quadratic_dendriform)
from .errors import (DegenerateForm, DimensionMismatch, NotQuadratic,
                     NotSymmetric, NotSymplectic)
from .leibniz import (CheckResult, LeibnizAlgebra, OK, Subspace, is_subalgebra,
                      tensors_equal, verify_leibniz)
from .linalg import (Matrix, column_span_matrix, invert, is_singular,
                     kernel_basis, rank)
from .representations import Representation, dual_rep, semidirect_product
from .scalars import Scalar


def form_value(B: Matrix, x, y) -> Scalar:
    acc = Scalar.zero()
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        for j, yj in enumerate(y):
            if not yj.is_zero():
                acc = acc + xi * yj * B[i, j]
    return acc


def verify_symplectic(A: LeibnizAlgebra, B: Matrix) -> CheckResult:
    """Symmetry, nondegeneracy and the defining trilinear identity.

    B(z,[x,y]) = -B(y,[x,z]) + B(x,[y,z]) + B(x,[z,y]) on all basis triples.
    """
    if B.rows != A.dim or B.cols != A.dim:
        raise DimensionMismatch("form must be %d x %d" % (A.dim, A.dim))
    if B != B.transpose():
        return CheckResult(False, "NOT_SYMMETRIC")
    if is_singular(B):
        return CheckResult(False, "DEGENERATE")
    for i in range(A.dim):
        x = A.basis_vector(i)
        for j in range(A.dim):
            y = A.basis_vector(j)
            for k in range(A.dim):
                z = A.basis_vector(k)
                lhs = form_value(B, z, A.bracket(x, y))
                rhs = (-form_value(B, y, A.bracket(x, z))
                       + form_value(B, x, A.bracket(y, z))
                       + form_value(B, x, A.bracket(z, y)))
                if lhs != rhs:
                    return CheckResult(False, "IDENTITY_FAILS", (i, j, k),
                                       [lhs], [rhs])
    return OK


def _sym_index_pairs(n: int):
    return [(p, q) for p in range(n) for q in range(p, n)]


def _form_from_sym_coords(n: int, coords, gaussian: bool) -> Matrix:
    rows = [[Scalar.zero(gaussian)] * n for _ in range(n)]
    for (p, q), c in zip(_sym_index_pairs(n), coords):
        rows[p][q] = c
        rows[q][p] = c
    return Matrix.from_rows(rows)


def solve_symplectic_space(A: LeibnizAlgebra, seed: int = 0):
    """Exact basis of the space of symmetric forms satisfying the identity.

    Nondegeneracy is an open condition and is not imposed; a deterministic
    sampling pass looks for one nonsingular member (sum of the basis first,
    then seeded small-integer combinations, at most 32 attempts).
    """
    n = A.dim
    pairs = _sym_index_pairs(n)
    pair_index = {pq: t for t, pq in enumerate(pairs)}
    # One linear constraint per basis triple, unknowns = upper-triangle of B.
    constraint_rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [Scalar.zero(A.gaussian) for _ in pairs]

                def accumulate(p, bracket, sign):
                    for m, c in enumerate(bracket):
                        if not c.is_zero():
                            t = pair_index[(min(p, m), max(p, m))]
                            row[t] = row[t] + (c if sign > 0 else -c)

                accumulate(k, A.bracket_basis(i, j), +1)   # B(z, [x,y])
                accumulate(j, A.bracket_basis(i, k), +1)   # + B(y, [x,z])
                accumulate(i, A.bracket_basis(j, k), -1)   # - B(x, [y,z])
                accumulate(i, A.bracket_basis(k, j), -1)   # - B(x, [z,y])
                if any(not c.is_zero() for c in row):
                    constraint_rows.append(row)
    if constraint_rows:
        kernel = kernel_basis(Matrix.from_rows(constraint_rows))
        basis = [_form_from_sym_coords(n, col.col(0), A.gaussian)
                 for col in kernel]
    else:
        basis = [_form_from_sym_coords(
            n, [Scalar.one(A.gaussian) if t == s else Scalar.zero(A.gaussian)
                for t in range(len(pairs))], A.gaussian)
            for s in range(len(pairs))]
    sample = sample_nondegenerate(basis, seed=seed)
    return basis, sample


def sample_nondegenerate(basis: Sequence[Matrix], seed: int = 0,
                         attempts: int = 32) -> Optional[Matrix]:
    """Deterministic search for a nonsingular member of a form space."""
    if not basis:
        return None
    candidate = basis[0]
    for B in basis[1:]:
        candidate = candidate + B
    if not is_singular(candidate):
        return candidate
    rng = random.Random(seed)
    for _ in range(attempts):
        candidate = Matrix.zero(basis[0].rows, basis[0].cols)
        for B in basis:
            candidate = candidate + B.scale(Scalar.of(rng.randint(-5, 5)))
        if not is_singular(candidate):
            return candidate
    return None


def symplectic_to_dendriform(A: LeibnizAlgebra, B: Matrix) -> DendriformAlgebra:
    """Solve the two invariance identities for the two products columnwise.

    B(x<y, z) = -B(y, [x,z]) and B(x>y, z) = B(x, [y,z]) + B(x, [z,y])
    determine x<y and x>y uniquely because B is nondegenerate.
    """
    check = verify_symplectic(A, B)
    if not check.ok:
        raise NotSymplectic("form fails the symplectic check: %s" % check.reason)
    n = A.dim
    b_inv = invert(B)
    left = [[None] * n for _ in range(n)]
    right = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            y = A.basis_vector(j)
            lhs_left = [Scalar.zero(A.gaussian) for _ in range(n)]
            lhs_right = [Scalar.zero(A.gaussian) for _ in range(n)]
            for k in range(n):
                z = A.basis_vector(k)
                lhs_left[k] = -form_value(B, y, A.bracket_basis(i, k))
                lhs_right[k] = (form_value(B, A.basis_vector(i),
                                           A.bracket_basis(j, k))
                                + form_value(B, A.basis_vector(i),
                                             A.bracket_basis(k, j)))
            # B(v, e_k) = (B v)_k for symmetric B, so v = B^{-1} * functional.
            left[i][j] = tuple(b_inv.apply(lhs_left))
            right[i][j] = tuple(b_inv.apply(lhs_right))
    return DendriformAlgebra.from_constants(left, right, A.field)


def canonical_pairing(n: int, gaussian: bool = False) -> Matrix:
    """The block form [[0, I], [I, 0]] on base + dual coordinates."""
    z, o = Scalar.zero(gaussian), Scalar.one(gaussian)
    return Matrix.from_rows(
        [[o if j == i + n else z for j in range(2 * n)] for i in range(n)]
        + [[o if j == i - n else z for j in range(2 * n)]
           for i in range(n, 2 * n)])


@dataclass(frozen=True)
class PhaseSpace:
    total: LeibnizAlgebra
    base_dim: int
    form: Matrix
    origin: Optional[DendriformAlgebra] = None

    def base_subspace(self) -> Subspace:
        return Subspace.from_vectors(
            [self.total.basis_vector(i) for i in range(self.base_dim)])

    def dual_subspace(self) -> Subspace:
        return Subspace.from_vectors(
            [self.total.basis_vector(i)
             for i in range(self.base_dim, 2 * self.base_dim)])


def build_phase_space(D: DendriformAlgebra) -> PhaseSpace:
    """Semidirect product with the dual of the tautological representation."""
    total = semidirect_product(dual_rep(dendriform_rep(D)))
    return PhaseSpace(total, D.dim, canonical_pairing(D.dim, D.gaussian), D)


def verify_phase_space(P: PhaseSpace, base: Subspace,
                       dual: Subspace) -> CheckResult:
    n = P.base_dim
    if base.dim != n or dual.dim != n:
        raise DimensionMismatch("both blocks must have dimension %d" % n)
    check = verify_leibniz(P.total)
    if not check.ok:
        return CheckResult(False, "LEIBNIZ_FAILS", check.indices,
                           check.lhs, check.rhs)
    check = verify_symplectic(P.total, P.form)
    if not check.ok:
        return CheckResult(False, "SYMPLECTIC_FAILS", check.indices,
                           check.lhs, check.rhs)
    if not is_subalgebra(P.total, base) or not is_subalgebra(P.total, dual):
        return CheckResult(False, "SUBALGEBRA_FAILS")
    # The two blocks must pair canonically: isotropic against themselves,
    # dual bases against each other.
    for a, u in enumerate(base.basis):
        for b, v in enumerate(base.basis):
            if not form_value(P.form, list(u), list(v)).is_zero():
                return CheckResult(False, "PAIRING_FAILS", (a, b))
    for a, u in enumerate(dual.basis):
        for b, v in enumerate(dual.basis):
            if not form_value(P.form, list(u), list(v)).is_zero():
                return CheckResult(False, "PAIRING_FAILS", (a, b))
    pairing = Matrix.from_rows([[form_value(P.form, list(u), list(v))
                                 for v in dual.basis] for u in base.basis])
    if rank(pairing) != n:
        return CheckResult(False, "PAIRING_FAILS")
    return OK


def verify_manin_triple(D: DendriformAlgebra, B: Matrix, W1: Subspace,
                        W2: Subspace) -> CheckResult:
    try:
        check = verify_quadratic_dendriform(D, B)
    except (NotSymmetric, DegenerateForm) as exc:
        raise NotQuadratic("the ambient pair is not quadratic: %s"
                           % exc) from None
    if not check.ok:
        raise NotQuadratic("the ambient pair is not quadratic: %s"
                           % check.reason)
    for W in (W1, W2):
        for u in W.basis:
            for v in W.basis:
                if not form_value(B, list(u), list(v)).is_zero():
                    return CheckResult(False, "ISOTROPY_FAILS")
    for W in (W1, W2):
        for u in W.basis:
            for v in W.basis:
                if not W.contains(D.left(list(u), list(v))):
                    return CheckResult(False, "SUBALGEBRA_FAILS")
                if not W.contains(D.right(list(u), list(v))):
                    return CheckResult(False, "SUBALGEBRA_FAILS")
    if W1.dim + W2.dim != D.dim:
        return CheckResult(False, "DIRECT_SUM_FAILS")
    combined = column_span_matrix(W1.columns() + W2.columns())
    if rank(combined) != D.dim:
        return CheckResult(False, "DIRECT_SUM_FAILS")
    return OK
