"""Nijenhuis operators, product structures and complex structures."""

from __future__ import annotations

from dataclasses import dataclass

from .dendriform import DendriformAlgebra
from .errors import (DimensionMismatch, NotAntiInvolution, NotComplexProduct,
                     NotComplexStructure, NotDirectSum, NotInvolution,
                     NotSubalgebra, PhiIdentityFails, TooLarge, WrongField)
from .leibniz import (CheckResult, LeibnizAlgebra, OK, Subspace, is_subalgebra)
from .linalg import (Matrix, column_span_matrix, eigenspace, in_span, invert,
                     matrices_equal, rank)
from .scalars import GAUSSIAN, RATIONAL, Scalar


@dataclass(frozen=True)
class StructureReport:
    is_nijenhuis: bool
    is_product: bool
    is_strict: bool
    is_abelian: bool
    is_paracomplex: bool
    plus_eigenspace: Subspace
    minus_eigenspace: Subspace


@dataclass(frozen=True)
class ComplexReport:
    is_complex: bool
    is_strict: bool
    is_abelian: bool
    eigen_i: Subspace
    eigen_minus_i: Subspace


def _is_involution(M: Matrix) -> bool:
    return M.is_square() and matrices_equal(M @ M, Matrix.identity(M.rows))


def _is_anti_involution(M: Matrix) -> bool:
    return M.is_square() and matrices_equal(
        M @ M, Matrix.identity(M.rows).scale(Scalar.of(-1)))


def verify_nijenhuis(A: LeibnizAlgebra, N: Matrix) -> CheckResult:
    """[Nx, Ny] = N([Nx,y] + [x,Ny] - N[x,y]) on all basis pairs."""
    if N.rows != A.dim or N.cols != A.dim:
        raise DimensionMismatch("operator must be %d x %d" % (A.dim, A.dim))
    for i in range(A.dim):
        x = A.basis_vector(i)
        nx = N.apply(x)
        for j in range(A.dim):
            y = A.basis_vector(j)
            ny = N.apply(y)
            lhs = A.bracket(nx, ny)
            inner = _add(A.bracket(nx, y), A.bracket(x, ny))
            inner = _sub(inner, N.apply(A.bracket_basis(i, j)))
            rhs = N.apply(inner)
            if lhs != rhs:
                return CheckResult(False, "NIJENHUIS_FAILS", (i, j), lhs, rhs)
    return OK


def _add(x, y):
    return [a + b for a, b in zip(x, y)]


def _sub(x, y):
    return [a - b for a, b in zip(x, y)]


def _subspace_from_columns(columns) -> Subspace:
    return Subspace.from_vectors([col.col(0) for col in columns])


def classify_product(A: LeibnizAlgebra, E: Matrix) -> StructureReport:
    """Full integrability/strict/abelian/paracomplex report for an involution."""
    if not _is_involution(E):
        raise NotInvolution("E^2 != I")
    nijenhuis = verify_nijenhuis(A, E).ok
    strict = True
    abelian = True
    for i in range(A.dim):
        x = A.basis_vector(i)
        ex = E.apply(x)
        for j in range(A.dim):
            y = A.basis_vector(j)
            ey = E.apply(y)
            e_of_bracket = E.apply(A.bracket_basis(i, j))
            if strict and (e_of_bracket != A.bracket(ex, y)
                           or e_of_bracket != A.bracket(x, ey)):
                strict = False
            if abelian and A.bracket_basis(i, j) != [
                    -c for c in A.bracket(ex, ey)]:
                abelian = False
    plus = _subspace_from_columns(eigenspace(E, Scalar.one(A.gaussian)))
    minus = _subspace_from_columns(eigenspace(E, Scalar.of(-1)))
    return StructureReport(
        is_nijenhuis=nijenhuis,
        is_product=nijenhuis,
        is_strict=strict,
        is_abelian=abelian,
        is_paracomplex=nijenhuis and plus.dim == minus.dim,
        plus_eigenspace=plus,
        minus_eigenspace=minus)


def product_from_decomposition(A: LeibnizAlgebra, w_plus: Subspace,
                               w_minus: Subspace) -> Matrix:
    """E = +1 on the first subalgebra, -1 on the second."""
    if not is_subalgebra(A, w_plus) or not is_subalgebra(A, w_minus):
        raise NotSubalgebra("both summands must be subalgebras")
    columns = w_plus.columns() + w_minus.columns()
    if w_plus.dim + w_minus.dim != A.dim:
        raise NotDirectSum("dimensions do not sum to %d" % A.dim)
    U = column_span_matrix(columns)
    if rank(U) != A.dim:
        raise NotDirectSum("summands intersect nontrivially")
    signs = ([Scalar.one(A.gaussian)] * w_plus.dim
             + [Scalar.of(-1)] * w_minus.dim)
    return U @ Matrix.diagonal(signs) @ invert(U)


def enumerate_diagonal_products(A: LeibnizAlgebra):
    """All sign-diagonal involutions that are product structures.

    Patterns are tried in binary-counting order with +1 first (bit unset
    means +1 at that basis index).
    """
    if A.dim > 24:
        raise TooLarge("sign enumeration is capped at dimension 24")
    results = []
    for pattern in range(2 ** A.dim):
        signs = [Scalar.of(-1) if (pattern >> i) & 1 else Scalar.one(A.gaussian)
                 for i in range(A.dim)]
        E = Matrix.diagonal(signs)
        report = classify_product(A, E)
        if report.is_product:
            results.append((E, report))
    return results


def complexify(A: LeibnizAlgebra) -> LeibnizAlgebra:
    """The same structure constants reinterpreted over the Gaussian field."""
    if A.field != RATIONAL:
        raise WrongField("only rational algebras complexify")
    return LeibnizAlgebra.from_constants(A.constants, GAUSSIAN, A.labels)


def complex_integrability(A: LeibnizAlgebra, J: Matrix) -> CheckResult:
    """J[x,y] = [Jx,y] + [x,Jy] + J[Jx,Jy] on all basis pairs."""
    for i in range(A.dim):
        x = A.basis_vector(i)
        jx = J.apply(x)
        for j in range(A.dim):
            y = A.basis_vector(j)
            jy = J.apply(y)
            lhs = J.apply(A.bracket_basis(i, j))
            rhs = _add(_add(A.bracket(jx, y), A.bracket(x, jy)),
                       J.apply(A.bracket(jx, jy)))
            if lhs != rhs:
                return CheckResult(False, "INTEGRABILITY_FAILS", (i, j),
                                   lhs, rhs)
    return OK


def classify_complex(A: LeibnizAlgebra, J: Matrix) -> ComplexReport:
    """Integrability report plus eigenspaces inside the complexification."""
    if A.field != RATIONAL:
        raise WrongField("complex structures live on rational ('real') algebras")
    if not _is_anti_involution(J):
        raise NotAntiInvolution("J^2 != -I")
    integrable = complex_integrability(A, J).ok
    strict = True
    abelian = True
    for i in range(A.dim):
        x = A.basis_vector(i)
        jx = J.apply(x)
        for j in range(A.dim):
            y = A.basis_vector(j)
            jy = J.apply(y)
            j_of_bracket = J.apply(A.bracket_basis(i, j))
            if strict and (j_of_bracket != A.bracket(jx, y)
                           or j_of_bracket != A.bracket(x, jy)):
                strict = False
            if abelian and A.bracket_basis(i, j) != A.bracket(jx, jy):
                abelian = False
    jc = J.promote()
    eigen_i = _subspace_from_columns(eigenspace(jc, Scalar.i()))
    eigen_minus_i = _subspace_from_columns(
        eigenspace(jc, -Scalar.i()))
    return ComplexReport(integrable, strict, abelian, eigen_i, eigen_minus_i)


def phi_map(J: Matrix) -> Matrix:
    """phi(x) = (x - i Jx)/2, a map into the +i eigenspace."""
    if not _is_anti_involution(J):
        raise NotAntiInvolution("J^2 != -I")
    half = Scalar.one() / Scalar.of(2)
    return (Matrix.identity(J.rows, True)
            - J.promote().scale(Scalar.i())).scale(half)


def psi_map(J: Matrix) -> Matrix:
    """psi(x) = (x + i Jx)/2, the conjugate companion of phi."""
    if not _is_anti_involution(J):
        raise NotAntiInvolution("J^2 != -I")
    half = Scalar.one() / Scalar.of(2)
    return (Matrix.identity(J.rows, True)
            + J.promote().scale(Scalar.i())).scale(half)


def bracket_J(A: LeibnizAlgebra, J: Matrix) -> LeibnizAlgebra:
    """The halved difference bracket [x,y]_J = ([x,y] - [Jx,Jy]) / 2."""
    report = classify_complex(A, J)
    if not report.is_complex:
        raise NotComplexStructure("J fails the integrability condition")
    half = Scalar.one() / Scalar.of(2)
    n = A.dim
    tensor = []
    for i in range(n):
        x = A.basis_vector(i)
        jx = J.apply(x)
        plane = []
        for j in range(n):
            y = A.basis_vector(j)
            jy = J.apply(y)
            value = _sub(A.bracket_basis(i, j), A.bracket(jx, jy))
            plane.append(tuple(half * c for c in value))
        tensor.append(tuple(plane))
    return LeibnizAlgebra.from_constants(tensor, A.field)


def check_complex_product_pair(A: LeibnizAlgebra, J: Matrix,
                               E: Matrix) -> CheckResult:
    """Complex structure + product structure + anticommutation."""
    try:
        complex_report = classify_complex(A, J)
    except NotAntiInvolution:
        return CheckResult(False, "NOT_ANTI_INVOLUTION")
    if not complex_report.is_complex:
        return CheckResult(False, "COMPLEX_FAILS")
    try:
        product_report = classify_product(A, E)
    except NotInvolution:
        return CheckResult(False, "NOT_INVOLUTION")
    if not product_report.is_product:
        return CheckResult(False, "PRODUCT_FAILS")
    if not matrices_equal(J @ E, (E @ J).scale(Scalar.of(-1))):
        return CheckResult(False, "ANTICOMMUTATION_FAILS")
    # J swaps the two eigenspaces, so the product structure is paracomplex.
    minus_cols = product_report.minus_eigenspace.columns()
    for v in product_report.plus_eigenspace.basis:
        if not in_span(minus_cols, Matrix.column(J.apply(list(v)))):
            return CheckResult(False, "EIGENSPACE_SWAP_FAILS")
    return OK


def J_from_phi(A: LeibnizAlgebra, E: Matrix, phi: Matrix) -> Matrix:
    """Assemble J from a linear isomorphism between the two eigenspaces.

    ``phi`` is given in the coordinates of the computed eigenspace bases
    (deterministic reduced-echelon order): column j holds the coefficients
    of phi(p_j) in the minus-eigenspace basis.
    """
    report = classify_product(A, E)
    if not report.is_product:
        raise NotInvolution("E is not a product structure")
    plus, minus = report.plus_eigenspace, report.minus_eigenspace
    if plus.dim != minus.dim:
        raise DimensionMismatch("eigenspaces of different dimensions")
    k = plus.dim
    if phi.rows != k or phi.cols != k:
        raise DimensionMismatch("phi must be %d x %d" % (k, k))
    invert(phi)  # raises SingularMatrix when phi is not an isomorphism
    p_cols = plus.columns()
    minus_mat = column_span_matrix(minus.columns()) if k else None
    q_cols = [Matrix.column(minus_mat.apply(phi.col(j))) for j in range(k)]

    columns = p_cols + q_cols
    U = column_span_matrix(columns)
    images = q_cols + [col.scale(Scalar.of(-1)) for col in p_cols]
    J = column_span_matrix(images) @ invert(U)
    # The defining identity for phi, checked on plus-eigenspace basis pairs:
    # phi[x1,x2] = [phi x1, x2] + [x1, phi x2] - phi^{-1}[phi x1, phi x2].
    for a in range(k):
        x1 = list(p_cols[a].col(0))
        for b in range(k):
            x2 = list(p_cols[b].col(0))
            bracket = A.bracket(x1, x2)
            lhs = J.apply(bracket)
            q1, q2 = list(q_cols[a].col(0)), list(q_cols[b].col(0))
            rhs = _add(A.bracket(q1, x2), A.bracket(x1, q2))
            rhs = _add(rhs, J.apply(A.bracket(q1, q2)))
            if lhs != rhs:
                raise PhiIdentityFails("identity fails at pair (%d, %d)"
                                       % (a, b))
    return J


def product_iff_iE(A: LeibnizAlgebra, E: Matrix):
    """J = iE on a Gaussian algebra; both integrability verdicts compared."""
    if A.field != GAUSSIAN:
        raise WrongField("the correspondence lives over the Gaussian field")
    J = E.promote().scale(Scalar.i())
    product_ok = classify_product(A, E).is_product
    complex_ok = (_is_anti_involution(J)
                  and complex_integrability(A, J).ok)
    return J, product_ok == complex_ok, product_ok, complex_ok


def _projections(plus: Subspace, minus: Subspace, n: int):
    """Projection matrices onto each summand along the other."""
    U = column_span_matrix(plus.columns() + minus.columns())
    u_inv = invert(U)
    k = plus.dim
    plus_mat = column_span_matrix(plus.columns()) if k else None
    minus_mat = column_span_matrix(minus.columns()) if minus.dim else None
    sel_plus = Matrix.from_rows([list(u_inv.row(i)) for i in range(k)])
    sel_minus = Matrix.from_rows([list(u_inv.row(i)) for i in range(k, n)])
    pi_plus = plus_mat @ sel_plus if k else Matrix.zero(n, n)
    pi_minus = minus_mat @ sel_minus if minus.dim else Matrix.zero(n, n)
    return pi_plus, pi_minus, sel_plus, sel_minus


def induced_dendriform_on_eigenspaces(A: LeibnizAlgebra, J: Matrix,
                                      E: Matrix):
    """Dendriform structures on both eigenspaces of a complex product pair.

    x1 < x2 = -proj J[x1, J x2] and x1 > x2 = -proj J[J x1, x2], expressed
    in the eigenspace coordinates.
    """
    check = check_complex_product_pair(A, J, E)
    if not check.ok:
        raise NotComplexProduct("pair fails: %s" % check.reason)
    report = classify_product(A, E)
    plus, minus = report.plus_eigenspace, report.minus_eigenspace
    n = A.dim
    pi_plus, pi_minus, sel_plus, sel_minus = _projections(plus, minus, n)

    def build(space: Subspace, pi: Matrix, sel: Matrix) -> DendriformAlgebra:
        k = space.dim
        left = [[None] * k for _ in range(k)]
        right = [[None] * k for _ in range(k)]
        for a in range(k):
            x1 = list(space.basis[a])
            jx1 = J.apply(x1)
            for b in range(k):
                x2 = list(space.basis[b])
                jx2 = J.apply(x2)
                lv = [-c for c in J.apply(A.bracket(x1, jx2))]
                rv = [-c for c in J.apply(A.bracket(jx1, x2))]
                left[a][b] = tuple(sel.apply(pi.apply(lv)))
                right[a][b] = tuple(sel.apply(pi.apply(rv)))
        return DendriformAlgebra.from_constants(left, right, A.field)

    return build(plus, pi_plus, sel_plus), build(minus, pi_minus, sel_minus)
