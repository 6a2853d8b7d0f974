"""First-order deformation theory of the family along its three parameters.

The cup-product pairings between the graded basis of 1-forms and the
derivative forms of a tangent direction reduce to residues at the moving
branch points.  All pairing values are exact elements of Q(w) measured in
units of the fixed transcendental 6*pi*i, computed two independent ways:

* a closed form: the (0,k) and (k,0) entries are sum_j a_j u_j**(k-1)/Q'(u_j)
  and every other entry vanishes;
* a residue oracle that expands both forms in the local coordinate y at the
  branch point, antidifferentiates the principal part, and reads off the
  residue of the product.

Everything downstream (kernels, the conic criterion, base loci, the support
test, the certificate classifier) consumes the exact matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .curve import (
    OMEGA,
    BranchPoint,
    Chart,
    CurveParams,
    Differential,
    Divisor,
    FiberPoint,
    FinitePoint,
    InfinityPoint,
    KDifferential,
    branch_chart,
    chart_at,
    divisor_min,
    divisor_of,
    fiber_frame,
    kdiff_fiber_components,
    kdiff_series,
    trigonal_fiber,
)
from .errors import DegenerateInput, StructuralError, ZeroTangent
from .linalg import Matrix
from .polynomials import RationalFunction, UniPoly
from .scalars import INFINITY, Scalar
from .series import DEFAULT_ORDER, LocalSeries, series_of_poly

# Sign fixed once so that the oracle's (0,1) entry for the first coordinate
# direction equals +1/Q'(u_1) in 6*pi*i units, matching the closed form;
# the raw Stokes bookkeeping produces the opposite sign.
ORACLE_SIGN = -1


@dataclass(frozen=True)
class TangentVector:
    """Direction a1*d/du1 + a2*d/du2 + a3*d/du3 in the base."""

    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Scalar.of(c) for c in self.a))
        if len(self.a) != 3:
            raise DegenerateInput("a tangent vector has three coordinates")

    def is_zero(self) -> bool:
        return not any(self.a)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.a) + ")"


@dataclass(frozen=True)
class PairingMatrix:
    """4x4 matrix of 6*pi*i coefficients of the wedge pairings between the
    basis forms and the derivative forms of one tangent direction; rows and
    columns follow the ordered basis (w0, w1, w2, w3)."""

    entries: tuple

    def entry(self, l: int, k: int) -> Scalar:
        return self.entries[l][k]

    def as_matrix(self) -> Matrix:
        return Matrix(self.entries)


@dataclass(frozen=True)
class ConicReport:
    """The image covector of a tangent direction and its evaluation against
    the rank-3 quadric X*Z - Y**2 whose vanishing detects base points."""

    covector: tuple
    value: Scalar
    on_conic: bool


class CeresaVariant(enum.Enum):
    NOT_ON_CONIC = "NotOnConic"
    ON_CONIC_NOT_SUPPORTED = "OnConicNotSupported"
    ON_CONIC_SUPPORTED = "OnConicSupported"


@dataclass(frozen=True)
class CeresaCertificate:
    """Outcome of the three-way vanishing test for the cycle-class invariant
    along a tangent direction.

    NOT_ON_CONIC and ON_CONIC_NOT_SUPPORTED certify the tested invariant
    components nonzero; ON_CONIC_SUPPORTED records that every tested
    component vanishes (full vanishing of the invariant is not asserted)."""

    variant: CeresaVariant
    conic: ConicReport
    base_locus: Divisor
    kernel_basis: tuple
    supported: bool | None
    omega2_dim: int
    subspace_dim: int | None


# ---------------------------------------------------------------------------
# The moment matrix and covectors
# ---------------------------------------------------------------------------


def moment_matrix(params: CurveParams) -> Matrix:
    """Rows (1, u_j, u_j**2) / Q'(u_j); invertible everywhere on the base."""
    rows = []
    for uj in params.u:
        inv = params.qprime_at(uj).inverse()
        rows.append((inv, uj * inv, uj * uj * inv))
    m = Matrix.from_rows(rows)
    if not m.det():
        raise StructuralError("moment matrix degenerated; parameters escape the base")
    return m


def pairing_covector(params: CurveParams, xi: TangentVector) -> tuple:
    """c = a . A, the only data of the pairing matrix."""
    return moment_matrix(params).transpose().apply(xi.a)


def pairing_matrix(params: CurveParams, xi: TangentVector) -> PairingMatrix:
    c = pairing_covector(params, xi)
    zero = Scalar.zero()
    first_row = (zero,) + tuple(c)
    rows = [first_row]
    for k in range(3):
        rows.append((c[k], zero, zero, zero))
    return PairingMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# Residue oracle
# ---------------------------------------------------------------------------


from functools import lru_cache


@lru_cache(maxsize=256)
def _branch_form_data(params: CurveParams, x0: Scalar, order: int) -> tuple:
    """Shared expansion data at a branch point: the coefficient series S_l
    with w_l = S_l(y) dy for l = 0..3, and the inverse of (x - x0)."""
    chart = branch_chart(params, x0, order)
    trunc = chart.x_series.truncation
    q_of_x = series_of_poly(params.q_poly, chart.x_series)
    q_inv = q_of_x.inverse()
    y = chart.y_series
    base = q_inv * chart.dx_series
    forms = [base * y * y]  # w0 = y**2 dx / Q
    x_power = LocalSeries.constant(Scalar.one(), trunc)
    for _ in range(3):  # w_l = x**(l-1) y dx / Q
        forms.append(base * y * x_power)
        x_power = x_power * chart.x_series
    x_minus = chart.x_series - LocalSeries.constant(x0, trunc)
    return tuple(forms), x_minus.inverse()


def residue_pairing(
    params: CurveParams, j: int, l: int, k: int, order: int = DEFAULT_ORDER
) -> Scalar:
    """Oracle for the pairing of w_l against the u_j-derivative of w_k, in
    6*pi*i units: expand both at the branch point over u_j, antidifferentiate
    the principal part of the derivative form, and take the residue of the
    product; exact and independent of the closed form."""
    if j not in (1, 2, 3):
        raise DegenerateInput("j indexes one of the three moving parameters")
    if order < DEFAULT_ORDER:
        order = DEFAULT_ORDER
    x0 = params.u[j - 1]
    forms, x_minus_inv = _branch_form_data(params, x0, order)
    s_series = forms[l]
    # (d/du_j) w_k = m/(3 (x - u_j)) * w_k with m = 1 for k = 0, else 2
    m = 1 if k == 0 else 2
    p_series = forms[k] * x_minus_inv.scale(Scalar.of(m) / 3)
    if p_series.coefficient(-1):
        raise StructuralError("derivative form has a dy/y term; cannot antidifferentiate")
    principal = {
        n: c for n, c in p_series.coefficients.items() if n <= -2
    }
    anti = LocalSeries(
        {n + 1: c / (n + 1) for n, c in principal.items()}, p_series.truncation + 1
    )
    product = s_series * anti
    residue = product.coefficient(-1)
    return Scalar.of(ORACLE_SIGN) * residue / 3


# ---------------------------------------------------------------------------
# Rank, kernel, conic
# ---------------------------------------------------------------------------


def ks_rank(params: CurveParams, xi: TangentVector) -> int:
    """Rank of the first-order deformation as a map from holomorphic forms
    to antiholomorphic classes: 0 only for the zero direction, else 2."""
    if xi.is_zero():
        return 0
    return pairing_matrix(params, xi).as_matrix().rank()


def kernel_W(params: CurveParams, xi: TangentVector) -> tuple:
    """Canonical basis of the annihilated 2-dimensional space of 1-forms
    inside the span of (w1, w2, w3)."""
    if xi.is_zero():
        raise ZeroTangent("kernel of the zero direction is everything")
    c = pairing_covector(params, xi)
    basis = Matrix.from_rows([c]).kernel_basis()
    if len(basis) != 2:
        raise StructuralError("annihilator is not 2-dimensional")
    return tuple(Differential(Scalar.zero(), b) for b in basis)


def conic_condition(params: CurveParams, xi: TangentVector) -> ConicReport:
    """Whether the covector of the direction lies on the quadric
    X*Z - Y**2 = 0, the exact condition for a nonempty base locus."""
    if xi.is_zero():
        raise ZeroTangent("conic condition needs a nonzero direction")
    c = pairing_covector(params, xi)
    value = c[0] * c[2] - c[1] * c[1]
    return ConicReport(covector=tuple(c), value=value, on_conic=not value)


def cone_directions(params: CurveParams, t) -> TangentVector:
    """The unique direction (up to scale) whose covector is the conic point
    (1 : t : t**2), or (0 : 0 : 1) at t = infinity."""
    inv = moment_matrix(params).transpose().inverse()
    if t is INFINITY:
        target = (Scalar.zero(), Scalar.zero(), Scalar.one())
    else:
        t = Scalar.of(t)
        target = (Scalar.one(), t, t * t)
    return TangentVector(inv.apply(target))


def base_locus(params: CurveParams, xi: TangentVector) -> Divisor:
    """Common zero divisor of the annihilated space: pointwise minimum of the
    divisors of a basis, verified basis-independent by recomputation."""
    if xi.is_zero():
        raise ZeroTangent("base locus needs a nonzero direction")
    sigma1, sigma2 = kernel_W(params, xi)
    locus = divisor_min(divisor_of(params, sigma1), divisor_of(params, sigma2))
    alt = divisor_min(
        divisor_of(params, sigma1 + sigma2),
        divisor_of(params, sigma1 - sigma2),
    )
    if locus != alt:
        raise StructuralError("base locus depends on the kernel basis; bug")
    return locus


# ---------------------------------------------------------------------------
# The 9-dimensional space of quadratic differentials
# ---------------------------------------------------------------------------

# Coordinates on holomorphic quadratic differentials: (A(x), b, C(x)) with
#   q = (A(x)*Q + b*Q*y + C(x)*y**2) (dx)**2 / Q**2,
# deg A <= 2, deg C <= 4: 3 + 1 + 5 = 9 coordinates, ordered
# (A0, A1, A2, b, C0, C1, C2, C3, C4).
OMEGA2_DIM = 9

_PRODUCT_PAIRS = ((0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))


def product_pairs() -> tuple:
    """The ten symmetric index pairs (i <= j) of basis 1-form products."""
    return _PRODUCT_PAIRS


def product_coordinates(i: int, j: int) -> tuple:
    """Coordinates of w_i * w_j in the 9-dimensional model."""
    coords = [Scalar.zero()] * OMEGA2_DIM
    if i > j:
        i, j = j, i
    if i == 0 and j == 0:
        coords[3] = Scalar.one()
    elif i == 0:
        coords[j - 1] = Scalar.one()
    else:
        coords[4 + (i + j - 2)] = Scalar.one()
    return tuple(coords)


def coordinate_kdifferential(params: CurveParams, coords) -> KDifferential:
    """Realize a coordinate vector as an actual quadratic differential."""
    coords = tuple(Scalar.of(c) for c in coords)
    if len(coords) != OMEGA2_DIM:
        raise DegenerateInput("nine coordinates expected")
    q = RationalFunction.of(params.q_poly)
    a_poly = RationalFunction.of(UniPoly(coords[0:3]))
    b = RationalFunction.of(UniPoly((coords[3],)))
    c_poly = RationalFunction.of(UniPoly(coords[4:9]))
    return KDifferential(params, 2, a_poly / q, b / q, c_poly / (q * q))


def kdifferential_coordinates(params: CurveParams, q: KDifferential) -> tuple:
    """Coordinates of a holomorphic quadratic differential; raises when the
    section is not holomorphic (not representable in the 9-dim model)."""
    if q.k != 2:
        raise DegenerateInput("expected a quadratic differential")
    qq = RationalFunction.of(params.q_poly)
    a_part = q.f * qq
    b_part = q.g * qq
    c_part = q.h * qq * qq
    for part, max_deg, label in ((a_part, 2, "A"), (b_part, 0, "b"), (c_part, 4, "C")):
        if part.denominator.degree != 0 or part.numerator.degree > max_deg:
            raise DegenerateInput(f"section is not holomorphic ({label}-component leaves the model)")
    coords = [Scalar.zero()] * OMEGA2_DIM
    for k in range(3):
        coords[k] = a_part.numerator.coefficient(k) if a_part else Scalar.zero()
    coords[3] = b_part.numerator.coefficient(0) if b_part else Scalar.zero()
    for k in range(5):
        coords[4 + k] = c_part.numerator.coefficient(k) if c_part else Scalar.zero()
    return tuple(coords)


def product_differential(params: CurveParams, i: int, j: int) -> KDifferential:
    from .curve import product_of_differentials

    return product_of_differentials(params, OMEGA[i], OMEGA[j])


def _basis_kdifferentials(params: CurveParams) -> list[KDifferential]:
    basis = []
    for idx in range(OMEGA2_DIM):
        coords = [Scalar.zero()] * OMEGA2_DIM
        coords[idx] = Scalar.one()
        basis.append(coordinate_kdifferential(params, coords))
    return basis


def omega2_vanishing_conditions(params: CurveParams, divisor: Divisor, order: int = DEFAULT_ORDER) -> Matrix:
    """Linear conditions on the 9 coordinates cutting out the quadratic
    differentials vanishing to the divisor's multiplicities."""
    if not divisor.is_effective():
        raise DegenerateInput("support conditions need an effective divisor")
    basis = _basis_kdifferentials(params)
    rows: list[tuple] = []
    for point, mult in divisor.items_sorted():
        if isinstance(point, (BranchPoint, InfinityPoint, FinitePoint)):
            chart = chart_at(params, point, max(order, mult + 8))
            series_list = [kdiff_series(b, chart) for b in basis]
            bound = mult - 2 * chart.dx_order
            floor = min(
                (s.valuation() for s in series_list if s.valuation() is not None),
                default=bound,
            )
            for exponent in range(floor, bound):
                row = tuple(s.coefficient(exponent) for s in series_list)
                if any(row):
                    rows.append(row)
        elif isinstance(point, FiberPoint):
            frame = fiber_frame(params, point.x, max(order, mult + 8))
            components = [kdiff_fiber_components(b, frame) for b in basis]
            for comp_index in range(3):
                for exponent in range(mult):
                    row = tuple(c[comp_index].coefficient(exponent) for c in components)
                    if any(row):
                        rows.append(row)
        else:
            raise DegenerateInput(
                f"support conditions over a collective locus entry ({point.kind}) are not supported"
            )
    if not rows:
        rows = []
    return Matrix.from_rows(rows) if rows else Matrix(())


def omega2_subspace(params: CurveParams, divisor: Divisor, order: int = DEFAULT_ORDER) -> list[tuple]:
    """Basis of the subspace of quadratic differentials vanishing on the
    divisor, in 9-dim coordinates."""
    conditions = omega2_vanishing_conditions(params, divisor, order)
    if conditions.nrows == 0:
        return [tuple(row) for row in Matrix.identity(OMEGA2_DIM).rows]
    return conditions.kernel_basis()


def functional_covector(params: CurveParams, xi: TangentVector) -> tuple:
    """The tangent direction as a linear functional on the 9 coordinates:
    it sees only the A-component, through the pairing covector."""
    c = pairing_covector(params, xi)
    zero = Scalar.zero()
    return tuple(c) + (zero,) * 6


def xi_functional(params: CurveParams, xi: TangentVector, q: KDifferential) -> Scalar:
    """Evaluate the direction against a holomorphic quadratic differential,
    in 6*pi*i units; by construction the symmetric-product relation
    w2**2 - w1*w3 is annihilated, so the value is representation-free."""
    coords = kdifferential_coordinates(params, q)
    phi = functional_covector(params, xi)
    acc = Scalar.zero()
    for a, b in zip(phi, coords):
        acc = acc + a * b
    return acc


def support_test(params: CurveParams, xi: TangentVector, divisor: Divisor, order: int = DEFAULT_ORDER) -> tuple[bool, int]:
    """(supported, dim of the vanishing subspace): supported means the
    direction annihilates every quadratic differential vanishing on the
    divisor."""
    if xi.is_zero():
        raise ZeroTangent("support test needs a nonzero direction")
    if not divisor.is_effective():
        raise DegenerateInput("support test needs an effective divisor")
    subspace = omega2_subspace(params, divisor, order)
    phi = functional_covector(params, xi)
    supported = True
    for vector in subspace:
        acc = Scalar.zero()
        for a, b in zip(phi, vector):
            acc = acc + a * b
        if acc:
            supported = False
            break
    return supported, len(subspace)


def supported_on(params: CurveParams, xi: TangentVector, divisor: Divisor, order: int = DEFAULT_ORDER) -> bool:
    return support_test(params, xi, divisor, order)[0]


# ---------------------------------------------------------------------------
# Classifier
# ---------------------------------------------------------------------------


def delta_nu_c_test(params: CurveParams, xi: TangentVector, order: int = DEFAULT_ORDER) -> CeresaCertificate:
    """Three-way classification of a tangent direction: off the conic (base
    locus empty, tested invariant components certified nonzero), on the conic
    but not supported on the base locus (also certified nonzero), or on the
    conic and supported (every tested component vanishes)."""
    if xi.is_zero():
        raise ZeroTangent("classification needs a nonzero direction")
    conic = conic_condition(params, xi)
    kernel = kernel_W(params, xi)
    locus = base_locus(params, xi)
    if conic.on_conic != (not locus.is_zero()):
        raise StructuralError("conic criterion and base locus disagree; bug")
    if not conic.on_conic:
        return CeresaCertificate(
            variant=CeresaVariant.NOT_ON_CONIC,
            conic=conic,
            base_locus=locus,
            kernel_basis=kernel,
            supported=None,
            omega2_dim=OMEGA2_DIM,
            subspace_dim=None,
        )
    supported, dim = support_test(params, xi, locus, order)
    variant = CeresaVariant.ON_CONIC_SUPPORTED if supported else CeresaVariant.ON_CONIC_NOT_SUPPORTED
    return CeresaCertificate(
        variant=variant,
        conic=conic,
        base_locus=locus,
        kernel_basis=kernel,
        supported=supported,
        omega2_dim=OMEGA2_DIM,
        subspace_dim=dim,
    )
