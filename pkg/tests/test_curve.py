import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from trigonal4.curve import (
    OMEGA,
    BranchPoint,
    Differential,
    Divisor,
    FiberPoint,
    FinitePoint,
    InfinityPoint,
    KDifferential,
    branch_inversion,
    canonical_map,
    divisor_min,
    divisor_of,
    divisor_of_function,
    finite_point,
    normalize_projective,
    trigonal_fiber,
    validate_params,
    vanishing_order,
)
from trigonal4.errors import DegenerateInput, InvalidParameters
from trigonal4.polynomials import RationalFunction, UniPoly
from trigonal4.scalars import INFINITY, Scalar
from trigonal4.series import series_of_poly, LocalSeries

from conftest import scalar_strategy


@pytest.fixture(scope="module")
def u023():
    return validate_params(0, 2, 3)


@pytest.fixture(scope="module")
def u248():
    # Q(0) = 64 is a perfect cube here, so (0, 4) is an exact curve point
    return validate_params(2, 4, 8)


# -- parameter validation ----------------------------------------------------


def test_validate_params_accepts_base_point(u023):
    assert u023.q_poly.degree == 6
    assert len(u023.branch_x) == 6


def test_validate_params_rejects_unit_cube():
    with pytest.raises(InvalidParameters, match="u1\\^3 = 1"):
        validate_params(1, 2, 3)
    with pytest.raises(InvalidParameters, match="u2\\^3 = 1"):
        validate_params(0, Scalar.zeta(), 3)


def test_validate_params_rejects_collision():
    with pytest.raises(InvalidParameters, match="u1 = u2"):
        validate_params(2, 2, 3)


# -- local expansions ----------------------------------------------------------


def test_branch_inversion_example(u023):
    # x(y) at the branch over 0 starts 0 - y**3/6 (Q'(0) = -6)
    d = branch_inversion(u023, Scalar.zero(), 12)
    assert d.coefficient(3) == Scalar.of(-1) / 6
    assert all(n % 3 == 0 for n in d.known_exponents())


@given(scalar_strategy(bound=4, max_denominator=2))
@settings(max_examples=12)
def test_branch_inversion_inverts_q(shift):
    try:
        params = validate_params(shift, shift + 5, shift - 7)
    except InvalidParameters:
        return
    x0 = params.u[0]
    d = branch_inversion(params, x0, 9)
    shifted = params.q_poly.taylor_shift(x0)
    composed = series_of_poly(shifted, d)
    # Q(x0 + D(y)) = y**3 through the truncation
    assert composed.coefficient(3) == Scalar.one()
    for n in composed.known_exponents():
        if n != 3:
            assert not composed.coefficient(n)


def test_local_series_of_constant(u023):
    d = branch_inversion(u023, Scalar.zero(), 12)
    # a constant function expands to itself
    assert not d.coefficient(0)


# -- vanishing orders ---------------------------------------------------------


def test_order_of_omega0_at_branch(u023):
    q = KDifferential.of_differential(u023, OMEGA[0])
    assert vanishing_order(u023, q, BranchPoint(Scalar.zero())) == 1
    assert vanishing_order(u023, q, BranchPoint(Scalar.of(2))) == 1


def test_order_of_omega1_squared_at_infinity(u023):
    w1 = KDifferential.of_differential(u023, OMEGA[1])
    for sheet in range(3):
        assert vanishing_order(u023, w1 * w1, InfinityPoint(sheet)) == 4


def test_order_of_omega2_at_finite_point(u248):
    q = KDifferential.of_differential(u248, OMEGA[2])
    p = finite_point(u248, 0, 4)
    assert vanishing_order(u248, q, p) == 1


def test_order_of_zero_rejected(u023):
    zero = KDifferential.of_differential(u023, Differential.from_coefficients((0, 0, 0, 0)))
    with pytest.raises(DegenerateInput):
        vanishing_order(u023, zero, BranchPoint(Scalar.zero()))


# -- divisors -------------------------------------------------------------------


def test_divisor_of_omega0_is_branch_divisor(u023):
    div = divisor_of(u023, OMEGA[0])
    assert div == Divisor.of(*((BranchPoint(b), 1) for b in u023.branch_x))
    assert div.degree == 6


def test_divisor_of_omega1_is_double_infinity(u023):
    div = divisor_of(u023, OMEGA[1])
    assert div == Divisor.of(*((InfinityPoint(s), 2) for s in range(3)))


def test_divisor_of_omega2_branch_case(u023):
    div = divisor_of(u023, OMEGA[2])
    expected = Divisor.of(
        (BranchPoint(Scalar.zero()), 3),
        (InfinityPoint(0), 1),
        (InfinityPoint(1), 1),
        (InfinityPoint(2), 1),
    )
    assert div == expected


@given(st.lists(scalar_strategy(bound=8, max_denominator=3), min_size=4, max_size=4))
@settings(max_examples=25)
def test_divisor_degree_always_six(u023, coeffs):
    d = Differential.from_coefficients(coeffs)
    if d.is_zero():
        return
    div = divisor_of(u023, d)
    assert div.degree == 6
    assert div.is_effective()


def test_trigonal_fiber_cases(u023):
    assert trigonal_fiber(u023, Scalar.zero()) == Divisor.of((BranchPoint(Scalar.zero()), 3))
    assert trigonal_fiber(u023, INFINITY).degree == 3
    fib = trigonal_fiber(u023, Scalar.of(5))
    assert fib.degree == 3
    assert u023.q_at(Scalar.of(5)) == Scalar.of(3720)


def test_kernel_combination_contains_fiber(u023):
    # w2 - u_j*w1 and w3 - u_j*w2 both vanish on the fiber over u_j
    for j in range(3):
        uj = u023.u[j]
        fib = trigonal_fiber(u023, uj)
        d1 = OMEGA[2] - OMEGA[1].scale(uj)
        d2 = OMEGA[3] - OMEGA[2].scale(uj)
        assert divisor_of(u023, d1) >= fib
        assert divisor_of(u023, d2) >= fib


def test_divisor_of_function_witness(u023):
    f = RationalFunction(UniPoly.from_scalars((-5, 1)), UniPoly.from_scalars((-6, 1)))
    div = divisor_of_function(u023, f)
    assert div == trigonal_fiber(u023, Scalar.of(5)) - trigonal_fiber(u023, Scalar.of(6))
    # x alone: 3*Branch(0) - infinity fiber at u=(0,2,3)
    div_x = divisor_of_function(u023, RationalFunction.of(UniPoly.from_scalars((0, 1))))
    assert div_x == trigonal_fiber(u023, Scalar.zero()) - trigonal_fiber(u023, INFINITY)


def test_divisor_min_branch_fiber(u023):
    a = divisor_of(u023, OMEGA[2])                     # 3 Branch(0) + infinity fiber
    b = divisor_of(u023, OMEGA[3])                     # 6 Branch(0)
    m = divisor_min(a, b)
    assert m == Divisor.of((BranchPoint(Scalar.zero()), 3))


# -- canonical map -----------------------------------------------------------------


def test_canonical_map_examples(u023, u248):
    z = canonical_map(u248, finite_point(u248, 0, 4))
    assert z == normalize_projective((Scalar.of(4), Scalar.one(), Scalar.zero(), Scalar.zero()))
    z = canonical_map(u023, BranchPoint(Scalar.of(3)))
    assert z == normalize_projective((Scalar.zero(), Scalar.one(), Scalar.of(3), Scalar.of(9)))
    for s in range(3):
        z = canonical_map(u023, InfinityPoint(s))
        assert z == normalize_projective((Scalar.zeta_power(s), Scalar.zero(), Scalar.zero(), Scalar.one()))


def test_canonical_map_lands_on_quadric(u023, u248):
    pts = [BranchPoint(b) for b in u023.branch_x] + [InfinityPoint(s) for s in range(3)]
    for p in pts:
        z = canonical_map(u023, p)
        assert z[2] * z[2] - z[1] * z[3] == Scalar.zero()
    z = canonical_map(u248, finite_point(u248, 0, 4))
    assert z[2] * z[2] - z[1] * z[3] == Scalar.zero()


# -- local expansion of rational functions ------------------------------------


def test_local_series_spec_examples(u023):
    from trigonal4.curve import local_series

    x = UniPoly.from_scalars((0, 1))
    s = local_series(u023, x, Scalar.zero(), 12)
    assert s.coefficient(0) == Scalar.zero()
    assert s.coefficient(3) == Scalar.of(-1) / 6
    assert all(n % 3 == 0 for n in s.known_exponents())

    const = local_series(u023, UniPoly.from_scalars((1,)), Scalar.zero(), 12)
    assert const.coefficient(0) == Scalar.one()
    assert const.known_exponents() == [0]

    shifted = local_series(u023, UniPoly.from_scalars((-2, 1)), Scalar.of(2), 6)
    qprime = u023.qprime_at(Scalar.of(2))
    assert shifted.coefficient(3) == qprime.inverse()
    assert shifted.coefficient(0) == Scalar.zero()


def test_local_series_multiplicative(u023):
    from trigonal4.curve import local_series
    from trigonal4.polynomials import RationalFunction

    f = RationalFunction(UniPoly.from_scalars((1, 2)), UniPoly.from_scalars((5, 0, 1)))
    g = RationalFunction(UniPoly.from_scalars((-3, 0, 1)), UniPoly.from_scalars((7, 1)))
    x0 = Scalar.of(3)
    sf = local_series(u023, f, x0, 12)
    sg = local_series(u023, g, x0, 12)
    sfg = local_series(u023, f * g, x0, 12)
    product = sf * sg
    for n in range(min(product.truncation, sfg.truncation)):
        assert product.coefficient(n) == sfg.coefficient(n)


def test_local_series_rejects_nonbranch_center(u023):
    from trigonal4.curve import local_series

    with pytest.raises(DegenerateInput):
        local_series(u023, UniPoly.from_scalars((0, 1)), Scalar.of(5), 12)


def test_divisor_contains_fiber_of_root(u023):
    # a 1-form with coefficient polynomial having root r vanishes on the
    # whole fiber over r
    r = Scalar.of(7)
    poly_coeffs = (r * Scalar.of(-3), Scalar.of(3) - r, Scalar.one())  # (x - r)(x + 3)
    d = Differential(Scalar.zero(), poly_coeffs)
    assert divisor_of(u023, d) >= trigonal_fiber(u023, r)
