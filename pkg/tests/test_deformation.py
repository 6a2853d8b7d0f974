import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from trigonal4.curve import (
    OMEGA,
    BranchPoint,
    Divisor,
    InfinityPoint,
    trigonal_fiber,
    validate_params,
)
from trigonal4.deformation import (
    CeresaVariant,
    TangentVector,
    base_locus,
    cone_directions,
    conic_condition,
    delta_nu_c_test,
    functional_covector,
    kernel_W,
    ks_rank,
    moment_matrix,
    pairing_covector,
    pairing_matrix,
    product_differential,
    residue_pairing,
    support_test,
    supported_on,
    xi_functional,
)
from trigonal4.errors import ZeroTangent
from trigonal4.linalg import Matrix, same_subspace
from trigonal4.scalars import INFINITY, Scalar

from conftest import scalar_strategy


@pytest.fixture(scope="module")
def u023():
    return validate_params(0, 2, 3)


def tangent_strategy():
    return st.lists(scalar_strategy(bound=7, max_denominator=3), min_size=3, max_size=3).map(
        TangentVector
    )


# -- pairing matrix and oracle -------------------------------------------------


def test_pairing_entries_examples(u023):
    m = pairing_matrix(u023, TangentVector((1, 0, 0)))
    assert m.entry(0, 1) == Scalar.of(-1) / 6  # 1/Q'(0)
    assert m.entry(0, 2) == Scalar.zero()
    assert m.entry(1, 3) == Scalar.zero()
    assert m.entry(0, 0) == Scalar.zero()
    # symmetry of the mixed entries
    for k in range(1, 4):
        assert m.entry(0, k) == m.entry(k, 0)


def test_residue_oracle_matches_closed_form_all_entries(u023):
    for j in (1, 2, 3):
        direction = [0, 0, 0]
        direction[j - 1] = 1
        m = pairing_matrix(u023, TangentVector(tuple(direction)))
        for l in range(4):
            for k in range(4):
                assert residue_pairing(u023, j, l, k) == m.entry(l, k), (j, l, k)


def test_residue_oracle_on_zeta_parameters():
    params = validate_params(Scalar(1, 1), 2, Scalar(3, 1))
    for j in (1, 2, 3):
        value = residue_pairing(params, j, 0, 1)
        assert value * params.qprime_at(params.u[j - 1]) == Scalar.one()


def test_oracle_first_entry_normalization(u023):
    # the (0,1) entry times Q'(u_j) is exactly +1 for every j
    for j in (1, 2, 3):
        v = residue_pairing(u023, j, 0, 1)
        assert v * u023.qprime_at(u023.u[j - 1]) == Scalar.one()


# -- rank and kernel -----------------------------------------------------------


def test_ks_rank(u023):
    assert ks_rank(u023, TangentVector((0, 0, 0))) == 0
    assert ks_rank(u023, TangentVector((1, 0, 0))) == 2
    assert ks_rank(u023, TangentVector((1, 1, 1))) == 2


@given(tangent_strategy())
@settings(max_examples=20)
def test_ks_rank_two_for_nonzero(u023, xi):
    if xi.is_zero():
        assert ks_rank(u023, xi) == 0
    else:
        assert ks_rank(u023, xi) == 2


def test_kernel_W_for_coordinate_directions(u023):
    for j in range(3):
        direction = [0, 0, 0]
        direction[j] = 1
        basis = kernel_W(u023, TangentVector(tuple(direction)))
        uj = u023.u[j]
        expected = [
            (-uj, Scalar.one(), Scalar.zero()),
            (Scalar.zero(), -uj, Scalar.one()),
        ]
        assert same_subspace([w.b for w in basis], expected)


@given(tangent_strategy().filter(lambda t: not t.is_zero()))
@settings(max_examples=20)
def test_kernel_matches_pairing_matrix_nullspace(u023, xi):
    basis = kernel_W(u023, xi)
    matrix_kernel = pairing_matrix(u023, xi).as_matrix().kernel_basis()
    # the full 4x4 null space has b0 = 0 automatically and equals W
    lifted = [(Scalar.zero(),) + w.b for w in basis]
    assert same_subspace(lifted, matrix_kernel)


def test_kernel_of_zero_rejected(u023):
    with pytest.raises(ZeroTangent):
        kernel_W(u023, TangentVector((0, 0, 0)))


# -- conic and base locus --------------------------------------------------------


def test_coordinate_directions_on_conic(u023):
    for j in range(3):
        direction = [0, 0, 0]
        direction[j] = 1
        report = conic_condition(u023, TangentVector(tuple(direction)))
        assert report.on_conic
        # covector proportional to (1, u_j, u_j**2)
        c = report.covector
        uj = u023.u[j]
        assert c[1] == c[0] * uj and c[2] == c[0] * uj * uj


def test_base_locus_examples(u023):
    assert base_locus(u023, TangentVector((1, 0, 0))) == Divisor.of((BranchPoint(Scalar.zero()), 3))
    assert base_locus(u023, TangentVector((0, 1, 0))) == Divisor.of((BranchPoint(Scalar.of(2)), 3))
    assert base_locus(u023, TangentVector((1, 1, 1))).is_zero()


@given(tangent_strategy().filter(lambda t: not t.is_zero()))
@settings(max_examples=25)
def test_conic_iff_base_locus(u023, xi):
    report = conic_condition(u023, xi)
    locus = base_locus(u023, xi)
    assert report.on_conic == (not locus.is_zero())


@given(st.one_of(scalar_strategy(bound=9, max_denominator=3), st.just(INFINITY)))
@settings(max_examples=25)
def test_cone_directions_postcondition(u023, t):
    xi = cone_directions(u023, t)
    assert conic_condition(u023, xi).on_conic
    assert base_locus(u023, xi) == trigonal_fiber(u023, t)


def test_cone_direction_at_parameter_is_coordinate(u023):
    xi = cone_directions(u023, Scalar.zero())  # t = u1 = 0
    assert xi.a[1] == Scalar.zero() and xi.a[2] == Scalar.zero() and xi.a[0]


def test_cone_direction_at_infinity_kernel(u023):
    xi = cone_directions(u023, INFINITY)
    basis = kernel_W(u023, xi)
    expected = [
        (Scalar.one(), Scalar.zero(), Scalar.zero()),
        (Scalar.zero(), Scalar.one(), Scalar.zero()),
    ]
    assert same_subspace([w.b for w in basis], expected)


# -- functional and support ---------------------------------------------------------


def test_xi_functional_examples(u023):
    xi = TangentVector((1, 0, 0))
    assert xi_functional(u023, xi, product_differential(u023, 0, 1)) == Scalar.of(-1) / 6
    assert xi_functional(u023, xi, product_differential(u023, 1, 1)) == Scalar.zero()
    rel = product_differential(u023, 2, 2) + product_differential(u023, 1, 3).scale(-1)
    assert rel.is_zero()  # the quadric relation holds identically in the model


@given(tangent_strategy().filter(lambda t: not t.is_zero()))
@settings(max_examples=15)
def test_relation_annihilated(u023, xi):
    rel = product_differential(u023, 2, 2) + product_differential(u023, 1, 3).scale(-1)
    assert xi_functional(u023, xi, rel) == Scalar.zero()


def test_support_examples(u023):
    xi = TangentVector((1, 0, 0))
    d3 = Divisor.of((BranchPoint(Scalar.zero()), 3))
    d1 = Divisor.of((BranchPoint(Scalar.zero()), 1))
    ok3, dim3 = support_test(u023, xi, d3)
    ok1, dim1 = support_test(u023, xi, d1)
    assert ok3 is True and dim3 == 6
    assert ok1 is False and dim1 == 8
    assert supported_on(u023, xi, Divisor.zero()) is False


def test_support_monotone_in_divisor(u023):
    # D' <= D makes the subspace larger, so supported(D') implies supported(D)
    xi = TangentVector((1, 0, 0))
    d3 = Divisor.of((BranchPoint(Scalar.zero()), 3))
    d4 = d3 + Divisor.of((InfinityPoint(0), 1))
    assert supported_on(u023, xi, d3)
    assert supported_on(u023, xi, d4)


# -- classifier ------------------------------------------------------------------


def test_certificates(u023):
    cert = delta_nu_c_test(u023, TangentVector((1, 0, 0)))
    assert cert.variant is CeresaVariant.ON_CONIC_SUPPORTED
    assert cert.base_locus == Divisor.of((BranchPoint(Scalar.zero()), 3))
    assert cert.subspace_dim == 6

    cert = delta_nu_c_test(u023, TangentVector((1, 1, 1)))
    assert cert.variant is CeresaVariant.NOT_ON_CONIC
    assert cert.base_locus.is_zero()
    assert cert.supported is None

    with pytest.raises(ZeroTangent):
        delta_nu_c_test(u023, TangentVector((0, 0, 0)))


def test_moment_matrix_determinant(u023):
    # det A = Vandermonde(u)/prod Q'(u_j)
    det = moment_matrix(u023).det()
    u1, u2, u3 = u023.u
    vandermonde = (u2 - u1) * (u3 - u1) * (u3 - u2)
    prod = u023.qprime_at(u1) * u023.qprime_at(u2) * u023.qprime_at(u3)
    assert det == vandermonde / prod


def test_product_map_has_one_dimensional_kernel():
    from trigonal4.deformation import product_coordinates, product_pairs

    rows = [product_coordinates(i, j) for (i, j) in product_pairs()]
    m = Matrix.from_rows(rows)
    assert m.rank() == 9
    # kernel of the map products -> coordinates: vectors over the 10 pairs
    kernel = Matrix.from_rows(list(zip(*rows))).kernel_basis()
    assert len(kernel) == 1
    vec = kernel[0]
    pairs = product_pairs()
    nonzero = {pairs[i]: c for i, c in enumerate(vec) if c}
    # the relation is a multiple of w2*w2 - w1*w3
    assert set(nonzero) == {(2, 2), (1, 3)}
    assert nonzero[(2, 2)] == -nonzero[(1, 3)]
