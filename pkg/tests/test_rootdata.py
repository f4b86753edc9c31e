from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylcremona.rootdata import (
    CartanError,
    OrientationError,
    cartan_affine_A,
    cartan_finite_A,
    cyclic_orientation,
    null_root,
    orientation_violations,
    parse_u_entry,
    reflect_root,
    reflect_weight,
    root_to_weight,
    rotation,
    symbolic_skew_orientation,
    validate_cartan,
    validate_orientation,
)
from weylcremona.symfield import RF, rf_eq

B2 = [[2, -2], [-1, 2]]
G2 = [[2, -3], [-1, 2]]


@pytest.mark.parametrize(
    "matrix, clause",
    [
        ([[2, -1], [-1, 3]], "C1"),
        ([[2, 1], [-1, 2]], "C2"),
        ([[2, -1], [0, 2]], "C3"),
    ],
)
def test_cartan_conditions(matrix, clause):
    with pytest.raises(CartanError) as err:
        validate_cartan(matrix)
    assert err.value.clause == clause


@pytest.mark.parametrize(
    "matrix, m",
    [([[2, 0], [0, 2]], 2), ([[2, -1], [-1, 2]], 3), (B2, 4), (G2, 6), ([[2, -2], [-2, 2]], None), ([[2, -4], [-1, 2]], None)],
)
def test_coxeter_exponents(matrix, m):
    assert validate_cartan(matrix).m(0, 1) == m


def test_affine_A_shapes():
    A = cartan_affine_A(3)
    assert A[0, 3] == -1 and A[0, 2] == 0 and A[1, 1] == 2
    assert cartan_affine_A(1)[0, 1] == -2


@pytest.mark.parametrize("l", [1, 2, 3, 5])
def test_null_root_of_affine_A(l):
    assert null_root(cartan_affine_A(l)) == (1,) * (l + 1)


def test_null_root_finite_type_rejected():
    with pytest.raises(ValueError):
        null_root(cartan_finite_A(3))


vec3 = st.tuples(*[st.integers(-5, 5)] * 3)


@given(st.integers(0, 2), vec3)
def test_root_reflection_involution(i, v):
    A = cartan_affine_A(2)
    assert reflect_root(i, reflect_root(i, v, A), A) == v


@given(st.integers(0, 2), vec3)
def test_weight_reflection_intertwines_root_to_weight(i, v):
    A = cartan_affine_A(2)
    assert root_to_weight(reflect_root(i, v, A), A) == reflect_weight(i, root_to_weight(v, A), A)


def test_simple_reflection_on_roots():
    A = cartan_affine_A(2)
    assert reflect_root(1, (0, 1, 0), A) == (0, -1, 0)
    assert reflect_root(1, (1, 0, 0), A) == (1, 1, 0)


@given(st.integers(0, 3), st.tuples(*[st.integers(-4, 4)] * 4))
def test_null_root_is_fixed(i, _):
    A = cartan_affine_A(3)
    d = null_root(A)
    assert reflect_root(i, d, A) == d


def test_rotation_group():
    A = cartan_affine_A(3)
    pi = rotation(A, 1)
    assert [pi(j) for j in range(4)] == [1, 2, 3, 0]
    assert pi.compose(pi.inverse()).is_identity()
    p4 = pi
    for _ in range(3):
        p4 = p4.compose(pi)
    assert p4.is_identity()


def test_parse_u_entry():
    assert rf_eq(parse_u_entry("-3/2*u21"), parse_u_entry("u21") * RF.const(Fraction(-3, 2)))
    assert parse_u_entry("0").is_zero()
    assert parse_u_entry(-1).const_value() == -1
    with pytest.raises(ValueError):
        parse_u_entry("2**u")


def test_cyclic_orientation_valid_in_every_mode():
    A = cartan_affine_A(3)
    for mode in ("thmA", "thmB", "conjecture"):
        U = validate_orientation(cyclic_orientation(3), A, mode)
        assert U[0, 1].const_value() == 1 and U[1, 0].const_value() == -1


def test_orientation_clause_zero():
    A = cartan_finite_A(2)
    bad = orientation_violations([[1, 1], [-1, 0]], A, "thmA")
    assert any(v.clause == "0" for v in bad)


def test_orientation_a2_symmetric_rejected():
    with pytest.raises(OrientationError):
        validate_orientation([[0, 1], [1, 0]], cartan_finite_A(2), "thmA")


@pytest.mark.parametrize("k, ok", [(1, True), (2, True), (3, False)])
def test_b2_options(k, ok):
    # u01 = -k u10 for (a01, a10) = (-2, -1)
    U = [[0, -k], [1, 0]]
    assert (not orientation_violations(U, validate_cartan(B2), "thmA")) == ok


@pytest.mark.parametrize("k, ok", [(1, True), (Fraction(3, 2), True), (2, True), (3, True), (4, False)])
def test_g2_options(k, ok):
    U = [[0, -k], [1, 0]]
    assert (not orientation_violations(U, validate_cartan(G2), "thmA")) == ok


def test_thmB_forces_the_proportionality():
    A = validate_cartan(G2)
    assert not orientation_violations([[0, -3], [1, 0]], A, "thmB")
    assert orientation_violations([[0, -2], [1, 0]], A, "thmB")


def test_symbolic_skew_satisfies_condition_three_prime():
    for A in (cartan_affine_A(2), validate_cartan(B2), validate_cartan(G2)):
        U = symbolic_skew_orientation(A)
        assert validate_orientation(U, A, "conjecture").is_symbolic()


def test_conjecture_mode_rejects_cyclic_with_wrong_sign():
    A = cartan_affine_A(2)
    U = [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]
    assert not orientation_violations(U, A, "thmB")
    bad = [[0, 1, -1], [1, 0, 1], [1, -1, 0]]
    assert orientation_violations(bad, A, "conjecture")
