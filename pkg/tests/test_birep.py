import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcremona.birep import (
    GroupWord,
    Representation,
    apply_generator,
    apply_word,
    compose,
    identity_state,
    parse_word,
    pushforward,
    states_equal,
    verify_coxeter_relations,
)
from weylcremona.rootdata import (
    OrientationMatrix,
    cartan_affine_A,
    cartan_finite_A,
    cyclic_orientation,
    parse_u_entry,
    validate_cartan,
    validate_orientation,
)
from weylcremona.symfield import RF, rf_eq


def rep_of(A, U, mode="thmA"):
    return Representation(A, validate_orientation(U, A, mode))


def raw_rep(A, U):
    return Representation(A, OrientationMatrix(tuple(tuple(parse_u_entry(x) for x in row) for row in U), "none"))


@pytest.fixture(scope="module")
def a12():
    return rep_of(cartan_affine_A(2), cyclic_orientation(2), "thmB")


def test_generator_images(a12):
    a, f = a12.alpha, a12.f
    st1 = apply_word(a12, "s1")
    assert rf_eq(st1.alpha[1], -a[1])
    assert rf_eq(st1.alpha[0], a[0] + a[1])
    assert rf_eq(st1.alpha[2], a[2] + a[1])
    assert rf_eq(st1.f[1], f[1])
    assert rf_eq(st1.f[2], f[2] + a[1] / f[1])
    assert rf_eq(st1.f[0], f[0] - a[1] / f[1])


def test_rotation_images(a12):
    st = apply_word(a12, "pi")
    assert [x for x in st.f] == [a12.f[1], a12.f[2], a12.f[0]]
    assert rf_eq(apply_word(a12, "pi pi pi").f[0], a12.f[0])


def test_delta_is_invariant(a12):
    for w in ("s0", "s1 s2", "pi s0 s2 s1"):
        assert rf_eq(pushforward(apply_word(a12, w), a12.delta), a12.delta)


def test_pi_conjugates_generators(a12):
    # pi s_i pi^-1 = s_{i+1}
    for i in range(3):
        lhs = apply_word(a12, f"pi s{i} pi^-1")
        rhs = apply_word(a12, f"s{(i + 1) % 3}")
        assert states_equal(lhs, rhs)[0]


B2 = validate_cartan([[2, -2], [-1, 2]])
G2 = validate_cartan([[2, -3], [-1, 2]])


@pytest.mark.parametrize(
    "A, U",
    [
        (cartan_finite_A(2), [[0, 1], [-1, 0]]),
        (validate_cartan([[2, 0], [0, 2]]), [[0, 0], [0, 0]]),
        (B2, [[0, -1], [1, 0]]),
        (B2, [[0, -2], [1, 0]]),
        (G2, [[0, -1], [1, 0]]),
        (G2, [[0, "-3/2"], [1, 0]]),
        (G2, [[0, -2], [1, 0]]),
        (G2, [[0, -3], [1, 0]]),
        (cartan_affine_A(2), cyclic_orientation(2)),
        (cartan_affine_A(3), cyclic_orientation(3)),
    ],
)
def test_coxeter_relations(A, U):
    report = verify_coxeter_relations(rep_of(A, U))
    assert report.passed, report.to_text()


def test_invalid_orientation_breaks_braid_relation():
    rep = raw_rep(cartan_finite_A(2), [[0, 1], [1, 0]])
    report = verify_coxeter_relations(rep)
    assert not report.passed
    assert any("counterexample" in c.detail for c in report.failures)


def test_b2_with_wrong_ratio_fails():
    report = verify_coxeter_relations(raw_rep(B2, [[0, -3], [1, 0]]))
    assert not report.passed


def test_parse_word_forms():
    A = cartan_affine_A(2)
    assert parse_word("s0 s1 pi s2", A) == parse_word("0 1 p 2", A)
    assert parse_word("s0s1", A).letters == (0, 1)
    assert parse_word("1", A) == GroupWord()
    w = parse_word("pi^-1 s2", A)
    assert w.letters[1] == 2
    assert w.letters[0].compose(parse_word("pi", A).letters[0]).is_identity()
    with pytest.raises(ValueError):
        parse_word("s0 q", A)
    with pytest.raises(Exception):
        parse_word("s7", A)


words = st.lists(st.sampled_from([0, 1, 2, "pi"]), max_size=4)


def _word(rep, letters):
    return GroupWord(tuple(x if isinstance(x, int) else rep.rotation(1) for x in letters))


@settings(max_examples=25)
@given(words, words)
def test_compose_is_concatenation(a12, w1, w2):
    g1, g2 = _word(a12, w1), _word(a12, w2)
    lhs = compose(apply_word(a12, g1), apply_word(a12, g2))
    assert states_equal(lhs, apply_word(a12, g1 + g2))[0]


@settings(max_examples=25)
@given(words)
def test_word_times_inverse_is_identity(a12, w):
    g = _word(a12, w)
    assert states_equal(apply_word(a12, g + g.inverse()), identity_state(a12))[0]


def test_state_cache_reuses_prefixes():
    rep = rep_of(cartan_affine_A(2), cyclic_orientation(2), "thmB")
    apply_word(rep, "s0 s1 s2")
    assert (0, 1) in rep._states
    st = apply_word(rep, "s0 s1")
    assert st is rep._states[(0, 1)]
    fresh = apply_generator(apply_generator(identity_state(rep), 0), 1)
    assert states_equal(st, fresh)[0]


def test_all_pairs_on_a13_commute_or_braid():
    rep = rep_of(cartan_affine_A(3), cyclic_orientation(3), "thmB")
    for i, j in itertools.combinations(range(4), 2):
        m = rep.A.m(i, j)
        w = GroupWord(tuple([i, j] * m))
        assert states_equal(apply_word(rep, w), identity_state(rep))[0]
