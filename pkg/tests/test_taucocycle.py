import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcremona.birep import GroupWord, Representation, apply_word, pushforward
from weylcremona.rootdata import (
    cartan_affine_A,
    cyclic_orientation,
    symbolic_skew_orientation,
    validate_orientation,
)
from weylcremona.symfield import RF, rf_eq
from weylcremona.taucocycle import (
    TauMonomial,
    check_polynomiality,
    cocycle_of_word,
    conjecture_scan,
    enumerate_words,
    f_from_tau,
    fundamental_weight,
    tau_word_action,
    verify_cocycle_condition,
    verify_well_definedness,
    weight_action,
)


@pytest.fixture(scope="module")
def rep():
    A = cartan_affine_A(2)
    return Representation(A, validate_orientation(cyclic_orientation(2), A, "thmB"))


@pytest.fixture(scope="module")
def srep():
    A = cartan_affine_A(2)
    return Representation(A, validate_orientation(symbolic_skew_orientation(A), A, "conjecture"))


def test_phi_of_s0_s1(rep):
    # s1(tau1) = f1 tau0 tau2 / tau1, then s0 sends f1 to f1 + a0/f0 and tau0 to f0 (...)
    a, f = rep.alpha, rep.f
    v = cocycle_of_word("s0 s1", fundamental_weight(1, 3), rep).value
    assert rf_eq(v, f[0] * f[1] + a[0])


def test_phi_of_s1_s0(rep):
    a, f = rep.alpha, rep.f
    v = cocycle_of_word("s1 s0", fundamental_weight(0, 3), rep).value
    assert rf_eq(v, f[0] * f[1] - a[1])


small_words = st.lists(st.integers(0, 2), max_size=4).map(lambda xs: GroupWord(tuple(xs)))


@settings(max_examples=30)
@given(small_words, st.integers(0, 2))
def test_product_formula_matches_tau_action(rep, w, k):
    lam = fundamental_weight(k, 3)
    m = tau_word_action(w, TauMonomial(RF.const(1), lam), rep)
    assert m.weight == weight_action(w, lam, rep)
    assert rf_eq(m.coeff, cocycle_of_word(w, lam, rep).value)


@settings(max_examples=30)
@given(small_words, small_words, st.integers(0, 2))
def test_cocycle_condition_random(rep, w1, w2, k):
    ok, detail = verify_cocycle_condition(w1, w2, fundamental_weight(k, 3), rep)
    assert ok, detail


@pytest.mark.parametrize("k", range(3))
def test_braid_words_agree(rep, k):
    lam = fundamental_weight(k, 3)
    assert verify_well_definedness(GroupWord((0, 1, 0)), GroupWord((1, 0, 1)), lam, rep)[0]
    assert verify_well_definedness(GroupWord((2, 2)), GroupWord(), lam, rep)[0]


def test_rotation_letters_in_words(rep):
    pi = rep.rotation(1)
    w = GroupWord((0, pi, 1))
    lam = fundamental_weight(2, 3)
    m = tau_word_action(w, TauMonomial(RF.const(1), lam), rep)
    assert rf_eq(m.coeff, cocycle_of_word(w, lam, rep).value)


@pytest.mark.parametrize("j", range(3))
def test_f_from_tau(rep, j):
    ok, prod = f_from_tau(j, rep)
    assert ok and prod.is_weight_zero()


def test_f_from_tau_wrong_reflection_fails(rep):
    ok, _ = f_from_tau(0, rep, reflection=1)
    assert not ok


def test_thmA_rejected_for_tau():
    A = cartan_affine_A(2)
    rep = Representation(A, validate_orientation(cyclic_orientation(2), A, "thmA"))
    with pytest.raises(ValueError):
        cocycle_of_word("s0", fundamental_weight(0, 3), rep)


def test_enumerate_words_count():
    assert len(enumerate_words(3, 6)) == 1 + 3 * (2**7 - 2) // 2
    assert len(enumerate_words(3, 6)) == 190
    assert all(w.letters[i] != w.letters[i + 1] for w in enumerate_words(3, 4) for i in range(len(w) - 1))


def test_polynomiality_examples(srep):
    r = check_polynomiality("s0 s1 s2 s0", 0, srep)
    assert r.is_polynomial and r.integer_coefficients
    assert r.to_row()["word"] == "s0 s1 s2 s0"


def test_small_scan(srep):
    report, results = conjecture_scan(srep, 3)
    assert report.passed
    assert len(results) == 3 * len(enumerate_words(3, 3))


def test_scan_requires_conjecture_mode(rep):
    with pytest.raises(ValueError):
        conjecture_scan(rep, 1)


def test_pushforward_of_phi_is_consistent(rep):
    # w1(phi_w2) with w1 = s2 via pushforward equals phi_{s2 w2} / phi_{s2}(w2.lam)
    w2 = GroupWord((0, 1))
    lam = fundamental_weight(1, 3)
    inner = pushforward(apply_word(rep, "s2"), cocycle_of_word(w2, lam, rep).value)
    outer = cocycle_of_word(GroupWord((2,)), weight_action(w2, lam, rep), rep).value
    assert rf_eq(inner * outer, cocycle_of_word(GroupWord((2, 0, 1)), lam, rep).value)
