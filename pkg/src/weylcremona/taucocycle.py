"""Tau functions as (coefficient, weight) pairs and the cocycle phi_w(lambda).

The field Q(alpha; f; tau) is never built.  A monomial ``c * tau^lam`` is
carried as the pair ``(c, lam)``; the action of w on it is
``w(c) * phi_w(lam) * tau^(w.lam)``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .birep import (
    FieldAutomorphismState,
    GroupWord,
    Representation,
    apply_automorphism,
    apply_generator,
    apply_word,
    identity_state,
    parse_word,
    pushforward,
)
from .report import Report
from .rootdata import DiagramAutomorphism, reflect_weight
from .symfield import RF, rf_eq

__all__ = [
    "TauMonomial",
    "CocycleValue",
    "fundamental_weight",
    "weight_action",
    "tau_generator_action",
    "tau_word_action",
    "f_from_tau",
    "cocycle_of_word",
    "verify_cocycle_condition",
    "verify_well_definedness",
    "check_polynomiality",
    "PolynomialityResult",
    "enumerate_words",
    "conjecture_scan",
    "cocycle_suite",
    "tau_automorphism_action",
]


@dataclass(frozen=True)
class TauMonomial:
    coeff: RF
    weight: tuple[int, ...]

    def __mul__(self, other: "TauMonomial") -> "TauMonomial":
        return TauMonomial(self.coeff * other.coeff, tuple(a + b for a, b in zip(self.weight, other.weight)))

    def __truediv__(self, other: "TauMonomial") -> "TauMonomial":
        return TauMonomial(self.coeff / other.coeff, tuple(a - b for a, b in zip(self.weight, other.weight)))

    def __pow__(self, k: int) -> "TauMonomial":
        return TauMonomial(self.coeff**k, tuple(k * a for a in self.weight))

    def is_weight_zero(self) -> bool:
        return not any(self.weight)

    def to_text(self) -> str:
        taus = " ".join(f"tau{j}" + (f"^{x}" if x != 1 else "") for j, x in enumerate(self.weight) if x)
        c = self.coeff.to_text()
        if not taus:
            return c
        return f"({c}) {taus}" if c != "1" else taus


@dataclass(frozen=True)
class CocycleValue:
    word: GroupWord
    weight: tuple[int, ...]
    value: RF


def fundamental_weight(k: int, n: int) -> tuple[int, ...]:
    return tuple(1 if j == k else 0 for j in range(n))


def _rotate_weight(w: DiagramAutomorphism, lam: Sequence[int]) -> tuple[int, ...]:
    # omega(Lambda_i) = Lambda_omega(i)
    out = [0] * len(lam)
    for i, x in enumerate(lam):
        out[w(i)] = x
    return tuple(out)


def weight_action(word: GroupWord, lam: Sequence[int], rep: Representation) -> tuple[int, ...]:
    """w.lam with left action (rightmost letter acts first)."""
    lam = tuple(lam)
    for x in reversed(word.letters):
        lam = reflect_weight(x, lam, rep.A) if isinstance(x, int) else _rotate_weight(x, lam)
    return lam


_GEN_STATES: dict[tuple[int, int], FieldAutomorphismState] = {}


def _gen_state(rep: Representation, i: int) -> FieldAutomorphismState:
    key = (id(rep), i)
    st = _GEN_STATES.get(key)
    if st is None or st.rep is not rep:
        st = _GEN_STATES[key] = apply_generator(identity_state(rep), i)
    return st


def _require_thmB(rep: Representation) -> None:
    if rep.U.mode not in ("thmB", "conjecture"):
        raise ValueError("tau action requires U validated in thmB or conjecture mode")


def tau_generator_action(i: int, m: TauMonomial, rep: Representation) -> TauMonomial:
    """s_i(c tau^lam) = s_i(c) f_i^{lam_i} tau^{s_i lam}."""
    _require_thmB(rep)
    rep.A.check_index(i)
    c = pushforward(_gen_state(rep, i), m.coeff) if not m.coeff.is_const() else m.coeff
    li = m.weight[i]
    if li:
        c = c * rep.f[i] ** li
    return TauMonomial(c, reflect_weight(i, m.weight, rep.A))


def tau_automorphism_action(w: DiagramAutomorphism, m: TauMonomial, rep: Representation) -> TauMonomial:
    st = apply_automorphism(identity_state(rep), w)
    c = pushforward(st, m.coeff) if not m.coeff.is_const() else m.coeff
    return TauMonomial(c, _rotate_weight(w, m.weight))


def tau_word_action(word: GroupWord, m: TauMonomial, rep: Representation) -> TauMonomial:
    """Apply a word letter by letter, innermost (rightmost) first."""
    for x in reversed(word.letters):
        m = tau_generator_action(x, m, rep) if isinstance(x, int) else tau_automorphism_action(x, m, rep)
    return m


def f_from_tau(j: int, rep: Representation, reflection: int | None = None) -> tuple[bool, TauMonomial]:
    """tau_j * s_j(tau_j) / prod_{i != j} tau_i^{|a_ij|}; must equal f_j * tau^0.

    ``reflection`` substitutes s_k for s_j (used to exercise the failure path).
    """
    n = rep.size
    k = j if reflection is None else reflection
    tj = TauMonomial(RF.const(1), fundamental_weight(j, n))
    prod = tj * tau_generator_action(k, tj, rep)
    for i in range(n):
        if i != j and rep.A[i, j]:
            prod = prod / TauMonomial(RF.const(1), fundamental_weight(i, n)) ** abs(rep.A[i, j])
    ok = prod.is_weight_zero() and rf_eq(prod.coeff, rep.f[j])
    return ok, prod


def cocycle_of_word(word: GroupWord | str, lam: Sequence[int], rep: Representation) -> CocycleValue:
    """phi_w(lam) from the product formula along the given expression of w.

    Each s-letter j_r contributes [prefix(f_{j_r})]^{<alpha_{j_r}^vee, suffix.lam>}
    where prefix is the state of the letters before it and suffix the letters
    after it; diagram automorphism letters only move the prefix and weight.
    """
    _require_thmB(rep)
    if isinstance(word, str):
        word = parse_word(word, rep.A)
    lam = tuple(lam)
    letters = word.letters
    p = len(letters)
    # suffix weights: suffix[r] = letters[r+1:] acting on lam
    suffix = [lam] * (p + 1)
    cur = lam
    for r in range(p - 1, -1, -1):
        suffix[r] = cur
        x = letters[r]
        cur = reflect_weight(x, cur, rep.A) if isinstance(x, int) else _rotate_weight(x, cur)
    num_factors: list[RF] = []
    den_factors: list[RF] = []
    for r, x in enumerate(letters):
        if isinstance(x, int):
            e = suffix[r][x]
            if e:
                fx = apply_word(rep, GroupWord(letters[:r])).f[x]
                if e > 0:
                    num_factors.append(fx ** e)
                else:
                    den_factors.append(fx ** (-e))
    # combine before reducing; intermediate denominators carry no meaning
    num = RF.const(1)
    for t in num_factors:
        num = _mul_raw(num, t)
    den = RF.const(1)
    for t in den_factors:
        den = _mul_raw(den, t)
    value = RF(num.num * den.den, num.den * den.num)
    return CocycleValue(word, lam, value)


def _mul_raw(a: RF, b: RF) -> RF:
    return RF._raw(a.num * b.num, a.den * b.den)


def verify_cocycle_condition(w1: GroupWord, w2: GroupWord, lam: Sequence[int], rep: Representation) -> tuple[bool, str]:
    """phi_{w1 w2}(lam) == w1(phi_{w2}(lam)) * phi_{w1}(w2.lam)."""
    lhs = cocycle_of_word(w1 + w2, lam, rep).value
    inner = cocycle_of_word(w2, lam, rep).value
    st1 = apply_word(rep, w1)
    rhs = pushforward(st1, inner) * cocycle_of_word(w1, weight_action(w2, lam, rep), rep).value
    ok = rf_eq(lhs, rhs)
    detail = "" if ok else f"lhs = {lhs.reduced()}, rhs = {rhs.reduced()}"
    return ok, detail


def verify_well_definedness(wa: GroupWord, wb: GroupWord, lam: Sequence[int], rep: Representation) -> tuple[bool, str]:
    a = cocycle_of_word(wa, lam, rep).value
    b = cocycle_of_word(wb, lam, rep).value
    ok = rf_eq(a, b)
    return ok, "" if ok else f"{a.reduced()} != {b.reduced()}"


@dataclass
class PolynomialityResult:
    word: str
    k: int
    is_polynomial: bool
    integer_coefficients: bool
    term_count: int
    max_degree: int
    polynomial: RF

    def to_row(self) -> dict:
        return {
            "word": self.word,
            "k": self.k,
            "terms": self.term_count,
            "max_degree": self.max_degree,
            "is_polynomial": self.is_polynomial,
            "integer_coefficients": self.integer_coefficients,
        }


def check_polynomiality(word: GroupWord | str, k: int, rep: Representation) -> PolynomialityResult:
    """phi_w(Lambda_k) fully reduced, with a polynomial/integrality verdict."""
    if isinstance(word, str):
        word = parse_word(word, rep.A)
    value = cocycle_of_word(word, fundamental_weight(k, rep.size), rep).value.reduced()
    is_poly = value.is_polynomial()
    # integer coefficients: numerator is in Z[...] by construction; the
    # denominator must be exactly 1 after sign normalization
    integral = is_poly and value.den.const_value() == 1
    return PolynomialityResult(
        str(word), k, is_poly, integral, len(value.num), value.num.degree(), value
    )


def enumerate_words(n: int, max_len: int, letters: Iterable[int] | None = None) -> list[GroupWord]:
    """All words of length <= max_len with no letter repeated adjacently."""
    letters = list(range(n)) if letters is None else list(letters)
    out = [GroupWord()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in letters:
                if not w or w[-1] != x:
                    nxt.append(w + (x,))
        out.extend(GroupWord(w) for w in nxt)
        frontier = nxt
    return out


def _scan_one(args):
    rep, word, k = args
    return check_polynomiality(word, k, rep)


def conjecture_scan(rep: Representation, max_len: int, workers: int = 1) -> tuple[Report, list[PolynomialityResult]]:
    """Check phi_w(Lambda_k) for every word up to max_len and every k."""
    if rep.U.mode != "conjecture":
        raise ValueError("conjecture scan requires U validated in conjecture mode")
    jobs = [(rep, w, k) for w in enumerate_words(rep.size, max_len) for k in range(rep.size)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_scan_one, jobs, chunksize=8))
    else:
        results = [_scan_one(j) for j in jobs]
    report = Report(f"Polynomiality scan ({rep.A.name}, words of length <= {max_len})")
    bad = [r for r in results if not (r.is_polynomial and r.integer_coefficients)]
    report.info["cases"] = len(results)
    report.info["non_polynomial"] = len(bad)
    report.add(f"phi_w(Lambda_k) in Z[alpha, f, u] for all {len(results)} cases", not bad,
               "; ".join(f"{r.word} k={r.k}" for r in bad[:10]))
    return report, results


def cocycle_suite(rep: Representation, max_pair_len: int = 3) -> Report:
    """Cocycle condition on all word pairs, braid well-definedness, f-by-tau."""
    n = rep.size
    report = Report(f"tau/cocycle suite ({rep.A.name})")
    words = enumerate_words(n, max_pair_len)
    weights = [fundamental_weight(k, n) for k in range(n)]
    fails = 0
    total = 0
    for w1, w2 in itertools.product(words, repeat=2):
        if len(w1) + len(w2) == 0:
            continue
        for lam in weights:
            ok, detail = verify_cocycle_condition(w1, w2, lam, rep)
            total += 1
            if not ok:
                fails += 1
                report.add(f"cocycle w1={w1} w2={w2} lam={lam}", False, detail)
    report.add(f"cocycle condition on {total} (w1, w2, Lambda_k) triples", fails == 0)
    for i in range(n):
        for j in range(i + 1, n):
            m = rep.A.m(i, j)
            if m is None:
                continue
            wa = GroupWord(tuple(([i, j] * m)[:m]))
            wb = GroupWord(tuple(([j, i] * m)[:m]))
            for lam in weights:
                ok, detail = verify_well_definedness(wa, wb, lam, rep)
                report.add(f"phi well-defined: {wa} vs {wb}, lam={lam}", ok, detail)
        wa = GroupWord((i, i))
        for lam in weights:
            ok, detail = verify_well_definedness(wa, GroupWord(), lam, rep)
            report.add(f"phi well-defined: s{i} s{i} vs 1, lam={lam}", ok, detail)
    for j in range(n):
        ok, prod = f_from_tau(j, rep)
        report.add(f"f{j} = tau{j} s{j}(tau{j}) / prod tau_i^|a_i{j}|", ok, "" if ok else prod.to_text())
    return report
