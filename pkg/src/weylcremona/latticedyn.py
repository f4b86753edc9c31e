"""Discrete dynamics from translations of the affine Weyl group of type A(1)_l.

A translation t_nu acts on the simple roots by alpha_j -> alpha_j - <nu, alpha_j> delta
and on f by rational maps F_{nu j}.  Iterating those maps on numeric
values gives a difference system on the lattice, f_j[mu + nu] = F_{nu j}(alpha[mu]; f[mu]).

Numeric orbits are evaluated letter by letter: a word x_1 ... x_k acts on
a point p by applying x_1 first (pullback order), which is the same
function as evaluating the composed image x_1(...x_k(f_j)) at p, but it
names the intermediate denominator when a pole is hit.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, TextIO

from .birep import (
    GroupWord,
    Representation,
    apply_word,
    pushforward,
    states_equal,
)
from .report import Report
from .rootdata import (
    DiagramAutomorphism,
    cartan_affine_A,
    cyclic_orientation,
    rotation,
    validate_orientation,
)
from .symfield import RF, PoleError, rf_eq

__all__ = [
    "a1l_representation",
    "TranslationWord",
    "EvolutionFormula",
    "GValue",
    "OrbitState",
    "Orbit",
    "PoleEvent",
    "DP2Params",
    "translation_word",
    "evolution_formula",
    "g_group_action",
    "g_continued_fraction",
    "g_text",
    "dal_closed_form",
    "dal_line_text",
    "verify_dAl",
    "verify_translations",
    "start_state",
    "orbit_iterate",
    "orbit_to_csv",
    "dp2_step",
    "dp2_orbit",
    "dp2_versus_group_orbit",
    "verify_sublattice_symmetry",
    "verify_generalized_symmetry",
    "verify_w_equivariance",
]


@lru_cache(maxsize=None)
def a1l_representation(l: int) -> Representation:
    """A(1)_l with the cyclic orientation u_{i,i+1} = 1, u_{i,i-1} = -1."""
    if l < 2:
        raise ValueError("the cyclic orientation needs l >= 2")
    A = cartan_affine_A(l)
    return Representation(A, validate_orientation(cyclic_orientation(l), A, "thmB"))


def _check_a1l(rep: Representation) -> int:
    n = rep.size
    l = n - 1
    ok = l >= 2 and all(
        rep.A[i, j] == (2 if i == j else (-1 if (j - i) % n in (1, n - 1) else 0))
        for i in range(n)
        for j in range(n)
    )
    if not ok:
        raise ValueError("translation constructors are only available for A(1)_l, l >= 2")
    return l


# ---------------------------------------------------------------------------
# translations


@dataclass(frozen=True)
class TranslationWord:
    """A word representing a lattice translation.

    ``shift[j]`` is <nu, alpha_j>, so the word sends alpha_j to
    alpha_j - shift[j] * delta.  ``coords`` expresses nu over T_1 .. T_l.
    """

    word: GroupWord
    label: str
    shift: tuple[int, ...]
    coords: tuple[int, ...]

    def __str__(self):
        return f"{self.label} = {self.word}"


def _t_word(l: int, i: int, pi: DiagramAutomorphism) -> GroupWord:
    # T_i = s_{i-1} ... s_1 pi s_l ... s_i
    head = tuple(range(i - 1, 0, -1))
    tail = tuple(range(l, i - 1, -1))
    return GroupWord(head + (pi,) + tail)


def _alpha_shift_ok(rep: Representation, word: GroupWord, shift: Sequence[int]) -> tuple[bool, str]:
    st = apply_word(rep, word)
    for j, (img, a) in enumerate(zip(st.alpha, rep.alpha)):
        if not rf_eq(img, a - rep.delta * shift[j]):
            return False, f"a{j} -> {img}"
    return True, ""


def translation_word(l_or_rep: int | Representation, i: int) -> TranslationWord:
    """Shift operator T_i (1 <= i <= l + 1) of A(1)_l; T_1 = pi s_l ... s_1."""
    rep = a1l_representation(l_or_rep) if isinstance(l_or_rep, int) else l_or_rep
    l = _check_a1l(rep)
    if not 1 <= i <= l + 1:
        raise ValueError(f"T_i needs 1 <= i <= {l + 1}")
    n = l + 1
    word = _t_word(l, i, rotation(rep.A, 1))
    shift = [0] * n
    shift[(i - 1) % n] = -1
    shift[i % n] = 1
    coords = tuple(1 if k == i else 0 for k in range(1, n)) if i <= l else (-1,) * l
    ok, detail = _alpha_shift_ok(rep, word, shift)
    if not ok:
        raise AssertionError(f"T_{i} is not a translation with the expected shift: {detail}")
    return TranslationWord(word, f"T{i}", tuple(shift), coords)


def compose_translations(*tws: TranslationWord) -> TranslationWord:
    word = GroupWord()
    for tw in tws:
        word = word + tw.word
    shift = tuple(map(sum, zip(*(tw.shift for tw in tws))))
    coords = tuple(map(sum, zip(*(tw.coords for tw in tws))))
    return TranslationWord(word, " ".join(tw.label for tw in tws), shift, coords)


def inverse_translation(tw: TranslationWord) -> TranslationWord:
    return TranslationWord(
        tw.word.inverse(), f"{tw.label}^-1", tuple(-s for s in tw.shift), tuple(-c for c in tw.coords)
    )


@dataclass(frozen=True)
class EvolutionFormula:
    """F_{nu j} = t_nu(f_j) for every j, with the alpha-shift vector."""

    translation: TranslationWord
    images: tuple[RF, ...]

    @property
    def shift(self) -> tuple[int, ...]:
        return self.translation.shift

    def to_text(self) -> str:
        lab = self.translation.label
        return "\n".join(f"{lab}(f{j}) = {F.to_text()}" for j, F in enumerate(self.images))

    def to_latex(self) -> str:
        lab = self.translation.label
        if lab[0] == "T" and lab[1:].isdigit():
            lab = f"T_{{{lab[1:]}}}"
        return "\n".join(f"{lab}(f_{{{j}}}) = {F.to_latex()}" for j, F in enumerate(self.images))

    def to_struct(self) -> dict:
        return {
            "translation": self.translation.label,
            "word": str(self.translation.word),
            "alpha_shift": list(self.shift),
            "images": {f"f{j}": F.to_text() for j, F in enumerate(self.images)},
        }


def evolution_formula(tw: TranslationWord, rep: Representation | None = None) -> EvolutionFormula:
    if rep is None:
        rep = a1l_representation(_rep_size_from_shift(tw))
    st = apply_word(rep, tw.word)
    return EvolutionFormula(tw, tuple(x.reduced() for x in st.f))


def _rep_size_from_shift(tw: TranslationWord) -> int:
    return len(tw.shift) - 1


# ---------------------------------------------------------------------------
# continued fractions g_{k,r}


def g_group_action(k: int, r: int, rep: Representation) -> RF:
    """s_{k+r} ... s_{k+1} (alpha_k / f_k)."""
    n = rep.size
    k %= n
    word = GroupWord(tuple((k + m) % n for m in range(r, 0, -1)))
    return pushforward(apply_word(rep, word), rep.alpha[k] / rep.f[k]).reduced()


def _alpha_sum(rep: Representation, lo: int, hi: int) -> RF:
    n = rep.size
    total = RF()
    for m in range(lo, hi + 1):
        total = total + rep.alpha[m % n]
    return total


def _g_by_fraction(k: int, r: int, rep: Representation) -> RF:
    # descending fraction, innermost level first
    n = rep.size
    x = rep.f[(k + r) % n]
    for m in range(k + r - 1, k - 1, -1):
        x = rep.f[m % n] - _alpha_sum(rep, m + 1, k + r) / x
    return (_alpha_sum(rep, k, k + r) / x).reduced()


@dataclass(frozen=True)
class GValue:
    k: int
    r: int
    group_action: RF
    continued_fraction: RF
    agrees: bool

    @property
    def value(self) -> RF:
        return self.group_action


def g_continued_fraction(k: int, r: int, rep: Representation | int) -> GValue:
    """g_{k,r} both ways, with the identity check between them."""
    if isinstance(rep, int):
        rep = a1l_representation(rep)
    l = _check_a1l(rep)
    if not 0 <= r <= l - 1:
        raise ValueError(f"g_{{k,r}} needs 0 <= r <= {l - 1}")
    ga = g_group_action(k, r, rep)
    cf = _g_by_fraction(k, r, rep)
    return GValue(k % rep.size, r, ga, cf, rf_eq(ga, cf))


def g_text(k: int, r: int, n: int, latex: bool = False) -> str:
    """Continued-fraction rendering of g_{k,r}."""

    def asum(lo: int, hi: int) -> str:
        parts = [f"\\alpha_{{{m % n}}}" if latex else f"a{m % n}" for m in range(lo, hi + 1)]
        s = " + ".join(parts)
        return f"({s})" if len(parts) > 1 and not latex else s

    fv = (lambda m: f"f_{{{m % n}}}") if latex else (lambda m: f"f{m % n}")
    x = fv(k + r)
    for m in range(k + r - 1, k - 1, -1):
        if latex:
            x = f"{fv(m)} - \\frac{{{asum(m + 1, k + r)}}}{{{x}}}"
        else:
            x = f"({fv(m)} - {asum(m + 1, k + r)}/{x})"
    if latex:
        return f"\\frac{{{asum(k, k + r)}}}{{{x}}}"
    return f"{asum(k, k + r)}/{x}"


# ---------------------------------------------------------------------------
# the closed form of the T_1 evolution


def _dal_terms(j: int, l: int) -> list[tuple[int, int, int]]:
    """(sign, k, r) triples of the g-terms in the closed form of T_1(f_j)."""
    terms = []
    if j <= l - 1:
        terms.append((-1, (j + 2) % (l + 1), l - 1 - j))
    if j == 0:
        terms.append((1, 0, 0))
    if j >= 2:
        terms.append((1, j, l + 1 - j))
    return terms


def dal_closed_form(j: int, rep: Representation | int) -> RF:
    if isinstance(rep, int):
        rep = a1l_representation(rep)
    l = _check_a1l(rep)
    out = rep.f[(j + 1) % (l + 1)]
    for sign, k, r in _dal_terms(j, l):
        out = out + g_group_action(k, r, rep) * sign
    return out


def dal_line_text(j: int, l: int, latex: bool = False) -> str:
    n = l + 1
    head = f"T_1(f_{{{j}}}) = f_{{{(j + 1) % n}}}" if latex else f"T1(f{j}) = f{(j + 1) % n}"
    for sign, k, r in _dal_terms(j, l):
        op = "-" if sign < 0 else "+"
        g = g_text(k, r, n, latex)
        head += f" {op} {g}"
    return head


def verify_dAl(l: int) -> Report:
    """Closed form of T_1 against the word-composition evolution, line by line."""
    if l < 2:
        raise ValueError("needs l >= 2")
    rep = a1l_representation(l)
    ev = evolution_formula(translation_word(rep, 1), rep)
    report = Report(f"T1 closed form on A1_{l}")
    for j in range(l + 1):
        ok = rf_eq(dal_closed_form(j, rep), ev.images[j])
        report.add(dal_line_text(j, l), ok, "" if ok else f"word gives {ev.images[j]}")
    for k in range(l + 1):
        for r in range(l):
            g = g_continued_fraction(k, r, rep)
            report.add(f"g_{{{k},{r}}}: group action = continued fraction", g.agrees)
    return report


def verify_translations(l: int) -> Report:
    """Shift property of every T_i, commutativity, and T_1 ... T_{l+1} = 1."""
    rep = a1l_representation(l)
    ts = [translation_word(rep, i) for i in range(1, l + 2)]
    report = Report(f"shift operators on A1_{l}")
    for t in ts:
        ok, detail = _alpha_shift_ok(rep, t.word, t.shift)
        report.add(f"{t.label}: alpha_j -> alpha_j - <nu, alpha_j> delta", ok, detail)
    for a in range(len(ts)):
        for b in range(a + 1, len(ts)):
            s1 = apply_word(rep, ts[a].word + ts[b].word)
            s2 = apply_word(rep, ts[b].word + ts[a].word)
            ok, bad = states_equal(s1, s2)
            report.add(f"{ts[a].label} {ts[b].label} = {ts[b].label} {ts[a].label}", ok, bad)
    prod = compose_translations(*ts)
    ok, bad = states_equal(apply_word(rep, prod.word), apply_word(rep, GroupWord()))
    report.add(f"T1 ... T{l + 1} = 1", ok, bad)
    return report


# ---------------------------------------------------------------------------
# numeric orbits


@dataclass(frozen=True)
class OrbitState:
    """Values at one lattice site; ``exact`` states carry Fractions."""

    position: tuple[int, ...]
    alpha: tuple
    f: tuple
    exact: bool
    step: int = 0

    def total(self):
        return sum(self.f)


@dataclass(frozen=True)
class PoleEvent:
    step: int
    expression: str

    def __str__(self):
        return f"pole at step {self.step}: {self.expression} = 0"


@dataclass
class Orbit:
    states: list[OrbitState] = field(default_factory=list)
    pole: PoleEvent | None = None

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, k):
        return self.states[k]

    @property
    def complete(self) -> bool:
        return self.pole is None


def _num(x, exact: bool):
    if exact:
        if isinstance(x, float):
            raise TypeError("exact orbits need rational start values")
        return Fraction(x)
    return float(x)


def start_state(alpha: Sequence, f: Sequence, exact: bool = True) -> OrbitState:
    if len(alpha) != len(f):
        raise ValueError("alpha and f have different lengths")
    return OrbitState(
        (0,) * (len(f) - 1), tuple(_num(a, exact) for a in alpha), tuple(_num(x, exact) for x in f), exact
    )


def _numeric_u(rep: Representation, exact: bool):
    n = rep.size
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            u = rep.U[i, j]
            if not u.is_const():
                raise ValueError("numeric orbits need a numeric orientation matrix")
            v = u.const_value()
            row.append(v if exact else float(v))
        out.append(row)
    return out


def _pull_letter(x, alpha: list, f: list, rep: Representation, U) -> None:
    """Replace (alpha, f) by the values of x(alpha), x(f) at the point, in place."""
    n = rep.size
    if isinstance(x, int):
        if f[x] == 0:
            raise PoleError(f"f{x} before s{x}")
        ai = alpha[x]
        ratio = ai / f[x]
        for j in range(n):
            a = rep.A[x, j]
            if j == x:
                alpha[j] = -ai
            elif a:
                alpha[j] = alpha[j] - a * ai
            if U[x][j]:
                f[j] = f[j] + ratio * U[x][j]
    else:
        alpha[:] = [alpha[x(j)] for j in range(n)]
        f[:] = [f[x(j)] for j in range(n)]


def _evaluate_word(word: GroupWord, alpha, f, rep: Representation, U) -> tuple[list, list]:
    a, g = list(alpha), list(f)
    for x in word:
        _pull_letter(x, a, g, rep, U)
    return a, g


def orbit_iterate(
    start: OrbitState,
    tw: TranslationWord,
    steps: int,
    rep: Representation | None = None,
    method: str = "word",
) -> Orbit:
    """Iterate f[mu + nu] = F_nu(alpha[mu]; f[mu]) for ``steps`` steps.

    ``method="word"`` applies the letters one at a time, ``"formula"``
    evaluates the reduced evolution formula.  A pole truncates the orbit
    and is recorded on the result.
    """
    if rep is None:
        rep = a1l_representation(len(start.f) - 1)
    if len(start.f) != rep.size:
        raise ValueError("state size does not match the representation")
    exact = start.exact
    U = _numeric_u(rep, exact)
    marks = _null_marks(rep)
    delta = sum(m * a for m, a in zip(marks, start.alpha))
    orbit = Orbit([start])
    formula = None
    if method == "formula":
        formula = evolution_formula(tw, rep)
        ids = rep.alpha_ids + rep.f_ids
    elif method != "word":
        raise ValueError(f"unknown method {method!r}")
    cur = start
    for k in range(1, steps + 1):
        try:
            if formula is None:
                _, fv = _evaluate_word(tw.word, cur.alpha, cur.f, rep, U)
            else:
                pt = dict(zip(ids, cur.alpha + cur.f))
                fv = [F.evaluate(pt) for F in formula.images]
        except PoleError as exc:
            orbit.pole = PoleEvent(k, str(exc).replace("pole: denominator ", "").replace(" vanishes", ""))
            break
        av = tuple(a - s * delta for a, s in zip(cur.alpha, tw.shift))
        pos = tuple(p + c for p, c in zip(cur.position, tw.coords))
        if not exact:
            fv = [float(x) for x in fv]
        cur = OrbitState(pos, av, tuple(fv), exact, k)
        orbit.states.append(cur)
    return orbit


def _null_marks(rep: Representation) -> tuple[int, ...]:
    from .rootdata import null_root

    return null_root(rep.A)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def orbit_to_csv(orbit: Orbit | Iterable[OrbitState], out: TextIO | str | None = None) -> str:
    """CSV with columns step, mu1..mul, a0..al, f0..fl; returns the text."""
    states = list(orbit)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if states:
        n = len(states[0].f)
        w.writerow(
            ["step"] + [f"mu{i}" for i in range(1, n)] + [f"a{j}" for j in range(n)] + [f"f{j}" for j in range(n)]
        )
        for s in states:
            w.writerow([s.step, *s.position, *map(_fmt, s.alpha), *map(_fmt, s.f)])
    text = buf.getvalue()
    if isinstance(out, str):
        with open(out, "w", newline="") as fh:
            fh.write(text)
    elif out is not None:
        out.write(text)
    return text


# ---------------------------------------------------------------------------
# dP_II


@dataclass(frozen=True)
class DP2Params:
    """c = f0 + f1 + f2 and the roots; delta = alpha0 + alpha1 + alpha2."""

    c: object
    alpha0: object
    alpha1: object
    alpha2: object = 0

    @property
    def delta(self):
        return self.alpha0 + self.alpha1 + self.alpha2

    @classmethod
    def preset(cls, exact: bool = True) -> "DP2Params":
        q = Fraction if exact else float
        return cls(q(2), q(1, 4) if exact else 0.25, q(1, 4) if exact else 0.25, q(0))

    def as_float(self) -> "DP2Params":
        return DP2Params(float(self.c), float(self.alpha0), float(self.alpha1), float(self.alpha2))


def dp2_step(state: tuple, p: DP2Params, n: int, direction: int = 1) -> tuple:
    """(f0[n], f1[n]) -> (f0[n +- 1], f1[n +- 1])."""
    f0, f1 = state
    c, d = p.c, p.delta
    if direction == 1:
        if f0 == 0:
            raise PoleError(f"f0[{n}]")
        g1 = c - f0 - (p.alpha0 + n * d) / f0 - f1
        if g1 == 0:
            raise PoleError(f"f1[{n + 1}]")
        g0 = c - g1 + (p.alpha1 - (n + 1) * d) / g1 - f0
        return g0, g1
    if direction == -1:
        if f1 == 0:
            raise PoleError(f"f1[{n}]")
        g0 = c - f1 + (p.alpha1 - n * d) / f1 - f0
        if g0 == 0:
            raise PoleError(f"f0[{n - 1}]")
        g1 = c - g0 - (p.alpha0 + (n - 1) * d) / g0 - f1
        return g0, g1
    raise ValueError("direction must be +1 or -1")


def dp2_orbit(f0, f1, p: DP2Params, steps: int, n0: int = 0, direction: int = 1) -> list[tuple]:
    out = [(f0, f1)]
    n = n0
    for _ in range(steps):
        out.append(dp2_step(out[-1], p, n, direction))
        n += direction
    return out


def dp2_versus_group_orbit(f0, f1, p: DP2Params, steps: int = 20) -> Report:
    """dP_II iteration against the T_1 orbit on A(1)_2 with f2 = c - f0 - f1."""
    rep = a1l_representation(2)
    exact = isinstance(f0, (int, Fraction)) and isinstance(p.c, (int, Fraction))
    seq = dp2_orbit(f0, f1, p, steps)
    start = start_state((p.alpha0, p.alpha1, p.alpha2), (f0, f1, p.c - f0 - f1), exact)
    orbit = orbit_iterate(start, translation_word(rep, 1), steps, rep)
    report = Report(f"dP_II versus the T1 orbit ({steps} steps, {'exact' if exact else 'float'})")
    if not orbit.complete:
        report.add("group orbit is pole-free", False, str(orbit.pole))
        return report
    bad = [k for k, (s, (g0, g1)) in enumerate(zip(orbit, seq)) if (s.f[0], s.f[1]) != (g0, g1)]
    report.add("f0[n], f1[n] agree at every step", not bad, f"first mismatch at n={bad[0]}" if bad else "")
    drift = [s.total() - start.total() for s in orbit]
    report.add("f0 + f1 + f2 = c along the orbit", all(x == 0 for x in drift) if exact else max(map(abs, drift)) < 1e-9)
    return report


# ---------------------------------------------------------------------------
# sublattice symmetry


def _reflection_word(k: int) -> GroupWord:
    """s_0 s_1 ... s_{k-1} s_k s_{k-1} ... s_0."""
    return GroupWord(tuple(range(k)) + (k,) + tuple(range(k - 1, -1, -1)))


def _commutes(rep: Representation, w1: GroupWord, w2: GroupWord) -> tuple[bool, str]:
    return states_equal(apply_word(rep, w1 + w2), apply_word(rep, w2 + w1))


def verify_sublattice_symmetry(l: int) -> Report:
    """r = s0 s1 s0 as a symmetry of the T_1 system."""
    rep = a1l_representation(l)
    n = l + 1
    T1 = translation_word(rep, 1)
    r = _reflection_word(1)
    report = Report(f"sublattice symmetry r = s0 s1 s0 on A1_{l}")
    ok, bad = _commutes(rep, r, T1.word)
    report.add("r T1 = T1 r", ok, bad)
    for w in (GroupWord((i,)) for i in range(2, n)):
        ok, bad = _commutes(rep, w, T1.word)
        report.add(f"{w} T1 = T1 {w}", ok, bad)
    st_r = apply_word(rep, r)
    beta = rep.alpha[0] + rep.alpha[1]
    p = apply_word(rep, GroupWord((1,))).f[0]  # s1(f0)
    q = apply_word(rep, GroupWord((0,))).f[1]  # s0(f1)
    expected = {j: rep.f[j] for j in range(n)}
    expected[1] = expected[1] + beta / p
    expected[2] = expected[2] + beta / q
    expected[l] = expected[l] - beta / p
    expected[0] = expected[0] - beta / q
    for j in range(n):
        ok = rf_eq(st_r.f[j], expected[j])
        report.add(f"r(f{j}) formula", ok, "" if ok else f"r(f{j}) = {st_r.f[j].reduced()}")
    for name, x in (("s1(f0)", p), ("s0(f1)", q)):
        report.add(f"r fixes {name}", rf_eq(pushforward(st_r, x), x))
    report.add("s0(f1) = T1 s1(f0)", rf_eq(q, pushforward(apply_word(rep, T1.word), p)))
    st_t = apply_word(rep, T1.word)
    report.add("T1 fixes alpha0 + alpha1", rf_eq(st_t.alpha[0] + st_t.alpha[1], beta))
    return report


def verify_generalized_symmetry(l: int, k: int) -> Report:
    """r = s_0 ... s_{k-1} s_k s_{k-1} ... s_0 commutes with T_1 .. T_k."""
    if not 1 <= k < l:
        raise ValueError("needs 1 <= k < l")
    rep = a1l_representation(l)
    r = _reflection_word(k)
    report = Report(f"r = {r} on A1_{l}")
    for i in range(1, k + 1):
        ok, bad = _commutes(rep, r, translation_word(rep, i).word)
        report.add(f"r T{i} = T{i} r", ok, bad)
    for i in range(k + 1, l + 1):
        for t in range(1, k + 1):
            ok, bad = _commutes(rep, GroupWord((i,)), translation_word(rep, t).word)
            report.add(f"s{i} T{t} = T{t} s{i}", ok, bad)
    return report


def verify_w_equivariance(l: int = 2) -> Report:
    """(s_i.f_j)[mu] = s_i(f_j[s_i mu]) for one step of T_1, all i, j."""
    rep = a1l_representation(l)
    n = l + 1
    T1 = translation_word(rep, 1)
    st_t = apply_word(rep, T1.word)
    report = Report(f"W action on the T1 system of A1_{l}")
    for i in range(n):
        si = GroupWord((i,))
        st_i = apply_word(rep, si)
        conj = si + T1.word + si
        # s_i t_nu s_i = t_{s_i nu}, with <s_i nu, alpha_j> = <nu, alpha_j> - a_ij <nu, alpha_i>
        shift = tuple(T1.shift[j] - rep.A[i, j] * T1.shift[i] for j in range(n))
        ok, detail = _alpha_shift_ok(rep, conj, shift)
        report.add(f"s{i} T1 s{i} is the translation by s{i}.nu", ok, detail)
        st_c = apply_word(rep, conj)
        for j in range(n):
            lhs = pushforward(st_t, st_i.f[j])  # (s_i.f_j)[nu]
            rhs = pushforward(st_i, st_c.f[j])  # s_i(f_j[s_i nu])
            direct = st_t.f[j] + st_t.alpha[i] / st_t.f[i] * rep.U[i, j]
            ok = rf_eq(lhs, rhs) and rf_eq(lhs, direct)
            report.add(f"(s{i}.f{j})[nu] = s{i}(f{j}[s{i} nu])", ok)
    return report


def tf_printed(rep: Representation | None = None) -> dict[str, RF]:
    """The l = 2 evolution exactly as usually displayed, including the
    (alpha0 + alpha1) numerator inside T(f0) and T(f2)."""
    rep = rep or a1l_representation(2)
    a0, a1, _ = rep.alpha
    f0, f1, f2 = rep.f
    inner = (a0 + a1) / (f2 - a0 / f0)
    return {
        "T(f0)": f1 + a0 / f0 - inner,
        "T(f1)": f2 - a0 / f0,
        "T(f2)": f0 + inner,
        "T^-1(f0)": f2 + a1 / f1,
    }


def tf_corrected(rep: Representation | None = None) -> dict[str, RF]:
    """Same display with the numerator alpha0 + alpha2 = numerator of g_{2,1}."""
    rep = rep or a1l_representation(2)
    a0, a1, a2 = rep.alpha
    f0, f1, f2 = rep.f
    inner = (a0 + a2) / (f2 - a0 / f0)
    return {
        "T(f0)": f1 + a0 / f0 - inner,
        "T(f1)": f2 - a0 / f0,
        "T(f2)": f0 + inner,
        "T^-1(f0)": f2 + a1 / f1,
    }


def check_tf(forms: dict[str, RF], rep: Representation | None = None) -> dict[str, bool]:
    rep = rep or a1l_representation(2)
    T = translation_word(rep, 1)
    st = apply_word(rep, T.word)
    st_inv = apply_word(rep, T.word.inverse())
    actual = {"T(f0)": st.f[0], "T(f1)": st.f[1], "T(f2)": st.f[2], "T^-1(f0)": st_inv.f[0]}
    return {k: rf_eq(v, actual[k]) for k, v in forms.items()}


__all__ += ["compose_translations", "inverse_translation", "tf_printed", "tf_corrected", "check_tf"]
