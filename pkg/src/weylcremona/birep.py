"""Birational action of W(A) (and diagram automorphisms) on Q(alpha; f).

Convention: the state of a word ``w`` stores the images ``w(g)`` of every
generator ``g``, with left actions, so ``(w1 w2)(g) = w1(w2(g))``.  Appending
a letter ``x`` to ``w`` therefore pushes ``x(g)`` through the old images.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .report import Report
from .rootdata import (
    CartanMatrix,
    DiagramAutomorphism,
    OrientationMatrix,
    null_root,
    rotation,
)
from .symfield import RF, alpha_var, f_var, rf_eq, rf_substitute

__all__ = [
    "Representation",
    "GroupWord",
    "FieldAutomorphismState",
    "parse_word",
    "identity_state",
    "apply_generator",
    "apply_automorphism",
    "apply_word",
    "compose",
    "pushforward",
    "states_equal",
    "verify_coxeter_relations",
]

Letter = Union[int, DiagramAutomorphism]


class Representation:
    """A root datum with its orientation matrix and registered variables."""

    def __init__(self, A: CartanMatrix, U: OrientationMatrix):
        if U.size != A.size:
            raise ValueError("U and A differ in size")
        self.A = A
        self.U = U
        n = A.size
        self.alpha_ids = tuple(alpha_var(j) for j in range(n))
        self.f_ids = tuple(f_var(j) for j in range(n))
        self.alpha = tuple(RF.gen(v) for v in self.alpha_ids)
        self.f = tuple(RF.gen(v) for v in self.f_ids)
        self._delta = None
        self._states: dict[tuple, "FieldAutomorphismState"] = {}

    STATE_CACHE_SIZE = 4096

    @property
    def size(self) -> int:
        return self.A.size

    @property
    def delta(self) -> RF:
        """Null root as an element of Q(alpha) (affine data only)."""
        if self._delta is None:
            marks = null_root(self.A)
            d = RF()
            for m, a in zip(marks, self.alpha):
                d = d + a * m
            self._delta = d
        return self._delta

    def rotation(self, k: int = 1) -> DiagramAutomorphism:
        return rotation(self.A, k)

    def generators(self) -> list[tuple[str, RF]]:
        n = self.size
        return [(f"a{j}", self.alpha[j]) for j in range(n)] + [(f"f{j}", self.f[j]) for j in range(n)]


@dataclass(frozen=True)
class GroupWord:
    letters: tuple = ()

    def __add__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple(x if isinstance(x, int) else x.inverse() for x in reversed(self.letters)))

    def s_letters(self) -> list[int]:
        return [x for x in self.letters if isinstance(x, int)]

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{x}" if isinstance(x, int) else str(x) for x in self.letters)

    @classmethod
    def of(cls, *letters: Letter) -> "GroupWord":
        return cls(tuple(letters))


_TOKEN = re.compile(r"\s*(?:(?P<s>s?)(?P<i>\d+)|(?P<pi>pi|p)(?:\^?(?P<k>-?\d+))?)\s*")


def parse_word(text: str, A: CartanMatrix) -> GroupWord:
    """Parse 's0 s1 pi s2', '0 1 p 2', 's0s1' or 'pi^-1 s2' into a word."""
    text = text.strip()
    if text in ("", "1", "e", "id"):
        return GroupWord()
    letters: list[Letter] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        if m.group("i") is not None:
            i = int(m.group("i"))
            A.check_index(i)
            letters.append(i)
        else:
            k = int(m.group("k")) if m.group("k") is not None else 1
            letters.append(rotation(A, k))
        pos = m.end()
    return GroupWord(tuple(letters))


@dataclass(frozen=True)
class FieldAutomorphismState:
    rep: Representation = field(repr=False, compare=False)
    alpha: tuple
    f: tuple
    word: GroupWord = GroupWord()

    def image(self, name: str) -> RF:
        kind, j = name[0], int(name[1:])
        return self.alpha[j] if kind == "a" else self.f[j]

    def assignment(self) -> dict[int, RF]:
        d = dict(zip(self.rep.alpha_ids, self.alpha))
        d.update(zip(self.rep.f_ids, self.f))
        return d

    def images(self) -> list[tuple[str, RF]]:
        n = self.rep.size
        return [(f"a{j}", self.alpha[j]) for j in range(n)] + [(f"f{j}", self.f[j]) for j in range(n)]


def identity_state(rep: Representation) -> FieldAutomorphismState:
    return FieldAutomorphismState(rep, rep.alpha, rep.f, GroupWord())


def apply_generator(state: FieldAutomorphismState, i: int) -> FieldAutomorphismState:
    """State of w s_i from the state of w."""
    rep = state.rep
    A, U = rep.A, rep.U
    A.check_index(i)
    ai, fi = state.alpha[i], state.f[i]
    n = rep.size
    alpha = tuple(
        state.alpha[j] if A[i, j] == 0 else (-ai if j == i else state.alpha[j] - ai * A[i, j]) for j in range(n)
    )
    ratio = ai / fi
    f = tuple(state.f[j] if U[i, j].is_zero() else (state.f[j] + ratio * U[i, j]).reduced() for j in range(n))
    return FieldAutomorphismState(rep, alpha, f, GroupWord(state.word.letters + (i,)))


def apply_automorphism(state: FieldAutomorphismState, w: DiagramAutomorphism) -> FieldAutomorphismState:
    rep = state.rep
    w.check(rep.A, rep.U)
    alpha = tuple(state.alpha[w(j)] for j in range(rep.size))
    f = tuple(state.f[w(j)] for j in range(rep.size))
    return FieldAutomorphismState(rep, alpha, f, GroupWord(state.word.letters + (w,)))


def _apply_letter(state: FieldAutomorphismState, x: Letter) -> FieldAutomorphismState:
    if isinstance(x, int):
        return apply_generator(state, x)
    return apply_automorphism(state, x)


def apply_word(rep: Representation, w: GroupWord | str | Sequence[Letter]) -> FieldAutomorphismState:
    if isinstance(w, str):
        w = parse_word(w, rep.A)
    elif not isinstance(w, GroupWord):
        w = GroupWord(tuple(w))
    cache = rep._states
    letters = w.letters
    # longest cached prefix, then extend letter by letter
    k = len(letters)
    while k and letters[:k] not in cache:
        k -= 1
    state = cache[letters[:k]] if k else identity_state(rep)
    for r in range(k, len(letters)):
        state = _apply_letter(state, letters[r])
        if len(cache) < rep.STATE_CACHE_SIZE:
            cache[letters[: r + 1]] = state
    return state


def pushforward(state: FieldAutomorphismState, expr: RF) -> RF:
    return rf_substitute(RF.coerce(expr), state.assignment())


def compose(s1: FieldAutomorphismState, s2: FieldAutomorphismState) -> FieldAutomorphismState:
    """State of w1 w2, i.e. g -> w1(w2(g))."""
    sub = s1.assignment()
    alpha = tuple(rf_substitute(x, sub) for x in s2.alpha)
    f = tuple(rf_substitute(x, sub) for x in s2.f)
    return FieldAutomorphismState(s1.rep, alpha, f, s1.word + s2.word)


def states_equal(s1: FieldAutomorphismState, s2: FieldAutomorphismState) -> tuple[bool, str]:
    """Compare generator images; returns (equal, first differing generator)."""
    for (name, x), (_, y) in zip(s1.images(), s2.images()):
        if not rf_eq(x, y):
            return False, name
    return True, ""


def relation_word(i: int, j: int, m: int) -> GroupWord:
    return GroupWord(tuple([i, j] * m))


def verify_coxeter_relations(rep: Representation, pairs: Iterable[tuple[int, int]] | None = None) -> Report:
    """Check s_i^2 = 1 and (s_i s_j)^m_ij = 1 on every generator."""
    A = rep.A
    n = rep.size
    report = Report(f"Coxeter relations ({A.name or f'{n}x{n}'}, U mode {rep.U.mode})")
    ident = identity_state(rep)
    for i in range(n):
        st = apply_generator(apply_generator(ident, i), i)
        ok, bad = states_equal(st, ident)
        report.add(f"s{i}^2 = 1", ok, f"counterexample generator {bad}" if not ok else "")
    if pairs is None:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for i, j in pairs:
        m = A.m(i, j)
        if m is None:
            report.add(f"(s{i} s{j})^inf", True, "no finite relation", vacuous=True)
            continue
        st = apply_word(rep, relation_word(i, j, m))
        ok, bad = states_equal(st, ident)
        report.add(f"(s{i} s{j})^{m} = 1", ok, f"counterexample generator {bad}: image {st.image(bad)}" if not ok else "")
    return report
