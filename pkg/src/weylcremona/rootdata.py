"""Generalized Cartan matrices, lattices, reflections and orientation matrices."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .symfield import RF, u_atom, rf_eq

__all__ = [
    "CartanError",
    "OrientationError",
    "CartanMatrix",
    "OrientationMatrix",
    "DiagramAutomorphism",
    "validate_cartan",
    "validate_orientation",
    "reflect_root",
    "reflect_weight",
    "root_to_weight",
    "null_root",
    "cartan_affine_A",
    "cartan_finite_A",
    "cyclic_orientation",
    "rotation",
    "parse_u_entry",
    "symbolic_skew_orientation",
    "orientation_violations",
]

INF = 0  # sentinel stored in the Coxeter table for m_ij = infinity


class CartanError(ValueError):
    def __init__(self, clause: str, i: int, j: int, msg: str = ""):
        self.clause, self.i, self.j = clause, i, j
        super().__init__(msg or f"condition {clause} violated at ({i},{j})")


@dataclass(frozen=True)
class Violation:
    clause: str
    i: int
    j: int
    detail: str = ""

    def __str__(self):
        s = f"clause ({self.clause}) at ({self.i},{self.j})"
        return f"{s}: {self.detail}" if self.detail else s


class OrientationError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(map(str, violations)))


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    coxeter: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    name: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def rank_label(self) -> int:
        return self.size - 1

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def m(self, i: int, j: int) -> int | None:
        """Coxeter exponent m_ij, None for infinity (and for i == j)."""
        if i == j:
            return 1
        v = self.coxeter[i][j]
        return None if v == INF else v

    def check_index(self, i: int) -> None:
        if not (isinstance(i, int) and 0 <= i < self.size):
            raise IndexError(f"index {i} out of range 0..{self.size - 1}")


def _coxeter_exponent(p: int) -> int:
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(p, INF)


def validate_cartan(matrix: Sequence[Sequence[int]], name: str = "") -> CartanMatrix:
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise CartanError("square", 0, 0, "Cartan matrix must be square and nonempty")
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if int(v) != v:
                raise CartanError("integer", i, j, f"non-integer entry at ({i},{j})")
            rows[i][j] = int(v)
    for j in range(n):
        if rows[j][j] != 2:
            raise CartanError("C1", j, j)
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise CartanError("C2", i, j)
    for i in range(n):
        for j in range(n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise CartanError("C3", i, j)
    cox = tuple(
        tuple(0 if i == j else _coxeter_exponent(rows[i][j] * rows[j][i]) for j in range(n)) for i in range(n)
    )
    return CartanMatrix(tuple(tuple(r) for r in rows), cox, name)


def cartan_affine_A(l: int) -> CartanMatrix:
    if l < 1:
        raise ValueError("A(1)_l needs l >= 1")
    n = l + 1
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        if n == 2:
            rows[i][1 - i] = -2
        else:
            rows[i][(i + 1) % n] = -1
            rows[i][(i - 1) % n] = -1
    return validate_cartan(rows, f"A1_{l}")


def cartan_finite_A(l: int) -> CartanMatrix:
    rows = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(l)] for i in range(l)]
    return validate_cartan(rows, f"A_{l}")


# ---------------------------------------------------------------------------
# lattices


def _check_vec(v: Sequence[int], A: CartanMatrix) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    if len(v) != A.size:
        raise ValueError(f"vector of length {len(v)} for a rank-{A.size} datum")
    return v


def reflect_root(i: int, v: Sequence[int], A: CartanMatrix) -> tuple[int, ...]:
    """s_i on Q: v - <alpha_i^vee, v> alpha_i."""
    A.check_index(i)
    v = _check_vec(v, A)
    pairing = sum(A[i, j] * v[j] for j in range(A.size))
    out = list(v)
    out[i] -= pairing
    return tuple(out)


def reflect_weight(i: int, lam: Sequence[int], A: CartanMatrix) -> tuple[int, ...]:
    """s_i on L, coordinates over the fundamental weights."""
    A.check_index(i)
    lam = _check_vec(lam, A)
    li = lam[i]
    return tuple(lam[k] - li * A[k, i] for k in range(A.size))


def root_to_weight(v: Sequence[int], A: CartanMatrix) -> tuple[int, ...]:
    v = _check_vec(v, A)
    return tuple(sum(A[i, j] * v[j] for j in range(A.size)) for i in range(A.size))


def _nullspace(rows: list[list[int]]) -> list[list[Fraction]]:
    m = [[Fraction(x) for x in r] for r in rows]
    nr, nc = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(nc):
        p = next((k for k in range(r, nr) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for k in range(nr):
            if k != r and m[k][c] != 0:
                fac = m[k][c]
                m[k] = [a - fac * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * nc
        vec[fcol] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -m[row][fcol]
        basis.append(vec)
    return basis


def null_root(A: CartanMatrix) -> tuple[int, ...]:
    """Marks (a_0, ..., a_l) of the null root; requires corank 1 and a positive kernel."""
    ker = _nullspace([list(r) for r in A.entries])
    if len(ker) != 1:
        raise CartanError("affine", 0, 0, f"kernel has dimension {len(ker)}, not 1: not of affine type")
    vec = ker[0]
    if all(x < 0 for x in vec):
        vec = [-x for x in vec]
    if not all(x > 0 for x in vec):
        raise CartanError("affine", 0, 0, "kernel vector is not positive: not of affine type")
    den = 1
    for x in vec:
        den = math.lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# diagram automorphisms


@dataclass(frozen=True)
class DiagramAutomorphism:
    perm: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def inverse(self) -> "DiagramAutomorphism":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return DiagramAutomorphism(tuple(inv), _inv_label(self.label))

    def compose(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        """self after other."""
        return DiagramAutomorphism(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.perm))

    def check(self, A: CartanMatrix, U: "OrientationMatrix | None" = None) -> None:
        n = A.size
        if sorted(self.perm) != list(range(n)):
            raise ValueError("diagram automorphism must permute the index set")
        for i in range(n):
            for j in range(n):
                if A[self.perm[i], self.perm[j]] != A[i, j]:
                    raise ValueError(f"not a diagram automorphism: a_ij changes at ({i},{j})")
                if U is not None and not rf_eq(U[self.perm[i], self.perm[j]], U[i, j]):
                    raise ValueError(f"orientation matrix is not invariant at ({i},{j})")

    def __str__(self):
        return self.label or f"omega{list(self.perm)}"


def _inv_label(label: str) -> str:
    m = re.fullmatch(r"pi(?:\^(-?\d+))?", label)
    if not m:
        return ""
    k = int(m.group(1) or 1)
    return f"pi^{-k}"


def rotation(A: CartanMatrix, k: int = 1) -> DiagramAutomorphism:
    """Diagram rotation pi^k: i -> i + k (mod l+1)."""
    n = A.size
    w = DiagramAutomorphism(tuple((i + k) % n for i in range(n)), "pi" if k == 1 else f"pi^{k}")
    for i in range(n):
        for j in range(n):
            if A[w(i), w(j)] != A[i, j]:
                raise ValueError("rotation is not a diagram automorphism of this matrix")
    return w


# ---------------------------------------------------------------------------
# orientation matrices

Entry = Union[int, Fraction, RF]

_ENTRY_RE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?P<atom>[A-Za-z_][A-Za-z_0-9]*)?\s*$"
)


def parse_u_entry(text) -> RF:
    """Parse '0', '-1', '3/2', 'u01', '-u01', '-3/2*u21' into an RF."""
    if isinstance(text, RF):
        return text
    if isinstance(text, (int, Fraction)):
        return RF.const(text)
    if isinstance(text, float):
        return RF.const(Fraction(text).limit_denominator(10**6))
    m = _ENTRY_RE.match(str(text))
    if not m or (m.group("coef") is None and m.group("atom") is None):
        raise ValueError(f"cannot parse orientation entry {text!r}")
    coef = Fraction(m.group("coef") or 1)
    if m.group("sign") == "-":
        coef = -coef
    if m.group("atom"):
        return RF.gen(u_atom(m.group("atom"))) * RF.const(coef)
    return RF.const(coef)


MODES = ("thmA", "thmB", "conjecture")


@dataclass(frozen=True)
class OrientationMatrix:
    entries: tuple[tuple[RF, ...], ...]
    mode: str = "thmA"

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> RF:
        i, j = ij
        return self.entries[i][j]

    def is_symbolic(self) -> bool:
        return any(not e.is_const() for row in self.entries for e in row)

    def atoms(self) -> set[int]:
        out: set[int] = set()
        for row in self.entries:
            for e in row:
                out |= e.variables()
        return out

    def to_text(self) -> list[list[str]]:
        return [[e.to_text() for e in row] for row in self.entries]


def _is_multiple(x: RF, y: RF, k: Fraction) -> bool:
    return rf_eq(x, y * RF.const(k))


def orientation_violations(U: Sequence[Sequence[Entry]], A: CartanMatrix, mode: str) -> list[Violation]:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    n = A.size
    E = [[parse_u_entry(x) for x in row] for row in U]
    if len(E) != n or any(len(r) != n for r in E):
        return [Violation("shape", 0, 0, "U must have the shape of A")]
    out: list[Violation] = []
    for i in range(n):
        for j in range(n):
            u, v = E[i][j], E[j][i]
            a, b = A[i, j], A[j, i]
            if mode == "thmA":
                if (i == j or a == 0) and not u.is_zero():
                    out.append(Violation("0", i, j, f"u_ij = {u} must vanish"))
                elif (a, b) == (-1, -1) and not _is_multiple(u, v, Fraction(-1)):
                    out.append(Violation("1", i, j, "u_ij = -u_ji required"))
                elif (a, b) == (-2, -1) and not any(_is_multiple(u, v, k) for k in (-1, -2)):
                    out.append(Violation("2", i, j, "u_ij in {-u_ji, -2u_ji} required"))
                elif (a, b) == (-3, -1) and not any(
                    _is_multiple(u, v, k) for k in (Fraction(-1), Fraction(-3, 2), Fraction(-2), Fraction(-3))
                ):
                    out.append(Violation("3", i, j, "u_ij in {-u_ji, -3/2u_ji, -2u_ji, -3u_ji} required"))
            else:
                if i == j and not u.is_zero():
                    out.append(Violation("0", i, j, "u_jj = 0 required"))
                elif i != j and a == 0 and b == 0 and not u.is_zero():
                    out.append(Violation("1", i, j, "u_ij = 0 required when a_ij = a_ji = 0"))
                elif b == -1 and a in (-1, -2, -3) and not _is_multiple(u, v, Fraction(a)):
                    out.append(Violation("2", i, j, f"u_ij = ({a})*u_ji required"))
                if mode == "conjecture" and i != j:
                    lhs = u * RF.const(b) + v * RF.const(a)
                    if not lhs.is_zero():
                        out.append(Violation("3'", i, j, "u_ij a_ji + a_ij u_ji = 0 required"))
    return out


def validate_orientation(U: Sequence[Sequence[Entry]], A: CartanMatrix, mode: str = "thmA") -> OrientationMatrix:
    bad = orientation_violations(U, A, mode)
    if bad:
        raise OrientationError(bad)
    return OrientationMatrix(tuple(tuple(parse_u_entry(x) for x in row) for row in U), mode)


def cyclic_orientation(l: int) -> list[list[int]]:
    """The cyclic pattern: u_{i,i+1} = 1, u_{i,i-1} = -1 (indices mod l+1)."""
    n = l + 1
    U = [[0] * n for _ in range(n)]
    for i in range(n):
        U[i][(i + 1) % n] += 1
        U[i][(i - 1) % n] -= 1
    return U


def symbolic_skew_orientation(A: CartanMatrix, prefix: str = "u") -> list[list[RF]]:
    """One atom per linked pair (i < j), entries fixed by condition (3').

    u_ij a_ji + a_ij u_ji = 0 is solved with integer multiples of the atom, so
    every entry stays a polynomial in the atoms.
    """
    n = A.size
    U = [[RF() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = A[i, j], A[j, i]
            if a == 0:
                continue
            t = RF.gen(u_atom(f"{prefix}{i}{j}" if n <= 10 else f"{prefix}{i}_{j}"))
            if a == -1:
                U[i][j], U[j][i] = t, t * RF.const(b)
            elif b == -1:
                U[i][j], U[j][i] = t * RF.const(a), t
            else:
                U[i][j], U[j][i] = t * RF.const(-a), t * RF.const(b)
    return U
