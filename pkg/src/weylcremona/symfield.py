"""Exact arithmetic in Q(alpha; f; u).

Sparse multivariate polynomials over Python integers, keyed by exponent
tuples indexed by a global append-only variable registry, and normalized
fractions of them.

Exponent tuples are trimmed of trailing zeros.  With that convention plain
tuple comparison coincides with lexicographic comparison of the zero-padded
vectors, so ``(sum(e), e)`` is the graded-lex sort key used everywhere.
"""

from __future__ import annotations

import math
import os
import random
import threading
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "REGISTRY",
    "VariableRegistry",
    "Poly",
    "RF",
    "var",
    "alpha_var",
    "f_var",
    "u_atom",
    "rf_arith",
    "rf_eq",
    "rf_substitute",
    "rf_eval",
    "poly_gcd",
    "set_gcd_threshold",
    "get_gcd_threshold",
    "PoleError",
]


# products with more term pairs than this go through FLINT when available
_FLINT_MUL_CUTOFF = 400


class PoleError(ZeroDivisionError):
    """A denominator vanished (identically, or at an evaluation point)."""


# ---------------------------------------------------------------------------
# variables


class VariableRegistry:
    """Append-only alphabet of variables with stable dense integer ids."""

    KINDS = ("alpha", "f", "u", "aux")

    def __init__(self):
        self._names: list[str] = []
        self._kinds: list[str] = []
        self._index: dict[str, int] = {}
        self._lock = threading.Lock()

    def register(self, name: str, kind: str = "aux") -> int:
        vid = self._index.get(name)
        if vid is not None:
            if self._kinds[vid] != kind:
                raise ValueError(f"variable {name!r} already registered as {self._kinds[vid]}")
            return vid
        if kind not in self.KINDS:
            raise ValueError(f"unknown variable kind {kind!r}")
        with self._lock:
            vid = self._index.get(name)
            if vid is None:
                vid = len(self._names)
                self._names.append(name)
                self._kinds.append(kind)
                self._index[name] = vid
        return vid

    def lookup(self, name: str) -> int:
        return self._index[name]

    def name(self, vid: int) -> str:
        return self._names[vid]

    def kind(self, vid: int) -> str:
        return self._kinds[vid]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self._names)

    def check(self, vid: int) -> None:
        if not 0 <= vid < len(self._names):
            raise KeyError(f"unregistered variable id {vid}")


REGISTRY = VariableRegistry()


def var(name: str, kind: str = "aux") -> int:
    return REGISTRY.register(name, kind)


def alpha_var(j: int) -> int:
    return REGISTRY.register(f"a{j}", "alpha")


def f_var(j: int) -> int:
    return REGISTRY.register(f"f{j}", "f")


def u_atom(name: str) -> int:
    return REGISTRY.register(name, "u")


# ---------------------------------------------------------------------------
# exponent helpers


def _madd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    n = len(b)
    return tuple([x + y for x, y in zip(a, b)]) + a[n:]


def _trim(e) -> tuple:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _msub(a: tuple, b: tuple):
    """a - b, or None when b does not divide a."""
    if len(b) > len(a):
        return None
    out = list(a)
    for k, y in enumerate(b):
        v = out[k] - y
        if v < 0:
            return None
        out[k] = v
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _key(e: tuple):
    return (sum(e), e)


def _symmetric_mod(c: int, m: int) -> int:
    r = c % m
    if r > m // 2:
        r -= m
    return r


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Sparse polynomial with integer coefficients.

    ``terms`` maps trimmed exponent tuples to nonzero ints and must not be
    mutated once the polynomial is built.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None, _clean: bool = False):
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms  # type: ignore[assignment]
        else:
            d: dict[tuple, int] = {}
            for e, c in terms.items():
                if c:
                    e = _trim(e)
                    v = d.get(e, 0) + c
                    if v:
                        d[e] = v
                    else:
                        d.pop(e, None)
            self.terms = d
        self._hash = None

    # construction
    @classmethod
    def const(cls, c: int) -> "Poly":
        c = int(c)
        return cls({(): c}, True) if c else cls()

    @classmethod
    def gen(cls, vid: int, power: int = 1) -> "Poly":
        REGISTRY.check(vid)
        if power == 0:
            return cls.const(1)
        return cls({(0,) * vid + (power,): 1}, True)

    @classmethod
    def monomial(cls, exps: tuple, coeff: int = 1) -> "Poly":
        exps = _trim(exps)
        if len(exps) > len(REGISTRY):
            raise KeyError("monomial references unregistered variables")
        return cls({exps: coeff}, True) if coeff else cls()

    # predicates / accessors
    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        t = self.terms
        return not t or (len(t) == 1 and () in t)

    def const_value(self) -> int:
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms.get((), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self) -> int:
        return len(self.terms)

    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def variables(self) -> set[int]:
        out: set[int] = set()
        for e in self.terms:
            for k, x in enumerate(e):
                if x:
                    out.add(k)
        return out

    def degree(self, vid: int | None = None) -> int:
        if not self.terms:
            return -1
        if vid is None:
            return max(sum(e) for e in self.terms)
        return max((e[vid] if len(e) > vid else 0) for e in self.terms)

    def leading(self) -> tuple[tuple, int]:
        e = max(self.terms, key=_key)
        return e, self.terms[e]

    def lc(self) -> int:
        return self.leading()[1] if self.terms else 0

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def monomial_content(self) -> tuple:
        it = iter(self.terms)
        try:
            m = list(next(it))
        except StopIteration:
            return ()
        for e in it:
            if len(e) < len(m):
                del m[len(e):]
            for k in range(len(m)):
                if e[k] < m[k]:
                    m[k] = e[k]
        return _trim(m)

    def max_norm(self) -> int:
        return max((abs(c) for c in self.terms.values()), default=0)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, int):
                other = Poly.const(other)
            else:
                return NotImplemented
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        d = dict(a)
        for e, c in b.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                del d[e]
        return Poly(d, True)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly()
            return Poly({e: c * other for e, c in self.terms.items()}, True)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            if not eb:
                return Poly({e: c * cb for e, c in a.items()}, True)
            return Poly({_madd(e, eb): c * cb for e, c in a.items()}, True)
        if _flint is not None and len(a) * len(b) > _FLINT_MUL_CUTOFF:
            n = max(self.nvars(), other.nvars())
            ctx = _flint_ctx(n)
            return _from_flint(_to_flint(self, ctx, n) * _to_flint(other, ctx, n))
        d: dict[tuple, int] = {}
        get = d.get
        madd = _madd
        bl = list(b.items())
        for ea, ca in a.items():
            for eb, cb in bl:
                e = madd(ea, eb)
                d[e] = get(e, 0) + ca * cb
        return Poly({e: c for e, c in d.items() if c}, True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def quo_int(self, c: int) -> "Poly":
        """Exact division by an integer that divides every coefficient."""
        if c == 1:
            return self
        if c == -1:
            return -self
        return Poly({e: q for e, q in ((e, v // c) for e, v in self.terms.items())}, True)

    def quo_monomial(self, m: tuple) -> "Poly":
        if not m:
            return self
        out = {}
        for e, c in self.terms.items():
            r = _msub(e, m)
            if r is None:
                raise ValueError("monomial does not divide polynomial")
            out[r] = c
        return Poly(out, True)

    def mul_monomial(self, m: tuple, c: int = 1) -> "Poly":
        m = _trim(m)
        return Poly({_madd(e, m): v * c for e, v in self.terms.items()}, True)

    def exquo(self, other: "Poly"):
        """Quotient in Z[x] if ``other`` divides ``self`` exactly, else None."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly()
        b = other.terms
        if len(b) == 1:
            (eb, cb), = b.items()
            out = {}
            for e, c in self.terms.items():
                r = _msub(e, eb)
                if r is None or c % cb:
                    return None
                out[r] = c // cb
            return Poly(out, True)
        lb, lcb = other.leading()
        # quick necessary conditions
        for vid in other.variables():
            if other.degree(vid) > self.degree(vid):
                return None
        rest = [(e, c) for e, c in b.items() if e != lb]
        p = dict(self.terms)
        q: dict[tuple, int] = {}
        while p:
            e = max(p, key=_key)
            c = p[e]
            m = _msub(e, lb)
            if m is None or c % lcb:
                return None
            t = c // lcb
            q[m] = t
            del p[e]
            for eb, cb in rest:
                k = _madd(eb, m)
                v = p.get(k, 0) - t * cb
                if v:
                    p[k] = v
                else:
                    p.pop(k, None)
        return Poly(q, True)

    # evaluation / substitution
    def evaluate(self, point: Mapping[int, object]):
        """Evaluate at a point given as var id -> number (all vars required)."""
        total = 0
        powcache: dict[tuple[int, int], object] = {}
        for e, c in self.terms.items():
            val = c
            for k, x in enumerate(e):
                if x:
                    key = (k, x)
                    pv = powcache.get(key)
                    if pv is None:
                        try:
                            base = point[k]
                        except KeyError:
                            raise KeyError(f"no value for variable {REGISTRY.name(k)}") from None
                        pv = base**x
                        powcache[key] = pv
                    val = val * pv
            total = total + val
        return total

    def eval_var(self, vid: int, value: int) -> "Poly":
        """Substitute an integer for one variable."""
        d: dict[tuple, int] = {}
        for e, c in self.terms.items():
            if len(e) > vid and e[vid]:
                x = e[vid]
                e2 = _trim(e[:vid] + (0,) + e[vid + 1:])
                v = d.get(e2, 0) + c * value**x
            else:
                e2 = e
                v = d.get(e2, 0) + c
            if v:
                d[e2] = v
            else:
                d.pop(e2, None)
        return Poly(d, True)

    def coeffs_in(self, vid: int) -> dict[int, "Poly"]:
        """Split as sum_k coeff_k * x_vid^k."""
        parts: dict[int, dict[tuple, int]] = {}
        for e, c in self.terms.items():
            if len(e) > vid and e[vid]:
                k = e[vid]
                e2 = _trim(e[:vid] + (0,) + e[vid + 1:])
            else:
                k = 0
                e2 = e
            parts.setdefault(k, {})[e2] = c
        return {k: Poly(v, True) for k, v in parts.items()}

    def diff(self, vid: int) -> "Poly":
        d: dict[tuple, int] = {}
        for e, c in self.terms.items():
            if len(e) > vid and e[vid]:
                x = e[vid]
                e2 = _trim(e[:vid] + (x - 1,) + e[vid + 1:])
                d[e2] = d.get(e2, 0) + c * x
        return Poly({e: c for e, c in d.items() if c}, True)

    # rendering
    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), key=lambda t: _key(t[0]), reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                REGISTRY.name(k) + (f"^{x}" if x > 1 else "") for k, x in enumerate(e) if x
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = " ".join(_latex_name(k) + (f"^{{{x}}}" if x > 1 else "") for k, x in enumerate(e) if x)
            a = abs(c)
            body = (mono if a == 1 else f"{a} {mono}") if mono else str(a)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def to_struct(self) -> list:
        return [[list(e), c] for e, c in self.sorted_terms()]

    @classmethod
    def from_struct(cls, data: Iterable) -> "Poly":
        n = len(REGISTRY)
        terms = {}
        for e, c in data:
            e = _trim(e)
            if len(e) > n:
                raise KeyError("structured polynomial references unregistered variables")
            terms[e] = terms.get(e, 0) + int(c)
        return cls(terms)

    def __repr__(self):
        return f"Poly({self.to_text()})"

    __str__ = to_text


def _latex_name(vid: int) -> str:
    name = REGISTRY.name(vid)
    kind = REGISTRY.kind(vid)
    if kind == "alpha":
        return rf"\alpha_{{{name[1:]}}}"
    if kind in ("f", "u") and len(name) > 1 and name[1:].isdigit():
        return f"{name[0]}_{{{name[1:]}}}"
    return name


ZERO = Poly()
ONE = Poly.const(1)


# ---------------------------------------------------------------------------
# gcd


class HeuristicGCDFailed(Exception):
    pass


def _heu_gcd(f: Poly, g: Poly) -> Poly:
    """Heuristic GCD by integer evaluation and xi-adic reconstruction.

    Both inputs nonzero.  Returns a gcd with positive leading coefficient.
    """
    vs = f.variables() | g.variables()
    if not vs:
        return Poly.const(math.gcd(f.const_value(), g.const_value()))
    cf, cg = f.content(), g.content()
    cont = math.gcd(cf, cg)
    f, g = f.quo_int(cf), g.quo_int(cg)
    v = max(vs)
    fn, gn = f.max_norm(), g.max_norm()
    B = 2 * min(fn, gn) + 29
    xi = max(min(B, 99 * math.isqrt(B)), 2 * min(fn // abs(f.lc()), gn // abs(g.lc())) + 4)
    for _ in range(6):
        ff, gg = f.eval_var(v, xi), g.eval_var(v, xi)
        if not ff.is_zero() and not gg.is_zero():
            h = _heu_gcd(ff, gg)
            h = _interpolate(h, xi, v)
            h = h.quo_int(h.content())
            if h.lc() < 0:
                h = -h
            if f.exquo(h) is not None and g.exquo(h) is not None:
                return h * cont
        xi = 73794 * xi * math.isqrt(math.isqrt(xi)) // 27011
    raise HeuristicGCDFailed


def _interpolate(h: Poly, xi: int, v: int) -> Poly:
    out: dict[tuple, int] = {}
    k = 0
    while not h.is_zero():
        digit = {}
        for e, c in h.terms.items():
            r = _symmetric_mod(c, xi)
            if r:
                digit[e] = r
        for e, c in digit.items():
            ek = list(e) + [0] * max(0, v + 1 - len(e))
            ek[v] += k
            out[_trim(ek)] = c
        h = Poly(
            {e: q for e, q in ((e, (c - digit.get(e, 0)) // xi) for e, c in h.terms.items()) if q},
            True,
        )
        k += 1
    return Poly(out, True)


def _prs_gcd(f: Poly, g: Poly) -> Poly:
    """Recursive primitive-PRS gcd; slow but unconditional."""
    common = f.variables() & g.variables()
    if not common:
        # any common factor is free of every variable in f or g
        return Poly.const(math.gcd(_full_content(f), _full_content(g)))
    v = max(common)
    fc, gc = f.coeffs_in(v), g.coeffs_in(v)
    cf = _gcd_many(list(fc.values()))
    cg = _gcd_many(list(gc.values()))
    c = _native_gcd(cf, cg)
    pf = _exq(f, cf)
    pg = _exq(g, cg)
    if pf.degree(v) < pg.degree(v):
        pf, pg = pg, pf
    while pg.degree(v) > 0:
        r = _prem(pf, pg, v)
        if r.is_zero():
            break
        pf, pg = pg, _primitive_in(r, v)
    h = pg if pg.degree(v) > 0 else ONE
    h = h * c
    if h.lc() < 0:
        h = -h
    return h


def _full_content(p: Poly) -> int:
    return p.content()


def _exq(a: Poly, b: Poly) -> Poly:
    q = a.exquo(b)
    if q is None:
        raise ArithmeticError("internal: inexact division in gcd")
    return q


def _prem(f: Poly, g: Poly, v: int) -> Poly:
    dg = g.degree(v)
    lcg = g.coeffs_in(v)[dg]
    r = f
    dr = r.degree(v)
    xv = (0,) * v
    while not r.is_zero() and dr >= dg:
        lcr = r.coeffs_in(v)[dr]
        r = r * lcg - (g * lcr).mul_monomial(xv + (dr - dg,))
        dr = r.degree(v)
    return r


def _primitive_in(p: Poly, v: int) -> Poly:
    c = _gcd_many(list(p.coeffs_in(v).values()))
    q = _exq(p, c)
    return q if q.lc() > 0 else -q


def _gcd_many(ps: list[Poly]) -> Poly:
    ps = sorted(ps, key=len)
    g = ps[0]
    for p in ps[1:]:
        if g.is_const() and abs(g.const_value()) == 1:
            break
        g = _native_gcd(g, p)
    return g if g.lc() > 0 else -g


try:
    if os.environ.get("WEYLCREMONA_NO_FLINT", "") not in ("", "0"):
        raise ImportError
    import flint as _flint
except ImportError:  # pragma: no cover - exercised via the env flag
    _flint = None


def _flint_ctx(n: int):
    return _flint.fmpz_mpoly_ctx.get(("x", max(n, 1)), "lex")


def _to_flint(p: Poly, ctx, n: int):
    n = max(n, 1)
    return ctx.from_dict({e + (0,) * (n - len(e)): c for e, c in p.terms.items()})


def _from_flint(q) -> Poly:
    return Poly({_trim(e): int(c) for e, c in q.to_dict().items()}, True)


def _flint_reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    n = max(num.nvars(), den.nvars())
    ctx = _flint_ctx(n)
    a, b = _to_flint(num, ctx, n), _to_flint(den, ctx, n)
    g = a.gcd(b)
    if g.is_one():
        return num, den
    return _from_flint(a // g), _from_flint(b // g)


def has_flint() -> bool:
    return _flint is not None


def poly_gcd(f: Poly, g: Poly, *, backend: str | None = None) -> Poly:
    """Greatest common divisor in Z[x], normalized to positive leading coefficient.

    ``backend`` is "flint" or "native"; by default FLINT is used when
    python-flint is importable.
    """
    if backend is None:
        backend = "flint" if _flint is not None else "native"
    if backend == "flint" and not (f.is_zero() or g.is_zero()):
        n = max(f.nvars(), g.nvars())
        ctx = _flint_ctx(n)
        h = _from_flint(_to_flint(f, ctx, n).gcd(_to_flint(g, ctx, n)))
        return h if h.lc() > 0 else -h
    return _native_gcd(f, g)


def _native_gcd(f: Poly, g: Poly) -> Poly:
    if f.is_zero():
        return g if g.lc() >= 0 else -g
    if g.is_zero():
        return f if f.lc() >= 0 else -f
    if f.is_const() or g.is_const():
        return Poly.const(math.gcd(f.content(), g.content()))
    if f == g:
        return f if f.lc() > 0 else -f
    mf, mg = f.monomial_content(), g.monomial_content()
    m = _trim([min(a, b) for a, b in zip(mf, mg)])
    if mf:
        f = f.quo_monomial(mf)
    if mg:
        g = g.quo_monomial(mg)
    vf, vg = f.variables(), g.variables()
    # variables private to one side only contribute through content in them
    for v in sorted(vf - vg):
        f = _gcd_many(list(f.coeffs_in(v).values()))
    vf = f.variables()
    for v in sorted(vg - vf):
        g = _gcd_many(list(g.coeffs_in(v).values()))
    if f.is_const() or g.is_const():
        h = Poly.const(math.gcd(f.content(), g.content()))
    else:
        try:
            h = _heu_gcd(f, g)
        except HeuristicGCDFailed:
            h = _prs_gcd(f, g)
    return h.mul_monomial(m) if m else h


# ---------------------------------------------------------------------------
# rational functions

_GCD_THRESHOLD = 512


def set_gcd_threshold(n: int) -> None:
    global _GCD_THRESHOLD
    _GCD_THRESHOLD = int(n)


def get_gcd_threshold() -> int:
    return _GCD_THRESHOLD


def _normalize(num: Poly, den: Poly, full: bool | None = None) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise PoleError("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    if den.is_const():
        c = den.const_value()
        g = math.gcd(num.content(), c)
        if c < 0:
            g = -g
        return num.quo_int(g), Poly.const(c // g)
    if num == den:
        return ONE, ONE
    mn, md = num.monomial_content(), den.monomial_content()
    if mn and md:
        m = _trim([min(a, b) for a, b in zip(mn, md)])
        if m:
            num, den = num.quo_monomial(m), den.quo_monomial(m)
    if full is None:
        full = len(num) + len(den) > _GCD_THRESHOLD
    if full and not (den.is_monomial() and num.is_monomial()):
        if _flint is not None:
            num, den = _flint_reduce(num, den)
        else:
            g = _native_gcd(num, den)
            if not g.is_const():
                num, den = _exq(num, g), _exq(den, g)
    g = math.gcd(num.content(), den.content())
    if den.lc() < 0:
        g = -g
    if g != 1:
        num, den = num.quo_int(g), den.quo_int(g)
    return num, den


class RF:
    """Element of Q(x) as a normalized fraction of integer polynomials.

    Equality is decided by cross-multiplication, so callers never depend on
    the fraction being fully reduced.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int = 0, den: Poly | int = 1, *, full_gcd: bool | None = None):
        if isinstance(num, int):
            num = Poly.const(num)
        if isinstance(den, int):
            den = Poly.const(den)
        self.num, self.den = _normalize(num, den, full_gcd)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RF":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def gen(cls, vid: int) -> "RF":
        return cls._raw(Poly.gen(vid), ONE)

    @classmethod
    def const(cls, c) -> "RF":
        c = Fraction(c)
        return cls(Poly.const(c.numerator), Poly.const(c.denominator))

    @classmethod
    def coerce(cls, x) -> "RF":
        if isinstance(x, RF):
            return x
        if isinstance(x, Poly):
            return cls._raw(x, ONE)
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RF")

    def reduced(self) -> "RF":
        """Fully reduced form (multivariate gcd regardless of size)."""
        return RF(self.num, self.den, full_gcd=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_const() and abs(self.den.const_value()) == 1

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return Fraction(self.num.const_value(), self.den.const_value())

    def variables(self) -> set[int]:
        return self.num.variables() | self.den.variables()

    # arithmetic
    def __add__(self, other):
        try:
            o = RF.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero():
            return o
        if o.num.is_zero():
            return self
        if self.den == o.den:
            return RF(self.num + o.num, self.den)
        if o.den.is_const() and self.den.is_const():
            return RF(self.num * o.den + o.num * self.den, self.den * o.den)
        return RF(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RF._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = RF.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RF.coerce(other) - self

    def __mul__(self, other):
        try:
            o = RF.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RF()
        # cross cancel the cheap cases
        if self.den == o.num:
            return RF(self.num, o.den)
        if o.den == self.num:
            return RF(o.num, self.den)
        return RF(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RF.coerce(other)
        except TypeError:
            return NotImplemented
        if o.num.is_zero():
            raise PoleError("division by the zero rational function")
        return self * RF._raw(o.den, o.num) if o.num.lc() > 0 else self * RF._raw(-o.den, -o.num)

    def __rtruediv__(self, other):
        return RF.coerce(other) / self

    def __pow__(self, n: int):
        if n >= 0:
            return RF._raw(self.num**n, self.den**n)
        if self.num.is_zero():
            raise PoleError("negative power of zero")
        return RF(self.den ** (-n), self.num ** (-n))

    def __eq__(self, other):
        try:
            o = RF.coerce(other)
        except TypeError:
            return NotImplemented
        return rf_eq(self, o)

    __hash__ = None  # type: ignore[assignment]

    # evaluation
    def evaluate(self, point: Mapping[int, object]):
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleError(f"pole: denominator {self.den.to_text()} vanishes")
        n = self.num.evaluate(point)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def diff(self, vid: int) -> "RF":
        dn, dd = self.num.diff(vid), self.den.diff(vid)
        if dd.is_zero():
            return RF(dn, self.den)
        return RF(dn * self.den - self.num * dd, self.den * self.den)

    # rendering
    def to_text(self) -> str:
        if self.den == ONE:
            return self.num.to_text()
        n, d = self.num.to_text(), self.den.to_text()
        if len(self.num) > 1:
            n = f"({n})"
        if len(self.den) > 1 or not self.den.is_monomial() or self.den.lc() != 1:
            d = f"({d})"
        return f"{n}/{d}"

    def to_latex(self) -> str:
        if self.den == ONE:
            return self.num.to_latex()
        return rf"\frac{{{self.num.to_latex()}}}{{{self.den.to_latex()}}}"

    def to_struct(self) -> dict:
        return {"num": self.num.to_struct(), "den": self.den.to_struct()}

    @classmethod
    def from_struct(cls, data: Mapping) -> "RF":
        return cls(Poly.from_struct(data["num"]), Poly.from_struct(data["den"]))

    def __repr__(self):
        return f"RF({self.to_text()})"

    __str__ = to_text


# ---------------------------------------------------------------------------
# operation-level API

_PRIME = (1 << 61) - 1


def _mod_eval(p: Poly, point: Mapping[int, int]) -> int:
    total = 0
    for e, c in p.terms.items():
        v = c
        for k, x in enumerate(e):
            if x:
                v = v * pow(point[k], x, _PRIME) % _PRIME
        total += v
    return total % _PRIME


def rf_eq(a: RF, b: RF) -> bool:
    """Field equality via cross-multiplication.

    A random modular evaluation rejects most unequal pairs before the
    full products are formed; acceptance always uses the exact products.
    """
    if a.num == b.num and a.den == b.den:
        return True
    if a.num.is_zero() or b.num.is_zero():
        return a.num.is_zero() and b.num.is_zero()
    rng = random.Random(len(a.num) * 7919 + len(b.den))
    vs = a.variables() | b.variables()
    pt = {v: rng.randrange(2, _PRIME - 1) for v in vs}
    lhs = _mod_eval(a.num, pt) * _mod_eval(b.den, pt) % _PRIME
    rhs = _mod_eval(b.num, pt) * _mod_eval(a.den, pt) % _PRIME
    if lhs != rhs:
        return False
    return a.num * b.den == b.num * a.den


def rf_arith(op: str, a: RF, b: RF | None = None) -> RF:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def _subst_poly(p: Poly, images: Mapping[int, RF]) -> tuple[Poly, dict[int, int]]:
    """Numerator of p(images) over the common denominator prod D_v^deg_v(p)."""
    degs: dict[int, int] = {}
    for e in p.terms:
        for k, x in enumerate(e):
            if x and k in images and x > degs.get(k, 0):
                degs[k] = x
    dens = {k: images[k].den for k in degs if not images[k].den == ONE}
    npow: dict[tuple[int, int], Poly] = {}
    dpow: dict[tuple[int, int], Poly] = {}

    def _pw(cache, base, k, x):
        key = (k, x)
        v = cache.get(key)
        if v is None:
            v = cache[key] = base**x
        return v

    total: dict[tuple, int] = {}
    acc = Poly()
    for e, c in p.terms.items():
        rest = []
        factor: Poly | None = None
        for k, x in enumerate(e):
            if k in degs:
                if x:
                    t = _pw(npow, images[k].num, k, x)
                    factor = t if factor is None else factor * t
                if k in dens and degs[k] - x:
                    t = _pw(dpow, dens[k], k, degs[k] - x)
                    factor = t if factor is None else factor * t
                rest.append(0)
            else:
                rest.append(x)
        for k in dens:
            if k >= len(e):
                t = _pw(dpow, dens[k], k, degs[k])
                factor = t if factor is None else factor * t
        mono = _trim(rest)
        if factor is None:
            total[mono] = total.get(mono, 0) + c
        else:
            acc = acc + factor.mul_monomial(mono, c)
    if total:
        acc = acc + Poly({e: c for e, c in total.items() if c}, True)
    return acc, {k: degs[k] for k in dens}


def rf_substitute(target: RF, assignment: Mapping[int, RF]) -> RF:
    """Simultaneous substitution of rational functions for variables."""
    images = {k: RF.coerce(v) for k, v in assignment.items()}
    images = {k: v for k, v in images.items() if not (v.den == ONE and v.num == Poly.gen(k))}
    if not images:
        return target
    n, dn = _subst_poly(target.num, images)
    d, dd = _subst_poly(target.den, images)
    if d.is_zero():
        raise PoleError("denominator vanishes identically after substitution")
    # result = (n / prod D^dn) / (d / prod D^dd)
    num, den = n, d
    for k in set(dn) | set(dd):
        diff = dd.get(k, 0) - dn.get(k, 0)
        if diff > 0:
            num = num * images[k].den**diff
        elif diff < 0:
            den = den * images[k].den ** (-diff)
    return RF(num, den)


def rf_eval(target: RF, point: Mapping[int, object]):
    """Exact value at a rational point (floats are accepted and stay floats)."""
    pt = {k: (Fraction(v) if isinstance(v, (int, str)) else v) for k, v in point.items()}
    return target.evaluate(pt)
