"""Differential systems with affine Weyl group symmetry.

Families: A_even(n) on A(1)_{2n} (SP4 at n = 1), A_odd(n) on A(1)_{2n+1}
(P_V at n = 1), and P2 for psi.  Symbolic right-hand sides live in
Q(alpha; f) and feed the equivariance proofs; numeric integration goes
through the kernels in ``_kernels``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, TextIO

import numpy as np

from . import _kernels
from .birep import GroupWord, Representation, apply_word, pushforward
from .latticedyn import DP2Params, a1l_representation, dp2_step
from .report import Report
from .rootdata import rotation
from .symfield import RF, PoleError, rf_eq

__all__ = [
    "FlowSpec",
    "Trajectory",
    "symbolic_rhs",
    "vector_field",
    "rk4_integrate",
    "derivation",
    "verify_derivation_equivariance",
    "verify_first_integrals",
    "verify_displayed_systems",
    "point_action",
    "backlund_flow_commutation",
    "p2_backlund",
    "p2_backlund_commutation",
    "verify_p2_elimination",
    "self_convergence",
    "ContinuumReport",
    "continuum_limit_experiment",
    "trajectory_to_csv",
]

FAMILIES = ("A_even", "A_odd", "P2")


@dataclass(frozen=True)
class FlowSpec:
    """Family tag, size parameter n and parameter values.

    For A_even / A_odd, ``alpha`` has length 2n+1 / 2n+2 and delta is the
    sum of the alpha_j.  For P2 only ``b1`` is used (b0 = 1 - b1).
    """

    family: str
    n: int = 1
    alpha: tuple = ()
    b1: float = 0.5

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family != "P2":
            if self.n < 1:
                raise ValueError("n must be >= 1")
            if len(self.alpha) != self.size:
                raise ValueError(f"{self.family}({self.n}) needs {self.size} alpha values, got {len(self.alpha)}")

    @classmethod
    def a_even(cls, n: int, alpha: Sequence) -> "FlowSpec":
        return cls("A_even", n, tuple(alpha))

    @classmethod
    def a_odd(cls, n: int, alpha: Sequence, delta=None) -> "FlowSpec":
        if delta is not None and abs(delta - sum(alpha)) > 1e-12 * max(1.0, abs(delta)):
            raise ValueError("A_odd needs alpha_0 + ... + alpha_{2n+1} = delta")
        return cls("A_odd", n, tuple(alpha))

    @classmethod
    def sp4(cls, alpha: Sequence) -> "FlowSpec":
        return cls.a_even(1, alpha)

    @classmethod
    def pv(cls, alpha: Sequence) -> "FlowSpec":
        return cls.a_odd(1, alpha)

    @classmethod
    def p2(cls, b1: float) -> "FlowSpec":
        return cls("P2", 1, (), b1)

    @property
    def size(self) -> int:
        if self.family == "A_even":
            return 2 * self.n + 1
        if self.family == "A_odd":
            return 2 * self.n + 2
        return 2

    @property
    def l(self) -> int:
        return self.size - 1

    @property
    def delta(self):
        return sum(self.alpha)

    @property
    def b0(self):
        return 1 - self.b1

    @property
    def code(self) -> int:
        return {"A_even": _kernels.EVEN, "A_odd": _kernels.ODD, "P2": _kernels.P2}[self.family]

    def params(self) -> np.ndarray:
        if self.family == "P2":
            return np.array([float(self.b1)])
        a = [float(x) for x in self.alpha]
        return np.array(a + [float(sum(a))])

    def with_alpha(self, alpha: Sequence) -> "FlowSpec":
        return FlowSpec(self.family, self.n, tuple(alpha), self.b1)

    def label(self) -> str:
        return "P2" if self.family == "P2" else f"{self.family}({self.n})"


# ---------------------------------------------------------------------------
# symbolic right-hand sides


def symbolic_rhs(family: str, n: int, rep: Representation | None = None) -> tuple[RF, ...]:
    """D(f_j) for the family, as elements of Q(alpha; f) of A(1)_l."""
    size = 2 * n + 1 if family == "A_even" else 2 * n + 2
    if family not in ("A_even", "A_odd"):
        raise ValueError("symbolic right-hand sides exist for A_even and A_odd")
    rep = rep or a1l_representation(size - 1)
    if rep.size != size:
        raise ValueError("representation size does not match the family")
    f, a = rep.f, rep.alpha
    m = size
    out = []
    if family == "A_even":
        for j in range(m):
            s = RF()
            for r in range(1, n + 1):
                s = s + f[(j + 2 * r - 1) % m] - f[(j + 2 * r) % m]
            out.append(f[j] * s + a[j])
        return tuple(out)
    delta = RF()
    for x in a:
        delta = delta + x
    half = RF.const(Fraction(1, 2))
    for j in range(m):
        cub = RF()
        for r in range(1, n + 1):
            for s in range(r, n + 1):
                cub = cub + f[(j + 2 * r - 1) % m] * f[(j + 2 * s) % m] - f[(j + 2 * r) % m] * f[(j + 2 * s + 1) % m]
        asum = RF()
        fsum = RF()
        for r in range(1, n + 1):
            asum = asum + a[(j + 2 * r) % m]
            fsum = fsum + f[(j + 2 * r) % m]
        out.append(f[j] * cub + (delta * half - asum) * f[j] + a[j] * fsum)
    return tuple(out)


def derivation(rhs: Sequence[RF], rep: Representation):
    """D on Q(alpha; f): D(alpha) = 0, D(f_j) = rhs[j], Leibniz rule."""

    def D(g: RF) -> RF:
        total = RF()
        for vid, r in zip(rep.f_ids, rhs):
            if vid in g.variables():
                total = total + g.diff(vid) * r
        return total

    return D


def verify_derivation_equivariance(family: str, n: int) -> Report:
    """D(s_i(g)) = s_i(D(g)) for every generator g, every s_i and pi."""
    size = 2 * n + 1 if family == "A_even" else 2 * n + 2
    rep = a1l_representation(size - 1)
    rhs = symbolic_rhs(family, n, rep)
    D = derivation(rhs, rep)
    report = Report(f"derivation equivariance {family}({n}) on A1_{size - 1}")
    letters: list = list(range(size)) + [rotation(rep.A, 1)]
    gens = rep.generators()
    for x in letters:
        st = apply_word(rep, GroupWord((x,)))
        xname = f"s{x}" if isinstance(x, int) else str(x)
        for name, g in gens:
            lhs = D(pushforward(st, g))
            rhs_val = pushforward(st, D(g))
            ok = rf_eq(lhs, rhs_val)
            report.add(f"D {xname}({name}) = {xname} D({name})", ok, "" if ok else f"{lhs.reduced()} vs {rhs_val.reduced()}")
    return report


def verify_first_integrals(family: str, n: int) -> Report:
    """Linear integral of A_even; the two exponential sums of A_odd."""
    size = 2 * n + 1 if family == "A_even" else 2 * n + 2
    rep = a1l_representation(size - 1)
    rhs = symbolic_rhs(family, n, rep)
    delta = sum(rep.alpha, RF())
    report = Report(f"first integrals {family}({n})")
    if family == "A_even":
        report.add("(sum f_j)' = delta", rf_eq(sum(rhs, RF()), delta))
        return report
    half = delta * RF.const(Fraction(1, 2))
    for parity in (0, 1):
        idx = range(parity, size, 2)
        lhs = sum((rhs[j] for j in idx), RF())
        s = sum((rep.f[j] for j in idx), RF())
        report.add(f"(sum f_{{2r+{parity}}})' = (delta/2) sum f_{{2r+{parity}}}", rf_eq(lhs, half * s))
    return report


def verify_displayed_systems() -> Report:
    """The general formulas against the explicitly written n = 1, 2 systems."""
    report = Report("family formulas versus the explicit low-rank systems")
    rep = a1l_representation(2)
    f, a = rep.f, rep.alpha
    sp4 = [f[0] * (f[1] - f[2]) + a[0], f[1] * (f[2] - f[0]) + a[1], f[2] * (f[0] - f[1]) + a[2]]
    got = symbolic_rhs("A_even", 1, rep)
    for j in range(3):
        report.add(f"SP4 line {j}", rf_eq(got[j], sp4[j]))
    rep = a1l_representation(4)
    f, a = rep.f, rep.alpha
    got = symbolic_rhs("A_even", 2, rep)
    for j in range(5):
        g = [f[(j + k) % 5] for k in range(5)]
        want = g[0] * (g[1] - g[2] + g[3] - g[4]) + a[j]
        report.add(f"A1_4 system line {j}", rf_eq(got[j], want))
    rep = a1l_representation(3)
    f, a = rep.f, rep.alpha
    d = a[0] + a[1] + a[2] + a[3]
    h = RF.const(Fraction(1, 2))
    pv = [
        f[0] * (f[1] * f[2] - f[2] * f[3]) + (d * h - a[2]) * f[0] + a[0] * f[2],
        f[1] * (f[2] * f[3] - f[3] * f[0]) + (d * h - a[3]) * f[1] + a[1] * f[3],
        f[2] * (f[3] * f[0] - f[0] * f[1]) + (d * h - a[0]) * f[2] + a[2] * f[0],
        f[3] * (f[0] * f[1] - f[1] * f[2]) + (d * h - a[1]) * f[3] + a[3] * f[1],
    ]
    got = symbolic_rhs("A_odd", 1, rep)
    for j in range(4):
        report.add(f"P_V line {j}", rf_eq(got[j], pv[j]))
    return report


# ---------------------------------------------------------------------------
# numerics


def vector_field(spec: FlowSpec, x: float, f, backend: str | None = None) -> np.ndarray:
    f = np.asarray(f, dtype=np.float64)
    if f.shape != (spec.size,):
        raise ValueError(f"{spec.label()} needs a state of length {spec.size}, got shape {f.shape}")
    return _kernels.eval_rhs(spec.code, x, f, spec.params(), spec.n, backend)


@dataclass
class Trajectory:
    """Uniform samples x_k = x0 + k * step; ``diagnostic`` is set on truncation."""

    spec: FlowSpec
    x: np.ndarray
    y: np.ndarray
    step: float
    diagnostic: str = ""

    @property
    def complete(self) -> bool:
        return not self.diagnostic

    @property
    def end(self) -> np.ndarray:
        return self.y[-1]

    def __len__(self):
        return len(self.x)


def rk4_integrate(spec: FlowSpec, initial, x_range: tuple[float, float], step: float, backend: str | None = None) -> Trajectory:
    x0, x1 = map(float, x_range)
    if not step > 0:
        raise ValueError("step must be positive")
    y0 = np.asarray(initial, dtype=np.float64)
    if y0.shape != (spec.size,):
        raise ValueError(f"{spec.label()} needs a state of length {spec.size}")
    if not np.all(np.isfinite(y0)):
        raise ValueError("initial state is not finite")
    steps = int(round((x1 - x0) / step))
    if steps < 1 or abs(x0 + steps * step - x1) > 1e-9 * max(1.0, abs(x1)):
        raise ValueError("the x-range must be a positive whole number of steps")
    ys, count = _kernels.rk4(spec.code, y0, x0, step, steps, spec.params(), spec.n, backend)
    xs = x0 + step * np.arange(count)
    diag = ""
    if count < steps + 1:
        diag = f"non-finite value at step {count} (x = {x0 + count * step:.6g})"
    return Trajectory(spec, xs, ys[:count].copy(), step, diag)


def trajectory_to_csv(traj: Trajectory, out: TextIO | str | None = None, drift: bool = False) -> str:
    """Columns x, y0..y{d-1}; with ``drift`` an extra column sum_f - (sum_f(0) + delta x)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    d = traj.y.shape[1]
    names = ["psi", "dpsi"] if traj.spec.family == "P2" else [f"f{j}" for j in range(d)]
    w.writerow(["x"] + names + (["drift"] if drift else []))
    s0 = traj.y[0].sum()
    delta = float(traj.spec.delta) if traj.spec.family != "P2" else 0.0
    for x, row in zip(traj.x, traj.y):
        cells = [repr(float(x))] + [repr(float(v)) for v in row]
        if drift:
            cells.append(repr(float(row.sum() - (s0 + delta * (x - traj.x[0])))))
        w.writerow(cells)
    text = buf.getvalue()
    if isinstance(out, str):
        with open(out, "w", newline="") as fh:
            fh.write(text)
    elif out is not None:
        out.write(text)
    return text


def self_convergence(spec: FlowSpec, initial, x_range, step: float, backend: str | None = None) -> float:
    """|y_h - y_{h/2}| / |y_{h/2} - y_{h/4}| at the right endpoint (16 for order 4)."""
    ends = [rk4_integrate(spec, initial, x_range, step / 2**k, backend).end for k in range(3)]
    return float(np.max(np.abs(ends[0] - ends[1])) / np.max(np.abs(ends[1] - ends[2])))


# ---------------------------------------------------------------------------
# Backlund transformations on numeric values


def point_action(x, alpha: Sequence[float], f: Sequence[float], rep: Representation) -> tuple[list, list]:
    """Values of x(alpha_j), x(f_j) at the point (alpha, f)."""
    n = rep.size
    alpha, f = list(alpha), list(f)
    if isinstance(x, int):
        if f[x] == 0:
            raise PoleError(f"f{x} = 0 under s{x}")
        ai = alpha[x]
        ratio = ai / f[x]
        new_a = [(-ai if j == x else alpha[j] - rep.A[x, j] * ai) for j in range(n)]
        new_f = [f[j] + ratio * float(rep.U[x, j].const_value()) for j in range(n)]
        return new_a, new_f
    return [alpha[x(j)] for j in range(n)], [f[x(j)] for j in range(n)]


def backlund_flow_commutation(spec: FlowSpec, which, initial, x_range, step: float, backend: str | None = None) -> float:
    """max_x |w(flow_x(p)) - flow_x(w(p))| for w = s_i (int) or "pi"."""
    if spec.family == "P2":
        raise ValueError("use p2_backlund_commutation for P2")
    rep = a1l_representation(spec.l)
    x = rotation(rep.A, 1) if which in ("pi", "p") else int(which)
    alpha = [float(a) for a in spec.alpha]
    a2, f2 = point_action(x, alpha, initial, rep)
    t1 = rk4_integrate(spec, initial, x_range, step, backend)
    t2 = rk4_integrate(spec.with_alpha(a2), f2, x_range, step, backend)
    if not (t1.complete and t2.complete):
        raise PoleError(t1.diagnostic or t2.diagnostic)
    dev = 0.0
    for row1, row2 in zip(t1.y, t2.y):
        _, img = point_action(x, alpha, row1, rep)
        dev = max(dev, float(np.max(np.abs(np.array(img) - row2))))
    return dev


def p2_backlund(psi: float, dpsi: float, x: float, which: str, b0: float, b1: float) -> float:
    """r_0(psi) = psi - 2 b0/(psi' - psi^2 + x), r_1(psi) = psi - 2 b1/(psi' + psi^2 - x)."""
    if which == "r0":
        den = dpsi - psi * psi + x
        b = b0
    elif which == "r1":
        den = dpsi + psi * psi - x
        b = b1
    else:
        raise ValueError("which must be 'r0' or 'r1'")
    if b == 0:
        return psi
    if den == 0:
        raise PoleError(f"{which} denominator vanishes at x = {x}")
    return psi - 2 * b / den


def _p2_transform(y, x, which, b0, b1):
    psi, dpsi = float(y[0]), float(y[1])
    b = b0 if which == "r0" else b1
    sgn = -1.0 if which == "r0" else 1.0
    den = dpsi + sgn * (psi * psi - x)
    ddpsi = 2 * psi**3 - 2 * x * psi - 2 * b1 + 1
    dden = ddpsi + sgn * (2 * psi * dpsi - 1)
    new = p2_backlund(psi, dpsi, x, which, b0, b1)
    return np.array([new, dpsi + 2 * b * dden / (den * den)])


def _p2_params(which, b0, b1):
    # A(1)_1 reflections on (b0, b1)
    if which == "r0":
        return -b0, b1 + 2 * b0
    return b0 + 2 * b1, -b1


def p2_backlund_commutation(b1: float, which: str, initial, x_range, step: float, backend: str | None = None) -> float:
    """Transform-then-integrate against integrate-then-transform for P2."""
    b0 = 1 - b1
    x0 = float(x_range[0])
    t1 = rk4_integrate(FlowSpec.p2(b1), initial, x_range, step, backend)
    nb0, nb1 = _p2_params(which, b0, b1)
    t2 = rk4_integrate(FlowSpec.p2(nb1), _p2_transform(initial, x0, which, b0, b1), x_range, step, backend)
    if not (t1.complete and t2.complete):
        raise PoleError(t1.diagnostic or t2.diagnostic)
    dev = 0.0
    for x, a, b in zip(t1.x, t1.y, t2.y):
        dev = max(dev, abs(_p2_transform(a, x, which, b0, b1)[0] - b[0]))
    return dev


def verify_p2_elimination() -> Report:
    """Eliminating phi_0, phi_1 from the intermediate system gives P2.

    With p = phi_0 + phi_1: psi' = 2p - psi^2 + x and
    p' = 2 p psi + a0 + a1 - 1, so psi'' = 2p' - 2 psi psi' + 1; substituting
    p = (psi' + psi^2 - x)/2 must give 2 psi^3 - 2 x psi - 2 b1 + 1 with
    b1 = 1 - a0 - a1.
    """
    from .symfield import var

    psi, dpsi, x, a0, a1 = (RF.gen(var(nm)) for nm in ("psi", "dpsi", "x", "pa0", "pa1"))
    half = RF.const(Fraction(1, 2))
    p = (dpsi + psi * psi - x) * half
    dp = p * psi * 2 + a0 + a1 - 1
    dd = dp * 2 - psi * dpsi * 2 + 1
    b1 = 1 - a0 - a1
    want = psi * psi * psi * 2 - x * psi * 2 - b1 * 2 + 1
    report = Report("P2 from the intermediate continuum system")
    report.add("psi'' = 2 psi^3 - 2 x psi - 2 b1 + 1", rf_eq(dd, want))
    return report


# ---------------------------------------------------------------------------
# continuum limit dP_II -> P2


@dataclass
class ContinuumRun:
    eps: float
    x: np.ndarray
    psi_disc: np.ndarray
    psi_ode: np.ndarray
    error: float
    initial: tuple[float, float]


@dataclass
class ContinuumReport:
    runs: list[ContinuumRun]
    ratio: float
    params: dict = field(default_factory=dict)
    matching: str = ""

    def to_text(self) -> str:
        lines = ["== dP_II -> P2 continuum limit =="]
        for k, v in self.params.items():
            lines.append(f"  {k}: {v}")
        lines.append(f"  matching: {self.matching}")
        for r in self.runs:
            lines.append(f"  eps = {r.eps:g}: steps = {len(r.x) - 1}, max|psi_disc - psi_ode| = {r.error:.6e}")
        lines.append(f"  error ratio = {self.ratio:.4f}")
        return "\n".join(lines)

    def to_struct(self) -> dict:
        return {
            "params": self.params,
            "matching": self.matching,
            "runs": [{"eps": r.eps, "steps": len(r.x) - 1, "max_error": r.error, "initial": list(r.initial)} for r in self.runs],
            "ratio": self.ratio,
        }


def _continuum_run(eps, a0, a1, b1, x0, length, psi0, dpsi0, matching, backend, substeps=20) -> ContinuumRun:
    d = eps**3
    p = DP2Params(2.0, -1 + eps**2 * x0 + d * a0, 1 - eps**2 * x0 + d * a1, d * b1)
    steps = int(round(length / eps))
    phi = (dpsi0 + psi0 * psi0 - x0) / 4
    f0 = 1 + eps * psi0 + eps**2 * phi
    f1 = 1 - eps * psi0 + eps**2 * phi
    seq = [(f0, f1)]
    for n in range(steps):
        seq.append(dp2_step(seq[-1], p, n, 1))
    arr = np.array(seq)
    psi_disc = (arr[:, 0] - arr[:, 1]) / (2 * eps)
    xs = x0 + eps * np.arange(steps + 1)
    if matching == "construct":
        init = (psi0, dpsi0)
    elif matching == "fd":
        back = dp2_step(seq[0], p, 0, -1)
        psi_m = (back[0] - back[1]) / (2 * eps)
        init = (psi_disc[0], (psi_disc[1] - psi_m) / (2 * eps))
    else:
        raise ValueError("matching must be 'construct' or 'fd'")
    traj = rk4_integrate(FlowSpec.p2(b1), init, (x0, x0 + steps * eps), eps / substeps, backend)
    if not traj.complete:
        raise PoleError(f"P2 trajectory: {traj.diagnostic}")
    psi_ode = traj.y[::substeps, 0]
    err = float(np.max(np.abs(psi_disc - psi_ode)))
    return ContinuumRun(eps, xs, psi_disc, psi_ode, err, tuple(map(float, init)))


def continuum_limit_experiment(
    eps: float = 0.1,
    a0: float = 0.3,
    a1: float = 0.1,
    b1: float = 0.6,
    x0: float = 0.0,
    length: float = 1.0,
    psi0: float = 0.1,
    dpsi0: float = 0.0,
    matching: str = "fd",
    backend: str | None = None,
) -> ContinuumReport:
    """Run dP_II at eps and eps/2 with delta = eps^3, compare with P2.

    ``matching="construct"`` builds f0[0], f1[0] from (psi0, dpsi0) with
    phi_0 = phi_1 and starts P2 from the same pair; ``"fd"`` starts P2 from
    psi_disc(0) and a central difference of psi_disc around n = 0.
    """
    if not 0 < eps <= 0.2:
        raise ValueError("eps must lie in (0, 0.2]")
    if abs(a0 + a1 + b1 - 1) > 1e-12:
        raise ValueError("needs a0 + a1 + b1 = 1")
    runs = [
        _continuum_run(e, a0, a1, b1, x0, length, psi0, dpsi0, matching, backend) for e in (eps, eps / 2)
    ]
    ratio = runs[0].error / runs[1].error if runs[1].error else math.inf
    params = {"a0": a0, "a1": a1, "b1": b1, "c": 2, "x-window": f"[{x0}, {x0 + length}]", "psi0": psi0, "dpsi0": dpsi0}
    desc = {
        "construct": "f0[0], f1[0] built from (psi0, dpsi0) with phi0 = phi1; P2 starts from (psi0, dpsi0)",
        "fd": "P2 starts from psi_disc(0) and its central difference over n = -1, 1",
    }[matching]
    return ContinuumReport(runs, ratio, params, desc)
