"""Numeric vector fields and the fixed-step RK4 loop.

Two interchangeable implementations: numba-compiled scalar loops, and a
vectorized numpy path.  ``WEYLCREMONA_NUMBA=0`` (or a missing numba)
selects numpy.  Family codes: 0 = A_even(n), 1 = A_odd(n), 2 = P2.
"""

from __future__ import annotations

import os

import numpy as np

EVEN, ODD, P2 = 0, 1, 2

try:
    if os.environ.get("WEYLCREMONA_NUMBA", "1").strip().lower() in ("0", "false", "no", "off"):
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False

DEFAULT_BACKEND = "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy


def _np_even(f, alpha, n):
    s = np.zeros_like(f)
    for r in range(1, n + 1):
        s += np.roll(f, 1 - 2 * r) - np.roll(f, -2 * r)
    return f * s + alpha


def _np_odd(f, alpha, n, delta):
    R = [np.roll(f, -k) for k in range(2 * n + 2)]
    Ra = [np.roll(alpha, -k) for k in range(2 * n + 1)]
    cub = np.zeros_like(f)
    c1 = np.zeros_like(f)
    c2 = np.zeros_like(f)
    for s in range(1, n + 1):
        c1 = c1 + R[2 * s - 1]
        c2 = c2 + R[2 * s]
        cub += c1 * R[2 * s] - c2 * R[(2 * s + 1) % (2 * n + 2)]
    asum = np.zeros_like(f)
    fsum = np.zeros_like(f)
    for r in range(1, n + 1):
        asum += Ra[2 * r]
        fsum += R[2 * r]
    return f * cub + (0.5 * delta - asum) * f + alpha * fsum


def _np_p2(x, y, b1):
    return np.array([y[1], 2.0 * y[0] ** 3 - 2.0 * x * y[0] - 2.0 * b1 + 1.0])


def _np_rhs(code, x, y, params, n):
    if code == EVEN:
        return _np_even(y, params[:-1], n)
    if code == ODD:
        return _np_odd(y, params[:-1], n, params[-1])
    return _np_p2(x, y, params[0])


def _np_rk4(code, y0, x0, h, steps, params, n):
    out = np.empty((steps + 1, y0.shape[0]))
    out[0] = y0
    y = y0.copy()
    x = x0
    # blow-up is reported through the returned count, not as warnings
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(steps):
            k1 = _np_rhs(code, x, y, params, n)
            k2 = _np_rhs(code, x + 0.5 * h, y + 0.5 * h * k1, params, n)
            k3 = _np_rhs(code, x + 0.5 * h, y + 0.5 * h * k2, params, n)
            k4 = _np_rhs(code, x + h, y + h * k3, params, n)
            y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            x = x0 + (k + 1) * h
            if not np.all(np.isfinite(y)):
                return out, k + 1
            out[k + 1] = y
    return out, steps + 1


# ---------------------------------------------------------------------------
# numba


def _nb_rhs_py(code, x, y, params, n, out):
    m = y.shape[0]
    if code == 0:
        for j in range(m):
            s = 0.0
            for r in range(1, n + 1):
                s += y[(j + 2 * r - 1) % m] - y[(j + 2 * r) % m]
            out[j] = y[j] * s + params[j]
    elif code == 1:
        delta = params[m]
        for j in range(m):
            cub = 0.0
            c1 = 0.0
            c2 = 0.0
            for s in range(1, n + 1):
                c1 += y[(j + 2 * s - 1) % m]
                c2 += y[(j + 2 * s) % m]
                cub += c1 * y[(j + 2 * s) % m] - c2 * y[(j + 2 * s + 1) % m]
            asum = 0.0
            fsum = 0.0
            for r in range(1, n + 1):
                asum += params[(j + 2 * r) % m]
                fsum += y[(j + 2 * r) % m]
            out[j] = y[j] * cub + (0.5 * delta - asum) * y[j] + params[j] * fsum
    else:
        out[0] = y[1]
        out[1] = 2.0 * y[0] ** 3 - 2.0 * x * y[0] - 2.0 * params[0] + 1.0


def _nb_rk4_py(code, y0, x0, h, steps, params, n):
    m = y0.shape[0]
    out = np.empty((steps + 1, m))
    out[0, :] = y0
    y = y0.copy()
    k1 = np.empty(m)
    k2 = np.empty(m)
    k3 = np.empty(m)
    k4 = np.empty(m)
    tmp = np.empty(m)
    x = x0
    for k in range(steps):
        rhs(code, x, y, params, n, k1)
        for j in range(m):
            tmp[j] = y[j] + 0.5 * h * k1[j]
        rhs(code, x + 0.5 * h, tmp, params, n, k2)
        for j in range(m):
            tmp[j] = y[j] + 0.5 * h * k2[j]
        rhs(code, x + 0.5 * h, tmp, params, n, k3)
        for j in range(m):
            tmp[j] = y[j] + h * k3[j]
        rhs(code, x + h, tmp, params, n, k4)
        finite = True
        for j in range(m):
            y[j] = y[j] + (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j])
            if not np.isfinite(y[j]):
                finite = False
        x = x0 + (k + 1) * h
        if not finite:
            return out, k + 1
        out[k + 1, :] = y
    return out, steps + 1


if HAVE_NUMBA:
    rhs = njit(cache=True)(_nb_rhs_py)
    _nb_rk4 = njit(cache=True)(_nb_rk4_py)
else:  # pragma: no cover
    rhs = _nb_rhs_py
    _nb_rk4 = None


def resolve_backend(backend: str | None) -> str:
    backend = backend or DEFAULT_BACKEND
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is unavailable or disabled")
    return backend


def eval_rhs(code: int, x: float, y: np.ndarray, params: np.ndarray, n: int, backend: str | None = None) -> np.ndarray:
    backend = resolve_backend(backend)
    y = np.ascontiguousarray(y, dtype=np.float64)
    params = np.ascontiguousarray(params, dtype=np.float64)
    if backend == "numpy":
        return _np_rhs(code, float(x), y, params, n)
    out = np.empty_like(y)
    rhs(code, float(x), y, params, n, out)
    return out


def rk4(code: int, y0, x0: float, h: float, steps: int, params, n: int, backend: str | None = None):
    """Fixed-step RK4; returns (samples, count).  count < steps + 1 means a
    non-finite value appeared at step ``count`` and later rows are unset."""
    backend = resolve_backend(backend)
    y0 = np.ascontiguousarray(y0, dtype=np.float64)
    params = np.ascontiguousarray(params, dtype=np.float64)
    if backend == "numpy":
        return _np_rk4(code, y0, float(x0), float(h), int(steps), params, n)
    return _nb_rk4(code, y0, float(x0), float(h), int(steps), params, n)
