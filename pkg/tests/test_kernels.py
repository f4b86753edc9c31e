import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcremona import _kernels as K

pytestmark = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba disabled")

CASES = [
    (K.EVEN, 1, [0.3, 0.5, 0.7, 1.5], [0.4, 0.6, 0.8]),
    (K.EVEN, 3, [0.1] * 7 + [0.7], [0.3 + 0.1 * j for j in range(7)]),
    (K.ODD, 1, [0.2, 0.3, 0.4, 0.5, 1.4], [0.4, 0.6, 0.8, 0.5]),
    (K.ODD, 2, [0.1] * 6 + [0.6], [0.3 + 0.05 * j for j in range(6)]),
    (K.P2, 1, [0.6], [0.2, 0.1]),
]


@pytest.mark.parametrize("code, n, params, y0", CASES)
def test_rk4_backends_agree(code, n, params, y0):
    a, ca = K.rk4(code, y0, 0.0, 1e-3, 500, params, n, "numpy")
    b, cb = K.rk4(code, y0, 0.0, 1e-3, 500, params, n, "numba")
    assert ca == cb == 501
    assert np.allclose(a, b, rtol=1e-13, atol=1e-13)


@settings(max_examples=30)
@given(st.integers(1, 3), st.data())
def test_even_rhs_backends_agree(n, data):
    m = 2 * n + 1
    y = np.array(data.draw(st.lists(st.floats(-3, 3), min_size=m, max_size=m)))
    a = data.draw(st.lists(st.floats(-1, 1), min_size=m, max_size=m))
    params = np.array(a + [sum(a)])
    assert np.allclose(K.eval_rhs(K.EVEN, 0.0, y, params, n, "numpy"), K.eval_rhs(K.EVEN, 0.0, y, params, n, "numba"))


@settings(max_examples=30)
@given(st.integers(1, 3), st.data())
def test_odd_rhs_backends_agree(n, data):
    m = 2 * n + 2
    y = np.array(data.draw(st.lists(st.floats(-3, 3), min_size=m, max_size=m)))
    a = data.draw(st.lists(st.floats(-1, 1), min_size=m, max_size=m))
    params = np.array(a + [sum(a)])
    assert np.allclose(K.eval_rhs(K.ODD, 0.0, y, params, n, "numpy"), K.eval_rhs(K.ODD, 0.0, y, params, n, "numba"))


def test_non_finite_truncation_matches():
    for backend in ("numpy", "numba"):
        _, count = K.rk4(K.P2, [3.0, 5.0], 0.0, 0.01, 500, [0.5], 1, backend)
        assert count < 501


def test_unknown_backend():
    with pytest.raises(ValueError):
        K.resolve_backend("cuda")


def test_env_flag_selects_numpy():
    env = dict(os.environ, WEYLCREMONA_NUMBA="0")
    code = "from weylcremona import _kernels as K; print(K.HAVE_NUMBA, K.DEFAULT_BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "numpy"]
