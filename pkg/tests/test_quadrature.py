import numpy as np
import pytest

from solidangle.exceptions import QuadratureError
from solidangle.quadrature import QuadratureConfig, adaptive_simpson


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_cubics_are_exact(degree):
    r = adaptive_simpson(lambda x: x**degree, -1.0, 2.0, tol=1e-12)
    expected = (2.0 ** (degree + 1) - (-1.0) ** (degree + 1)) / (degree + 1)
    assert r.value == pytest.approx(expected, abs=1e-13)


def test_smooth_periodic_integrand():
    r = adaptive_simpson(lambda t: np.exp(np.cos(t)), 0.0, 2 * np.pi, tol=1e-12)
    # 2*pi*I0(1)
    assert r.value == pytest.approx(2 * np.pi * 1.2660658777520082, abs=1e-11)
    assert r.error <= 1e-12


def test_empty_interval():
    r = adaptive_simpson(np.sin, 1.0, 1.0)
    assert (r.value, r.evaluations) == (0.0, 0)


def test_reversed_interval_changes_sign():
    fwd = adaptive_simpson(np.exp, 0.0, 1.0, tol=1e-12).value
    back = adaptive_simpson(np.exp, 1.0, 0.0, tol=1e-12).value
    assert back == pytest.approx(-fwd, abs=1e-12)


def test_nonconvergence_raises():
    with pytest.raises(QuadratureError, match="did not converge"):
        adaptive_simpson(lambda x: np.sin(1.0 / x), 1e-4, 1.0, tol=1e-14, max_level=4)


def test_config_defaults():
    q = QuadratureConfig()
    assert (q.tol, q.max_level, q.corner_eps) == (1e-9, 20, 1e-7)
