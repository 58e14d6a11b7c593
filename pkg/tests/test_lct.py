import math

import numpy as np
import pytest

from qlcst.errors import DeterminantError, ZeroBError
from qlcst.lct import (KernelSpec, kernel_const, kernel_eval, parse_matrix,
                       validate_param)
from qlcst.quaternion import qmul, qnorm
from qlcst.signal import Grid1D


def test_fourier_case_label():
    m = validate_param(0, 1, -1, 0)
    assert m.label == "fourier/S-transform case"


def test_determinant_rejected():
    with pytest.raises(DeterminantError):
        validate_param(1, 1, 1, 1)


def test_zero_b_rejected():
    with pytest.raises(ZeroBError):
        validate_param(1, 0, 0, 1)


def test_parse_matrix():
    m = parse_matrix("0,1,-1,0")
    assert (m.a, m.b, m.c, m.d) == (0.0, 1.0, -1.0, 0.0)
    with pytest.raises(ValueError):
        parse_matrix("1,2,3")


def test_kernel_at_origin_fourier():
    m = validate_param(0, 1, -1, 0)
    got = kernel_eval(KernelSpec(m, 1), 0.0, 0.0)
    assert np.allclose(got, [0.2820947918, -0.2820947918, 0, 0], atol=1e-9)


def test_kernel_fresnel_point():
    # phase at x=u=1 for (1,1,0,1): 1/2 - 1 + 1/2 - pi/4 = -pi/4
    m = validate_param(1, 1, 0, 1)
    got = kernel_eval(KernelSpec(m, 2), 1.0, 1.0)
    assert np.allclose(got, [0.2820947918, 0, -0.2820947918, 0], atol=1e-9)


@pytest.mark.parametrize("abcd", [(0, 1, -1, 0), (1, 2, 0, 1), (1, -1, 2, -1)])
def test_kernel_unimodular(abcd):
    m = validate_param(*abcd)
    rng = np.random.default_rng(4)
    x = rng.uniform(-5, 5, 100)
    u = rng.uniform(-5, 5, 100)
    mags = qnorm(kernel_eval(KernelSpec(m, 1), x, u))
    assert np.allclose(mags, kernel_const(m), rtol=1e-12)


def test_fourier_phase_convention():
    """(0,1,-1,0) kernel equals (1/sqrt(2 pi)) exp(-mu (x u + pi/4))."""
    m = validate_param(0, 1, -1, 0)
    rng = np.random.default_rng(5)
    x = rng.uniform(-3, 3, 50)
    u = rng.uniform(-3, 3, 50)
    got = kernel_eval(KernelSpec(m, 1), x, u)
    theta = -(x * u + math.pi / 4.0)
    want = np.zeros(x.shape + (4,))
    want[..., 0] = np.cos(theta)
    want[..., 1] = np.sin(theta)
    want /= math.sqrt(2.0 * math.pi)
    assert np.allclose(got, want, atol=1e-12)


@pytest.mark.parametrize("abcd", [(0, 1, -1, 0), (1, 2, 0, 1)])
def test_discrete_delta_identity(abcd):
    """sum_x Kinv(u',x) K(x,u) dx concentrates on u = u' (A = D matrices,
    where the swapped-argument inverse kernel inverts the forward one).

    Gaussian-windowed comparison on a 64-point grid: every off-diagonal entry
    stays below 10 * diagonal / N.
    """
    m = validate_param(*abcd)
    n = 64
    axis = Grid1D.centered(8.0, n)
    # matched transform-domain axis so the x-sum realizes the delta
    du = 2.0 * math.pi * abs(m.b) / (n * axis.spacing)
    uaxis = Grid1D(n, -0.5 * (n - 1) * du, du)
    x = axis.points
    u = uaxis.points
    fwd = kernel_eval(KernelSpec(m, 1), x[:, None], u[None, :])
    inv = kernel_eval(KernelSpec(m, 1, "inverse"), x[:, None], u[None, :])
    # wide Gaussian window in x regularizes the truncated oscillatory sum
    win = np.exp(-x * x / (2.0 * 64.0))[:, None, None, None]
    # delta[k, l] ~ sum_x Kinv(u_k, x) win(x) K(x, u_l) dx
    prod = qmul(inv[:, :, None, :], fwd[:, None, :, :]) * win
    delta = qnorm(prod.sum(axis=0) * axis.spacing)
    diag = np.diag(delta)
    off = delta - np.diag(diag)
    assert off.max() < 10.0 * diag.max() / n


def test_inverse_kernel_is_conjugate_when_a_equals_d():
    """For A = D the swapped-argument inverse kernel is the exact conjugate."""
    m = validate_param(0, 1, -1, 0)
    rng = np.random.default_rng(6)
    x = rng.uniform(-3, 3, 20)
    u = rng.uniform(-3, 3, 20)
    fwd = kernel_eval(KernelSpec(m, 1), x, u)
    inv = kernel_eval(KernelSpec(m, 1, "inverse"), x, u)
    conj = fwd.copy()
    conj[..., 1:] *= -1.0
    assert np.allclose(inv, conj, atol=1e-12)
