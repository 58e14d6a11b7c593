import math

import numpy as np
import pytest

from qlcst.errors import NonFinite, ZeroSignal
from qlcst.generators import gen_signal
from qlcst.lct import validate_param
from qlcst.qlcst import qlcst_forward, sandwich_phase
from qlcst.signal import Grid1D, Grid2D, QSignal2D
from qlcst.uncertainty import (digamma, digamma_constant, heisenberg_report,
                               lemma_41_gap, log_uncertainty_report,
                               spatial_dispersion, spatial_log_moment,
                               spectral_dispersion)
from qlcst.window import fixed_gaussian

FOURIER = validate_param(0, 1, -1, 0)
EULER_GAMMA = 0.5772156649015329


def test_digamma_reference_points():
    assert abs(digamma(1.0) + EULER_GAMMA) < 1e-12
    assert abs(digamma(0.5) - (-EULER_GAMMA - 2.0 * math.log(2.0))) < 1e-12
    # recurrence psi(x+1) = psi(x) + 1/x
    assert abs(digamma(1.5) - digamma(0.5) - 2.0) < 1e-12
    for x in (0.1, 0.7, 3.2, 25.0):
        assert abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12


def test_digamma_against_external_oracle():
    scipy_special = pytest.importorskip("scipy.special")
    for x in (0.5, 1.0, 1.31, 2.7, 8.0, 40.0):
        assert abs(digamma(x) - scipy_special.digamma(x)) < 1e-12


def test_digamma_rejects_nonpositive():
    with pytest.raises(ValueError):
        digamma(0.0)


def test_digamma_constant_value():
    ref = -EULER_GAMMA - 2.0 * math.log(2.0) - math.log(2.0)
    assert abs(digamma_constant() - ref) < 1e-10
    assert abs(digamma_constant() - (-2.6566572066)) < 1e-9


def unit_gaussian(grid):
    """pi^{-1/2} e^{-|x|^2/2}, unit L2 norm."""
    f = gen_signal("gaussian", grid)
    return QSignal2D(f.data / math.sqrt(math.pi), grid)


def test_spatial_dispersion_gaussian_moments():
    g = Grid2D.centered(8.0, 64)
    f = unit_gaussian(g)
    assert abs(spatial_dispersion(f, 1) - 0.5) < 1e-6
    assert abs(spatial_dispersion(f, 2) - 0.5) < 1e-6
    shifted = gen_signal("shifted-gaussian", g, center=(2.0, 0.0))
    shifted = QSignal2D(shifted.data / math.sqrt(math.pi), g)
    assert abs(spatial_dispersion(shifted, 1) - 4.5) < 1e-5
    assert abs(spatial_dispersion(shifted, 2) - 0.5) < 1e-5


def test_spatial_dispersion_impulse_at_origin():
    # grid with a sample exactly at the origin so the impulse sits at x = 0
    ax = Grid1D(9, -4.0, 1.0)
    g = Grid2D(ax, ax)
    f = gen_signal("impulse", g)
    assert spatial_dispersion(f, 1) == 0.0
    assert spatial_dispersion(f, 2) == 0.0


def test_spectral_dispersion_zero():
    g = Grid2D.centered(8.0, 8)
    zero = QSignal2D(np.zeros(g.shape + (4,)), g)
    c = qlcst_forward(zero, fixed_gaussian(1, 1), FOURIER, FOURIER)
    assert spectral_dispersion(c, 1) == 0.0


def test_spectral_dispersion_tail_coverage():
    """Doubling the w-grid extent changes the value only marginally.

    The signal is sampled at dx = 0.25 so both w grids stay inside the
    alias-free range pi/dx of the quadrature.
    """
    g = Grid2D.centered(8.0, 64)
    f = gen_signal("gaussian", g)
    win = fixed_gaussian(1, 1)
    ug = Grid2D.centered(8.0, 16)
    c1 = qlcst_forward(f, win, FOURIER, FOURIER, ugrid=ug,
                       wgrid=Grid2D.centered(2.0 * math.pi, 32))
    c2 = qlcst_forward(f, win, FOURIER, FOURIER, ugrid=ug,
                       wgrid=Grid2D.centered(4.0 * math.pi, 64))
    v1 = spectral_dispersion(c1, 1)
    v2 = spectral_dispersion(c2, 1)
    assert abs(v1 - v2) / v2 < 1e-6


def test_spatial_log_moment_origin_guard():
    ax = Grid1D(9, -4.0, 1.0)  # includes x = 0 exactly
    g = Grid2D(ax, ax)
    f = gen_signal("impulse", g)
    with pytest.raises(NonFinite):
        spatial_log_moment(f)


def test_heisenberg_gaussian():
    g = Grid2D.centered(8.0, 24)
    f = gen_signal("gaussian", g)
    rep = heisenberg_report(f, fixed_gaussian(1, 1), FOURIER, FOURIER, 1)
    assert rep.ratio > 1.0
    assert rep.lhs == pytest.approx(math.sqrt(rep.spectral * rep.spatial))


def test_heisenberg_scale_invariance():
    g = Grid2D.centered(8.0, 16)
    f = gen_signal("gaussian", g)
    win = fixed_gaussian(1, 1)
    r1 = heisenberg_report(f, win, FOURIER, FOURIER, 1)
    f2 = QSignal2D(2.0 * f.data, g)
    r2 = heisenberg_report(f2, win, FOURIER, FOURIER, 1)
    assert abs(r1.ratio - r2.ratio) < 1e-10


def test_heisenberg_zero_signal():
    g = Grid2D.centered(8.0, 8)
    zero = QSignal2D(np.zeros(g.shape + (4,)), g)
    with pytest.raises(ZeroSignal):
        heisenberg_report(zero, fixed_gaussian(1, 1), FOURIER, FOURIER, 1)


def test_log_uncertainty_gaussian_family():
    g = Grid2D.centered(8.0, 24)
    win = fixed_gaussian(1, 1)
    for a in (0.5, 1.0, 2.0):
        f = gen_signal("dilated-gaussian", g, a=a)
        rep = log_uncertainty_report(f, win, FOURIER, FOURIER)
        assert rep.gap >= 0.0


def test_reports_invariant_under_right_phase():
    """f -> f * exp(mu2 theta) leaves |f| and both report magnitudes alone."""
    g = Grid2D.centered(8.0, 16)
    f = gen_signal("gaussian", g)
    rot = sandwich_phase(f, np.zeros(g.axis1.n), np.full(g.axis2.n, 0.9))
    win = fixed_gaussian(1, 1)
    r0 = heisenberg_report(f, win, FOURIER, FOURIER, 1)
    r1 = heisenberg_report(rot, win, FOURIER, FOURIER, 1)
    assert abs(r0.spatial - r1.spatial) < 1e-12
    assert abs(r0.ratio - r1.ratio) < 1e-10


def test_lemma41_zero_signal():
    g = Grid2D.centered(8.0, 8)
    zero = QSignal2D(np.zeros(g.shape + (4,)), g)
    assert lemma_41_gap(zero, fixed_gaussian(1, 1), FOURIER, FOURIER, 1) == 0.0


def test_lemma41_gaussian_small():
    g = Grid2D.centered(8.0, 16)
    f = gen_signal("gaussian", g)
    assert lemma_41_gap(f, fixed_gaussian(1, 1), FOURIER, FOURIER, 1) < 5e-3
