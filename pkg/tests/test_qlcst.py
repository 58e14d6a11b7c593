import math

import numpy as np
import pytest

from qlcst.errors import (AdmissibilityError, BadParameter, DegenerateAngle,
                          ZeroSignal)
from qlcst.generators import gen_signal, random_hermite_combo
from qlcst.lct import KernelSpec, kernel_eval, validate_param
from qlcst.qlct import qlct_fast_forward, qlct_forward
from qlcst.qlcst import (covariance_residuals, energy_identity_gap,
                         marginal_qlct_gap, orthogonality_form,
                         qlcst_forward, qlcst_forward_windowfn,
                         qlcst_pointwise_inverse, qlcst_reconstruct,
                         shift_signal, special_case_matrix)
from qlcst.quaternion import qconj, qmul, qnorm
from qlcst.signal import Grid2D, QSignal2D, fft_output_grid, relative_l2
from qlcst.window import (constant_window, fixed_gaussian, lambda_psi,
                          s_gaussian, window_eval)

FOURIER = validate_param(0, 1, -1, 0)


def grid(n=16, extent=8.0):
    return Grid2D.centered(extent, n)


def test_constant_window_reduces_to_qlct():
    g = grid()
    f = gen_signal("gaussian", g)
    c = qlcst_forward(f, constant_window(), FOURIER, FOURIER)
    q = qlct_fast_forward(f, FOURIER, FOURIER)
    for i in (0, 7, 15):
        for j in (0, 8, 15):
            assert relative_l2(c.data[i, j], q.data) < 1e-10


def test_zero_signal_zero_coefficients():
    g = grid(8)
    zero = QSignal2D(np.zeros(g.shape + (4,)), g)
    c = qlcst_forward(zero, fixed_gaussian(1, 1), FOURIER, FOURIER)
    assert np.all(c.data == 0.0)


def test_brute_force_oracle_points():
    """Coefficients match an independent per-point quadrature at 5 (u, w)."""
    g = grid(12)
    f = gen_signal("gaussian", g)
    win = fixed_gaussian(1, 1)
    c = qlcst_forward(f, win, FOURIER, FOURIER)
    x1 = g.axis1.points
    x2 = g.axis2.points
    rng = np.random.default_rng(20)
    for _ in range(5):
        iu1, iu2 = rng.integers(0, g.axis1.n, 2)
        iw1, iw2 = rng.integers(0, c.wgrid.axis1.n, 2)
        u = (c.ugrid.axis1.points[iu1], c.ugrid.axis2.points[iu2])
        w = (c.wgrid.axis1.points[iw1], c.wgrid.axis2.points[iw2])
        k1 = kernel_eval(KernelSpec(FOURIER, 1), x1, np.full_like(x1, w[0]))
        k2 = kernel_eval(KernelSpec(FOURIER, 2), x2, np.full_like(x2, w[1]))
        psi = window_eval(win, (u[0] - x1[:, None], u[1] - x2[None, :]), w)
        term = qmul(qmul(k1[:, None], qmul(f.data, qconj(psi))), k2[None, :])
        want = term.reshape(-1, 4).sum(axis=0) * g.cell
        got = c.data[iu1, iu2, iw1, iw2]
        assert np.linalg.norm(got - want) / np.linalg.norm(want) < 1e-10


def test_generic_path_matches_separable():
    """The quaternion-ordered O(n^6) path agrees with the matrix-product path."""
    g = grid(8)
    f = gen_signal("gaussian", g)
    win = fixed_gaussian(1, 1)
    c = qlcst_forward(f, win, FOURIER, FOURIER)

    def fn(x1, x2, u, w):
        return window_eval(win, (u[0] - x1, u[1] - x2), w)

    generic = qlcst_forward_windowfn(f, fn, FOURIER, FOURIER, c.ugrid, c.wgrid)
    assert relative_l2(generic, c.data) < 1e-12


def test_x_only_window_product_identity():
    """With a window depending only on x, the coefficients coincide with the
    QLCT of the pointwise product f(x) * G(u - x) at each u."""
    g = grid(8)
    f = gen_signal("gaussian", g)
    wgrid = fft_output_grid(g, 1.0, 1.0)

    def gamma(x1, x2):
        return np.exp(-((x1 + 0.3) ** 2 + x2 * x2) / 4.0)

    def fn(x1, x2, u, w):
        out = np.zeros(np.broadcast(x1, x2).shape + (4,))
        out[..., 0] = gamma(u[0] - x1, u[1] - x2)
        return out

    c = qlcst_forward_windowfn(f, fn, FOURIER, FOURIER, g, wgrid)
    x1 = g.axis1.points[:, None]
    x2 = g.axis2.points[None, :]
    for iu1, iu2 in [(0, 0), (3, 5), (7, 2)]:
        u = (g.axis1.points[iu1], g.axis2.points[iu2])
        masked = QSignal2D(f.data * gamma(u[0] - x1, u[1] - x2)[..., None], g)
        want = qlct_forward(masked, FOURIER, FOURIER, wgrid)
        assert relative_l2(c[iu1, iu2], want.data) < 1e-10


def test_pointwise_inverse_constant_window():
    g = grid(24)
    f = gen_signal("gaussian", g)
    c = qlcst_forward(f, constant_window(), FOURIER, FOURIER)
    rec = qlcst_pointwise_inverse(c, (0, 0), g)
    assert relative_l2(rec.data, f.data) < 1e-6


def test_pointwise_inverse_masked_product():
    g = grid(24)
    f = gen_signal("gaussian", g)
    win = fixed_gaussian(1, 1)
    c = qlcst_forward(f, win, FOURIER, FOURIER)
    iu = (g.axis1.n // 2, g.axis2.n // 2)
    u = (g.axis1.points[iu[0]], g.axis2.points[iu[1]])
    rec = qlcst_pointwise_inverse(c, iu, g)
    x1 = g.axis1.points[:, None]
    x2 = g.axis2.points[None, :]
    psi = window_eval(win, (u[0] - x1, u[1] - x2), (1.0, 1.0))
    want = qmul(f.data, qconj(psi))
    assert relative_l2(rec.data, want) < 1e-5


def test_reconstruct_roundtrip_small():
    g = grid(16)
    f = gen_signal("gaussian", g)
    c = qlcst_forward(f, fixed_gaussian(1, 1), FOURIER, FOURIER)
    rec = qlcst_reconstruct(c)
    assert relative_l2(rec.data, f.data) < 1e-3


def test_reconstruct_zero_coefficients():
    g = grid(8)
    zero = QSignal2D(np.zeros(g.shape + (4,)), g)
    c = qlcst_forward(zero, fixed_gaussian(1, 1), FOURIER, FOURIER)
    assert np.all(qlcst_reconstruct(c).data == 0.0)


def test_reconstruct_rejects_adaptive_window():
    g = grid(8)
    f = gen_signal("gaussian", g)
    c = qlcst_forward(f, s_gaussian(), FOURIER, FOURIER)
    with pytest.raises(AdmissibilityError):
        qlcst_reconstruct(c)


def test_orthogonality_zero_partner():
    g = grid(8)
    f = gen_signal("gaussian", g)
    zero = QSignal2D(np.zeros(g.shape + (4,)), g)
    win = fixed_gaussian(1, 1)
    cf = qlcst_forward(f, win, FOURIER, FOURIER)
    cz = qlcst_forward(zero, win, FOURIER, FOURIER)
    assert float(qnorm(orthogonality_form(cf, cz))) == 0.0


def test_energy_identity_and_scale_invariance():
    g = grid(16)
    f = gen_signal("gaussian", g)
    win = fixed_gaussian(1, 1)
    c = qlcst_forward(f, win, FOURIER, FOURIER)
    gap = energy_identity_gap(c, f)
    assert gap < 1e-3
    f2 = QSignal2D(2.0 * f.data, g)
    c2 = qlcst_forward(f2, win, FOURIER, FOURIER)
    assert abs(energy_identity_gap(c2, f2) - gap) < 1e-12


def test_energy_identity_hermite_combo():
    g = grid(24)
    f = random_hermite_combo(g, seed=5)
    c = qlcst_forward(f, fixed_gaussian(1, 1), FOURIER, FOURIER)
    assert energy_identity_gap(c, f) < 5e-3


def test_energy_identity_zero_signal():
    g = grid(8)
    zero = QSignal2D(np.zeros(g.shape + (4,)), g)
    c = qlcst_forward(zero, fixed_gaussian(1, 1), FOURIER, FOURIER)
    with pytest.raises(ZeroSignal):
        energy_identity_gap(c, zero)


def test_marginal_zero_signal_guarded():
    g = grid(8)
    zero = QSignal2D(np.zeros(g.shape + (4,)), g)
    c = qlcst_forward(zero, s_gaussian(), FOURIER, FOURIER)
    assert marginal_qlct_gap(c, zero, FOURIER, FOURIER) == 0.0


def test_covariance_small():
    g = grid(24)
    f = gen_signal("gaussian", g)
    rep = covariance_residuals(f, fixed_gaussian(1, 1), FOURIER, FOURIER,
                               alpha=(2.0 * g.axis1.spacing, 0.0), s=(1.0, 1.0))
    assert rep.parity < 1e-10
    assert rep.shift < 5e-3
    assert rep.modulation_best < 1e-2


def test_shift_signal():
    g = grid(8)
    f = gen_signal("gaussian", g)
    shifted = shift_signal(f, (g.axis1.spacing, 0.0))
    assert np.allclose(shifted.data[1:], f.data[:-1])
    assert np.all(shifted.data[0] == 0.0)
    with pytest.raises(BadParameter):
        shift_signal(f, (0.4 * g.axis1.spacing, 0.0))


def test_special_case_matrices():
    m1, m2 = special_case_matrix("stockwell")
    assert (m1.a, m1.b, m1.c, m1.d) == (0.0, 1.0, -1.0, 0.0)
    assert m1 == m2
    f1, _ = special_case_matrix("fractional", math.pi / 2)
    assert abs(f1.a) < 1e-12 and abs(f1.b - 1.0) < 1e-12
    fr, _ = special_case_matrix("fresnel", 2.0)
    assert (fr.a, fr.b, fr.c, fr.d) == (1.0, 2.0, 0.0, 1.0)
    with pytest.raises(DegenerateAngle):
        special_case_matrix("fractional", 0.0)
    with pytest.raises(DegenerateAngle):
        special_case_matrix("fractional", math.pi)
    with pytest.raises(BadParameter):
        special_case_matrix("fresnel", 0.0)
    with pytest.raises(BadParameter):
        special_case_matrix("unknown")


def test_real_scalar_linearity():
    g = grid(8)
    rng = np.random.default_rng(21)
    f = QSignal2D(rng.standard_normal(g.shape + (4,)), g)
    h = QSignal2D(rng.standard_normal(g.shape + (4,)), g)
    win = fixed_gaussian(1, 1)
    comb = QSignal2D(0.6 * f.data - 1.2 * h.data, g)
    lhs = qlcst_forward(comb, win, FOURIER, FOURIER).data
    rhs = (0.6 * qlcst_forward(f, win, FOURIER, FOURIER).data
           - 1.2 * qlcst_forward(h, win, FOURIER, FOURIER).data)
    assert relative_l2(lhs, rhs) < 1e-12
