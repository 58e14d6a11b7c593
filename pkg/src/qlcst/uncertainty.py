"""Dispersion functionals and the Heisenberg-type / logarithmic inequalities.

All reports are "compute both sides by quadrature" objects; nothing is proved
symbolically.  The lower-bound constant of the Heisenberg check uses |B_s| as
the per-axis factor, matching the transform-domain scaling of the underlying
canonical-transform inequality.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFinite, ZeroSignal
from .quaternion import qnormsq
from .signal import fft_output_grid
from .window import lambda_psi
from .qlcst import qlcst_forward, qlcst_pointwise_inverse

# Bernoulli numbers B_2 .. B_14 for the asymptotic digamma tail.
_BERNOULLI = (1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
              5.0 / 66, -691.0 / 2730, 7.0 / 6)


def digamma(x):
    """Digamma via the shift recurrence and the asymptotic series.

    Valid for x > 0; accuracy well below 1e-12 after shifting to x >= 12.
    """
    if x <= 0.0:
        raise ValueError("digamma implemented for positive arguments only")
    acc = 0.0
    while x < 12.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for n, b2n in enumerate(_BERNOULLI, start=1):
        tail += b2n / (2.0 * n) * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - tail


def digamma_constant():
    """psi(1/2) - ln 2, the constant of the logarithmic lower bound."""
    return digamma(0.5) - math.log(2.0)


def _axis_sq(grid, s):
    x1 = grid.axis1.points
    x2 = grid.axis2.points
    if s == 1:
        return (x1 * x1)[:, None] * np.ones((1, grid.axis2.n))
    if s == 2:
        return np.ones((grid.axis1.n, 1)) * (x2 * x2)[None, :]
    raise ValueError("axis must be 1 or 2")


def spatial_dispersion(f, s):
    """Second moment integral x_s^2 |f|^2 dx."""
    return float(np.sum(_axis_sq(f.grid, s) * qnormsq(f.data)) * f.grid.cell)


def spectral_dispersion(C, s):
    """Second moment integral w_s^2 |C|^2 over the full (u, w) domain."""
    mag = qnormsq(C.data)
    if s == 1:
        wsq = (C.wgrid.axis1.points ** 2)[None, None, :, None]
    elif s == 2:
        wsq = (C.wgrid.axis2.points ** 2)[None, None, None, :]
    else:
        raise ValueError("axis must be 1 or 2")
    return float(np.sum(mag * wsq) * C.cell4)


def spatial_log_moment(f):
    """Integral of ln|x| |f(x)|^2 dx with |x| the planar radius."""
    x1 = f.grid.axis1.points[:, None]
    x2 = f.grid.axis2.points[None, :]
    r = np.hypot(x1, x2)
    with np.errstate(divide="ignore"):
        vals = np.log(r) * qnormsq(f.data)
    out = float(np.sum(vals) * f.grid.cell)
    if not math.isfinite(out):
        raise NonFinite("ln|x| quadrature hit a grid point at the origin")
    return out


def spectral_log_moment(C):
    """Integral of ln|w| |C|^2 over the full (u, w) domain."""
    w1 = C.wgrid.axis1.points[None, None, :, None]
    w2 = C.wgrid.axis2.points[None, None, None, :]
    r = np.hypot(w1, w2)
    with np.errstate(divide="ignore"):
        vals = np.log(r) * qnormsq(C.data)
    out = float(np.sum(vals) * C.cell4)
    if not math.isfinite(out):
        raise NonFinite("ln|w| quadrature hit a grid point at the origin")
    return out


@dataclass
class DispersionReport:
    axis: int
    spatial: float
    spectral: float
    lhs: float
    rhs: float
    ratio: float


@dataclass
class LogUncertaintyReport:
    spectral_log: float
    spatial_log: float
    bound: float
    gap: float


def _coefficients(f, window, m1, m2, coeffs):
    if coeffs is not None:
        return coeffs
    return qlcst_forward(f, window, m1, m2)


def heisenberg_report(f, window, m1, m2, s, coeffs=None):
    """Both sides of the dispersion-product inequality for axis s.

    lhs = sqrt(spectral) * sqrt(spatial); rhs = |B_s| * sqrt(lam)/2 * ||f||^2.
    """
    energy = f.energy()
    if energy == 0.0:
        raise ZeroSignal("uncertainty report undefined for the zero signal")
    C = _coefficients(f, window, m1, m2, coeffs)
    lam = lambda_psi(window).lam
    spatial = spatial_dispersion(f, s)
    spectral = spectral_dispersion(C, s)
    bs = abs((m1 if s == 1 else m2).b)
    lhs = math.sqrt(spectral) * math.sqrt(spatial)
    rhs = bs * math.sqrt(lam) / 2.0 * energy
    return DispersionReport(s, spatial, spectral, lhs, rhs, lhs / rhs)


def log_uncertainty_report(f, window, m1, m2, coeffs=None):
    """Both sides of the logarithmic inequality; gap = lhs - bound."""
    energy = f.energy()
    if energy == 0.0:
        raise ZeroSignal("uncertainty report undefined for the zero signal")
    C = _coefficients(f, window, m1, m2, coeffs)
    lam = lambda_psi(window).lam
    spectral_log = spectral_log_moment(C)
    spatial_log = lam * spatial_log_moment(f)
    bound = digamma_constant() * lam * energy
    return LogUncertaintyReport(spectral_log, spatial_log, bound,
                                spectral_log + spatial_log - bound)


def lemma_41_gap(f, window, m1, m2, s):
    """Relative gap of the moment identity
    lam * integral x_s^2 |f|^2 dx  vs  the (u, x) double integral of
    x_s^2 |inverse-QLCT of the w-slice|^2.
    """
    energy = f.energy()
    if energy == 0.0:
        return 0.0
    C = qlcst_forward(f, window, m1, m2, ugrid=f.grid,
                      wgrid=fft_output_grid(f.grid, m1.b, m2.b))
    lam = lambda_psi(window).lam
    lhs = lam * spatial_dispersion(f, s)
    xsq = _axis_sq(f.grid, s)
    acc = 0.0
    for iu1 in range(C.ugrid.axis1.n):
        for iu2 in range(C.ugrid.axis2.n):
            rec = qlcst_pointwise_inverse(C, (iu1, iu2), f.grid)
            acc += float(np.sum(xsq * qnormsq(rec.data)))
    rhs = acc * f.grid.cell * C.ugrid.cell
    return abs(lhs - rhs) / abs(lhs)
