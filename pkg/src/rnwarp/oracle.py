"""Brute-force curvature from raw metric components by finite differences.

Given nothing but a coordinate chart (a callable returning the symmetric
4x4 metric matrix at a point), this module builds Christoffel symbols,
the Ricci tensor and the scalar curvature numerically. It shares no
algebra with the closed-form geometry modules and therefore acts as the
independent referee for them.

Sign conventions: R_ab = d_c Gamma^c_ab - d_a Gamma^c_cb
+ Gamma^c_cd Gamma^d_ab - Gamma^c_ad Gamma^d_cb, fixed so that the round
2-sphere has R_thth = +1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import calculus
from .errors import DomainError, SingularMetricError

# The connection-derivative stage works on a mesh this many times wider
# than the inner metric-derivative step: the curvature assembly amplifies
# second-derivative noise by the metric's dynamic range, and the wider
# mesh rebalances that against truncation, which the Richardson
# combination in _hess_matrix has already pushed to sixth order.
# Calibrated on the interior charts of this package; see tests.
OUTER_STEP_FACTOR = 20.0

_DET_FLOOR = 1e-12


@dataclass(frozen=True)
class MetricField:
    """A coordinate chart: names, metric component function, domain predicate.

    g maps a 4-point (array-like of 4 floats) to the symmetric 4x4 matrix
    of metric components; domain_check returns True where the chart is
    valid. g must be symmetric to 1e-14 and invertible
    (|det| > 1e-12 * scale^4) everywhere domain_check passes.
    coord_scales gives the characteristic magnitude of each coordinate
    (e.g. the mass for length-like coordinates, 1 for angles); default
    differencing steps are proportional to it, which keeps the engine's
    accuracy independent of the choice of units.
    """

    coord_names: tuple[str, str, str, str]
    g: Callable[[np.ndarray], np.ndarray]
    domain_check: Callable[[np.ndarray], bool] = field(default=lambda x: True)
    coord_scales: tuple[float, float, float, float] = (1.0, 1.0, 1.0, 1.0)


@dataclass(frozen=True)
class CurvaturePoint:
    """Connection and curvature data at one point.

    christoffel[a, b, c] = Gamma^a_bc (symmetric in b, c); ricci is the
    symmetric covariant Ricci matrix; scalar its trace with the inverse
    metric.
    """

    point: np.ndarray
    christoffel: np.ndarray
    ricci: np.ndarray
    scalar: float


def invert4(g: np.ndarray) -> np.ndarray:
    """Inverse of a 4x4 matrix by cofactor expansion with a pivot check.

    The dimension is fixed and tiny, so the adjugate over 2x2 minors is
    both exact in structure and faster than general linear algebra.
    Raises SingularMetricError when |det| <= 1e-12 * scale^4.
    """
    a = np.asarray(g, dtype=float)
    # 2x2 minors of rows (0,1) and rows (2,3)
    s0 = a[0, 0] * a[1, 1] - a[1, 0] * a[0, 1]
    s1 = a[0, 0] * a[1, 2] - a[1, 0] * a[0, 2]
    s2 = a[0, 0] * a[1, 3] - a[1, 0] * a[0, 3]
    s3 = a[0, 1] * a[1, 2] - a[1, 1] * a[0, 2]
    s4 = a[0, 1] * a[1, 3] - a[1, 1] * a[0, 3]
    s5 = a[0, 2] * a[1, 3] - a[1, 2] * a[0, 3]
    c5 = a[2, 2] * a[3, 3] - a[3, 2] * a[2, 3]
    c4 = a[2, 1] * a[3, 3] - a[3, 1] * a[2, 3]
    c3 = a[2, 1] * a[3, 2] - a[3, 1] * a[2, 2]
    c2 = a[2, 0] * a[3, 3] - a[3, 0] * a[2, 3]
    c1 = a[2, 0] * a[3, 2] - a[3, 0] * a[2, 2]
    c0 = a[2, 0] * a[3, 1] - a[3, 0] * a[2, 1]
    det = s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0
    scale = float(np.max(np.abs(a)))
    if abs(det) <= _DET_FLOOR * scale ** 4:
        raise SingularMetricError(f"metric determinant {det!r} below pivot floor")
    inv = np.empty((4, 4))
    inv[0, 0] = a[1, 1] * c5 - a[1, 2] * c4 + a[1, 3] * c3
    inv[0, 1] = -a[0, 1] * c5 + a[0, 2] * c4 - a[0, 3] * c3
    inv[0, 2] = a[3, 1] * s5 - a[3, 2] * s4 + a[3, 3] * s3
    inv[0, 3] = -a[2, 1] * s5 + a[2, 2] * s4 - a[2, 3] * s3
    inv[1, 0] = -a[1, 0] * c5 + a[1, 2] * c2 - a[1, 3] * c1
    inv[1, 1] = a[0, 0] * c5 - a[0, 2] * c2 + a[0, 3] * c1
    inv[1, 2] = -a[3, 0] * s5 + a[3, 2] * s2 - a[3, 3] * s1
    inv[1, 3] = a[2, 0] * s5 - a[2, 2] * s2 + a[2, 3] * s1
    inv[2, 0] = a[1, 0] * c4 - a[1, 1] * c2 + a[1, 3] * c0
    inv[2, 1] = -a[0, 0] * c4 + a[0, 1] * c2 - a[0, 3] * c0
    inv[2, 2] = a[3, 0] * s4 - a[3, 1] * s2 + a[3, 3] * s0
    inv[2, 3] = -a[2, 0] * s4 + a[2, 1] * s2 - a[2, 3] * s0
    inv[3, 0] = -a[1, 0] * c3 + a[1, 1] * c1 - a[1, 2] * c0
    inv[3, 1] = a[0, 0] * c3 - a[0, 1] * c1 + a[0, 2] * c0
    inv[3, 2] = -a[3, 0] * s3 + a[3, 1] * s1 - a[3, 2] * s0
    inv[3, 3] = a[2, 0] * s3 - a[2, 1] * s1 + a[2, 2] * s0
    inv /= det
    return inv


def _steps(mf: MetricField, x: np.ndarray, h: float | None) -> np.ndarray:
    if h is not None:
        if h <= 0.0:
            raise ValueError(f"step must be positive, got {h}")
        return np.full(4, h)
    cbrt_eps = calculus.EPS ** (1.0 / 3.0)
    return np.array([cbrt_eps * max(abs(float(c)), s)
                     for c, s in zip(x, mf.coord_scales)])


def _grad_matrix(fn, x: np.ndarray, steps: np.ndarray) -> np.ndarray:
    """d[a, i, j] = partial_a of the matrix-valued fn, 4th-order central.

    Same stencil as calculus.derivative(order=1), applied to all 16
    components of one evaluation at a time instead of re-sampling fn per
    component.
    """
    out = np.empty((4, 4, 4))
    for a in range(4):
        e = np.zeros(4)
        e[a] = steps[a]
        out[a] = (-fn(x + 2.0 * e) + 8.0 * fn(x + e)
                  - 8.0 * fn(x - e) + fn(x - 2.0 * e)) / (12.0 * steps[a])
    return out


_CROSS = ((1, 8.0), (2, -1.0), (-1, -8.0), (-2, 1.0))


def _hess_once(fn, x: np.ndarray, steps: np.ndarray) -> np.ndarray:
    hess = np.empty((4, 4, 4, 4))
    f0 = fn(x)
    for a in range(4):
        ea = np.zeros(4)
        ea[a] = steps[a]
        hess[a, a] = (-fn(x + 2.0 * ea) + 16.0 * fn(x + ea) - 30.0 * f0
                      + 16.0 * fn(x - ea) - fn(x - 2.0 * ea)) / (12.0 * steps[a] ** 2)
        for b in range(a + 1, 4):
            eb = np.zeros(4)
            eb[b] = steps[b]
            acc = np.zeros((4, 4))
            for i, ci in _CROSS:
                for j, cj in _CROSS:
                    acc += (ci * cj) * fn(x + i * ea + j * eb)
            hess[a, b] = acc / (144.0 * steps[a] * steps[b])
            hess[b, a] = hess[a, b]
    return hess


def _hess_matrix(fn, x: np.ndarray, steps: np.ndarray) -> np.ndarray:
    """hess[a, b, i, j] = partial_a partial_b of the matrix-valued fn.

    Pure second derivatives use the 5-point stencil of
    calculus.derivative(order=2); mixed ones use the tensor product of
    two 4-point first-derivative stencils. Each is evaluated on the base
    mesh and its double and Richardson-combined to sixth order: the
    curvature assembly amplifies second-derivative error by the metric's
    dynamic range, and a single mesh cannot hold both truncation and
    roundoff below that amplification near the horizons.
    """
    return (16.0 * _hess_once(fn, x, steps) - _hess_once(fn, x, 2.0 * steps)) / 15.0


def _require_domain(mf: MetricField, x: np.ndarray, reach: np.ndarray):
    # Axis-aligned extremes cover the nested stencil points for the
    # box-shaped chart domains used in this package.
    if not mf.domain_check(x):
        raise DomainError(f"point {x.tolist()} outside chart domain")
    for a in range(4):
        for sgn in (-1.0, 1.0):
            y = x.copy()
            y[a] += sgn * reach[a]
            if not mf.domain_check(y):
                raise DomainError(
                    f"stencil point {y.tolist()} outside chart domain")


def christoffel_at(mf: MetricField, x, h: float | None = None) -> np.ndarray:
    """Gamma^a_bc = 1/2 g^ad (d_b g_dc + d_c g_db - d_d g_bc) at x.

    Metric derivatives are 4th-order central differences with step h per
    coordinate (default: the calculus first-derivative step for that
    coordinate value). x and its 2h-neighborhood must pass domain_check.
    """
    x = np.asarray(x, dtype=float)
    steps = _steps(mf, x, h)
    _require_domain(mf, x, 2.0 * steps)
    ginv = invert4(mf.g(x))
    dg = _grad_matrix(mf.g, x, steps)  # dg[b, d, c] = d_b g_dc
    gamma = 0.5 * (np.einsum('ad,bdc->abc', ginv, dg)
                   + np.einsum('ad,cdb->abc', ginv, dg)
                   - np.einsum('ad,dbc->abc', ginv, dg))
    return gamma


def ricci_at(mf: MetricField, x, h: float | None = None) -> CurvaturePoint:
    """Ricci tensor and scalar at x from differenced metric components.

    R_ab = d_c Gamma^c_ab - d_a Gamma^c_cb + Gamma^c_cd Gamma^d_ab
    - Gamma^c_ad Gamma^d_cb; scalar = g^ab R_ab. With
    Gamma = (1/2) g^(-1) (dg + dg - dg), the connection derivative
    expands by the product rule into first and second metric
    derivatives, which are differenced directly: stacking two numeric
    first-derivative stages instead would square the noise floor and
    fail near the horizons. The second-derivative stencils live on a
    mesh OUTER_STEP_FACTOR times the inner metric step h (default per
    coordinate as in calculus.derivative), and the full stencil
    neighborhood, 4*OUTER_STEP_FACTOR*h per axis, must pass
    domain_check.
    """
    x = np.asarray(x, dtype=float)
    steps = _steps(mf, x, h)
    outer = OUTER_STEP_FACTOR * steps
    _require_domain(mf, x, 4.0 * outer)  # the doubled Richardson mesh reaches 2*(2*outer)

    ginv = invert4(mf.g(x))
    dg = _grad_matrix(mf.g, x, steps)        # dg[e, i, j] = d_e g_ij
    hess = _hess_matrix(mf.g, x, outer)      # hess[e, b, i, j] = d_e d_b g_ij

    # S[d, b, c] = d_b g_dc + d_c g_db - d_d g_bc and its e-derivative
    s_low = np.einsum('bdc->dbc', dg) + np.einsum('cdb->dbc', dg) - dg
    ds_low = np.einsum('ebdc->edbc', hess) + np.einsum('ecdb->edbc', hess) - hess
    gamma = 0.5 * np.einsum('ad,dbc->abc', ginv, s_low)
    dginv = -np.einsum('am,emn,nd->ead', ginv, dg, ginv)
    dgamma = 0.5 * (np.einsum('ead,dbc->eabc', dginv, s_low)
                    + np.einsum('ad,edbc->eabc', ginv, ds_low))

    term1 = np.einsum('ccab->ab', dgamma)   # d_c Gamma^c_ab
    term2 = np.einsum('accb->ab', dgamma)   # d_a Gamma^c_cb
    term3 = np.einsum('ccd,dab->ab', gamma, gamma)
    term4 = np.einsum('cad,dcb->ab', gamma, gamma)
    ricci = term1 - term2 + term3 - term4

    scalar = float(np.einsum('ab,ab->', ginv, ricci))
    return CurvaturePoint(point=x, christoffel=gamma, ricci=ricci, scalar=scalar)
