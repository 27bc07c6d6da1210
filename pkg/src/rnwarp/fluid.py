"""Perfect-fluid source terms and field-equation residuals in the interior.

A comoving perfect fluid T_ab = rho u_a u_b + P (g_ab + u_a u_b) is
matched against the interior curvature through G_ab = 8 pi T_ab. With the
scalar curvature vanishing, G_ab equals the Ricci tensor, and the four
diagonal balance equations read, in the warped chart,

    (mumu)  Q^2/f2^4          - 8 pi P f1^2
    (nunu)  -Q^2 f1^2/f2^4    + 8 pi rho
    (thth)  Q^2/f2^2          - 8 pi P f2^2
    (phph)  sin^2(theta) * (thth)

rho is extracted from the nunu balance and P from the thth balance, which
the phph one then satisfies identically. The mumu expression does not
vanish for these values; its residual equals Q^2/f2^4 (1 - f1^2) and is
reported verbatim rather than hidden. A single isotropic pressure cannot
close all four equations at once (the true charged source is
anisotropic), so the verification suite flags this as a documented
discrepancy instead of a failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .calculus import DEFAULT_TOL, Tolerance
from .reissner_nordstrom import BlackHoleParams, mu_of_r, warp_state
from .warped import RicciDiag, WarpState

EIGHT_PI = 8.0 * math.pi


@dataclass(frozen=True)
class EinsteinTensorDiag:
    """Diagonal Einstein tensor components (length^-2) in the warped chart."""

    g_mumu: float
    g_nunu: float
    g_thth: float
    g_phph: float


@dataclass(frozen=True)
class FluidResiduals:
    """Residuals of the four diagonal balance equations, labeled by component."""

    mumu: float
    nunu: float
    thth: float
    phph: float


@dataclass(frozen=True)
class FluidReport:
    """Extracted fluid state and balance residuals at one interior point."""

    rho: float
    pressure: float
    residuals: FluidResiduals
    r: float
    mu: float


def einstein_tensor(rd: RicciDiag, w: WarpState) -> EinsteinTensorDiag:
    """G_ab = R_ab - (scalar/2) g_ab with the warped metric diag(-1, f1^2, f2^2, f2^2 sin^2).

    For the interior geometry the scalar vanishes and G equals the Ricci
    diagonal componentwise.
    """
    half_r = 0.5 * rd.scalar
    f1sq = w.f1 * w.f1
    f2sq = w.f2 * w.f2
    sin2 = math.sin(rd.theta) ** 2
    return EinsteinTensorDiag(
        g_mumu=rd.r_mumu - half_r * -1.0,
        g_nunu=rd.r_nunu - half_r * f1sq,
        g_thth=rd.r_thth - half_r * f2sq,
        g_phph=rd.r_phph - half_r * f2sq * sin2,
    )


def stress_energy_perfect_fluid(rho: float, pressure: float, w: WarpState,
                                theta: float) -> tuple[float, float, float, float]:
    """Diagonal covariant T_ab for a comoving perfect fluid.

    The 4-velocity is the unit timelike vector along the mu direction
    (the only timelike direction between the horizons), normalized
    u_a u^a = -1, giving T = diag(rho, P f1^2, P f2^2, P f2^2 sin^2 theta).
    """
    f1sq = w.f1 * w.f1
    f2sq = w.f2 * w.f2
    return (rho, pressure * f1sq, pressure * f2sq, pressure * f2sq * math.sin(theta) ** 2)


def fluid_report(p: BlackHoleParams, r: float, theta: float = 0.5 * math.pi,
                 tol: Tolerance = DEFAULT_TOL) -> FluidReport:
    """Extract (rho, P) at interior r and evaluate all four balance residuals.

    rho = Q^2 f1^2 / (8 pi f2^4) and P = Q^2 / (8 pi f2^4); the nunu,
    thth and phph residuals then vanish identically while the mumu one
    equals Q^2/f2^4 (1 - f1^2) and is returned as-is.
    """
    w = warp_state(p, r)
    q2 = p.charge * p.charge
    f1sq = w.f1 * w.f1
    f2sq = w.f2 * w.f2
    f2_4 = f2sq * f2sq
    rho = q2 * f1sq / (EIGHT_PI * f2_4)
    pressure = q2 / (EIGHT_PI * f2_4)
    res_mumu = q2 / f2_4 - EIGHT_PI * pressure * f1sq
    res_nunu = -q2 * f1sq / f2_4 + EIGHT_PI * rho
    res_thth = q2 / f2sq - EIGHT_PI * pressure * f2sq
    res_phph = res_thth * math.sin(theta) ** 2
    return FluidReport(
        rho=rho,
        pressure=pressure,
        residuals=FluidResiduals(res_mumu, res_nunu, res_thth, res_phph),
        r=r,
        mu=mu_of_r(p, r, tol),
    )
