"""Cross-validation suite: every identity the geometry claims, checked numerically.

Each check compares two independently computed quantities over the
guarded interior grid and records the worst residual against a fixed
threshold. Documented discrepancies (the plain-ratio closed form of the
coordinate map, and the unbalanced mumu fluid equation) are emitted as
notes, not failures.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import calculus, fluid, oracle, reissner_nordstrom as rn, warped
from .calculus import Tolerance

# Thresholds are part of the artifact contract; tests pin them.
THRESHOLDS = {
    "horizon_vieta": 1e-12,
    "mu_at_inner_horizon": 1e-9,
    "mu_at_outer_horizon": 1e-8,
    "warp_identities": 1e-10,
    "closed_vs_warped_ricci": 1e-10,
    "closed_vs_oracle_ricci": 1e-5,
    "chart_covariance": 1e-5,
    "scalar_closed_and_warped": 1e-8,
    "scalar_oracle": 1e-5,
    "oracle_off_diagonal": 1e-7,
    "roundtrip_inverse": 1e-8,   # in units of m*pi
    "fluid_residuals": 1e-10,
    "fluid_mumu_gap_identity": 1e-10,
    "closed_form_sqrt_vs_quadrature": 1e-8,
    "schwarzschild_flatness": 1e-8,
}

NEAR_EXTREMAL_MARGIN = 1e-4   # warn when (m - Q)/m drops below this
ORACLE_CHARGE_CUTOFF = 0.02   # skip oracle checks when (m - Q)/m drops below this:
                              # the lapse f1^2 shrinks with the horizon gap and its
                              # inverse amplifies differencing noise past the thresholds

_ROUNDTRIP_SAMPLES = 100
_ROUNDTRIP_SEED = 20240817  # fixed: verify output must be deterministic


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_abs_residual: float
    threshold: float
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    checks: list[CheckResult]
    notes: list[str] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "checks": [
                {
                    "name": c.name,
                    "max_abs_residual": c.max_abs_residual,
                    "threshold": c.threshold,
                    "pass": c.passed,
                }
                for c in self.checks
            ],
            "notes": list(self.notes),
            "overall_pass": self.overall,
        }


def _rel(a: float, b: float, floor: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), floor)


def _component_floors(w, theta: float, m: float) -> tuple[float, float, float, float]:
    """Comparison floors for the covariant Ricci diagonal.

    The components carry the metric weights diag(1, f1^2, f2^2,
    f2^2 sin^2); dividing by these (i.e. comparing mixed-index
    components) is what makes the check independent of both the unit
    choice and the position on the grid, so the floor is the curvature
    scale m^-2 times the local weight.
    """
    f1sq = w.f1 * w.f1
    f2sq = w.f2 * w.f2
    msq = m * m
    return (1.0 / msq, f1sq / msq, f2sq / msq,
            f2sq * math.sin(theta) ** 2 / msq)


def _off_diagonal_norm(ricci: np.ndarray, mf_g, x, m: float) -> float:
    """Largest off-diagonal Ricci entry, weighted to curvature units.

    Entry (a, b) is normalized by sqrt(|g_aa g_bb|), the same weight that
    makes the diagonal comparison unit free, then expressed in m^-2.
    """
    g = np.abs(np.diag(mf_g(x)))
    weight = np.sqrt(np.outer(g, g))
    scaled = np.abs(ricci - np.diag(np.diag(ricci))) / weight
    return m * m * float(np.max(scaled))


def _charts_invertible(probes) -> bool:
    """Whether the oracle's pivot floor holds at the probed chart points."""
    for chart, points in probes:
        for pt in points:
            g = chart.g(np.asarray(pt, dtype=float))
            scale = float(np.max(np.abs(g)))
            if abs(float(np.linalg.det(g))) <= 10.0 * 1e-12 * scale ** 4:
                return False
    return True


def run_verification(p: rn.BlackHoleParams, grid_points: int = 64,
                     guard_fraction: float = 0.05, theta: float = 0.5 * math.pi,
                     tol: Tolerance = calculus.DEFAULT_TOL,
                     thresholds: dict | None = None) -> VerifyReport:
    """Run every cross-check for one parameter set and collect a report."""
    th = dict(THRESHOLDS)
    if thresholds:
        th.update(thresholds)
    hp = rn.horizons(p)
    grid = rn.interior_grid(p, grid_points, guard_fraction)
    m, q = p.mass, p.charge
    floor = 1.0 / (m * m)  # curvature comparisons degenerate to this scale at Q = 0
    checks: list[CheckResult] = []
    notes: list[str] = []

    near_extremal = (m - q) / m < NEAR_EXTREMAL_MARGIN
    if near_extremal:
        # the mu quadrature noise floor scales with 1/sqrt(horizon gap), so
        # a 1e-10 request is unattainable there and would only raise; the
        # bracket tolerance tightens instead, because the inverse map is
        # steep (dmu/dr ~ 1/lapse) and r must be pinned to ~1e-12 relative
        # for the round trip to resolve mu at all
        tol = Tolerance(abs_tol=max(tol.abs_tol, 2e-8 * m),
                        rel_tol=min(tol.rel_tol, 1e-12), max_iter=tol.max_iter)
        # checks whose residual is quadrature error must track the relaxation
        for name in ("mu_at_outer_horizon", "roundtrip_inverse",
                     "closed_form_sqrt_vs_quadrature"):
            th[name] = max(th[name], 2.0 * tol.abs_tol)

    def add(name, residual):
        checks.append(CheckResult(name, float(residual), th[name], residual <= th[name]))

    # Vieta: r+ + r- = 2m, r+ r- = Q^2
    add("horizon_vieta", max(
        abs(hp.r_plus + hp.r_minus - 2.0 * m) / (2.0 * m),
        abs(hp.r_plus * hp.r_minus - q * q) / max(q * q, m * m),
    ))

    # boundary values of the coordinate map
    add("mu_at_inner_horizon", abs(rn.mu_of_r(p, hp.r_minus, tol)))
    add("mu_at_outer_horizon", abs(rn.mu_of_r(p, hp.r_plus, tol) - m * math.pi))

    # derivative identities relating f1 to f2, by first-order differencing
    # of the machine-smooth inverse map
    def r_of(mu):
        return rn._kepler_inverse(p, mu)

    def f1_of(mu):
        return math.sqrt(rn.lapse_squared(p, r_of(mu)))

    def f1p_of(mu):
        r = r_of(mu)
        return -m / (r * r) + q * q / (r * r * r)

    # Residuals are scaled by the differenced function's local magnitude:
    # the centered stencil carries an irreducible eps*|f|/h noise floor.
    # The step follows the calculus default with the geometry's length
    # unit as the coordinate scale, so the check is unit independent.
    worst = 0.0
    for r in grid:
        w = rn.warp_state(p, r)
        mu0 = rn.mu_closed_form_sqrt(p, r)
        h_id = calculus.EPS ** (1.0 / 3.0) * max(abs(mu0), m)
        worst = max(
            worst,
            abs(calculus.derivative(r_of, mu0, 1, h_id) - w.f1)
            / max(1.0, abs(w.f1), r / m),
            m * abs(calculus.derivative(f1_of, mu0, 1, h_id) - w.f1p)
            / max(1.0, m * abs(w.f1p), w.f1),
            m * m * abs(calculus.derivative(f1p_of, mu0, 1, h_id) - w.f1pp)
            / max(1.0, m * m * abs(w.f1pp), m * abs(w.f1p)),
        )
    add("warp_identities", worst)

    # triple agreement and scalar flatness
    wc = rn.warped_chart(p)
    sc = rn.static_chart(p)
    near_extremal_oracle = (m - q) / m < ORACLE_CHARGE_CUTOFF
    mu_edges = (rn.mu_closed_form_sqrt(p, grid[0]), rn.mu_closed_form_sqrt(p, grid[-1]))
    ill_conditioned = not _charts_invertible((
        (wc, ([mu_edges[0], 0.0, theta, 0.0], [mu_edges[1], 0.0, theta, 0.0])),
        (sc, ([0.0, grid[0], theta, 0.0], [0.0, grid[-1], theta, 0.0])),
    ))
    oracle_applies = not (near_extremal_oracle or ill_conditioned)
    worst_cw = worst_co = worst_cov = 0.0
    worst_scal_cw = worst_scal_o = worst_off = 0.0
    worst_schw = 0.0
    for r in grid:
        rc = rn.ricci_closed_form(p, r, theta)
        wst = rn.warp_state(p, r)
        wr = warped.ricci_from_warps(wst, theta)
        closed = (rc.r_mumu, rc.r_nunu, rc.r_thth, rc.r_phph)
        warp_vals = (wr.r_mumu, wr.r_nunu, wr.r_thth, wr.r_phph)
        cfl = _component_floors(wst, theta, m)
        worst_cw = max(worst_cw, *[_rel(a, b, f) for a, b, f in zip(closed, warp_vals, cfl)])
        # scalars carry length^-2; measure them in curvature units m^-2 so
        # the check is independent of the unit choice
        worst_scal_cw = max(worst_scal_cw, m * m * abs(wr.scalar), m * m * abs(rc.scalar))
        if q == 0.0:
            worst_schw = max(worst_schw, *[abs(v) for v in warp_vals])
        if not oracle_applies:
            continue

        mu0 = rn.mu_of_r(p, r, tol)
        cp = oracle.ricci_at(wc, [mu0, 0.0, theta, 0.0])
        odiag = np.diag(cp.ricci)
        worst_co = max(worst_co, *[_rel(a, float(b), f)
                                   for a, b, f in zip(closed, odiag, cfl)])
        worst_scal_o = max(worst_scal_o, m * m * abs(cp.scalar))
        worst_off = max(worst_off, _off_diagonal_norm(cp.ricci, mf_g=wc.g, x=cp.point, m=m))

        n2 = rn.lapse_squared(p, r)
        cp2 = oracle.ricci_at(sc, [0.0, r, theta, 0.0])
        transformed = (float(cp2.ricci[1, 1]) * n2, float(cp2.ricci[0, 0]),
                       float(cp2.ricci[2, 2]), float(cp2.ricci[3, 3]))
        worst_cov = max(worst_cov, *[_rel(a, b, f)
                                     for a, b, f in zip(closed, transformed, cfl)])
        worst_scal_o = max(worst_scal_o, m * m * abs(cp2.scalar))
        worst_off = max(worst_off, _off_diagonal_norm(cp2.ricci, mf_g=sc.g, x=cp2.point, m=m))

    add("closed_vs_warped_ricci", worst_cw)
    add("scalar_closed_and_warped", worst_scal_cw)
    if oracle_applies:
        add("closed_vs_oracle_ricci", worst_co)
        add("chart_covariance", worst_cov)
        add("scalar_oracle", worst_scal_o)
        add("oracle_off_diagonal", worst_off)
    elif near_extremal_oracle:
        notes.append(
            "finite-difference oracle checks skipped: the horizon gap is too small for "
            "the lapse-squared dynamic range at double precision; the algebraic "
            "closed-form and warped-product checks remain in force")
    else:
        notes.append(
            "finite-difference oracle checks skipped: a chart determinant falls under "
            "the pivot floor on this grid (the floor is unit dependent; rerun in units "
            "with m near 1); the algebraic checks remain in force")
    if q == 0.0:
        add("schwarzschild_flatness", worst_schw)

    # inverse round trip on fixed pseudorandom mu samples
    rng = random.Random(_ROUNDTRIP_SEED)
    mu_max = m * math.pi
    worst = 0.0
    for _ in range(_ROUNDTRIP_SAMPLES):
        mu0 = mu_max * rng.uniform(0.01, 0.99)
        worst = max(worst, abs(rn.mu_of_r(p, rn.r_of_mu(p, mu0, tol), tol) - mu0))
    add("roundtrip_inverse", worst / mu_max)

    # fluid extraction: three balances vanish, the mumu gap has a closed form.
    # The thth/phph balances are dimensionless; nunu and mumu carry length^-2.
    worst = worst_gap = 0.0
    gap_mid = 0.0
    r_mid = grid[len(grid) // 2]
    for r in grid:
        rep = fluid.fluid_report(p, r, theta, tol)
        w = rn.warp_state(p, r)
        scale_angular = max((q / w.f2) ** 2, 1.0)
        scale_time = max(q * q / w.f2 ** 4, floor)
        worst = max(worst, abs(rep.residuals.nunu) / scale_time,
                    abs(rep.residuals.thth) / scale_angular,
                    abs(rep.residuals.phph) / scale_angular)
        gap_expected = q * q / w.f2 ** 4 * (1.0 - w.f1 ** 2)
        worst_gap = max(worst_gap, abs(rep.residuals.mumu - gap_expected)
                        / max(scale_time, abs(gap_expected)))
        if r == r_mid:
            gap_mid = rep.residuals.mumu
    add("fluid_residuals", worst)
    add("fluid_mumu_gap_identity", worst_gap)

    # the two closed-form candidates against the quadrature definition
    worst = 0.0
    plain_gap = 0.0
    for r in grid:
        mu_quad = rn.mu_of_r(p, r, tol)
        worst = max(worst, abs(rn.mu_closed_form_sqrt(p, r) - mu_quad))
        gap = abs(rn.mu_closed_form(p, r) - mu_quad)
        if gap > plain_gap:
            plain_gap = gap
    add("closed_form_sqrt_vs_quadrature", worst)

    notes.append(
        f"plain-ratio closed form for mu deviates from quadrature by up to {plain_gap:.6g} "
        f"on this grid (square-root variant matches to {worst:.3g}); "
        "quadrature is authoritative")
    notes.append(
        f"mumu fluid balance is not closed by the extracted isotropic pressure: residual "
        f"Q^2/f2^4 (1 - f1^2) = {gap_mid:.6g} at r = {r_mid:.6g}; reported, not failed")
    if near_extremal:
        notes.append(
            f"near-extremal configuration: (m - Q)/m = {(m - q) / m:.3g}; guard band "
            "absorbs the horizon proximity; quadrature tolerance relaxed to the "
            f"double-precision noise floor ({2e-8 * m:.1g})")

    return VerifyReport(checks=checks, notes=notes)
