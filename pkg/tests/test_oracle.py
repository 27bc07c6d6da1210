import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rnwarp.errors import DomainError, SingularMetricError
from rnwarp.oracle import MetricField, christoffel_at, invert4, ricci_at
from rnwarp.reissner_nordstrom import (BlackHoleParams, horizons, interior_grid,
                                       lapse_squared, mu_of_r, ricci_closed_form,
                                       static_chart, warped_chart)

PI_2 = math.pi / 2.0

FLAT = MetricField(("t", "x", "y", "z"), lambda x: np.diag([-1.0, 1.0, 1.0, 1.0]))


def sphere_chart(radius):
    """Flat 2d block plus a round sphere of the given radius."""

    def g(x):
        th = float(x[2])
        a2 = radius * radius
        return np.diag([-1.0, 1.0, a2, a2 * math.sin(th) ** 2])

    return MetricField(("t", "x", "theta", "phi"), g, lambda x: 0.0 < x[2] < math.pi)


class TestInvert4:
    def test_identity(self):
        assert np.allclose(invert4(np.eye(4)), np.eye(4))

    def test_diagonal(self):
        g = np.diag([-2.0, 0.5, 3.0, 4.0])
        assert np.allclose(invert4(g), np.diag([-0.5, 2.0, 1.0 / 3.0, 0.25]))

    def test_matches_general_solver(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            a = rng.normal(size=(4, 4))
            g = a + a.T + 8.0 * np.eye(4)
            assert np.allclose(invert4(g), np.linalg.inv(g), atol=1e-12)

    def test_singular_rejected(self):
        g = np.diag([1.0, 1.0, 1.0, 0.0])
        with pytest.raises(SingularMetricError):
            invert4(g)


class TestChristoffel:
    def test_flat_vanishes(self):
        gamma = christoffel_at(FLAT, [0.0, 0.3, -0.2, 1.0])
        assert np.max(np.abs(gamma)) <= 1e-10

    def test_sphere_at_equator(self):
        gamma = christoffel_at(sphere_chart(1.0), [0.0, 0.0, PI_2, 0.4])
        # Gamma^theta_phiphi = -sin th cos th and Gamma^phi_thetaphi = cot th
        # both vanish on the equator
        assert gamma[2, 3, 3] == pytest.approx(0.0, abs=1e-9)
        assert gamma[3, 2, 3] == pytest.approx(0.0, abs=1e-9)

    def test_sphere_off_equator(self):
        th = 1.1
        gamma = christoffel_at(sphere_chart(2.0), [0.0, 0.0, th, 0.4])
        assert gamma[2, 3, 3] == pytest.approx(-math.sin(th) * math.cos(th), abs=1e-9)
        assert gamma[3, 2, 3] == pytest.approx(1.0 / math.tan(th), abs=1e-9)

    def test_warped_chart_sphere_expansion(self, charged):
        # oracle: Gamma^theta_mu theta = f2'/f2 = f1/r = 0.8 at r = 1
        mu = mu_of_r(charged, 1.0)
        gamma = christoffel_at(warped_chart(charged), [mu, 0.0, PI_2, 0.0])
        assert gamma[2, 0, 2] == pytest.approx(0.8, abs=1e-6)

    def test_lower_index_symmetry(self, charged):
        mu = mu_of_r(charged, 1.1)
        gamma = christoffel_at(warped_chart(charged), [mu, 0.0, 1.0, 0.2])
        sym = np.transpose(gamma, (0, 2, 1))
        assert np.max(np.abs(gamma - sym)) <= 1e-10 * max(1.0, np.max(np.abs(gamma)))

    def test_domain_enforced(self, charged):
        chart = warped_chart(charged)
        with pytest.raises(DomainError):
            christoffel_at(chart, [-0.5, 0.0, PI_2, 0.0])
        with pytest.raises(DomainError):
            # inside the domain but the stencil would cross mu = 0
            christoffel_at(chart, [1e-9, 0.0, PI_2, 0.0])


class TestRicci:
    def test_flat_vanishes(self):
        cp = ricci_at(FLAT, [0.0, 0.3, -0.2, 1.0])
        assert np.max(np.abs(cp.ricci)) <= 1e-8
        assert abs(cp.scalar) <= 1e-8

    def test_sphere_sign_convention(self):
        # the round sphere must come out with R_thth = +1 for any radius
        th = 1.0
        for radius in (1.0, 1.7):
            cp = ricci_at(sphere_chart(radius), [0.0, 0.0, th, 0.4])
            assert cp.ricci[2, 2] == pytest.approx(1.0, abs=1e-7)
            assert cp.ricci[3, 3] == pytest.approx(math.sin(th) ** 2, abs=1e-7)
            assert cp.scalar == pytest.approx(2.0 / radius ** 2, rel=1e-6)

    def test_charged_interior_diagonal(self, charged):
        # this is the independent referee for the closed forms
        mu = mu_of_r(charged, 1.0)
        cp = ricci_at(warped_chart(charged), [mu, 0.0, PI_2, 0.0])
        want = (0.36, -0.2304, 0.36, 0.36)
        for i, val in enumerate(want):
            assert cp.ricci[i, i] == pytest.approx(val, abs=1e-5)
        assert abs(cp.scalar) <= 1e-5

    def test_static_chart_transforms(self, charged):
        # oracle: tensor transformation with dr/dmu = N, so R_mumu = N^2 R_rr
        cp = ricci_at(static_chart(charged), [0.0, 1.0, PI_2, 0.0])
        n2 = lapse_squared(charged, 1.0)
        assert cp.ricci[1, 1] * n2 == pytest.approx(0.36, abs=1e-5)
        assert cp.ricci[0, 0] == pytest.approx(-0.2304, abs=1e-5)

    def test_ricci_symmetry(self, charged):
        mu = mu_of_r(charged, 0.9)
        cp = ricci_at(warped_chart(charged), [mu, 0.0, 1.1, 0.3])
        scale = max(1.0, float(np.max(np.abs(cp.ricci))))
        assert np.max(np.abs(cp.ricci - cp.ricci.T)) <= 1e-9 * scale

    def test_off_diagonal_vanishes(self, charged):
        for r in (0.5, 1.0, 1.5):
            mu = mu_of_r(charged, r)
            cp = ricci_at(warped_chart(charged), [mu, 0.0, PI_2, 0.0])
            off = cp.ricci - np.diag(np.diag(cp.ricci))
            assert np.max(np.abs(off)) <= 1e-7

    def test_domain_enforced(self, charged):
        with pytest.raises(DomainError):
            ricci_at(static_chart(charged), [0.0, 1.81, PI_2, 0.0])


class TestChartCovariance:
    def test_against_closed_form(self, charged):
        # both charts, componentwise, against the closed forms
        wc = warped_chart(charged)
        sc = static_chart(charged)
        for r in interior_grid(charged, 7):
            rc = ricci_closed_form(charged, r, PI_2)
            want = np.array([rc.r_mumu, rc.r_nunu, rc.r_thth, rc.r_phph])
            mu = mu_of_r(charged, r)
            got_w = np.diag(ricci_at(wc, [mu, 0.0, PI_2, 0.0]).ricci)
            n2 = lapse_squared(charged, r)
            cp = ricci_at(sc, [0.0, r, PI_2, 0.0])
            got_s = np.array([cp.ricci[1, 1] * n2, cp.ricci[0, 0],
                              cp.ricci[2, 2], cp.ricci[3, 3]])
            assert np.max(np.abs(got_w - want) / np.maximum(np.abs(want), 1.0)) <= 1e-5
            assert np.max(np.abs(got_s - want) / np.maximum(np.abs(want), 1.0)) <= 1e-5
            # and the two oracle runs against each other, no closed form involved
            assert np.max(np.abs(got_w - got_s) / np.maximum(np.abs(want), 1.0)) <= 1e-5

    def test_scalar_flat_everywhere_tested(self, charged):
        sc = static_chart(charged)
        for r in interior_grid(charged, 9):
            cp = ricci_at(sc, [0.0, r, PI_2, 0.0])
            assert abs(cp.scalar) <= 1e-6

    @given(m=st.floats(min_value=0.5, max_value=3.0),
           qr=st.floats(min_value=0.0, max_value=0.9),
           frac=st.floats(min_value=0.08, max_value=0.92),
           theta=st.floats(min_value=0.4, max_value=math.pi - 0.4))
    @settings(max_examples=15)
    def test_oracle_matches_closed_form_at_random_points(self, m, qr, frac, theta):
        # the strongest property in the package: raw-component differencing
        # reproducing the closed forms at arbitrary interior points
        p = BlackHoleParams(m, m * qr)
        hp = horizons(p)
        r = hp.r_minus + hp.width * frac
        rc = ricci_closed_form(p, r, theta)
        want = np.array([rc.r_mumu, rc.r_nunu, rc.r_thth, rc.r_phph])
        cp = ricci_at(warped_chart(p), [mu_of_r(p, r), 0.0, theta, 0.0])
        floor = 1.0 / (m * m)
        gap = np.abs(np.diag(cp.ricci) - want) / np.maximum(np.abs(want), floor)
        assert np.max(gap) <= 1e-5
        assert abs(cp.scalar) * m * m <= 1e-5

    def test_explicit_scalar_step(self, charged):
        # caller-chosen step overrides the per-coordinate defaults
        mu = mu_of_r(charged, 1.0)
        cp = ricci_at(warped_chart(charged), [mu, 0.0, PI_2, 0.0], h=8e-6)
        assert cp.ricci[0, 0] == pytest.approx(0.36, abs=1e-4)
        gamma = christoffel_at(warped_chart(charged), [mu, 0.0, PI_2, 0.0], h=1e-5)
        assert gamma[2, 0, 2] == pytest.approx(0.8, abs=1e-6)
        with pytest.raises(ValueError):
            ricci_at(warped_chart(charged), [mu, 0.0, PI_2, 0.0], h=-1e-5)
