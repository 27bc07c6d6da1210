import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rnwarp.calculus import (DEFAULT_TOL, Interval, Tolerance, derivative,
                             find_root_bracketed, integrate_endpoint_singular)
from rnwarp.errors import BracketError, ConvergenceError


def arcsine(x):
    return 1.0 / math.sqrt(x * (2.0 - x))


class TestIntegrate:
    def test_arcsine_kernel(self):
        # exact arcsine integral, singular at both ends
        got = integrate_endpoint_singular(arcsine, Interval(0.0, 2.0))
        assert got == pytest.approx(math.pi, abs=1e-9)

    def test_weighted_arcsine_kernel(self):
        # oracle: substituting x = 1 - cos(phi) turns the integrand into
        # (1 - cos phi) d phi over (0, pi), which integrates to pi exactly
        got = integrate_endpoint_singular(lambda x: x / math.sqrt((2.0 - x) * x),
                                          Interval(0.0, 2.0))
        assert got == pytest.approx(math.pi, abs=1e-9)

    def test_constant(self):
        got = integrate_endpoint_singular(lambda x: 1.0, Interval(0.0, 1.0))
        assert got == pytest.approx(1.0, abs=1e-11)

    def test_single_sided_singularity(self):
        # integral of 1/sqrt(x) over (0, 1) is 2
        got = integrate_endpoint_singular(lambda x: 1.0 / math.sqrt(x), Interval(0.0, 1.0))
        assert got == pytest.approx(2.0, abs=1e-9)

    def test_smooth_integrand(self):
        got = integrate_endpoint_singular(math.sin, Interval(0.0, math.pi))
        assert got == pytest.approx(2.0, abs=1e-12)

    def test_deterministic(self):
        vals = {integrate_endpoint_singular(arcsine, Interval(0.0, 2.0)) for _ in range(3)}
        assert len(vals) == 1

    @given(st.floats(min_value=0.05, max_value=1.95))
    @settings(max_examples=20)
    def test_additive_over_subintervals(self, split):
        whole = integrate_endpoint_singular(arcsine, Interval(0.0, 2.0))
        left = integrate_endpoint_singular(arcsine, Interval(0.0, split))
        right = integrate_endpoint_singular(arcsine, Interval(split, 2.0))
        assert abs(left + right - whole) <= 2.0 * DEFAULT_TOL.abs_tol + 1e-12

    @given(a=st.floats(min_value=-3.0, max_value=1.0),
           width=st.floats(min_value=0.2, max_value=5.0),
           c1=st.floats(min_value=-2.0, max_value=2.0),
           c2=st.floats(min_value=-2.0, max_value=2.0))
    @settings(max_examples=25)
    def test_shifted_arcsine_family(self, a, width, c1, c2):
        # integral of c1/sqrt((b-x)(x-a)) + c2 over (a, b) is c1*pi + c2*(b-a)
        b = a + width

        def f(x):
            return c1 / math.sqrt((b - x) * (x - a)) + c2

        got = integrate_endpoint_singular(f, Interval(a, b))
        want = c1 * math.pi + c2 * width
        assert abs(got - want) <= 1e-8 * max(1.0, abs(want))

    def test_discontinuous_integrand_fails_to_converge(self):
        # violates the continuity precondition; refinement stalls and the
        # error must carry the running estimate and bound
        with pytest.raises(ConvergenceError) as exc:
            integrate_endpoint_singular(lambda x: 1.0 if x < 0.37 else 0.0,
                                        Interval(0.0, 1.0))
        assert exc.value.estimate == pytest.approx(0.37, abs=0.01)
        assert exc.value.error_bound > 0.0

    def test_nonintegrable_singularity_rejected(self):
        # 1/x overflows approaching the zero endpoint, where no
        # representability wall exists
        with pytest.raises(ValueError, match="non-finite"):
            integrate_endpoint_singular(lambda x: 1.0 / x, Interval(0.0, 1.0))

    def test_nonfinite_integrand_rejected(self):
        with pytest.raises(ValueError, match="non-finite"):
            integrate_endpoint_singular(lambda x: math.nan, Interval(0.0, 1.0))

    def test_interval_must_be_ordered(self):
        with pytest.raises(ValueError):
            Interval(1.0, 1.0)
        with pytest.raises(ValueError):
            Interval(2.0, 1.0)


class TestFindRoot:
    def test_sqrt_two(self):
        got = find_root_bracketed(lambda x: x * x - 2.0, Interval(0.0, 2.0))
        assert got == pytest.approx(math.sqrt(2.0), abs=1e-9)

    def test_odd_function(self):
        got = find_root_bracketed(lambda x: x, Interval(-1.0, 1.0))
        assert abs(got) <= 1e-10

    def test_cosine(self):
        got = find_root_bracketed(math.cos, Interval(1.0, 2.0))
        assert got == pytest.approx(math.pi / 2.0, abs=1e-9)

    def test_root_at_endpoint(self):
        assert find_root_bracketed(lambda x: x, Interval(0.0, 1.0)) == 0.0

    def test_no_sign_change(self):
        with pytest.raises(BracketError):
            find_root_bracketed(lambda x: x * x + 1.0, Interval(-1.0, 1.0))

    @given(st.floats(min_value=-5.0, max_value=5.0),
           st.floats(min_value=0.1, max_value=3.0),
           st.floats(min_value=0.1, max_value=3.0))
    def test_result_inside_bracket(self, root, below, above):
        lo, hi = root - below, root + above

        def g(x):
            return (x - root) * (1.0 + x * x)

        got = find_root_bracketed(g, Interval(lo, hi))
        assert lo <= got <= hi
        assert got == pytest.approx(root, abs=1e-8 * max(1.0, abs(root)))

    def test_steep_edges(self):
        # derivative blows up at both bracket ends, as for the coordinate map
        def g(x):
            return math.asin(x) - 0.25

        got = find_root_bracketed(g, Interval(-1.0, 1.0))
        assert got == pytest.approx(math.sin(0.25), abs=1e-9)


class TestDerivative:
    def test_sin_at_zero(self):
        assert derivative(math.sin, 0.0, 1) == pytest.approx(1.0, abs=1e-9)

    def test_square_second(self):
        assert derivative(lambda x: x * x, 3.0, 2) == pytest.approx(2.0, abs=1e-6)

    def test_exp_first(self):
        assert derivative(math.exp, 1.0, 1) == pytest.approx(math.e, abs=1e-8)

    @given(st.floats(min_value=-1e3, max_value=1e3),
           st.floats(min_value=-1e3, max_value=1e3))
    def test_linear_exact(self, a, b):
        # no truncation error for a line, so a wide step drowns the roundoff
        got = derivative(lambda x: a * x + b, 0.7, 1, h=0.5)
        assert abs(got - a) <= 1e-10 * max(abs(a), 1.0)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            derivative(math.sin, 0.0, 3)

    def test_bad_step(self):
        with pytest.raises(ValueError):
            derivative(math.sin, 0.0, 1, h=0.0)


class TestTolerance:
    def test_defaults(self):
        assert DEFAULT_TOL == Tolerance(1e-10, 1e-10, 200)

    @pytest.mark.parametrize("kwargs", [
        {"abs_tol": 0.0}, {"rel_tol": -1.0}, {"max_iter": 0},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            Tolerance(**kwargs)
