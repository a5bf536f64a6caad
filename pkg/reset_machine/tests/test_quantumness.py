import itertools
import logging
import math

import ddt
import numpy as np
from django.test import SimpleTestCase

from reset_machine.constants.regimes import HIGH_T2, LOW_T2
from reset_machine.dynamics import steady_state
from reset_machine.exceptions import NoBoundaryError, ParameterValueError, PerturbativeRangeError
from reset_machine.model import ModelParams
from reset_machine.quantumness import (
    BINDING_SUM_LABELS,
    PERTURBATIVE_LABEL,
    SUM_LABELS,
    bloch_sums_asymmetric,
    bloch_sums_perturbative,
    coherence_exact,
    coherence_perturbative,
    critical_temperature,
    exact_max_sum,
    g_window,
    magic_boundary_exact,
    magic_report,
    merge_intervals,
    named_sums,
    perturbative_coefficients,
    signed_sum,
    thermal_lambda,
)

logger = logging.getLogger(__name__)

COLD_SPIN_BATH = 0.01


def exact_named_sums(params):
    return named_sums(steady_state(params).bloch1)


def largest_exact_max_sum():
    """Exact max_sum over a small grid of couplings placed inside the perturbative windows."""
    best = None
    for p, t1 in itertools.product((0.3, 0.5, 0.8, 1.0), (0.05, 0.1)):
        coefficients = perturbative_coefficients(p, LOW_T2)
        center = max(coefficients.linear) / (2 * coefficients.quadratic)
        for fraction in (0.5, 1.0):
            params = ModelParams(g=center * fraction, t1=t1, t2=COLD_SPIN_BATH, p1=p, p2=p)
            value = exact_max_sum(params)
            if best is None or value > best[0]:
                best = (value, params)
    return best


@ddt.ddt
class MagicReportTests(SimpleTestCase):
    def test_sum_labels(self):
        self.assertEqual(len(SUM_LABELS), 8)
        self.assertEqual(SUM_LABELS[0], '+x+y+z')
        self.assertTrue(set(BINDING_SUM_LABELS) <= set(SUM_LABELS))

    def test_signed_sum(self):
        self.assertEqual(signed_sum((0.1, 0.2, 0.4), '-x+y+z'), 0.5)
        np.testing.assert_allclose(named_sums((0.1, 0.2, 0.4)), (0.1, 0.5, 0.3), atol=1e-15)

    @ddt.data(
        ((0, 0, 1), 1.0, False),
        ((math.tanh(0.5), 0, 0), math.tanh(0.5), False),
        ((1 / math.sqrt(3),) * 3, math.sqrt(3), True),
        ((0, 0, 0), 0.0, False),
    )
    @ddt.unpack
    def test_examples(self, r, expected_max, has_magic):
        report = magic_report(r)
        self.assertAlmostEqual(report.max_sum, expected_max, places=14)
        self.assertEqual(report.has_magic, has_magic)
        self.assertEqual(len(report.sums), 8)

    def test_octahedron_equivalence(self):
        rng = np.random.default_rng(23)
        for _ in range(1000):
            direction = rng.normal(size=3)
            r = direction / np.linalg.norm(direction) * rng.uniform() ** (1 / 3)
            report = magic_report(r)
            self.assertAlmostEqual(report.max_sum, float(np.sum(np.abs(r))), places=14)
            self.assertEqual(report.has_magic, float(np.sum(np.abs(r))) > 1 + report.tolerance)

    def test_named_sums_property(self):
        r = (0.1, -0.2, 0.5)
        self.assertEqual(magic_report(r).named_sums, named_sums(r))


@ddt.ddt
class CoherenceTests(SimpleTestCase):
    def test_uncoupled(self):
        self.assertEqual(coherence_perturbative(ModelParams(g=0.0, t1=1.0, t2=1.0, p1=0.5, p2=0.5)), 0.0)
        steady = steady_state(ModelParams(g=0.0, t1=1.0, t2=1.0, p1=0.5, p2=0.5))
        self.assertLess(coherence_exact(steady), 1e-12)

    def test_example_value(self):
        params = ModelParams(g=0.01, t1=1.0, t2=1.0, p1=0.5, p2=0.5)
        self.assertAlmostEqual(coherence_perturbative(params), 0.01 * math.tanh(0.5) ** 2, places=15)
        self.assertAlmostEqual(coherence_perturbative(params), 2.1355e-3, places=7)

    def test_decreases_with_heat_bath_rate(self):
        values = [
            coherence_perturbative(ModelParams(g=0.01, t1=1.0, t2=1.0, p1=p1, p2=0.5))
            for p1 in (0.1, 0.5, 1.0, 5.0)
        ]
        self.assertEqual(values, sorted(values, reverse=True))

    def test_fast_spin_reset_limit(self):
        params = ModelParams(g=0.01, t1=1.0, t2=0.5, p1=0.3, p2=1e6)
        limit = 2 * 0.01 * math.tanh(0.5) * math.tanh(1.0) / math.sqrt(1 + 4 * 0.3 ** 2)
        self.assertAlmostEqual(coherence_perturbative(params) / limit, 1.0, places=9)

    def test_requires_unit_splitting(self):
        with self.assertRaises(PerturbativeRangeError):
            coherence_perturbative(ModelParams(g=0.01, t1=1.0, t2=1.0, p1=0.5, p2=0.5, omega=2.0))

    @ddt.data((1.0, 0.1, 0.3, 0.3), (0.5, 1.0, 0.5, 0.8), (2.0, 0.01, 0.6, 0.4))
    @ddt.unpack
    def test_first_order_residual_shrinks(self, t1, t2, p1, p2):
        def residual(g):
            params = ModelParams(g=g, t1=t1, t2=t2, p1=p1, p2=p2)
            return abs(coherence_exact(steady_state(params)) - coherence_perturbative(params))

        # C_l1 is |g| times an even function of g, so the residual is cubic.
        residuals = [residual(g) for g in (1e-2, 5e-3, 2.5e-3)]
        for larger, smaller in zip(residuals, residuals[1:]):
            self.assertGreaterEqual(larger / smaller, 6)
            self.assertLessEqual(larger / smaller, 10)

    def test_close_to_exact(self):
        params = ModelParams(g=0.005, t1=0.5, t2=0.2, p1=0.4, p2=0.6)
        exact = coherence_exact(steady_state(params))
        self.assertAlmostEqual(exact / coherence_perturbative(params), 1.0, places=2)


@ddt.ddt
class BlochSumsTests(SimpleTestCase):
    def test_uncoupled(self):
        sums = bloch_sums_perturbative(ModelParams(g=0.0, t1=0.4, t2=1.0, p1=0.5, p2=0.5))
        np.testing.assert_allclose(sums, (math.tanh(1.25),) * 3, rtol=1e-15)

    def test_cold_spin_bath_value(self):
        sums = bloch_sums_perturbative(ModelParams(g=0.01, t1=1.0, t2=COLD_SPIN_BATH, p1=0.5, p2=0.5))
        expected = math.tanh(0.5) * (1 + 0.01 - 4 * 0.01 ** 2)
        self.assertAlmostEqual(sums[0], expected, places=12)
        self.assertAlmostEqual(sums[0], 0.466553, places=5)
        self.assertAlmostEqual(sums[1], expected, places=12)
        self.assertAlmostEqual(sums[2], math.tanh(0.5) * (1 - 0.01 - 4 * 0.01 ** 2), places=12)

    def test_first_order_drops_quadratic(self):
        params = ModelParams(g=0.02, t1=0.7, t2=0.3, p1=0.4, p2=0.9)
        first = bloch_sums_perturbative(params, order=1)
        second = bloch_sums_perturbative(params, order=2)
        differences = [a - b for a, b in zip(first, second)]
        self.assertGreater(differences[0], 0)
        self.assertAlmostEqual(differences[0], differences[1], places=15)
        self.assertAlmostEqual(differences[0], differences[2], places=15)

    @ddt.data(*itertools.product((0.01, 10.0), ((0.5, 0.5), (0.3, 0.6))))
    @ddt.unpack
    def test_second_order_residual(self, t2, rates):
        p1, p2 = rates

        def residual(g):
            params = ModelParams(g=g, t1=0.5, t2=t2, p1=p1, p2=p2)
            exact = exact_named_sums(params)
            return max(abs(a - b) for a, b in zip(exact, bloch_sums_perturbative(params)))

        residuals = [residual(g) for g in (4e-3, 2e-3, 1e-3)]
        self.assertGreaterEqual(residuals[0] / residuals[1], 6)
        self.assertGreaterEqual(residuals[1] / residuals[2], 6)

    def test_matches_exact_sums(self):
        params = ModelParams(g=0.01, t1=0.5, t2=0.1, p1=0.5, p2=0.5)
        np.testing.assert_allclose(bloch_sums_perturbative(params), exact_named_sums(params), atol=1e-4)

    def test_invalid_order(self):
        with self.assertRaises(ParameterValueError):
            bloch_sums_perturbative(ModelParams(g=0.01, t1=1.0, t2=1.0, p1=0.5, p2=0.5), order=3)

    def test_rate_out_of_range(self):
        with self.assertRaises(PerturbativeRangeError):
            bloch_sums_perturbative(ModelParams(g=0.01, t1=1.0, t2=1.0, p1=0.0, p2=0.5))


@ddt.ddt
class PerturbativeCoefficientsTests(SimpleTestCase):
    def test_half_rate_values(self):
        coefficients = perturbative_coefficients(0.5, LOW_T2)
        self.assertAlmostEqual(coefficients.f1, 0.25, places=15)
        self.assertAlmostEqual(coefficients.f2, 4.0, places=14)
        self.assertAlmostEqual(coefficients.g1, 0.25, places=15)
        self.assertAlmostEqual(coefficients.h1, -0.25, places=15)
        np.testing.assert_allclose(coefficients.linear, (1.0, 1.0, -1.0), atol=1e-15)
        self.assertAlmostEqual(coefficients.quadratic, 4.0, places=14)
        self.assertIsNone(coefficients.F1)

    def test_hot_spin_bath_values(self):
        coefficients = perturbative_coefficients(0.5, HIGH_T2, t2=10.0)
        self.assertAlmostEqual(coefficients.F1, 0.025, places=15)
        self.assertAlmostEqual(coefficients.F2, 4.0, places=14)
        self.assertAlmostEqual(coefficients.G1, 0.025, places=15)
        self.assertAlmostEqual(coefficients.H1, -0.025, places=15)
        np.testing.assert_allclose(coefficients.linear, (0.05, 0.05, -0.05), atol=1e-15)

    @ddt.data(0.05, 0.3, 0.7, 1.0, 2.5)
    def test_signs_and_symmetry(self, p):
        coefficients = perturbative_coefficients(p, LOW_T2)
        self.assertGreater(coefficients.f2, 0)
        self.assertAlmostEqual(coefficients.g1, -coefficients.h1, places=15)
        self.assertAlmostEqual(coefficients.linear[1], -coefficients.linear[2], places=14)
        self.assertGreater(perturbative_coefficients(p, HIGH_T2, t2=5.0).F2, 0)

    @ddt.data(0.2, 0.5, 1.3)
    def test_equal_rates_reduce_to_symmetric(self, p):
        low = perturbative_coefficients(p, LOW_T2, mu=1.0)
        np.testing.assert_allclose(low.linear, (4 * low.f1, 4 * low.g1, 4 * low.h1), rtol=1e-12)
        self.assertAlmostEqual(low.quadratic / low.f2, 1.0, places=12)

        high = perturbative_coefficients(p, HIGH_T2, t2=3.0, mu=1.0)
        np.testing.assert_allclose(high.linear, (2 * high.F1, 2 * high.G1, 2 * high.H1), rtol=1e-12)
        self.assertAlmostEqual(high.quadratic / high.F2, 1.0, places=12)

    def test_faster_spin_reset_raises_gain(self):
        self.assertAlmostEqual(perturbative_coefficients(0.5, LOW_T2, mu=2.0).linear[0], 1.6, places=14)

    @ddt.data(
        (0.0, LOW_T2, None),
        (-0.5, LOW_T2, None),
        (0.5, HIGH_T2, None),
        (0.5, 'tepid', None),
        (0.5, HIGH_T2, -1.0),
    )
    @ddt.unpack
    def test_invalid(self, p, regime, t2):
        with self.assertRaises(ParameterValueError):
            perturbative_coefficients(p, regime, t2=t2)

    def test_zero_rate_is_out_of_range(self):
        with self.assertRaises(PerturbativeRangeError):
            perturbative_coefficients(0.0, LOW_T2)


@ddt.ddt
class AsymmetricSumsTests(SimpleTestCase):
    @ddt.data(0.5, 1.0, 2.0, 4.0)
    def test_cold_limit_matches_general_formula(self, mu):
        params = ModelParams(g=0.02, t1=0.4, t2=COLD_SPIN_BATH, p1=0.3, p2=0.3 * mu)
        np.testing.assert_allclose(
            bloch_sums_asymmetric(0.3, mu, 0.02, 0.4, LOW_T2), bloch_sums_perturbative(params), rtol=1e-12
        )

    @ddt.data(0.5, 1.0, 2.0)
    def test_hot_limit_matches_general_formula(self, mu):
        params = ModelParams(g=0.02, t1=0.4, t2=1000.0, p1=0.3, p2=0.3 * mu)
        np.testing.assert_allclose(
            bloch_sums_asymmetric(0.3, mu, 0.02, 0.4, HIGH_T2, t2=1000.0), bloch_sums_perturbative(params),
            rtol=1e-6,
        )

    def test_close_to_exact(self):
        g = 0.01
        params = ModelParams(g=g, t1=0.3, t2=COLD_SPIN_BATH, p1=0.3, p2=0.6)
        np.testing.assert_allclose(
            bloch_sums_asymmetric(0.3, 2.0, g, 0.3, LOW_T2), exact_named_sums(params), atol=5 * g ** 2
        )


@ddt.ddt
class CriticalTemperatureTests(SimpleTestCase):
    def test_half_rate(self):
        report = critical_temperature(0.5, LOW_T2)
        for value in report.per_condition:
            self.assertAlmostEqual(value, 1 / math.log(33), places=12)
        self.assertAlmostEqual(report.t_crit, 0.28600, places=5)
        self.assertEqual(report.label, PERTURBATIVE_LABEL)
        self.assertEqual(report.regime, LOW_T2)

    def test_hot_spin_bath(self):
        report = critical_temperature(0.5, HIGH_T2, t2=10.0)
        coefficients = perturbative_coefficients(0.5, HIGH_T2, t2=10.0)
        expected = 1 / math.log1p(2 * coefficients.F2 / coefficients.F1 ** 2)
        self.assertAlmostEqual(report.t_crit, expected, places=12)
        self.assertAlmostEqual(report.t_crit, 1 / math.log(12801), places=12)

    def test_increases_with_rate_in_cold_limit(self):
        values = [critical_temperature(p, LOW_T2).t_crit for p in np.linspace(0.05, 1.5, 30)]
        for lower, higher in zip(values, values[1:]):
            self.assertLess(lower, higher)

    def test_hotter_spin_bath_lowers_threshold(self):
        for p in (0.2, 0.5, 1.0, 2.0):
            self.assertLess(
                critical_temperature(p, HIGH_T2, t2=10.0).t_crit,
                critical_temperature(p, HIGH_T2, t2=5.0).t_crit,
            )

    @ddt.data((LOW_T2, None), (HIGH_T2, 10.0))
    @ddt.unpack
    def test_increases_with_rate_ratio(self, regime, t2):
        values = [critical_temperature(0.5, regime, t2=t2, mu=mu).t_crit for mu in np.linspace(0.5, 4.0, 15)]
        for lower, higher in zip(values, values[1:]):
            self.assertLess(lower, higher)

    @ddt.data(0.1, 0.4, 0.9, 1.7)
    def test_shared_threshold_of_mirrored_sums(self, p):
        report = critical_temperature(p, LOW_T2)
        self.assertAlmostEqual(report.t_crit_2, report.t_crit_3, places=14)
        self.assertEqual(report.t_crit, max(report.per_condition))


@ddt.ddt
class GWindowTests(SimpleTestCase):
    def test_thermal_lambda(self):
        self.assertAlmostEqual(thermal_lambda(0.2), 1 / math.tanh(2.5) - 1, places=14)
        self.assertAlmostEqual(thermal_lambda(0.2), 2 / (math.exp(5) - 1), places=15)
        with self.assertRaises(ParameterValueError):
            thermal_lambda(0.0)

    def test_half_rate_window(self):
        window = g_window(0.5, 0.2, LOW_T2)
        half_width = math.sqrt(0.125 ** 2 - thermal_lambda(0.2) / 4)
        lower, upper = window.intervals[0]
        self.assertAlmostEqual(lower, 0.125 - half_width, places=12)
        self.assertAlmostEqual(upper, 0.125 + half_width, places=12)
        self.assertAlmostEqual(half_width, 0.1106, places=3)
        self.assertEqual(window.intervals[1], window.intervals[0])
        self.assertIsNone(window.intervals[2])
        self.assertEqual(window.union, (window.intervals[0],))
        self.assertFalse(window.is_empty)
        self.assertAlmostEqual(window.width, 2 * half_width, places=12)

    def test_cold_heat_bath_limit(self):
        lower, upper = g_window(0.5, 0.01, LOW_T2).union[0]
        self.assertAlmostEqual(lower, 0.0, places=12)
        self.assertAlmostEqual(upper, 0.25, places=12)

    def test_width_shrinks_with_temperature(self):
        widths = [g_window(0.5, t1, LOW_T2).width for t1 in (0.05, 0.1, 0.2, 0.25, 0.28)]
        for wider, narrower in zip(widths, widths[1:]):
            self.assertGreater(wider, narrower)

    @ddt.data((0.3, LOW_T2, None), (0.5, LOW_T2, None), (0.8, LOW_T2, None), (1.2, LOW_T2, None),
              (0.5, HIGH_T2, 0.5))
    @ddt.unpack
    def test_closes_at_critical_temperature(self, p, regime, t2):
        t_crit = critical_temperature(p, regime, t2=t2).t_crit
        self.assertTrue(g_window(p, t_crit * (1 + 1e-9), regime, t2=t2).is_empty)
        self.assertFalse(g_window(p, t_crit * (1 - 1e-6), regime, t2=t2).is_empty)
        self.assertTrue(g_window(p, 2 * t_crit, regime, t2=t2).is_empty)

    def test_merge_intervals(self):
        self.assertEqual(merge_intervals([(0.2, 0.4), None, (0.1, 0.3), (0.5, 0.6)]), ((0.1, 0.4), (0.5, 0.6)))
        self.assertEqual(merge_intervals([None, None]), ())


class ExactMagicTests(SimpleTestCase):
    def test_uncoupled_max_sum(self):
        params = ModelParams(g=0.0, t1=0.3, t2=0.2, p1=0.5, p2=0.5)
        self.assertAlmostEqual(exact_max_sum(params), math.tanh(1 / 0.6), places=10)

    def test_magic_exists(self):
        value, params = largest_exact_max_sum()
        self.assertGreater(value, 1 + 1e-6, msg=f'largest exact max_sum {value} at {params}')

    def test_no_magic_above_twice_critical_temperature(self):
        t_crit = critical_temperature(0.5, LOW_T2).t_crit
        upper = g_window(0.5, 0.05, LOW_T2).union[-1][1]
        for g in np.linspace(0.0, upper, 9):
            params = ModelParams(g=g, t1=2 * t_crit, t2=COLD_SPIN_BATH, p1=0.5, p2=0.5)
            self.assertFalse(magic_report(steady_state(params).bloch1).has_magic)

    def test_boundary_at_window_center(self):
        params = ModelParams(g=0.125, t1=1.0, t2=COLD_SPIN_BATH, p1=0.5, p2=0.5)
        boundary = magic_boundary_exact(params, (0.05, 1.0))
        self.assertGreater(boundary, 0.1)
        self.assertLess(boundary, 0.6)
        self.assertGreater(exact_max_sum(params.replace(t1=boundary * 0.9)), 1.0)
        self.assertLess(exact_max_sum(params.replace(t1=boundary * 1.1)), 1.0)

        t_crit = critical_temperature(0.5, LOW_T2).t_crit
        relative = (boundary - t_crit) / t_crit
        logger.info('Exact boundary %.6g, closed form %.6g, relative difference %.4f.', boundary, t_crit, relative)
        self.assertLessEqual(abs(relative), 0.15)

    def test_no_boundary_without_coupling(self):
        params = ModelParams(g=0.0, t1=1.0, t2=COLD_SPIN_BATH, p1=0.5, p2=0.5)
        with self.assertRaises(NoBoundaryError):
            magic_boundary_exact(params, (0.05, 1.0))

    def test_invalid_range(self):
        params = ModelParams(g=0.1, t1=1.0, t2=COLD_SPIN_BATH, p1=0.5, p2=0.5)
        with self.assertRaises(ParameterValueError):
            magic_boundary_exact(params, (1.0, 0.05))
