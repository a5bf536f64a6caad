"""
Coherence and magic of the heat-bath qubit.

Magic is detected with the stabilizer octahedron: a qubit state is a
stabilizer mixture iff every signed sum +-r_x +- r_y +- r_z lies in [-1, 1].

The closed forms below are second-order expansions in the coupling g, valid
at omega = 1. Each of the three binding sums (those with +r_z) reads

    sum_i = tanh(1 / (2 T1)) * (1 + a_i g - b g^2)

with the linear coefficients ``a_i`` and the shared quadratic coefficient
``b`` of PerturbativeCoefficients. Their transverse parts are written in the
frame rotated by pi about z from the lab frame, where the swap coupling has
the opposite sign, so in the lab frame they are the sums labelled by
BINDING_SUM_LABELS.
"""

import dataclasses
import itertools
import logging
import math
from collections import OrderedDict
from typing import Optional, Tuple

from scipy import optimize

from reset_machine.constants import regimes, tolerances
from reset_machine.exceptions import NoBoundaryError, ParameterValueError, PerturbativeRangeError
from reset_machine.dynamics import steady_state
from reset_machine.linalg import BlochVector, l1_coherence

logger = logging.getLogger(__name__)

PERTURBATIVE_LABEL = 'perturbative estimate'

# Lab-frame labels of the three sums that carry the expansions.
BINDING_SUM_LABELS = ('-x-y+z', '-x+y+z', '+x-y+z')

SUM_LABELS = tuple(
    f'{sx}x{sy}y{sz}z' for sx, sy, sz in itertools.product('+-', repeat=3)
)


def _sign(symbol):
    return 1.0 if symbol == '+' else -1.0


def signed_sum(r, label):
    """Evaluate a sum such as '-x+y+z' on a Bloch vector."""
    return _sign(label[0]) * r[0] + _sign(label[2]) * r[1] + _sign(label[4]) * r[2]


def named_sums(r):
    """The three binding sums of ``r`` in BINDING_SUM_LABELS order."""
    return tuple(signed_sum(r, label) for label in BINDING_SUM_LABELS)


@dataclasses.dataclass(frozen=True)
class MagicReport:
    sums: OrderedDict
    max_sum: float
    has_magic: bool
    tolerance: float

    @property
    def named_sums(self):
        return tuple(self.sums[label] for label in BINDING_SUM_LABELS)


def magic_report(r, tol=tolerances.MAGIC):
    r = BlochVector(*(float(component) for component in r))
    sums = OrderedDict((label, signed_sum(r, label)) for label in SUM_LABELS)
    max_sum = max(sums.values())
    return MagicReport(sums=sums, max_sum=max_sum, has_magic=max_sum > 1 + tol, tolerance=tol)


def _require_unit_omega(params):
    if abs(params.omega - 1.0) > tolerances.UNIT_OMEGA:
        raise PerturbativeRangeError(
            f'Closed-form expressions hold at omega = 1 only, got omega={params.omega!r}.'
        )


def _require_rate(name, value):
    if not math.isfinite(value) or value < tolerances.MIN_PERTURBATIVE_RATE:
        raise PerturbativeRangeError(
            f'Reset rate {name}={value!r} is below {tolerances.MIN_PERTURBATIVE_RATE:g}, outside the model range.'
        )


def _require_regime(regime, t2):
    if regime not in regimes.REGIMES:
        raise ParameterValueError(f'Unknown regime {regime!r}; expected one of {", ".join(regimes.REGIMES)}.')
    if regime == regimes.HIGH_T2 and (t2 is None or not math.isfinite(t2) or t2 <= 0):
        raise ParameterValueError(f'The {regimes.HIGH_T2} regime needs a positive spin-bath temperature t2.')


def _half_tanh(t):
    return math.tanh(1.0 / (2.0 * t))


def thermal_lambda(t1):
    """coth(1 / (2 T1)) - 1, the heat-bath offset the linear gain must beat."""
    if not math.isfinite(t1) or t1 <= 0:
        raise ParameterValueError(f'Temperature t1 must be positive and finite, got {t1!r}.')
    x = 1.0 / t1
    return 2.0 * math.exp(-x) / -math.expm1(-x)


def coherence_exact(steady):
    return l1_coherence(steady.rho1)


def coherence_perturbative(params):
    """
    First-order l1 coherence of the heat-bath qubit,
    4 g p2 |tanh(1/(2 T1)) tanh(1/(2 T2))| / sqrt((1 + 4 p1^2)(1 + 4 p2^2)).
    """
    _require_unit_omega(params)
    denominator = math.sqrt((1 + 4 * params.p1 ** 2) * (1 + 4 * params.p2 ** 2))
    return 4 * params.g * params.p2 * abs(_half_tanh(params.t1) * _half_tanh(params.t2)) / denominator


def _binding_polynomials(p1, p2):
    return (
        -1 + 2 * p1 + 2 * p2 + 4 * p1 * p2,
        1 + 2 * p1 + 2 * p2 - 4 * p1 * p2,
        -1 - 2 * p1 - 2 * p2 + 4 * p1 * p2,
    )


def _general_coefficients(p1, p2, spin_polarization):
    """Linear coefficients and quadratic coefficient for arbitrary rates and spin polarization tanh(1/(2 T2))."""
    denominator = (1 + 4 * p1 ** 2) * (1 + 4 * p2 ** 2)
    linear = tuple(
        4 * p2 * polynomial * spin_polarization / denominator
        for polynomial in _binding_polynomials(p1, p2)
    )
    bracket = (
        -1 - 2 * p2 ** 2
        - 4 * p1 * (p1 + 4 * p1 * p2 ** 2 + 2 * p2 ** 3)
        + 2 * p2 ** 2 * (4 * p1 * p2 - 1) * (1 - spin_polarization ** 2)
    )
    quadratic = -2 * bracket / (p1 * (p1 + p2) * denominator)
    return linear, quadratic


def bloch_sums_perturbative(params, order=2):
    """
    The three binding sums of the heat-bath qubit expanded to ``order`` in g,
    for arbitrary rates and temperatures.
    """
    _require_unit_omega(params)
    if order not in (1, 2):
        raise ParameterValueError(f'Expansion order must be 1 or 2, got {order!r}.')
    _require_rate('p1', params.p1)
    _require_rate('p2', params.p2)

    linear, quadratic = _general_coefficients(params.p1, params.p2, _half_tanh(params.t2))
    if order == 1:
        quadratic = 0.0
    heat = _half_tanh(params.t1)
    g = params.g
    return tuple(heat * (1 + a * g - quadratic * g ** 2) for a in linear)


@dataclasses.dataclass(frozen=True)
class PerturbativeCoefficients:
    regime: str
    mu: float
    p: float
    t2: Optional[float]
    f1: float
    f2: float
    g1: float
    h1: float
    F1: Optional[float]
    F2: Optional[float]
    G1: Optional[float]
    H1: Optional[float]
    linear: Tuple[float, float, float]
    quadratic: float


def perturbative_coefficients(p, regime, t2=None, mu=1.0):
    """
    Expansion coefficients for p1 = p and p2 = mu * p in the limit of a cold
    (``low_T2``) or hot (``high_T2``) spin bath.

    In the cold limit tanh(1/(2 T2)) -> 1; in the hot limit it is replaced by
    1/(2 T2) and the quadratic coefficient is taken at zero polarization.
    """
    _require_rate('p', p)
    _require_rate('p2', mu * p)
    _require_regime(regime, t2)

    square = (1 + 4 * p ** 2) ** 2
    f1 = p * (4 * p ** 2 + 4 * p - 1) / square
    f2 = (1 + 6 * p ** 2 + 24 * p ** 4) / (p ** 2 * square)
    g1 = p * (1 + 4 * p - 4 * p ** 2) / square
    h1 = p * (4 * p ** 2 - 4 * p - 1) / square

    denominator = (1 + 4 * p ** 2) * (1 + 4 * mu ** 2 * p ** 2)
    polynomials = (
        4 * mu * p ** 2 + 2 * mu * p + 2 * p - 1,
        1 + 2 * mu * p + 2 * p - 4 * mu * p ** 2,
        4 * mu * p ** 2 - 2 * mu * p - 2 * p - 1,
    )

    high = {'F1': None, 'F2': None, 'G1': None, 'H1': None}
    if regime == regimes.LOW_T2:
        linear = tuple(4 * mu * p * polynomial / denominator for polynomial in polynomials)
        quadratic = (
            2 * (1 + 2 * mu ** 2 * p ** 2 + 4 * p ** 2 + 16 * mu ** 2 * p ** 4 + 8 * mu ** 3 * p ** 4)
            / (p ** 2 * (1 + mu) * denominator)
        )
    else:
        linear = tuple(2 * mu * p * polynomial / (t2 * denominator) for polynomial in polynomials)
        quadratic = 2 / (p ** 2 * (1 + mu))
        high = {'F1': f1 / t2, 'F2': 1 / p ** 2, 'G1': g1 / t2, 'H1': h1 / t2}

    return PerturbativeCoefficients(
        regime=regime,
        mu=mu,
        p=p,
        t2=t2,
        f1=f1,
        f2=f2,
        g1=g1,
        h1=h1,
        linear=linear,
        quadratic=quadratic,
        **high
    )


def bloch_sums_asymmetric(p, mu, g, t1, regime, t2=None):
    """The three binding sums for p1 = p, p2 = mu * p in the chosen spin-bath limit."""
    coefficients = perturbative_coefficients(p, regime, t2=t2, mu=mu)
    heat = _half_tanh(t1)
    return tuple(heat * (1 + a * g - coefficients.quadratic * g ** 2) for a in coefficients.linear)


@dataclasses.dataclass(frozen=True)
class CritTempReport:
    t_crit_1: float
    t_crit_2: float
    t_crit_3: float
    t_crit: float
    regime: str
    mu: float
    p: float
    t2: Optional[float]
    label: str = PERTURBATIVE_LABEL

    @property
    def per_condition(self):
        return (self.t_crit_1, self.t_crit_2, self.t_crit_3)


def _critical_temperature(linear, quadratic):
    # The window closes when coth(1/(2 T)) - 1 = a^2 / (4 b).
    if linear == 0:
        return 0.0
    return 1.0 / math.log1p(8 * quadratic / linear ** 2)


def critical_temperature(p, regime, t2=None, mu=1.0):
    """
    Heat-bath temperatures above which each binding sum stays below one for every g.

    Each threshold is 1 / ln(1 + 8 b / a_i^2). In the hot spin-bath limit this
    reads 1 / ln(1 + 2 F2 / F1^2). Note the factor 2: the form
    1 / ln(1 + F2 / F1^2) does not match where g_window closes.
    """
    coefficients = perturbative_coefficients(p, regime, t2=t2, mu=mu)
    temperatures = tuple(_critical_temperature(a, coefficients.quadratic) for a in coefficients.linear)
    return CritTempReport(
        t_crit_1=temperatures[0],
        t_crit_2=temperatures[1],
        t_crit_3=temperatures[2],
        t_crit=max(temperatures),
        regime=regime,
        mu=mu,
        p=p,
        t2=t2,
    )


@dataclasses.dataclass(frozen=True)
class GWindow:
    intervals: Tuple[Optional[Tuple[float, float]], ...]
    union: Tuple[Tuple[float, float], ...]

    @property
    def is_empty(self):
        return not self.union

    @property
    def width(self):
        return sum(upper - lower for lower, upper in self.union)


def _interval(linear, quadratic, offset):
    center = linear / (2 * quadratic)
    discriminant = center ** 2 - offset / quadratic
    if discriminant <= 0:
        return None
    half_width = math.sqrt(discriminant)
    lower = max(0.0, center - half_width)
    upper = center + half_width
    if upper <= lower:
        return None
    return (lower, upper)


def merge_intervals(intervals):
    merged = []
    for lower, upper in sorted(interval for interval in intervals if interval is not None):
        if merged and lower <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], upper))
        else:
            merged.append((lower, upper))
    return tuple(merged)


def g_window(p, t1, regime, t2=None, mu=1.0):
    """
    Couplings g >= 0 for which each binding sum exceeds one at heat-bath
    temperature ``t1``, and their union.
    """
    coefficients = perturbative_coefficients(p, regime, t2=t2, mu=mu)
    offset = thermal_lambda(t1)
    intervals = tuple(_interval(a, coefficients.quadratic, offset) for a in coefficients.linear)
    return GWindow(intervals=intervals, union=merge_intervals(intervals))


def exact_max_sum(params):
    return magic_report(steady_state(params).bloch1).max_sum


def magic_boundary_exact(params, t1_range, tol=tolerances.BOUNDARY_T1):
    """
    Heat-bath temperature at which the exact steady state of qubit 1 leaves
    the stabilizer octahedron, found by bisection on max_sum(T1) - 1.
    """
    lower, upper = (float(bound) for bound in t1_range)
    if not 0 < lower < upper:
        raise ParameterValueError(f'Temperature range must satisfy 0 < lower < upper, got [{lower!r}, {upper!r}].')

    def excess(t1):
        return exact_max_sum(params.replace(t1=t1)) - 1.0

    excess_lower = excess(lower)
    excess_upper = excess(upper)
    if excess_lower * excess_upper > 0:
        logger.info('No magic boundary for g=%g between T1=%g and T1=%g.', params.g, lower, upper)
        raise NoBoundaryError(lower=lower, upper=upper)

    boundary = optimize.bisect(excess, lower, upper, xtol=tol)
    logger.info('Exact magic boundary for g=%g: T1=%.8g.', params.g, boundary)
    return boundary
