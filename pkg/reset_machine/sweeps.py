"""
Grid evaluation behind the sweep, critical-temperature and transient commands.

Rows are plain dicts keyed by the column names in
``reset_machine.constants.columns``; formatting into CSV text is left to the
renderer.
"""

import dataclasses
import logging
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor

from tqdm import tqdm

from reset_machine.constants import columns, regimes, sweep_axes, tolerances
from reset_machine.dynamics import evolve, steady_state, trace_distance
from reset_machine.exceptions import NoBoundaryError, ParameterValueError
from reset_machine.linalg import DensityMatrix, l1_coherence, tensor
from reset_machine.model import ModelParams, equilibrium_pair
from reset_machine.quantumness import (
    bloch_sums_perturbative,
    coherence_exact,
    coherence_perturbative,
    critical_temperature,
    g_window,
    magic_boundary_exact,
    magic_report,
    perturbative_coefficients,
)
from reset_machine.utils import parse_float, validate_range, value_range

logger = logging.getLogger(__name__)

# Bisection bracket for the exact boundary, as multiples of the closed-form estimate.
BOUNDARY_BRACKET = (0.1, 4.0)


@dataclasses.dataclass(frozen=True)
class SweepSpec:
    axis: str
    minimum: float
    maximum: float
    steps: int
    scale: str
    fixed: ModelParams

    def __post_init__(self):
        if self.axis not in sweep_axes.AXES:
            raise ParameterValueError(
                f'Unknown sweep axis {self.axis!r}; expected one of {", ".join(sweep_axes.AXES)}.'
            )
        validate_range(self.minimum, self.maximum, self.steps, self.scale, name=f'Sweep over {self.axis}')

    @classmethod
    def parse(cls, text, fixed):
        """Build a spec from ``axis:min:max:steps[:log]``."""
        parts = str(text).split(':')
        if len(parts) not in (4, 5):
            raise ParameterValueError(f'Sweep must look like axis:min:max:steps[:log], got {text!r}.')
        try:
            steps = int(parts[3])
        except ValueError:
            raise ParameterValueError(f'Sweep steps must be an integer, got {parts[3]!r}.')
        return cls(
            axis=parts[0],
            minimum=parse_float(parts[1], 'Sweep min'),
            maximum=parse_float(parts[2], 'Sweep max'),
            steps=steps,
            scale=parts[4] if len(parts) == 5 else sweep_axes.LINEAR,
            fixed=fixed,
        )

    def values(self):
        return value_range(self.minimum, self.maximum, self.steps, self.scale)

    def params_at(self, value):
        if self.axis == sweep_axes.P:
            return self.fixed.replace(p1=value, p2=value)
        if self.axis == sweep_axes.MU:
            return self.fixed.replace(p2=value * self.fixed.p1)
        return self.fixed.replace(**{self.axis: value})

    def describe(self):
        return f'{self.axis}:{self.minimum!r}:{self.maximum!r}:{self.steps}:{self.scale}'


def evaluate_point(params, value=None, exact_only=False):
    """
    One OutputRow: exact and perturbative coherence, the three binding Bloch
    sums of qubit 1, and the magic verdict of the exact steady state.
    """
    steady = steady_state(params)
    report = magic_report(steady.bloch1)

    row = OrderedDict((column, None) for column in columns.SWEEP_COLUMNS)
    row['value'] = value
    row['c_l1_exact'] = coherence_exact(steady)
    for index, exact in enumerate(report.named_sums, start=1):
        row[f'sum_{index}_exact'] = exact
    row['max_sum'] = report.max_sum
    row['has_magic'] = bool(report.has_magic)
    row['warnings'] = ';'.join(steady.warnings)

    if exact_only:
        for column in columns.PERTURBATIVE_SWEEP_COLUMNS:
            del row[column]
    else:
        row['c_l1_perturbative'] = coherence_perturbative(params)
        for index, approximate in enumerate(bloch_sums_perturbative(params, order=2), start=1):
            row[f'sum_{index}_perturbative'] = approximate
    return row


def _evaluate_task(task):
    params, value, exact_only = task
    return evaluate_point(params, value=value, exact_only=exact_only)


def run_sweep(spec, workers=1, exact_only=False, progress=False):
    """
    Evaluate every grid point of ``spec``.

    Points run on up to ``workers`` processes; rows come back in sweep order.
    """
    tasks = [(spec.params_at(value), value, exact_only) for value in spec.values()]
    logger.info('Sweeping %s over %d points with %d worker(s).', spec.axis, len(tasks), workers)

    if workers <= 1:
        return [_evaluate_task(task) for task in tqdm(tasks, disable=not progress)]

    with ProcessPoolExecutor(max_workers=workers) as executor:
        results = executor.map(_evaluate_task, tasks)
        return list(tqdm(results, total=len(tasks), disable=not progress))


def binding_condition(report):
    """
    Index of the condition that sets t_crit.

    Mirrored conditions share a threshold; the one with a positive linear
    coefficient wins, since only it has a window at g > 0.
    """
    linear = perturbative_coefficients(report.p, report.regime, t2=report.t2, mu=report.mu).linear
    return max(range(len(linear)), key=lambda index: (linear[index] > 0, abs(linear[index])))


def crit_row(value, p, regime, t2=None, mu=1.0, t1=None, exact_boundary=False, exact_t2=None):
    """
    One row of closed-form critical temperatures at p1 = p, p2 = mu p.

    With ``t1`` the allowed-g window endpoints at that heat-bath temperature
    are added. With ``exact_boundary`` the exact steady state is bisected in
    T1 at the center of the binding window, using spin-bath temperature
    ``exact_t2`` (defaults to ``t2``).
    """
    report = critical_temperature(p, regime, t2=t2, mu=mu)

    row = OrderedDict([('value', value)])
    for index, temperature in enumerate(report.per_condition, start=1):
        row[f't_crit_{index}'] = temperature
    row['t_crit'] = report.t_crit
    row['exact_boundary'] = None
    row['boundary_rel_diff'] = None

    if t1 is not None:
        window = g_window(p, t1, regime, t2=t2, mu=mu)
        for index, interval in enumerate(window.intervals, start=1):
            lower, upper = interval if interval is not None else (None, None)
            row[f'window_{index}_lo'] = lower
            row[f'window_{index}_hi'] = upper

    if exact_boundary:
        boundary = exact_boundary_at_center(p, regime, report, t2=t2, mu=mu, exact_t2=exact_t2)
        row['exact_boundary'] = boundary
        if boundary is not None:
            row['boundary_rel_diff'] = (boundary - report.t_crit) / report.t_crit
            logger.info('Exact boundary %.6g against closed form %.6g (relative difference %+.2f%%).',
                        boundary, report.t_crit, 100 * row['boundary_rel_diff'])
    return row


def exact_boundary_at_center(p, regime, report, t2=None, mu=1.0, exact_t2=None):
    """
    Exact critical T1 at the coupling that maximizes the binding sum, or None
    when the bracket around the closed-form estimate holds no crossing.
    """
    spin_temperature = exact_t2 if exact_t2 is not None else t2
    if spin_temperature is None:
        raise ParameterValueError('The exact boundary needs a spin-bath temperature.')

    # The window center a / (2 b) does not depend on T1.
    coefficients = perturbative_coefficients(p, regime, t2=t2, mu=mu)
    center = coefficients.linear[binding_condition(report)] / (2 * coefficients.quadratic)
    if report.t_crit <= 0 or center <= 0:
        return None

    params = ModelParams(g=center, t1=report.t_crit, t2=spin_temperature, p1=p, p2=mu * p)
    bracket = tuple(factor * report.t_crit for factor in BOUNDARY_BRACKET)
    try:
        return magic_boundary_exact(params, bracket, tol=tolerances.BOUNDARY_T1)
    except NoBoundaryError as e:
        logger.warning('%s', e)
        return None


def crit_rows(values, axis, regime, p=None, mu=1.0, t2=None, t1=None, exact_boundary=False,
              exact_t2=None, progress=False):
    """Critical-temperature rows over a grid of p (``axis='p'``) or mu (``axis='mu'``)."""
    if axis not in (sweep_axes.P, sweep_axes.MU):
        raise ParameterValueError(f'Critical temperatures sweep p or mu, got {axis!r}.')
    if axis == sweep_axes.MU and p is None:
        raise ParameterValueError('A mu sweep needs a fixed p.')
    if regime == regimes.HIGH_T2 and t2 is None:
        raise ParameterValueError(f'The {regimes.HIGH_T2} regime needs a spin-bath temperature t2.')

    rows = []
    for value in tqdm(values, disable=not progress):
        if axis == sweep_axes.P:
            row = crit_row(value, value, regime, t2=t2, mu=mu, t1=t1,
                           exact_boundary=exact_boundary, exact_t2=exact_t2)
        else:
            row = crit_row(value, p, regime, t2=t2, mu=value, t1=t1,
                           exact_boundary=exact_boundary, exact_t2=exact_t2)
        rows.append(row)
    return rows


@dataclasses.dataclass(frozen=True)
class TransientSummary:
    steady_coherence: float
    max_coherence: float
    max_coherence_time: float
    exceeds_steady: bool
    final_distance: float


def transient_rows(params, t_end, dt=None, store_every=None, rho0=None):
    """
    Time series of qubit-1 coherence, max Bloch sum and trace distance to the
    steady state, starting from tau1 x tau2 unless ``rho0`` is given.
    """
    steady = steady_state(params)
    if rho0 is None:
        tau1, tau2 = equilibrium_pair(params)
        rho0 = DensityMatrix(tensor(tau1, tau2))

    trajectory = evolve(params, rho0, t_end, dt=dt, store_every=store_every)

    rows = []
    for time, state in zip(trajectory.times, trajectory.states):
        reduced = state.reduced(keep=1)
        row = OrderedDict()
        row['t'] = time
        row['c_l1'] = l1_coherence(reduced)
        row['max_sum'] = magic_report(reduced.bloch()).max_sum
        row['trace_distance'] = trace_distance(state, steady.rho12)
        rows.append(row)

    peak = max(rows, key=lambda row: row['c_l1'])
    steady_coherence = coherence_exact(steady)
    summary = TransientSummary(
        steady_coherence=steady_coherence,
        max_coherence=peak['c_l1'],
        max_coherence_time=peak['t'],
        exceeds_steady=peak['c_l1'] > steady_coherence,
        final_distance=rows[-1]['trace_distance'],
    )
    if summary.exceeds_steady:
        logger.info('Transient coherence %.6g at t=%.6g exceeds the steady value %.6g.',
                    summary.max_coherence, summary.max_coherence_time, steady_coherence)
    return rows, summary, trajectory
