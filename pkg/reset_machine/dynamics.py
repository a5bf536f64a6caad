"""
The reset master equation as a 16 x 16 superoperator, its steady state, and
Runge-Kutta integration of transients.

Vectorization is row-major: vec(rho)[4 r + c] = rho[r, c], so that
vec(A rho B) = (A x B^T) vec(rho).
"""

import dataclasses
import logging
import math
from typing import List, Tuple

import numpy as np

from reset_machine.constants import tolerances
from reset_machine.exceptions import (
    DimensionMismatchError,
    InvariantBreachError,
    ParameterValueError,
    SingularSystemError,
    StabilityGuardError,
)
from reset_machine.linalg import (
    BlochVector,
    DensityMatrix,
    as_matrix,
    commutator,
    partial_trace,
    solve_linear,
    tensor,
)
from reset_machine.model import ModelParams, equilibrium_pair, hamiltonian

logger = logging.getLogger(__name__)

IDENTITY_4 = np.eye(4, dtype=complex)
# Row functional of the trace: tr(rho) = TRACE_ROW . vec(rho)
TRACE_ROW = IDENTITY_4.reshape(-1)
# vec(rho^T) = TRANSPOSE . vec(rho)
TRANSPOSE = np.eye(16)[[4 * (index % 4) + index // 4 for index in range(16)]]


def vectorize(rho):
    return as_matrix(rho).reshape(-1).copy()


def unvectorize(vector):
    vector = np.asarray(vector, dtype=complex)
    if vector.shape != (16,):
        raise DimensionMismatchError(expected=16, actual=vector.shape)
    return vector.reshape(4, 4)


def liouvillian_apply(params, rho):
    """
    Right-hand side of the master equation,
    -i[H, rho] + p1 (tau1 x tr_1 rho - rho) + p2 (tr_2 rho x tau2 - rho).
    """
    rho = as_matrix(rho)
    if rho.shape[0] != 4:
        raise DimensionMismatchError(expected=4, actual=rho.shape[0])

    tau1, tau2 = equilibrium_pair(params)
    unitary = -1j * commutator(hamiltonian(params), rho)
    heat_reset = tensor(tau1, partial_trace(rho, keep=2)) - rho
    spin_reset = tensor(partial_trace(rho, keep=1), tau2) - rho
    return unitary + params.p1 * heat_reset + params.p2 * spin_reset


def reset_liouvillian(hamiltonian_matrix, tau1, tau2, p1, p2):
    """
    Superoperator of -i[H, .] plus resets of slot 1 toward ``tau1`` at rate
    ``p1`` and of slot 2 toward ``tau2`` at rate ``p2``.
    """
    h = as_matrix(hamiltonian_matrix)
    if h.shape[0] != 4:
        raise DimensionMismatchError(expected=4, actual=h.shape[0])
    tau1 = as_matrix(tau1)
    tau2 = as_matrix(tau2)
    identity = np.eye(2, dtype=complex)

    # Output index abcd is rho[(a, b), (c, d)], input index ABCD likewise.
    slot1 = np.einsum('ac,bB,dD,AC->abcdABCD', tau1, identity, identity, identity).reshape(16, 16)
    slot2 = np.einsum('bd,aA,cC,BD->abcdABCD', tau2, identity, identity, identity).reshape(16, 16)

    unitary = -1j * (np.kron(h, IDENTITY_4) - np.kron(IDENTITY_4, h.T))
    dissipator = p1 * (slot1 - np.eye(16)) + p2 * (slot2 - np.eye(16))
    return unitary + dissipator


@dataclasses.dataclass(frozen=True)
class Liouvillian:
    params: ModelParams
    matrix: np.ndarray

    def apply(self, rho):
        return unvectorize(self.matrix @ vectorize(rho))


def build_liouvillian(params):
    tau1, tau2 = equilibrium_pair(params)
    matrix = reset_liouvillian(hamiltonian(params), tau1, tau2, params.p1, params.p2)
    matrix.setflags(write=False)
    return Liouvillian(params=params, matrix=matrix)


def null_state(liouvillian_matrix):
    """
    Unit-trace null vector of a 16 x 16 generator.

    Row 0 of the system is replaced by the trace functional; the right-hand
    side is e_0. Returns the 4 x 4 matrix and the residual max-norm of the
    original generator on it.
    """
    matrix = np.asarray(liouvillian_matrix, dtype=complex)
    if matrix.shape != (16, 16):
        raise DimensionMismatchError(expected=16, actual=matrix.shape)

    system = matrix.copy()
    system[0, :] = TRACE_ROW
    rhs = np.zeros(16, dtype=complex)
    rhs[0] = 1.0

    solution = solve_linear(system, rhs)
    residual = float(np.max(np.abs(matrix @ solution)))
    return unvectorize(solution), residual


@dataclasses.dataclass(frozen=True)
class SteadyState:
    params: ModelParams
    rho12: DensityMatrix
    rho1: DensityMatrix
    rho2: DensityMatrix
    bloch1: BlochVector
    bloch2: BlochVector
    residual: float
    warnings: Tuple[str, ...] = ()


def steady_state(params, liouvillian=None):
    """
    Exact steady state of the master equation.

    Raises SingularSystemError when both reset rates vanish, when the
    constrained system is singular, or when the residual exceeds the steady
    tolerance.
    """
    if params.p1 + params.p2 <= 0:
        raise SingularSystemError('Steady state is not unique when both reset rates are zero.')

    warnings = params.validity_warnings()
    for warning in warnings:
        logger.warning('%s: g=%g exceeds %g * min(p1, p2) for p1=%g, p2=%g.',
                       warning, params.g, tolerances.WEAK_COUPLING_RATIO, params.p1, params.p2)

    liouvillian = liouvillian or build_liouvillian(params)
    try:
        matrix, residual = null_state(liouvillian.matrix)
    except SingularSystemError:
        logger.error('Steady-state system is singular for %s.', params)
        raise

    if residual > tolerances.STEADY_RESIDUAL:
        logger.error('Steady-state residual %.3e exceeds tolerance for %s.', residual, params)
        raise SingularSystemError(f'Steady-state residual {residual:.3e} exceeds {tolerances.STEADY_RESIDUAL:g}.')

    rho12 = DensityMatrix(matrix)
    rho1 = rho12.reduced(keep=1)
    rho2 = rho12.reduced(keep=2)
    return SteadyState(
        params=params,
        rho12=rho12,
        rho1=rho1,
        rho2=rho2,
        bloch1=rho1.bloch(),
        bloch2=rho2.bloch(),
        residual=residual,
        warnings=tuple(warnings),
    )


@dataclasses.dataclass(frozen=True)
class Trajectory:
    params: ModelParams
    times: List[float]
    states: List[DensityMatrix]
    dt: float
    max_correction: float


def default_step(params):
    return tolerances.DEFAULT_STEP_SCALE / max(1.0, params.p1 + params.p2, params.g, params.omega)


def stability_bound(params):
    """Largest step allowed by dt * (||H||_2 + p1 + p2) <= STABILITY_GUARD."""
    norm = float(np.linalg.norm(hamiltonian(params), ord=2))
    return tolerances.STABILITY_GUARD / (norm + params.p1 + params.p2)


def rk4_propagator(matrix, h):
    """One classical RK4 step of d vec/dt = L vec, as a matrix."""
    step = h * np.asarray(matrix)
    identity = np.eye(step.shape[0], dtype=complex)
    step2 = step @ step
    step3 = step2 @ step
    return identity + step + step2 / 2 + step3 / 6 + step3 @ step / 24


def propagator_drift(propagator):
    """
    Largest entry by which one step of ``propagator`` fails to keep the trace
    functional and Hermiticity (vec(rho^dagger) = TRANSPOSE conj(vec rho)).
    """
    propagator = np.asarray(propagator)
    trace_drift = np.max(np.abs(TRACE_ROW @ propagator - TRACE_ROW))
    hermiticity_drift = np.max(np.abs(TRANSPOSE @ propagator.conj() @ TRANSPOSE - propagator))
    return float(max(trace_drift, hermiticity_drift))


def _restore_invariants(vector):
    """Re-Hermitize and renormalise a propagated state; returns it and the correction applied."""
    rho = unvectorize(vector)
    hermitian = (rho + rho.conj().T) / 2
    trace = np.trace(hermitian).real
    restored = hermitian / trace
    correction = float(np.max(np.abs(restored - rho)))
    return restored, correction


def evolve(params, rho0, t_end, dt=None, store_every=None):
    """
    Integrate the master equation from ``rho0`` up to ``t_end``.

    The step is shrunk so that an integer number of steps lands on ``t_end``.
    States are stored every ``store_every`` steps and at ``t_end``. Every
    step applies the same propagator, which is checked once to keep trace and
    Hermiticity within the step tolerance; stored states are then
    re-Hermitized and renormalized.
    """
    if not math.isfinite(t_end) or t_end <= 0:
        raise ParameterValueError(f'End time must be positive, got {t_end!r}.')

    dt = default_step(params) if dt is None else dt
    if not math.isfinite(dt) or dt <= 0:
        raise ParameterValueError(f'Time step must be positive, got {dt!r}.')

    bound = stability_bound(params)
    if dt > bound:
        raise StabilityGuardError(dt=dt, bound=bound)

    n_steps = max(1, math.ceil(t_end / dt - 1e-9))
    h = t_end / n_steps

    if store_every is None:
        store_every = max(1, n_steps // 1000)
    if store_every < 1:
        raise ParameterValueError(f'Storage interval must be at least one step, got {store_every!r}.')

    rho0 = DensityMatrix(rho0)
    propagator = rk4_propagator(build_liouvillian(params).matrix, h)
    drift = propagator_drift(propagator)
    if drift > tolerances.STEP_CORRECTION:
        raise InvariantBreachError(f'Step propagator drift {drift:.3e} exceeds {tolerances.STEP_CORRECTION:g}.')
    stride = np.linalg.matrix_power(propagator, store_every)

    times = [0.0]
    states = [rho0]
    max_correction = 0.0
    vector = vectorize(rho0)
    step = 0
    while step < n_steps:
        advance = min(store_every, n_steps - step)
        if advance == store_every:
            vector = stride @ vector
        else:
            vector = np.linalg.matrix_power(propagator, advance) @ vector
        step += advance

        restored, correction = _restore_invariants(vector)
        if correction > tolerances.STEP_CORRECTION:
            raise InvariantBreachError(
                f'State correction {correction:.3e} at t={step * h:.6g} exceeds {tolerances.STEP_CORRECTION:g}.'
            )
        max_correction = max(max_correction, correction)

        times.append(step * h)
        states.append(DensityMatrix(restored))
        vector = vectorize(restored)

    logger.debug('Integrated %d steps of %.3g up to t=%.6g.', n_steps, h, t_end)
    return Trajectory(params=params, times=times, states=states, dt=h, max_correction=max_correction)


def trace_distance(a, b):
    """Half the sum of absolute eigenvalues of a - b."""
    difference = as_matrix(a) - as_matrix(b)
    difference = (difference + difference.conj().T) / 2
    return float(np.sum(np.abs(np.linalg.eigvalsh(difference))) / 2)
