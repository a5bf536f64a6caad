"""
Physical ingredients of the reset machine: parameters, the two-qubit
Hamiltonian with its energy-swapping coupling, and the two bath states.
"""

import dataclasses
import logging
import math
from collections import namedtuple

import numpy as np
from scipy.special import expit

from reset_machine.constants import tolerances
from reset_machine.exceptions import ParameterValueError
from reset_machine.linalg import (
    IDENTITY_2,
    KET_0,
    KET_1,
    DensityMatrix,
    projector,
    tensor,
)

logger = logging.getLogger(__name__)

VALIDITY_WARNING = 'reset-model validity'

KET_PLUS = (KET_0 + KET_1) / math.sqrt(2)
KET_MINUS = (KET_0 - KET_1) / math.sqrt(2)

EquilibriumPair = namedtuple('EquilibriumPair', 'tau1, tau2')


def _require_temperature(name, value):
    if not math.isfinite(value) or value <= 0:
        raise ParameterValueError(f'Temperature {name} must be positive and finite, got {value!r}.')


@dataclasses.dataclass(frozen=True)
class ModelParams:
    """
    Parameters of the two-qubit reset machine.

    Energies and temperatures share units (k_B = 1). Both qubits have the
    same splitting ``omega``; ``p1`` and ``p2`` are reset rates per unit time.
    """

    g: float
    t1: float
    t2: float
    p1: float
    p2: float
    omega: float = 1.0

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ParameterValueError(f'Parameter {field.name} must be a number, got {value!r}.')
            if not math.isfinite(value):
                raise ParameterValueError(f'Parameter {field.name} must be finite, got {value!r}.')
            object.__setattr__(self, field.name, value)

        _require_temperature('t1', self.t1)
        _require_temperature('t2', self.t2)
        if self.omega <= 0:
            raise ParameterValueError(f'Splitting omega must be positive, got {self.omega!r}.')
        if self.g < 0:
            raise ParameterValueError(f'Coupling g must be non-negative, got {self.g!r}.')
        if self.p1 < 0 or self.p2 < 0:
            raise ParameterValueError(f'Reset rates must be non-negative, got p1={self.p1!r}, p2={self.p2!r}.')

    @property
    def beta1(self):
        return 1.0 / self.t1

    @property
    def beta2(self):
        return 1.0 / self.t2

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def as_dict(self):
        return dataclasses.asdict(self)

    def validity_warnings(self):
        """
        Warnings about the parameter set. The reset model is derived for weak
        coupling, so a coupling larger than a fraction of the slower reset
        rate is flagged.
        """
        if self.g > tolerances.WEAK_COUPLING_RATIO * min(self.p1, self.p2):
            return [VALIDITY_WARNING]
        return []


def excitation_number():
    """Total excitation number N = |1><1| x I + I x |1><1|."""
    excited = projector(KET_1)
    return tensor(excited, IDENTITY_2) + tensor(IDENTITY_2, excited)


def hamiltonian(params):
    excited = projector(KET_1)
    local = (params.omega / 2) * excited
    h = tensor(local, IDENTITY_2) + tensor(IDENTITY_2, local)

    # |01><10| + |10><01|
    h[1, 2] += params.g
    h[2, 1] += params.g
    return h


def thermal_state(omega, t1):
    """Gibbs state of the heat-bath qubit, diagonal in the computational basis."""
    _require_temperature('t1', t1)
    exponent = omega / t1
    ground = expit(exponent)
    excited = expit(-exponent)
    return DensityMatrix(np.diag([ground, excited]).astype(complex))


def spin_equilibrium_state(omega, t2):
    """
    Equilibrium state of the spin-bath qubit, diagonal in the sigma_x basis
    with Bloch vector (tanh(omega / (2 t2)), 0, 0).
    """
    _require_temperature('t2', t2)
    exponent = omega / t2
    return DensityMatrix(
        expit(exponent) * projector(KET_PLUS) + expit(-exponent) * projector(KET_MINUS)
    )


def equilibrium_pair(params):
    return EquilibriumPair(
        tau1=thermal_state(params.omega, params.t1),
        tau2=spin_equilibrium_state(params.omega, params.t2),
    )
