"""
Dense linear algebra for one- and two-qubit operators.

Operators are complex ``numpy`` arrays. Two-qubit operators use the ordered
basis {|00>, |01>, |10>, |11>}: the left (slow) tensor slot is qubit 1, the
heat-bath qubit, and the right slot is qubit 2, the spin-bath qubit.
"""

from collections import namedtuple

import numpy as np
from scipy import linalg as sla

from reset_machine.constants import tolerances
from reset_machine.exceptions import (
    DimensionMismatchError,
    InvalidBlochVectorError,
    InvalidStateError,
    NonHermitianError,
    ParameterValueError,
    SingularSystemError,
)

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

KET_0 = np.array([1, 0], dtype=complex)
KET_1 = np.array([0, 1], dtype=complex)

BlochVector = namedtuple('BlochVector', 'x, y, z')


def as_matrix(operator):
    """Return ``operator`` (array-like or DensityMatrix) as a square complex array."""
    matrix = np.asarray(operator, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(expected='a square matrix', actual=matrix.shape)
    return matrix


def projector(ket):
    ket = np.asarray(ket, dtype=complex)
    return np.outer(ket, ket.conj())


def hermiticity_deviation(matrix):
    matrix = as_matrix(matrix)
    return float(np.max(np.abs(matrix - matrix.conj().T)))


class DensityMatrix:
    """
    A qubit (dim 2) or two-qubit (dim 4) density matrix.

    The invariants (Hermitian, unit trace, positive) are checked once, on
    construction; the stored matrix is read-only.
    """

    def __init__(self, matrix):
        matrix = np.array(as_matrix(matrix), dtype=complex)
        if matrix.shape[0] not in (2, 4):
            raise DimensionMismatchError(expected='2 or 4', actual=matrix.shape[0])

        deviation = hermiticity_deviation(matrix)
        if deviation > tolerances.HERMITICITY:
            raise InvalidStateError(f'Density matrix is not Hermitian (deviation {deviation:.3e}).')

        trace = np.trace(matrix)
        if abs(trace - 1) > tolerances.TRACE:
            raise InvalidStateError(f'Density matrix trace is {trace.real:.12g}, not 1.')

        lowest = np.linalg.eigvalsh(matrix)[0]
        if lowest < -tolerances.POSITIVITY:
            raise InvalidStateError(f'Density matrix has negative eigenvalue {lowest:.3e}.')

        matrix.setflags(write=False)
        self._matrix = matrix

    @property
    def matrix(self):
        return self._matrix

    @property
    def dim(self):
        return self._matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._matrix
        return self._matrix.astype(dtype)

    def __repr__(self):
        return f'DensityMatrix(dim={self.dim})'

    def reduced(self, keep):
        """Reduced state of the kept slot (1 or 2) of a two-qubit state."""
        return DensityMatrix(partial_trace(self._matrix, keep))

    def bloch(self):
        return bloch_from_density(self)

    def purity(self):
        return float(np.real(np.trace(self._matrix @ self._matrix)))


def tensor(a, b):
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace(rho, keep):
    """
    Trace out one qubit of a two-qubit operator.

    ``keep`` names the slot that survives, so ``partial_trace(rho, keep=1)``
    is tr_2(rho).
    """
    matrix = as_matrix(rho)
    if matrix.shape[0] != 4:
        raise DimensionMismatchError(expected=4, actual=matrix.shape[0])

    # indices: row (a, b), column (c, d)
    blocks = matrix.reshape(2, 2, 2, 2)
    if keep == 1:
        return np.einsum('abcb->ac', blocks)
    if keep == 2:
        return np.einsum('abad->bd', blocks)
    raise ParameterValueError(f'Slot to keep must be 1 or 2, got {keep!r}.')


def commutator(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(expected=a.shape[0], actual=b.shape[0])
    return a @ b - b @ a


def hermitian_eigenvalues(matrix):
    """Ascending real eigenvalues of a Hermitian matrix."""
    matrix = as_matrix(matrix)
    deviation = hermiticity_deviation(matrix)
    if deviation > tolerances.HERMITICITY:
        raise NonHermitianError(deviation=deviation)
    return [float(value) for value in np.linalg.eigvalsh(matrix)]


def solve_linear(a, b):
    """
    Solve ``a x = b`` by LU decomposition with partial pivoting.

    Raises SingularSystemError when a pivot falls below the relative pivot
    tolerance, or when the solution does not reproduce ``b``.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(expected='a square system', actual=a.shape)
    if b.shape[0] != a.shape[0]:
        raise DimensionMismatchError(expected=a.shape[0], actual=b.shape[0])

    scale = max(1.0, float(np.max(np.abs(a))))
    lu, pivots = sla.lu_factor(a, check_finite=True)
    smallest = float(np.min(np.abs(np.diag(lu))))
    if smallest < tolerances.PIVOT * scale:
        raise SingularSystemError(
            f'Linear system is singular to tolerance (smallest pivot {smallest:.3e}).'
        )

    x = sla.lu_solve((lu, pivots), b)
    residual = float(np.max(np.abs(a @ x - b)))
    if residual > tolerances.SOLVE_RESIDUAL * max(float(np.max(np.abs(b))), np.finfo(float).tiny):
        raise SingularSystemError(f'Linear solve is ill-conditioned (residual {residual:.3e}).')
    return x


def bloch_from_density(rho):
    matrix = as_matrix(rho)
    if matrix.shape[0] != 2:
        raise DimensionMismatchError(expected=2, actual=matrix.shape[0])
    return BlochVector(*(float(np.real(np.trace(matrix @ sigma))) for sigma in PAULIS))


def density_from_bloch(r):
    r = BlochVector(*(float(component) for component in r))
    norm = float(np.sqrt(r.x ** 2 + r.y ** 2 + r.z ** 2))
    if norm > 1 + tolerances.BLOCH_NORM:
        raise InvalidBlochVectorError(norm=norm)
    return DensityMatrix((IDENTITY_2 + r.x * SIGMA_X + r.y * SIGMA_Y + r.z * SIGMA_Z) / 2)


def l1_coherence(rho):
    """Sum of the absolute off-diagonal entries in the computational basis."""
    matrix = as_matrix(rho)
    magnitudes = np.abs(matrix)
    return float(np.sum(magnitudes) - np.sum(np.diag(magnitudes)))
