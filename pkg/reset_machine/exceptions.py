import abc

USAGE_EXIT_CODE = 2
NUMERICAL_EXIT_CODE = 3


class BaseError(Exception, metaclass=abc.ABCMeta):
    """
    Base error.
    """

    message = None
    exit_code = NUMERICAL_EXIT_CODE

    def __str__(self):
        return self.message


class ParameterValueError(BaseError):
    """Raise if a parameter is outside the model range."""
    exit_code = USAGE_EXIT_CODE

    def __init__(self, message, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.message = message


class PerturbativeRangeError(ParameterValueError):
    """Raise if a closed-form formula is requested outside the range it was derived for."""


class DimensionMismatchError(BaseError):
    """
    Raise if an operator has the wrong dimension for the operation.
    """
    def __init__(self, *args, **kwargs):
        expected = kwargs.pop('expected')
        actual = kwargs.pop('actual')
        super().__init__(*args, **kwargs)
        self.message = self.message_template.format(expected=expected, actual=actual)

    @property
    def message_template(self):
        return 'Expected dimension {expected}, got {actual}.'


class NonHermitianError(BaseError):
    """
    Raise if a matrix that must be Hermitian is not.
    """
    def __init__(self, *args, **kwargs):
        deviation = kwargs.pop('deviation')
        super().__init__(*args, **kwargs)
        self.message = self.message_template.format(deviation=deviation)

    @property
    def message_template(self):
        return 'Matrix is not Hermitian (max |M - M^dagger| = {deviation:.3e}).'


class InvalidStateError(BaseError):
    """Raise if a matrix violates the density matrix invariants."""
    def __init__(self, message, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.message = message


class InvalidBlochVectorError(BaseError):
    """
    Raise if a Bloch vector lies outside the unit ball.
    """
    def __init__(self, *args, **kwargs):
        norm = kwargs.pop('norm')
        super().__init__(*args, **kwargs)
        self.message = self.message_template.format(norm=norm)

    @property
    def message_template(self):
        return 'Bloch vector norm {norm:.12g} exceeds 1.'


class SingularSystemError(BaseError):
    """Raise if a linear system is singular to tolerance."""
    def __init__(self, message, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.message = message


class StabilityGuardError(BaseError):
    """
    Raise if the integration step violates the stability guard.
    """
    def __init__(self, *args, **kwargs):
        dt = kwargs.pop('dt')
        bound = kwargs.pop('bound')
        super().__init__(*args, **kwargs)
        self.message = self.message_template.format(dt=dt, bound=bound)

    @property
    def message_template(self):
        return 'Step dt={dt:.6g} violates the stability guard; use dt <= {bound:.6g}.'


class InvariantBreachError(BaseError):
    """Raise if a propagated state drifts beyond the allowed correction."""
    def __init__(self, message, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.message = message


class NoBoundaryError(BaseError):
    """
    Raise if no magic boundary lies inside the searched temperature range.
    """
    def __init__(self, *args, **kwargs):
        lower = kwargs.pop('lower')
        upper = kwargs.pop('upper')
        super().__init__(*args, **kwargs)
        self.message = self.message_template.format(lower=lower, upper=upper)

    @property
    def message_template(self):
        return 'No boundary in range: max_sum - 1 does not change sign on T1 in [{lower:.6g}, {upper:.6g}].'
