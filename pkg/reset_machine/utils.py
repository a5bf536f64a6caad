import math
import os

import numpy as np
from django.conf import settings

from reset_machine.constants import sweep_axes
from reset_machine.exceptions import ParameterValueError

DEFAULT_CSV_PRECISION = 17


def get_setting(name, default=None):
    return getattr(settings, name, default)


def default_workers():
    """
    Worker processes for grid evaluation: the RESET_MACHINE_WORKERS setting,
    or the number of processors.
    """
    return get_setting('RESET_MACHINE_WORKERS') or os.cpu_count() or 1


def parse_float(text, name):
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise ParameterValueError(f'{name} must be a number, got {text!r}.')
    if not math.isfinite(value):
        raise ParameterValueError(f'{name} must be finite, got {text!r}.')
    return value


def parse_range(text, name='range'):
    """
    Parse ``min:max:steps`` into (min, max, steps).

    :param text: the range as given on the command line
    :param name: the option name used in error messages
    :return: tuple of two floats and an int
    """
    parts = str(text).split(':')
    if len(parts) != 3:
        raise ParameterValueError(f'{name} must look like min:max:steps, got {text!r}.')
    minimum = parse_float(parts[0], f'{name} min')
    maximum = parse_float(parts[1], f'{name} max')
    try:
        steps = int(parts[2])
    except ValueError:
        raise ParameterValueError(f'{name} steps must be an integer, got {parts[2]!r}.')
    validate_range(minimum, maximum, steps, sweep_axes.LINEAR, name)
    return minimum, maximum, steps


def validate_range(minimum, maximum, steps, scale, name='range'):
    if not minimum < maximum:
        raise ParameterValueError(f'{name} needs min < max, got {minimum!r} and {maximum!r}.')
    if steps < 2:
        raise ParameterValueError(f'{name} needs at least 2 steps, got {steps!r}.')
    if scale not in sweep_axes.SCALES:
        raise ParameterValueError(f'{name} scale must be one of {", ".join(sweep_axes.SCALES)}, got {scale!r}.')
    if scale == sweep_axes.LOG and minimum <= 0:
        raise ParameterValueError(f'{name} on a log scale needs min > 0, got {minimum!r}.')


def value_range(minimum, maximum, steps, scale=sweep_axes.LINEAR):
    """Grid of ``steps`` values from ``minimum`` to ``maximum``, both included."""
    validate_range(minimum, maximum, steps, scale)
    if scale == sweep_axes.LOG:
        values = np.geomspace(minimum, maximum, steps)
    else:
        values = np.linspace(minimum, maximum, steps)
    return [float(value) for value in values]


def format_number(value, precision=None):
    """Round-trip safe text for a CSV cell."""
    if value is None:
        return None
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (int, float, np.floating, np.integer)):
        precision = precision or get_setting('RESET_MACHINE_CSV_PRECISION', DEFAULT_CSV_PRECISION)
        return f'{float(value):.{precision}g}'
    return value


def format_row(row, precision=None):
    return {key: format_number(value, precision) for key, value in row.items()}
