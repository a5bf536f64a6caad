"""Test settings and globals."""

from resetmachineserver.settings.base import *

# Sweeps in tests run in-process unless a test asks for workers.
RESET_MACHINE_WORKERS = 1

RESET_MACHINE_LOW_T2_DEFAULT = 0.01

RESET_MACHINE_CSV_PRECISION = 17

RESET_MACHINE_PROGRESS = False

# Keep validity warnings out of test output.
LOGGING['handlers']['null'] = {'class': 'logging.NullHandler'}
LOGGING['loggers']['reset_machine']['handlers'] = ['null']
