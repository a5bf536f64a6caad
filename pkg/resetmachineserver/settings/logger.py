"""Logging configuration"""

import os
import sys

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']

STANDARD_FORMAT = '%(asctime)s %(levelname)s %(process)d [%(name)s] %(filename)s:%(lineno)d - %(message)s'


def get_logger_config(log_dir='/var/tmp',
                      log_filename='reset_machine.log',
                      dev_env=False,
                      debug=False,
                      local_loglevel='INFO',
                      run_label='reset-machine'):
    """
    Return the logging config dictionary to assign to LOGGING.

    With debug set, every logger writes to the console handler. Otherwise
    they write to the 'local' handler: a rotating file in log_dir when
    dev_env is set, stderr when it is not. Both handlers stay off stdout,
    where the commands write their results.
    """
    if local_loglevel not in LOG_LEVELS:
        local_loglevel = 'INFO'

    handlers = ['console'] if debug else ['local']
    config = {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'standard': {'format': STANDARD_FORMAT},
            'labelled': {'format': f'[{run_label}] {STANDARD_FORMAT}'},
        },
        'handlers': {
            'console': {
                'level': 'DEBUG' if debug else 'INFO',
                'class': 'logging.StreamHandler',
                'formatter': 'standard',
                'stream': sys.stderr,
            },
        },
        'loggers': {
            'django': {'handlers': handlers, 'level': 'INFO', 'propagate': True},
            'reset_machine': {'handlers': handlers, 'level': local_loglevel, 'propagate': False},
            '': {'handlers': handlers, 'level': 'WARNING', 'propagate': False},
        },
    }

    if dev_env:
        local = {
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': os.path.join(log_dir, log_filename),
            'maxBytes': 2 * 1024 * 1024,
            'backupCount': 5,
        }
    else:
        local = {'class': 'logging.StreamHandler', 'stream': sys.stderr}
    local.update(level=local_loglevel, formatter='labelled')
    config['handlers']['local'] = local

    return config
