"""Development settings and globals."""

from os import environ

from resetmachineserver.settings.base import *
from resetmachineserver.settings.logger import get_logger_config

########## DEBUG CONFIGURATION
# See: https://docs.djangoproject.com/en/dev/ref/settings/#debug
# With debug on, every log line goes to the console handler.
DEBUG = environ.get('RESET_MACHINE_DEBUG', 'false').lower() in ('1', 'true', 'yes')
########## END DEBUG CONFIGURATION


########## LOGGING CONFIGURATION
LOGGING = get_logger_config(
    log_dir=environ.get('RESET_MACHINE_LOG_DIR', '/var/tmp'),
    dev_env=bool(environ.get('RESET_MACHINE_LOG_DIR')),
    debug=DEBUG,
    local_loglevel=environ.get('RESET_MACHINE_LOG_LEVEL', 'INFO'),
)
########## END LOGGING CONFIGURATION
