"""Common settings and globals."""

from os import environ
from sys import stderr

########## DEBUG CONFIGURATION
# See: https://docs.djangoproject.com/en/dev/ref/settings/#debug
DEBUG = False
########## END DEBUG CONFIGURATION


########## DATABASE CONFIGURATION
# The toolkit keeps no state between runs.
DATABASES = {}
########## END DATABASE CONFIGURATION


########## GENERAL CONFIGURATION
# See: https://docs.djangoproject.com/en/dev/ref/settings/#time-zone
TIME_ZONE = 'UTC'

# See: https://docs.djangoproject.com/en/dev/ref/settings/#language-code
LANGUAGE_CODE = 'en-us'

# See: https://docs.djangoproject.com/en/dev/ref/settings/#use-i18n
USE_I18N = False

USE_TZ = True

DEFAULT_CHARSET = 'utf-8'
########## END GENERAL CONFIGURATION


########## SECRET CONFIGURATION
# See: https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
# Note: nothing is signed; Django requires a value.
SECRET_KEY = environ.get('RESET_MACHINE_SECRET_KEY', 'reset-machine-insecure-key')
########## END SECRET CONFIGURATION


########## APP CONFIGURATION
DJANGO_APPS = (
    'django.contrib.contenttypes',
    'django.contrib.auth',
)

THIRD_PARTY_APPS = (
    'rest_framework',
)

LOCAL_APPS = (
    'reset_machine',
)

# See: https://docs.djangoproject.com/en/dev/ref/settings/#installed-apps
INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS
########## END APP CONFIGURATION


########## LOGGING CONFIGURATION
# See: https://docs.djangoproject.com/en/dev/ref/settings/#logging
# Console output goes to stderr so that CSV and JSON on stdout stay clean.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s %(levelname)s %(process)d [%(name)s] %(filename)s:%(lineno)d - %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'standard',
            'stream': stderr,
        }
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'ERROR',
            'propagate': False,
        },
        'reset_machine': {
            'handlers': ['console'],
            'level': environ.get('RESET_MACHINE_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}
########## END LOGGING CONFIGURATION


########## RESET MACHINE CONFIGURATION

# Worker processes for sweeps; None means one per processor.
RESET_MACHINE_WORKERS = int(environ['RESET_MACHINE_WORKERS']) if environ.get('RESET_MACHINE_WORKERS') else None

# Spin-bath temperature used by the exact solver when none is given.
RESET_MACHINE_LOW_T2_DEFAULT = float(environ.get('RESET_MACHINE_LOW_T2_DEFAULT', 0.01))

# Significant digits of numbers in CSV output.
RESET_MACHINE_CSV_PRECISION = int(environ.get('RESET_MACHINE_CSV_PRECISION', 17))

RESET_MACHINE_PROGRESS = environ.get('RESET_MACHINE_PROGRESS', 'false').lower() in ('1', 'true', 'yes')

########## END RESET MACHINE CONFIGURATION
