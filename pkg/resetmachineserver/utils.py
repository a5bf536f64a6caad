# Put utilities that are used in managing the project or local environment here.
# Utilities the computations depend on go under reset_machine.


import logging
from contextlib import contextmanager


@contextmanager
def temp_log_level(logger_name, log_level=logging.CRITICAL):
    """
    Temporarily set the level of a logger, by default silencing it.

    Used around deliberately out-of-range runs whose warnings are expected.
    """
    logger = logging.getLogger(logger_name)
    original_log_level = logger.level
    logger.setLevel(log_level)
    try:
        yield logger
    finally:
        logger.setLevel(original_log_level)
