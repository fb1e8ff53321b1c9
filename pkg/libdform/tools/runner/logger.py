# -*- coding: utf-8 -*-
import sys
import logging

FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


def get_logger(log_file=None, log_level=logging.INFO):
    """Get the package logger.

    The logger is named after the top-level package ("libdform"), so every
    module logger created with `logging.getLogger(__name__)` propagates to it.
    A StreamHandler on stderr is added on first use; stdout is reserved for
    results. If `log_file` is specified, a FileHandler is added as well.

    Args:
        log_file (str | None): The log filename.
        log_level (int): The logger level.

    Returns:
        logging.Logger: The package logger.
    """
    logger = logging.getLogger(__name__.split('.')[0])
    logger.setLevel(log_level)
    if not logger.handlers:
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(logging.Formatter(FORMAT))
        logger.addHandler(stream_handler)
    for handler in logger.handlers:
        handler.setLevel(log_level)
    if log_file is not None and not any(
            isinstance(h, logging.FileHandler) and h.baseFilename == log_file
            for h in logger.handlers):
        file_handler = logging.FileHandler(log_file, 'w')
        file_handler.setFormatter(logging.Formatter(FORMAT))
        file_handler.setLevel(log_level)
        logger.addHandler(file_handler)

    return logger


def print_log(msg, logger=None, level=logging.INFO):
    """Send msg to `logger`: a Logger, a logger name, "silent" to drop it, or
    None to write it to stderr (stdout carries results only)."""
    if logger is None:
        print(msg, file=sys.stderr)
    elif isinstance(logger, logging.Logger):
        logger.log(level, msg)
    elif logger == 'silent':
        pass
    elif isinstance(logger, str):
        logging.getLogger(logger).log(level, msg)
    else:
        raise TypeError(
            'logger should be either a logging.Logger object, str, '
            '"silent" or None, but got {}'.format(type(logger)))
