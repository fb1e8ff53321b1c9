# -*- coding: utf-8 -*-
# Package logger, timer and seeding.

import logging
import time

import numpy as np
import pytest

from libdform.tools import Timer, get_logger, print_log, set_random_seed
from libdform.tools.runner.timer import TimerError


def test_get_logger(tmp_path):
    log_file = str(tmp_path / 'run.log')
    logger = get_logger(log_file, logging.DEBUG)
    assert logger.name == 'libdform'
    assert logger is get_logger(log_file, logging.DEBUG)
    assert sum(isinstance(h, logging.FileHandler) for h in logger.handlers) == 1
    logger.debug('written to file')
    for handler in logger.handlers:
        handler.flush()
    with open(log_file) as f:
        assert 'written to file' in f.read()
    for handler in [h for h in logger.handlers if isinstance(h, logging.FileHandler)]:
        logger.removeHandler(handler)
        handler.close()


def test_print_log(capsys, caplog):
    print_log('plain')
    captured = capsys.readouterr()
    assert captured.out == '' and captured.err == 'plain\n'
    caplog.set_level(logging.INFO, logger='libdform.test')
    print_log('named', logger='libdform.test')
    assert 'named' in caplog.text
    print_log('quiet', logger='silent')
    assert 'quiet' not in caplog.text
    with pytest.raises(TypeError):
        print_log('bad', logger=1)


def test_timer(caplog):
    caplog.set_level(logging.DEBUG, logger='libdform.timer')
    with Timer(print_tmpl='block: {:.3f}s', logger='libdform.timer') as timer:
        time.sleep(0.01)
        assert timer.is_running
        assert timer.toc() > 0.
    assert not timer.is_running
    assert 'block:' in caplog.text
    with pytest.raises(TimerError):
        timer.since_last()


def test_seed():
    a = set_random_seed(7).normal(size=3)
    b = set_random_seed(7).normal(size=3)
    np.testing.assert_array_equal(a, b)
    set_random_seed(7)
    first = np.random.uniform()
    set_random_seed(7)
    assert np.random.uniform() == first


if __name__ == '__main__':
    logger = get_logger(log_level=logging.DEBUG)
    with Timer(print_tmpl='sleep: {:.3f}s', logger=logger):
        time.sleep(0.1)
