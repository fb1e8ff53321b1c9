# -*- coding: utf-8 -*-

import random
import numpy as np


def set_random_seed(seed=26):
    """Set random seed.

    Args:
        seed (int): Seed to be used by `random` and `numpy.random`.

    Returns:
        numpy.random.Generator: a generator seeded the same way, for callers
        that prefer an explicit stream.
    """
    random.seed(seed)
    np.random.seed(seed)
    return np.random.default_rng(seed)
