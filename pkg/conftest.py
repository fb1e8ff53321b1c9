# -*- coding: utf-8 -*-
import os.path as osp
import sys

import pytest

sys.path.insert(0, osp.dirname(osp.abspath(__file__)))

from libdform.tools import set_random_seed  # noqa: E402


@pytest.fixture
def rng():
    """numpy Generator seeded with the default seed 26"""
    return set_random_seed(26)
