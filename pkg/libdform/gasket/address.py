# -*- coding: utf-8 -*-
# Cell addresses of the Sierpinski gasket: words over {0, 1, 2}.

import itertools
import numpy as np
from libdform.utils import DomainError

ALPHABET = '012'


def check_address(w):
    """Return w as a str address, raise DomainError if it is not a word over {0,1,2}"""
    if isinstance(w, (tuple, list)):
        w = ''.join(str(c) for c in w)
    if not isinstance(w, str) or any(c not in ALPHABET for c in w):
        raise DomainError('"{}" is not a cell address over {{0,1,2}}'.format(w))
    return w


def subcells(w):
    """The three children w0, w1, w2 of cell K_w"""
    w = check_address(w)
    return tuple(w + c for c in ALPHABET)


def parent(w):
    """Address of the cell containing K_w one level up"""
    w = check_address(w)
    if w == '':
        raise DomainError('the whole gasket has no parent cell')
    return w[:-1]


def addresses(m):
    """All 3^m addresses of length m in lexicographic order.

    The order is the one used by every per-cell array in the package: the
    children of the cell at position n sit at positions 3n, 3n+1, 3n+2.
    """
    return [''.join(p) for p in itertools.product(ALPHABET, repeat=m)]


def address_digits(m):
    """(3^m, m) integer matrix of the digits of `addresses(m)`"""
    if m == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((3,) * m).reshape(m, -1).T
    return grids.astype(np.int64)


def address_index(w):
    """Position of w inside `addresses(len(w))`"""
    w = check_address(w)
    index = 0
    for c in w:
        index = 3 * index + int(c)
    return index
