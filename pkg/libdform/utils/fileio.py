# -*- coding: utf-8 -*-
# referring to https://github.com/open-mmlab/mmcv/blob/master/mmcv/utils/path.py

import os
import os.path as osp
import sys
import json
from pathlib import Path

import numpy as np
import pandas as pd


def is_str(x):
    """bool: indicate whether the x is string"""
    return isinstance(x, str)


def check_file_exist(filename, msg_tmpl='file "{}" does not exist'):
    """Check the file path"""
    if not osp.isfile(filename):
        raise FileNotFoundError(msg_tmpl.format(filename))


def mkdir_or_exist(dir_name, mode=0o777):
    """Create the directory recursively"""
    if dir_name == '':
        return
    dir_name = osp.expanduser(dir_name)
    os.makedirs(dir_name, mode=mode, exist_ok=True)


def _to_builtin(obj):
    """numpy scalars/arrays -> python objects so json keeps shortest repr"""
    if isinstance(obj, dict):
        return {str(k): _to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_builtin(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _to_builtin(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def dumps(obj, file_format='json'):
    """Serialize a result.

    Parameters
    ----------
    obj: dict or pandas.DataFrame
        json payload, or a table for csv output
    file_format: str
        'json' or 'csv'

    Returns
    -------
    text: str
    """
    if file_format == 'json':
        if isinstance(obj, pd.DataFrame):
            obj = obj.to_dict(orient='records')
        return json.dumps(_to_builtin(obj), indent=1, sort_keys=False) + '\n'
    elif file_format == 'csv':
        if not isinstance(obj, pd.DataFrame):
            obj = pd.DataFrame([_to_builtin(obj)])
        # floats keep python's shortest round-trip repr, '.' decimal
        return obj.to_csv(index=False, lineterminator='\n')
    raise ValueError('Only json/csv are supported now!')


def dump(obj, file=None, file_format='json'):
    """Write a result to `file` (str or Path) or to stdout when file is None"""
    text = dumps(obj, file_format)
    if file is None:
        sys.stdout.write(text)
        return text
    if is_str(file):
        file = Path(file)
    mkdir_or_exist(str(file.parent))
    with file.open('w', encoding='utf-8') as f:
        f.write(text)
    return text
