# -*- coding: utf-8 -*-
# referring to https://github.com/open-mmlab/mmcv/blob/master/mmcv/utils/config.py

import os.path as osp
import json
from copy import deepcopy

import yaml
try:
    from yaml import CLoader as Loader
except ImportError:
    from yaml import Loader
from addict import Dict
from libdform.utils import check_file_exist, DomainError, ResourceLimitError


DEFAULTS = dict(
    max_level=12,
    level=3,
    refinement=3,
    format='json',
    output=None,
    seed=26,
    metric=dict(method='highs', facets=32, max_iter=20000, step=0.5),
    tolerances=dict(harmonic=1e-9, psd=1e-12, constraint=1e-9,
                    quadrature=1e-6, rank=1e-10, solver=1e-8))


class ConfigDict(Dict):
    """addict.Dict that raises on missing keys instead of growing them"""

    def __missing__(self, name):
        raise KeyError(name)

    def __getattr__(self, name):
        try:
            return super(ConfigDict, self).__getattr__(name)
        except KeyError:
            raise AttributeError("config has no key '{}'".format(name)) from None


def _read_config_file(filename):
    """Nested dict from a yaml/json file, with its `_base_` files merged underneath"""
    filename = osp.abspath(osp.expanduser(filename))
    check_file_exist(filename)
    with open(filename, 'r') as f:
        if filename.endswith(('.yaml', '.yml')):
            cfg_dict = yaml.load(f, Loader=Loader) or dict()
        elif filename.endswith('.json'):
            cfg_dict = json.load(f)
        else:
            raise DomainError('config "{}" must be a yaml or json file'.format(filename))
    if not isinstance(cfg_dict, dict):
        raise DomainError('config "{}" must hold a mapping'.format(filename))

    bases = cfg_dict.pop('_base_', [])
    merged = dict()
    for base in bases if isinstance(bases, list) else [bases]:
        base_dict = _read_config_file(osp.join(osp.dirname(filename), base))
        if merged.keys() & base_dict.keys():
            raise DomainError('base configs of "{}" define the same keys'.format(filename))
        merged.update(base_dict)
    _merge_into(cfg_dict, merged)
    return merged


def _merge_into(src, dst):
    # values of src win; a nested `_delete_: true` replaces the whole subtree
    for k, v in src.items():
        if isinstance(v, dict) and k in dst and not v.pop('_delete_', False):
            if not isinstance(dst[k], dict):
                raise DomainError('config key "{}" is not a section in its base'.format(k))
            _merge_into(v, dst[k])
        else:
            dst[k] = v


class Config(object):
    """Attribute-access run configuration.

    Example:
        >>> cfg = Config(dict(level=3, tolerances=dict(psd=1e-12)))
        >>> cfg.tolerances.psd
        1e-12
        >>> cfg.merge_from_dict({'tolerances.psd': 1e-10})
        >>> cfg.tolerances.psd
        1e-10
    """

    def __init__(self, cfg_dict=None, filename=None):
        if cfg_dict is None:
            cfg_dict = dict()
        elif not isinstance(cfg_dict, dict):
            raise TypeError('cfg_dict must be a dict, but got {}'.format(type(cfg_dict)))
        self._cfg_dict = ConfigDict(cfg_dict)
        self.filename = filename

    @staticmethod
    def fromfile(filename):
        return Config(_read_config_file(filename), filename=filename)

    def to_dict(self):
        return self._cfg_dict.to_dict()

    def __repr__(self):
        return 'Config (path: {}): {!r}'.format(self.filename, self.to_dict())

    def __getattr__(self, name):
        if name.startswith('__') or name == '_cfg_dict':
            raise AttributeError(name)
        return getattr(self._cfg_dict, name)

    def __getitem__(self, name):
        return self._cfg_dict[name]

    def merge_from_dict(self, options):
        """Merge dotted keys, eg: {'metric.facets': 64}"""
        nested = dict()
        for full_key, v in options.items():
            d = nested
            *sections, key = full_key.split('.')
            for section in sections:
                d = d.setdefault(section, dict())
            d[key] = v
        merged = self._cfg_dict.to_dict()
        _merge_into(nested, merged)
        self._cfg_dict = ConfigDict(merged)


def default_config():
    """Config filled with the library defaults"""
    return Config(deepcopy(DEFAULTS))


def parse_options(pairs):
    """['a.b=1', 'c=x'] -> {'a.b': 1, 'c': 'x'}, values read as yaml scalars"""
    options = dict()
    for pair in pairs or []:
        if '=' not in pair:
            raise DomainError('option "{}" is not of the form KEY=VALUE'.format(pair))
        key, value = pair.split('=', 1)
        value = yaml.load(value, Loader=Loader)
        if isinstance(value, str):
            # pyyaml reads '1e-10' as a string
            try:
                value = float(value)
            except ValueError:
                pass
        options[key.strip()] = value
    return options


def build_run_config(cfg_file=None, options=None):
    """Defaults <- config file <- dotted overrides, then validated.

    Parameters
    ----------
    cfg_file: str or None
        yaml/json file with any subset of the default keys
    options: dict or None
        dotted-key overrides, eg: {'tolerances.psd': 1e-10, 'level': 4}

    Returns
    -------
    cfg: Config
    """
    cfg = default_config()
    if cfg_file is not None:
        file_cfg = Config.fromfile(cfg_file)
        cfg.merge_from_dict(_flatten(file_cfg.to_dict()))
    if options:
        cfg.merge_from_dict(options)
    check_run_config(cfg)
    return cfg


def check_run_config(cfg):
    """Validate the run configuration invariants"""
    if cfg.format not in ('json', 'csv'):
        raise DomainError('format must be json or csv, but got {}'.format(cfg.format))
    for key in ('level', 'refinement', 'max_level'):
        if not isinstance(cfg[key], int) or cfg[key] < 0:
            raise DomainError('{} must be a non-negative integer'.format(key))
    if cfg.level + cfg.refinement > cfg.max_level:
        raise ResourceLimitError('level + refinement = {} exceeds max level {}'.format(
            cfg.level + cfg.refinement, cfg.max_level))
    for key, value in cfg.tolerances.items():
        if not value > 0:
            raise DomainError('tolerance {} must be positive'.format(key))


def _flatten(d, prefix=''):
    out = dict()
    for k, v in d.items():
        if isinstance(v, dict) and v:
            out.update(_flatten(v, prefix + k + '.'))
        else:
            out[prefix + k] = v
    return out
