# -*- coding: utf-8 -*-
# Command line entry point: `libdform [options] <command> [command options]`.
#
# Results go to stdout (or --output) as json or csv, logs and errors go to
# stderr. Exit status: 0 ok, 2 usage/domain errors, 3 numeric/solver failures.

import sys
import logging
from argparse import ArgumentParser

import pandas as pd

from libdform.energy import build_chart, kusuoka_table, z_field, c_z_bound
from libdform.expr import parse
from libdform.forms import Form1, exact_form, energy_identity_report, circle_constraints, \
    circle_quadrature, projection_matrices, tangent_projection, l2_inner, quotient_norm
from libdform.gasket import build_level_graph
from libdform.paths import EdgePath, integrate_form, euclidean_length, intrinsic_distance, \
    mu_length, METHODS
from libdform.utils import DFormError, DomainError, dump
from .configs import build_run_config, parse_options
from .runner import Timer, get_logger, set_random_seed

COMMANDS = ('gasket', 'chart', 'kusuoka', 'zfield', 'energy', 'integrate', 'ftli',
            'distance', 'length', 'circle')


class Result(object):
    """A json payload and, when the result is naturally tabular, a csv table"""

    def __init__(self, payload, table=None):
        self.payload = payload
        self.table = table

    def select(self, file_format):
        if file_format == 'csv' and self.table is not None:
            return self.table
        return self.payload


def build_parser():
    parser = ArgumentParser(prog='libdform',
                            description='Differential forms and Dirichlet forms on the Sierpinski gasket')
    parser.add_argument('--config', help='yaml/json config file')
    parser.add_argument('--seed', type=int, help='random seed')
    parser.add_argument('--max-level', type=int, help='resource cap on levels')
    parser.add_argument('--tol', action='append', default=[], metavar='KEY=VALUE',
                        help='tolerance override, eg: psd=1e-10')
    parser.add_argument('--cfg-options', action='append', default=[], metavar='KEY=VALUE',
                        help='dotted config override, eg: metric.facets=64')
    parser.add_argument('--output', help='output file (default: stdout)')
    parser.add_argument('--format', choices=['json', 'csv'])
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    parser.add_argument('--log-file')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    for name, help_text in (('gasket', 'level-m graph export'),
                            ('chart', 'harmonic coordinates of the level-m vertices'),
                            ('kusuoka', 'Kusuoka measure of the level-m cells'),
                            ('zfield', 'Z matrices of the level-m cells')):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--level', type=int)

    p = sub.add_parser('energy', help='graph energy of F o Phi against |dF|_Z^2')
    p.add_argument('--f', required=True, help='expression in x, y')
    p.add_argument('--level', type=int)

    p = sub.add_parser('integrate', help='line integral of wx dx + wy dy')
    p.add_argument('--wx', required=True)
    p.add_argument('--wy', required=True)
    p.add_argument('--path', required=True, help='bottom|left|right or comma list of vertices')
    p.add_argument('--refine', type=int)
    p.add_argument('--level', type=int, help='level of the path')

    p = sub.add_parser('ftli', help='line integral of dF against the endpoint difference')
    p.add_argument('--f', required=True)
    p.add_argument('--path', required=True)
    p.add_argument('--refine', type=int)
    p.add_argument('--level', type=int, help='level of the path')

    p = sub.add_parser('distance', help='intrinsic metric estimate between two vertices')
    p.add_argument('--from', dest='source', required=True, help='vertex, eg: q0 or 01.2')
    p.add_argument('--to', dest='target', required=True)
    p.add_argument('--level', type=int)
    p.add_argument('--method', choices=METHODS)
    p.add_argument('--facets', type=int)

    p = sub.add_parser('length', help='Euclidean and intrinsic lengths of a path')
    p.add_argument('--path', required=True)
    p.add_argument('--refine', type=int)
    p.add_argument('--level', type=int)

    p = sub.add_parser('circle', help='L2 inner product of 1-forms on the unit circle')
    p.add_argument('--wx', required=True)
    p.add_argument('--wy', required=True)
    p.add_argument('--ex', help='x coefficient of the second form (default: wx)')
    p.add_argument('--ey', help='y coefficient of the second form (default: wy)')
    p.add_argument('--points', type=int, default=64, help='equispaced quadrature points')
    p.add_argument('--at', default='1,0', help='point x,y of the circle for the fiber norm')
    return parser


def _options(args):
    options = parse_options(['tolerances.' + t if '.' not in t.split('=', 1)[0] else t
                             for t in args.tol])
    options.update(parse_options(args.cfg_options))
    for key, value in (('seed', args.seed), ('max_level', args.max_level),
                       ('output', args.output), ('format', args.format),
                       ('level', getattr(args, 'level', None)),
                       ('metric.method', getattr(args, 'method', None)),
                       ('metric.facets', getattr(args, 'facets', None))):
        if value is not None:
            options[key] = value
    if hasattr(args, 'refine'):
        if args.refine is not None:
            options['refinement'] = args.refine
    else:
        options['refinement'] = 0
    return options


def _path(args, cfg):
    return EdgePath.from_spec(args.path, args.level, cfg.max_level)


def run_gasket(cfg, args):
    graph = build_level_graph(cfg.level, cfg.max_level)
    table = pd.DataFrame({'id': range(graph.n_vertices),
                          'label': [v.label for v in graph.vertex_ids],
                          'x': graph.points[:, 0], 'y': graph.points[:, 1]})
    return Result(graph.to_dict(), table)


def run_chart(cfg, args):
    chart = build_chart(cfg.level, cfg.max_level)
    payload = chart.to_dict()
    payload['harmonic_residual'] = chart.check_harmonic(cfg.tolerances.harmonic)
    return Result(payload, pd.DataFrame(payload['vertices']))


def run_kusuoka(cfg, args):
    table = kusuoka_table(cfg.level, cfg.max_level)
    return Result(table.to_dict(), table.to_frame())


def run_zfield(cfg, args):
    field = z_field(cfg.level, cfg.tolerances.psd, cfg.max_level)
    return Result(field.to_dict(), field.to_frame())


def run_energy(cfg, args):
    report = energy_identity_report(parse(args.f), cfg.level, cfg.max_level)
    report['f'] = args.f
    return Result(report)


def _integral(form, path, spec, cfg):
    k = cfg.refinement
    chart = build_chart(path.level + k, cfg.max_level)
    result = integrate_form(form, path, chart, k)
    payload = describe_path(spec, path)
    payload.update(result.to_dict())
    return payload, chart


def describe_path(spec, path):
    return {'path': spec, 'path_level': path.level, 'edges': len(path) - 1}


def run_integrate(cfg, args):
    payload, _ = _integral(Form1(parse(args.wx), parse(args.wy)), _path(args, cfg), args.path, cfg)
    return Result(payload)


def run_ftli(cfg, args):
    f = parse(args.f)
    path = _path(args, cfg)
    payload, chart = _integral(exact_form(f), path, args.path, cfg)
    ends = chart.points[[chart.graph.index_of(path.start), chart.graph.index_of(path.end)]]
    values = f(ends)
    payload['endpoint_difference'] = float(values[1] - values[0])
    payload['deviation'] = abs(payload['integral'] - payload['endpoint_difference'])
    return Result(payload)


def run_distance(cfg, args):
    estimate = intrinsic_distance(args.source, args.target, cfg.level,
                                  method=cfg.metric.method, facets=cfg.metric.facets,
                                  max_iter=cfg.metric.max_iter, step=cfg.metric.step,
                                  tol=cfg.tolerances.solver, max_level=cfg.max_level)
    payload = {'x': args.source, 'y': args.target}
    payload.update(estimate.to_dict())
    return Result(payload)


def run_length(cfg, args):
    path = _path(args, cfg)
    k = cfg.refinement
    euclid = euclidean_length(path, build_chart(path.level + k, cfg.max_level), k)
    mu = mu_length(path, path.level, method=cfg.metric.method, facets=cfg.metric.facets,
                   max_iter=cfg.metric.max_iter, step=cfg.metric.step, tol=cfg.tolerances.solver,
                   max_level=cfg.max_level)
    c_z = c_z_bound(path.level, cfg.max_level)
    ratio = euclid / (c_z * mu) if mu > 0 else 0.
    payload = describe_path(args.path, path)
    payload.update({'refinement': k, 'euclidean_length': euclid, 'mu_length': mu,
                    'c_z': c_z, 'ratio': ratio})
    return Result(payload)


def _circle_point(text):
    try:
        x, y = (float(t) for t in text.split(','))
    except ValueError:
        raise DomainError('point "{}" is not of the form x,y'.format(text)) from None
    return x, y


def run_circle(cfg, args):
    tol = cfg.tolerances
    circle = circle_constraints()
    omega = Form1(parse(args.wx), parse(args.wy))
    eta = Form1(parse(args.ex or args.wx), parse(args.ey or args.wy))
    q = circle_quadrature(args.points).check_on(circle, tol.quadrature)
    projections = projection_matrices(circle, q.points, tol.rank)
    point = _circle_point(args.at)
    circle.check([point], tol.constraint)
    fiber = tangent_projection(circle, point, tol.rank)
    payload = {'omega': str(omega), 'eta': str(eta), 'points': len(q),
               'inner': l2_inner(omega, eta, projections, q),
               'norm_omega': l2_inner(omega, omega, projections, q) ** .5,
               'at': list(point), 'tangent_rank': fiber.rank,
               'fiber_norm': quotient_norm(omega, fiber)}
    return Result(payload)


HANDLERS = {name: globals()['run_' + name] for name in COMMANDS}


def run_subcommand(cfg, args):
    """Run one command under a validated config and return its Result"""
    if args.command not in HANDLERS:
        raise DomainError('unknown command "{}"'.format(args.command))
    return HANDLERS[args.command](cfg, args)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logger = get_logger(args.log_file, getattr(logging, args.log_level))
    try:
        cfg = build_run_config(args.config, _options(args))
        set_random_seed(cfg.seed)
        with Timer(print_tmpl=args.command + ': {:.3f}s', logger=logger):
            result = run_subcommand(cfg, args)
        dump(result.select(cfg.format), cfg.output, cfg.format)
    except DFormError as e:
        sys.stderr.write('{}\n'.format(e))
        return e.exit_code
    except FileNotFoundError as e:
        sys.stderr.write('{}\n'.format(DomainError(str(e))))
        return DomainError.exit_code
    return 0


if __name__ == '__main__':
    sys.exit(main())
