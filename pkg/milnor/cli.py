"""
The `milnor` command line frontend.

    milnor algebra from-poly --vars z1,z2,z3 --poly "z1^6+t*z1^4*z2+z2^3+z3^2" --let t=1
    milnor nilpoly --fixture e8 --let t=1/2
    milnor check saito --fixture e8
    milnor equiv from-map --fixture family13 --tilde-let t=-1 --map "z1->z1; z2->-z2"
    milnor nilpoly --fixture e8 --grid t=0..2 step 1/2 --csv e8.csv

Reports go to stdout as KEY: value lines (or JSON with --json); logs go to
stderr. Exit codes: 0 success, 1 failed check, 2 usage, 3 precondition.
"""
import argparse
import json
import logging
import re
import sys

import pandas as pd

from milnor.configs import Config
from milnor.documents import RunManifest
from milnor.errors import EXIT_OK, EXIT_PROPERTY, EXIT_USAGE, MilnorException, ParseException
from milnor.exactpoly import rational
from milnor.fixtures import names as fixture_names
from milnor.lazy_pool import GridPool
from milnor.operations.check import CHECKS, Check
from milnor.operations.describe import Describe
from milnor.operations.equiv import MODES, Equiv
from milnor.operations.expand import Expand
from milnor.resource import write_atomically

log = logging.getLogger(__name__)

OPERATIONS = {
    'algebra': Describe,
    'nilpoly': Expand,
    'check': Check,
    'equiv': Equiv
}

ALGEBRA_SOURCES = ('from-poly', 'from-ideal', 'from-table', 'from-fixture')

_GRID = re.compile(r'^\s*([A-Za-z][A-Za-z0-9_]*)\s*=\s*(\S+?)\s*\.\.\s*(\S+?)(?:\s+step\s+(\S+))?\s*$')

_handler = None


def configure_logging(verbosity):
    global _handler
    logger = logging.getLogger('milnor')
    if _handler is not None:
        logger.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter('%(asctime)s %(name)-12s %(levelname)-8s %(message)s'))
    logger.addHandler(_handler)
    logger.setLevel(logging.WARNING if not verbosity else logging.INFO if verbosity == 1 else logging.DEBUG)


def grid_values(text):
    """
    "t=0..1 step 1/4" -> ('t', [0, 1/4, 1/2, 3/4, 1]); the step defaults to 1.
    """
    match = _GRID.match(text)
    if not match:
        raise ParseException("grid must look like name=a..b step s", text)
    name, start, stop, step = match.groups()
    start, stop = rational(start), rational(stop)
    step = rational(step) if step else rational(1)
    if step <= 0:
        raise ParseException("grid step must be positive", text)
    if stop < start:
        raise ParseException("grid end lies before its start", text)
    values = []
    value = start
    while value <= stop:
        values.append(value)
        value += step
    return name, values


def _add_inputs(parser, prefix = ''):
    flag = '--' + prefix
    side = 'second' if prefix else 'first'
    parser.add_argument(flag + 'fixture', help = 'bundled input for the {0} side: {1}'.format(
        side, ', '.join(fixture_names())))
    parser.add_argument(flag + 'algebra', metavar = 'FILE', help = 'algebra file')
    parser.add_argument(flag + 'poly', metavar = 'TEXT', help = 'the germ f')
    parser.add_argument(flag + 'gens', metavar = 'TEXT', help = 'ideal generators separated by ";"')
    parser.add_argument(flag + 'vars', metavar = 'LIST', help = 'comma separated variables')
    parser.add_argument(flag + 'let', metavar = 'NAME=VALUE', action = 'append', default = None,
                        help = 'bind a parameter to a rational value')
    parser.add_argument(flag + 'weights', metavar = 'LIST', help = 'positive integer weights of the variables')
    parser.add_argument(flag + 'precedence', metavar = 'LIST', help = 'variables from largest to smallest')
    parser.add_argument(flag + 'monomials', metavar = 'LIST', help = 'monomial basis of N, socle first')
    parser.add_argument(flag + 'e0', metavar = 'LABEL', help = 'basis element spanning Ann(N)')
    parser.add_argument(flag + 'kernel', metavar = 'LABELS', help = 'ordered kernel basis of the form')
    if not prefix:
        parser.add_argument('--tjurina', action = 'store_true', help = 'use the Tjurina instead of the Milnor algebra')
        parser.add_argument('--local', action = 'store_true', help = 'local algebra at the origin')


def _add_run_options(parser):
    parser.add_argument('--grid', nargs = '+', metavar = 'SPEC', help = 'run once per value: t=a..b step s')
    parser.add_argument('--json', action = 'store_true', help = 'print JSON instead of KEY: value lines')
    parser.add_argument('--csv', metavar = 'FILE', help = 'also write the report as CSV')
    parser.add_argument('--out', metavar = 'FILE', help = 'write the algebra or certificate file')
    parser.add_argument('--save-manifest', metavar = 'FILE', help = 'record this invocation for replay')


def build_parser():
    parser = argparse.ArgumentParser(prog = 'milnor', description = 'Milnor algebras, nil-polynomials '
                                     'and linear equivalence certificates, in exact arithmetic.')
    parser.add_argument('-v', '--verbose', action = 'count', default = 0)
    parser.add_argument('--workers', type = int, help = 'worker threads for --grid')
    commands = parser.add_subparsers(dest = 'command')

    algebra = commands.add_parser('algebra', help = 'build an algebra and print its invariants')
    algebra.add_argument('source', choices = ALGEBRA_SOURCES)
    algebra.add_argument('table', nargs = '?', metavar = 'FILE', help = 'table file for from-table')
    _add_inputs(algebra)
    _add_run_options(algebra)

    nilpoly = commands.add_parser('nilpoly', help = 'the nil-polynomial of an admissible algebra')
    _add_inputs(nilpoly)
    _add_run_options(nilpoly)
    nilpoly.add_argument('--expect', metavar = 'TEXT', help = 'compare with an expected polynomial in x1..xn')

    check = commands.add_parser('check', help = 'run one verification')
    check.add_argument('check', choices = CHECKS)
    _add_inputs(check)
    _add_run_options(check)
    check.add_argument('--seed', type = int, default = 0)
    check.add_argument('--trials', type = int)

    equiv = commands.add_parser('equiv', help = 'linear equivalence of two nil-polynomials')
    equiv.add_argument('mode', choices = MODES)
    _add_inputs(equiv)
    _add_inputs(equiv, 'tilde-')
    _add_run_options(equiv)
    equiv.add_argument('--map', metavar = 'TEXT', help = 'germ map, e.g. "z1->z1; z2->-z2"')
    equiv.add_argument('--certificate', metavar = 'FILE')
    equiv.add_argument('--nilpoly', metavar = 'TEXT')
    equiv.add_argument('--tilde-nilpoly', metavar = 'TEXT')

    replay = commands.add_parser('replay', help = 're-run a saved manifest')
    replay.add_argument('manifest', metavar = 'FILE')
    return parser


def _check_source(args):
    needs = {
        'from-poly': ('poly', 'fixture', 'algebra'),
        'from-ideal': ('gens', 'fixture', 'algebra'),
        'from-table': ('table', 'algebra'),
        'from-fixture': ('fixture',)
    }[args.source]
    if not any(getattr(args, name, None) for name in needs):
        raise ParseException("algebra {0} needs one of {1}".format(
            args.source, ', '.join('--' + n if n != 'table' else 'FILE' for n in needs)))


def _write_report(report, args, out):
    if args.json:
        out.write(json.dumps(report.to_json(), indent = 2, sort_keys = True) + '\n')
    else:
        out.write('\n'.join(report.lines()) + '\n')
    if args.csv:
        write_atomically(args.csv, pd.DataFrame([report.row()]).to_csv(index = False))


def _run_grid(operation, config, args, out):
    if args.out:
        raise ParseException("--out cannot be combined with --grid")
    name, values = grid_values(' '.join(args.grid))
    log.info('grid over %s: %s points on %s workers', name, len(values), config.workers)
    pool = GridPool(config.workers)
    reports = list(pool.map(lambda value: operation.run({name: value}), values))
    frame = pd.DataFrame([dict({name: str(value)}, **report.row()) for value, report in zip(values, reports)])
    if args.json:
        records = [dict(report.to_json(), **{name: str(value)}) for value, report in zip(values, reports)]
        out.write(json.dumps(records, indent = 2, sort_keys = True) + '\n')
    else:
        out.write(frame.to_string(index = False) + '\n')
    if args.csv:
        write_atomically(args.csv, frame.to_csv(index = False))
    return all(report.passed for report in reports)


def _dispatch(args, argv, out):
    if args.command == 'replay':
        manifest = RunManifest.from_file(args.manifest)
        if manifest.argv and manifest.argv[0] == 'replay':
            raise ParseException("a manifest cannot replay another manifest", args.manifest)
        log.info('replaying %s', args.manifest)
        return main(manifest.argv, out)

    config = Config.from_env()
    if args.workers is not None:
        config = config.change_option('workers').to(args.workers).run()
    if args.command == 'algebra':
        _check_source(args)

    properties = {k: v for k, v in vars(args).items() if k not in ('verbose', 'workers', 'command')}
    operation = OPERATIONS[args.command](config, **properties)
    if args.grid:
        passed = _run_grid(operation, config, args, out)
    else:
        report = operation.run()
        _write_report(report, args, out)
        passed = report.passed

    if args.save_manifest:
        RunManifest.from_args(args.command, argv, args).write(args.save_manifest)
    return EXIT_OK if passed else EXIT_PROPERTY


def main(argv = None, out = None):
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    configure_logging(args.verbose)
    try:
        return _dispatch(args, argv, out)
    except MilnorException as e:
        sys.stderr.write('error: {0}\n'.format(e))
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
