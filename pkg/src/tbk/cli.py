# -*- coding: utf-8 -*-
#############################################################################
#
# tbk, the tropical bundle kit, Copyright (C) 2026, the tbk developers.
#
# This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#############################################################################
"""Module containing the command line front end: argument parsing, the
dispatch of every subcommand to the library and the report writer.

Exit codes: 0 on success, 1 on a domain error (reported as
``ErrorName: message``), 2 on a usage error."""
import argparse
import json
import logging
import sys

from . import TConf, __version__, utils
from . import bergman, bundle as bdl, extsplit, fm, tautological
from .errors import FormatError, TbkError
from .matroid import is_modular, single_element_extensions

CONFIGURATION = TConf()
LOGGER = logging.getLogger(__name__)

EXAMPLES = ('fano-bundle', 'vamos-p1', 'u23-zero')


class UsageError(Exception):
    """A command line that parses but cannot be run."""


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def _vector(text):
    try:
        return utils.parse_vector(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not a list of integers"
                                         % text)


def _read_input(args):
    """The JSON document of the positional input, from stdin with --json."""
    if args.json:
        try:
            return json.load(sys.stdin)
        except ValueError as exc:
            raise FormatError("stdin: %s" % exc)
    return fm.read_json(fm.example_path(args.input))


def _load_bundle(args):
    if args.json:
        return fm.parse_bundle(_read_input(args))
    return fm.read_bundle(args.input)


def _load_matroid(args):
    if args.json:
        return fm.parse_matroid(_read_input(args))
    return fm.parse_matroid(args.input)


def _flat_list(matroid, flats):
    return [{'flat': matroid.labels(f), 'rank': matroid.rank(f)}
            for f in flats]


# matroid

def cmd_matroid(args):
    mat = _load_matroid(args)
    if args.action == 'info':
        return {'ground': list(mat.get_ground()), 'rank': mat.get_rank(),
                'bases': len(mat.get_bases()),
                'circuits': len(mat.circuits()), 'flats': len(mat.flats())}
    if args.action == 'flats':
        return _flat_list(mat, mat.flats())
    if args.action == 'circuits':
        return [mat.labels(c) for c in mat.circuits()]
    return is_modular(mat)


# bergman

def cmd_bergman(args):
    mat = _load_matroid(args)
    if args.w is None:
        raise UsageError("bergman %s needs --w" % args.action)
    if args.action == 'check':
        return bergman.is_bergman_point(mat, args.w)
    if args.action == 'project':
        return list(bergman.bergman_projection(mat, args.w))
    return [{'threshold': thr, 'flat': mat.labels(flat)}
            for thr, flat in bergman.flag_filtration(mat, args.w)]


# bundle

def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError("bundle %s needs --%s" % (args.action, name))
    return value


def _wall_arg(text):
    """A wall index, or the rays of the wall as "i,j" (or "i," for a
    single ray)."""
    try:
        if ',' in text:
            return tuple(int(t) for t in text.split(',') if t.strip())
        return int(text)
    except ValueError:
        raise UsageError("bad wall %r" % text)


def _certificates(bun):
    mat = bun.get_matroid()
    return dict((','.join(str(r) for r in cone), mat.labels(bas))
                for cone, bas in sorted(bun.get_certificates().items()))


def _curve_report(curve):
    mat = curve.get_matroid()
    result = bdl.splits(curve)
    return {'ground': list(mat.get_ground()),
            'rows': [list(r) for r in curve.get_diagram()],
            'shift': list(curve.get_shift()),
            'split': None if result is None else result.to_dict()}


def _by_cone(data):
    return dict((','.join(str(r) for r in cone), value)
                for cone, value in data.items())


def _bundle_validate(bun, args):
    return {'valid': True, 'certificates': _certificates(bun)}


def _bundle_sections(bun, args):
    return bdl.h0_u(bun, _need(args, 'u'))


def _bundle_euler(bun, args):
    return {'chi': bdl.chi_u(bun, _need(args, 'u'))}


def _bundle_euler_total(bun, args):
    return {'h0': bdl.h0_total(bun), 'chi': bdl.chi_total(bun)}


def _bundle_chern(bun, args):
    return _by_cone(bdl.chern_class(bun, _need(args, 'i')))


def _bundle_kclass(bun, args):
    return bdl.k_class(bun)


def _bundle_parliament(bun, args):
    ground = bun.get_matroid().get_ground()
    return dict((ground[e], poly)
                for e, poly in bdl.parliament(bun).items())


def _bundle_gg(bun, args):
    ok, certs = bdl.is_globally_generated(bun)
    mat = bun.get_matroid()
    return {'globally_generated': ok,
            'certificates': _by_cone(dict(
                (c, None if b is None else mat.labels(b))
                for c, b in certs.items()))}


def _bundle_nef(bun, args):
    return {'nef': bdl.is_nef(bun), 'ample': bdl.is_ample(bun)}


def _bundle_restrict(bun, args):
    return _curve_report(bdl.restrict_to_curve(bun, _wall_arg(
        _need(args, 'wall'))))


def _bundle_split(bun, args):
    if bun.get_fan().get_dim() == 1:
        return bdl.splits(bun)
    labels = bun.get_fan().get_ray_labels()
    return [{'tau': [labels[r] for r in wall.tau],
             'split': None if res is None else res.to_dict()}
            for wall, res in bdl.wall_degrees(bun)]


def _bundle_twist(bun, args):
    return fm.bundle_to_dict(bdl.tensor_line_bundle(bun, _need(args, 'L')))


def _bundle_n0(bun, args):
    return {'N0': bdl.estimate_N0(bun, _need(args, 'L'))}


BUNDLE_ACTIONS = {
    'validate': _bundle_validate,
    'sections': _bundle_sections,
    'euler': _bundle_euler,
    'euler-total': _bundle_euler_total,
    'chern': _bundle_chern,
    'kclass': _bundle_kclass,
    'parliament': _bundle_parliament,
    'gg': _bundle_gg,
    'nef': _bundle_nef,
    'restrict': _bundle_restrict,
    'split': _bundle_split,
    'twist': _bundle_twist,
    'n0': _bundle_n0,
}


def cmd_bundle(args):
    return BUNDLE_ACTIONS[args.action](_load_bundle(args), args)


# taut

def cmd_taut(args):
    mat = _load_matroid(args)
    if args.action == 'build':
        bun = tautological.TautologicalSpec(mat, args.which).build()
        return fm.bundle_to_dict(bun)
    return tautological.nef_certificate_tautological(
        mat, allow_large=args.all_flats)


# ext

def _candidates(args, bun):
    if args.ext:
        return fm.read_extensions(args.ext, bun.get_matroid())
    return single_element_extensions(bun.get_matroid())


def cmd_ext(args):
    bun = _load_bundle(args)
    mat = bun.get_matroid()
    if args.action == 'defect':
        found = extsplit.defect_obstruction(bun)
        if found is None:
            return None
        flat1, flat2, defect = found
        return {'F': mat.labels(flat1), 'H': mat.labels(flat2),
                'defect': defect}
    if args.action == 'push':
        if not args.ext:
            raise UsageError("ext push needs --ext")
        return [fm.bundle_to_dict(extsplit.pushforward_bundle(phi, bun))
                for phi in fm.read_extensions(args.ext, mat)]
    return extsplit.equivalent_split_search(bun, _candidates(args, bun))


def cmd_examples(args):
    return fm.bundle_to_dict(fm.read_bundle(args.name))


def _bundle_options(parser):
    parser.add_argument('--u', type=_vector)
    parser.add_argument('--i', type=int)
    parser.add_argument('--L', type=_vector)
    parser.add_argument('--wall')


def _bergman_options(parser):
    parser.add_argument('--w', type=_vector)


def _taut_options(parser):
    parser.add_argument('--which', choices=[tautological.SUB_DUAL,
                                            tautological.QUOTIENT],
                        default=tautological.SUB_DUAL)
    parser.add_argument('--all-flats', action='store_true',
                        help='allow the seven element sweep (Fano)')


def _ext_options(parser):
    parser.add_argument('--ext',
                        help='JSON file with one or more extensions')


def build_parser():
    """The argument parser of the tbk script.

    Every action has its own parser holding the input and the options, so
    they may come in any order after the action."""
    parser = _Parser(prog='tbk', description='Exact computations with '
                     'tropical toric vector bundles.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('--format', choices=['json', 'md'], default=None,
                        help='report format (default: json)')
    parser.add_argument('--json', action='store_true',
                        help='read the input document from stdin')
    parser.add_argument('--threads', type=int, default=None,
                        help='worker threads for sweeps and searches')
    parser.add_argument('--verbose', action='store_true')
    parser.add_argument('--quiet', action='store_true')
    sub = parser.add_subparsers(dest='group')
    sub.required = True

    def _group(name, actions, func, input_help, options=None):
        grp = sub.add_parser(name)
        grp.set_defaults(func=func)
        acts = grp.add_subparsers(dest='action')
        acts.required = True
        for action in actions:
            one = acts.add_parser(action)
            one.add_argument('input', nargs='?', help=input_help)
            if options is not None:
                options(one)
        return grp

    _group('matroid', ['info', 'flats', 'circuits', 'modular'], cmd_matroid,
           'a matroid name or JSON file')
    _group('bergman', ['check', 'project', 'flag'], cmd_bergman,
           'a matroid name or JSON file', _bergman_options)
    _group('bundle', sorted(BUNDLE_ACTIONS), cmd_bundle,
           'a bundle JSON file or example name', _bundle_options)
    _group('taut', ['build', 'nef-sweep'], cmd_taut,
           'a matroid name or JSON file', _taut_options)
    _group('ext', ['push', 'split-search', 'defect'], cmd_ext,
           'a bundle JSON file or example name', _ext_options)
    grp = sub.add_parser('examples')
    grp.add_argument('name', choices=EXAMPLES)
    grp.set_defaults(func=cmd_examples)
    return parser


def _configure(args):
    if args.threads is not None:
        if args.threads < 1:
            raise UsageError("--threads must be positive")
    CONFIGURATION.reload()
    if args.threads is not None:
        CONFIGURATION.THREADS = args.threads
    CONFIGURATION.VERBOSE = args.verbose
    CONFIGURATION.QUIET_MODE = args.quiet
    if args.format:
        CONFIGURATION.OUTPUT_FORMAT = args.format
    utils.setup_logging()


def dispatch(argv, out=None, err=None):
    """Run one command line and return its exit code.

    :type argv: list
    :param argv: the arguments, without the program name

    :type out: file
    :param out: where the report goes (stdout by default)"""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, 'input', None) is None and \
                args.group != 'examples' and not args.json:
            raise UsageError("%s %s needs an input" % (args.group,
                                                       args.action))
        _configure(args)
        LOGGER.debug("running %s", argv)
        report = args.func(args)
        out.write(fm.render(report, args.format))
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write("tbk: error: %s\n" % exc)
        return 2
    except TbkError as exc:
        err.write(fm.error_report(exc) + '\n')
        return 1
    except (IOError, OSError) as exc:
        err.write("%s\n" % exc)
        return 1
    return 0


def main():
    sys.exit(dispatch(sys.argv[1:]))
