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
"""Module containing the file manipulation functions: reading matroids, fans,
bundles and extensions from JSON (and diagrams from CSV), writing them back
in canonical form, and rendering reports as JSON or markdown tables."""
import csv
import json
import os
from fractions import Fraction

import sympy as sp

from . import TConf, utils
from .bundle import validate_bundle
from .errors import FormatError, TbkError
from .matroid import (ExtensionMap, Matroid, linear_matroid,
                      matroid_by_name, matroid_from_bases,
                      matroid_from_circuits)
from .polyfan import Fan, Polyhedron, fan_by_name

CONFIGURATION = TConf()


def read_json(filename):
    """Read a JSON document, raising FormatError when it does not parse.

    :type filename: string
    :param filename: the file to read"""
    utils.ensure_file_exists(filename)
    with open(filename) as j_file:
        try:
            return json.load(j_file)
        except ValueError as exc:
            raise FormatError("%s: %s" % (filename, exc))


def example_path(name):
    """Return the path of a shipped example, given its name (with or
    without the .json extension) or any existing path."""
    if os.path.exists(name):
        return name
    base = os.path.basename(name)
    if not base.endswith('.json'):
        base += '.json'
    path = os.path.join(CONFIGURATION.EXAMPLES_DIR, base)
    if not os.path.exists(path):
        raise IOError("File %s doesn't exist" % path)
    return path


def _require(data, keys, what):
    if not isinstance(data, dict):
        raise FormatError("%s must be a JSON object" % what)
    missing = [k for k in keys if k not in data]
    if missing:
        raise FormatError("%s lacks the keys %s" % (what, missing))


def parse_matroid(data):
    """Build a matroid from a name ("fano", "uniform:2,3", ...), a path, or
    an object with "ground" and one of "bases", "circuits" or "matrix"
    (optionally with "prime")."""
    if isinstance(data, str):
        if os.path.exists(data):
            return parse_matroid(read_json(data))
        return matroid_by_name(data)
    if isinstance(data, dict) and 'name' in data:
        return matroid_by_name(data['name'])
    _require(data, ['ground'], "matroid")
    if 'bases' in data:
        return matroid_from_bases(data['ground'], data['bases'])
    if 'circuits' in data:
        return matroid_from_circuits(data['ground'], data['circuits'])
    if 'matrix' in data:
        return linear_matroid(data['matrix'], data['ground'],
                              data.get('prime'))
    raise FormatError("matroid needs bases, circuits or matrix")


def parse_fan(data):
    """Build a fan from a name ("p1", "p2", "pn:3", "p1xp1", "perm:4"), a
    path, or an object with "dim", "rays", "max_cones" and optionally
    "ray_labels" and "name"."""
    if isinstance(data, str):
        if os.path.exists(data):
            return parse_fan(read_json(data))
        return fan_by_name(data)
    if isinstance(data, dict) and list(data) == ['name']:
        return fan_by_name(data['name'])
    _require(data, ['dim', 'rays', 'max_cones'], "fan")
    try:
        return Fan(data['dim'], data['rays'], data['max_cones'],
                   data.get('ray_labels'), data.get('name'))
    except (TypeError, ValueError) as exc:
        raise FormatError("malformed fan: %s" % exc)


def read_diagram_csv(filename, matroid):
    """Read a diagram from CSV: the header holds "ray" and the ground
    labels (any order), every line a ray index and its entries.

    :rtype: list
    :returns: the rows ordered by ray index, columns in ground order"""
    utils.ensure_file_exists(filename)
    with open(filename) as c_file:
        reader = csv.reader(c_file)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise FormatError("%s: empty diagram" % filename)
        if not header or header[0] != 'ray':
            raise FormatError("%s: the first column must be 'ray'"
                              % filename)
        if sorted(header[1:]) != sorted(matroid.get_ground()):
            raise FormatError("%s: header %s does not match the ground set"
                              % (filename, header[1:]))
        order = [header.index(lab) for lab in matroid.get_ground()]
        rows = {}
        for line in reader:
            if not line or not ''.join(line).strip():
                continue
            try:
                values = [int(v) for v in line]
            except ValueError:
                raise FormatError("%s: non integer entry in %s"
                                  % (filename, line))
            if len(values) != len(header):
                raise FormatError("%s: line %s has %d fields"
                                  % (filename, line, len(values)))
            rows[values[0]] = [values[i] for i in order]
    if sorted(rows) != list(range(len(rows))):
        raise FormatError("%s: ray indices must be 0..%d"
                          % (filename, len(rows) - 1))
    return [rows[i] for i in range(len(rows))]


def write_diagram_csv(bundle, filename):
    with open(filename, 'w') as c_file:
        writer = csv.writer(c_file, lineterminator='\n')
        writer.writerow(['ray'] + list(bundle.get_matroid().get_ground()))
        for idx, row in enumerate(bundle.get_diagram()):
            writer.writerow([idx] + list(row))


def parse_bundle(data, base_dir='.'):
    """Build and validate a bundle from an object with "matroid", "fan"
    and "diagram"; the diagram is a list of rows or the name of a CSV file
    relative to ``base_dir``."""
    _require(data, ['matroid', 'fan', 'diagram'], "bundle")
    matroid = parse_matroid(data['matroid'])
    fan = parse_fan(data['fan'])
    diagram = data['diagram']
    if isinstance(diagram, str):
        diagram = read_diagram_csv(os.path.join(base_dir, diagram), matroid)
    try:
        diagram = [[int(v) for v in row] for row in diagram]
    except (TypeError, ValueError):
        raise FormatError("diagram entries must be integers")
    return validate_bundle(matroid, fan, diagram)


def read_bundle(filename):
    """Read a bundle file, or a shipped example by name.

    :type filename: string
    :param filename: a path or an example name like ``fano-bundle``"""
    path = example_path(filename)
    return parse_bundle(read_json(path), os.path.dirname(path))


def parse_extension(data, source):
    """Build an extension of ``source`` from an object with "target" (a
    matroid) and "mapping" (the target label of every source label, as a
    list in ground order or as an object)."""
    _require(data, ['target', 'mapping'], "extension")
    target = parse_matroid(data['target'])
    mapping = data['mapping']
    if isinstance(mapping, dict):
        try:
            mapping = [mapping[lab] for lab in source.get_ground()]
        except KeyError as exc:
            raise FormatError("mapping lacks the element %s" % exc)
    return ExtensionMap(source, target, [target.index(lab)
                                         for lab in mapping])


def read_extensions(filename, source):
    """Read one extension or a list of extensions of ``source``."""
    data = read_json(filename)
    if isinstance(data, list):
        return [parse_extension(item, source) for item in data]
    return [parse_extension(data, source)]


def matroid_to_dict(matroid):
    return {'ground': list(matroid.get_ground()),
            'bases': [matroid.labels(b) for b in matroid.get_bases()]}


def fan_to_dict(fan):
    data = {'dim': fan.get_dim(),
            'rays': [list(r) for r in fan.get_rays()],
            'max_cones': [list(c) for c in fan.get_max_cones()],
            'ray_labels': list(fan.get_ray_labels())}
    if fan.get_name():
        data['name'] = fan.get_name()
    return data


def bundle_to_dict(bundle):
    """The canonical form of a bundle file."""
    return {'matroid': matroid_to_dict(bundle.get_matroid()),
            'fan': fan_to_dict(bundle.get_fan()),
            'diagram': [list(row) for row in bundle.get_diagram()]}


def write_bundle(bundle, filename):
    with open(filename, 'w') as j_file:
        j_file.write(dumps(bundle_to_dict(bundle)))


def to_jsonable(obj):
    """Turn a report into plain JSON data: rationals become "p/q" strings,
    sets and tuples become lists, sympy expressions strings, and objects
    with a to_dict method their dictionary."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return utils.format_rational(obj)
    if isinstance(obj, sp.Basic):
        if obj.is_Rational:
            return utils.format_rational(Fraction(int(obj.p), int(obj.q)))
        return str(obj)
    if isinstance(obj, Matroid):
        return matroid_to_dict(obj)
    if isinstance(obj, Fan):
        return fan_to_dict(obj)
    if isinstance(obj, Polyhedron):
        return obj.to_dict(with_vertices=True)
    if hasattr(obj, 'to_dict'):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return dict((str(k), to_jsonable(v)) for k, v in obj.items())
    if isinstance(obj, (frozenset, set)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise FormatError("cannot serialize %r" % (obj,))


def dumps(obj):
    """Canonical JSON: sorted keys, two spaces of indentation."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + '\n'


def _cell(value):
    value = to_jsonable(value)
    if isinstance(value, list):
        return '{' + ', '.join(str(v) for v in value) + '}'
    return str(value)


def markdown_table(header, rows):
    """Render a table in markdown.

    :type header: list
    :param header: the column titles

    :type rows: list of lists
    :param rows: the cells, rendered with str after JSON conversion"""
    lines = ['| ' + ' | '.join(str(h) for h in header) + ' |',
             '|' + '|'.join('---' for _ in header) + '|']
    for row in rows:
        lines.append('| ' + ' | '.join(_cell(c) for c in row) + ' |')
    return '\n'.join(lines) + '\n'


def diagram_table(bundle):
    """The diagram with the ground labels as header and one line per ray,
    labelled by the ray name and vector."""
    fan = bundle.get_fan()
    rows = [['%s %s' % (lab, list(ray))] + list(row)
            for lab, ray, row in zip(fan.get_ray_labels(), fan.get_rays(),
                                     bundle.get_diagram())]
    return markdown_table([''] + list(bundle.get_matroid().get_ground()),
                          rows)


def report_to_markdown(report):
    """Render a report: objects as two-column key/value tables, lists of
    objects with shared keys as one table."""
    data = to_jsonable(report)
    if isinstance(data, dict):
        return markdown_table(['key', 'value'],
                              [[k, data[k]] for k in sorted(data)])
    if isinstance(data, list) and data and \
            all(isinstance(d, dict) for d in data):
        keys = sorted(set(k for d in data for k in d))
        return markdown_table(keys, [[d.get(k, '') for k in keys]
                                     for d in data])
    if isinstance(data, list):
        return markdown_table(['value'], [[d] for d in data])
    return '%s\n' % _cell(data)


def render(report, fmt=None):
    """Render a report in the requested format ("json" or "md")."""
    fmt = fmt or CONFIGURATION.OUTPUT_FORMAT
    if fmt == 'json':
        return dumps(report)
    if fmt == 'md':
        return report_to_markdown(report)
    raise FormatError("unknown output format %r" % fmt)


def error_report(exc):
    """The report printed for a domain error."""
    if isinstance(exc, TbkError):
        return "%s: %s" % (exc.get_name(), exc)
    return "%s: %s" % (exc.__class__.__name__, exc)
