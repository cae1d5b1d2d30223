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
"""Exact linear algebra helpers on top of sympy: integer determinants,
unimodular inverses, rational solves and ranks over QQ or GF(p).

Nothing here ever touches floating point; sympy rationals are converted to
:class:`fractions.Fraction` on the way out."""
from fractions import Fraction

import sympy as sp
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .errors import NonSmoothCone


def to_fraction(value):
    """Convert a sympy (or python) rational number to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def determinant(rows):
    """Return the integer determinant of a square integer matrix."""
    if not rows:
        return 1
    return int(sp.Matrix(rows).det())


def unimodular_inverse(rows):
    """Return the integer inverse of a square integer matrix of determinant
    +1 or -1, as a tuple of integer tuples.

    :type rows: list of integer tuples
    :param rows: the matrix, given by rows

    :rtype: tuple
    :returns: the rows of the inverse matrix"""
    if not rows:
        return ()
    mat = sp.Matrix(rows)
    det = mat.det()
    if abs(det) != 1:
        raise NonSmoothCone("ray matrix %s has determinant %s"
                            % ([list(r) for r in rows], det))
    inv = mat.inv()
    return tuple(tuple(int(inv[i, j]) for j in range(inv.cols))
                 for i in range(inv.rows))


def solve(rows, rhs):
    """Solve the square system rows * x = rhs over the rationals.

    :rtype: tuple of Fraction or None
    :returns: the unique solution, None if the system is singular"""
    mat = sp.Matrix(rows)
    if mat.det() == 0:
        return None
    sol = mat.LUsolve(sp.Matrix(rhs))
    return tuple(to_fraction(sol[i]) for i in range(sol.rows))


def rank(rows, p=None):
    """Return the rank of an integer matrix over QQ, or over GF(p) when a
    prime ``p`` is given, by fraction-free elimination in sympy's domain
    matrices."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    dmat = DomainMatrix.from_Matrix(sp.Matrix(rows))
    if p is None:
        dmat = dmat.convert_to(QQ)
    else:
        dmat = dmat.convert_to(GF(p))
    return int(dmat.rank())


def nullspace(rows, ncols):
    """Return a basis of the rational kernel of a matrix with ``ncols``
    columns, as tuples of Fractions."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols))
                for i in range(ncols)]
    return [tuple(to_fraction(v[i]) for i in range(v.rows))
            for v in sp.Matrix(rows).nullspace()]
