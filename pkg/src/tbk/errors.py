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
"""Exceptions raised by tbk. Every domain error has its own class so that
the command line front end can report the error name verbatim."""


class TbkError(Exception):
    """Base class of every domain error."""

    def get_name(self):
        """Return the name used in reports, i.e. the class name."""
        return self.__class__.__name__


class MatroidError(TbkError):
    pass


class ExchangeAxiomViolation(MatroidError):
    pass


class LoopDetected(MatroidError):
    pass


class EmptyBases(MatroidError):
    pass


class CircuitAxiomViolation(MatroidError):
    pass


class NotABasis(MatroidError):
    pass


class ElementInBasis(MatroidError):
    pass


class NotAFlat(MatroidError):
    pass


class RankMismatch(MatroidError):
    pass


class NotInjective(MatroidError):
    pass


class UnknownMatroid(MatroidError):
    pass


class FanError(TbkError):
    pass


class NotSmooth(FanError):
    pass


class NotComplete(FanError):
    pass


class PointNotCovered(FanError):
    pass


class NonMaximalCone(FanError):
    pass


class NonSmoothCone(FanError):
    pass


class UnboundedPolyhedron(FanError):
    pass


class UnknownFan(FanError):
    pass


class NotAWall(FanError):
    pass


class WrongFan(FanError):
    pass


class ConeImageNotContained(FanError):
    pass


class BergmanError(TbkError):
    pass


class NotBergman(BergmanError):
    pass


class NotNested(BergmanError):
    pass


class DimensionMismatch(BergmanError):
    pass


class BundleError(TbkError):
    pass


class RowNotBergman(BundleError):
    """A diagram row is not a point of the Bergman fan."""

    def __init__(self, ray, row):
        BundleError.__init__(self, "row of ray %d %s is not a Bergman point"
                             % (ray, list(row)))
        self.ray = ray


class NoCommonApartment(BundleError):
    """The rows of a maximal cone do not lie in a common apartment."""

    def __init__(self, cone):
        BundleError.__init__(self, "rows of cone %s share no apartment"
                             % (list(cone),))
        self.cone = tuple(cone)


class UnboundedSupport(BundleError):
    pass


class TooLarge(BundleError):
    pass


class NotAmple(BundleError):
    pass


class ScaleGuard(BundleError):
    pass


class NotAnExtension(BundleError):
    pass


class FormatError(TbkError):
    pass
