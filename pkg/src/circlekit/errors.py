"""Exception hierarchy shared by every circlekit module."""

from __future__ import annotations


class GeometryError(ValueError):
    """Base class for geometric preconditions that do not hold."""

    code = "GeometryError"

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


def _error(name: str, doc: str) -> type[GeometryError]:
    return type(name, (GeometryError,), {"code": name, "__doc__": doc})


# kernel
CoincidentLines = _error("CoincidentLines", "Two lines that should meet in one point coincide.")
CoincidentPoints = _error("CoincidentPoints", "Two points that should span a line coincide.")
CollinearPoints = _error("CollinearPoints", "Three points that should span a circle are collinear.")
CollinearBase = _error("CollinearBase", "The first three points of a concyclicity test are collinear.")
ConcentricCircles = _error("ConcentricCircles", "Radical axis requested for concentric circles.")
PoleAtCenter = _error("PoleAtCenter", "The polar of a circle's own center does not exist.")
LineThroughCenter = _error("LineThroughCenter", "A line through the center has its pole at infinity.")
InfinitePointUnsupported = _error("InfinitePointUnsupported", "Operation needs a finite point.")
NoIntersection = _error("NoIntersection", "The curves have no real common point.")

# centers
DegenerateTriangle = _error("DegenerateTriangle", "The three vertices are (nearly) collinear.")
OnCircumcircle = _error("OnCircumcircle", "The isogonal conjugate lies at infinity.")
AtVertex = _error("AtVertex", "The point coincides with a triangle vertex.")
NotOnLine = _error("NotOnLine", "The point does not lie on the required line.")
AtEndpoint = _error("AtEndpoint", "The point coincides with a segment endpoint.")
OnSideLine = _error("OnSideLine", "The point lies on a side line of the triangle.")
RightAngle = _error("RightAngle", "The triangle has a right angle; the construction runs off to infinity.")
IsoscelesDegenerate = _error("IsoscelesDegenerate", "The construction needs a scalene triangle.")
OutsideAngle = _error("OutsideAngle", "The point is not strictly inside the angle.")

# circles
PointOutsideTriangle = _error("PointOutsideTriangle", "The generating point leaves the triangle.")
IsoscelesUndefined = _error("IsoscelesUndefined", "Apollonius circle of equal adjacent sides is undefined.")
FootAtInfinity = _error("FootAtInfinity", "A cevian foot runs off to infinity.")

# registry
RightAngleCase = _error("RightAngleCase", "gamma = 90 degrees: no finite fixed point exists.")
UnknownCheck = _error("UnknownCheck", "No catalog entry has this id.")
BackendUnsupported = _error("BackendUnsupported", "The check cannot run on the requested backend.")

# ruler
class RulerError(GeometryError):
    """A ruler program is malformed or cannot be carried out."""

    code = "RulerError"

    def __init__(self, message: str = "", line: int | None = None, column: int | None = None) -> None:
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        where = ""
        if self.line is not None:
            where = f" (line {self.line}" + (f", column {self.column})" if self.column is not None else ")")
        return f"{self.code}: {self.args[0] if self.args else ''}{where}"


def _ruler_error(name: str, doc: str) -> type[RulerError]:
    return type(name, (RulerError,), {"code": name, "__doc__": doc})


RulerSyntaxError = _ruler_error("RulerSyntaxError", "The program text does not match the grammar.")
UnknownIdentifier = _ruler_error("UnknownIdentifier", "A name is used before it is defined.")
ArityError = _ruler_error("ArityError", "A primitive got the wrong number of arguments.")
KindError = _ruler_error("KindError", "An argument has the wrong kind (point, line or circle).")
DegenerateStep = _ruler_error("DegenerateStep", "A step has no well-defined result for these inputs.")
MissingGiven = _ruler_error("MissingGiven", "A declared given was not supplied.")


class ConstructionMismatch(AssertionError):
    """Two independent routes to the same object disagree beyond tolerance."""
