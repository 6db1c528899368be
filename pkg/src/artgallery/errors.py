"""Exception types raised across the package."""


class GeometryError(ValueError):
    pass


class PolygonError(GeometryError):
    pass


class TooFewVertices(PolygonError):
    pass


class DegenerateEdge(PolygonError):
    pass


class SelfIntersecting(PolygonError):
    pass


class DegenerateSegment(GeometryError):
    pass


class PointOutsidePolygon(GeometryError):
    pass


class WindowOutsidePolygon(GeometryError):
    pass


class OnSubdivisionEdge(GeometryError):
    pass


class OutsidePolygon(GeometryError):
    pass


class NotASink(KeyError):
    pass


class InfeasibleInstance(ValueError):
    pass


class OracleCapExceeded(RuntimeError):
    """The exact solver found no solution with at most ``cap`` guards."""

    def __init__(self, cap):
        super().__init__(f"no guard set of size <= {cap}")
        self.cap = cap


class GenerationFailed(RuntimeError):
    pass


class ParseError(ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvariantViolation(AssertionError):
    pass
