"""Exception hierarchy. Every error raised by the library derives from GeometryError."""


class GeometryError(ValueError):
    pass


# polygon / polyhedron validation
class TooFewVertices(GeometryError):
    pass


class DuplicateVertex(GeometryError):
    pass


class SelfIntersecting(GeometryError):
    pass


class NonFinite(GeometryError):
    pass


class NonPositiveScale(GeometryError):
    pass


class InvalidFacet(GeometryError):
    pass


class NonManifoldEdge(GeometryError):
    pass


class NotClosed(GeometryError):
    pass


class EulerCharacteristicMismatch(GeometryError):
    pass


class NonPlanarFacet(GeometryError):
    pass


class NonConvexFacet(GeometryError):
    pass


# linear programming / inscribed balls
class LPError(GeometryError):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


class NumericalFailure(LPError):
    pass


class NotConvex(GeometryError):
    pass


class MismatchedShape(GeometryError):
    pass


# derivative checks
class LineThroughOrigin(GeometryError):
    pass


class NotTangential(GeometryError):
    pass


class StepTooLarge(GeometryError):
    pass


class SampleOutOfRange(GeometryError):
    pass


# erosion / closed forms
class EpsilonTooLarge(GeometryError):
    pass


class NonPositiveRadius(GeometryError):
    pass


class BadN(GeometryError):
    pass


class UnknownKind(GeometryError):
    pass


class BadRange(GeometryError):
    pass
