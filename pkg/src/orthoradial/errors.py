"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class OrthoRadialError(Exception):
    """Base class for every error raised by this package."""


# -- plane graph construction -------------------------------------------------


class GraphError(OrthoRadialError, ValueError):
    pass


class NonPlanarRotation(GraphError):
    pass


class DegreeExceeded(GraphError):
    pass


class BadReferenceDart(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadDesignation(GraphError):
    pass


class InvalidRotation(GraphError):
    pass


# -- paths and cycles -----------------------------------------------------------


class AmbiguousEndpoint(OrthoRadialError, ValueError):
    pass


class NotOnContainer(OrthoRadialError, ValueError):
    pass


class NotACycle(OrthoRadialError, ValueError):
    pass


class NotSimple(OrthoRadialError, ValueError):
    pass


class NotAPath(OrthoRadialError, ValueError):
    pass


class NotClosed(OrthoRadialError, ValueError):
    pass


class NotIncident(OrthoRadialError, ValueError):
    pass


# -- representation / validity ------------------------------------------------


class RepresentationError(OrthoRadialError, ValueError):
    pass


class PreconditionsUnchecked(OrthoRadialError):
    """Directions requested on a representation violating angle or face sums."""


class CycleLimitExceeded(OrthoRadialError):
    pass


class NoCommonCentralFaceVertex(OrthoRadialError, ValueError):
    pass


# -- rectangulation -----------------------------------------------------------


class NotACandidate(OrthoRadialError, ValueError):
    pass


class PortOccupied(OrthoRadialError, ValueError):
    pass


class InternalInvariantBroken(OrthoRadialError, AssertionError):
    pass


# -- metrics ------------------------------------------------------------------


class NotRectangular(OrthoRadialError, ValueError):
    pass


class InconsistentClosure(OrthoRadialError, AssertionError):
    pass


class NotValid(OrthoRadialError):
    """Raised by :func:`orthoradial.drawing.draw` for invalid input.

    The offending :class:`~orthoradial.validity.ValidityReport` is kept in
    ``report``.
    """

    def __init__(self, message: str, report=None) -> None:
        super().__init__(message)
        self.report = report


# -- io -----------------------------------------------------------------------


class ParseError(OrthoRadialError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InstanceSyntaxError(ParseError):
    pass


class InstanceSemanticError(ParseError):
    pass


class BoundExceeded(OrthoRadialError):
    pass
