"""
Exception hierarchy for the toolkit.

Library code raises these; only the command-line front end turns them into
exit codes. Errors that describe bad input values also derive from
ValueError so callers can catch them generically.
"""

from typing import Any, Optional, Tuple


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class EmptyComplexError(ToolkitError, ValueError):
    """A complex was requested from an empty facet collection."""


class FaceNotFoundError(ToolkitError, KeyError):
    """A face passed to link/star is not a face of the complex."""

    def __init__(self, face: Tuple[int, ...]):
        self.face = face
        super().__init__(f"Face {tuple(face)} is not a face of the complex")

    def __str__(self) -> str:
        return self.args[0]


class NotPureError(ToolkitError, ValueError):
    """The operation needs a pure complex."""


class NotWeakError(ToolkitError, ValueError):
    """Some ridge lies in three or more facets."""


class NotClosedError(ToolkitError, ValueError):
    """The operation needs a complex with empty boundary."""


class DimOutOfRangeError(ToolkitError, ValueError):
    """A dimension parameter is outside the supported range."""


class UnknownVertexError(ToolkitError, ValueError):
    """A vertex label is not in the complex."""


class NotConnectedError(ToolkitError, ValueError):
    """The operation needs a connected complex."""


class InadmissibleGluingError(ToolkitError, ValueError):
    """
    A vertex identification would merge two vertices with a common neighbour.

    Attributes:
        pair: (u, image of u) that share a neighbour
        common_neighbor: the shared neighbour, None when the glued faces overlap
    """

    def __init__(self, pair: Tuple[int, int], common_neighbor: Optional[int] = None):
        self.pair = pair
        self.common_neighbor = common_neighbor
        if common_neighbor is None:
            message = f"Inadmissible gluing: {pair[0]} -> {pair[1]} maps between overlapping faces"
        else:
            message = f"Inadmissible gluing: {pair[0]} and {pair[1]} share neighbour {common_neighbor}"
        super().__init__(message)


class NotFacetError(ToolkitError, ValueError):
    """A gluing face is not a facet of the complex."""


class NotDisjointError(ToolkitError, ValueError):
    """The two faces of a gluing map share a vertex."""


class DegenerateIdentificationError(ToolkitError, ValueError):
    """Identifying vertices collapsed a facet onto fewer vertices."""


class ConstructionBugError(ToolkitError, RuntimeError):
    """An internal construction failed its own validation."""


class HypothesesNotVerifiedError(ToolkitError, ValueError):
    """A tree family was used without passing verification."""


class LabelMismatchError(ToolkitError, ValueError):
    """Vertex labels are not exactly {0, ..., n-1}."""


class ConeNotSupportedError(ToolkitError, ValueError):
    """Symmetry search refuses cones (some vertex lies in every facet)."""

    def __init__(self, apex: int):
        self.apex = apex
        super().__init__(f"Complex is a cone with apex {apex}")


class NotClosedManifoldLikeError(ToolkitError, ValueError):
    """Some ridge does not lie in exactly two facets."""


class TooLargeError(ToolkitError, ValueError):
    """An input exceeds a configured size cap."""

    def __init__(self, message: str, size: Optional[int] = None, cap: Optional[int] = None):
        self.size = size
        self.cap = cap
        super().__init__(message)


class GroupOrderOverflowError(ToolkitError, ArithmeticError):
    """The automorphism group grew past the configured cap."""


class FacetParseError(ToolkitError, ValueError):
    """A facet-list file could not be parsed."""

    def __init__(self, message: str, line_number: int, source: Any = None):
        self.line_number = line_number
        self.source = source
        where = f"{source}:" if source else "line "
        super().__init__(f"{where}{line_number}: {message}")
