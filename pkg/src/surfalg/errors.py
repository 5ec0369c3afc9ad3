"""Exception hierarchy.

Every precondition failure raised by the toolkit derives from
:class:`SurfalgError`; the class name doubles as the error name reported
by the command line interface.
"""

from __future__ import annotations


class SurfalgError(Exception):
    """Base class for all toolkit errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class InvalidQuiver(SurfalgError, ValueError):
    """Raised when quiver data violates one or more structural invariants.

    ``problems`` holds every violation found, as ``(code, detail)`` pairs,
    not just the first one.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        msg = "; ".join(f"{code}: {detail}" for code, detail in self.problems)
        super().__init__(msg)


class MalformedQuiver(InvalidQuiver):
    pass


class NotTwoRegular(InvalidQuiver):
    pass


class NotAdmissible(InvalidQuiver):
    pass


class NotBijective(InvalidQuiver):
    pass


class Disconnected(InvalidQuiver):
    pass


class InvalidWeights(SurfalgError, ValueError):
    pass


class InvalidBrauerGraph(SurfalgError, ValueError):
    pass


class ExcludedDegenerate(SurfalgError, ValueError):
    """The one-vertex, two-virtual-loop quiver (the algebra K[X]/(X^2))."""


class NotTriangulation(SurfalgError, ValueError):
    pass


class WeightTooSmall(SurfalgError, ValueError):
    def __init__(self, arrows):
        self.arrows = tuple(arrows)
        super().__init__("m*n < 3 for arrows: " + ", ".join(self.arrows))


class TooShort(SurfalgError, ValueError):
    pass


class EmptyBorder(SurfalgError, ValueError):
    pass


class EmptySelection(SurfalgError, ValueError):
    pass


class UnknownArrow(SurfalgError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownVertex(SurfalgError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class TooSmall(SurfalgError, ValueError):
    pass


class SizeLimitExceeded(SurfalgError, ValueError):
    pass


class GenerationFailed(SurfalgError, RuntimeError):
    pass


class DocumentError(SurfalgError, ValueError):
    """Malformed serialized document; ``pointer`` is a JSON pointer."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")


# problem code -> exception class, used by the quiver validator
PROBLEM_CLASSES = {
    "MalformedQuiver": MalformedQuiver,
    "NotTwoRegular": NotTwoRegular,
    "NotAdmissible": NotAdmissible,
    "NotBijective": NotBijective,
    "Disconnected": Disconnected,
}
