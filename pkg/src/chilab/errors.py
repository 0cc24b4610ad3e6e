"""Exception hierarchy shared by every chilab module."""


class ChilabError(Exception):
    """Base class for all errors raised by chilab."""


class VertexRangeError(ChilabError, IndexError):
    """A vertex index lies outside ``range(G.n)``."""


class ArgumentError(ChilabError, ValueError):
    """An argument violates the documented precondition of an operation."""


class CapacityError(ChilabError, ValueError):
    """A graph would exceed the configured vertex cap."""


class Graph6ParseError(ChilabError, ValueError):
    """Malformed graph6 text.  ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CertificateStructureError(ChilabError, ValueError):
    """A certificate record is malformed (as opposed to well-formed but false)."""


class TheoremViolation(ChilabError, AssertionError):
    """A strict-mode extraction reached a state its guarantee rules out.

    Raised only when every hypothesis was checked up front, so it always
    indicates either an implementation bug or a counterexample worth reporting.
    """
