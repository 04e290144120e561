"""Exception hierarchy.

Two families matter to callers: :class:`DomainRejection` means the input
does not describe a sextic du Val del Pezzo surface (or is malformed), while
:class:`InternalError` means a computed table contradicts itself.  The CLI
maps them to exit codes 2 and 1.
"""

from __future__ import annotations


class DP6Error(Exception):
    """Base class; ``code`` names the condition in machine-readable form."""

    def __init__(self, message: str = "", condition: str | None = None):
        super().__init__(message or self.__class__.__name__)
        self.condition = condition

    @property
    def code(self) -> str:
        return self.__class__.__name__

    def payload(self) -> dict:
        return {"error": {"code": self.code, "condition": self.condition, "message": str(self)}}


class DomainRejection(DP6Error):
    pass


class InternalError(DP6Error):
    pass


class ParseError(DomainRejection):
    pass


class InvalidConfig(DomainRejection):
    pass


class NotDelPezzo(DomainRejection):
    def __init__(self, orbit: str, detail: str = ""):
        super().__init__(f"NotDelPezzo: {orbit}" + (f" ({detail})" if detail else ""), condition=orbit)
        self.orbit = orbit


class PencilRejected(DomainRejection):
    """A pencil violating at least one of the two du Val conditions.

    ``violations`` lists every violated condition, not only the one that
    determined the exception class.
    """

    def __init__(self, message: str, violations: tuple[str, ...]):
        super().__init__(message, condition=violations[0] if violations else None)
        self.violations = violations


class PencilInDiscriminant(PencilRejected):
    pass


class RankOneMember(PencilRejected):
    pass


class FatPoint(DomainRejection):
    pass


class IndexOutOfRange(DomainRejection):
    pass


class RelationViolation(DomainRejection):
    pass


class UnsupportedSize(DomainRejection):
    pass


class NotExceptional(DomainRejection):
    pass


class InternalInvariantViolation(InternalError):
    pass


class UnrecognizedPattern(InternalError):
    pass


class PencilInDiscriminantWithRankOneMember(PencilInDiscriminant, RankOneMember):
    """Both conditions fail; catchable as either of the two."""

    @property
    def code(self) -> str:
        return "PencilInDiscriminant"
