"""Exception hierarchy.

Every library error carries a short ``code`` and a JSON-friendly ``context``
dict so the command line can report it as ``{code, message, context}``.
"""

from __future__ import annotations

from typing import Any


class InfgonError(Exception):
    code = "InfgonError"

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "context": _jsonable(self.context)}


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    return value


class WindowError(InfgonError, ValueError):
    """Malformed window data (bounds, arcs outside the window, bad fountain)."""

    code = "InvalidWindow"


class CrossingPairError(WindowError):
    code = "CrossingPair"


class MissingBoundaryError(WindowError):
    code = "MissingBoundary"


class NotClosedError(WindowError):
    code = "NotClosed"


class WrongCountError(WindowError):
    code = "WrongCount"


class NotMutableHereError(InfgonError):
    code = "NotMutableHere"


class IncompleteAtVertexError(InfgonError):
    code = "IncompleteAtVertex"


class NoFountainError(InfgonError):
    code = "NoFountain"


class NoExtensionError(InfgonError):
    code = "NoExtension"


class NoTranslateError(InfgonError):
    code = "NoTranslate"


class ConsecutiveOnesError(InfgonError, ValueError):
    code = "ConsecutiveOnes"


class NonIntegralEntryError(InfgonError, ArithmeticError):
    code = "NonIntegralEntry"


class NonPositiveEntryError(InfgonError, ArithmeticError):
    code = "NonPositiveEntry"


class DoesNotCloseError(InfgonError, ArithmeticError):
    code = "DoesNotClose"


class NonExactDivisionError(InfgonError, ArithmeticError):
    code = "NonExactDivision"


class FountainCrossingError(InfgonError):
    code = "FountainCrossing"


class IncompleteCrossingsError(InfgonError):
    code = "IncompleteCrossings"


class MismatchError(InfgonError):
    code = "Mismatch"
