"""
Error types raised by levelable-kit

Every error is a ValueError so callers that only guard against bad input
keep working; the CLI turns any LevelableKitError into exit code 2.
"""

from typing import Any, Dict, Optional


class LevelableKitError(ValueError):
    """Base class for all levelable-kit input and precondition errors"""

    hint: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        payload = {"error": type(self).__name__, "message": str(self)}
        if self.hint:
            payload["hint"] = self.hint
        return payload


# complex-core
class EmptyComplex(LevelableKitError):
    pass


class UnknownVertex(LevelableKitError):
    pass


class UncoveredVertex(LevelableKitError):
    pass


class NotAFacet(LevelableKitError):
    pass


class TooManyFacets(LevelableKitError):
    pass


class FaceLimitExceeded(LevelableKitError):
    pass


# monomial-algebra
class BadExponent(LevelableKitError):
    hint = "exponents must be >= 2; run with --normalize to drop vertices with exponent 1"


class CollapsedToEmpty(LevelableKitError):
    pass


class BoxTooLarge(LevelableKitError):
    hint = "raise the cap with --max-box or LEVELABLE_MAX_BOX"


# levelability
class SingleFacet(LevelableKitError):
    pass


class SingletonFacet(LevelableKitError):
    hint = "run with --normalize, or remove facets of cardinality one"


class NotPure(LevelableKitError):
    pass


class NotDisjoint(LevelableKitError):
    pass


class NotForest(LevelableKitError):
    pass


class TooSmall(LevelableKitError):
    pass


class StrategyInapplicable(LevelableKitError):
    pass


# cli
class DocumentError(LevelableKitError):
    """Malformed input document; `field` is a JSON path like facets[2][0]"""

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        super().__init__(message)
        self.field = field
        self.line = line

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        if self.field is not None:
            payload["field"] = self.field
        if self.line is not None:
            payload["line"] = self.line
        return payload
