"""Shared exception types for the curvemilnor package."""


class CurveMilnorError(Exception):
    """Base class for all package-specific errors."""


class TowerDegreeExceeded(CurveMilnorError):
    """Adjoining a root (or splitting) would exceed the configured tower degree bound."""


class MaxDepthExceeded(CurveMilnorError):
    """The toric recursion exceeded the configured floor bound."""


class NotVanishing(CurveMilnorError):
    """The input polynomial does not vanish at the origin."""


class NonReduced(CurveMilnorError):
    """The polynomial has a repeated factor; Milnor data is undefined."""


class NonPolynomial(CurveMilnorError):
    """(1-t) * zeta failed to expand to a polynomial; signals an upstream bug."""


class NonIsolated(CurveMilnorError):
    """Jet dimensions did not stabilize within the configured bound."""


class BadPrime(CurveMilnorError):
    """A coefficient (or cluster datum) does not reduce modulo the chosen prime."""


class BudgetExceeded(CurveMilnorError):
    """An enumeration would exceed the configured operation budget."""


class UnrealizableGenerator(CurveMilnorError):
    """A Grothendieck-ring generator has no realization rule."""


class ParseError(CurveMilnorError):
    """Syntax error in the input curve expression."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
