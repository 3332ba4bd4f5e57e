"""Exception types shared across the package.

The CLI maps these onto exit codes: ParseError -> 2, everything else
derived from BrandtOmegaError -> 3.
"""


class BrandtOmegaError(ValueError):
    """Base class for semantic errors raised by this package."""


class ParseError(BrandtOmegaError):
    """Malformed text form (element, support, neighborhood)."""


class FamilyError(BrandtOmegaError):
    """Invalid support or family construction."""


class InvalidElementError(BrandtOmegaError):
    """Element is not valid over the given family."""


class NotInImageError(InvalidElementError):
    """Element lies outside the restricted subsemigroup."""


class NotTranslateEquivalentError(BrandtOmegaError):
    """The two families are not translates of each other."""
