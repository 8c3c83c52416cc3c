"""
Domain exceptions for KRStrata

All errors derive from ValueError so callers that only know about bad input
keep working; the API layer maps them to HTTP 400 and the CLI to exit code 1.
"""


class KRStrataError(ValueError):
    """Base class for all domain errors"""


class ContextMismatchError(KRStrataError):
    """Operands belong to different group contexts"""


class IndexOutOfRangeError(KRStrataError):
    """Simple reflection or parabolic index outside the admissible range"""


class AlcoveError(KRStrataError):
    """Tuple of vectors violates the step or duality condition"""


class NotPermissibleError(KRStrataError):
    """Alcove or element is not mu-permissible"""


class GenusOutOfRangeError(KRStrataError):
    """Genus outside the supported enumeration range"""


class NotSuperspecialError(KRStrataError):
    """Element does not lie in any W_{i,g-i} tau"""


class IntegralityError(KRStrataError):
    """A count that must be an integer came out fractional"""


class BudgetExceededError(KRStrataError):
    """Brute-force oracle asked to run beyond its budget"""


class ArithmeticInputError(KRStrataError):
    """Bad prime or level passed to an arithmetic count"""


class InvalidAutomorphismError(KRStrataError):
    """Map on generators is not a diagram automorphism"""
