"""Exception types raised across the package."""


class RExtensionError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(RExtensionError, ZeroDivisionError):
    pass


class FieldMismatch(RExtensionError, ValueError):
    pass


class ModulusZero(RExtensionError, ZeroDivisionError):
    pass


class NotIrreducible(RExtensionError, ValueError):
    pass


class ZeroConstantTerm(RExtensionError, ValueError):
    pass


class NotMonic(RExtensionError, ValueError):
    pass


class DegreeZero(RExtensionError, ValueError):
    pass


class NotPrimitive(RExtensionError, ValueError):
    pass


class ShapeMismatch(RExtensionError, ValueError):
    pass


class NoSolution(RExtensionError, ValueError):
    pass


class Singular(RExtensionError, ValueError):
    pass


class OrbitTooLarge(RExtensionError, ValueError):
    pass


class AtOnes(RExtensionError, ValueError):
    """Phi applied to (1, ..., 1)."""


class NotOnRoad(RExtensionError, ValueError):
    pass


class AlreadyAtR(RExtensionError, ValueError):
    pass


class ZeroRow(RExtensionError, ValueError):
    pass


class RowNotUnit(RExtensionError, ValueError):
    pass


class BadDegree(RExtensionError, ValueError):
    pass


class BadLadder(RExtensionError, ValueError):
    pass


class BadInitialState(RExtensionError, ValueError):
    pass


class BadChoices(RExtensionError, ValueError):
    pass


class ExtensionDeficient(RExtensionError, ValueError):
    """The stacked state is singular, so no word-based LFSR realizes the multisequence."""


class NotMCompanion(RExtensionError, ValueError):
    pass


class ZeroState(RExtensionError, ValueError):
    pass


class EvenLength(RExtensionError, ValueError):
    pass


class BadRange(RExtensionError, ValueError):
    pass


class TooLarge(RExtensionError, ValueError):
    pass


class NonIntegralOrbitQuotient(RExtensionError, ArithmeticError):
    """An oracle matrix count was not divisible by the orbit size (indicates a bug)."""


class InsufficientSamples(UserWarning):
    """Berlekamp-Massey saw fewer than twice the linear complexity in samples."""


class VerificationError(RExtensionError, AssertionError):
    """An in-process self-check of a synthesized result failed."""
