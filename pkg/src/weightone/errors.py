"""Exception types raised across the package.

Everything derives from :class:`WeightOneError`; the ones that signal bad
user input also derive from :class:`ValueError` so the CLI can map them to
exit code 2.
"""


class WeightOneError(Exception):
    pass


class InvalidInput(WeightOneError, ValueError):
    pass


class NotPrime(InvalidInput):
    pass


class WrongResidueClass(InvalidInput):
    pass


class TooSmall(InvalidInput):
    pass


class NonNegativeDiscriminant(InvalidInput):
    pass


class DiscriminantMismatch(InvalidInput):
    pass


class IndexOutOfRange(InvalidInput, IndexError):
    pass


class GroupMismatch(InvalidInput):
    pass


class TrivialCharacter(InvalidInput):
    pass


class IllegalValue(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class NonHermitianGram(InvalidInput):
    pass


class NonPositiveArgument(InvalidInput):
    pass


class InsufficientCoefficients(InvalidInput):
    pass


class MissingCoefficient(WeightOneError, KeyError):
    pass
