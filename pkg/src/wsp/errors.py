"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: input errors exit 2, formula
inconsistencies exit 3, verification failures exit 4.
"""


class WSPError(Exception):
    """Base class for every error raised by this package."""


class InputError(WSPError, ValueError):
    pass


class EmptyInput(InputError):
    pass


class NonCoprime(InputError):
    pass


class NotASemigroup(InputError):
    pass


class NotAMember(InputError):
    pass


class GenusTooSmall(InputError):
    pass


class SingleGenerator(InputError):
    pass


class GenusLimitExceeded(InputError):
    pass


class BadFamilyId(InputError):
    pass


class TauTooSmall(InputError):
    pass


class NotMonicInX(InputError):
    pass


class FormulaInconsistency(WSPError):
    """Buchweitz's count came out negative outside End(N)."""


class VerificationFailure(WSPError):
    pass


class SyzygyFailure(VerificationFailure):
    pass


class CoprimalityFailure(VerificationFailure):
    pass
