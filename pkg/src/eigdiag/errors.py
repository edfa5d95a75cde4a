"""Exception hierarchy shared by every module of the package."""


class EigDiagError(Exception):
    """Base class for all errors raised by eigdiag."""


class InputError(EigDiagError, ValueError):
    """Bad user-supplied data (maps to CLI exit status 2)."""


class NotSquare(InputError):
    pass


class NotHermitian(InputError):
    pass


class NonFiniteEntry(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class DuplicateIndex(InputError):
    pass


class OrderTooSmall(InputError):
    pass


class OrderTooLarge(InputError):
    pass


class OrderMismatch(InputError):
    pass


class InvalidRange(InputError):
    pass


class InvalidTask(InputError):
    pass


class NotZeroDiagonal(InputError):
    pass


class ClassNotApplicable(InputError):
    """The matrix lies outside the class a theorem quantifies over."""


class HypothesisViolated(InputError):
    """A proof hypothesis (e.g. det M3 >= 0) fails for the given matrix."""


class ParseError(InputError):
    pass


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class ConvergenceFailure(EigDiagError, RuntimeError):
    """Jacobi sweeps exhausted before the off-diagonal norm fell below threshold."""


class OracleDisagreement(EigDiagError, RuntimeError):
    pass
