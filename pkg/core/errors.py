"""
Exception types raised by the verifier library.
The CLI maps every QBrauerError to exit code 2; relation failures are reports, not exceptions.
"""


class QBrauerError(Exception):
    """Base class for verifier errors"""


class DimensionMismatchError(QBrauerError, ValueError):
    """Operands have incompatible shapes"""


class GuardExceededError(QBrauerError, ValueError):
    """A size guard from config.verify_config was exceeded"""


class InvalidIndexError(QBrauerError, ValueError):
    """Generator index, leg label or diagram size out of range"""


class EvaluationError(QBrauerError, ValueError):
    """Specialization of q at an inadmissible point"""


class UnknownNameError(QBrauerError, ValueError):
    """Unknown operator name, suite id or letter"""


class GenericityError(QBrauerError):
    """Rational specialization points disagree or are roots of unity"""


class FormatError(QBrauerError, ValueError):
    """Malformed interchange, diagram or report text"""


class RingMismatchError(QBrauerError, TypeError):
    """Operands live over different coefficient rings"""
