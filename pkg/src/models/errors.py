"""
Domain errors raised by the verification services.
The command layer turns them into failed report records.
"""


class VerificationError(Exception):
    """Base class for every check that can fail on mathematical grounds"""


class InconsistentSystemError(VerificationError):
    """Right-hand side is not in the column span"""


class NoRelationError(VerificationError):
    """Expected relation has a zero-dimensional solution space"""


class AmbiguousRelationError(VerificationError):
    """Expected relation is not unique up to scale"""

    def __init__(self, message, dimension):
        super().__init__(message)
        self.dimension = dimension


class GSVMismatchError(VerificationError):
    """Both sides of the motive identity differ as Poincare polynomials"""

    def __init__(self, message, difference):
        super().__init__(message)
        self.difference = difference


class CensusMismatchError(VerificationError):
    """Closed formula and atom expansion disagree"""


class UnsupportedAtomError(VerificationError):
    pass


class UnderivedError(VerificationError):
    """Rewriting did not reach the target identity within the step bound"""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []


class ModelMismatchError(VerificationError):
    """Operands live over different models or have the wrong arity"""


class OutOfRangeError(ValueError):
    """Inputs lie outside the range a check supports; reported as skipped"""
