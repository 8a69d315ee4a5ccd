"""Exception hierarchy shared by every module of the workbench.

Each domain error carries a stable one-line message; the CLI maps any
:class:`WorkbenchError` to exit status 1.
"""


class WorkbenchError(Exception):
    """Base class for all domain errors."""


class ModulusMismatch(WorkbenchError):
    pass


class DivisionByZero(WorkbenchError, ZeroDivisionError):
    pass


class NotPrime(WorkbenchError):
    pass


class CapExceeded(WorkbenchError):
    pass


class SingularCurve(WorkbenchError):
    pass


class NotOnCurve(WorkbenchError):
    pass


class NoPrimeOrderSubgroup(WorkbenchError):
    pass


class ParamsViolation(WorkbenchError):
    """A domain-parameter invariant does not hold.

    ``violations`` lists every violation found, the raised one first.
    """

    def __init__(self, message: str, violations=None):
        super().__init__(message)
        self.violations = list(violations) if violations else [self]


class OffCurveGenerator(ParamsViolation):
    pass


class WrongOrder(ParamsViolation):
    pass


class CompositeOrder(ParamsViolation):
    pass


class CofactorMismatch(ParamsViolation):
    pass


class HasseViolation(ParamsViolation):
    pass


class KeyOutOfRange(WorkbenchError):
    pass


class IdentityTarget(WorkbenchError):
    pass


class NotInSubgroup(WorkbenchError):
    def __init__(self, message: str, group_ops: int = 0):
        super().__init__(message)
        self.group_ops = group_ops


class InsufficientData(WorkbenchError):
    pass


class ConfigError(WorkbenchError):
    pass


class FormatError(WorkbenchError):
    pass
