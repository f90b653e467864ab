"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class KGError(Exception):
    """Base class for every error raised by kgcoulomb."""


class InvalidArgumentError(KGError, ValueError):
    pass


class InvalidQuantumNumbersError(InvalidArgumentError):
    def __init__(self, message, constraint):
        super().__init__(message)
        self.constraint = constraint


class DomainError(KGError, ValueError):
    """Argument outside the mathematical domain of a special function."""


class SupercriticalChargeError(KGError):
    """Z*alpha reached l + 1/2; the effective orbital number is no longer real."""


class IntegrandError(KGError):
    def __init__(self, message, abscissa):
        super().__init__(message)
        self.abscissa = abscissa


class IntegrationError(KGError):
    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class FisherUndefinedError(KGError):
    """The Fisher integral diverges at the origin for this state."""
