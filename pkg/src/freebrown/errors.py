"""Exception hierarchy shared by all freebrown modules."""

from typing import Optional


class FreeBrownError(Exception):
    """Base class for every error raised by freebrown."""


class InvalidLawError(FreeBrownError, ValueError):
    """A two-atom law or parameter set failed validation."""


class NormalOperatorError(InvalidLawError):
    """A degenerate law reached the Brown assembly path (X is normal)."""

    def __init__(self, detail: str = ""):
        message = "normal case: Brown measure equals spectral measure"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class DomainError(FreeBrownError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(FreeBrownError, ZeroDivisionError):
    """A transform was evaluated at one of its poles."""


class ConvergenceError(FreeBrownError, ArithmeticError):
    """A numerical limit did not settle within tolerance."""


class EigensolverError(FreeBrownError, RuntimeError):
    """The dense eigensolver failed on a simulated matrix."""

    def __init__(self, message: str, n: int, seed: int, trial: int):
        super().__init__(f"{message} (n={n}, seed={seed}, trial={trial})")
        self.n = n
        self.seed = seed
        self.trial = trial


class RecoveryError(FreeBrownError, ValueError):
    """Input to law recovery is inconsistent with any two-atom model."""


class ParamsMismatchError(FreeBrownError, ValueError):
    """Two objects that must describe the same model disagree."""

    def __init__(self, message: str, expected: Optional[dict] = None, found: Optional[dict] = None):
        super().__init__(message)
        self.expected = expected
        self.found = found
