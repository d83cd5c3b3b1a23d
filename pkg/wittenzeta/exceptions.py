# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt


class WittenZetaError(Exception):
    """Base class for every error raised by wittenzeta."""


class DivergentError(WittenZetaError, ValueError):
    """Arguments outside the domain of convergence.

    `violations` lists the failed conditions, e.g. ``"s1+s2+s3+s4+s5+s6 > 3"``.
    """

    def __init__(self, message: str, violations: "list[str] | None" = None):
        self.violations = list(violations or [])
        if self.violations:
            message = f"{message}: violated {', '.join(self.violations)}"
        super().__init__(message)


class RegularizationError(WittenZetaError):
    pass


class DivergentResidueError(WittenZetaError):
    """A T-power or regularized symbol survived where a finite value was expected."""


class PreconditionError(WittenZetaError, ValueError):
    pass


class ReductionError(WittenZetaError):
    pass


class PrecisionError(WittenZetaError):
    def __init__(self, message: str, best_error=None):
        self.best_error = best_error
        if best_error is not None:
            message = f"{message} (best error bound {float(best_error):.3e})"
        super().__init__(message)


class ConfigurationError(WittenZetaError, ValueError):
    pass
