"""Exception hierarchy shared by all modules."""


class BlochGeometryError(Exception):
    """Base class; ``kind`` is the short tag used in CLI error lines."""

    kind = "Error"


class DimensionError(BlochGeometryError, ValueError):
    kind = "DimensionError"


class DomainError(BlochGeometryError, ValueError):
    kind = "DomainError"


class InvalidState(BlochGeometryError, ValueError):
    kind = "InvalidState"


class NotPositiveSemidefinite(InvalidState):
    kind = "NotPositiveSemidefinite"

    def __init__(self, eigenvalue, message=None):
        self.eigenvalue = float(eigenvalue)
        super().__init__(
            message or f"matrix is not positive semidefinite: eigenvalue {self.eigenvalue:.3e}"
        )


class NoSolution(BlochGeometryError, ValueError):
    kind = "NoSolution"


class ConvergenceError(BlochGeometryError, ArithmeticError):
    kind = "ConvergenceError"

    def __init__(self, residual, sweeps):
        self.residual = float(residual)
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {self.residual:.3e})"
        )
