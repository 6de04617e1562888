from __future__ import annotations


class AppError(Exception):
    """Base application error"""


class ConfigError(AppError):
    """Missing or invalid configuration"""


# --- input formats ---

class PolynomialFormatError(AppError, ValueError):
    """Polynomial document is malformed (bad rational, exponent length, negative exponent)"""


class PolyhedronFormatError(AppError, ValueError):
    """Constraint document is malformed"""


class DimensionMismatchError(AppError, ValueError):
    """Vector or matrix shape does not match the operation"""


# --- exact linear algebra ---

class NonIntegerMatrixError(AppError, ValueError):
    """HNF input contains a non-integer entry"""


class NotSquareError(AppError, ValueError):
    """Determinant or definiteness requested for a non-square matrix"""


class AsymmetricMatrixError(AppError, ValueError):
    """Symmetric input expected"""


class NotPositiveDefiniteError(AppError, ValueError):
    """Matrix is not positive definite"""


class NegativeInputError(AppError, ValueError):
    """Square root of a negative rational requested"""


# --- contract violations ---

class ContractViolation(AppError):
    """Internal invariant failed; `module` names where it was detected"""

    def __init__(self, message: str, *, module: str) -> None:
        super().__init__(f"[{module}] {message}")
        self.module = module


class LpIterationLimitError(ContractViolation):
    """Simplex exceeded its Bland iteration bound"""


class InnerBallInfeasibleError(AppError):
    """Inner-ball LP infeasible: P intersected with the ball is empty"""


class ResidualNonzeroError(ContractViolation):
    """Structure identity f(x) = fhat(Ux) - <w,x> failed on expansion"""


class WitnessInfeasibleError(ContractViolation):
    """No (lambda, z) with A^T lambda + U^T z = w although no ray exists"""


class NonPositiveModulusError(ContractViolation):
    """Strong-convexity modulus mu is not positive"""


class OracleContractError(ContractViolation):
    """Separation oracle returned a cut that cannot exclude the query"""


class EllipsoidContractError(ContractViolation):
    """Ellipsoid run reported small volume where a point is guaranteed"""


# --- solver outcomes surfaced as errors ---

class NotConvexEvidence(AppError):
    """Hessian determinant vanishes on the whole search grid: input cannot be convex"""

    def __init__(self, message: str, *, grid_points: int = 0) -> None:
        super().__init__(message)
        self.grid_points = grid_points


class DefinitePointNotFoundError(AppError):
    """Randomized definite-point search used all its tries"""


class EmptyPolyhedronError(AppError):
    """Constraint system has no feasible point"""

    def __init__(self, message: str, *, certificate=None) -> None:
        super().__init__(message)
        self.certificate = certificate
