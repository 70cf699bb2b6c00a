"""Dense complex linear algebra shared by every other module.

Matrices are square numpy arrays of complex128.  The Hermitian/Cartesian
parts are formed so that the result is Hermitian to the last bit, and the
Loewner comparison returns an explicit margin (smallest eigenvalue of the
difference) so callers can report how close a comparison came to failing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PreconditionError",
    "SingularMatrixError",
    "TolerancePolicy",
    "DEFAULT_TOL",
    "as_matrix",
    "is_hermitian",
    "require_hermitian",
    "real_part",
    "imag_part",
    "inverse",
    "hermitian_eig",
    "sqrt_pd",
    "loewner_leq",
    "singular_values",
    "op_norm",
]

# Certification threshold for "this array is Hermitian", relative to the
# largest entry.  Inputs further away than this are treated as user error,
# not as noise to be symmetrized away.
HERMITIAN_CERT_TOL = 1e-12

# Reciprocal condition number below which a matrix is declared singular.
RCOND_FLOOR = 1e-14


class PreconditionError(ValueError):
    """An input violates a documented precondition of the operation."""


class SingularMatrixError(PreconditionError):
    """Matrix is numerically too close to singular to invert."""


@dataclass(frozen=True)
class TolerancePolicy:
    """Relative slack and absolute floor used by order comparisons."""

    rel_eps: float = 1e-9
    abs_floor: float = 1e-12

    def __post_init__(self) -> None:
        if not (self.rel_eps > 0.0 and self.abs_floor > 0.0):
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = TolerancePolicy()


def as_matrix(A) -> np.ndarray:
    """Coerce to a square complex128 matrix, rejecting non-finite entries."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M.real)) or not np.all(np.isfinite(M.imag)):
        raise PreconditionError("matrix entries must be finite")
    return M


def is_hermitian(H: np.ndarray, tol: float = HERMITIAN_CERT_TOL) -> bool:
    H = as_matrix(H)
    scale = 1.0 + np.abs(H).max(initial=0.0)
    return bool(np.abs(H - H.conj().T).max(initial=0.0) <= tol * scale)


def require_hermitian(H: np.ndarray, what: str = "matrix") -> np.ndarray:
    H = as_matrix(H)
    if not is_hermitian(H):
        raise PreconditionError(f"{what} is not Hermitian")
    return H


def real_part(A: np.ndarray) -> np.ndarray:
    """Hermitian part (A + A*)/2 of the Cartesian decomposition."""
    A = as_matrix(A)
    return 0.5 * (A + A.conj().T)


def imag_part(A: np.ndarray) -> np.ndarray:
    """Skew part (A - A*)/(2i); Hermitian, and zero iff A is Hermitian."""
    A = as_matrix(A)
    return (A - A.conj().T) / 2j


def inverse(A: np.ndarray) -> np.ndarray:
    """Inverse with an explicit conditioning guard.

    Raises SingularMatrixError when the reciprocal condition number
    (sigma_min / sigma_max) falls below RCOND_FLOOR.
    """
    A = as_matrix(A)
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] / sv[0] < RCOND_FLOOR:
        raise SingularMatrixError(
            f"matrix is singular to working precision (rcond={0.0 if sv[0] == 0.0 else sv[-1] / sv[0]:.3e})"
        )
    return np.linalg.inv(A)


def hermitian_eig(H: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix."""
    H = require_hermitian(H)
    w, V = np.linalg.eigh(H)
    return w, V


def sqrt_pd(H: np.ndarray) -> np.ndarray:
    """Principal square root of a Hermitian positive definite matrix."""
    w, V = hermitian_eig(H)
    if w[0] <= 0.0:
        raise PreconditionError(
            f"matrix is not positive definite (min eigenvalue {w[0]:.3e})"
        )
    return (V * np.sqrt(w)) @ V.conj().T


def loewner_leq(
    H: np.ndarray, K: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL
) -> tuple[bool, float]:
    """Decide H <= K in the Loewner order, tolerantly.

    Returns (holds, margin) where margin = lambda_min(K - H).  The
    comparison holds when margin >= -rel_eps * max(1, ||H||, ||K||).
    """
    H = require_hermitian(H, "left operand")
    K = require_hermitian(K, "right operand")
    if H.shape != K.shape:
        raise PreconditionError(f"dimension mismatch: {H.shape} vs {K.shape}")
    margin = float(np.linalg.eigvalsh(K - H)[0])
    scale = max(1.0, op_norm(H), op_norm(K))
    return margin >= -tol.rel_eps * scale, margin


def singular_values(A: np.ndarray) -> np.ndarray:
    """Singular values in descending order."""
    return np.linalg.svd(as_matrix(A), compute_uv=False)


def op_norm(A: np.ndarray) -> float:
    """Spectral norm (largest singular value)."""
    return float(np.linalg.svd(np.asarray(A, dtype=np.complex128), compute_uv=False)[0])
