"""Sector cones, accretivity certificates, and seeded instance generators.

A matrix A is accretive when its Hermitian part is positive definite, and
lies in the sector of half-angle alpha when additionally
tan(alpha) * Re(A) - Im(A) and tan(alpha) * Re(A) + Im(A) are both PSD.
The generators are deterministic functions of their integer seed so every
sampled instance can be reproduced from the seed alone.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    PreconditionError,
    TolerancePolicy,
    as_matrix,
    imag_part,
    op_norm,
    real_part,
    sqrt_pd,
)

__all__ = [
    "SectorCertificate",
    "validate_sector_angle",
    "is_accretive",
    "sector_angle",
    "in_sector",
    "derive_seed",
    "gen_pd",
    "gen_accretive",
    "gen_sectorial",
    "gen_unitary",
]

MAX_DIM = 64


def validate_sector_angle(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha < math.pi / 2):
        raise PreconditionError(f"sector half-angle must lie in [0, pi/2), got {alpha}")
    return alpha


@dataclass(frozen=True)
class SectorCertificate:
    """A matrix together with a verified sector half-angle bound."""

    matrix: np.ndarray
    alpha: float
    accretivity_margin: float


def is_accretive(A: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL) -> tuple[bool, float]:
    """Test whether Re(A) is positive definite; margin is lambda_min(Re A)."""
    A = as_matrix(A)
    margin = float(np.linalg.eigvalsh(real_part(A))[0])
    return margin > tol.abs_floor, margin


def sector_angle(A: np.ndarray) -> float:
    """Smallest alpha such that the numerical range of A lies in the sector.

    Computed as arctan of the spectral radius of R^{-1/2} Im(A) R^{-1/2}
    with R = Re(A).  Requires A accretive.
    """
    A = as_matrix(A)
    R = real_part(A)
    w, V = np.linalg.eigh(R)
    if w[0] <= DEFAULT_TOL.abs_floor:
        raise PreconditionError(
            f"sector angle requires an accretive matrix (min Re-part eigenvalue {w[0]:.3e})"
        )
    Rinvsqrt = (V / np.sqrt(w)) @ V.conj().T
    T = Rinvsqrt @ imag_part(A) @ Rinvsqrt
    rho = float(np.abs(np.linalg.eigvalsh(0.5 * (T + T.conj().T))).max())
    return math.atan(rho)


def _psd_margin(M: np.ndarray) -> tuple[float, float]:
    evals = np.linalg.eigvalsh(0.5 * (M + M.conj().T))
    return float(evals[0]), max(1.0, float(abs(evals[0])), float(abs(evals[-1])))


def in_sector(A: np.ndarray, alpha: float, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Whether A is accretive and its numerical range lies in the alpha-sector."""
    A = as_matrix(A)
    alpha = validate_sector_angle(alpha)
    accretive, _ = is_accretive(A, tol)
    if not accretive:
        return False
    R, S = real_part(A), imag_part(A)
    t = math.tan(alpha)
    for cone in (t * R - S, t * R + S):
        margin, scale = _psd_margin(cone)
        if margin < -tol.rel_eps * max(scale, op_norm(R)):
            return False
    return True


def derive_seed(*parts) -> int:
    """Stable 64-bit seed derived from a tuple of ints/strings.

    Counter-based: extending the part tuple (trial index, retry attempt)
    yields statistically independent streams, reproducible across runs and
    platforms.
    """
    digest = hashlib.sha256("|".join(str(p) for p in parts).encode()).digest()
    return int.from_bytes(digest[:8], "little")


def _check_dim(n: int) -> int:
    n = int(n)
    if not (1 <= n <= MAX_DIM):
        raise PreconditionError(f"dimension must lie in [1, {MAX_DIM}], got {n}")
    return n


def _complex_gaussian(n: int, rng: np.random.Generator) -> np.ndarray:
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)


def _pd(n: int, rng: np.random.Generator) -> np.ndarray:
    G = _complex_gaussian(n, rng)
    return G.conj().T @ G + 0.1 * np.eye(n)


def _hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    M = _complex_gaussian(n, rng)
    return 0.5 * (M + M.conj().T)


def _accretive(n: int, rng: np.random.Generator) -> np.ndarray:
    return _pd(n, rng) + 1j * _hermitian(n, rng)


def _unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    Q, R = np.linalg.qr(_complex_gaussian(n, rng))
    d = np.diagonal(R).copy()
    d[d == 0] = 1.0
    return Q * (d / np.abs(d))


def _sectorial(n: int, alpha: float, rng: np.random.Generator) -> SectorCertificate:
    H = _pd(n, rng)
    S = _hermitian(n, rng)
    tau = rng.uniform(0.5, 1.0)
    nrm = op_norm(S)
    if nrm == 0.0:
        S = np.eye(n)
        nrm = 1.0
    S = S * (tau * math.tan(alpha) / nrm)
    Hsqrt = sqrt_pd(H)
    X = H + 1j * (Hsqrt @ S @ Hsqrt)
    margin = float(np.linalg.eigvalsh(H)[0])
    realized = sector_angle(X)
    if not (0.4 * alpha - 1e-9 <= realized <= alpha + 1e-9):
        raise RuntimeError(
            f"sectorial generator out of contract: requested {alpha}, realized {realized}"
        )
    return SectorCertificate(matrix=X, alpha=alpha, accretivity_margin=margin)


def gen_pd(n: int, seed: int) -> np.ndarray:
    """Random Hermitian positive definite matrix, eigenvalues >= 0.1."""
    return _pd(_check_dim(n), np.random.default_rng(seed))


def gen_accretive(n: int, seed: int) -> np.ndarray:
    """Random accretive matrix H + iK with H positive definite, K Hermitian."""
    return _accretive(_check_dim(n), np.random.default_rng(seed))


def gen_sectorial(n: int, alpha: float, seed: int) -> SectorCertificate:
    """Random matrix with sector angle in [0.4 * alpha, alpha].

    Built as H + i H^{1/2} S H^{1/2} with ||S|| = tau * tan(alpha),
    tau ~ U[0.5, 1], so the realized angle is arctan(tau * tan(alpha)).
    """
    alpha = validate_sector_angle(alpha)
    if alpha == 0.0:
        return SectorCertificate(
            matrix=gen_pd(n, seed), alpha=0.0, accretivity_margin=0.1
        )
    return _sectorial(_check_dim(n), alpha, np.random.default_rng(seed))


def gen_unitary(n: int, seed: int) -> np.ndarray:
    """Haar-distributed unitary (QR of a complex Gaussian, phases fixed)."""
    return _unitary(_check_dim(n), np.random.default_rng(seed))
