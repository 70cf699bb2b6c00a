"""Weighted matrix means and principal fractional powers of accretive matrices.

Two independent routes compute the same objects.  The quadrature route
discretizes the integral representations

    r in (1, 2):   A^r = int_0^1 A^2 (sI + (1-s)A)^{-1} dmu(s)
    r in (-1, 0):  A^r = int_0^1     (sI + (1-s)A)^{-1} dnu(s)
    r in (0, 1):   A^r = int_0^1  A  (sI + (1-s)A)^{-1} dmu_r(s)

with the measures of `quadrature`, while the eigen route diagonalizes and
applies the principal branch of z^r on the spectrum.  The weighted geometric
mean A #_r B is the congruence A^{1/2} (A^{-1/2} B A^{-1/2})^r A^{1/2}; its
direct integral forms (`geometric_mean_integral`) average weighted harmonic
means instead and never pass through the congruence.
"""

from __future__ import annotations

import warnings
from functools import lru_cache

import numpy as np

from .linalg import (
    PreconditionError,
    as_matrix,
    inverse,
    is_hermitian,
    real_part,
)
from .quadrature import (
    DEFAULT_NODES,
    QuadratureRule,
    mean_order_branch,
    quadrature_rule,
)
from .sectors import is_accretive

__all__ = [
    "NonAccretiveWarning",
    "PrincipalBranchError",
    "EigenbasisConditionError",
    "harmonic_mean",
    "arithmetic_mean",
    "principal_power_eigen",
    "principal_power_quad",
    "principal_power",
    "geometric_mean",
    "geometric_mean_integral",
    "reflection_identity",
    "negation_identity",
    "inverse_mean_identity",
]

# Eigenvector basis condition number beyond which the eigen route refuses to
# certify its result; callers regenerate the instance instead.
EIG_COND_LIMIT = 1e8

ENGINES = ("quad", "eigen")


class NonAccretiveWarning(UserWarning):
    """A matrix expected to be accretive is not, but its spectrum still avoids
    the branch cut, so the principal power remains well defined."""


class PrincipalBranchError(PreconditionError):
    """Spectrum touches (-inf, 0]; no principal fractional power exists."""


class EigenbasisConditionError(PreconditionError):
    """Eigenvector basis too ill-conditioned for a trustworthy eigen-route result."""


def _spectrum_off_cut(A: np.ndarray) -> tuple[bool, np.ndarray]:
    lam = np.linalg.eigvals(A)
    scale = max(float(np.abs(lam).max(initial=0.0)), 1e-300)
    on_cut = (lam.real <= 1e-13 * scale) & (np.abs(lam.imag) <= 1e-13 * scale)
    return not bool(on_cut.any()), lam


def _require_power_domain(A: np.ndarray, what: str) -> None:
    accretive, _ = is_accretive(A)
    if accretive:
        return
    safe, _ = _spectrum_off_cut(A)
    if not safe:
        raise PrincipalBranchError(
            f"{what} has spectrum touching (-inf, 0]; principal power undefined"
        )
    warnings.warn(
        f"{what} is not accretive; principal branch still defined, proceeding",
        NonAccretiveWarning,
        stacklevel=3,
    )


def harmonic_mean(A: np.ndarray, B: np.ndarray, s: float) -> np.ndarray:
    """Weighted harmonic mean ((1-s) A^{-1} + s B^{-1})^{-1} for s in [0, 1]."""
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise PreconditionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    s = float(s)
    if not 0.0 <= s <= 1.0:
        raise PreconditionError(f"harmonic weight must lie in [0, 1], got {s}")
    if s == 0.0:
        return A.copy()
    if s == 1.0:
        return B.copy()
    return inverse((1.0 - s) * inverse(A) + s * inverse(B))


def arithmetic_mean(A: np.ndarray, B: np.ndarray, r: float) -> np.ndarray:
    """Weighted arithmetic combination (1-r) A + r B (any real r)."""
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise PreconditionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    return (1.0 - float(r)) * A + float(r) * B


def principal_power_eigen(A: np.ndarray, r: float) -> np.ndarray:
    """A^r through the eigendecomposition and the principal branch of z^r.

    Rejects spectra touching (-inf, 0] and eigenvector bases with condition
    number above EIG_COND_LIMIT (the result could not be certified to the
    tolerances the rest of the package promises).
    """
    A = as_matrix(A)
    r = float(r)
    if r == 0.0:
        return np.eye(len(A), dtype=np.complex128)
    if r == 1.0:
        return A.copy()
    if is_hermitian(A):
        w, V = np.linalg.eigh(A)
        if w[0] <= 0.0:
            raise PrincipalBranchError(
                f"Hermitian input has eigenvalue {w[0]:.3e} on (-inf, 0]"
            )
        return (V * w**r) @ V.conj().T
    safe, lam = _spectrum_off_cut(A)
    if not safe:
        raise PrincipalBranchError("spectrum touches (-inf, 0]; principal power undefined")
    lam, V = np.linalg.eig(A)
    cond = np.linalg.cond(V)
    if cond > EIG_COND_LIMIT:
        raise EigenbasisConditionError(
            f"eigenvector basis condition {cond:.3e} exceeds {EIG_COND_LIMIT:.0e}"
        )
    powered = np.exp(r * np.log(lam))
    return np.linalg.solve(V.T, ((V * powered).T)).T


def _power_quad_unchecked(A: np.ndarray, rule: QuadratureRule) -> np.ndarray:
    n = len(A)
    eye = np.eye(n, dtype=np.complex128)
    branch = mean_order_branch(rule.r)
    s = rule.nodes[:, None, None]
    resolvent_arg = s * eye + (1.0 - s) * A
    if branch == "r12":
        rhs = A @ A
    elif branch == "r01":
        rhs = A
    else:
        rhs = eye
    integrand = np.linalg.solve(resolvent_arg, np.broadcast_to(rhs, resolvent_arg.shape))
    return np.tensordot(rule.weights, integrand, axes=(0, 0))


def principal_power_quad(A: np.ndarray, r: float, rule: QuadratureRule | None = None) -> np.ndarray:
    """A^r by Gauss-Jacobi discretization of the branch integral.

    r = 0 and r = 1 pass through exactly and need no rule; otherwise the
    rule must have been built for this same r.
    """
    A = as_matrix(A)
    r = float(r)
    if mean_order_branch(r) == "endpoint":
        return np.eye(len(A), dtype=np.complex128) if r == 0.0 else A.copy()
    if rule is None:
        raise PreconditionError(f"a quadrature rule for r={r} is required")
    if rule.r != r:
        raise PreconditionError(f"rule was built for r={rule.r}, power asked for r={r}")
    _require_power_domain(A, "quadrature power input")
    return _power_quad_unchecked(A, rule)


@lru_cache(maxsize=512)
def _cached_rule(r: float, n_nodes: int) -> QuadratureRule:
    return quadrature_rule(r, n_nodes)


def principal_power(
    A: np.ndarray, r: float, engine: str = "eigen", nodes: int = DEFAULT_NODES
) -> np.ndarray:
    """Engine dispatcher for principal powers restricted to r in (-1, 2)."""
    if engine not in ENGINES:
        raise PreconditionError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    r = float(r)
    if engine == "eigen":
        mean_order_branch(r)
        return principal_power_eigen(A, r)
    if mean_order_branch(r) == "endpoint":
        return principal_power_quad(A, r)
    return principal_power_quad(A, r, _cached_rule(r, nodes))


def _require_accretive_pair(A: np.ndarray, B: np.ndarray) -> None:
    if A.shape != B.shape:
        raise PreconditionError(f"dimension mismatch: {A.shape} vs {B.shape}")
    for M, name in ((A, "first argument"), (B, "second argument")):
        holds, margin = is_accretive(M)
        if not holds:
            raise PreconditionError(
                f"{name} is not accretive (min Re-part eigenvalue {margin:.3e})"
            )


def geometric_mean(
    A: np.ndarray,
    B: np.ndarray,
    r: float,
    engine: str = "eigen",
    nodes: int = DEFAULT_NODES,
) -> np.ndarray:
    """Weighted geometric mean A #_r B = A^{1/2} (A^{-1/2} B A^{-1/2})^r A^{1/2}.

    The inner matrix is checked for accretivity at runtime: when it fails but
    its spectrum still avoids the branch cut, a NonAccretiveWarning is issued
    and the principal power is taken anyway; when the spectrum touches the
    cut, PrincipalBranchError is raised.
    """
    A, B = as_matrix(A), as_matrix(B)
    if engine not in ENGINES:
        raise PreconditionError(f"unknown engine {engine!r}, expected one of {ENGINES}")
    r = float(r)
    branch = mean_order_branch(r)
    _require_accretive_pair(A, B)
    if branch == "endpoint":
        return A.copy() if r == 0.0 else B.copy()

    def power(M: np.ndarray, p: float) -> np.ndarray:
        if engine == "eigen":
            return principal_power_eigen(M, p)
        return _power_quad_unchecked(M, _cached_rule(p, nodes))

    root = power(A, 0.5)
    root_inv = inverse(root)
    inner = root_inv @ B @ root_inv
    accretive, _ = is_accretive(inner)
    if not accretive:
        safe, _ = _spectrum_off_cut(inner)
        if not safe:
            raise PrincipalBranchError(
                "inner congruence A^{-1/2} B A^{-1/2} has spectrum touching (-inf, 0]"
            )
        warnings.warn(
            "inner congruence A^{-1/2} B A^{-1/2} is not accretive; "
            "principal branch still defined, proceeding",
            NonAccretiveWarning,
            stacklevel=2,
        )
    return root @ power(inner, r) @ root


def geometric_mean_integral(
    A: np.ndarray, B: np.ndarray, r: float, rule: QuadratureRule
) -> np.ndarray:
    """A #_r B through the direct integral representations.

    r in (1, 2):   int ((1-s) B^{-1} + s B^{-1} A B^{-1})^{-1} dmu(s)
    r in (-1, 0):  int ((1-s) A^{-1} B A^{-1} + s A^{-1})^{-1} dnu(s)
    r in (0, 1):   int ((1-s) A^{-1} + s B^{-1})^{-1}          dmu_r(s)

    No congruence and no fractional power is involved, which makes this an
    independent cross-check of `geometric_mean`.
    """
    A, B = as_matrix(A), as_matrix(B)
    _require_accretive_pair(A, B)
    r = float(r)
    branch = mean_order_branch(r)
    if branch == "endpoint":
        raise PreconditionError("integral form needs r outside {0, 1}")
    if rule.r != r:
        raise PreconditionError(f"rule was built for r={rule.r}, mean asked for r={r}")
    s = rule.nodes[:, None, None]
    if branch == "r12":
        Binv = inverse(B)
        combo = (1.0 - s) * Binv + s * (Binv @ A @ Binv)
    elif branch == "rneg":
        Ainv = inverse(A)
        combo = (1.0 - s) * (Ainv @ B @ Ainv) + s * Ainv
    else:
        Ainv, Binv = inverse(A), inverse(B)
        combo = (1.0 - s) * Ainv + s * Binv
    eye = np.broadcast_to(np.eye(len(A), dtype=np.complex128), combo.shape)
    integrand = np.linalg.solve(combo, eye)
    return np.tensordot(rule.weights, integrand, axes=(0, 0))


def reflection_identity(
    A: np.ndarray, B: np.ndarray, r: float, engine: str = "eigen", nodes: int = DEFAULT_NODES
) -> np.ndarray:
    """B (A #_{2-r} B)^{-1} B, which equals A #_r B for r in (1, 2)."""
    r = float(r)
    if mean_order_branch(r) != "r12":
        raise PreconditionError(f"reflection form needs r in (1, 2), got {r}")
    return as_matrix(B) @ inverse(geometric_mean(A, B, 2.0 - r, engine, nodes)) @ as_matrix(B)


def negation_identity(
    A: np.ndarray, B: np.ndarray, r: float, engine: str = "eigen", nodes: int = DEFAULT_NODES
) -> np.ndarray:
    """A (A^{-1} #_{-r} B^{-1}) A, which equals A #_r B for r in (-1, 0)."""
    r = float(r)
    if mean_order_branch(r) != "rneg":
        raise PreconditionError(f"negation form needs r in (-1, 0), got {r}")
    A = as_matrix(A)
    return A @ geometric_mean(inverse(A), inverse(as_matrix(B)), -r, engine, nodes) @ A


def inverse_mean_identity(
    A: np.ndarray, B: np.ndarray, r: float, engine: str = "eigen", nodes: int = DEFAULT_NODES
) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of (A #_r B)^{-1} = A^{-1} #_r B^{-1}."""
    lhs = inverse(geometric_mean(A, B, r, engine, nodes))
    rhs = geometric_mean(inverse(as_matrix(A)), inverse(as_matrix(B)), r, engine, nodes)
    return lhs, rhs


def real_geometric_mean(
    A: np.ndarray, B: np.ndarray, r: float, rule: QuadratureRule
) -> np.ndarray:
    """Re(A) #_r Re(B) through the integral route; Hermitian by construction."""
    return real_part(geometric_mean_integral(real_part(A), real_part(B), r, rule))
