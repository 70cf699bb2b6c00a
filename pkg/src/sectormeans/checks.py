"""Catalog of machine-checkable inequalities and identities.

Every entry states a claim about matrices drawn from its hypothesis classes
("pd", "accretive", "sectorial") and evaluates to a slack margin: the claim
holds on a sampled instance when margin >= -tol * scale.  Loewner claims
report lambda_min of the difference, scalar claims report the scalar slack,
sector-membership claims the smallest of the three cone margins, and
identity claims report minus the relative distance between the two sides.

Margins that depend on the sector angle are computed twice: once with the
angle the generator was asked for (the primary, pass/fail margin) and once
with the instance's realized angle (a strictly harder variant, reported as
a secondary statistic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .linalg import (
    PreconditionError,
    imag_part,
    inverse,
    op_norm,
    real_part,
)
from .maps import PositiveUnitalMap, apply_map
from .means import (
    arithmetic_mean,
    geometric_mean,
    geometric_mean_integral,
    harmonic_mean,
    inverse_mean_identity,
    negation_identity,
    principal_power_eigen,
    principal_power_quad,
    reflection_identity,
    _cached_rule,
)
from .norms import numerical_radius, ui_norm

__all__ = [
    "Check",
    "Instance",
    "TrialEval",
    "EvalContext",
    "catalog",
    "informational_catalog",
    "check_by_id",
    "SUITE_NAMES",
    "suite_ids",
]

R01 = (0.0, 1.0)
R12 = (1.0, 2.0)
RNEG = (-1.0, 0.0)


@dataclass(frozen=True)
class EvalContext:
    """Evaluation knobs shared by all checks; nodes sizes the quadrature."""

    nodes: int = 80


@dataclass
class Instance:
    """One sampled test case, fully determined by its seed and trial index."""

    dim: int
    seed: int
    trial: int
    A: np.ndarray
    B: Optional[np.ndarray] = None
    r: Optional[float] = None
    alpha: float = 0.0
    alpha_realized: float = 0.0
    phi: Optional[PositiveUnitalMap] = None
    norm_kind: Optional[str] = None
    norm_k: Optional[int] = None
    aux: tuple[float, ...] = ()


@dataclass(frozen=True)
class TrialEval:
    margin: float
    scale: float
    margin_strict: float


@dataclass(frozen=True)
class Check:
    id: str
    name: str
    anchor: str
    kind: str  # loewner | scalar | membership | identity
    args: tuple[str, ...]
    r_intervals: tuple[tuple[float, float], ...] = ()
    uses_map: bool = False
    uses_norm: bool = False
    informational: bool = False
    n_aux_uniform: int = 0
    evaluate: Callable[[Instance, EvalContext, bool], TrialEval] = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.kind not in ("loewner", "scalar", "membership", "identity"):
            raise PreconditionError(f"unknown check kind {self.kind!r}")
        if not all(c in ("pd", "accretive", "sectorial") for c in self.args):
            raise PreconditionError(f"unknown argument class in {self.args}")
        for lo, hi in self.r_intervals:
            if not (-1.0 <= lo < hi <= 2.0):
                raise PreconditionError(f"r interval {(lo, hi)} out of the admissible range")


# ---------------------------------------------------------------------------
# margin helpers


def _leq(lhs: np.ndarray, rhs: np.ndarray, flip: bool) -> tuple[float, float]:
    diff = rhs - lhs
    evals = np.linalg.eigvalsh(0.5 * (diff + diff.conj().T))
    margin = float(-evals[-1]) if flip else float(evals[0])
    return margin, max(1.0, op_norm(lhs), op_norm(rhs))


def _sleq(lhs: float, rhs: float, flip: bool) -> tuple[float, float]:
    margin = (lhs - rhs) if flip else (rhs - lhs)
    return float(margin), max(1.0, abs(lhs), abs(rhs))


def _merge(*pairs: tuple[float, float]) -> tuple[float, float]:
    return min(p[0] for p in pairs), max(p[1] for p in pairs)


def _rel(X: np.ndarray, Y: np.ndarray) -> float:
    denom = max(float(np.linalg.norm(X)), float(np.linalg.norm(Y)), 1e-300)
    return float(np.linalg.norm(X - Y)) / denom


def _mean(A: np.ndarray, B: np.ndarray, r: float, ctx: EvalContext) -> np.ndarray:
    return geometric_mean_integral(A, B, r, _cached_rule(r, ctx.nodes))


def _power(A: np.ndarray, r: float, ctx: EvalContext) -> np.ndarray:
    return principal_power_quad(A, r, _cached_rule(r, ctx.nodes))


def _real_mean(A: np.ndarray, B: np.ndarray, r: float, ctx: EvalContext) -> np.ndarray:
    return real_part(_mean(real_part(A), real_part(B), r, ctx))


def _sec(alpha: float) -> float:
    return 1.0 / math.cos(alpha)


def _branch_cos_exponent(r: float) -> float:
    """Power of cos(alpha) lost by the congruence route: 2 * dist(r, [0,1]).

    The sandwich (Re A)^{-1} <= sec^2(alpha) Re(A^{-1}) enters the lower
    bounds once, scaled by the mean's homogeneity weight |r - 1| on the
    branch (1,2) and |r| on (-1,0); inside [0,1] no factor is needed.
    """
    return 2.0 * max(r - 1.0, -r, 0.0)


def _with_strict(inst: Instance, at: Callable[[float], tuple[float, float]]) -> TrialEval:
    margin, scale = at(inst.alpha)
    strict = at(inst.alpha_realized)[0] if inst.alpha_realized != inst.alpha else margin
    return TrialEval(margin, scale, strict)


def _no_flip(check_name: str, flip: bool) -> None:
    if flip:
        raise PreconditionError(f"direction flip is undefined for {check_name}")


# ---------------------------------------------------------------------------
# inequality evaluators


def _ev_inv_real_sandwich(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    re_of_inv = real_part(inverse(inst.A))
    inv_of_re = inverse(real_part(inst.A))
    lower = _leq(re_of_inv, inv_of_re, flip)

    def at(alpha: float) -> tuple[float, float]:
        return _merge(lower, _leq(inv_of_re, _sec(alpha) ** 2 * re_of_inv, flip))

    return _with_strict(inst, at)


def _ev_harmonic_real_lower(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    lhs = real_part(harmonic_mean(real_part(inst.A), real_part(inst.B), inst.r))
    rhs = real_part(harmonic_mean(inst.A, inst.B, inst.r))
    margin, scale = _leq(lhs, rhs, flip)
    return TrialEval(margin, scale, margin)


def _ev_norm_sandwich(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    n_full = ui_norm(inst.A, inst.norm_kind, inst.norm_k)
    n_real = ui_norm(real_part(inst.A), inst.norm_kind, inst.norm_k)
    upper = _sleq(n_real, n_full, flip)

    def at(alpha: float) -> tuple[float, float]:
        return _merge(_sleq(math.cos(alpha) * n_full, n_real, flip), upper)

    return _with_strict(inst, at)


def _ev_radius_geo_upper(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    w_a = numerical_radius(inst.A)
    w_b = numerical_radius(inst.B)
    w_mean = numerical_radius(_mean(inst.A, inst.B, inst.r, ctx))
    r = inst.r

    def at(alpha: float) -> tuple[float, float]:
        return _sleq(w_mean, _sec(alpha) ** 3 * w_a ** (1.0 - r) * w_b**r, flip)

    return _with_strict(inst, at)


def _ev_radius_inverse_lower(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    w_a = numerical_radius(inst.A)
    w_inv = numerical_radius(inverse(inst.A))

    def at(alpha: float) -> tuple[float, float]:
        return _sleq(math.cos(alpha) ** 3 / w_a, w_inv, flip)

    return _with_strict(inst, at)


def _ev_map_schwarz(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    phi = inst.phi
    phi_a, phi_b = apply_map(phi, inst.A), apply_map(phi, inst.B)
    lhs = phi_b @ inverse(phi_a) @ phi_b
    rhs = apply_map(phi, inst.B @ inverse(inst.A) @ inst.B)
    margin, scale = _leq(lhs, rhs, flip)
    return TrialEval(margin, scale, margin)


def _power_real_compare(direction: str):
    def ev(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
        re_of_power = real_part(_power(inst.A, inst.r, ctx))
        power_of_re = real_part(_power(real_part(inst.A), inst.r, ctx))
        pair = (re_of_power, power_of_re) if direction == "leq" else (power_of_re, re_of_power)
        margin, scale = _leq(*pair, flip)
        return TrialEval(margin, scale, margin)

    return ev


def _geo_real_compare(direction: str):
    def ev(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
        mixed = real_part(_mean(inst.A, inst.B, inst.r, ctx))
        hermitian = _real_mean(inst.A, inst.B, inst.r, ctx)
        pair = (mixed, hermitian) if direction == "leq" else (hermitian, mixed)
        margin, scale = _leq(*pair, flip)
        return TrialEval(margin, scale, margin)

    return ev


def _map_geo_compare(direction: str):
    def ev(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
        phi = inst.phi
        mapped_mean = apply_map(phi, _mean(inst.A, inst.B, inst.r, ctx))
        mean_of_maps = _mean(apply_map(phi, inst.A), apply_map(phi, inst.B), inst.r, ctx)
        pair = (mapped_mean, mean_of_maps) if direction == "leq" else (mean_of_maps, mapped_mean)
        margin, scale = _leq(*pair, flip)
        return TrialEval(margin, scale, margin)

    return ev


def _ev_sector_closure(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    M = _mean(inst.A, inst.B, inst.r, ctx)
    R, S = real_part(M), imag_part(M)
    scale = max(1.0, op_norm(M))

    def membership(alpha: float) -> float:
        t = math.tan(alpha)
        return min(
            float(np.linalg.eigvalsh(R)[0]),
            float(np.linalg.eigvalsh(t * R - S)[0]),
            float(np.linalg.eigvalsh(t * R + S)[0]),
        )

    margin = membership(inst.alpha)
    strict = (
        membership(inst.alpha_realized) if inst.alpha_realized != inst.alpha else margin
    )
    if flip:
        margin, strict = -margin, -strict
    return TrialEval(margin, scale, strict)


def _ev_geo_real_cos_lower(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    mixed = real_part(_mean(inst.A, inst.B, inst.r, ctx))
    hermitian = _real_mean(inst.A, inst.B, inst.r, ctx)
    expo = _branch_cos_exponent(inst.r)

    def at(alpha: float) -> tuple[float, float]:
        return _leq(math.cos(alpha) ** expo * hermitian, mixed, flip)

    return _with_strict(inst, at)


def _ev_geo_real_sec2_upper(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    mixed = real_part(_mean(inst.A, inst.B, inst.r, ctx))
    hermitian = _real_mean(inst.A, inst.B, inst.r, ctx)

    def at(alpha: float) -> tuple[float, float]:
        return _leq(mixed, _sec(alpha) ** 2 * hermitian, flip)

    return _with_strict(inst, at)


def _ev_nabla_cos_lower(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    mixed = real_part(_mean(inst.A, inst.B, inst.r, ctx))
    nabla = real_part(arithmetic_mean(inst.A, inst.B, inst.r))
    expo = _branch_cos_exponent(inst.r)

    def at(alpha: float) -> tuple[float, float]:
        return _leq(math.cos(alpha) ** expo * nabla, mixed, flip)

    return _with_strict(inst, at)


def _ev_map_real_cos_lower(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    phi = inst.phi
    mapped = real_part(apply_map(phi, _mean(inst.A, inst.B, inst.r, ctx)))
    mean_of_maps = real_part(
        _mean(apply_map(phi, inst.A), apply_map(phi, inst.B), inst.r, ctx)
    )
    expo = _branch_cos_exponent(inst.r)

    def at(alpha: float) -> tuple[float, float]:
        return _leq(math.cos(alpha) ** expo * mean_of_maps, mapped, flip)

    return _with_strict(inst, at)


def _ev_map_norm_cos_lower(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    phi = inst.phi
    n_mapped = ui_norm(
        apply_map(phi, _mean(inst.A, inst.B, inst.r, ctx)), inst.norm_kind, inst.norm_k
    )
    n_mean = ui_norm(
        _mean(apply_map(phi, inst.A), apply_map(phi, inst.B), inst.r, ctx),
        inst.norm_kind,
        inst.norm_k,
    )

    def at(alpha: float) -> tuple[float, float]:
        return _sleq(math.cos(alpha) ** 2 * n_mean, n_mapped, flip)

    return _with_strict(inst, at)


def _radius_cos6_lower(base: str, literal_negated_order: bool = False):
    def ev(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
        A, B, r = inst.A, inst.B, inst.r
        w_a, w_b = numerical_radius(A), numerical_radius(B)
        if base == "B":
            Minv = inverse(B)
            coeff = lambda: w_a ** (1.0 - r) * w_b ** (r - 2.0)
        else:
            Minv = inverse(A)
            coeff = lambda: w_a ** (-(r + 1.0)) * w_b**r
        w_inv_sq = numerical_radius(Minv @ Minv)
        order = -r if literal_negated_order else r
        w_mean = numerical_radius(_mean(A, B, order, ctx))

        def at(alpha: float) -> tuple[float, float]:
            return _sleq(math.cos(alpha) ** 6 * coeff() / w_inv_sq, w_mean, flip)

        return _with_strict(inst, at)

    return ev


def _ev_amgm_chain(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    A, B, r = inst.A, inst.B, inst.r
    geo = _mean(A, B, r, ctx)
    low = _leq(harmonic_mean(A, B, r), geo, flip)
    high = _leq(geo, arithmetic_mean(A, B, r), flip)
    margin, scale = _merge(low, high)
    return TrialEval(margin, scale, margin)


def _ev_nabla_reverse(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
    margin, scale = _leq(
        arithmetic_mean(inst.A, inst.B, inst.r),
        _mean(inst.A, inst.B, inst.r, ctx),
        flip,
    )
    return TrialEval(margin, scale, margin)


# ---------------------------------------------------------------------------
# identity evaluators


def _identity_eval(fn: Callable[[Instance, EvalContext], float], name: str):
    def ev(inst: Instance, ctx: EvalContext, flip: bool) -> TrialEval:
        _no_flip(name, flip)
        rel = fn(inst, ctx)
        return TrialEval(-rel, 1.0, -rel)

    return ev


def _rel_reflection(inst: Instance, ctx: EvalContext) -> float:
    return _rel(
        reflection_identity(inst.A, inst.B, inst.r),
        geometric_mean(inst.A, inst.B, inst.r),
    )


def _rel_negation(inst: Instance, ctx: EvalContext) -> float:
    return _rel(
        negation_identity(inst.A, inst.B, inst.r),
        geometric_mean(inst.A, inst.B, inst.r),
    )


def _rel_inverse_mean(inst: Instance, ctx: EvalContext) -> float:
    lhs, rhs = inverse_mean_identity(inst.A, inst.B, inst.r)
    return _rel(lhs, rhs)


def _rel_integral_vs_congruence(inst: Instance, ctx: EvalContext) -> float:
    return _rel(
        _mean(inst.A, inst.B, inst.r, ctx),
        geometric_mean(inst.A, inst.B, inst.r),
    )


def _rel_quad_vs_eigen(inst: Instance, ctx: EvalContext) -> float:
    return _rel(
        _power(inst.A, inst.r, ctx),
        principal_power_eigen(inst.A, inst.r),
    )


def _rel_resolvent_split(inst: Instance, ctx: EvalContext) -> float:
    A = inst.A
    eye = np.eye(len(A), dtype=np.complex128)
    worst = 0.0
    for s in inst.aux:
        resolvent = inverse(s * eye + (1.0 - s) * A)
        harm = harmonic_mean(eye, A, s)
        lhs_power = A @ A @ resolvent
        rhs_power = A / (1.0 - s) - (s / (1.0 - s)) * harm
        lhs_inv = resolvent
        rhs_inv = eye / s - ((1.0 - s) / s) * harm
        worst = max(worst, _rel(lhs_power, rhs_power), _rel(lhs_inv, rhs_inv))
    return worst


# ---------------------------------------------------------------------------
# the catalog


def _build_catalog() -> tuple[list[Check], list[Check]]:
    main = [
        Check(
            id="C01", name="inv-real-sandwich", kind="loewner", args=("sectorial",),
            anchor="Re(inv(A)) <= inv(Re(A)) <= sec(alpha)^2*Re(inv(A)) for A in S_alpha",
            evaluate=_ev_inv_real_sandwich,
        ),
        Check(
            id="C02", name="harmonic-real-lower", kind="loewner",
            args=("accretive", "accretive"), r_intervals=(R01,),
            anchor="Re(A !_r B) >= Re(A) !_r Re(B) for accretive A, B and r in (0,1)",
            evaluate=_ev_harmonic_real_lower,
        ),
        Check(
            id="C03", name="norm-sandwich", kind="scalar", args=("sectorial",),
            uses_norm=True,
            anchor="cos(alpha)*|||A||| <= |||Re(A)||| <= |||A||| for A in S_alpha",
            evaluate=_ev_norm_sandwich,
        ),
        Check(
            id="C04", name="radius-geo-upper", kind="scalar",
            args=("sectorial", "sectorial"), r_intervals=(R01,),
            anchor="w(A #_r B) <= sec(alpha)^3 * w(A)^(1-r) * w(B)^r for A, B in S_alpha, r in [0,1]",
            evaluate=_ev_radius_geo_upper,
        ),
        Check(
            id="C05", name="radius-inverse-lower", kind="scalar", args=("sectorial",),
            anchor="w(inv(A)) >= cos(alpha)^3 / w(A) for A in S_alpha",
            evaluate=_ev_radius_inverse_lower,
        ),
        Check(
            id="C06", name="map-schwarz", kind="loewner", args=("pd", "pd"),
            uses_map=True,
            anchor="Phi(B) inv(Phi(A)) Phi(B) <= Phi(B inv(A) B) for A, B > 0",
            evaluate=_ev_map_schwarz,
        ),
        Check(
            id="C07", name="power-real-upper-12", kind="loewner", args=("accretive",),
            r_intervals=(R12,),
            anchor="Re(A^r) <= (Re A)^r for accretive A, r in (1,2)",
            evaluate=_power_real_compare("leq"),
        ),
        Check(
            id="C08", name="power-real-lower-01", kind="loewner", args=("accretive",),
            r_intervals=(R01,),
            anchor="Re(A^r) >= (Re A)^r for accretive A, r in [0,1]",
            evaluate=_power_real_compare("geq"),
        ),
        Check(
            id="C09", name="geo-real-upper-12", kind="loewner",
            args=("accretive", "accretive"), r_intervals=(R12,),
            anchor="Re(A #_r B) <= Re(A) #_r Re(B) for accretive A, B, r in (1,2)",
            evaluate=_geo_real_compare("leq"),
        ),
        Check(
            id="C10", name="map-geo-reverse-12-pd", kind="loewner", args=("pd", "pd"),
            r_intervals=(R12,), uses_map=True,
            anchor="Phi(A #_r B) >= Phi(A) #_r Phi(B) for A, B > 0, r in (1,2)",
            evaluate=_map_geo_compare("geq"),
        ),
        Check(
            id="C11", name="sector-closure-12", kind="membership",
            args=("sectorial", "pd"), r_intervals=(R12,),
            anchor="A #_r B in S_alpha for A in S_alpha, B > 0, r in (1,2)",
            evaluate=_ev_sector_closure,
        ),
        Check(
            id="C12", name="geo-real-lower-12", kind="loewner",
            args=("sectorial", "pd"), r_intervals=(R12,),
            anchor="cos(alpha)^(2r-2)*(Re(A) #_r Re(B)) <= Re(A #_r B) for A in S_alpha, B > 0, r in (1,2)",
            evaluate=_ev_geo_real_cos_lower,
        ),
        Check(
            id="C13", name="nabla-lower-12", kind="loewner",
            args=("sectorial", "pd"), r_intervals=(R12,),
            anchor="cos(alpha)^(2r-2)*Re((1-r)A + rB) <= Re(A #_r B) for A in S_alpha, B > 0, r in (1,2)",
            evaluate=_ev_nabla_cos_lower,
        ),
        Check(
            id="C14", name="map-real-lower-12", kind="loewner",
            args=("sectorial", "pd"), r_intervals=(R12,), uses_map=True,
            anchor="cos(alpha)^(2r-2)*Re(Phi(A) #_r Phi(B)) <= Re(Phi(A #_r B)) for A in S_alpha, B > 0, r in (1,2)",
            evaluate=_ev_map_real_cos_lower,
        ),
        Check(
            id="C15", name="map-norm-lower-12", kind="scalar",
            args=("sectorial", "pd"), r_intervals=(R12,), uses_map=True, uses_norm=True,
            anchor="cos(alpha)^2*|||Phi(A) #_r Phi(B)||| <= |||Phi(A #_r B)||| for A in S_alpha, B > 0, r in (1,2)",
            evaluate=_ev_map_norm_cos_lower,
        ),
        Check(
            id="C16", name="radius-lower-12", kind="scalar",
            args=("sectorial", "pd"), r_intervals=(R12,),
            anchor="w(A #_r B) >= cos(alpha)^6 * w(A)^(1-r) * w(B)^(r-2) / w(inv(B)^2) for A in S_alpha, B > 0, r in (1,2)",
            evaluate=_radius_cos6_lower("B"),
        ),
        Check(
            id="C17", name="geo-real-upper-neg", kind="loewner",
            args=("accretive", "accretive"), r_intervals=(RNEG,),
            anchor="Re(A #_r B) <= Re(A) #_r Re(B) for accretive A, B, r in (-1,0)",
            evaluate=_geo_real_compare("leq"),
        ),
        Check(
            id="C18", name="sector-closure-neg", kind="membership",
            args=("pd", "sectorial"), r_intervals=(RNEG,),
            anchor="A #_r B in S_alpha for A > 0, B in S_alpha, r in (-1,0)",
            evaluate=_ev_sector_closure,
        ),
        Check(
            id="C19", name="geo-real-lower-neg", kind="loewner",
            args=("pd", "sectorial"), r_intervals=(RNEG,),
            anchor="cos(alpha)^(-2r)*(Re(A) #_r Re(B)) <= Re(A #_r B) for A > 0, B in S_alpha, r in (-1,0)",
            evaluate=_ev_geo_real_cos_lower,
        ),
        Check(
            id="C20", name="nabla-lower-neg", kind="loewner",
            args=("pd", "sectorial"), r_intervals=(RNEG,),
            anchor="cos(alpha)^(-2r)*Re((1-r)A + rB) <= Re(A #_r B) for A > 0, B in S_alpha, r in (-1,0)",
            evaluate=_ev_nabla_cos_lower,
        ),
        Check(
            id="C21", name="map-real-lower-neg", kind="loewner",
            args=("pd", "sectorial"), r_intervals=(RNEG,), uses_map=True,
            anchor="cos(alpha)^(-2r)*Re(Phi(A) #_r Phi(B)) <= Re(Phi(A #_r B)) for A > 0, B in S_alpha, r in (-1,0)",
            evaluate=_ev_map_real_cos_lower,
        ),
        Check(
            id="C22", name="map-norm-lower-neg", kind="scalar",
            args=("pd", "sectorial"), r_intervals=(RNEG,), uses_map=True, uses_norm=True,
            anchor="cos(alpha)^2*|||Phi(A) #_r Phi(B)||| <= |||Phi(A #_r B)||| for A > 0, B in S_alpha, r in (-1,0)",
            evaluate=_ev_map_norm_cos_lower,
        ),
        Check(
            id="C23", name="radius-lower-neg", kind="scalar",
            args=("pd", "sectorial"), r_intervals=(RNEG,),
            anchor="w(A #_r B) >= cos(alpha)^6 * w(A)^(-(r+1)) * w(B)^r / w(inv(A)^2) for A > 0, B in S_alpha, r in (-1,0)",
            evaluate=_radius_cos6_lower("A"),
        ),
        Check(
            id="C24", name="amgm-chain-01", kind="loewner", args=("pd", "pd"),
            r_intervals=(R01,),
            anchor="A !_r B <= A #_r B <= (1-r)A + rB for A, B > 0, r in [0,1]",
            evaluate=_ev_amgm_chain,
        ),
        Check(
            id="C25", name="nabla-reverse-pd", kind="loewner", args=("pd", "pd"),
            r_intervals=(R12, RNEG),
            anchor="(1-r)A + rB <= A #_r B for A, B > 0, r in (1,2) or r in (-1,0)",
            evaluate=_ev_nabla_reverse,
        ),
        Check(
            id="C26", name="map-geo-forward-01-pd", kind="loewner", args=("pd", "pd"),
            r_intervals=(R01,), uses_map=True,
            anchor="Phi(A #_r B) <= Phi(A) #_r Phi(B) for A, B > 0, r in [0,1]",
            evaluate=_map_geo_compare("leq"),
        ),
        Check(
            id="C27", name="map-geo-reverse-neg-pd", kind="loewner", args=("pd", "pd"),
            r_intervals=(RNEG,), uses_map=True,
            anchor="Phi(A #_r B) >= Phi(A) #_r Phi(B) for A, B > 0, r in (-1,0)",
            evaluate=_map_geo_compare("geq"),
        ),
        Check(
            id="C28", name="geo-real-lower-01", kind="loewner",
            args=("accretive", "accretive"), r_intervals=(R01,),
            anchor="Re(A #_r B) >= Re(A) #_r Re(B) for accretive A, B, r in (0,1)",
            evaluate=_geo_real_compare("geq"),
        ),
        Check(
            id="C29", name="geo-real-sec2-upper-01", kind="loewner",
            args=("sectorial", "sectorial"), r_intervals=(R01,),
            anchor="Re(A #_r B) <= sec(alpha)^2*(Re(A) #_r Re(B)) for A, B in S_alpha, r in [0,1]",
            evaluate=_ev_geo_real_sec2_upper,
        ),
        Check(
            id="I01", name="reflection-identity", kind="identity",
            args=("accretive", "accretive"), r_intervals=(R12,),
            anchor="A #_r B = B inv(A #_(2-r) B) B for accretive A, B, r in (1,2)",
            evaluate=_identity_eval(_rel_reflection, "reflection identity"),
        ),
        Check(
            id="I02", name="negation-identity", kind="identity",
            args=("accretive", "accretive"), r_intervals=(RNEG,),
            anchor="A #_r B = A (inv(A) #_(-r) inv(B)) A for accretive A, B, r in (-1,0)",
            evaluate=_identity_eval(_rel_negation, "negation identity"),
        ),
        Check(
            id="I03", name="inverse-mean-identity", kind="identity",
            args=("accretive", "accretive"), r_intervals=(R01, R12, RNEG),
            anchor="inv(A #_r B) = inv(A) #_r inv(B) for accretive A, B on every branch of r",
            evaluate=_identity_eval(_rel_inverse_mean, "inverse-mean identity"),
        ),
        Check(
            id="I04", name="integral-vs-congruence", kind="identity",
            args=("accretive", "accretive"), r_intervals=(R01, R12, RNEG),
            anchor="integral form of A #_r B matches the congruence form on every branch of r",
            evaluate=_identity_eval(_rel_integral_vs_congruence, "integral-vs-congruence"),
        ),
        Check(
            id="I05", name="quad-vs-eigen", kind="identity",
            args=("accretive",), r_intervals=(R01, R12, RNEG),
            anchor="quadrature power A^r matches eigendecomposition power on every branch of r",
            evaluate=_identity_eval(_rel_quad_vs_eigen, "quad-vs-eigen"),
        ),
        Check(
            id="I06", name="resolvent-split-identities", kind="identity",
            args=("accretive",), n_aux_uniform=10,
            anchor="A^2 inv(sI+(1-s)A) = A/(1-s) - s/(1-s)*(I !_s A) and inv(sI+(1-s)A) = I/s - (1-s)/s*(I !_s A)",
            evaluate=_identity_eval(_rel_resolvent_split, "resolvent split identities"),
        ),
    ]
    informational = [
        Check(
            id="X23", name="radius-lower-neg-literal", kind="scalar",
            args=("pd", "sectorial"), r_intervals=(RNEG,), informational=True,
            anchor="w(A #_(-r) B) >= cos(alpha)^6 * w(A)^(-(r+1)) * w(B)^r / w(inv(A)^2) for A > 0, B in S_alpha, r in (-1,0); statement-literal variant, no pass/fail weight",
            evaluate=_radius_cos6_lower("A", literal_negated_order=True),
        ),
    ]
    return main, informational


_MAIN, _INFORMATIONAL = _build_catalog()
_BY_ID = {c.id: c for c in _MAIN + _INFORMATIONAL}

SUITE_NAMES = ("all", "r01", "r12", "rneg", "identities")

_SUITE_IDS = {
    "r01": ("C01", "C02", "C03", "C04", "C05", "C06", "C08", "C24", "C26", "C28", "C29"),
    "r12": ("C07", "C09", "C10", "C11", "C12", "C13", "C14", "C15", "C16", "C25"),
    "rneg": ("C17", "C18", "C19", "C20", "C21", "C22", "C23", "C25", "C27"),
    "identities": ("I01", "I02", "I03", "I04", "I05", "I06"),
}
_SUITE_IDS["all"] = tuple(c.id for c in _MAIN)


def catalog() -> list[Check]:
    """The full pass/fail catalog: 29 inequalities plus 6 identities."""
    return list(_MAIN)


def informational_catalog() -> list[Check]:
    """Extra margin-logging checks that carry no pass/fail weight."""
    return list(_INFORMATIONAL)


def check_by_id(check_id: str) -> Check:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise PreconditionError(
            f"unknown check id {check_id!r}; valid ids: {', '.join(sorted(_BY_ID))}"
        ) from None


def suite_ids(suite: str) -> tuple[str, ...]:
    if suite not in _SUITE_IDS:
        raise PreconditionError(
            f"unknown suite {suite!r}; valid suites: {', '.join(SUITE_NAMES)}"
        )
    return _SUITE_IDS[suite]
