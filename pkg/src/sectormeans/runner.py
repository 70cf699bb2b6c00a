"""Randomized verification driver.

Every trial is reproducible from (master seed, check id, trial index,
attempt index) through a SHA-256 seed derivation, so a reported worst seed
can be replayed in isolation.  Instances that fail their own hypothesis
validation, or whose evaluation hits a numerically indefensible state
(eigenvector basis too ill-conditioned, spectrum on the principal-branch
cut, inversion below the rcond floor), are rejected and redrawn up to
MAX_RETRIES times; chronic failure is reported per check, never hidden.

Any margin flagged as a violation at the working quadrature size is
re-evaluated at twice as many nodes before it is counted, so a discretized
integral cannot manufacture a counterexample on its own.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .checks import (
    Check,
    EvalContext,
    Instance,
    TrialEval,
    catalog,
    check_by_id,
    informational_catalog,
    suite_ids,
)
from .linalg import PreconditionError, SingularMatrixError
from .maps import MAP_KINDS, random_map
from .means import EigenbasisConditionError, PrincipalBranchError
from .norms import NORM_KINDS
from .sectors import (
    MAX_DIM,
    _accretive,
    _pd,
    _sectorial,
    derive_seed,
    is_accretive,
    in_sector,
    sector_angle,
)

__all__ = [
    "RunConfig",
    "CheckResult",
    "SuiteReport",
    "InstanceRejected",
    "sample_instance",
    "run_check",
    "run_suite",
    "replay_trial",
    "MAX_RETRIES",
]

MAX_RETRIES = 10
R_EDGE_GAP = 0.05  # sampled r stays this far inside each open interval
THREADS_ENV = "SECTORMEANS_THREADS"

_RETRYABLE = (EigenbasisConditionError, PrincipalBranchError, SingularMatrixError)


class InstanceRejected(Exception):
    """Sampled matrices failed their own hypothesis validation."""


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    trials: int = 500
    dim_min: int = 2
    dim_max: int = 8
    nodes: int = 80
    tol: float = 1e-8
    r_override: Optional[float] = None
    alphas: tuple[float, ...] = (0.1, 0.4, 0.8, 1.2)
    force_pd: bool = False
    out_format: str = "json"

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise PreconditionError(f"trials must be >= 1, got {self.trials}")
        if not 1 <= self.dim_min <= self.dim_max <= MAX_DIM:
            raise PreconditionError(
                f"need 1 <= dim_min <= dim_max <= {MAX_DIM}, got {self.dim_min}..{self.dim_max}"
            )
        if self.nodes < 4:
            raise PreconditionError(f"nodes must be >= 4, got {self.nodes}")
        if not self.tol > 0.0:
            raise PreconditionError(f"tol must be positive, got {self.tol}")
        if not self.alphas or not all(0.0 <= a < math.pi / 2 for a in self.alphas):
            raise PreconditionError(f"alphas must lie in [0, pi/2), got {self.alphas}")
        if self.out_format not in ("json", "csv"):
            raise PreconditionError(f"format must be json or csv, got {self.out_format!r}")


@dataclass
class CheckResult:
    id: str
    name: str
    anchor: str
    trials: int
    violations: int
    worst_margin: Optional[float]
    worst_seed: Optional[int]
    worst_trial: Optional[int]
    worst_margin_strict: Optional[float]
    sampler_failures: int
    informational: bool
    runtime_s: float

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "paper_anchor": self.anchor,
            "trials": self.trials,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "worst_seed": self.worst_seed,
            "worst_trial": self.worst_trial,
            "worst_margin_strict": self.worst_margin_strict,
            "sampler_failures": self.sampler_failures,
            "informational": self.informational,
            "runtime_s": self.runtime_s,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    config: RunConfig
    checks: list[CheckResult] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def violations(self) -> int:
        return sum(c.violations for c in self.checks if not c.informational)

    @property
    def sampler_failures(self) -> int:
        return sum(c.sampler_failures for c in self.checks if not c.informational)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "config": asdict(self.config),
            "checks": [c.to_dict() for c in self.checks],
            "summary": {
                "checks": len(self.checks),
                "violations": self.violations,
                "sampler_failures": self.sampler_failures,
                "passed": self.passed,
                "elapsed_s": self.elapsed_s,
            },
        }


def _sample_r(check: Check, config: RunConfig, rng: np.random.Generator, trial: int) -> Optional[float]:
    if not check.r_intervals:
        return None
    if config.r_override is not None:
        return float(config.r_override)
    lo, hi = check.r_intervals[trial % len(check.r_intervals)]
    return float(rng.uniform(lo + R_EDGE_GAP, hi - R_EDGE_GAP))


def sample_instance(check: Check, config: RunConfig, seed: int, trial: int) -> Instance:
    """Draw one instance for a check; raises InstanceRejected on a bad draw.

    The rng consumption order is fixed (dim, alpha, r, matrices, map, norm,
    aux) so that a seed fully determines the instance.
    """
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(config.dim_min, config.dim_max + 1))
    classes = tuple("pd" if config.force_pd else c for c in check.args)
    needs_alpha = any(c == "sectorial" for c in classes)
    alpha = float(rng.choice(np.asarray(config.alphas))) if needs_alpha else 0.0
    r = _sample_r(check, config, rng, trial)

    mats: list[np.ndarray] = []
    realized = 0.0
    for cls in classes:
        if cls == "pd":
            M = _pd(dim, rng)
            evals = np.linalg.eigvalsh(0.5 * (M + M.conj().T))
            if evals[0] <= 0.0:
                raise InstanceRejected(f"positive-definite draw has lambda_min {evals[0]:.3e}")
        elif cls == "accretive":
            M = _accretive(dim, rng)
            ok, margin = is_accretive(M)
            if not ok:
                raise InstanceRejected(f"accretive draw has real-part margin {margin:.3e}")
        else:
            try:
                cert = _sectorial(dim, alpha, rng)
            except RuntimeError as exc:
                raise InstanceRejected(str(exc)) from None
            M = cert.matrix
            if not in_sector(M, alpha):
                raise InstanceRejected(f"sectorial draw escapes the angle-{alpha} sector")
            realized = max(realized, sector_angle(M))
        mats.append(M)

    phi = None
    norm_kind = None
    norm_k = None
    if check.uses_map:
        phi = random_map(MAP_KINDS[trial % len(MAP_KINDS)], dim, rng)
    if check.uses_norm:
        norm_kind = NORM_KINDS[(trial // len(MAP_KINDS)) % len(NORM_KINDS)]
        norm_dim = phi.out_dim if phi is not None else dim
        norm_k = int(rng.integers(1, norm_dim + 1)) if norm_kind == "kyfan" else None
    aux = tuple(float(x) for x in rng.uniform(0.01, 0.99, size=check.n_aux_uniform))

    return Instance(
        dim=dim,
        seed=seed,
        trial=trial,
        A=mats[0],
        B=mats[1] if len(mats) > 1 else None,
        r=r,
        alpha=alpha,
        alpha_realized=realized if needs_alpha else alpha,
        phi=phi,
        norm_kind=norm_kind,
        norm_k=norm_k,
        aux=aux,
    )


def _violated(ev: TrialEval, tol: float) -> bool:
    if math.isnan(ev.margin):
        return True
    return ev.margin < -tol * ev.scale


def _run_one_trial(
    check: Check,
    config: RunConfig,
    master_seed: int,
    trial: int,
    flip: bool,
) -> dict:
    ctx = EvalContext(nodes=config.nodes)
    refine = EvalContext(nodes=2 * config.nodes)
    last_reason = "no attempt made"
    for attempt in range(MAX_RETRIES + 1):
        seed = derive_seed(master_seed, check.id, trial, attempt)
        try:
            inst = sample_instance(check, config, seed, trial)
            ev = check.evaluate(inst, ctx, flip)
        except (InstanceRejected, *_RETRYABLE) as exc:
            last_reason = f"{type(exc).__name__}: {exc}"
            continue
        violated = _violated(ev, config.tol)
        if violated:
            # confirm at double quadrature resolution before counting it
            ev = check.evaluate(inst, refine, flip)
            violated = _violated(ev, config.tol)
        return {
            "trial": trial,
            "seed": seed,
            "attempt": attempt,
            "margin": ev.margin,
            "scale": ev.scale,
            "margin_strict": ev.margin_strict,
            "violated": violated,
            "failed": False,
        }
    return {"trial": trial, "failed": True, "reason": last_reason}


def _thread_count(trials: int) -> int:
    raw = os.environ.get(THREADS_ENV, "0").strip()
    try:
        requested = int(raw)
    except ValueError:
        raise PreconditionError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if requested < 0:
        raise PreconditionError(f"{THREADS_ENV} must be >= 0, got {requested}")
    if requested == 0:
        requested = min(os.cpu_count() or 1, 8)
    return max(1, min(requested, trials))


def run_check(
    check: Check,
    config: RunConfig,
    master_seed: Optional[int] = None,
    mutate: Optional[str] = None,
) -> CheckResult:
    """Run all trials of one check and aggregate the worst margin.

    mutate="flip" negates the claimed inequality direction; a healthy
    sampler must then produce violations, which is how the harness proves
    it can detect a false claim.
    """
    if mutate not in (None, "flip"):
        raise PreconditionError(f"unknown mutation {mutate!r}; only 'flip' is supported")
    flip = mutate == "flip"
    if flip and check.kind == "identity":
        raise PreconditionError(f"direction flip is undefined for identity check {check.id}")
    if config.r_override is not None and check.r_intervals:
        r0 = config.r_override
        if not any(lo < r0 < hi for lo, hi in check.r_intervals):
            intervals = " or ".join(f"({lo}, {hi})" for lo, hi in check.r_intervals)
            raise PreconditionError(
                f"r={r0} lies outside the admissible interval(s) {intervals} of {check.id}"
            )
    seed = config.seed if master_seed is None else master_seed

    start = time.perf_counter()
    n_threads = _thread_count(config.trials)
    trials = range(config.trials)
    if n_threads > 1 and config.trials > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            records = list(pool.map(lambda t: _run_one_trial(check, config, seed, t, flip), trials))
    else:
        records = [_run_one_trial(check, config, seed, t, flip) for t in trials]
    runtime = time.perf_counter() - start

    completed = [rec for rec in records if not rec["failed"]]
    failures = len(records) - len(completed)
    violations = sum(1 for rec in completed if rec["violated"])

    def margin_key(rec: dict) -> float:
        return -math.inf if math.isnan(rec["margin"]) else rec["margin"]

    # completed is in trial order, and min() keeps the first minimizer, so
    # ties resolve to the earliest trial deterministically.
    worst = min(completed, key=margin_key, default=None)
    strict_values = [margin_key({"margin": rec["margin_strict"]}) for rec in completed]
    return CheckResult(
        id=check.id,
        name=check.name,
        anchor=check.anchor,
        trials=config.trials,
        violations=violations,
        worst_margin=None if worst is None else margin_key(worst),
        worst_seed=None if worst is None else worst["seed"],
        worst_trial=None if worst is None else worst["trial"],
        worst_margin_strict=min(strict_values) if strict_values else None,
        sampler_failures=failures,
        informational=check.informational,
        runtime_s=runtime,
    )


def _suite_checks(suite: str) -> list[Check]:
    ids = suite_ids(suite)
    by_id = {c.id: c for c in catalog()}
    selected = [by_id[i] for i in ids]
    if suite in ("rneg", "all"):
        selected.extend(informational_catalog())
    return selected


def run_suite(
    suite: str,
    config: RunConfig,
    check_id: Optional[str] = None,
    mutate: Optional[str] = None,
) -> SuiteReport:
    """Run a named suite (or a single check restricted from it)."""
    selected = _suite_checks(suite)
    if check_id is not None:
        selected = [c for c in selected if c.id == check_id]
        if not selected:
            raise PreconditionError(f"check {check_id!r} is not part of suite {suite!r}")
    report = SuiteReport(suite=suite, seed=config.seed, config=config)
    start = time.perf_counter()
    for check in selected:
        report.checks.append(run_check(check, config, mutate=mutate))
    report.elapsed_s = time.perf_counter() - start
    return report


def replay_trial(check_id: str, seed: int, config: RunConfig) -> dict:
    """Re-evaluate the single trial that produced a reported worst seed.

    The trial and attempt indices are recovered by scanning the derivation
    space of the given master configuration, so the replay sees exactly the
    r-interval and map/norm rotation the original trial saw.
    """
    check = check_by_id(check_id)
    position = None
    for trial in range(config.trials):
        for attempt in range(MAX_RETRIES + 1):
            if derive_seed(config.seed, check.id, trial, attempt) == seed:
                position = (trial, attempt)
                break
        if position is not None:
            break
    if position is None:
        raise PreconditionError(
            f"seed {seed} was not derived from master seed {config.seed} for check "
            f"{check_id} within {config.trials} trials; pass the original --seed/--trials"
        )
    trial, attempt = position
    inst = sample_instance(check, config, seed, trial)
    ev = check.evaluate(inst, EvalContext(nodes=config.nodes), False)
    violated = _violated(ev, config.tol)
    if violated:
        ev2 = check.evaluate(inst, EvalContext(nodes=2 * config.nodes), False)
        violated = _violated(ev2, config.tol)
        ev = ev2
    return {
        "check": check.id,
        "seed": seed,
        "trial": trial,
        "attempt": attempt,
        "dim": inst.dim,
        "r": inst.r,
        "alpha": inst.alpha,
        "alpha_realized": inst.alpha_realized,
        "margin": ev.margin,
        "scale": ev.scale,
        "margin_strict": ev.margin_strict,
        "violated": violated,
    }
