"""The inequality catalog and the seeded fuzz runner.

Anything statistical here runs at reduced trial counts; the full-scale runs
(500 trials per check, the flip sensitivity sweep) live in the acceptance
module.
"""

import dataclasses
import math

import numpy as np
import pytest

from sectormeans import (
    EvalContext,
    PreconditionError,
    RunConfig,
    catalog,
    check_by_id,
    informational_catalog,
    replay_trial,
    run_check,
    run_suite,
    sample_instance,
    suite_ids,
)
from sectormeans.checks import SUITE_NAMES, _branch_cos_exponent
from sectormeans.runner import _sample_r

INTERVALS = {(0.0, 1.0), (1.0, 2.0), (-1.0, 0.0)}


def small_config(**kw):
    base = dict(trials=16, dim_min=2, dim_max=5, nodes=48, tol=1e-8)
    base.update(kw)
    return RunConfig(**base)


# ----------------------------------------------------------------- catalog


def test_catalog_shape():
    cs = catalog()
    assert len(cs) == 35
    ids = [c.id for c in cs]
    assert len(set(ids)) == len(ids)
    assert sum(1 for c in cs if c.kind == "identity") == 6
    for c in cs:
        assert c.anchor.strip()
        assert c.kind in ("loewner", "scalar", "membership", "identity")
        assert set(c.r_intervals) <= INTERVALS
        assert callable(c.evaluate)


def test_informational_separate():
    info = informational_catalog()
    assert [c.id for c in info] == ["X23"]
    assert all(c.informational for c in info)
    assert "X23" not in {c.id for c in catalog()}


def test_check_by_id_round_trip():
    c = check_by_id("C07")
    assert c.id == "C07" and c.kind == "loewner"
    assert check_by_id("X23").informational
    with pytest.raises(PreconditionError, match="C01"):
        check_by_id("C99")


def test_suites_partition_catalog():
    assert set(SUITE_NAMES) == {"all", "r01", "r12", "rneg", "identities"}
    union = set()
    for name in ("r01", "r12", "rneg", "identities"):
        union |= set(suite_ids(name))
    assert set(suite_ids("all")) == union
    assert len(suite_ids("identities")) == 6
    with pytest.raises(PreconditionError):
        suite_ids("r23")


def test_branch_cos_exponent_profile():
    # flat zero on [0, 1], growing linearly toward both far endpoints
    assert _branch_cos_exponent(0.5) == 0.0
    assert _branch_cos_exponent(1.0) == 0.0
    assert _branch_cos_exponent(1.5) == pytest.approx(1.0)
    assert _branch_cos_exponent(1.95) == pytest.approx(1.9)
    assert _branch_cos_exponent(-0.5) == pytest.approx(1.0)
    assert _branch_cos_exponent(-0.95) == pytest.approx(1.9)


# ------------------------------------------------------------------ config


def test_runconfig_validation():
    with pytest.raises(PreconditionError):
        RunConfig(trials=0)
    with pytest.raises(PreconditionError):
        RunConfig(dim_min=5, dim_max=3)
    with pytest.raises(PreconditionError):
        RunConfig(tol=0.0)
    with pytest.raises(PreconditionError):
        RunConfig(alphas=(1.6,))
    with pytest.raises(PreconditionError):
        RunConfig(out_format="yaml")
    with pytest.raises(PreconditionError):
        RunConfig(nodes=2)


def test_sample_r_stays_inside_open_interval():
    rng = np.random.default_rng(0)
    cfg = small_config()
    for trial in range(60):
        r = _sample_r(check_by_id("C09"), cfg, rng, trial)
        assert 1.05 <= r <= 1.95
    # multi-interval checks cycle through their branches
    seen = set()
    for trial in range(6):
        r = _sample_r(check_by_id("I04"), cfg, rng, trial)
        for lo, hi in INTERVALS:
            if lo + 0.05 <= r <= hi - 0.05:
                seen.add((lo, hi))
    assert len(seen) == 3


def test_sample_instance_deterministic():
    cfg = small_config()
    a = sample_instance(check_by_id("C12"), cfg, 987654321, 3)
    b = sample_instance(check_by_id("C12"), cfg, 987654321, 3)
    assert np.array_equal(a.A, b.A) and np.array_equal(a.B, b.B)
    assert a.r == b.r and a.alpha == b.alpha
    assert a.alpha_realized <= a.alpha + 1e-9


# ------------------------------------------------------------------ runner


def test_run_check_deterministic():
    cfg = small_config()
    r1 = run_check(check_by_id("C07"), cfg)
    r2 = run_check(check_by_id("C07"), cfg)
    assert r1.worst_margin == r2.worst_margin
    assert r1.worst_seed == r2.worst_seed
    assert r1.trials == 16 and r1.violations == 0


def test_run_check_threads_match_serial(monkeypatch):
    cfg = small_config()
    monkeypatch.setenv("SECTORMEANS_THREADS", "1")
    serial = run_check(check_by_id("C09"), cfg)
    monkeypatch.setenv("SECTORMEANS_THREADS", "4")
    threaded = run_check(check_by_id("C09"), cfg)
    assert serial.worst_margin == threaded.worst_margin
    assert serial.worst_seed == threaded.worst_seed


def test_flip_mutation_detected():
    cfg = small_config()
    for cid in ("C07", "C09", "C17"):
        flipped = run_check(check_by_id(cid), cfg, mutate="flip")
        assert flipped.violations > 0, f"{cid} flip produced no violations"


def test_flip_rejected_for_identities():
    with pytest.raises(PreconditionError):
        run_check(check_by_id("I01"), small_config(), mutate="flip")
    with pytest.raises(PreconditionError):
        run_check(check_by_id("C07"), small_config(), mutate="negate")


def test_r_override_validated():
    cfg = small_config(r_override=0.5)
    with pytest.raises(PreconditionError):
        run_check(check_by_id("C09"), cfg)  # C09 needs r in (1, 2)
    ok = run_check(check_by_id("C08"), cfg)
    assert ok.violations == 0


def test_pd_sharpness_collapses_margin():
    """With PD inputs the real-part bounds become equalities, so both the
    check and its flip stay within tolerance noise of zero."""
    cfg = small_config(trials=12, force_pd=True)
    for cid in ("C09", "C28"):
        res = run_check(check_by_id(cid), cfg)
        flipped = run_check(check_by_id(cid), cfg, mutate="flip")
        assert res.violations == 0
        assert flipped.violations == 0
        assert abs(res.worst_margin) <= 1e-8


def test_run_suite_filters_and_reports():
    cfg = small_config(trials=6)
    rep = run_suite("identities", cfg)
    assert rep.suite == "identities"
    assert len(rep.checks) == 6
    assert rep.passed and rep.violations == 0
    d = rep.to_dict()
    assert set(d) == {"suite", "seed", "config", "checks", "summary"}
    assert d["summary"]["violations"] == 0
    assert all("paper_anchor" in c for c in d["checks"])

    only = run_suite("r12", cfg, check_id="C09")
    assert [c.id for c in only.checks] == ["C09"]
    with pytest.raises(PreconditionError):
        run_suite("r12", cfg, check_id="C01")


def test_run_suite_includes_informational_for_rneg():
    cfg = small_config(trials=4)
    rep = run_suite("rneg", cfg)
    ids = [c.id for c in rep.checks]
    assert "X23" in ids
    x23 = next(c for c in rep.checks if c.id == "X23")
    assert x23.informational
    # informational rows never gate the suite outcome
    assert rep.passed


def test_replay_reproduces_worst_trial():
    cfg = small_config()
    res = run_check(check_by_id("C12"), cfg)
    out = replay_trial("C12", res.worst_seed, cfg)
    assert out["margin"] == res.worst_margin
    assert out["violated"] is False
    with pytest.raises(PreconditionError, match="seed"):
        replay_trial("C12", 123456789, cfg)


def test_eval_context_immutable():
    ctx = EvalContext(nodes=64)
    with pytest.raises(dataclasses.FrozenInstanceError):
        ctx.nodes = 32


def test_identity_margins_near_zero():
    cfg = small_config(trials=8)
    for cid in ("I01", "I03", "I05"):
        res = run_check(check_by_id(cid), cfg)
        assert res.violations == 0
        assert res.worst_margin >= -1e-8


def test_membership_checks_hold():
    cfg = small_config(trials=10)
    for cid in ("C11", "C18"):
        res = run_check(check_by_id(cid), cfg)
        assert res.violations == 0


def test_result_dict_fields():
    res = run_check(check_by_id("C03"), small_config(trials=5))
    d = res.to_dict()
    for key in ("id", "name", "paper_anchor", "trials", "violations",
                "worst_margin", "worst_seed", "worst_margin_strict",
                "sampler_failures", "runtime_s"):
        assert key in d
    assert d["trials"] == 5


def test_realized_alpha_strict_margin_reported():
    """Strict margins recompute the bound at the realized angle; they may be
    smaller than the requested-angle margins but are reported alongside."""
    cfg = small_config(trials=12)
    res = run_check(check_by_id("C12"), cfg)
    assert math.isfinite(res.worst_margin_strict)
    assert res.worst_margin_strict <= res.worst_margin + 1e-12
