#!/usr/bin/env python3
"""Probe how tight the sector-angle constants are as alpha and r vary.

For the real-part bounds the worst case is already scalar: w = 1 + i tan(alpha)
sits on the sector boundary, and the weighted mean of w with 1 applies the
fractional exponent s to it (s = 1 - r when r > 1, s = r otherwise; the PD
argument contributes nothing).  This script tabulates, over a grid of
(alpha, r), the observed ratio

    ratio(alpha, r) = Re(w^s) / (Re w)^s = cos(alpha)^{-s} cos(s alpha),

against cos(alpha)^e for e = 2 * max(r - 1, -r, 0), the exponent the package
uses.  A ratio below the bound would be a counterexample; the shrinking
headroom toward the interval endpoints shows where the constant is attained.

Also fuzzes the matrix case at the widest angle to report empirical headroom.
"""

import argparse
import cmath
import math
import sys

import numpy as np

from sectormeans import (
    EvalContext,
    RunConfig,
    check_by_id,
    derive_seed,
    sample_instance,
)
from sectormeans.checks import _branch_cos_exponent


def scalar_ratio(alpha, r):
    w = 1.0 + 1.0j * math.tan(alpha)
    s = 1.0 - r if r > 1.0 else r  # exponent landing on the sectorial slot
    val = cmath.exp(s * cmath.log(w))
    return val.real / (w.real ** s)


def scalar_table(alphas, rs):
    print(f"{'alpha':>6} {'r':>6} {'ratio':>12} {'bound':>12} {'headroom':>10}")
    tightest = math.inf
    for alpha in alphas:
        for r in rs:
            ratio = scalar_ratio(alpha, r)
            bound = math.cos(alpha) ** _branch_cos_exponent(r)
            head = ratio / bound
            tightest = min(tightest, head)
            print(f"{alpha:6.2f} {r:6.2f} {ratio:12.6f} {bound:12.6f} {head:10.4f}")
    print(f"\nsmallest scalar headroom ratio/bound: {tightest:.6f}")
    if tightest < 1.0 - 1e-12:
        print("!! bound violated on the scalar witness")
        return 1
    return 0


def matrix_fuzz(check_id, alpha, trials, seed):
    check = check_by_id(check_id)
    cfg = RunConfig(seed=seed, trials=trials, dim_min=2, dim_max=6, alphas=(alpha,))
    ctx = EvalContext()
    margins = []
    for trial in range(trials):
        inst = sample_instance(check, cfg, derive_seed(seed, check_id, trial, 0), trial)
        te = check.evaluate(inst, ctx, False)
        margins.append(te.margin / te.scale)
    margins = np.asarray(margins)
    print(f"{check_id} at alpha={alpha}: min normalized margin {margins.min():.3e}, "
          f"median {np.median(margins):.3e} over {trials} trials")
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.3, 0.8, 1.2, 1.45])
    ap.add_argument("--rs", type=float, nargs="+",
                    default=[-0.95, -0.6, -0.2, 0.5, 1.2, 1.6, 1.95])
    ap.add_argument("--fuzz-check", default="C12")
    ap.add_argument("--fuzz-alpha", type=float, default=1.2)
    ap.add_argument("--fuzz-trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args(argv)

    status = scalar_table(args.alphas, args.rs)
    print()
    matrix_fuzz(args.fuzz_check, args.fuzz_alpha, args.fuzz_trials, args.seed)
    return status


if __name__ == "__main__":
    sys.exit(main())
