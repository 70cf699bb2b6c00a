#!/usr/bin/env python3
"""Run the full verification sweep and archive reports.

Convenience wrapper over the `sectormeans verify` CLI for the common
workflow: every suite at full trial volume, JSON + CSV side by side,
one directory per run.

    python3 scripts/run_verification.py --seed 42 --trials 500 --out-dir runs/
"""

import argparse
import json
import pathlib
import sys
import time

from sectormeans.cli import main as cli_main

SUITES = ("r01", "r12", "rneg", "identities")


def parse_args(argv):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--dims", default="2..8")
    ap.add_argument("--nodes", type=int, default=80)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--out-dir", default="runs")
    return ap.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    stamp = time.strftime("%Y%m%d-%H%M%S")
    out_dir = pathlib.Path(args.out_dir) / f"verify-{stamp}-seed{args.seed}"
    out_dir.mkdir(parents=True, exist_ok=True)

    common = ["--seed", str(args.seed), "--trials", str(args.trials),
              "--dims", args.dims, "--nodes", str(args.nodes), "--tol", str(args.tol)]
    status = 0
    summaries = {}
    for suite in SUITES:
        for fmt in ("json", "csv"):
            out_path = out_dir / f"{suite}.{fmt}"
            code = cli_main(["verify", suite, *common, "--format", fmt,
                             "--out", str(out_path)])
            status = max(status, code)
        report = json.loads((out_dir / f"{suite}.json").read_text())
        summaries[suite] = report["summary"]

    (out_dir / "summary.json").write_text(json.dumps(summaries, indent=2) + "\n")
    total_viol = sum(s["violations"] for s in summaries.values())
    print(f"\nwrote {out_dir}/  (total violations: {total_viol})")
    return status


if __name__ == "__main__":
    sys.exit(main())
