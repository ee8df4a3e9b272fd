#!/usr/bin/env python3
"""Run the soundness fuzzing campaign at (or near) acceptance scale.

Every kernel-generated theorem must hold at every world of every random
finite model and across the fixed Grand Hotel panels; the run fails loudly
on the first violation summary.
"""

import argparse
import sys

from boxdot.fuzz import FuzzConfig, run_soundness_fuzz


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--theorems", type=int, default=10_000)
    ap.add_argument("--models", type=int, default=300)
    ap.add_argument("--max-worlds", type=int, default=6)
    ap.add_argument("--max-evidence", type=int, default=4)
    ap.add_argument("--max-steps", type=int, default=8)
    args = ap.parse_args()

    cfg = FuzzConfig(seed=args.seed, num_theorems=args.theorems,
                     num_models=args.models, max_worlds=args.max_worlds,
                     max_evidence=args.max_evidence, max_proof_steps=args.max_steps)
    report = run_soundness_fuzz(cfg)
    print(f"theorems:    {report.theorems_checked}")
    print(f"models:      {report.models_checked}")
    print(f"evaluations: {report.evaluations}")
    print(f"skipped:     {report.skipped}")
    print(f"violations:  {report.violations}")
    print(f"elapsed:     {report.elapsed:.1f}s")
    if report.violations:
        print(f"first violation: {report.first_violation}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
