"""Run every verification suite and print a per-suite pass/fail tally.

    python3 scripts/run_all_suites.py [--samples N] [--seed K] [--json-dir DIR]
"""
import argparse
import time
from dataclasses import replace
from pathlib import Path

from relspin.config import SUITES, RunConfig
from relspin.suites import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--json-dir", type=Path)
    args = ap.parse_args()
    cfg = replace(RunConfig(), samples=args.samples, seed=args.seed).validated()
    if args.json_dir:
        args.json_dir.mkdir(parents=True, exist_ok=True)
    total_failed = 0
    for name in SUITES:
        t0 = time.perf_counter()
        rep = run_suite(name, cfg)
        dt = time.perf_counter() - t0
        statuses = [c.status for c in rep.checks]
        failed = rep.failed
        total_failed += len(failed)
        print(f"{name:<14} pass={statuses.count('pass'):3d} fail={len(failed):3d} info={statuses.count('info'):3d}"
              f"  {dt:6.1f}s")
        for c in failed:
            print(f"    FAIL {c.name}: {c.max_residual:.3e} (tol {c.tolerance:.1e})")
        if args.json_dir:
            (args.json_dir / f"{name}.json").write_text(rep.to_json())
    print(f"total failed checks: {total_failed}")


if __name__ == "__main__":
    main()
