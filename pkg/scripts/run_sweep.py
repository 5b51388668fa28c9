"""Run the exhaustive bound sweep and write the JSON report.

    python scripts/run_sweep.py --max-boxes 8 --jobs 4 --out sweep8.json
"""
import argparse
import logging
import sys
from pathlib import Path

from skewposet.verifier import ALL_CHECKS, SweepConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-boxes", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--checks", default=",".join(ALL_CHECKS))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    cfg = SweepConfig(
        max_boxes=args.max_boxes,
        checks=tuple(args.checks.split(",")),
        sample_seed=args.seed,
        samples=args.samples,
        parallel_jobs=args.jobs,
    )
    report = run_suite(cfg)
    print(report.to_text(), end="")
    if args.out:
        args.out.write_text(report.to_json())
    return 0 if report.passed else 2


if __name__ == "__main__":
    sys.exit(main())
