"""Recompute the seven-knot census and the control records.

    python scripts/reproduce_census.py [--format json] [--threads 4]
"""

import argparse
import sys
import time
from pathlib import Path

from posknot.census import emit_report, load_census, run_census

DATA = Path(__file__).resolve().parents[1] / "data"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    status = 0
    for name in ("census12.jsonl", "controls.jsonl"):
        start = time.perf_counter()
        report = run_census(load_census(DATA / name), threads=args.threads)
        print(f"## {name} ({time.perf_counter() - start:.2f}s)")
        sys.stdout.write(emit_report(report, args.format).decode())
        if not report.ok:
            print(f"expected-polynomial mismatches: {', '.join(report.mismatches)}")
            status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
