"""Run every property suite at full size and print a timing table.

    python scripts/run_property_suites.py [--seed 7] [--threads 4]
"""

import argparse
import sys
import time

from posknot.suites import SUITES, run_suite

SIZES = {"balanced": 500, "burdened": 200, "prop6": 200, "stoimenow": 200, "mirror": 100}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every suite size")
    args = ap.parse_args()

    failed = False
    print(f"{'suite':<10} {'cases':>6} {'failures':>9} {'seconds':>8}  tight bounds")
    for name in SUITES:
        count = max(1, int(SIZES[name] * args.scale))
        start = time.perf_counter()
        res = run_suite(name, count, args.seed, threads=args.threads)
        took = time.perf_counter() - start
        print(f"{name:<10} {res.cases:>6} {len(res.failures):>9} {took:>8.1f}  {res.tight or '-'}")
        for msg in res.failures[:5]:
            print(f"    {msg}")
        failed |= not res.ok
    print("some invariants FAILED" if failed else "all invariants held")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
