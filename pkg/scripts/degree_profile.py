"""Tabulate min/max Jones degrees against the crossing and circle counts
of generated Burdened diagrams, as a CSV on stdout.

    python scripts/degree_profile.py --count 100 --seed 3 > profile.csv
"""

import argparse
import csv
import sys

from posknot.jones import jones_polynomial, v_coefficient
from posknot.states import all_a_circles, all_b_circles
from posknot.suites import burdened_corpus


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--max-crossings", type=int, default=16)
    args = ap.parse_args()

    w = csv.writer(sys.stdout)
    w.writerow(["c", "n", "s", "B", "min_deg", "max_deg", "fibered_bound", "v1"])
    for D in burdened_corpus(args.count, args.seed, args.max_crossings):
        r = jones_polynomial(D)
        bound = (8 * r.min_deg_t + D.n_components - 1) / 2
        w.writerow([
            D.c, D.n_components, all_a_circles(D).count, all_b_circles(D).count,
            r.min_deg_t, r.max_deg_t, bound, v_coefficient(r.jones, 1),
        ])
    return 0


if __name__ == "__main__":
    sys.exit(main())
