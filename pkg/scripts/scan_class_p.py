"""Scan (n, k) for class-P violations of both theorem-2 families.

Which (n, k) admit class-P violations is not settled; this only reports what
a seeded random search happens to find.

    python scripts/scan_class_p.py --max-n 9 --trials 20000 --quantized
"""

import argparse

from eigdiag.explorer import DEFAULT_SEED, SearchTask, search_many
from eigdiag.inequalities import ceil_half


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--trials", type=int, default=5000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--quantized", action="store_true")
    args = p.parse_args()

    diag_range = (0.0, 1.0) if args.quantized else (-1.0, 1.0)
    print(f"{'n':>3} {'family':<6} {'k':>2} {'hits':>7} {'worst slack':>13} first")
    for n in range(args.min_n, args.max_n + 1):
        task = SearchTask("P", "lower", 1, n, args.trials, args.seed, diag_range, 1.0, args.quantized)
        targets = [(f, k) for f in ("lower", "upper") for k in range(1, ceil_half(n) + 1)]
        for (family, k), out in zip(targets, search_many(task, targets)):
            first = out.first_witness.trial if out.first_witness else "-"
            print(f"{n:>3} {family:<6} {k:>2} {out.violations_found:>7} {out.worst_slack:>13.6f} {first}")


if __name__ == "__main__":
    main()
