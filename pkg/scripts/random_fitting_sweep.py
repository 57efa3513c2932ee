"""Fitting ideal statistics over seeded random solvable algebras.

Reports the distribution of codim F(L), how many are nilpotent, and checks
Engel equivalence on each one.

    python3 scripts/random_fitting_sweep.py --count 500 --seed 20240601
"""

import argparse
import collections
import json
import random

from lieforge.radicals import engel_check, fitting_ideal
from lieforge.randgen import random_solvable_algebra
from lieforge.structure import is_nilpotent


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--max-dim", type=int, default=6)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    codim = collections.Counter()
    dims = collections.Counter()
    discrepancies = 0
    for i in range(args.count):
        L = random_solvable_algebra(rng, max_dim=args.max_dim, name=f"solvable-{i}")
        F = fitting_ideal(L).space
        dims[L.dim] += 1
        codim[L.dim - F.dim] += 1
        if F.is_full() != (is_nilpotent(L) is not None) or not engel_check(L).consistent:
            discrepancies += 1
    print(json.dumps({"count": args.count, "seed": args.seed, "dims": dict(sorted(dims.items())),
                      "fitting_codim": dict(sorted(codim.items())), "engel_discrepancies": discrepancies}, indent=2))
    return 1 if discrepancies else 0


if __name__ == "__main__":
    raise SystemExit(main())
