"""How often is m = 1 + sum(n_i - 1) attained on random abelian actions?

    python3 scripts/bound_tightness_sweep.py --count 200 --seed 0
"""

import argparse
import collections
import json
import random

from lieforge.constructions import semidirect_bound_experiment
from lieforge.randgen import random_bound_construction


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    gap = collections.Counter()
    failures = 0
    for _ in range(args.count):
        rep, v = random_bound_construction(rng)
        r = semidirect_bound_experiment(rep, v)
        failures += not r.annihilated
        gap[r.m - r.minimal_length] += 1
    print(json.dumps({"count": args.count, "seed": args.seed, "counterexamples": failures,
                      "bound_minus_minimal": dict(sorted(gap.items()))}, indent=2))
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
