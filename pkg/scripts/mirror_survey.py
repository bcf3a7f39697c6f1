"""Sample states from three pools, mirror them, and tabulate the judgements.

    python scripts/mirror_survey.py --samples 500 --seed 1
"""

import argparse
from collections import Counter

import numpy as np

from bellbox.bridge import judge_2q, verify_equivalence
from bellbox.errors import IntermediateRegime
from bellbox.formulas import print_sequent
from bellbox.quantum_core import apply_mirror_2q, concurrence
from bellbox.sampling import (
    random_mirror_2q,
    random_mirrored_bell,
    random_partially_entangled,
    random_product_state,
)

POOLS = {
    "product": random_product_state,
    "bell": random_mirrored_bell,
    "partial": random_partially_entangled,
}


def survey(pool, n, rng):
    judgements = Counter()
    drift = 0.0
    accepted = 0
    for _ in range(n):
        s = POOLS[pool](rng)
        m = random_mirror_2q(rng)
        out = apply_mirror_2q(m, s)
        drift = max(drift, abs(concurrence(out) - concurrence(s)),
                    *(abs(p - q) for p, q in zip(out.probabilities(), s.probabilities())))
        try:
            j = judge_2q(out)
        except IntermediateRegime:
            judgements["intermediate"] += 1
            continue
        judgements[print_sequent(j.sequent)] += 1
        accepted += bool(verify_equivalence(out))
    return judgements, drift, accepted


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    for pool in POOLS:
        judgements, drift, accepted = survey(pool, args.samples, rng)
        print(f"[{pool}] n={args.samples} max drift after mirroring={drift:.2e} verified={accepted}")
        for text, count in judgements.most_common():
            print(f"  {count:5d}  {text}")


if __name__ == "__main__":
    main()
