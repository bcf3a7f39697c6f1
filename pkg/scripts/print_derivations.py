"""Print the equivalence derivations in both directions with their check reports."""

import argparse

from bellbox.calculus import (
    check,
    derive_entangled_equivalence,
    derive_one_qubit,
    derive_separable_equivalence,
    print_derivation,
)
from bellbox.formulas import Atom


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--atoms", default="A,B")
    args = ap.parse_args()
    a, b = (Atom(n.strip()) for n in args.atoms.split(","))
    trees = {
        "entangled lr": derive_entangled_equivalence(a, b, "lr"),
        "entangled rl": derive_entangled_equivalence(a, b, "rl"),
        "separable lr": derive_separable_equivalence(a, b, "lr"),
        "separable rl": derive_separable_equivalence(a, b, "rl"),
        "one qubit": derive_one_qubit(a),
    }
    for name, d in trees.items():
        premises = {leaf.conclusion for leaf in d.leaves()}
        print(f"# {name}: {len(d.leaves())} branch leaves, depth {d.depth()}, {check(d, premises)}")
        print(print_derivation(d))
        print()


if __name__ == "__main__":
    main()
