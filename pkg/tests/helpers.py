"""Fuzzers, mutators and independent oracles shared by the test modules."""

from __future__ import annotations

import functools
import random

import numpy as np
from hypothesis import strategies as st

from bellbox.calculus import Derivation, Rule
from bellbox.formulas import (
    And,
    Atom,
    Binary,
    LinkedPair,
    MetaLink,
    Par,
    Par0,
    Par1,
    Sequent,
    atoms_of,
    dualize,
)

NAMES = ["A", "B", "C", "G", "Q1", "Xy"]
CONNECTIVES = [And, Par, Par0, Par1]
LINKS = [MetaLink.NON_ENT, MetaLink.MAX_ENT]

# -- hypothesis strategies ----------------------------------------------------

atoms = st.builds(Atom, st.sampled_from(NAMES), st.booleans())


@functools.lru_cache(maxsize=None)
def formulas(depth: int = 8):
    if depth == 0:
        return atoms
    sub = formulas(depth - 1)
    return st.one_of(atoms, *(st.builds(cls, sub, sub) for cls in CONNECTIVES))


def items(depth: int = 4):
    f = formulas(depth)
    return st.one_of(f, st.builds(LinkedPair, f, st.sampled_from(LINKS), f))


def sequents(depth: int = 4):
    return st.builds(
        Sequent,
        st.lists(items(depth), max_size=3).map(tuple),
        st.lists(items(depth), min_size=1, max_size=4).map(tuple),
    )


@functools.lru_cache(maxsize=None)
def derivations(depth: int = 3):
    node = st.builds(Derivation, sequents(2), st.sampled_from(list(Rule)))
    if depth == 0:
        return node
    return st.one_of(
        node,
        st.builds(Derivation, sequents(2), st.sampled_from(list(Rule)),
                  st.lists(derivations(depth - 1), min_size=1, max_size=4).map(tuple)),
    )


# -- plain-RNG fuzzers (acceptance runs use fixed seeds) -----------------------

def random_formula(rng: random.Random, depth: int = 8):
    if depth == 0 or rng.random() < 0.3:
        return Atom(rng.choice(NAMES), rng.random() < 0.5)
    cls = rng.choice(CONNECTIVES)
    return cls(random_formula(rng, depth - 1), random_formula(rng, depth - 1))


def random_item(rng: random.Random, depth: int = 4):
    if rng.random() < 0.2:
        return LinkedPair(random_formula(rng, depth), rng.choice(LINKS), random_formula(rng, depth))
    return random_formula(rng, depth)


def random_sequent(rng: random.Random, depth: int = 4) -> Sequent:
    ctx = tuple(random_item(rng, depth) for _ in range(rng.randint(0, 2)))
    succ = tuple(random_item(rng, depth) for _ in range(rng.randint(1, 3)))
    return Sequent(ctx, succ)


def random_derivation(rng: random.Random, depth: int = 3) -> Derivation:
    n = 0 if depth == 0 else rng.randint(0, 3)
    return Derivation(
        random_sequent(rng, 2),
        rng.choice(list(Rule)),
        tuple(random_derivation(rng, depth - 1) for _ in range(n)),
    )


def noisy_formula_text(f, rng: random.Random) -> str:
    """Render with random whitespace and redundant parentheses."""
    sp = lambda: " " * rng.randint(0, 2)  # noqa: E731
    if isinstance(f, Atom):
        text = f.name + ("'" if f.dual else "")
    else:
        text = f"({noisy_formula_text(f.left, rng)}){sp()}{f.symbol}{sp()}({noisy_formula_text(f.right, rng)})"
    if rng.random() < 0.2:
        text = f"({sp()}{text}{sp()})"
    return text


# -- mutation -------------------------------------------------------------------

def _replace_atom(x, target_index: int, counter: list[int]):
    if isinstance(x, Atom):
        i = counter[0]
        counter[0] += 1
        if i == target_index:
            return dualize(x) if counter[1] == 0 else Atom(x.name + "Z", x.dual)
        return x
    if isinstance(x, Binary):
        return type(x)(_replace_atom(x.left, target_index, counter), _replace_atom(x.right, target_index, counter))
    if isinstance(x, LinkedPair):
        return LinkedPair(_replace_atom(x.left, target_index, counter), x.link,
                          _replace_atom(x.right, target_index, counter))
    raise TypeError(x)


def _count_atoms(s: Sequent) -> int:
    return sum(1 for _ in atoms_of(s))


def mutate_sequent(s: Sequent, rng: random.Random) -> Sequent:
    n = _count_atoms(s)
    target = rng.randrange(n)
    counter = [0, rng.randrange(2)]
    ctx = tuple(_replace_atom(x, target, counter) for x in s.context)
    succ = tuple(_replace_atom(x, target, counter) for x in s.succedent)
    return Sequent(ctx, succ)


def node_paths(d: Derivation) -> list[tuple[int, ...]]:
    out = [()]
    for i, p in enumerate(d.premises):
        out.extend((i,) + q for q in node_paths(p))
    return out


def node_at(d: Derivation, path: tuple[int, ...]) -> Derivation:
    for i in path:
        d = d.premises[i]
    return d


def replace_at(d: Derivation, path: tuple[int, ...], new: Derivation) -> Derivation:
    if not path:
        return new
    i = path[0]
    prems = list(d.premises)
    prems[i] = replace_at(prems[i], path[1:], new)
    return Derivation(d.conclusion, d.rule, tuple(prems))


def mutate(d: Derivation, rng: random.Random) -> tuple[Derivation, str, tuple[int, ...]]:
    """One random single-node mutation: rename the rule, or change one atom
    in the node's conclusion.  Returns (tree, kind, path)."""
    path = rng.choice(node_paths(d))
    node = node_at(d, path)
    if rng.random() < 0.5:
        rule = rng.choice([r for r in Rule if r is not node.rule])
        return replace_at(d, path, Derivation(node.conclusion, rule, node.premises)), "rule:" + rule.value, path
    new = Derivation(mutate_sequent(node.conclusion, rng), node.rule, node.premises)
    return replace_at(d, path, new), "atom", path


# -- numeric oracles ------------------------------------------------------------

def mirror1_matrix_oracle(phi: float, alpha: float) -> np.ndarray:
    """Built straight from the angles, not from the package's diagonal."""
    a = np.exp(1j * alpha)
    return np.exp(1j * phi) * np.array([[a, 0], [0, np.conj(a)]])


def concurrence_oracle(amps) -> float:
    """Concurrence via the reduced state: C = sqrt(2 (1 - tr rho_A^2))."""
    m = np.asarray(amps, dtype=complex).reshape(2, 2)
    rho = m @ m.conj().T
    purity = float(np.real(np.trace(rho @ rho)))
    return float(np.sqrt(max(0.0, 2 * (1 - purity))))
