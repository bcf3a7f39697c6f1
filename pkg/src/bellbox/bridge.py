"""From register states to the judgements of the internal observer.

Outcome |0> of qubit 1 reads as atom A and |1> as A'; likewise B, B' for
qubit 2.  An outcome is in the support when its probability exceeds
``SUPPORT_EPS``.
"""

from __future__ import annotations

from dataclasses import dataclass

from bellbox.calculus import (
    ACCEPT,
    CheckReport,
    Reason,
    check,
    derive_entangled_equivalence,
    derive_separable_equivalence,
    endpoints,
)
from bellbox.errors import IntermediateRegime, UnsupportedRegime
from bellbox.formulas import (
    Atom,
    Formula,
    Par,
    Par0,
    Par1,
    Sequent,
    and_chain,
    dualize,
    print_sequent,
    superposition,
)
from bellbox.quantum_core import (
    BASIS_1Q,
    BASIS_2Q,
    CorrelationClass,
    Regime,
    Register1Q,
    Register2Q,
    classify,
)

SUPPORT_EPS = 1e-9

_BELL_SUPPORTS = ({"00", "11"}, {"01", "10"})


@dataclass(frozen=True)
class Judgement:
    sequent: Sequent
    regime: CorrelationClass | None
    support: tuple[tuple[str, float], ...]

    def render(self) -> str:
        lines = [print_sequent(self.sequent)]
        if self.regime is not None:
            lines.append(f"regime: {self.regime}")
        lines.extend(f"{outcome} {p:.12g}" for outcome, p in self.support)
        return "\n".join(lines)


def support(s: Register1Q | Register2Q) -> tuple[tuple[str, float], ...]:
    labels = BASIS_2Q if isinstance(s, Register2Q) else BASIS_1Q
    return tuple((lab, p) for lab, p in zip(labels, s.probabilities()) if p > SUPPORT_EPS)


def _atoms(names: tuple[str, str]) -> tuple[Atom, Atom]:
    a, b = names
    return Atom(a), Atom(b)


def _literal(atom: Atom, bit: str) -> Atom:
    return atom if bit == "0" else dualize(atom)


def judge_1q(q: Register1Q, atom_name: str = "A") -> Judgement:
    a = Atom(atom_name)
    supp = support(q)
    if len(supp) == 2:
        f = superposition(a)
    else:
        (outcome, _), = supp
        f = _literal(a, outcome)
    return Judgement(Sequent((), (f,)), None, supp)


def _internal_formula(s: Register2Q, regime: CorrelationClass, a: Atom, b: Atom) -> Formula:
    outcomes = {lab for lab, _ in support(s)}
    if regime.tag is Regime.INTERMEDIATE:
        raise IntermediateRegime(regime.degree)
    if regime.tag is Regime.MAXIMALLY_ENTANGLED:
        if outcomes not in _BELL_SUPPORTS:
            raise UnsupportedRegime(
                f"maximally entangled state with support {sorted(outcomes)}; "
                "only the computational Bell supports {00,11} and {01,10} have a judgement"
            )
        return Par1(superposition(a), superposition(b))
    if len(outcomes) == 4:
        return Par0(superposition(a), superposition(b))
    firsts = {o[0] for o in outcomes}
    seconds = {o[1] for o in outcomes}
    if len(firsts) * len(seconds) != len(outcomes):
        raise UnsupportedRegime(f"separable state with non-product support {sorted(outcomes)}")
    left = superposition(a) if len(firsts) == 2 else _literal(a, firsts.pop())
    right = superposition(b) if len(seconds) == 2 else _literal(b, seconds.pop())
    return Par(left, right)


def judge_2q(s: Register2Q, atoms: tuple[str, str] = ("A", "B")) -> Judgement:
    a, b = _atoms(atoms)
    regime = classify(s)
    f = _internal_formula(s, regime, a, b)
    return Judgement(Sequent((), (f,)), regime, support(s))


def external_outcomes(s: Register2Q, atoms: tuple[str, str] = ("A", "B")) -> list[Sequent]:
    """One |- X % Y per outcome the external observer can read."""
    a, b = _atoms(atoms)
    return [
        Sequent((), (Par(_literal(a, lab[0]), _literal(b, lab[1])),))
        for lab, _ in support(s)
    ]


def superposed_external(s: Register2Q, atoms: tuple[str, str] = ("A", "B")) -> Formula:
    return and_chain(seq.succedent[0] for seq in external_outcomes(s, atoms))


def verify_equivalence(s: Register2Q, atoms: tuple[str, str] = ("A", "B")) -> CheckReport:
    """Derive the internal judgement from the superposed external one and
    back, check both trees, and match their endpoints against the formulas
    generated from ``s``."""
    judgement = judge_2q(s, atoms)
    internal = judgement.sequent
    external = Sequent((), (superposed_external(s, atoms),))
    if internal == external:
        # single outcome: both sides are the same |- X % Y
        return ACCEPT
    derivations = {d: derivations_for(s, atoms, d) for d in ("lr", "rl")}
    for direction, d in derivations.items():
        start, goal = (external, internal) if direction == "lr" else (internal, external)
        report = check(d, {start})
        if not report:
            return report
        leaves, root = endpoints(d)
        if leaves != {start} or root != goal:
            return CheckReport(False, "root", Reason.SCHEMA_MISMATCH,
                               f"{direction} derivation does not connect {start} and {goal}")
    return ACCEPT


def derivations_for(s: Register2Q, atoms: tuple[str, str] = ("A", "B"), direction: str = "lr"):
    """The derivation verify_equivalence would check for ``s`` in one direction."""
    a, b = _atoms(atoms)
    judgement = judge_2q(s, atoms)
    outcomes = {lab for lab, _ in judgement.support}
    if judgement.regime.tag is Regime.MAXIMALLY_ENTANGLED:
        return derive_entangled_equivalence(a, b, direction, anti=outcomes == {"01", "10"})
    if len(outcomes) == 4:
        return derive_separable_equivalence(a, b, direction)
    raise UnsupportedRegime(f"no equivalence derivation for {judgement.sequent}")
