import random
from pathlib import Path

import pytest
from hypothesis import given, settings

from bellbox.calculus import (
    Derivation,
    Reason,
    Rule,
    check,
    derive_entangled_equivalence,
    derive_one_qubit,
    derive_separable_equivalence,
    parse_derivation,
    print_derivation,
)
from bellbox.errors import ParseError
from bellbox.formulas import Atom, Sequent, parse_sequent

from helpers import derivations, mutate, node_at, replace_at

DATA = Path(__file__).parent / "data"
A, B = Atom("A"), Atom("B")

ENT_EXT = parse_sequent("|- (A % B) & (A' % B')")
ENT_INT = parse_sequent("|- (A & A') %1 (B & B')")
SEP_EXT = parse_sequent("|- (A % B) & (A % B') & (A' % B) & (A' % B')")
SEP_INT = parse_sequent("|- (A & A') %0 (B & B')")


def load(name):
    return parse_derivation((DATA / name).read_text())


def engines():
    for direction in ("lr", "rl"):
        yield derive_entangled_equivalence(A, B, direction), ENT_EXT if direction == "lr" else ENT_INT
        yield (derive_entangled_equivalence(A, B, direction, anti=True),
               parse_sequent("|- (A % B') & (A' % B)") if direction == "lr" else ENT_INT)
        yield derive_separable_equivalence(A, B, direction), SEP_EXT if direction == "lr" else SEP_INT
    yield derive_one_qubit(A), parse_sequent("|- A & A'")


# -- hand transcriptions of the displayed trees ----------------------------------

def test_entderiv_transcription_accepted():
    d = load("entderiv.drv")
    assert str(check(d, {ENT_EXT})) == "ACCEPT"
    assert d == derive_entangled_equivalence(A, B, "lr")
    assert {Rule.PREMISE, Rule.AND_REFL, Rule.PAR_REFL, Rule.AND_CONGR, Rule.PAR1_FORM} == d.rules()


def test_sepderiv_transcription_accepted():
    d = load("sepderiv.drv")
    assert check(d, {SEP_EXT})
    assert d == derive_separable_equivalence(A, B, "lr")


def test_one_qubit_transcription_accepted():
    d = load("onequbit.drv")
    assert check(d, {parse_sequent("|- A & A'")})
    assert d == derive_one_qubit(A)
    assert d.depth() == 3
    assert {leaf.conclusion for leaf in d.leaves()} == {parse_sequent("|- A & A'")}


def test_cut_rejected():
    d = load("cut.drv")
    r = check(d, {parse_sequent("A |- B"), parse_sequent("B |- C")})
    assert not r and r.reason is Reason.CUT_NOT_ADMISSIBLE and r.path == "root"
    assert str(r) == "REJECT root CutNotAdmissible"


def test_cut_anywhere_rejected():
    d = derive_entangled_equivalence(A, B)
    target = (0, 1, 0)
    node = node_at(d, target)
    mutated = replace_at(d, target, Derivation(node.conclusion, Rule.CUT, node.premises))
    r = check(mutated, {ENT_EXT})
    assert r.reason is Reason.CUT_NOT_ADMISSIBLE and r.path == "root.0.1.0"


def test_visibility_violation_on_and_form():
    r = check(load("visibility.drv"), {parse_sequent("|- A & A'")})
    assert r.reason is Reason.VISIBILITY_VIOLATION and r.path == "root"


def test_visibility_violation_in_entderiv():
    d = derive_entangled_equivalence(A, B)
    path = (0, 0, 0)  # the andR step |- A % B
    node = node_at(d, path)
    extra = Sequent((), node.conclusion.succedent + (Atom("C"),))
    r = check(replace_at(d, path, Derivation(extra, node.rule, node.premises)), {ENT_EXT})
    assert r.reason is Reason.VISIBILITY_VIOLATION and r.path == "root.0.0.0"


def test_unknown_premise():
    r = check(derive_entangled_equivalence(A, B), set())
    assert r.reason is Reason.UNKNOWN_PREMISE


def test_arity_enforced():
    d = derive_entangled_equivalence(A, B)
    congr = d.premises[0]
    short = Derivation(congr.conclusion, Rule.AND_CONGR, congr.premises[:1])
    assert check(Derivation(d.conclusion, d.rule, (short,)), {ENT_EXT}).reason is Reason.ARITY_MISMATCH
    sep = derive_separable_equivalence(A, B)
    cont = sep.premises[0]
    three = Derivation(cont.conclusion, Rule.AND_CONT, cont.premises[:3])
    assert check(Derivation(sep.conclusion, sep.rule, (three,)), {SEP_EXT}).reason is Reason.ARITY_MISMATCH


def test_and_cont_premise_order_matters():
    sep = derive_separable_equivalence(A, B)
    cont = sep.premises[0]
    p = cont.premises
    swapped = Derivation(cont.conclusion, Rule.AND_CONT, (p[0], p[2], p[1], p[3]))
    r = check(Derivation(sep.conclusion, sep.rule, (swapped,)), {SEP_EXT})
    assert r.reason is Reason.SCHEMA_MISMATCH


def test_context_is_carried():
    ctx = parse_sequent("G |- A & A'")
    d = Derivation(parse_sequent("G |- A"), Rule.AND_REFL, (Derivation(ctx, Rule.PREMISE),))
    assert check(d, {ctx})
    d = Derivation(parse_sequent("|- A"), Rule.AND_REFL, (Derivation(ctx, Rule.PREMISE),))
    assert check(d, {ctx}).reason is Reason.CONTEXT_MISMATCH


def test_par_form_keeps_side_formulas():
    prem = parse_sequent("|- C, A, B, D")
    d = Derivation(parse_sequent("|- C, A % B, D"), Rule.PAR_FORM, (Derivation(prem, Rule.PREMISE),))
    assert check(d, {prem})
    # no exchange
    d = Derivation(parse_sequent("|- C, B % A, D"), Rule.PAR_FORM, (Derivation(prem, Rule.PREMISE),))
    assert not check(d, {prem})


def test_malformed_leaf():
    leaf = Derivation(ENT_EXT, Rule.PREMISE)
    d = Derivation(ENT_EXT, Rule.PREMISE, (leaf,))
    assert check(d, {ENT_EXT}).reason is Reason.MALFORMED_LEAF


# -- engines ---------------------------------------------------------------------

@pytest.mark.parametrize("d, start", list(engines()))
def test_engines_are_accepted(d, start):
    assert check(d, {start})
    assert {leaf.conclusion for leaf in d.leaves()} == {start}
    assert Rule.CUT not in d.rules()


def test_branch_counts():
    for direction in ("lr", "rl"):
        assert len(derive_entangled_equivalence(A, B, direction).leaves()) == 2
        assert len(derive_separable_equivalence(A, B, direction).leaves()) == 4


def test_endpoints():
    assert derive_entangled_equivalence(A, B, "lr").conclusion == ENT_INT
    assert derive_entangled_equivalence(A, B, "rl").conclusion == ENT_EXT
    assert derive_separable_equivalence(A, B, "lr").conclusion == SEP_INT
    assert derive_separable_equivalence(A, B, "rl").conclusion == SEP_EXT


def test_separable_tree_shape():
    d = derive_separable_equivalence(A, B, "lr")
    assert d.rule is Rule.PAR0_FORM
    cont = d.premises[0]
    assert cont.rule is Rule.AND_CONT
    assert [p.rule for p in cont.premises] == [Rule.PAR_REFL] * 4


def test_other_atom_names():
    x, y = Atom("Q1"), Atom("Xy", True)
    d = derive_entangled_equivalence(x, y, "rl")
    assert check(d, {leaf.conclusion for leaf in d.leaves()})


def test_bad_direction():
    with pytest.raises(ValueError):
        derive_entangled_equivalence(A, B, "up")


@pytest.mark.parametrize("d, start", list(engines()))
def test_visibility_in_accepted_trees(d, start):
    for _, node in d.nodes():
        if node.rule in (Rule.AND_FORM, Rule.AND_REFL):
            assert len(node.conclusion.succedent) == 1
            assert all(len(p.conclusion.succedent) == 1 for p in node.premises)


def test_mutations_rejected():
    rng = random.Random(7)
    pool = list(engines())
    for _ in range(300):
        d, start = rng.choice(pool)
        mutated, kind, _ = mutate(d, rng)
        r = check(mutated, {start})
        assert not r, (kind, print_derivation(mutated))
        if kind == "rule:cut":
            assert r.reason is Reason.CUT_NOT_ADMISSIBLE


# -- text format -----------------------------------------------------------------

@pytest.mark.parametrize("d, start", list(engines()))
def test_derivation_round_trip(d, start):
    assert parse_derivation(print_derivation(d)) == d


@settings(max_examples=200)
@given(derivations())
def test_fuzzed_derivation_round_trip(d):
    text = print_derivation(d)
    assert parse_derivation(text) == d
    assert print_derivation(parse_derivation(text)) == text


@pytest.mark.parametrize("text", [
    "(andF |- A)",
    "(frob concl: |- A)",
    "(premise concl: |- A",
    "(premise concl: |- A) x",
    "(premise concl: |- A prem: premise)",
])
def test_bad_derivation_text(text):
    with pytest.raises(ParseError):
        parse_derivation(text)
