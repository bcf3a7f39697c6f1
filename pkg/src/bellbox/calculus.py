"""Rule schemas, derivation trees and the checker.

Every definitional equation yields a formation rule (``...F``) and a
reflection rule (``...R``), so a derivation is an ordinary tree read from
the leaves (declared premises) down to the root.  The antecedent context is
carried unchanged by every rule.  Succedents are ordered lists; there is no
exchange.  ``cut`` parses but is never accepted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from bellbox.errors import ParseError
from bellbox.formulas import (
    And,
    Atom,
    Item,
    LinkedPair,
    MetaLink,
    Par,
    Par0,
    Par1,
    Sequent,
    TokenStream,
    and_chain,
    dualize,
    print_sequent,
    read_sequent,
    superposition,
)


class Rule(enum.Enum):
    AND_FORM = "andF"
    AND_REFL = "andR"
    PAR_FORM = "parF"
    PAR_REFL = "parR"
    PAR0_FORM = "par0F"
    PAR0_REFL = "par0R"
    PAR1_FORM = "par1F"
    PAR1_REFL = "par1R"
    AND_CONGR = "andCongr"
    AND_CONGR_REFL = "andCongrR"
    AND_CONT = "andCont"
    AND_CONT_REFL = "andContR"
    PREMISE = "premise"
    CUT = "cut"


class Reason(str, enum.Enum):
    CUT_NOT_ADMISSIBLE = "CutNotAdmissible"
    VISIBILITY_VIOLATION = "VisibilityViolation"
    UNKNOWN_PREMISE = "UnknownPremise"
    ARITY_MISMATCH = "ArityMismatch"
    CONTEXT_MISMATCH = "ContextMismatch"
    SCHEMA_MISMATCH = "SchemaMismatch"
    MALFORMED_LEAF = "MalformedLeaf"


@dataclass(frozen=True)
class Derivation:
    conclusion: Sequent
    rule: Rule
    premises: tuple[Derivation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    def nodes(self, path: str = "root") -> Iterator[tuple[str, Derivation]]:
        """Pre-order walk yielding (node-path, node)."""
        yield path, self
        for i, p in enumerate(self.premises):
            yield from p.nodes(f"{path}.{i}")

    def leaves(self) -> list[Derivation]:
        return [d for _, d in self.nodes() if not d.premises]

    def rules(self) -> set[Rule]:
        return {d.rule for _, d in self.nodes()}

    def depth(self) -> int:
        return 1 + max((p.depth() for p in self.premises), default=0)


@dataclass(frozen=True)
class CheckReport:
    accepted: bool
    path: str | None = None
    reason: Reason | None = None
    detail: str = field(default="", compare=False)

    def __bool__(self):
        return self.accepted

    def __str__(self):
        if self.accepted:
            return "ACCEPT"
        return f"REJECT {self.path} {self.reason.value}"


ACCEPT = CheckReport(True)


class _Reject(Exception):
    def __init__(self, reason: Reason, detail: str = ""):
        self.reason = reason
        self.detail = detail


# -- schemas ----------------------------------------------------------------

def _succ(s: Sequent) -> tuple[Item, ...]:
    return s.succedent


def _require(cond: bool, detail: str):
    if not cond:
        raise _Reject(Reason.SCHEMA_MISMATCH, detail)


def _visible(concl: Sequent, prems: Iterable[Sequent]):
    # the & equation admits no side formulas besides the active ones
    if len(concl.succedent) != 1 or any(len(p.succedent) != 1 for p in prems):
        raise _Reject(Reason.VISIBILITY_VIOLATION, "& admits no context beside the active formulas")


def _and_form(concl: Sequent, prems: list[Sequent]):
    _visible(concl, prems)
    (f,) = concl.succedent
    _require(isinstance(f, And), "conclusion is not an & formula")
    _require(prems[0].succedent == (f.left,) and prems[1].succedent == (f.right,),
             "premises are not the two conjuncts")


def _and_refl(concl: Sequent, prems: list[Sequent]):
    _visible(concl, prems)
    (f,) = prems[0].succedent
    _require(isinstance(f, And), "premise is not an & formula")
    _require(concl.succedent in ((f.left,), (f.right,)), "conclusion is not a conjunct of the premise")


def _split_at(whole: tuple[Item, ...], parts: tuple[Item, ...], cls) -> bool:
    """True if replacing one ``cls`` formula in ``whole`` by its two
    components gives ``parts``."""
    if len(parts) != len(whole) + 1:
        return False
    for i, f in enumerate(whole):
        if type(f) is cls and whole[:i] + (f.left, f.right) + whole[i + 1:] == parts:
            return True
    return False


def _par_form(concl: Sequent, prems: list[Sequent]):
    _require(_split_at(concl.succedent, prems[0].succedent, Par),
             "conclusion does not join two adjacent premise formulas with %")


def _par_refl(concl: Sequent, prems: list[Sequent]):
    _require(_split_at(prems[0].succedent, concl.succedent, Par),
             "conclusion does not split a % formula of the premise")


def _register(connective, link: MetaLink, forming: bool):
    def check(concl: Sequent, prems: list[Sequent]):
        (outer,) = _single(concl) if forming else _single(prems[0])
        (inner,) = _single(prems[0]) if forming else _single(concl)
        _require(type(outer) is connective, f"expected a {connective.symbol} formula")
        _require(inner == LinkedPair(outer.left, link, outer.right),
                 f"expected the {link.value} link between the same two formulas")
    return check


def _single(s: Sequent) -> tuple[Item]:
    _require(len(s.succedent) == 1, "expected a single succedent item")
    return s.succedent


def _superposed_pair(item: Item, link: MetaLink) -> tuple[Atom, Atom]:
    """Match (A & A') <link> (B & B') and return (A, B)."""
    _require(isinstance(item, LinkedPair) and item.link is link,
             f"expected a {link.value} linked pair")
    sides = []
    for f in (item.left, item.right):
        _require(isinstance(f, And) and isinstance(f.left, Atom) and f.right == dualize(f.left),
                 "linked formulas must have the shape X & X'")
        sides.append(f.left)
    return sides[0], sides[1]


def congr_premises(a: Atom, b: Atom) -> list[list[tuple[Atom, Atom]]]:
    """Admissible premise pairs for &congr: the outcomes of qubit 2 either
    follow (A,B / A',B') or oppose (A,B' / A',B) those of qubit 1."""
    a_, b_ = dualize(a), dualize(b)
    return [[(a, b), (a_, b_)], [(a, b_), (a_, b)]]


def cont_premises(a: Atom, b: Atom) -> list[tuple[Atom, Atom]]:
    a_, b_ = dualize(a), dualize(b)
    return [(a, b), (a, b_), (a_, b), (a_, b_)]


def _and_congr(concl: Sequent, prems: list[Sequent]):
    a, b = _superposed_pair(_single(concl)[0], MetaLink.MAX_ENT)
    got = [p.succedent for p in prems]
    _require(got in [[tuple(x) for x in pairs] for pairs in congr_premises(a, b)],
             "premises must be |- A, B and |- A', B' (or |- A, B' and |- A', B)")


def _and_congr_refl(concl: Sequent, prems: list[Sequent]):
    a, b = _superposed_pair(_single(prems[0])[0], MetaLink.MAX_ENT)
    allowed = {x for pairs in congr_premises(a, b) for x in pairs}
    _require(concl.succedent in allowed, "conclusion is not a correlated outcome pair")


def _and_cont(concl: Sequent, prems: list[Sequent]):
    a, b = _superposed_pair(_single(concl)[0], MetaLink.NON_ENT)
    _require([p.succedent for p in prems] == cont_premises(a, b),
             "premises must be |- A,B ; |- A,B' ; |- A',B ; |- A',B' in this order")


def _and_cont_refl(concl: Sequent, prems: list[Sequent]):
    a, b = _superposed_pair(_single(prems[0])[0], MetaLink.NON_ENT)
    _require(concl.succedent in cont_premises(a, b), "conclusion is not an outcome pair")


_SCHEMAS: dict[Rule, tuple[int, Callable[[Sequent, list[Sequent]], None]]] = {
    Rule.AND_FORM: (2, _and_form),
    Rule.AND_REFL: (1, _and_refl),
    Rule.PAR_FORM: (1, _par_form),
    Rule.PAR_REFL: (1, _par_refl),
    Rule.PAR0_FORM: (1, _register(Par0, MetaLink.NON_ENT, forming=True)),
    Rule.PAR0_REFL: (1, _register(Par0, MetaLink.NON_ENT, forming=False)),
    Rule.PAR1_FORM: (1, _register(Par1, MetaLink.MAX_ENT, forming=True)),
    Rule.PAR1_REFL: (1, _register(Par1, MetaLink.MAX_ENT, forming=False)),
    Rule.AND_CONGR: (2, _and_congr),
    Rule.AND_CONGR_REFL: (1, _and_congr_refl),
    Rule.AND_CONT: (4, _and_cont),
    Rule.AND_CONT_REFL: (1, _and_cont_refl),
}


def _check_node(d: Derivation, allowed: frozenset[Sequent]):
    if d.rule is Rule.PREMISE:
        if d.premises:
            raise _Reject(Reason.MALFORMED_LEAF, "premise leaves take no premises")
        if d.conclusion not in allowed:
            raise _Reject(Reason.UNKNOWN_PREMISE, f"undeclared premise {d.conclusion}")
        return
    arity, schema = _SCHEMAS[d.rule]
    if len(d.premises) != arity:
        raise _Reject(Reason.ARITY_MISMATCH, f"{d.rule.value} takes {arity} premise(s), got {len(d.premises)}")
    prems = [p.conclusion for p in d.premises]
    if any(p.context != d.conclusion.context for p in prems):
        raise _Reject(Reason.CONTEXT_MISMATCH, "the antecedent context must be carried unchanged")
    schema(d.conclusion, prems)


def _post_order(d: Derivation, path: str = "root") -> Iterator[tuple[str, Derivation]]:
    for i, p in enumerate(d.premises):
        yield from _post_order(p, f"{path}.{i}")
    yield path, d


def check(d: Derivation, allowed_premises: Iterable[Sequent]) -> CheckReport:
    """Accept ``d`` iff every node instantiates its rule schema and every leaf
    is a declared premise.

    Cut is looked for first, anywhere in the tree; otherwise nodes are checked
    leaves-first and the first failure is reported.
    """
    for path, node in d.nodes():
        if node.rule is Rule.CUT:
            return CheckReport(False, path, Reason.CUT_NOT_ADMISSIBLE, "cut is not admissible")
    allowed = frozenset(allowed_premises)
    for path, node in _post_order(d):
        try:
            _check_node(node, allowed)
        except _Reject as exc:
            return CheckReport(False, path, exc.reason, exc.detail)
    return ACCEPT


# -- derivation engines ------------------------------------------------------

def _leaf(s: Sequent) -> Derivation:
    return Derivation(s, Rule.PREMISE)


def _node(rule: Rule, *succedent: Item, premises=()) -> Derivation:
    return Derivation(Sequent((), succedent), rule, premises)


def _project(chain: Item, leaf: Derivation, index: int, count: int) -> Derivation:
    """Reflect a left-nested &-chain of ``count`` conjuncts down to conjunct ``index``."""
    steps = []
    f = chain
    n = count
    while n > 1:
        if index == n - 1:
            steps.append(f.right)
            break
        steps.append(f.left)
        f = f.left
        n -= 1
    d = leaf
    for g in steps:
        d = _node(Rule.AND_REFL, g, premises=(d,))
    return d


def _assemble(parts: list[Derivation]) -> Derivation:
    """Form the left-nested &-chain of the parts' single succedent formulas."""
    d = parts[0]
    for p in parts[1:]:
        (x,) = d.conclusion.succedent
        (y,) = p.conclusion.succedent
        d = _node(Rule.AND_FORM, And(x, y), premises=(d, p))
    return d


def outcome_pairs_entangled(a: Atom, b: Atom, anti: bool = False) -> list[tuple[Atom, Atom]]:
    return congr_premises(a, b)[1 if anti else 0]


def external_chain(pairs: list[tuple[Atom, Atom]]):
    return and_chain(Par(x, y) for x, y in pairs)


def _derive(pairs, internal, link_rule: Rule, form: Rule, refl: Rule, direction: str) -> Derivation:
    external = external_chain(pairs)
    if direction == "lr":
        leaf = _leaf(Sequent((), (external,)))
        branches = []
        for i, (x, y) in enumerate(pairs):
            d = _project(external, leaf, i, len(pairs))
            branches.append(_node(Rule.PAR_REFL, x, y, premises=(d,)))
        linked = LinkedPair(internal.left, _LINK_OF[type(internal)], internal.right)
        d = _node(link_rule, linked, premises=tuple(branches))
        return _node(form, internal, premises=(d,))
    if direction == "rl":
        leaf = _leaf(Sequent((), (internal,)))
        linked = LinkedPair(internal.left, _LINK_OF[type(internal)], internal.right)
        parts = []
        for x, y in pairs:
            d = _node(refl, linked, premises=(leaf,))
            d = _node(_REFL_OF[link_rule], x, y, premises=(d,))
            parts.append(_node(Rule.PAR_FORM, Par(x, y), premises=(d,)))
        return _assemble(parts)
    raise ValueError(f"direction must be 'lr' or 'rl', got {direction!r}")


_LINK_OF = {Par0: MetaLink.NON_ENT, Par1: MetaLink.MAX_ENT}
_REFL_OF = {Rule.AND_CONGR: Rule.AND_CONGR_REFL, Rule.AND_CONT: Rule.AND_CONT_REFL}


def derive_entangled_equivalence(a: Atom, b: Atom, direction: str = "lr", anti: bool = False) -> Derivation:
    """|- (A % B) & (A' % B')  <=>  |- (A & A') %1 (B & B').

    ``lr`` starts from the external superposition, ``rl`` from the internal
    judgement.  With ``anti`` the outcome pairs are (A, B') and (A', B), the
    support of the phi Bell states.
    """
    pairs = outcome_pairs_entangled(a, b, anti)
    internal = Par1(superposition(a), superposition(b))
    return _derive(pairs, internal, Rule.AND_CONGR, Rule.PAR1_FORM, Rule.PAR1_REFL, direction)


def derive_separable_equivalence(a: Atom, b: Atom, direction: str = "lr") -> Derivation:
    """|- (A % B) & (A % B') & (A' % B) & (A' % B')  <=>  |- (A & A') %0 (B & B')."""
    internal = Par0(superposition(a), superposition(b))
    return _derive(cont_premises(a, b), internal, Rule.AND_CONT, Rule.PAR0_FORM, Rule.PAR0_REFL, direction)


def derive_one_qubit(a: Atom) -> Derivation:
    """Disassemble |- A & A' into |- A and |- A', then reassemble."""
    f = superposition(a)
    leaf = _leaf(Sequent((), (f,)))
    parts = [_node(Rule.AND_REFL, g, premises=(leaf,)) for g in (f.left, f.right)]
    return _assemble(parts)


def endpoints(d: Derivation) -> tuple[set[Sequent], Sequent]:
    """(distinct leaf conclusions, root conclusion)"""
    return {leaf.conclusion for leaf in d.leaves()}, d.conclusion


# -- derivation text format ---------------------------------------------------

def print_derivation(d: Derivation, indent: int = 0) -> str:
    pad = "  " * indent
    head = f"{pad}({d.rule.value} concl: {print_sequent(d.conclusion)}"
    if not d.premises:
        return head + ")"
    body = "\n".join(f"{pad}  prem:\n{print_derivation(p, indent + 2)}" for p in d.premises)
    return f"{head}\n{body})"


_RULES_BY_TOKEN = {r.value: r for r in Rule}


def _read_tree(ts: TokenStream) -> Derivation:
    ts.expect("lparen")
    tok = ts.expect("word")
    rule = _RULES_BY_TOKEN.get(tok.value)
    if rule is None:
        raise ParseError(f"unknown rule {tok.value!r}", tok.pos, ts.text)
    ts.expect("keyword", "concl:")
    concl = read_sequent(ts)
    premises = []
    while ts.peek.kind == "keyword" and ts.peek.value == "prem:":
        ts.next()
        premises.append(_read_tree(ts))
    ts.expect("rparen")
    return Derivation(concl, rule, tuple(premises))


def parse_derivation(text: str) -> Derivation:
    ts = TokenStream(text)
    d = _read_tree(ts)
    if ts.peek.kind != "eof":
        ts.error(f"unexpected trailing input {ts.peek.value!r}")
    return d
