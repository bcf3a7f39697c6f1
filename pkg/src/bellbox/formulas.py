"""Object language of the internal observer.

Surface syntax (ASCII):

    A'      dual atom (A-perp)
    &       additive conjunction (superposition)
    %       par, the register comma turned into a connective
    %0 %1   register connectives for zero / maximal correlation
    ~0 ~1   metalinguistic links (non-entangled / maximally entangled)
    |-      turnstile

Grammar::

    sequent     := [itemlist] "|-" itemlist
    itemlist    := item ("," item)*
    item        := formula [("~0" | "~1") formula]
    formula     := primary (binop primary)*          left-associative
    primary     := atom | "(" formula ")"
    binop       := "&" | "%" | "%0" | "%1"
    atom        := IDENT ["'"]      IDENT := [A-Z][A-Za-z0-9]*

Links only appear as whole sequent items (``LinkedPair``); they never nest
inside a formula.  Duals only apply to atoms.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import ClassVar, Iterator, Union

from bellbox.errors import ParseError


@dataclass(frozen=True)
class Atom:
    name: str
    dual: bool = False

    def __str__(self):
        return self.name + ("'" if self.dual else "")


def dualize(a: Atom) -> Atom:
    return Atom(a.name, not a.dual)


@dataclass(frozen=True)
class Binary:
    left: Formula
    right: Formula
    symbol: ClassVar[str] = "?"

    def __str__(self):
        return print_formula(self)


class And(Binary):
    symbol = "&"


class Par(Binary):
    symbol = "%"


class Par0(Binary):
    symbol = "%0"


class Par1(Binary):
    symbol = "%1"


Formula = Union[Atom, And, Par, Par0, Par1]
CONNECTIVES = {cls.symbol: cls for cls in (And, Par, Par0, Par1)}


class MetaLink(enum.Enum):
    COMMA = ","
    NON_ENT = "~0"
    MAX_ENT = "~1"


@dataclass(frozen=True)
class LinkedPair:
    left: Formula
    link: MetaLink
    right: Formula

    def __str__(self):
        return f"{_wrap(self.left)} {self.link.value} {_wrap(self.right)}"


Item = Union[Atom, Binary, LinkedPair]


@dataclass(frozen=True)
class Sequent:
    context: tuple[Item, ...]
    succedent: tuple[Item, ...]

    def __post_init__(self):
        object.__setattr__(self, "context", tuple(self.context))
        object.__setattr__(self, "succedent", tuple(self.succedent))
        if not self.succedent:
            raise ValueError("a sequent needs a non-empty succedent")

    def __str__(self):
        return print_sequent(self)


def sequent(*succedent: Item, context=()) -> Sequent:
    return Sequent(tuple(context), succedent)


def and_chain(formulas) -> Formula:
    """Left-nested & over a non-empty sequence: ((f0 & f1) & f2) ..."""
    it = iter(formulas)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("and_chain of nothing") from None
    for f in it:
        acc = And(acc, f)
    return acc


def superposition(a: Atom) -> And:
    """A & A'"""
    return And(a, dualize(a))


def atoms_of(x: Item | Sequent) -> Iterator[Atom]:
    if isinstance(x, Atom):
        yield x
    elif isinstance(x, (Binary, LinkedPair)):
        yield from atoms_of(x.left)
        yield from atoms_of(x.right)
    elif isinstance(x, Sequent):
        for item in x.context + x.succedent:
            yield from atoms_of(item)


# -- printing ---------------------------------------------------------------

def _wrap(f: Formula) -> str:
    return str(f) if isinstance(f, Atom) else f"({print_formula(f)})"


def print_formula(f: Formula) -> str:
    if isinstance(f, Atom):
        return str(f)
    return f"{_wrap(f.left)} {f.symbol} {_wrap(f.right)}"


def print_item(x: Item) -> str:
    return str(x) if isinstance(x, LinkedPair) else print_formula(x)


def print_sequent(s: Sequent) -> str:
    succ = ", ".join(print_item(x) for x in s.succedent)
    if s.context:
        return ", ".join(print_item(x) for x in s.context) + " |- " + succ
    return "|- " + succ


# -- lexing -----------------------------------------------------------------

_UNICODE = {
    "⊢": "|-",
    "⊥": "'",
    "′": "'",
    "⊘₀": "%0",
    "⊘₁": "%1",
    "⊘": "%",
    "≍": "~0",
    "⋈": "~1",
}

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<turnstile>\|-)
  | (?P<op>%[01]?|&)
  | (?P<link>~[01])
  | (?P<prime>')
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<comma>,)
  | (?P<keyword>concl:|prem:)
  | (?P<ident>[A-Z][A-Za-z0-9]*)
  | (?P<word>[a-z][A-Za-z0-9]*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    pos: int


def translate_unicode(text: str) -> str:
    for k, v in _UNICODE.items():
        text = text.replace(k, v)
    return text


def tokenize(text: str) -> list[Token]:
    text = translate_unicode(text)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str, value: str | None = None) -> Token:
        tok = self.peek
        if tok.kind != kind or (value is not None and tok.value != value):
            self.error(f"expected {value or kind}, found {tok.value or 'end of input'!r}")
        return self.next()

    def error(self, message: str):
        raise ParseError(message, self.peek.pos, self.text)


# -- parsing ----------------------------------------------------------------

def _primary(ts: TokenStream) -> Formula:
    tok = ts.peek
    if tok.kind == "ident":
        ts.next()
        dual = False
        if ts.peek.kind == "prime":
            ts.next()
            dual = True
        return Atom(tok.value, dual)
    if tok.kind == "lparen":
        ts.next()
        f = _formula(ts)
        ts.expect("rparen")
        return f
    ts.error(f"expected an atom or '(', found {tok.value or 'end of input'!r}")


def _formula(ts: TokenStream) -> Formula:
    f = _primary(ts)
    while ts.peek.kind == "op":
        cls = CONNECTIVES[ts.next().value]
        f = cls(f, _primary(ts))
    return f


def _item(ts: TokenStream) -> Item:
    f = _formula(ts)
    if ts.peek.kind == "link":
        link = MetaLink(ts.next().value)
        return LinkedPair(f, link, _formula(ts))
    return f


def _itemlist(ts: TokenStream) -> list[Item]:
    items = [_item(ts)]
    while ts.peek.kind == "comma":
        ts.next()
        items.append(_item(ts))
    return items


def read_sequent(ts: TokenStream) -> Sequent:
    """Parse a sequent from the stream, leaving the following token unread."""
    context: list[Item] = []
    if ts.peek.kind != "turnstile":
        context = _itemlist(ts)
    ts.expect("turnstile")
    return Sequent(tuple(context), tuple(_itemlist(ts)))


def _finish(ts: TokenStream):
    if ts.peek.kind != "eof":
        ts.error(f"unexpected trailing input {ts.peek.value!r}")


def parse_formula(text: str) -> Formula:
    ts = TokenStream(text)
    f = _formula(ts)
    _finish(ts)
    return f


def parse_item(text: str) -> Item:
    ts = TokenStream(text)
    x = _item(ts)
    _finish(ts)
    return x


def parse_sequent(text: str) -> Sequent:
    ts = TokenStream(text)
    s = read_sequent(ts)
    _finish(ts)
    return s
