"""Text literals for states and mirrors, shared by the CLI and scripts.

    bell:psi+ | bell:psi- | bell:phi+ | bell:phi-
    basis:00 | basis:01 | basis:10 | basis:11        (also basis:0, basis:1)
    vec:(re,im);(re,im);(re,im);(re,im)             basis order 00,01,10,11
    vec2:(re,im);(re,im)
    mirror1:phi=<rad>,alpha=<rad>
    mirror2:phi=<rad>,gamma=<rad>,delta=<rad>
"""

from __future__ import annotations

import re

from bellbox.errors import ParseError
from bellbox.quantum_core import (
    BASIS_1Q,
    BASIS_2Q,
    Mirror1Q,
    Mirror2Q,
    Register1Q,
    Register2Q,
    make_bell,
)

_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_PAIR = re.compile(rf"\(\s*({_NUM})\s*,\s*({_NUM})\s*\)")


def parse_state(text: str) -> Register1Q | Register2Q:
    kind, sep, body = text.strip().partition(":")
    if not sep:
        raise ParseError(f"state literal {text!r} lacks a 'kind:' prefix", 0, text)
    kind = kind.strip()
    body = body.strip()
    if kind == "bell":
        return make_bell(body)
    if kind == "basis":
        basis = BASIS_2Q if len(body) == 2 else BASIS_1Q
        if body not in basis:
            raise ParseError(f"unknown basis label {body!r}", len(kind) + 1, text)
        amps = [1 if label == body else 0 for label in basis]
        return Register2Q(*amps) if len(amps) == 4 else Register1Q(*amps)
    if kind in ("vec", "vec2"):
        amps = _parse_pairs(body, text, offset=len(kind) + 1)
        want = 4 if kind == "vec" else 2
        if len(amps) != want:
            raise ParseError(f"{kind} literal needs {want} amplitudes, got {len(amps)}", 0, text)
        return Register2Q(*amps) if want == 4 else Register1Q(*amps)
    raise ParseError(f"unknown state kind {kind!r}", 0, text)


def _parse_pairs(body: str, text: str, offset: int) -> list[complex]:
    amps = []
    for i, chunk in enumerate(body.split(";")):
        m = _PAIR.fullmatch(chunk.strip())
        if m is None:
            raise ParseError(f"amplitude #{i} {chunk.strip()!r} is not '(re,im)'", offset, text)
        amps.append(complex(float(m.group(1)), float(m.group(2))))
    return amps


def parse_mirror(text: str) -> Mirror1Q | Mirror2Q:
    kind, sep, body = text.strip().partition(":")
    if not sep or kind not in ("mirror1", "mirror2"):
        raise ParseError(f"mirror literal {text!r} must start with mirror1: or mirror2:", 0, text)
    allowed = ("phi", "alpha") if kind == "mirror1" else ("phi", "gamma", "delta")
    angles = {}
    for item in filter(None, (s.strip() for s in body.split(","))):
        key, eq, value = item.partition("=")
        key = key.strip()
        if not eq or key not in allowed:
            raise ParseError(f"bad mirror parameter {item!r}, allowed: {', '.join(allowed)}", 0, text)
        if key in angles:
            raise ParseError(f"duplicate mirror parameter {key!r}", 0, text)
        try:
            angles[key] = float(value)
        except ValueError:
            raise ParseError(f"angle {value.strip()!r} is not a number", 0, text) from None
    cls = Mirror1Q if kind == "mirror1" else Mirror2Q
    return cls.from_angles(**angles)


def format_state(s: Register1Q | Register2Q) -> str:
    kind = "vec" if isinstance(s, Register2Q) else "vec2"
    return kind + ":" + ";".join(f"({a.real + 0.0:.12g},{a.imag + 0.0:.12g})" for a in s.amplitudes)
