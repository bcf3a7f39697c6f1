"""Batch command-line front end.

Exit codes: 0 success, 1 domain error (normalization, intermediate regime,
rejected derivation), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from bellbox import bridge, calculus
from bellbox.errors import BellboxError, IntermediateRegime, ParseError
from bellbox.formulas import Atom, parse_formula, parse_sequent, print_formula, print_sequent
from bellbox.literals import format_state, parse_mirror, parse_state
from bellbox.quantum_core import (
    Mirror1Q,
    Mirror2Q,
    Register1Q,
    Register2Q,
    apply_mirror_1q,
    apply_mirror_2q,
    classify,
)


class UsageError(Exception):
    pass


def _atoms(text: str) -> tuple[str, str]:
    names = tuple(n.strip() for n in text.split(","))
    if len(names) != 2 or not all(names):
        raise UsageError(f"--atoms needs two comma-separated names, got {text!r}")
    for n in names:
        parse_formula(n)  # validates IDENT syntax
        if n.endswith("'"):
            raise UsageError(f"atom name {n!r} must not carry a dual mark")
    return names


def _state(args) -> Register1Q | Register2Q:
    if args.state is None:
        raise UsageError("--state is required")
    return parse_state(args.state)


def _two_qubit(args) -> Register2Q:
    s = _state(args)
    if not isinstance(s, Register2Q):
        raise UsageError(f"{args.command} needs a two-qubit state")
    return s


def _support(s):
    return [[lab, p] for lab, p in bridge.support(s)]


def cmd_simulate(args):
    s = _state(args)
    if args.mirror is None:
        raise UsageError("--mirror is required")
    m = parse_mirror(args.mirror)
    if isinstance(s, Register1Q) and isinstance(m, Mirror1Q):
        out = apply_mirror_1q(m, s)
    elif isinstance(s, Register2Q) and isinstance(m, Mirror2Q):
        out = apply_mirror_2q(m, s)
    else:
        raise UsageError("mirror1 acts on vec2/basis:0|1 states, mirror2 on two-qubit states")
    text = "\n".join([format_state(out)] + [f"{lab} {p:.12g}" for lab, p in bridge.support(out)])
    return text, {"result": format_state(out), "support": _support(out)}


def cmd_classify(args):
    s = _two_qubit(args)
    c = classify(s)
    text = f"regime: {c}\ndegree: {c.degree:.12g}"
    return text, {"result": c.degree, "regime": c.tag.value, "support": _support(s)}


def cmd_judge(args):
    s = _state(args)
    if isinstance(s, Register1Q):
        j = bridge.judge_1q(s, args.atoms[0])
    else:
        j = bridge.judge_2q(s, args.atoms)
    regime = None if j.regime is None else str(j.regime)
    return j.render(), {
        "result": print_sequent(j.sequent),
        "regime": regime,
        "support": [[lab, p] for lab, p in j.support],
    }


def cmd_outcomes(args):
    s = _two_qubit(args)
    seqs = [print_sequent(x) for x in bridge.external_outcomes(s, args.atoms)]
    return "\n".join(seqs), {"result": seqs, "support": _support(s)}


def cmd_superpose(args):
    s = _two_qubit(args)
    f = print_formula(bridge.superposed_external(s, args.atoms))
    return f, {"result": f, "support": _support(s)}


def cmd_verify(args):
    s = _two_qubit(args)
    report = bridge.verify_equivalence(s, args.atoms)
    return str(report), {"result": str(report), "regime": str(classify(s)), "support": _support(s)}, report


def cmd_check(args):
    if args.file is None:
        raise UsageError("--file is required")
    d = calculus.parse_derivation(Path(args.file).read_text(encoding="utf-8"))
    premises = [parse_sequent(p) for p in args.premise]
    report = calculus.check(d, premises)
    return str(report), {"result": str(report)}, report


def cmd_derive(args):
    a, b = (Atom(n) for n in args.atoms)
    if args.state is not None:
        s = _two_qubit(args)
        d = bridge.derivations_for(s, args.atoms, args.direction)
    elif args.kind == "entangled":
        d = calculus.derive_entangled_equivalence(a, b, args.direction, anti=args.anti)
    elif args.kind == "separable":
        d = calculus.derive_separable_equivalence(a, b, args.direction)
    elif args.kind == "one-qubit":
        d = calculus.derive_one_qubit(a)
    else:
        raise UsageError("derive needs --kind or --state")
    text = calculus.print_derivation(d)
    return text, {"result": text}


def cmd_parse(args):
    if args.file is not None:
        text = Path(args.file).read_text(encoding="utf-8")
    elif args.text is not None:
        text = args.text
    else:
        raise UsageError("parse needs TEXT or --file")
    kind = args.kind
    if kind == "auto":
        stripped = text.lstrip()
        if stripped.startswith("(") and stripped[1:].lstrip()[:1].islower():
            kind = "derivation"
        elif "|-" in text or "⊢" in text:
            kind = "sequent"
        else:
            kind = "formula"
    if kind == "derivation":
        out = calculus.print_derivation(calculus.parse_derivation(text))
    elif kind == "sequent":
        out = print_sequent(parse_sequent(text))
    else:
        out = print_formula(parse_formula(text))
    return out, {"result": out}


COMMANDS = {
    "simulate": cmd_simulate,
    "classify": cmd_classify,
    "judge": cmd_judge,
    "outcomes": cmd_outcomes,
    "superpose": cmd_superpose,
    "verify": cmd_verify,
    "check": cmd_check,
    "derive": cmd_derive,
    "parse": cmd_parse,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bellbox", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--state", help="state literal, e.g. bell:psi+ or vec:(1,0);(0,0);(0,0);(0,0)")
        p.add_argument("--json", action="store_true", help="machine-readable envelope")
        p.add_argument("--atoms", default="A,B", help="atom names for qubit 1 and qubit 2")
        if name == "simulate":
            p.add_argument("--mirror", help="mirror1:phi=..,alpha=.. or mirror2:phi=..,gamma=..,delta=..")
        if name in ("check", "parse"):
            p.add_argument("--file", help="derivation file")
        if name == "check":
            p.add_argument("--premise", action="append", default=[], help="allowed premise sequent")
        if name == "derive":
            p.add_argument("--kind", choices=["entangled", "separable", "one-qubit"])
            p.add_argument("--direction", choices=["lr", "rl"], default="lr")
            p.add_argument("--anti", action="store_true", help="entangled outcome pairs (A,B'),(A',B)")
        if name == "parse":
            p.add_argument("text", nargs="?")
            p.add_argument("--as", dest="kind", choices=["auto", "formula", "sequent", "derivation"],
                           default="auto")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.atoms = _atoms(args.atoms)
        result = COMMANDS[args.command](args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except IntermediateRegime as exc:
        print(f"error: {exc}", file=stderr)
        if args.json:
            envelope = {"command": args.command, "input": _inputs(args), "result": None,
                        "regime": f"intermediate({exc.degree:.12g})", "support": None,
                        "error": type(exc).__name__}
            print(json.dumps(envelope, indent=2, sort_keys=True), file=stdout)
        return 1
    except BellboxError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1

    text, payload, *report = result
    if args.json:
        envelope = {"command": args.command, "input": _inputs(args), "result": None,
                    "regime": None, "support": None}
        envelope.update(payload)
        print(json.dumps(envelope, indent=2, sort_keys=True), file=stdout)
    else:
        print(text, file=stdout)
    if report and not report[0]:
        if report[0].detail:
            print(f"reason: {report[0].detail}", file=stderr)
        return 1
    return 0


def _inputs(args) -> dict:
    keys = ("state", "mirror", "file", "premise", "direction", "kind", "anti", "text")
    out = {k: getattr(args, k) for k in keys if getattr(args, k, None) not in (None, [], False)}
    out["atoms"] = list(args.atoms)
    return out


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
