"""Command-line entry point: ``latlevel <subcommand> --input FILE``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .config import limits_from_env
from .dual_ideal import theorem_generators
from .errors import InputFormatError, LatLevelError, UnknownName
from .formats import load
from .level import a_invariant, h_vector, is_level, render_x, s_complex, trimmed
from .oracle import cross_check, realizability_scan
from .poset import bits

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt_tuple(seq) -> str:
    return "(" + ", ".join(str(v) for v in seq) + ")"


def _fmt_set(mask: int) -> str:
    return "{" + ",".join(str(p + 1) for p in bits(mask)) + "}"


def _jirr(L) -> list[str]:
    return [L.elements[j] for j in L.joinirr]


def _load(args):
    if not args.input:
        raise UsageError("--input FILE is required")
    path = Path(args.input)
    if not path.is_file():
        raise UsageError(f"no such input file: {path}")
    try:
        return load(path, args.format, args.limits)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None
    except InputFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _warn_if_forced(args, L) -> None:
    if args.force and not L.is_meet_distributive():
        print("WARNING: input is not meet-distributive; results are not certified", file=sys.stderr)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


# subcommands --------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        L = _load(args)
    except LatLevelError as exc:
        payload = {"valid": False, "join_irreducibles": [], "meet_distributive": False, "witness": None, "error": str(exc)}
        _emit(args, payload, ["valid: false", f"error: {exc}"])
        return EXIT_INVALID
    ok, witness = L.meet_distributivity()
    payload = {"valid": True, "join_irreducibles": _jirr(L), "meet_distributive": ok, "witness": witness}
    _emit(args, payload, [
        "valid: true",
        "join_irreducibles: " + ", ".join(_jirr(L)),
        f"meet_distributive: {str(ok).lower()}",
        f"witness: {witness if witness is not None else 'none'}",
    ])
    return EXIT_OK


def cmd_dual_ideal(args) -> int:
    L = _load(args)
    gens = theorem_generators(L)
    payload = {"join_irreducibles": _jirr(L), "generators": [g.to_json() for g in gens]}
    lines = ["join_irreducibles: " + " ".join(f"{k + 1}={e}" for k, e in enumerate(_jirr(L)))]
    lines += [f"{g.family:<5} {g.render()}" for g in gens]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_hvector(args) -> int:
    L = _load(args)
    _warn_if_forced(args, L)
    h = h_vector(L, force=args.force)
    a = a_invariant(L, force=True)
    _emit(args, {"h": list(h), "n": L.n, "a_invariant": a}, [f"h = {_fmt_tuple(trimmed(h))}", f"n = {L.n}", f"a-invariant = {a}"])
    return EXIT_OK


def cmd_scomplex(args) -> int:
    L = _load(args)
    _warn_if_forced(args, L)
    S = s_complex(L, force=args.force)
    payload = {
        "faces": {L.elements[a]: [p + 1 for p in bits(s)] for a, s in enumerate(S.faces)},
        "facets": [[p + 1 for p in bits(f)] for f in S.facets],
        "pure": S.is_pure(),
    }
    lines = [f"S({L.elements[a]}) = {_fmt_set(s)}" for a, s in enumerate(S.faces)]
    lines.append("facets: " + " ".join(_fmt_set(f) for f in S.facets))
    lines.append(f"pure: {'yes' if S.is_pure() else 'no'}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_level(args) -> int:
    L = _load(args)
    _warn_if_forced(args, L)
    report = is_level(L, force=args.force)
    lines = [
        f"h = {_fmt_tuple(trimmed(report.h))}",
        f"f_dual = {_fmt_tuple(report.f_dual)}",
        f"a-invariant = {report.a_invariant}",
        "S-facets: " + " ".join(_fmt_set(f) for f in report.s_facets),
        f"LEVEL: {'yes' if report.is_level else 'no'}",
    ]
    _emit(args, report.to_json(), lines)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    L = _load(args)
    report = cross_check(L, args.limits)
    lines = []
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        extra = f"  ({c.note})" if c.note else ""
        if not c.passed:
            extra += f"  counterexample: {json.dumps(c.counterexample)}"
        lines.append(f"{status} {c.name}{extra}")
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_closure(args) -> int:
    L = _load(args)
    J = L.distributive_closure(args.limits)
    doc = J.to_json()
    lines = [f"J(P) over {L.n} join-irreducibles: {len(J)} elements", "elements: " + " ".join(J.elements)]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_scan(args) -> int:
    found = realizability_scan(args.n, args.limits)
    payload = {"n": args.n, "h_vectors": [list(h) for h in found]}
    _emit(args, payload, [_fmt_tuple(h) for h in found])
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.list:
        print("\n".join(corpus.CORPUS_NAMES))
        return EXIT_OK
    if not args.name:
        raise UsageError("corpus needs a NAME or --list")
    try:
        doc = corpus.emit(args.name)
    except UnknownName as exc:
        raise UsageError(str(exc)) from None
    text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "validate": (cmd_validate, "check the meet-semilattice axioms and meet-distributivity"),
    "dual-ideal": (cmd_dual_ideal, "minimal generators of the Alexander dual's Stanley-Reisner ideal"),
    "hvector": (cmd_hvector, "h-vector of the Alexander dual"),
    "scomplex": (cmd_scomplex, "the complex of the sets S(a)"),
    "level": (cmd_level, "levelness verdict with h, f and S-facets"),
    "oracle-check": (cmd_oracle_check, "cross-check every formula against brute force"),
    "closure": (cmd_closure, "distributive closure J(P)"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE")
    common.add_argument("--format", choices=["covers", "sets"])
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--force", action="store_true", help="run on inputs that are not meet-distributive")
    common.add_argument("--max-ground", type=int, metavar="N")

    parser = argparse.ArgumentParser(prog="latlevel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
    p = sub.add_parser("scan", parents=[common], help="h-vectors of J(P) over all posets of size n")
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=cmd_scan)
    p = sub.add_parser("corpus", parents=[common], help="write a bundled example as JSON")
    p.add_argument("name", nargs="?")
    p.add_argument("--output", metavar="FILE")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.limits = limits_from_env(args.max_ground)
    except ValueError as exc:
        print(f"latlevel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"latlevel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LatLevelError as exc:
        print(f"latlevel: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
