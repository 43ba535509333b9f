"""Command-line interface.

Exit status: 0 when an answer exists (accepted / explained), 1 when the
answer is negative or empty, 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .aaf import AbductiveAF
from .af import Mode, accepts, complete_extensions, fmt_set, grounded_extension
from .alp import Route, build_aaf, explain_query, explain_query_dialogues
from .dialogue import explained_by, search_credulous, search_skeptical
from .errors import AbdargError, UnknownArgument
from .instantiation import instantiate
from .lp import consequences

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from None


def _witness_blocks(M: AbductiveAF, witnesses) -> list[str]:
    out = []
    for w in witnesses:
        out.append(f"% explains {fmt_set(w.explained)}")
        out.append(formats.render_trace(M, w.dialogue).rstrip("\n"))
    return out


def cmd_solve(args, out) -> int:
    F = formats.parse_af(_read(args.af), args.af)
    mode = Mode(args.mode)
    if args.arg is not None:
        if args.arg not in F.arguments:
            raise UnknownArgument(args.arg)
        if args.semantics == "grounded":
            ok = args.arg in grounded_extension(F)
        else:
            ok = accepts(F, args.arg, mode)
        print("YES" if ok else "NO", file=out)
        return EXIT_OK if ok else EXIT_NEGATIVE
    if args.semantics == "grounded":
        print(fmt_set(grounded_extension(F)), file=out)
    else:
        for E in complete_extensions(F):
            print(fmt_set(E), file=out)
    return EXIT_OK


def cmd_explain(args, out) -> int:
    M = formats.parse_aaf(_read(args.aaf), args.aaf)
    X = frozenset(x.strip() for x in args.observation.split(",") if x.strip())
    mode = Mode(args.mode)
    search = search_skeptical if mode is Mode.SKEPTICAL else search_credulous
    witnesses = search(M, X)
    names = explained_by(witnesses)
    if args.format == "json":
        doc = {"mode": mode.value, "observation": sorted(X),
               "explanations": [formats.explanation_json(M, n, witnesses) for n in names]}
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(", ".join(names) if names else "no explanation", file=out)
        if args.dialogue:
            for line in _witness_blocks(M, witnesses):
                print(line, file=out)
    return EXIT_OK if names else EXIT_NEGATIVE


def cmd_consequences(args, out) -> int:
    P = formats.parse_lp(_read(args.lp), args.lp)
    found = consequences(P, Mode(args.mode))
    print(fmt_set(found), file=out)
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_instantiate(args, out) -> int:
    P = formats.parse_lp(_read(args.lp), args.lp)
    inst = instantiate(P)
    text = formats.serialize_af(inst.framework)
    table = inst.render_table()
    if table:
        text += "".join(f"% {line}\n" for line in table.split("\n"))
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_abduce(args, out) -> int:
    alp = formats.parse_alp(_read(args.alp), args.alp)
    mode = Mode(args.mode)
    via = Route(args.via)
    if args.dialogue and via is not Route.AAF:
        raise InputError("--dialogue requires --via aaf")
    if via is Route.AAF:
        hs, witnesses = explain_query_dialogues(alp, args.query, mode)
    else:
        hs, witnesses = explain_query(alp, args.query, mode, via), []
    if args.format == "json":
        built = build_aaf(alp)
        names = [n for n in built.aaf.members if any(h in hs for h in built.provenance[n])]
        doc = {"mode": mode.value, "query": args.query,
               "hypotheses": [formats.hypothesis_json(h) for h in hs],
               "explanations": [formats.explanation_json(built.aaf, n, witnesses, built.provenance[n])
                                for n in names]}
        print(json.dumps(doc, indent=2), file=out)
    else:
        for h in hs:
            print(h, file=out)
        if not hs:
            print("no explanation", file=out)
        if args.dialogue:
            built = build_aaf(alp)
            for line in _witness_blocks(built.aaf, witnesses):
                print(line, file=out)
    return EXIT_OK if hs else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abdarg", description="Abduction in argumentation frameworks.")
    sub = p.add_subparsers(dest="command", required=True)
    modes = [m.value for m in Mode]

    s = sub.add_parser("solve", help="complete/grounded extensions and acceptance of an apx framework")
    s.add_argument("--af", required=True)
    s.add_argument("--semantics", choices=["complete", "grounded"], required=True)
    s.add_argument("--arg")
    s.add_argument("--mode", choices=modes, default="skeptical")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("explain", help="abducible frameworks explaining an observation, via dialogue search")
    s.add_argument("--aaf", required=True)
    s.add_argument("--observation", required=True, help="comma-separated argument ids")
    s.add_argument("--mode", choices=modes, required=True)
    s.add_argument("--dialogue", action="store_true", help="print witness dialogues")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_explain)

    s = sub.add_parser("consequences", help="skeptical/credulous consequences under partial stable models")
    s.add_argument("--lp", required=True)
    s.add_argument("--mode", choices=modes, required=True)
    s.set_defaults(func=cmd_consequences)

    s = sub.add_parser("instantiate", help="instantiated framework (apx plus argument table)")
    s.add_argument("--lp", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_instantiate)

    s = sub.add_parser("abduce", help="hypotheses explaining a query of an abductive logic program")
    s.add_argument("--alp", required=True)
    s.add_argument("--query", required=True)
    s.add_argument("--mode", choices=modes, required=True)
    s.add_argument("--via", choices=[r.value for r in Route], default="direct")
    s.add_argument("--dialogue", action="store_true")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_abduce)
    return p


def run_command(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (AbdargError, InputError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
