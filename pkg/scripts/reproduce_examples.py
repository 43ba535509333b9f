#!/usr/bin/env python3
"""Print the worked examples: the four-member AAF and its explanations, the three
dialogue listings, the partial stable models of the running program and its
instantiated AAF."""
from pathlib import Path

from abdarg.af import Mode, complete_extensions, fmt_set, grounded_extension
from abdarg.aaf import all_explanations
from abdarg.alp import Hypothesis, Route, apply, build_aaf, explain_query
from abdarg.dialogue import (Dialogue, OppAttack, OppOk, ProDefence, ProNegation, ProWin,
                             search_credulous, search_skeptical, validate_credulous,
                             validate_skeptical)
from abdarg.formats import parse_aaf, parse_alp, render_trace
from abdarg.instantiation import instantiate
from abdarg.lp import partial_stable_models

DATA = Path(__file__).resolve().parent.parent / "data"

LISTINGS = [
    ("skeptical, G1", validate_skeptical, (
        OppAttack("c", "b"), ProDefence("e", "c"), OppOk(), OppAttack("a", "b"),
        ProDefence("e", "a"), OppOk(), OppOk(), ProWin())),
    ("skeptical, G3", validate_skeptical, (
        OppAttack("c", "b"), ProDefence("e", "c"), OppOk(), OppAttack("a", "b"),
        ProNegation("a", "b"), OppOk(), ProWin())),
    ("credulous, G2 and G3", validate_credulous, (
        OppAttack("c", "b"), ProDefence("b", "c"), OppAttack("a", "b"),
        ProNegation("a", "b"), OppOk(), ProWin())),
]


def section(title):
    print(f"\n== {title}")


def main():
    M = parse_aaf((DATA / "running.aaf").read_text())
    section("abducible frameworks")
    for name, F in M.members.items():
        exts = " ".join(fmt_set(E) for E in complete_extensions(F))
        print(f"{name:<3} grounded {fmt_set(grounded_extension(F)):<16} complete {exts}")

    section("explanations of {b}")
    for mode in Mode:
        print(f"{mode.value:<10} {', '.join(all_explanations(M, {'b'}, mode))}")

    section("dialogue listings")
    for title, validate, moves in LISTINGS:
        D = Dialogue(moves, "b")
        print(f"-- {title}: final state {fmt_set(validate(M, D, {'b'}))}")
        print(render_trace(M, D), end="")

    section("searched witnesses for {b}")
    for label, search in (("skeptical", search_skeptical), ("credulous", search_credulous)):
        for w in search(M, {"b"}):
            print(f"-- {label} witness for {fmt_set(w.explained)}")
            print(render_trace(M, w.dialogue), end="")

    alp = parse_alp((DATA / "running.alp").read_text())
    section("partial stable models")
    for label, h in (("P", Hypothesis()), ("P + s", Hypothesis(frozenset("s"))),
                     ("P - r", Hypothesis(frozenset(), frozenset("r")))):
        models = partial_stable_models(apply(alp.program, h))
        print(f"{label:<6} {' '.join(str(m) for m in models)}")

    section("explaining q")
    for mode in Mode:
        hs = explain_query(alp, "q", mode, Route.AAF)
        print(f"{mode.value:<10} {' '.join(str(h) for h in hs)}")

    section("instantiated arguments of P + s")
    print(instantiate(apply(alp.program, Hypothesis(frozenset("s")))).render_table())

    section("generated abductive framework")
    built = build_aaf(alp)
    for name, F in built.aaf.members.items():
        hyps = " ".join(str(h) for h in built.provenance[name])
        print(f"{name:<8} {len(F.arguments)} arguments, {len(F.attacks)} attacks  from {hyps}")


if __name__ == "__main__":
    main()
