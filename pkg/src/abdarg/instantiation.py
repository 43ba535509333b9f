"""Instantiated arguments and attacks generated from a ground logic program."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .af import ArgumentationFramework
from .lp import LogicProgram, Rule


@dataclass(frozen=True)
class Argument:
    """An argument (conclusion, rules used, atoms required underivable)."""

    conclusion: str
    rules: frozenset[Rule]
    naf: frozenset[str]

    def sort_key(self):
        return (self.conclusion, tuple(str(r) for r in sorted(self.rules, key=Rule.sort_key)),
                tuple(sorted(self.naf)))

    def __str__(self):
        rules = " ".join(str(r) for r in sorted(self.rules, key=Rule.sort_key))
        return f"({self.conclusion}, {{{rules}}}, {{{', '.join(sorted(self.naf))}}})"


def generate_arguments(P: LogicProgram) -> frozenset[Argument]:
    """Saturate: combine one sub-argument per positive premise until nothing new appears.

    A rule may extend sub-arguments only if none of them already uses it.
    """
    rules = P.sorted_rules()
    by_conclusion: dict[str, set[Argument]] = {}
    found: set[Argument] = set()
    changed = True
    while changed:
        changed = False
        for r in rules:
            premises = sorted(r.pos)
            pools = [[a for a in by_conclusion.get(p, ()) if r not in a.rules] for p in premises]
            for subs in itertools.product(*pools):
                arg = Argument(
                    r.head,
                    frozenset({r}).union(*(a.rules for a in subs)),
                    frozenset(r.neg).union(*(a.naf for a in subs)),
                )
                if arg not in found:
                    found.add(arg)
                    by_conclusion.setdefault(arg.conclusion, set()).add(arg)
                    changed = True
    return frozenset(found)


def generate_attacks(args: Iterable[Argument]) -> frozenset[tuple[Argument, Argument]]:
    args = list(args)
    return frozenset((u, v) for u in args for v in args if u.conclusion in v.naf)


@dataclass(frozen=True)
class InstantiatedAF:
    framework: ArgumentationFramework
    table: Mapping[str, Argument]

    def ids_concluding(self, atom: str) -> frozenset[str]:
        return frozenset(n for n, a in self.table.items() if a.conclusion == atom)

    def id_of(self, arg: Argument) -> str:
        for n, a in self.table.items():
            if a == arg:
                return n
        raise KeyError(str(arg))

    def render_table(self) -> str:
        return "\n".join(f"{n}: {a}" for n, a in self.table.items())


def name_arguments(args: Iterable[Argument]) -> dict[Argument, str]:
    """``arg_<k>`` ids, numbered in canonical order of the triples."""
    ordered = sorted(set(args), key=Argument.sort_key)
    return {a: f"arg_{k}" for k, a in enumerate(ordered)}


def instantiate(P: LogicProgram, naming: Mapping[Argument, str] | None = None) -> InstantiatedAF:
    """The framework of all arguments generated by ``P``.

    ``naming`` fixes ids for a wider universe of arguments, so that frameworks
    of related programs share ids for equal triples; by default the arguments
    of ``P`` alone are numbered.
    """
    args = generate_arguments(P)
    if naming is None:
        naming = name_arguments(args)
    attacks = generate_attacks(args)
    af = ArgumentationFramework(
        frozenset(naming[a] for a in args),
        frozenset((naming[u], naming[v]) for u, v in attacks),
    )
    table = {naming[a]: a for a in sorted(args, key=Argument.sort_key)}
    return InstantiatedAF(af, table)
