"""Extended abduction over logic programs and its translation to abductive AFs."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .aaf import AbductiveAF, all_explanations
from .af import Mode
from .dialogue import ExplanationWitness, explained_by, search_credulous, search_skeptical
from .errors import AbducibleNotInProgram, TooManyAbducibles, UnknownAtom
from .instantiation import InstantiatedAF, instantiate, generate_arguments, name_arguments
from .lp import LogicProgram, fact, is_consequence

ABDUCIBLE_CAP = 10


@dataclass(frozen=True)
class AbductiveLogicProgram:
    program: LogicProgram
    abducibles: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "abducibles", frozenset(self.abducibles))
        missing = self.abducibles - self.program.atoms
        if missing:
            raise AbducibleNotInProgram(f"abducibles not occurring in the program: {', '.join(sorted(missing))}")


@dataclass(frozen=True)
class Hypothesis:
    added: frozenset[str] = frozenset()
    removed: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "added", frozenset(self.added))
        object.__setattr__(self, "removed", frozenset(self.removed))
        if self.added & self.removed:
            raise ValueError(f"atoms both added and removed: {sorted(self.added & self.removed)}")

    def sort_key(self):
        return (len(self.added) + len(self.removed), tuple(sorted(self.added)), tuple(sorted(self.removed)))

    @property
    def label(self) -> str:
        return "H{" + ",".join(sorted(self.added)) + ";" + ",".join(sorted(self.removed)) + "}"

    def __str__(self):
        return "({" + ", ".join(sorted(self.added)) + "}, {" + ", ".join(sorted(self.removed)) + "})"


class Route(enum.Enum):
    DIRECT = "direct"
    AAF = "aaf"


def hypotheses(alp: AbductiveLogicProgram, cap: int = ABDUCIBLE_CAP) -> list[Hypothesis]:
    """All 3^|U| disjoint (added, removed) pairs over the abducibles."""
    U = sorted(alp.abducibles)
    if len(U) > cap:
        raise TooManyAbducibles(f"{len(U)} abducibles exceed the cap of {cap}")
    out = []
    for choice in itertools.product((None, "+", "-"), repeat=len(U)):
        out.append(Hypothesis(
            frozenset(u for u, c in zip(U, choice) if c == "+"),
            frozenset(u for u, c in zip(U, choice) if c == "-"),
        ))
    return sorted(out, key=Hypothesis.sort_key)


def apply(P: LogicProgram, h: Hypothesis) -> LogicProgram:
    """Add the facts of ``h.added``; delete fact-rules whose head is in ``h.removed``."""
    rules = set(P.rules) | {fact(a) for a in h.added}
    rules = {r for r in rules if not (r.is_fact and r.head in h.removed)}
    return LogicProgram(frozenset(rules))


def explains_query(alp: AbductiveLogicProgram, h: Hypothesis, Q: str, mode: Mode) -> bool:
    if Q not in alp.program.atoms:
        raise UnknownAtom(Q)
    P = apply(alp.program, h)
    # removing the only occurrence of Q leaves it underivable
    return Q in P.atoms and is_consequence(P, Q, mode)


@dataclass(frozen=True)
class InstantiatedAAF:
    """The abductive AF generated by an ALP plus its bookkeeping.

    ``provenance`` maps each member name to the hypotheses that produced it;
    ``frameworks`` keeps the argument table of each member.
    """

    aaf: AbductiveAF
    provenance: Mapping[str, tuple[Hypothesis, ...]]
    frameworks: Mapping[str, InstantiatedAF]

    def arguments_concluding(self, Q: str, scope: str = "base") -> frozenset[str]:
        names = [self.aaf.base] if scope == "base" else list(self.frameworks)
        out: set[str] = set()
        for n in names:
            out |= self.frameworks[n].ids_concluding(Q)
        return frozenset(out)

    def hypotheses_of(self, names: Iterable[str]) -> list[Hypothesis]:
        hs = [h for n in names for h in self.provenance[n]]
        return sorted(hs, key=Hypothesis.sort_key)


def build_aaf(alp: AbductiveLogicProgram, cap: int = ABDUCIBLE_CAP) -> InstantiatedAAF:
    hs = hypotheses(alp, cap)
    # every member program is contained in P plus all abducible facts, so
    # numbering that program's arguments gives ids shared by all members
    universe = apply(alp.program, Hypothesis(alp.abducibles, frozenset()))
    naming = name_arguments(generate_arguments(universe))
    by_hypothesis = {h: instantiate(apply(alp.program, h), naming) for h in hs}
    labelled = [(h.label, by_hypothesis[h].framework) for h in hs]
    base_label = Hypothesis().label
    aaf = AbductiveAF.build(base_label, labelled)
    label_to_h = {h.label: h for h in hs}
    provenance = {n: tuple(label_to_h[m] for m in aaf.merged[n]) for n in aaf.members}
    frameworks = {n: by_hypothesis[label_to_h[n]] for n in aaf.members}
    return InstantiatedAAF(aaf, provenance, frameworks)


def observation(alp: AbductiveLogicProgram, Q: str, built: InstantiatedAAF | None = None,
                scope: str = "base") -> frozenset[str]:
    """Ids of the arguments concluding ``Q``.

    ``scope="base"`` takes them from the base framework only; ``"union"`` from
    every abducible framework, which also covers conclusions that only become
    derivable once abducible facts are added.
    """
    if Q not in alp.program.atoms:
        raise UnknownAtom(Q)
    built = built or build_aaf(alp)
    return built.arguments_concluding(Q, scope)


def explain_query(alp: AbductiveLogicProgram, Q: str, mode: Mode, via: Route = Route.DIRECT,
                  cap: int = ABDUCIBLE_CAP) -> list[Hypothesis]:
    if Q not in alp.program.atoms:
        raise UnknownAtom(Q)
    if via is Route.DIRECT:
        return [h for h in hypotheses(alp, cap) if explains_query(alp, h, Q, mode)]
    hs, _ = explain_query_dialogues(alp, Q, mode, cap)
    return hs


def explain_query_dialogues(alp: AbductiveLogicProgram, Q: str, mode: Mode,
                            cap: int = ABDUCIBLE_CAP) -> tuple[list[Hypothesis], list[ExplanationWitness]]:
    """AAF route: dialogue search on the generated AAF, mapped back to hypotheses."""
    built = build_aaf(alp, cap)
    X = observation(alp, Q, built, scope="union")
    search = search_skeptical if mode is Mode.SKEPTICAL else search_credulous
    witnesses = search(built.aaf, X)
    return built.hypotheses_of(explained_by(witnesses)), witnesses


def semantic_aaf_explanations(alp: AbductiveLogicProgram, Q: str, mode: Mode) -> list[Hypothesis]:
    """AAF route evaluated with the semantic definition instead of dialogues."""
    built = build_aaf(alp)
    X = observation(alp, Q, built, scope="union")
    return built.hypotheses_of(all_explanations(built.aaf, X, mode))
