"""Ground normal logic programs under the partial stable model semantics."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .af import Mode
from .errors import InterpretationOutOfVocabulary, UnknownAtom, VocabularyTooLarge

ENUMERATION_CAP = 12


@dataclass(frozen=True)
class Rule:
    head: str
    pos: frozenset[str] = frozenset()
    neg: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pos", frozenset(self.pos))
        object.__setattr__(self, "neg", frozenset(self.neg))

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg

    @property
    def atoms(self) -> frozenset[str]:
        return self.pos | self.neg | {self.head}

    def sort_key(self):
        return (self.head, tuple(sorted(self.pos)), tuple(sorted(self.neg)))

    def __str__(self):
        body = sorted(self.pos) + [f"not {b}" for b in sorted(self.neg)]
        if not body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(body)}."

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def fact(atom: str) -> Rule:
    return Rule(atom)


@dataclass(frozen=True)
class LogicProgram:
    rules: frozenset[Rule] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "rules", frozenset(self.rules))

    @property
    def atoms(self) -> frozenset[str]:
        out: set[str] = set()
        for r in self.rules:
            out |= r.atoms
        return frozenset(out)

    def sorted_rules(self) -> list[Rule]:
        return sorted(self.rules, key=Rule.sort_key)

    def __str__(self):
        return "\n".join(str(r) for r in self.sorted_rules())


@dataclass(frozen=True)
class Interpretation:
    """3-valued interpretation; atoms in neither set are undecided."""

    true: frozenset[str] = frozenset()
    false: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "true", frozenset(self.true))
        object.__setattr__(self, "false", frozenset(self.false))
        if self.true & self.false:
            raise ValueError(f"atoms both true and false: {sorted(self.true & self.false)}")

    def value(self, atom: str) -> "Truth":
        if atom in self.true:
            return Truth.TRUE
        if atom in self.false:
            return Truth.FALSE
        return Truth.UNDECIDED

    def sort_key(self):
        return (tuple(sorted(self.true)), tuple(sorted(self.false)))

    def __str__(self):
        return "({" + ", ".join(sorted(self.true)) + "}, {" + ", ".join(sorted(self.false)) + "})"


class Truth(enum.Enum):
    """Truth constants standing in for negated premises after the GL-transform."""

    FALSE = "0"
    UNDECIDED = "1/2"
    TRUE = "1"

    def __str__(self):
        return self.value


Premise = str | Truth


@dataclass(frozen=True)
class TransformedRule:
    head: str
    body: tuple[Premise, ...] = ()

    def __str__(self):
        if not self.body:
            return self.head
        return f"{self.head} <- {', '.join(str(p) for p in self.body)}"


_NEGATED = {Truth.TRUE: Truth.FALSE, Truth.UNDECIDED: Truth.UNDECIDED, Truth.FALSE: Truth.TRUE}


def _premise_key(p: Premise):
    return (1, p.value) if isinstance(p, Truth) else (0, p)


def gl_transform(P: LogicProgram, I: Interpretation) -> frozenset[TransformedRule]:
    """Replace every ``not B`` by the constant opposite to B's value in ``I``."""
    stray = (I.true | I.false) - P.atoms
    if stray:
        raise InterpretationOutOfVocabulary(f"atoms outside the program: {', '.join(sorted(stray))}")
    out = set()
    for r in P.rules:
        body: list[Premise] = sorted(r.pos)
        body += sorted((_NEGATED[I.value(b)] for b in r.neg), key=_premise_key)
        out.add(TransformedRule(r.head, tuple(body)))
    return frozenset(out)


def _lfp(rules: Iterable[TransformedRule], holds) -> set[str]:
    rules = list(rules)
    derived: set[str] = set()
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head not in derived and all(holds(p, derived) for p in r.body):
                derived.add(r.head)
                changed = True
    return derived


def _true(p: Premise, derived: set[str]) -> bool:
    if isinstance(p, Truth):
        return p is Truth.TRUE
    return p in derived


def _not_false(p: Premise, derived: set[str]) -> bool:
    if isinstance(p, Truth):
        return p is not Truth.FALSE
    return p in derived


def least_model(rules: Iterable[TransformedRule], vocabulary: Iterable[str]) -> Interpretation:
    """Least 3-valued model: minimal true set, maximal false set."""
    rules = list(rules)
    vocabulary = frozenset(vocabulary)
    true = _lfp(rules, _true)
    possible = _lfp(rules, _not_false)
    return Interpretation(frozenset(true) & vocabulary, vocabulary - possible)


def gamma(P: LogicProgram, I: Interpretation) -> Interpretation:
    return least_model(gl_transform(P, I), P.atoms)


def interpretations(atoms: Iterable[str]) -> Iterator[Interpretation]:
    atoms = sorted(atoms)
    for values in itertools.product((Truth.TRUE, Truth.UNDECIDED, Truth.FALSE), repeat=len(atoms)):
        yield Interpretation(
            frozenset(a for a, v in zip(atoms, values) if v is Truth.TRUE),
            frozenset(a for a, v in zip(atoms, values) if v is Truth.FALSE),
        )


def partial_stable_models(P: LogicProgram, cap: int = ENUMERATION_CAP) -> list[Interpretation]:
    """All fixpoints of :func:`gamma`, by enumerating every 3-valued interpretation."""
    atoms = P.atoms
    if len(atoms) > cap:
        raise VocabularyTooLarge(f"{len(atoms)} atoms exceed the enumeration cap of {cap}")
    models = [I for I in interpretations(atoms) if gamma(P, I) == I]
    return sorted(models, key=Interpretation.sort_key)


def consequences(P: LogicProgram, mode: Mode, cap: int = ENUMERATION_CAP) -> frozenset[str]:
    models = partial_stable_models(P, cap)
    if mode is Mode.SKEPTICAL:
        return frozenset.intersection(*(m.true for m in models)) if models else frozenset()
    return frozenset().union(*(m.true for m in models))


def is_consequence(P: LogicProgram, C: str, mode: Mode, cap: int = ENUMERATION_CAP) -> bool:
    if C not in P.atoms:
        raise UnknownAtom(C)
    return C in consequences(P, mode, cap)
