"""Abstract argumentation frameworks under complete and grounded semantics."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import MemberOutsideFramework, UnknownArgument

Attack = tuple[str, str]
Extension = frozenset[str]


class Mode(enum.Enum):
    SKEPTICAL = "skeptical"
    CREDULOUS = "credulous"


def canonical(sets: Iterable[Iterable[str]]) -> list[Extension]:
    """Deduplicate and sort sets lexicographically on their sorted members."""
    unique = {frozenset(s) for s in sets}
    return sorted(unique, key=lambda s: tuple(sorted(s)))


def fmt_set(members: Iterable[str]) -> str:
    return "{" + ", ".join(sorted(members)) + "}"


@dataclass(frozen=True)
class ArgumentationFramework:
    arguments: frozenset[str] = frozenset()
    attacks: frozenset[Attack] = frozenset()
    _attackers: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "arguments", frozenset(self.arguments))
        object.__setattr__(self, "attacks", frozenset(tuple(a) for a in self.attacks))
        dangling = {x for att in self.attacks for x in att} - self.arguments
        if dangling:
            raise MemberOutsideFramework(dangling)
        attackers: dict[str, set[str]] = {a: set() for a in self.arguments}
        for a, b in self.attacks:
            attackers[b].add(a)
        object.__setattr__(self, "_attackers",
                           {a: frozenset(s) for a, s in attackers.items()})

    def attackers(self, a: str) -> frozenset[str]:
        return self._attackers[a]

    def sorted_arguments(self) -> list[str]:
        return sorted(self.arguments)

    def __str__(self) -> str:
        atts = ", ".join(f"{a}->{b}" for a, b in sorted(self.attacks))
        return f"AF({fmt_set(self.arguments)}; {atts})"


def _check_members(F: ArgumentationFramework, E: Iterable[str]) -> frozenset[str]:
    E = frozenset(E)
    if not E <= F.arguments:
        raise MemberOutsideFramework(E - F.arguments)
    return E


def conflict_free(F: ArgumentationFramework, E: Iterable[str]) -> bool:
    E = _check_members(F, E)
    return not any(a in E and b in E for a, b in F.attacks)


def defended_set(F: ArgumentationFramework, E: Iterable[str]) -> Extension:
    """Arguments all of whose attackers are attacked by some member of ``E``."""
    E = _check_members(F, E)
    countered = {b for a, b in F.attacks if a in E}
    return frozenset(a for a in F.arguments if F.attackers(a) <= countered)


def grounded_extension(F: ArgumentationFramework) -> Extension:
    current: Extension = frozenset()
    while True:
        nxt = defended_set(F, current)
        if nxt == current:
            return current
        current = nxt


def _iter_complete(F: ArgumentationFramework) -> Iterator[Extension]:
    # Every complete extension contains the grounded one and avoids what it
    # attacks, so only the remaining arguments are branched on.
    gr = grounded_extension(F)
    out = {b for a, b in F.attacks if a in gr}
    open_args = sorted(F.arguments - gr - out)
    attacks = F.attacks

    def extend(i: int, chosen: list[str]) -> Iterator[Extension]:
        if i == len(open_args):
            E = gr | frozenset(chosen)
            if defended_set(F, E) == E:
                yield E
            return
        a = open_args[i]
        yield from extend(i + 1, chosen)
        if (a, a) in attacks:
            return
        if any((a, c) in attacks or (c, a) in attacks for c in chosen):
            return
        chosen.append(a)
        yield from extend(i + 1, chosen)
        chosen.pop()

    # gr is conflict-free and unattacked by itself, so only choices can clash
    yield from extend(0, [])


def complete_extensions(F: ArgumentationFramework) -> list[Extension]:
    return canonical(_iter_complete(F))


def admissible_containing(F: ArgumentationFramework, x: str) -> Extension | None:
    """Some admissible set containing ``x``, or None.

    Backtracks over the choice of counter-attacker for each open attacker.
    Every admissible set extends to a complete one, so this decides credulous
    acceptance.
    """
    if x not in F.arguments:
        raise UnknownArgument(x)

    def clashes(E: frozenset[str], z: str) -> bool:
        return (z, z) in F.attacks or any((z, e) in F.attacks or (e, z) in F.attacks for e in E)

    def extend(E: frozenset[str], todo: tuple[str, ...]) -> Extension | None:
        while todo and any(z in E for z in F.attackers(todo[0])):
            todo = todo[1:]
        if not todo:
            return E
        y, rest = todo[0], todo[1:]
        for z in sorted(F.attackers(y)):
            if clashes(E, z):
                continue
            found = extend(E | {z}, rest + tuple(sorted(F.attackers(z))))
            if found is not None:
                return found
        return None

    if (x, x) in F.attacks:
        return None
    return extend(frozenset({x}), tuple(sorted(F.attackers(x))))


def accepts(F: ArgumentationFramework, x: str, mode: Mode) -> bool:
    if x not in F.arguments:
        raise UnknownArgument(x)
    if mode is Mode.SKEPTICAL:
        return x in grounded_extension(F)
    return admissible_containing(F, x) is not None


def supports(F: ArgumentationFramework, X: Iterable[str], mode: Mode) -> bool:
    """Whether observation ``X`` is supported: some member of X is accepted.

    Skeptical support uses the grounded extension only; the equivalence with
    "every complete extension meets X" is checked in the test-suite.
    """
    X = frozenset(X)
    for x in X:
        if x not in F.arguments:
            raise UnknownArgument(x)
    if not X:
        return False
    if mode is Mode.SKEPTICAL:
        return bool(X & grounded_extension(F))
    return any(admissible_containing(F, x) is not None for x in sorted(X))
