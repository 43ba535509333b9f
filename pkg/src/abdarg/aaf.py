"""Abductive argumentation frameworks and the semantic notion of explanation."""
from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .af import ArgumentationFramework, Attack, Mode, supports
from .errors import DuplicateName, MissingBase, UnknownAbducible


@dataclass(frozen=True)
class UnionSignature:
    arguments: frozenset[str]
    attacks: frozenset[Attack]


@dataclass(frozen=True)
class AbductiveAF:
    """A base framework together with the abducible frameworks (base included).

    ``members`` maps names to pairwise distinct frameworks. ``merged`` records,
    for every kept name, all input names whose frameworks collapsed into it.
    Use :meth:`build` to construct one from possibly repeated frameworks.
    """

    base: str
    members: Mapping[str, ArgumentationFramework]
    merged: Mapping[str, tuple[str, ...]]

    def __post_init__(self):
        members = dict(sorted(self.members.items()))
        if not members:
            raise MissingBase("an abductive AF needs at least its base framework")
        if self.base not in members:
            raise MissingBase(f"base {self.base!r} is not among the abducible frameworks")
        object.__setattr__(self, "members", MappingProxyType(members))
        merged = {name: tuple(self.merged.get(name, (name,))) for name in members}
        object.__setattr__(self, "merged", MappingProxyType(merged))

    @classmethod
    def build(cls, base: str, frameworks: Iterable[tuple[str, ArgumentationFramework]]) -> "AbductiveAF":
        """Deduplicate structurally equal frameworks, keeping the first name.

        The group containing ``base`` is always named ``base``.
        """
        frameworks = list(frameworks)
        seen: set[str] = set()
        for name, _ in frameworks:
            if name in seen:
                raise DuplicateName(f"abducible framework {name!r} defined twice")
            seen.add(name)
        base_af = dict(frameworks).get(base)
        if base_af is None:
            raise MissingBase(f"base {base!r} is not among the abducible frameworks")
        groups: dict[ArgumentationFramework, list[str]] = {base_af: [base]}
        for name, F in frameworks:
            if name != base:
                groups.setdefault(F, []).append(name)
        members = {}
        merged = {}
        for F, names in groups.items():
            members[names[0]] = F
            merged[names[0]] = tuple(names)
        return cls(base, members, merged)

    @property
    def names(self) -> list[str]:
        return list(self.members)

    @property
    def base_framework(self) -> ArgumentationFramework:
        return self.members[self.base]

    def __getitem__(self, name: str) -> ArgumentationFramework:
        try:
            return self.members[name]
        except KeyError:
            raise UnknownAbducible(name) from None

    def restrict(self, names: Iterable[str]) -> "AbductiveAF":
        """Sub-AAF over ``names`` (the base is kept)."""
        keep = set(names) | {self.base}
        return AbductiveAF(self.base, {n: self[n] for n in keep},
                           {n: self.merged[n] for n in keep})


def union_signature(M: AbductiveAF) -> UnionSignature:
    args: set[str] = set()
    atts: set[Attack] = set()
    for F in M.members.values():
        args |= F.arguments
        atts |= F.attacks
    return UnionSignature(frozenset(args), frozenset(atts))


def filter_by_attack(M: AbductiveAF, x: str, y: str) -> frozenset[str]:
    return frozenset(n for n, F in M.members.items() if (x, y) in F.attacks)


def filter_by_args(M: AbductiveAF, X: Iterable[str]) -> frozenset[str]:
    X = frozenset(X)
    return frozenset(n for n, F in M.members.items() if X <= F.arguments)


def explains(M: AbductiveAF, G: str, X: Iterable[str], mode: Mode) -> bool:
    """Whether member ``G`` supports ``X``; observation arguments absent from G are dropped."""
    F = M[G]
    return supports(F, frozenset(X) & F.arguments, mode)


def all_explanations(M: AbductiveAF, X: Iterable[str], mode: Mode) -> list[str]:
    X = frozenset(X)
    return [name for name in M.members if explains(M, name, X, mode)]
