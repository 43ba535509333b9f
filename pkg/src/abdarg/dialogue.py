"""Explanation dialogues: moves, information states, validation and search.

A dialogue is played over all abducible frameworks at once. PRO's hypothetical
moves narrow the information state (the set of member names in which every
PRO move so far is valid); a completed dialogue with a non-empty final state
proves that each remaining member explains the observation.

Search works on bitmasks over the canonically ordered member names. Every
state update is an intersection with a fixed mask, so the effect of a
sub-dialogue is a mask independent of the state it starts from; skeptical
sub-results are memoized on the argument under attack and the remaining
nesting budget. Credulous witnesses are built one member at a time from an
admissible set of that member.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .aaf import AbductiveAF, filter_by_args, filter_by_attack, union_signature
from .af import admissible_containing
from .errors import ConflictInProPosition, DialogueRejected, IndexOutOfRange


@dataclass(frozen=True)
class OppAttack:
    attacker: str
    target: str

    def __str__(self):
        return f"OPP: {self.attacker} -> {self.target}"


@dataclass(frozen=True)
class ProDefence:
    attacker: str
    target: str

    def __str__(self):
        return f"PRO: {self.attacker} -> {self.target}"


@dataclass(frozen=True)
class ProNegation:
    attacker: str
    target: str

    def __str__(self):
        return f"PRO: {self.attacker} -/> {self.target}"


@dataclass(frozen=True)
class OppOk:
    def __str__(self):
        return "OPP: ok"


@dataclass(frozen=True)
class ProWin:
    def __str__(self):
        return "PRO: win"


Move = Union[OppAttack, ProDefence, ProNegation, OppOk, ProWin]


@dataclass(frozen=True)
class Dialogue:
    moves: tuple[Move, ...]
    initial_argument: str

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    def __len__(self):
        return len(self.moves)


@dataclass(frozen=True)
class ExplanationWitness:
    explained: frozenset[str]
    dialogue: Dialogue


# -- information states ------------------------------------------------------

def info_states(M: AbductiveAF, D: Dialogue) -> list[frozenset[str]]:
    """States J(D, 0..n); the initial state holds the members containing the claim."""
    state = filter_by_args(M, {D.initial_argument})
    states = [state]
    for m in D.moves:
        if isinstance(m, ProDefence):
            state = state & filter_by_attack(M, m.attacker, m.target)
        elif isinstance(m, ProNegation):
            state = state - filter_by_attack(M, m.attacker, m.target)
        states.append(state)
    return states


def info_state(M: AbductiveAF, D: Dialogue, i: int) -> frozenset[str]:
    if not 0 <= i <= len(D.moves):
        raise IndexOutOfRange(f"index {i} outside 0..{len(D.moves)}")
    return info_states(M, D)[i]


# -- validation ----------------------------------------------------------------

class _Grammar:
    def __init__(self, M: AbductiveAF, D: Dialogue, credulous: bool):
        sig = union_signature(M)
        self.attacks = sig.attacks
        self.attackers: dict[str, set[str]] = {}
        for y, x in sig.attacks:
            self.attackers.setdefault(x, set()).add(y)
        self.moves = D.moves
        self.credulous = credulous

    def _at(self, pos: int) -> Move | None:
        return self.moves[pos] if pos < len(self.moves) else None

    def _reject(self, pos: int, rule: str):
        raise DialogueRejected(pos + 1, rule)

    def opp_reply(self, x: str, pos: int, accepted: frozenset[str]) -> int:
        expected = self.attackers.get(x, set())
        seen: set[str] = set()
        while True:
            m = self._at(pos)
            if isinstance(m, OppOk):
                missing = expected - seen
                if missing:
                    self._reject(pos, f"OPP reply to {x} concedes before attacking with "
                                      f"{', '.join(sorted(missing))}")
                return pos + 1
            if not isinstance(m, OppAttack) or m.target != x:
                self._reject(pos, f"OPP reply to {x} expects an attack on {x} or 'OPP: ok'")
            if m.attacker not in expected:
                self._reject(pos, f"{m.attacker} -> {x} is not an attack of any abducible framework")
            if m.attacker in seen:
                self._reject(pos, f"OPP repeats the attack {m.attacker} -> {x}")
            seen.add(m.attacker)
            pos = self.pro_reply(m.attacker, x, pos + 1, accepted)

    def pro_reply(self, y: str, x: str, pos: int, accepted: frozenset[str]) -> int:
        m = self._at(pos)
        if isinstance(m, ProNegation):
            if (m.attacker, m.target) != (y, x):
                self._reject(pos, f"PRO may only negate the attack {y} -> {x} here")
            return pos + 1
        if isinstance(m, ProDefence):
            z = m.attacker
            if m.target != y or (z, y) not in self.attacks:
                self._reject(pos, f"PRO defence must be an attack on {y} of some abducible framework")
            if not self.credulous:
                return self.opp_reply(z, pos + 1, accepted)
            if z in accepted:
                return pos + 1
            return self.opp_reply(z, pos + 1, accepted | {z})
        self._reject(pos, f"PRO must reply to {y} -> {x} with a defence or a negation")

    def dialogue(self, x: str) -> None:
        pos = self.opp_reply(x, 0, frozenset({x}))
        if not isinstance(self._at(pos), ProWin):
            self._reject(pos, "dialogue must end with 'PRO: win'")
        if pos + 1 != len(self.moves):
            self._reject(pos + 1, "no moves may follow 'PRO: win'")


def _check_claim(D: Dialogue, X: Iterable[str]) -> None:
    if D.initial_argument not in frozenset(X):
        raise DialogueRejected(1, f"initial argument {D.initial_argument} is not in the observation")


def validate_skeptical(M: AbductiveAF, D: Dialogue, X: Iterable[str]) -> frozenset[str]:
    """Final information state of a skeptical explanation dialogue.

    Raises :class:`DialogueRejected` at the first move violating the grammar.
    """
    _check_claim(D, X)
    _Grammar(M, D, credulous=False).dialogue(D.initial_argument)
    return info_states(M, D)[-1]


def validate_credulous(M: AbductiveAF, D: Dialogue, X: Iterable[str]) -> frozenset[str]:
    """Final information state of a conflict-free credulous explanation dialogue.

    Grammar violations raise :class:`DialogueRejected`; a grammatical dialogue
    that leaves two of PRO's arguments in unanswered conflict raises
    :class:`ConflictInProPosition`.
    """
    _check_claim(D, X)
    _Grammar(M, D, credulous=True).dialogue(D.initial_argument)
    negated = {(m.attacker, m.target) for m in D.moves if isinstance(m, ProNegation)}
    opp: set[tuple[str, str]] = set()
    for i, m in enumerate(D.moves):
        if not isinstance(m, OppAttack):
            continue
        a, b = m.attacker, m.target
        # (a, b) closes a chain either as its first or its second attack
        for u, v in opp | {(a, b)}:
            if v == a and (a, b) not in negated:
                raise ConflictInProPosition(
                    i + 1, f"OPP attacks {u} -> {a} and {a} -> {b} but PRO never plays {a} -/> {b}")
            if u == b and (b, v) not in negated:
                raise ConflictInProPosition(
                    i + 1, f"OPP attacks {a} -> {b} and {b} -> {v} but PRO never plays {b} -/> {v}")
        opp.add((a, b))
    return info_states(M, D)[-1]


# -- search ---------------------------------------------------------------------

def _maximal(outcomes: dict[int, object]) -> dict[int, object]:
    """Keep the masks not strictly contained in another."""
    return {k: v for k, v in outcomes.items() if not any(o != k and o & k == k for o in outcomes)}


class _Search:
    def __init__(self, M: AbductiveAF):
        self.M = M
        self.names = list(M.members)
        self.full = (1 << len(self.names)) - 1
        sig = union_signature(M)
        self.n_args = len(sig.arguments)
        self.attackers: dict[str, list[str]] = {}
        for y, x in sorted(sig.attacks):
            self.attackers.setdefault(x, []).append(y)
        self.attack_mask = {att: self._mask(filter_by_attack(M, *att)) for att in sig.attacks}
        self._memo: dict = {}

    def _mask(self, names: Iterable[str]) -> int:
        names = set(names)
        return sum(1 << i for i, n in enumerate(self.names) if n in names)

    def _names(self, mask: int) -> frozenset[str]:
        return frozenset(n for i, n in enumerate(self.names) if mask >> i & 1)

    def arg_mask(self, x: str) -> int:
        return self._mask(filter_by_args(self.M, {x}))

    # skeptical: outcome keys are masks

    def skeptical_reply(self, x: str, budget: int) -> dict[int, tuple]:
        if budget <= 0:
            return {}
        key = ("s", x, budget)
        if key in self._memo:
            return self._memo[key]
        outcomes: dict[int, tuple] = {self.full: ()}
        for y in self.attackers.get(x, ()):
            replies = self._skeptical_pro(y, x, budget)
            nxt: dict[int, tuple] = {}
            for r, mv in outcomes.items():
                for r2, mv2 in replies.items():
                    r3 = r & r2
                    if r3 and r3 not in nxt:
                        nxt[r3] = mv + (OppAttack(y, x),) + mv2
            outcomes = _maximal(nxt)
            if not outcomes:
                break
        result = {r: mv + (OppOk(),) for r, mv in outcomes.items()}
        self._memo[key] = result
        return result

    def _skeptical_pro(self, y: str, x: str, budget: int) -> dict[int, tuple]:
        options: dict[int, tuple] = {}
        neg = self.full & ~self.attack_mask[(y, x)]
        if neg:
            options[neg] = (ProNegation(y, x),)
        for z in self.attackers.get(y, ()):
            m = self.attack_mask[(z, y)]
            for r, mv in self.skeptical_reply(z, budget - 1).items():
                r2 = r & m
                if r2 and r2 not in options:
                    options[r2] = (ProDefence(z, y),) + mv
        return _maximal(options)

    # credulous: one dialogue per member, built from an admissible set of it

    def credulous_dialogue(self, target: str, x: str, E: frozenset[str]) -> tuple:
        """Reply to ``x`` that keeps ``target`` in the state, defending from ``E``.

        Attacks missing from ``target`` are negated; the others are answered by
        a member of ``E`` attacking the attacker in ``target``, preferring an
        ancestor so that no nested reply is needed.
        """
        G = self.M.members[target]
        memo: dict = {}

        def reply(w: str, Z: frozenset[str]) -> tuple:
            key = (w, Z)
            if key in memo:
                return memo[key]
            moves: list = []
            for y in self.attackers.get(w, ()):
                moves.append(OppAttack(y, w))
                if (y, w) not in G.attacks:
                    moves.append(ProNegation(y, w))
                    continue
                options = sorted(z for z in G.attackers(y) if z in E)
                z = next((z for z in options if z in Z), options[0])
                moves.append(ProDefence(z, y))
                if z not in Z:
                    moves.extend(reply(z, Z | {z}))
            moves.append(OppOk())
            memo[key] = tuple(moves)
            return memo[key]

        return reply(x, frozenset({x}))


def _collect(found: list[tuple[int, Dialogue]], search: _Search) -> list[ExplanationWitness]:
    best = _maximal({mask: d for mask, d in found})
    witnesses = [ExplanationWitness(search._names(mask), d) for mask, d in best.items()]
    return sorted(witnesses, key=lambda w: (tuple(sorted(w.explained)), w.dialogue.initial_argument))


def search_skeptical(M: AbductiveAF, X: Iterable[str]) -> list[ExplanationWitness]:
    """Witness dialogues whose final states together cover every skeptical explanation."""
    search = _Search(M)
    found: list[tuple[int, Dialogue]] = []
    for x in sorted(set(X)):
        start = search.arg_mask(x)
        if not start:
            continue
        for r, mv in search.skeptical_reply(x, max(search.n_args, 1)).items():
            if start & r:
                found.append((start & r, Dialogue(mv + (ProWin(),), x)))
    return _collect(found, search)


def search_credulous(M: AbductiveAF, X: Iterable[str]) -> list[ExplanationWitness]:
    """Conflict-free witness dialogues covering every credulous explanation.

    Fixing one member to keep in the state leaves PRO no real choice except
    the defenders, so each member is settled by an admissible-set search and
    the dialogue is read off that set.
    """
    search = _Search(M)
    X = sorted(set(X))
    found: list[tuple[int, Dialogue]] = []
    covered = 0
    for i, name in enumerate(search.names):
        if covered >> i & 1:
            continue
        G = M.members[name]
        for x in X:
            if x not in G.arguments:
                continue
            E = admissible_containing(G, x)
            if E is None:
                continue
            D = Dialogue(search.credulous_dialogue(name, x, E) + (ProWin(),), x)
            mask = search._mask(info_states(M, D)[-1])
            found.append((mask, D))
            covered |= mask
            break
    return _collect(found, search)


def explained_by(witnesses: Iterable[ExplanationWitness]) -> list[str]:
    out: set[str] = set()
    for w in witnesses:
        out |= w.explained
    return sorted(out)

