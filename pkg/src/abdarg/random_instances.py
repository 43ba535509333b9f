"""Seeded random frameworks, AAFs, programs and ALPs for property sweeps."""
from __future__ import annotations

import random

from .aaf import AbductiveAF
from .af import ArgumentationFramework
from .alp import AbductiveLogicProgram
from .lp import LogicProgram, Rule

ARG_NAMES = "abcdefghij"
ATOM_NAMES = "pqrstu"


def random_af(rng: random.Random, max_args: int = 6, density: float = 0.3) -> ArgumentationFramework:
    n = rng.randint(0, max_args)
    args = ARG_NAMES[:n]
    attacks = {(a, b) for a in args for b in args if rng.random() < density}
    return ArgumentationFramework(frozenset(args), frozenset(attacks))


def random_observation(rng: random.Random, args, max_size: int = 3) -> frozenset[str]:
    args = sorted(args)
    k = rng.randint(0, min(max_size, len(args)))
    return frozenset(rng.sample(args, k))


def random_aaf(rng: random.Random, max_args: int = 6, max_members: int = 4,
               density: float = 0.3) -> AbductiveAF:
    """Members are random sub-frameworks of a common attack graph plus random extra attacks."""
    universe = ARG_NAMES[:rng.randint(1, max_args)]
    frameworks = []
    for i in range(rng.randint(1, max_members)):
        args = [a for a in universe if rng.random() < 0.75] or [rng.choice(universe)]
        attacks = {(a, b) for a in args for b in args if rng.random() < density}
        frameworks.append((f"G{i}", ArgumentationFramework(frozenset(args), frozenset(attacks))))
    return AbductiveAF.build("G0", frameworks)


def random_program(rng: random.Random, max_atoms: int = 5, max_rules: int = 8,
                   max_body: int = 3, loop_rate: float = 0.35) -> LogicProgram:
    """Random ground program; ``loop_rate`` of them are seeded with an even negative loop.

    Uniform random bodies almost never produce programs with several partial
    stable models, which would leave credulous reasoning untested.
    """
    # small vocabularies rarely contain loops at all, so lean towards the cap
    atoms = ATOM_NAMES[:rng.randint(min(2, max_atoms), max_atoms)]
    n_rules = rng.randint(1, max_rules)
    rules = set()
    if len(atoms) >= 2 and n_rules >= 2 and rng.random() < loop_rate:
        a, b = rng.sample(atoms, 2)
        rules |= {Rule(a, frozenset(), frozenset({b})), Rule(b, frozenset(), frozenset({a}))}
    for _ in range(8 * n_rules):
        if len(rules) >= n_rules:
            break
        head = rng.choice(atoms)
        body = rng.sample(atoms, rng.randint(0, min(max_body, len(atoms))))
        neg = {x for x in body if rng.random() < 0.5}
        rules.add(Rule(head, frozenset(body) - neg, frozenset(neg)))
    return LogicProgram(frozenset(rules))


def random_alp(rng: random.Random, max_atoms: int = 4, max_rules: int = 6,
               max_abducibles: int = 2) -> AbductiveLogicProgram:
    P = random_program(rng, max_atoms, max_rules, max_body=2)
    atoms = sorted(P.atoms)
    U = rng.sample(atoms, rng.randint(0, min(max_abducibles, len(atoms))))
    return AbductiveLogicProgram(P, frozenset(U))
