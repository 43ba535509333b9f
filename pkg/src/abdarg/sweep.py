"""Randomized cross-checks between independent routes of the library.

Each check pits two computations that must agree against each other on
seeded random instances:

- ``dialogues``: dialogue search against the semantic explanation sets.
- ``instantiation``: partial-stable consequences against acceptance in the instantiated framework.
- ``abduction``: the direct route against the AAF route of query abduction.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .aaf import all_explanations
from .af import Mode, complete_extensions, grounded_extension
from .alp import Route, explain_query
from .dialogue import explained_by, search_credulous, search_skeptical
from .instantiation import instantiate
from .lp import consequences
from .random_instances import random_aaf, random_alp, random_observation, random_program


@dataclass
class SweepConfig:
    seed: int = 0
    aafs: int = 200
    programs: int = 200
    alps: int = 60
    max_args: int = 6
    max_members: int = 4
    max_atoms: int = 5
    max_rules: int = 8
    alp_atoms: int = 4
    alp_rules: int = 6
    max_abducibles: int = 2


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        status = "ok" if self.ok else f"{len(self.failures)} FAILED"
        return f"{self.name:<14} {self.cases:>5} cases  {self.seconds:6.2f}s  {status}"


def check_dialogues(cfg: SweepConfig) -> SweepResult:
    rng = random.Random(cfg.seed)
    res = SweepResult("dialogues")
    for i in range(cfg.aafs):
        M = random_aaf(rng, cfg.max_args, cfg.max_members, density=rng.choice([0.2, 0.35, 0.5]))
        X = random_observation(rng, set().union(*(F.arguments for F in M.members.values())))
        for mode, search in ((Mode.SKEPTICAL, search_skeptical), (Mode.CREDULOUS, search_credulous)):
            res.cases += 1
            if explained_by(search(M, X)) != all_explanations(M, X, mode):
                res.failures.append((i, mode.value))
    return res


def check_instantiation(cfg: SweepConfig) -> SweepResult:
    rng = random.Random(cfg.seed)
    res = SweepResult("instantiation")
    for i in range(cfg.programs):
        P = random_program(rng, cfg.max_atoms, cfg.max_rules)
        inst = instantiate(P)
        accepted = {Mode.SKEPTICAL: grounded_extension(inst.framework),
                    Mode.CREDULOUS: frozenset().union(*complete_extensions(inst.framework))}
        for mode in Mode:
            res.cases += 1
            if consequences(P, mode) != {inst.table[a].conclusion for a in accepted[mode]}:
                res.failures.append((i, mode.value))
    return res


def check_abduction(cfg: SweepConfig) -> SweepResult:
    rng = random.Random(cfg.seed)
    res = SweepResult("abduction")
    for i in range(cfg.alps):
        alp = random_alp(rng, cfg.alp_atoms, cfg.alp_rules, cfg.max_abducibles)
        for Q in sorted(alp.program.atoms):
            for mode in Mode:
                res.cases += 1
                if explain_query(alp, Q, mode, Route.DIRECT) != explain_query(alp, Q, mode, Route.AAF):
                    res.failures.append((i, Q, mode.value))
    return res


CHECKS = {"dialogues": check_dialogues, "instantiation": check_instantiation, "abduction": check_abduction}


def run_sweep(cfg: SweepConfig, names=None) -> list[SweepResult]:
    out = []
    for name in names or CHECKS:
        start = time.perf_counter()
        res = CHECKS[name](cfg)
        res.seconds = time.perf_counter() - start
        out.append(res)
    return out
