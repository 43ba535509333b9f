import hypothesis.strategies as st

from abdarg.aaf import AbductiveAF
from abdarg.af import ArgumentationFramework
from abdarg.alp import AbductiveLogicProgram
from abdarg.lp import LogicProgram, Rule


@st.composite
def frameworks(draw, max_args=6, names="abcdef"):
    args = draw(st.sets(st.sampled_from(names[:max_args]), max_size=max_args))
    pairs = [(a, b) for a in sorted(args) for b in sorted(args)]
    attacks = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return ArgumentationFramework(frozenset(args), frozenset(attacks))


@st.composite
def aafs(draw, max_args=6, max_members=4):
    members = draw(st.lists(frameworks(max_args), min_size=1, max_size=max_members))
    return AbductiveAF.build("G0", [(f"G{i}", F) for i, F in enumerate(members)])


@st.composite
def observations(draw, universe="abcdef"):
    return frozenset(draw(st.sets(st.sampled_from(universe), max_size=3)))


@st.composite
def rules(draw, atoms):
    head = draw(st.sampled_from(atoms))
    pos = draw(st.sets(st.sampled_from(atoms), max_size=2))
    neg = draw(st.sets(st.sampled_from(atoms), max_size=2))
    return Rule(head, frozenset(pos), frozenset(neg - pos))


@st.composite
def programs(draw, max_atoms=4, max_rules=6):
    atoms = "pqrst"[:draw(st.integers(1, max_atoms))]
    return LogicProgram(frozenset(draw(st.lists(rules(atoms), min_size=1, max_size=max_rules))))


@st.composite
def alps(draw, max_atoms=4, max_rules=5, max_abducibles=2):
    P = draw(programs(max_atoms, max_rules))
    U = draw(st.sets(st.sampled_from(sorted(P.atoms)), max_size=max_abducibles))
    return AbductiveLogicProgram(P, frozenset(U))
