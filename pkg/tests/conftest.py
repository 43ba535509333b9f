import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from abdarg.af import ArgumentationFramework
from abdarg.aaf import AbductiveAF
from abdarg.formats import parse_alp, parse_lp

DATA = Path(__file__).resolve().parent.parent / "data"


def af(args, attacks=""):
    """``af("abcd", "ab bc cb")`` builds a small framework from single-letter shorthand."""
    return ArgumentationFramework(frozenset(args), frozenset((p[0], p[1]) for p in attacks.split()))


MEMBERS = {
    "F": af("abcd", "ab bc cb"),
    "G1": af("abcde", "ab bc cb ea ec"),
    "G2": af("bc", "bc cb"),
    "G3": af("bce", "bc cb ec"),
}

P4_TEXT = "p :- not s, r.  p :- not s, not q.  q :- not p.  r."


def iso_map(F, G):
    """Brute-force isomorphism F -> G as a dict, or None; fine for a handful of arguments."""
    src, dst = sorted(F.arguments), sorted(G.arguments)
    if len(src) != len(dst):
        return None
    for perm in itertools.permutations(dst):
        m = dict(zip(src, perm))
        if {(m[a], m[b]) for a, b in F.attacks} == G.attacks:
            return m
    return None


def isomorphic(F, G):
    return iso_map(F, G) is not None


@pytest.fixture
def members():
    return dict(MEMBERS)


@pytest.fixture
def M1():
    return AbductiveAF.build("F", MEMBERS.items())


@pytest.fixture
def P4():
    return parse_lp(P4_TEXT)


@pytest.fixture
def P4_s():
    return parse_lp(P4_TEXT + " s.")


@pytest.fixture
def P4_no_r():
    return parse_lp("p :- not s, r.  p :- not s, not q.  q :- not p.")


@pytest.fixture
def ALP4():
    return parse_alp(P4_TEXT + " @abducible r, s.")


# -- acceptance reporting ---------------------------------------------------------

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if report.when == "call" and marker in report.nodeid:
        key = report.nodeid.split(marker)[1]
        ACCEPTANCE[key] = (report.passed, report.longrepr and str(report.longrepr).splitlines()[-1] or "")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split("_")[0])):
        ok, why = ACCEPTANCE[key]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {key}"
        terminalreporter.write_line(line + ("" if ok else f"  ({why})"))
