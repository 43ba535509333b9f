import pytest
from hypothesis import given, settings

from conftest import DATA, MEMBERS
from strategies import aafs, alps, frameworks
from abdarg.aaf import AbductiveAF
from abdarg.dialogue import search_credulous, search_skeptical, validate_credulous, validate_skeptical
from abdarg.errors import (AbducibleNotInProgram, DuplicateName, MissingBase, ParseError,
                           UndeclaredArgument, VariableNotSupported)
from abdarg.formats import (parse_aaf, parse_af, parse_alp, parse_lp, parse_trace, render_trace,
                            serialize_aaf, serialize_af, serialize_alp)

from test_dialogue import CREDULOUS, SKEPTICAL_1, SKEPTICAL_2


def test_parse_af_simple():
    F = parse_af("arg(a). arg(b). att(a,b).")
    assert (len(F.arguments), len(F.attacks)) == (2, 1)


def test_parse_af_whitespace_and_comments():
    F = parse_af("% header\narg( a ).arg(b)   % trailing\n.\n att ( a , b ) .\narg(a).")
    assert F == parse_af("arg(a). arg(b). att(a,b).")


def test_parse_af_undeclared():
    with pytest.raises(UndeclaredArgument) as exc:
        parse_af("att(a,b).")
    assert (exc.value.line, exc.value.column) == (1, 1)


def test_parse_af_syntax_error_position():
    with pytest.raises(ParseError) as exc:
        parse_af("arg(a).\n  arg(b)\n", source="x.apx")
    assert (exc.value.line, exc.value.column) == (2, 3)
    assert str(exc.value).startswith("x.apx:2:3")


def test_base_apx_file():
    assert parse_af((DATA / "running_F.apx").read_text()) == MEMBERS["F"]


def test_af_round_trip_base():
    assert parse_af(serialize_af(MEMBERS["F"])) == MEMBERS["F"]


def test_parse_aaf_running(M1):
    assert parse_aaf((DATA / "running.aaf").read_text()) == M1


def test_parse_aaf_default_base():
    M = parse_aaf("@af A\narg(a).\n@af B\narg(b).")
    assert M.base == "A"


def test_parse_aaf_errors():
    with pytest.raises(DuplicateName):
        parse_aaf("@af G1\narg(a).\n@af G1\narg(b).")
    with pytest.raises(MissingBase):
        parse_aaf("@base X\n@af F\narg(a).")
    with pytest.raises(UndeclaredArgument) as exc:
        parse_aaf("@af F\narg(a).\n@af G\narg(a).\natt(a,b).")
    assert exc.value.line == 5


def test_parse_alp_example(ALP4, P4):
    assert ALP4.program == P4
    assert ALP4.abducibles == {"r", "s"}
    assert parse_alp((DATA / "running.alp").read_text()) == ALP4


@pytest.mark.parametrize("text, error", [
    ("p :- q. @abducible t.", AbducibleNotInProgram),
    ("p(X) :- q(X).", VariableNotSupported),
    ("p :- X.", VariableNotSupported),
    ("p(a).", ParseError),
    ("p :- q", ParseError),
    ("p :- q, .", ParseError),
    ("@include x.", ParseError),
])
def test_parse_alp_errors(text, error):
    with pytest.raises(error):
        parse_alp(text)


def test_not_as_atom():
    # 'not' followed by ',' or '.' is an ordinary atom
    assert parse_lp("p :- not.").atoms == {"p", "not"}


def test_alp_round_trip(ALP4):
    assert parse_alp(serialize_alp(ALP4)) == ALP4
    assert serialize_alp(ALP4) == "p :- not q, not s.\np :- r, not s.\nq :- not p.\nr.\n@abducible r, s.\n"


@settings(max_examples=150, deadline=None)
@given(frameworks())
def test_af_round_trip(F):
    assert parse_af(serialize_af(F)) == F


@settings(max_examples=100, deadline=None)
@given(aafs())
def test_aaf_round_trip(M):
    assert parse_aaf(serialize_aaf(M)) == AbductiveAF.build(M.base, M.members.items())


@settings(max_examples=150, deadline=None)
@given(alps())
def test_alp_round_trip_random(alp):
    assert parse_alp(serialize_alp(alp)) == alp


def test_trace_rendering(M1):
    assert render_trace(M1, SKEPTICAL_1).splitlines() == [
        "% claim: b  {F, G1, G2, G3}",
        "OPP: c -> b  {F, G1, G2, G3}",
        "PRO: e -> c  {G1, G3}",
        "OPP: ok      {G1, G3}",
        "OPP: a -> b  {G1, G3}",
        "PRO: e -> a  {G1}",
        "OPP: ok      {G1}",
        "OPP: ok      {G1}",
        "PRO: win     {G1}",
    ]
    assert "PRO: a -/> b  {G3}" in render_trace(M1, SKEPTICAL_2)


@pytest.mark.parametrize("D", [SKEPTICAL_1, SKEPTICAL_2, CREDULOUS])
def test_trace_round_trip(M1, D):
    assert parse_trace(render_trace(M1, D)) == D


def test_trace_claim_from_first_attack():
    text = "OPP: c -> b\nPRO: b -> c\nOPP: ok\nPRO: win\n"
    assert parse_trace(text).initial_argument == "b"


def test_trace_errors():
    with pytest.raises(ParseError):
        parse_trace("OPP: a -/> b\n")
    with pytest.raises(ParseError):
        parse_trace("PRO: ok\n")
    with pytest.raises(ParseError):
        parse_trace("OPP: ok\nPRO: win\n")


@settings(max_examples=100, deadline=None)
@given(aafs())
def test_emitted_traces_revalidate(M):
    X = frozenset(sorted(set().union(*(F.arguments for F in M.members.values())))[:1])
    for w in search_skeptical(M, X):
        assert validate_skeptical(M, parse_trace(render_trace(M, w.dialogue)), X) == w.explained
    for w in search_credulous(M, X):
        assert validate_credulous(M, parse_trace(render_trace(M, w.dialogue)), X) == w.explained
