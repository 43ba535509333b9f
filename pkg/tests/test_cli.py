import io
import json
import subprocess
import sys

import pytest

from conftest import DATA
from abdarg.cli import run_command
from abdarg.dialogue import validate_credulous, validate_skeptical
from abdarg.formats import parse_aaf, parse_af, parse_trace

AAF_FILE = str(DATA / "running.aaf")
BASE_APX = str(DATA / "running_F.apx")
ALP_FILE = str(DATA / "running.alp")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_explain_skeptical():
    code, out, _ = run("explain", "--aaf", AAF_FILE, "--observation", "b", "--mode", "skeptical")
    assert (code, out) == (0, "G1, G3\n")


def test_explain_credulous():
    code, out, _ = run("explain", "--aaf", AAF_FILE, "--observation", "b", "--mode", "credulous")
    assert (code, out) == (0, "G1, G2, G3\n")


def test_explain_nothing():
    code, out, _ = run("explain", "--aaf", AAF_FILE, "--observation", "z", "--mode", "skeptical")
    assert (code, out) == (1, "no explanation\n")


def test_solve_grounded():
    assert run("solve", "--af", BASE_APX, "--semantics", "grounded")[:2] == (0, "{a, c, d}\n")


def test_solve_complete_and_arg():
    assert run("solve", "--af", BASE_APX, "--semantics", "complete")[:2] == (0, "{a, c, d}\n")
    assert run("solve", "--af", BASE_APX, "--semantics", "complete", "--arg", "b",
               "--mode", "credulous")[:2] == (1, "NO\n")
    assert run("solve", "--af", BASE_APX, "--semantics", "grounded", "--arg", "c")[:2] == (0, "YES\n")
    assert run("solve", "--af", BASE_APX, "--semantics", "grounded", "--arg", "z")[0] == 2


def test_consequences(tmp_path):
    lp = tmp_path / "p4.lp"
    lp.write_text("p :- not s, r.  p :- not s, not q.  q :- not p.  r.\n")
    assert run("consequences", "--lp", str(lp), "--mode", "credulous")[:2] == (0, "{p, r}\n")
    lp.write_text("p :- not p.\n")
    assert run("consequences", "--lp", str(lp), "--mode", "skeptical")[:2] == (1, "{}\n")


def test_instantiate(tmp_path):
    code, out, _ = run("instantiate", "--lp", ALP_FILE)
    assert code == 0
    F = parse_af(out)
    assert len(F.arguments) == 4 and len(F.attacks) == 3
    assert "% arg_2: (q, {q :- not p.}, {p})" in out.splitlines()
    target = tmp_path / "out.apx"
    assert run("instantiate", "--lp", ALP_FILE, "--out", str(target)) == (0, "", "")
    assert target.read_text() == out


def test_abduce_credulous():
    code, out, _ = run("abduce", "--alp", ALP_FILE, "--query", "q", "--mode", "credulous", "--via", "aaf")
    assert code == 0
    assert "({}, {r})" in out.splitlines()


@pytest.mark.parametrize("query", ["p", "q", "r", "s"])
@pytest.mark.parametrize("mode", ["skeptical", "credulous"])
def test_abduce_routes_byte_identical(query, mode):
    direct = run("abduce", "--alp", ALP_FILE, "--query", query, "--mode", mode, "--via", "direct")
    aaf = run("abduce", "--alp", ALP_FILE, "--query", query, "--mode", mode, "--via", "aaf")
    assert direct == aaf


def _split_traces(out):
    blocks, current, explained = [], None, None
    for line in out.splitlines():
        if line.startswith("% explains "):
            if current is not None:
                blocks.append((explained, "\n".join(current)))
            explained, current = line[len("% explains "):], []
        elif current is not None:
            current.append(line)
    if current is not None:
        blocks.append((explained, "\n".join(current)))
    return blocks


@pytest.mark.parametrize("mode, validate", [("skeptical", validate_skeptical),
                                            ("credulous", validate_credulous)])
def test_explain_dialogue_traces_revalidate(mode, validate):
    code, out, _ = run("explain", "--aaf", AAF_FILE, "--observation", "b", "--mode", mode, "--dialogue")
    assert code == 0
    M = parse_aaf(open(AAF_FILE).read())
    blocks = _split_traces(out)
    assert blocks
    for explained, trace in blocks:
        final = validate(M, parse_trace(trace), {"b"})
        assert "{" + ", ".join(sorted(final)) + "}" == explained


def test_explain_json_schema():
    code, out, _ = run("explain", "--aaf", AAF_FILE, "--observation", "b", "--mode", "skeptical",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert [e["name"] for e in doc["explanations"]] == ["G1", "G3"]
    for e in doc["explanations"]:
        assert set(e) == {"name", "hypotheses", "initial_argument", "dialogue", "states"}
        assert len(e["states"]) == len(e["dialogue"]) + 1
        assert e["name"] in e["states"][-1]
        assert all(set(m) == {"move", "from", "to"} for m in e["dialogue"])


def test_abduce_json():
    code, out, _ = run("abduce", "--alp", ALP_FILE, "--query", "q", "--mode", "skeptical", "--via", "aaf",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["hypotheses"] == [{"add": ["s"], "remove": []}, {"add": ["r", "s"], "remove": []},
                                 {"add": ["s"], "remove": ["r"]}]
    hyps = [h for e in doc["explanations"] for h in e["hypotheses"]]
    assert sorted(map(json.dumps, hyps)) == sorted(map(json.dumps, doc["hypotheses"]))


def test_abduce_dialogue_needs_aaf():
    code, _, err = run("abduce", "--alp", ALP_FILE, "--query", "q", "--mode", "skeptical", "--dialogue")
    assert code == 2 and "--via aaf" in err


def test_abduce_dialogue():
    code, out, _ = run("abduce", "--alp", ALP_FILE, "--query", "q", "--mode", "skeptical", "--via", "aaf",
                       "--dialogue")
    assert code == 0
    explained = set()
    for line in out.splitlines():
        if line.startswith("% explains {"):
            explained |= set(line[len("% explains {"):-1].split(", "))
    # the ({r,s}, {}) hypothesis shares the H{s;} member
    assert explained == {"H{s;}", "H{s;r}"}


@pytest.mark.parametrize("argv", [
    ["explain", "--aaf", "/nonexistent.aaf", "--observation", "b", "--mode", "skeptical"],
    ["abduce", "--alp", ALP_FILE, "--query", "zz", "--mode", "skeptical"],
    ["solve", "--af", BASE_APX],
    ["bogus"],
])
def test_input_errors(argv):
    assert run(*argv)[0] == 2


def test_error_message_names_file_and_line(tmp_path):
    bad = tmp_path / "bad.alp"
    bad.write_text("p :- q.\np(X) :- q.\n")
    code, _, err = run("abduce", "--alp", str(bad), "--query", "p", "--mode", "skeptical")
    assert code == 2
    assert f"{bad}:2:" in err and "VariableNotSupported" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "abdarg.cli", "solve", "--af", BASE_APX,
                           "--semantics", "grounded"], capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "{a, c, d}\n")
