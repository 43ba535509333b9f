"""Text formats: apx frameworks, AAF block files, ALP programs and dialogue traces.

apx::

    arg(a). arg(b).
    att(a,b).        % comments run to the end of the line

AAF: apx blocks introduced by ``@af <name>``; ``@base <name>`` picks the base
(default: the first block)::

    @base F
    @af F
    arg(a). arg(b). att(a,b).
    @af G
    arg(b).

ALP: ground rules, facts and abducible directives::

    p :- not s, r.
    r.
    @abducible r, s.
"""
from __future__ import annotations

import re
from typing import Iterable

from .aaf import AbductiveAF
from .af import ArgumentationFramework, fmt_set
from .alp import AbductiveLogicProgram, Hypothesis
from .dialogue import (Dialogue, ExplanationWitness, Move, OppAttack, OppOk, ProDefence,
                       ProNegation, ProWin, info_states)
from .errors import (AbducibleNotInProgram, DuplicateName, MissingBase, ParseError,
                     UndeclaredArgument, VariableNotSupported)
from .lp import LogicProgram, Rule

IDENT = r"[a-z][a-zA-Z0-9_]*"


def _strip_comments(text: str) -> str:
    # keep offsets stable so reported columns match the input
    return re.sub(r"%[^\n]*", lambda m: " " * len(m.group()), text)


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


# -- apx ----------------------------------------------------------------------

_APX_STMT = re.compile(
    rf"\s*(?P<kind>arg|att)\s*\(\s*(?P<a>{IDENT})\s*(?:,\s*(?P<b>{IDENT})\s*)?\)\s*\."
)


def parse_af(text: str, source: str | None = None, line_offset: int = 0) -> ArgumentationFramework:
    clean = _strip_comments(text)
    args: set[str] = set()
    attacks: list[tuple[str, str, int]] = []
    pos = 0
    while clean[pos:].strip():
        m = _APX_STMT.match(clean, pos)
        if not m:
            skip = len(clean[pos:]) - len(clean[pos:].lstrip())
            line, col = _position(clean, pos + skip)
            raise ParseError("expected 'arg(<id>).' or 'att(<id>,<id>).'", line + line_offset, col, source)
        if m["kind"] == "arg":
            if m["b"] is not None:
                line, col = _position(clean, m.start("kind"))
                raise ParseError("arg/1 takes a single argument", line + line_offset, col, source)
            args.add(m["a"])
        else:
            if m["b"] is None:
                line, col = _position(clean, m.start("kind"))
                raise ParseError("att/2 takes two arguments", line + line_offset, col, source)
            attacks.append((m["a"], m["b"], m.start("kind")))
        pos = m.end()
    for a, b, at in attacks:
        for x in (a, b):
            if x not in args:
                line, col = _position(clean, at)
                raise UndeclaredArgument(f"attack {a} -> {b} mentions undeclared argument {x}",
                                         line + line_offset, col, source)
    return ArgumentationFramework(frozenset(args), frozenset((a, b) for a, b, _ in attacks))


def serialize_af(F: ArgumentationFramework) -> str:
    lines = [f"arg({a})." for a in sorted(F.arguments)]
    lines += [f"att({a},{b})." for a, b in sorted(F.attacks)]
    return "\n".join(lines) + "\n"


# -- AAF ------------------------------------------------------------------------

_DIRECTIVE = re.compile(r"^\s*@(?P<kw>\w+)\s*(?P<rest>.*?)\s*$")


def parse_aaf(text: str, source: str | None = None) -> AbductiveAF:
    lines = _strip_comments(text).split("\n")
    blocks: list[tuple[str, int, int]] = []  # name, first content line, end line (exclusive)
    base: tuple[str, int] | None = None
    for i, line in enumerate(lines):
        m = _DIRECTIVE.match(line)
        if not m:
            if line.strip() and not blocks:
                raise ParseError("content before the first '@af <name>' block", i + 1, 1, source)
            continue
        kw, rest = m["kw"], m["rest"]
        if kw not in ("af", "base") or not re.fullmatch(r"\S+", rest):
            raise ParseError(f"expected '@af <name>' or '@base <name>', got '{line.strip()}'", i + 1, 1, source)
        if kw == "base":
            if base is not None:
                raise DuplicateName(f"second @base directive (first names {base[0]})", i + 1, 1, source)
            base = (rest, i + 1)
            continue
        if any(rest == b[0] for b in blocks):
            raise DuplicateName(f"abducible framework {rest} defined twice", i + 1, 1, source)
        if blocks:
            blocks[-1] = (blocks[-1][0], blocks[-1][1], i)
        blocks.append((rest, i + 1, len(lines)))
    if blocks:
        blocks[-1] = (blocks[-1][0], blocks[-1][1], len(lines))
    if not blocks:
        raise MissingBase("no '@af <name>' block found", None, None, source)
    frameworks = []
    for name, start, end in blocks:
        body = "\n".join(lines[start:end])
        frameworks.append((name, parse_af(body, source, line_offset=start)))
    base_name = base[0] if base else blocks[0][0]
    if base_name not in {b[0] for b in blocks}:
        raise MissingBase(f"@base names {base_name}, which has no block", base[1], 1, source)
    return AbductiveAF.build(base_name, frameworks)


def serialize_aaf(M: AbductiveAF) -> str:
    out = [f"@base {M.base}"]
    for name, F in M.members.items():
        out.append(f"@af {name}")
        out.append(serialize_af(F).rstrip("\n"))
    return "\n".join(out) + "\n"


# -- ALP --------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<directive>@[a-zA-Z_]+)
  | (?P<if>:-)
  | (?P<ident>[a-z][a-zA-Z0-9_]*)
  | (?P<var>[A-Z_][a-zA-Z0-9_]*)
  | (?P<punct>[(),.])
""", re.VERBOSE)


def _tokens(text: str, source: str | None):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            line, col = _position(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col, source)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "punct":
                kind = value
            line, col = _position(text, pos)
            yield kind, value, line, col
        pos = m.end()
    line, col = _position(text, len(text))
    yield "eof", "", line, col


class _AlpParser:
    def __init__(self, text: str, source: str | None):
        self.toks = list(_tokens(_strip_comments(text), source))
        self.i = 0
        self.source = source

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str, what: str):
        tok = self.toks[self.i]
        if tok[0] == "var":
            raise VariableNotSupported(f"variable {tok[1]} in a ground program", tok[2], tok[3], self.source)
        if tok[0] != kind:
            shown = tok[1] or "end of input"
            raise ParseError(f"expected {what}, found '{shown}'", tok[2], tok[3], self.source)
        self.i += 1
        return tok

    def atom(self) -> str:
        tok = self.take("ident", "an atom")
        if self.peek()[0] == "(":
            self._reject_term(tok)
        return tok[1]

    def _reject_term(self, tok):
        depth, j = 0, self.i
        while j < len(self.toks) and self.toks[j][0] != "eof":
            kind = self.toks[j][0]
            if kind == "var":
                raise VariableNotSupported(f"variable {self.toks[j][1]} in a ground program",
                                           self.toks[j][2], self.toks[j][3], self.source)
            depth += kind == "("
            depth -= kind == ")"
            if depth == 0:
                break
            j += 1
        raise ParseError(f"atom {tok[1]} has arguments; only propositional atoms are supported",
                         tok[2], tok[3], self.source)

    def parse(self):
        rules: set[Rule] = set()
        abducibles: list[tuple[str, int, int]] = []
        while self.peek()[0] != "eof":
            tok = self.peek()
            if tok[0] == "directive":
                if tok[1] != "@abducible":
                    raise ParseError(f"unknown directive {tok[1]}", tok[2], tok[3], self.source)
                self.i += 1
                while True:
                    t = self.peek()
                    abducibles.append((self.atom(), t[2], t[3]))
                    if self.peek()[0] != ",":
                        break
                    self.i += 1
                self.take(".", "'.' after the abducible list")
                continue
            head = self.atom()
            pos: set[str] = set()
            neg: set[str] = set()
            if self.peek()[0] == "if":
                self.i += 1
                while True:
                    t = self.peek()
                    if t[0] == "ident" and t[1] == "not" and self.toks[self.i + 1][0] in ("ident", "var"):
                        self.i += 1
                        neg.add(self.atom())
                    else:
                        pos.add(self.atom())
                    if self.peek()[0] != ",":
                        break
                    self.i += 1
            self.take(".", "'.' at the end of the rule")
            rules.add(Rule(head, frozenset(pos), frozenset(neg)))
        program = LogicProgram(frozenset(rules))
        for a, line, col in abducibles:
            if a not in program.atoms:
                raise AbducibleNotInProgram(f"abducible {a} does not occur in the program", line, col, self.source)
        return AbductiveLogicProgram(program, frozenset(a for a, _, _ in abducibles))


def parse_alp(text: str, source: str | None = None) -> AbductiveLogicProgram:
    return _AlpParser(text, source).parse()


def parse_lp(text: str, source: str | None = None) -> LogicProgram:
    return parse_alp(text, source).program


def serialize_alp(alp: AbductiveLogicProgram) -> str:
    out = str(alp.program)
    if alp.abducibles:
        out += ("\n" if out else "") + f"@abducible {', '.join(sorted(alp.abducibles))}."
    return out + "\n"


# -- dialogue traces ----------------------------------------------------------------

def render_trace(M: AbductiveAF, D: Dialogue) -> str:
    """One move per line in arrow notation, each followed by the information state."""
    states = info_states(M, D)
    width = max((len(str(m)) for m in D.moves), default=0)
    lines = [f"% claim: {D.initial_argument}  {fmt_set(states[0])}"]
    lines += [f"{str(m):<{width}}  {fmt_set(s)}" for m, s in zip(D.moves, states[1:])]
    return "\n".join(lines) + "\n"


_MOVE = re.compile(
    r"^\s*(?P<who>OPP|PRO):\s*(?:(?P<word>ok|win)|(?P<x>[^\s{]+)\s*(?P<arrow>-/>|->)\s*(?P<y>[^\s{]+))\s*(?:\{.*\})?\s*$"
)
_CLAIM = re.compile(r"^\s*%\s*claim:\s*(?P<x>[^\s{]+)")


def parse_trace(text: str, source: str | None = None) -> Dialogue:
    moves: list[Move] = []
    claim = None
    for i, line in enumerate(text.split("\n"), 1):
        c = _CLAIM.match(line)
        if c:
            claim = c["x"]
            continue
        line = re.sub(r"%.*", "", line)
        if not line.strip():
            continue
        m = _MOVE.match(line)
        if not m:
            raise ParseError(f"not a dialogue move: {line.strip()!r}", i, 1, source)
        who, word = m["who"], m["word"]
        if word:
            if (who, word) == ("OPP", "ok"):
                moves.append(OppOk())
            elif (who, word) == ("PRO", "win"):
                moves.append(ProWin())
            else:
                raise ParseError(f"{who} cannot play '{word}'", i, 1, source)
        elif who == "OPP":
            if m["arrow"] != "->":
                raise ParseError("OPP cannot negate attacks", i, 1, source)
            moves.append(OppAttack(m["x"], m["y"]))
        else:
            cls = ProDefence if m["arrow"] == "->" else ProNegation
            moves.append(cls(m["x"], m["y"]))
    if claim is None:
        first = next((m for m in moves if isinstance(m, OppAttack)), None)
        if first is None:
            raise ParseError("trace has no '% claim: <argument>' line and no OPP attack", None, None, source)
        claim = first.target
    return Dialogue(tuple(moves), claim)


# -- JSON --------------------------------------------------------------------------

_MOVE_KIND = {OppAttack: "opp_attack", ProDefence: "pro_defence", ProNegation: "pro_negation",
              OppOk: "opp_ok", ProWin: "pro_win"}


def move_json(m: Move) -> dict:
    return {"move": _MOVE_KIND[type(m)], "from": getattr(m, "attacker", None), "to": getattr(m, "target", None)}


def hypothesis_json(h: Hypothesis) -> dict:
    return {"add": sorted(h.added), "remove": sorted(h.removed)}


def explanation_json(M: AbductiveAF, name: str, witnesses: Iterable[ExplanationWitness],
                     hypotheses: Iterable[Hypothesis] = ()) -> dict:
    """JSON entry for one explaining member with the first witness that covers it."""
    witness = next((w for w in witnesses if name in w.explained), None)
    entry = {"name": name, "hypotheses": [hypothesis_json(h) for h in hypotheses],
             "initial_argument": None, "dialogue": [], "states": []}
    if witness is not None:
        D = witness.dialogue
        entry["initial_argument"] = D.initial_argument
        entry["dialogue"] = [move_json(m) for m in D.moves]
        entry["states"] = [sorted(s) for s in info_states(M, D)]
    return entry
