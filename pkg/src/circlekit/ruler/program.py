"""Ruler programs: the AST and a line-oriented parser.

A program is one statement per line; ``#`` starts a comment::

    given c : circle_with_center
    given A : point
    l = join(A, B)
    D = on_line(l, "past:B")
    output l : parallel_to_diameter

``case "tag"`` opens a branch; the statements after it run only when the
caller selects that tag. Statements before the first ``case`` are shared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import ArityError, KindError, RulerSyntaxError, UnknownIdentifier

GIVEN_KINDS = {"point": "point", "line": "line", "circle_with_center": "circle"}

# primitive -> (argument kinds, result kind); "hint" is a quoted tag
PRIMITIVES: dict[str, tuple[tuple[str, ...], str]] = {
    "join": (("point", "point"), "line"),
    "meet": (("line", "line"), "point"),
    "on_line": (("line", "hint"), "point"),
    "on_circle": (("hint",), "point"),
    "second_meet": (("line", "point"), "point"),
}

LINE_HINTS = ("any", "between")
CIRCLE_HINTS = ("any",)

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<comment>\#.*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<number>[0-9]+(?:\.[0-9]*)?)
  | (?P<string>"[^"\n]*")
  | (?P<punct>[=(),:])
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


@dataclass(frozen=True)
class Given:
    name: str
    kind: str
    line: int


@dataclass(frozen=True)
class Step:
    name: str
    op: str
    args: tuple[str, ...]
    line: int
    case: str | None = None

    @property
    def hint(self) -> str | None:
        kinds = PRIMITIVES[self.op][0]
        return self.args[kinds.index("hint")] if "hint" in kinds else None

    @property
    def refs(self) -> tuple[str, ...]:
        kinds = PRIMITIVES[self.op][0]
        return tuple(a for a, k in zip(self.args, kinds) if k != "hint")


@dataclass(frozen=True)
class Program:
    givens: tuple[Given, ...]
    steps: tuple[Step, ...]
    output: tuple[str, str] | None = None
    cases: tuple[str, ...] = ()
    name: str = "program"
    kinds: dict[str, str] = field(default_factory=dict, compare=False, repr=False)

    def steps_for(self, case: str | None) -> list[Step]:
        return [s for s in self.steps if s.case is None or s.case == case]

    @property
    def circle(self) -> str | None:
        for g in self.givens:
            if g.kind == "circle_with_center":
                return g.name
        return None


def tokenize(text: str, lineno: int) -> list[Token]:
    out = []
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        if kind in ("ws", "comment"):
            continue
        if kind == "bad":
            raise RulerSyntaxError(f"unexpected character {m.group()!r}", lineno, m.start() + 1)
        out.append(Token(kind, m.group(), m.start() + 1))
    return out


class _Line:
    def __init__(self, tokens: list[Token], lineno: int, width: int) -> None:
        self.tokens = tokens
        self.pos = 0
        self.lineno = lineno
        self.width = width

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def fail(self, msg: str, tok: Token | None = None) -> RulerSyntaxError:
        col = tok.column if tok else self.width + 1
        return RulerSyntaxError(msg, self.lineno, col)

    def take(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text else kind
            got = repr(tok.text) if tok else "end of line"
            raise self.fail(f"expected {want}, found {got}", tok)
        self.pos += 1
        return tok

    def end(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise self.fail(f"unexpected {tok.text!r}", tok)


def parse(text: str, name: str = "program") -> Program:
    """Parse and statically check a ruler program."""
    givens: list[Given] = []
    steps: list[Step] = []
    output: tuple[str, str] | None = None
    cases: list[str] = []
    case: str | None = None
    shared: dict[str, str] = {}
    scoped: dict[str, dict[str, str]] = {}
    out_line = 0

    def scope() -> dict[str, str]:
        return scoped[case] if case is not None else shared

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = tokenize(raw, lineno)
        if not toks:
            continue
        ln = _Line(toks, lineno, len(raw))
        head = ln.take("ident")
        if head.text == "given" and ln.peek() and ln.peek().kind == "ident":
            if case is not None or steps:
                raise ln.fail("givens must come before the first step", head)
            ident = ln.take("ident")
            ln.take("punct", ":")
            kind_tok = ln.take("ident")
            if kind_tok.text not in GIVEN_KINDS:
                raise ln.fail(f"unknown given kind {kind_tok.text!r}", kind_tok)
            ln.end()
            _define(shared, ident, GIVEN_KINDS[kind_tok.text], ln)
            givens.append(Given(ident.text, kind_tok.text, lineno))
        elif head.text == "case" and ln.peek() and ln.peek().kind == "string":
            tag = ln.take("string").text[1:-1]
            ln.end()
            if tag in cases:
                raise ln.fail(f"case {tag!r} appears twice", head)
            cases.append(tag)
            case = tag
            scoped[tag] = dict(shared)
        elif head.text == "output" and ln.peek() and ln.peek().kind == "ident":
            ident = ln.take("ident")
            ln.take("punct", ":")
            pred = ln.take("ident")
            ln.end()
            if output is not None:
                raise ln.fail("a program has one output", head)
            output = (ident.text, pred.text)
            out_line = lineno
        else:
            ln.take("punct", "=")
            op = ln.take("ident")
            if op.text not in PRIMITIVES:
                raise ln.fail(f"{op.text!r} is not a straightedge primitive", op)
            ln.take("punct", "(")
            args: list[Token] = []
            if not (ln.peek() and ln.peek().text == ")"):
                while True:
                    tok = ln.peek()
                    if tok is not None and tok.kind == "number":
                        raise ln.fail("numbers are not allowed; straightedge steps take names and hints", tok)
                    if tok is None or tok.kind not in ("ident", "string"):
                        raise ln.fail("expected a name or a quoted hint", tok)
                    args.append(tok)
                    ln.pos += 1
                    if ln.peek() and ln.peek().text == ",":
                        ln.pos += 1
                        continue
                    break
            ln.take("punct", ")")
            ln.end()
            kinds, result = PRIMITIVES[op.text]
            if len(args) != len(kinds):
                raise ArityError(f"{op.text} takes {len(kinds)} argument(s), got {len(args)}", lineno, op.column)
            env = scope()
            for tok, want in zip(args, kinds):
                if want == "hint":
                    if tok.kind != "string":
                        raise KindError(f"{op.text} expects a quoted hint", lineno, tok.column)
                    continue
                if tok.kind != "ident":
                    raise KindError(f"{op.text} expects a {want} name, not a hint", lineno, tok.column)
                if tok.text not in env:
                    raise UnknownIdentifier(f"{tok.text!r} is not defined yet", lineno, tok.column)
                if env[tok.text] != want:
                    raise KindError(f"{tok.text!r} is a {env[tok.text]}, {op.text} needs a {want}", lineno, tok.column)
            step = Step(head.text, op.text, tuple(t.text if t.kind == "ident" else t.text[1:-1] for t in args), lineno, case)
            if op.text in ("on_circle", "second_meet") and not any(g.kind == "circle_with_center" for g in givens):
                raise KindError(f"{op.text} needs a given circle", lineno, op.column)
            _check_hint(step, env, ln, args)
            _define(env, head, result, ln)
            steps.append(step)

    if output is not None:
        envs = [scoped[c] for c in cases] if cases else [shared]
        for env in envs:
            if output[0] not in env:
                raise UnknownIdentifier(f"output {output[0]!r} is never defined", out_line, None)
    kinds = dict(shared)
    for env in scoped.values():
        kinds.update(env)
    return Program(tuple(givens), tuple(steps), output, tuple(cases), name, kinds)


def _define(env: dict[str, str], tok: Token, kind: str, ln: _Line) -> None:
    if tok.text in env or tok.text in ("given", "output", "case"):
        raise ln.fail(f"{tok.text!r} is already defined", tok)
    env[tok.text] = kind


def _check_hint(step: Step, env: dict[str, str], ln: _Line, args: list[Token]) -> None:
    hint = step.hint
    if hint is None:
        return
    tok = args[PRIMITIVES[step.op][0].index("hint")]
    if step.op == "on_circle":
        if hint not in CIRCLE_HINTS:
            raise ln.fail(f"unknown circle hint {hint!r}", tok)
        return
    if hint in LINE_HINTS:
        return
    if hint.startswith("past:") and env.get(hint[5:]) == "point":
        return
    raise ln.fail(f"unknown line hint {hint!r}", tok)


def audit(program: Program) -> list[str]:
    """Primitives used by the program; raises if anything beyond the straightedge moves appears."""
    used = []
    for s in program.steps:
        if s.op not in PRIMITIVES:
            raise RulerSyntaxError(f"{s.op!r} is not a straightedge primitive", s.line, None)
        used.append(s.op)
    return used


def to_text(program: Program) -> str:
    """Canonical source text of a program."""
    lines = [f"given {g.name} : {g.kind}" for g in program.givens]
    case = None
    for s in program.steps:
        if s.case != case:
            lines.append(f'case "{s.case}"')
            case = s.case
        kinds = PRIMITIVES[s.op][0]
        args = ", ".join(f'"{a}"' if k == "hint" else a for a, k in zip(s.args, kinds))
        lines.append(f"{s.name} = {s.op}({args})")
    if program.output:
        lines.append(f"output {program.output[0]} : {program.output[1]}")
    return "\n".join(lines) + "\n"
