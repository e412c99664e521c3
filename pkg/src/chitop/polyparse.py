"""Problem files and polynomial expressions.

A problem file is line oriented::

    # comment
    mode: wps
    vars: x y z u
    weights: 1 5 1 2
    eq: x*y + z^6 + u^3

``quotient: m ; w1 ... wn`` declares a cyclic quotient.  Expressions use
integer or rational literals, ``+ - * / ^`` and parentheses; juxtaposition is
rejected, so ``2x`` must be written ``2*x``.  Division is only allowed by a
nonzero constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .errors import ProblemParseError
from .exactmath import MultiPoly

MODES = ("affine", "quotient", "wps", "resultant", "roots", "mmp", "bounds")

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^|\*\*|[-+*/()]))")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    col: int


def _tokenize(text: str, line: Optional[int], col0: int) -> list:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text[pos:]) - len(text[pos:].lstrip())
            raise ProblemParseError(f"unexpected character {text[pos + bad]!r}", line, col0 + pos + bad)
        start = m.start(m.lastindex)
        kind = ("num", "name", "op")[m.lastindex - 1]
        out.append(Token(kind, m.group(m.lastindex), col0 + start))
        pos = m.end()
    out.append(Token("end", "", col0 + len(text)))
    return out


class _Parser:
    def __init__(self, text: str, vars, line: Optional[int] = None, col0: int = 1):
        self.vars = tuple(vars)
        self.line = line
        self.toks = _tokenize(text, line, col0)
        self.i = 0

    def error(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        return ProblemParseError(msg, self.line, tok.col)

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self) -> MultiPoly:
        if self.peek().kind == "end":
            raise self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            if tok.kind in ("num", "name") or tok.text == "(":
                raise self.error("implicit multiplication is not allowed; use '*'")
            raise self.error(f"unexpected {tok.text!r}")
        return p

    def expr(self) -> MultiPoly:
        p = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> MultiPoly:
        p = self.unary()
        while self.peek().text in ("*", "/"):
            op = self.take()
            q = self.unary()
            if op.text == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise self.error("division only by a nonzero constant", op)
                p = p.scale(1 / q.constant_value())
        return p

    def unary(self) -> MultiPoly:
        if self.peek().text == "-":
            self.take()
            return -self.unary()
        if self.peek().text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.peek().text in ("^", "**"):
            self.take()
            tok = self.take()
            if tok.kind != "num":
                raise self.error("exponent must be a nonnegative integer literal", tok)
            base = base ** int(tok.text)
            if self.peek().text in ("^", "**"):
                raise self.error("chained exponents need parentheses")
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        if tok.kind == "num":
            return MultiPoly.const(int(tok.text), self.vars)
        if tok.kind == "name":
            if tok.text not in self.vars:
                raise self.error(f"unknown variable {tok.text!r}", tok)
            return MultiPoly.var(tok.text, self.vars)
        if tok.text == "(":
            p = self.expr()
            close = self.take()
            if close.text != ")":
                raise self.error("expected ')'", close)
            return p
        if tok.kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_poly(text: str, vars, line: Optional[int] = None, col0: int = 1) -> MultiPoly:
    """Parse one polynomial expression in the given variables."""
    return _Parser(text, vars, line, col0).parse()


@dataclass
class ProblemFile:
    mode: str
    vars: tuple
    gens: list = field(default_factory=list)
    quotient: Optional[tuple] = None  # (m, action weights)
    weights: Optional[tuple] = None
    options: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.vars)


def _ints(text, line, col, what, positive=False) -> tuple:
    out = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        if not re.fullmatch(r"-?\d+", tok):
            raise ProblemParseError(f"{what} must be integers, got {tok!r}", line, col + m.start())
        v = int(tok)
        if positive and v <= 0:
            raise ProblemParseError(f"{what} must be positive, got {v}", line, col + m.start())
        out.append(v)
    return tuple(out)


def parse_problem(text: str) -> ProblemFile:
    """Parse a problem file; errors carry 1-based line and column numbers."""
    fields: dict = {}
    eqs = []
    options = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ":" not in body:
            col = len(body) - len(body.lstrip()) + 1
            raise ProblemParseError("expected 'key: value'", lineno, col)
        key, value = body.split(":", 1)
        key = key.strip()
        vcol = len(key) + 2 + (len(body) - len(body.lstrip()))
        vcol += len(value) - len(value.lstrip())
        value = value.strip()
        if key == "eq":
            eqs.append((value, lineno, vcol))
        elif key in ("vars", "weights", "quotient", "mode"):
            if key in fields:
                raise ProblemParseError(f"duplicate '{key}' line", lineno, 1)
            fields[key] = (value, lineno, vcol)
        elif key == "option":
            name, _, val = value.partition("=")
            options[name.strip()] = val.strip()
        else:
            raise ProblemParseError(f"unknown key {key!r}", lineno, 1)

    declared_mode = fields.get("mode", ("",))[0]
    if "vars" not in fields and declared_mode not in ("bounds", "mmp"):
        raise ProblemParseError("missing 'vars:' line")
    vtext, vline, vcol = fields.get("vars", ("", None, 1))
    vars = tuple(vtext.split())
    for name in vars:
        if not _IDENT.match(name):
            raise ProblemParseError(f"bad variable name {name!r}", vline, vcol + vtext.index(name))
    if len(set(vars)) != len(vars):
        raise ProblemParseError("repeated variable name", vline, vcol)

    quotient = weights = None
    if "quotient" in fields:
        qtext, qline, qcol = fields["quotient"]
        if ";" not in qtext:
            raise ProblemParseError("expected 'quotient: m ; w1 ... wn'", qline, qcol)
        mtext, wtext = qtext.split(";", 1)
        m = _ints(mtext, qline, qcol, "group order", positive=True)
        if len(m) != 1:
            raise ProblemParseError("expected one group order before ';'", qline, qcol)
        w = _ints(wtext, qline, qcol + len(mtext) + 1, "action weights")
        if len(w) != len(vars):
            raise ProblemParseError(f"{len(w)} action weights for {len(vars)} variables", qline, qcol)
        quotient = (m[0], w)
    if "weights" in fields:
        wtext, wline, wcol = fields["weights"]
        weights = _ints(wtext, wline, wcol, "weights", positive=True)
        if len(weights) != len(vars):
            raise ProblemParseError(f"{len(weights)} weights for {len(vars)} variables", wline, wcol)

    if "mode" in fields:
        mode, mline, mcol = fields["mode"]
        if mode not in MODES:
            raise ProblemParseError(f"unknown mode {mode!r}", mline, mcol)
    else:
        mode = "quotient" if quotient else "wps" if weights else "affine"
    if mode == "quotient" and quotient is None:
        raise ProblemParseError("quotient mode needs a 'quotient:' line")
    if mode == "wps" and weights is None:
        raise ProblemParseError("wps mode needs a 'weights:' line")
    if mode in ("resultant", "roots") and len(vars) != 1:
        raise ProblemParseError(f"{mode} mode needs exactly one variable")

    gens = [parse_poly(t, vars, ln, col) for t, ln, col in eqs]
    if not gens and mode in ("resultant", "roots"):
        raise ProblemParseError(f"{mode} mode needs at least one 'eq:' line")
    return ProblemFile(mode, vars, gens, quotient, weights, options)
