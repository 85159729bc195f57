"""Input files and relation expressions.

A job file is a small TOML document with three sections: ``[algebra]``
(free generators, or quiver vertices and arrows), ``[order]`` (scheme and
arrow precedence), and ``[relations]`` (named expressions).  The expression
grammar has rational literals, generator names, ``e<vertex>`` idempotents,
``+``, binary and unary ``-``, ``*`` (mandatory, no juxtaposition), and
parentheses; ``t`` is reserved for the homogenization variable and cannot
appear in input.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .algebra import AlgebraError, Monomial, NcPoly, Quiver
from .ordering import OrderSpec


class InputError(ValueError):
    """A malformed job file or relation expression."""


class ExpressionError(InputError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


# -- expression parsing ------------------------------------------------------

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[-+*/()])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos + 1)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _ExprParser:
    def __init__(self, text: str, quiver: Quiver):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.quiver = quiver

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def parse(self) -> NcPoly:
        value, _ = self.expr()
        kind, text, col = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected {text!r}", col)
        return value

    def expr(self):
        value, wordlike = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                rhs, _ = self.term()
                value = value + rhs if text == "+" else value - rhs
                wordlike = False
            else:
                return value, wordlike

    def term(self):
        value, wordlike = self.factor()
        while True:
            kind, text, col = self.peek()
            if kind == "op" and text == "*":
                self.take()
                rhs, rhs_wordlike = self.factor()
                value = value * rhs
                wordlike = wordlike and rhs_wordlike
                if wordlike and not value:
                    raise ExpressionError(
                        "product of paths is identically zero (incomposable endpoints)",
                        col)
            else:
                return value, wordlike

    def factor(self):
        kind, text, col = self.peek()
        if kind == "op" and text == "-":
            self.take()
            value, _ = self.factor()
            return -value, False
        return self.primary()

    def primary(self):
        kind, text, col = self.take()
        if kind == "int":
            num = int(text)
            k2, t2, _ = self.peek()
            if k2 == "op" and t2 == "/":
                self.take()
                k3, t3, c3 = self.take()
                if k3 != "int":
                    raise ExpressionError("expected an integer denominator", c3)
                if int(t3) == 0:
                    raise ExpressionError("zero denominator", c3)
                return self.quiver.scalar(Fraction(num, int(t3))), False
            return self.quiver.scalar(num), False
        if kind == "name":
            return self.atom(text, col), True
        if kind == "op" and text == "(":
            value, _ = self.expr()
            k2, t2, c2 = self.take()
            if not (k2 == "op" and t2 == ")"):
                raise ExpressionError("expected ')'", c2)
            return value, False
        raise ExpressionError(
            "expected a number, generator, or '('" if kind == "end"
            else f"unexpected {text!r}", col)

    def atom(self, name: str, col: int) -> NcPoly:
        if name == "t":
            raise ExpressionError("'t' is reserved for homogenization", col)
        if name in self.quiver.generator_names():
            return self.quiver.gen(name)
        if name.startswith("e") and name[1:] in self.quiver.vertices:
            return NcPoly(self.quiver,
                          {self.quiver.idempotent(name[1:]): Fraction(1)})
        raise ExpressionError(f"unknown generator {name!r}", col)


def parse_polynomial(text: str, quiver: Quiver) -> NcPoly:
    """Parse a relation expression over the given algebra."""
    return _ExprParser(text, quiver).parse()


# -- rendering ---------------------------------------------------------------

def format_monomial(m: Monomial) -> str:
    """Grammar-compatible rendering: factors joined by '*', t powers spelled out."""
    parts = list(m.word)
    if not parts and m.tpow == 0:
        return "1" if m.quiver.kind == "free" else "e" + m.vertex
    if not parts and m.quiver.kind != "free":
        parts = ["e" + m.vertex]
    parts.extend(["t"] * m.tpow)
    return "*".join(parts)


def _format_coefficient(c: Fraction, m: Monomial) -> str:
    ms = format_monomial(m)
    if ms == "1":
        return str(c)
    if c == 1:
        return ms
    return f"{c}*{ms}"


def format_polynomial(f: NcPoly, order: OrderSpec) -> str:
    """Render with the leading term first, reparseable by the input grammar."""
    if not f:
        return "0"
    parts = []
    for m, c in order.sorted_terms(f):
        if not parts:
            parts.append(("-" if c < 0 else "") + _format_coefficient(abs(c), m))
        else:
            parts.append(("- " if c < 0 else "+ ") + _format_coefficient(abs(c), m))
    return " ".join(parts)


# -- job files ----------------------------------------------------------------

@dataclass(frozen=True)
class JobSpec:
    """A fully validated computation request (file contents plus options)."""

    quiver: Quiver
    order: OrderSpec
    relation_names: Tuple[str, ...]
    relations: Tuple[NcPoly, ...]
    sources: Tuple[str, ...] = field(default=(), compare=False)
    command: Optional[str] = None
    bound: int = 8
    max_pairs: int = 100000
    output: str = "text"
    element: Optional[str] = None


def _require(table, key, kind, where):
    if key not in table:
        raise InputError(f"missing key {key!r} in [{where}]")
    value = table[key]
    if kind is list:
        if not isinstance(value, list):
            raise InputError(f"[{where}] {key} must be an array")
    elif not isinstance(value, kind):
        raise InputError(f"[{where}] {key} must be a {kind.__name__}")
    return value


def parse_input(text: str) -> JobSpec:
    """Parse and validate a job file into a JobSpec (command left unset)."""
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise InputError(f"invalid input file: {e}") from None

    if "algebra" not in doc:
        raise InputError("missing [algebra] section")
    alg = doc["algebra"]
    kind = _require(alg, "type", str, "algebra")
    try:
        if kind == "free":
            gens = _require(alg, "generators", list, "algebra")
            quiver = Quiver.free([str(g) for g in gens])
        elif kind == "path":
            vertices = _require(alg, "vertices", list, "algebra")
            arrows = _require(alg, "arrows", list, "algebra")
            for a in arrows:
                if not (isinstance(a, list) and len(a) == 3):
                    raise InputError("each arrow must be [name, source, target]")
            quiver = Quiver.path([str(v) for v in vertices], arrows)
        else:
            raise InputError(f"unknown algebra type {kind!r}")
    except AlgebraError as e:
        raise InputError(f"invalid algebra: {e}") from None

    declared = quiver.generator_names()
    order_table = doc.get("order", {})
    scheme = order_table.get("scheme", "deglex")
    precedence = tuple(str(x) for x in order_table.get("precedence", declared))
    if set(precedence) != set(declared) or len(precedence) != len(declared):
        raise InputError("[order] precedence must list exactly the declared generators")
    try:
        order = OrderSpec(precedence, scheme=scheme)
    except AlgebraError as e:
        raise InputError(f"invalid order: {e}") from None

    rels = doc.get("relations")
    if not rels or not isinstance(rels, dict):
        raise InputError("missing or empty [relations] section")
    names, polys, sources = [], [], []
    for name, src in rels.items():
        if not isinstance(src, str):
            raise InputError(f"relation {name!r} must be a string expression")
        try:
            p = parse_polynomial(src, quiver)
        except ExpressionError as e:
            raise InputError(f"relation {name!r}: {e}") from None
        if not p:
            raise InputError(f"relation {name!r} is the zero polynomial")
        names.append(name)
        polys.append(p)
        sources.append(src)
    return JobSpec(quiver=quiver, order=order,
                   relation_names=tuple(names), relations=tuple(polys),
                   sources=tuple(sources))


def render_input(job: JobSpec) -> str:
    """Emit a canonical job file; reparsing yields an equal JobSpec."""
    q = job.quiver
    lines = ["[algebra]"]
    if q.kind == "free":
        lines.append('type = "free"')
        lines.append(f"generators = {json.dumps(list(q.generator_names()))}")
    else:
        lines.append('type = "path"')
        lines.append(f"vertices = {json.dumps(list(q.vertices))}")
        arrs = [[a.name, a.source, a.target] for a in q.arrows]
        lines.append(f"arrows = {json.dumps(arrs)}")
    lines.append("")
    lines.append("[order]")
    lines.append(f'scheme = "{job.order.scheme}"')
    lines.append(f"precedence = {json.dumps(list(job.order.precedence))}")
    lines.append("")
    lines.append("[relations]")
    for name, p in zip(job.relation_names, job.relations):
        lines.append(f'{name} = "{format_polynomial(p, job.order)}"')
    return "\n".join(lines) + "\n"
