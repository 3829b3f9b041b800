"""Exact-real expressions and base specifications.

Grammar (standard precedence, left associative)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := NUMBER | 'phi' | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
            | 'root' '(' '[' INT (',' INT)* ']' ',' expr ',' expr ')'

NUMBER is an integer or a terminating decimal (read exactly).  ``root`` names
the unique real root of the integer polynomial (ascending coefficients) in
the open interval given by the last two arguments; it is what the formatter
falls back to for values of degree above two.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Union

from altbase.errors import DomainError, InvalidAlgebraic, ParseError
from altbase.exactreal import RealAlgebraic, real_roots

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/(),\[\]]))")


def _phi() -> RealAlgebraic:
    return real_roots((-1, -1, 1))[1]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos + len(text[pos:]) - len(text[pos:].lstrip()))
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of expression", len(self.text))
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r} but found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> RealAlgebraic:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        v = self.expr()
        tok = self.peek()
        if tok[0] is not None:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return v

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.factor()
        while self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                if w.sign() == 0:
                    raise ParseError("division by zero", pos)
                v = v / w
        return v

    def factor(self):
        kind, val, pos = self.peek()
        if kind is None:
            raise ParseError("unexpected end of expression", pos)
        if val == "-":
            self.take()
            return -self.factor()
        if val == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if kind == "num":
            self.take()
            return RealAlgebraic.rational(Fraction(val))
        if kind == "name":
            self.take()
            if val == "phi":
                return _phi()
            if val == "sqrt":
                self.take("(")
                inner_pos = self.peek()[2]
                v = self.expr()
                self.take(")")
                if v.sign() < 0:
                    raise ParseError("square root of a negative value", inner_pos)
                return v.sqrt()
            if val == "root":
                return self._root(pos)
            raise ParseError(f"unknown name {val!r}", pos)
        raise ParseError(f"unexpected {val!r}", pos)

    def _root(self, pos):
        self.take("(")
        self.take("[")
        coeffs = [self._signed_int()]
        while self.peek()[1] == ",":
            self.take()
            coeffs.append(self._signed_int())
        self.take("]")
        self.take(",")
        lo = self.expr()
        self.take(",")
        hi = self.expr()
        self.take(")")
        if not (lo.is_rational and hi.is_rational):
            raise ParseError("root() interval endpoints must be rational", pos)
        try:
            return RealAlgebraic(tuple(coeffs), lo.as_fraction(), hi.as_fraction()).minimal()
        except InvalidAlgebraic as exc:
            raise ParseError(str(exc), pos) from exc

    def _signed_int(self):
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, val, pos = self.take()
        if kind != "num" or "." in val:
            raise ParseError("expected an integer coefficient", pos)
        return sign * int(val)


def parse_expression(text: str) -> RealAlgebraic:
    """The exact real denoted by ``text``."""
    return _Parser(text).parse()


def split_top_level(text: str) -> list[str]:
    """Split at commas that are not nested inside brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_list(text: str) -> list[RealAlgebraic]:
    offset = 0
    out = []
    for part in split_top_level(text):
        try:
            out.append(parse_expression(part))
        except ParseError as exc:
            pos = None if exc.position is None else exc.position + offset
            raise ParseError(str(exc).split(" (at position")[0], pos) from exc
        offset += len(part) + 1
    return out


# -- formatting ---------------------------------------------------------------

def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _square_split(D: int) -> tuple[int, int]:
    """D = s^2 * r with r squarefree."""
    s, r = 1, D
    k = 2
    while k * k <= r:
        while r % (k * k) == 0:
            r //= k * k
            s *= k
        k += 1
    return s, r


def format_value(v: RealAlgebraic) -> str:
    """A string that parses back to exactly ``v``."""
    m = v.minimal()
    if m.is_rational:
        return _fmt_fraction(m.lo)
    if m.degree == 2:
        c, b, a = m.poly
        D = b * b - 4 * a * c
        s, r = _square_split(D)
        # the root is (-b +- s sqrt(r)) / (2a) with a > 0: '+' is the larger one
        use_plus = (m - Fraction(-b, 2 * a)).sign() > 0
        den = 2 * a
        num_b, num_s = -b, s if use_plus else -s
        g = math.gcd(math.gcd(num_b, num_s), den)
        num_b, num_s, den = num_b // g, num_s // g, den // g
        if den < 0:
            num_b, num_s, den = -num_b, -num_s, -den
        rad = "sqrt(%d)" % r if abs(num_s) == 1 else "%d*sqrt(%d)" % (abs(num_s), r)
        if num_b == 0:
            body = ("-" if num_s < 0 else "") + rad
        else:
            body = f"{num_b}{'-' if num_s < 0 else '+'}{rad}"
        if den == 1:
            return body
        return f"({body})/{den}"
    coeffs = ",".join(str(c) for c in m.poly)
    return f"root([{coeffs}],{_fmt_fraction(m.lo)},{_fmt_fraction(m.hi)})"


# -- base specifications ------------------------------------------------------

@dataclass(frozen=True)
class BaseSpec:
    betas: tuple
    gamma: RealAlgebraic

    def to_json(self) -> dict:
        return {"gamma": format_value(self.gamma), "betas": [format_value(b) for b in self.betas]}


def _value_from_json(item) -> RealAlgebraic:
    if isinstance(item, (int,)):
        return RealAlgebraic.rational(item)
    if isinstance(item, str):
        return parse_expression(item)
    if isinstance(item, dict) and "minpoly" in item and "interval" in item:
        lo, hi = (parse_expression(str(e)) for e in item["interval"])
        if not (lo.is_rational and hi.is_rational):
            raise ParseError("interval endpoints must be rational")
        try:
            return RealAlgebraic(tuple(int(c) for c in item["minpoly"]), lo.as_fraction(), hi.as_fraction()).minimal()
        except InvalidAlgebraic as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"cannot read {item!r} as an exact real")


def load_spec(source: Union[str, Path, dict]) -> BaseSpec:
    """Read a base specification from a JSON file path, JSON text or a dict.

    ``{"gamma": "0", "betas": ["phi", {"minpoly": [-1, -1, 1], "interval": ["1", "2"]}]}``
    with minpoly coefficients in ascending order.
    """
    if isinstance(source, dict):
        data = source
    else:
        text = str(source)
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if "betas" not in data or not data["betas"]:
        raise ParseError("a base specification needs a nonempty 'betas' list")
    betas = tuple(_value_from_json(b) for b in data["betas"])
    gamma = _value_from_json(data.get("gamma", "0"))
    if any(b.sign() == 0 for b in betas):
        raise DomainError("base entries must be nonzero")
    return BaseSpec(betas, gamma)
