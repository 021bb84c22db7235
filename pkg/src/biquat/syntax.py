"""Text syntax for field elements, quaternion symbols and Witt vectors.

Grammar for elements::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' uint]
    atom   := var | coeff | '(' expr ')'

Integer coefficients are read modulo 2.  ``x`` names the generator of
GF(2^k) (k > 1); function-field variables are those of the descriptor.
"""

from __future__ import annotations

import re

from .field_core.fields import FieldElement


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, src: str):
        super().__init__(f"{msg} at position {pos} in {src!r}")
        self.pos = pos
        self.src = src


_TOKEN = re.compile(r"\s*(?:(?P<num>[0-9]+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(src: str):
    pos = 0
    out = []
    src_len = len(src)
    while pos < src_len:
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character", len(src) - len(src[pos:].lstrip()), src)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str, field):
        self.src = src
        self.F = field
        self.toks = _tokenize(src)
        self.i = 0
        self.names = set(field.var_names())

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if val != op:
            raise ParseError(f"expected {op!r}", pos, self.src)

    def parse(self) -> FieldElement:
        v = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected token", pos, self.src)
        return v

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            self.take()
            v = v + self.term()
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                if w.is_zero():
                    raise ZeroDivisionError(f"division by zero at position {pos} in {self.src!r}")
                v = v / w
        return v

    def factor(self):
        v = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError("expected an unsigned exponent", pos, self.src)
            v = v ** int(val)
        return v

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return self.F(int(val) % 2)
        if kind == "name":
            if val not in self.names:
                raise ParseError(f"unknown variable {val!r}", pos, self.src)
            return self.F.gen(val)
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        if kind == "op" and val == "-":
            return self.atom()
        raise ParseError("unexpected token", pos, self.src)


def parse_element(src: str, field) -> FieldElement:
    """Parse an element expression in the given field."""
    if not src.strip():
        raise ParseError("empty expression", 0, src)
    return _Parser(src, field).parse()


def format_element(x: FieldElement) -> str:
    return str(x)


def _split_top(body: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_symbol_text(src: str, field) -> tuple[FieldElement, FieldElement]:
    """Parse ``[alpha, beta)`` into its two slots."""
    s = src.strip()
    if not (s.startswith("[") and s.endswith(")")):
        raise ParseError("a symbol is written [alpha, beta)", 0, src)
    parts = _split_top(s[1:-1], ",")
    if len(parts) != 2:
        raise ParseError("a symbol has exactly two slots", 0, src)
    return parse_element(parts[0], field), parse_element(parts[1], field)


def parse_witt_text(src: str, field) -> list[FieldElement]:
    """Parse ``(w1; w2; ...; wn)``."""
    s = src.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("a Witt vector is written (w1; ...; wn)", 0, src)
    return [parse_element(p, field) for p in _split_top(s[1:-1], ";")]
