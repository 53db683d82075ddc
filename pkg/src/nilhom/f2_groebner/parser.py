"""Text to ``BinaryPoly``.

Grammar (whitespace ignored)::

    poly   := sign? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := NAME ('^' UINT)? | UINT

Integer literals are coefficients and are reduced mod 2; ``-`` means ``+``.
"""
from __future__ import annotations

import re

from .ring import BinaryPoly, GradedRing, from_monomials, mono_mul

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<op>[+\-*^]))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_polynomial(ring: GradedRing, text: str) -> BinaryPoly:
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        tok = toks[i]
        i += 1
        return tok

    def factor():
        kind, val, pos = take()
        if kind == "int":
            return int(val) % 2, (0,) * ring.nvars
        if kind != "name":
            raise ParseError("expected a variable or integer", text, pos)
        if val not in ring.names:
            raise ParseError(f"unknown variable {val!r}", text, pos)
        exp = 1
        if peek()[:2] == ("op", "^"):
            take()
            k2, v2, p2 = take()
            if k2 != "int":
                raise ParseError("expected an exponent", text, p2)
            exp = int(v2)
        e = [0] * ring.nvars
        e[ring.var_index(val)] = exp
        return 1, tuple(e)

    def term():
        coeff, mono = factor()
        while peek()[:2] == ("op", "*"):
            take()
            c, m = factor()
            coeff *= c
            mono = mono_mul(mono, m)
        return coeff % 2, mono

    monos = []
    if peek()[0] == "end":
        raise ParseError("empty polynomial", text, 0)
    if peek()[:2] in (("op", "+"), ("op", "-")):
        take()
    while True:
        c, m = term()
        if c:
            monos.append(m)
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            take()
            continue
        raise ParseError(f"unexpected {val!r}", text, pos)
    return from_monomials(ring, monos)


def parse_ring_header(text: str) -> GradedRing:
    """``"y1:1, y2:1, z:2"`` (an optional ``ring:`` prefix is accepted)."""
    body = text.strip()
    if body.startswith("ring:"):
        body = body[len("ring:"):]
    spec = []
    for item in body.split(","):
        item = item.strip()
        m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)\s*:\s*(\d+)", item)
        if m is None:
            raise ParseError(f"bad variable declaration {item!r}", text, text.find(item))
        if int(m.group(2)) < 1:
            raise ParseError(f"variable {m.group(1)} needs a positive degree", text, text.find(item))
        spec.append((m.group(1), int(m.group(2))))
    return GradedRing.of(spec)
