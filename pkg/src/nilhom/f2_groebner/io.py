"""Ideal files.

::

    # comments start with '#'
    ring: y1:1, y2:1, z:2
    y1*y2
    y1^2 + y2*z
    k: z + y1^2          # optional named polynomials (k, sq1k, d5, ...)

Every unnamed line is a generator.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .groebner import IdealBasis
from .parser import ParseError, parse_polynomial, parse_ring_header
from .ring import BinaryPoly, GradedRing

_NAMED = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)\s*:(.*)$")


@dataclass
class IdealFile:
    ring: GradedRing
    ideal: IdealBasis
    named: dict[str, BinaryPoly] = field(default_factory=dict)


def parse_ideal_text(text: str, source: str = "<text>") -> IdealFile:
    ring = None
    gens: list[BinaryPoly] = []
    named: dict[str, BinaryPoly] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if ring is None:
                if not line.startswith("ring:"):
                    raise ParseError("first non-comment line must be the 'ring:' header", line, 0)
                ring = parse_ring_header(line)
                continue
            m = _NAMED.match(line)
            if m and m.group(1) not in ring.names:
                named[m.group(1)] = parse_polynomial(ring, m.group(2))
            else:
                gens.append(parse_polynomial(ring, line))
        except (ParseError, ValueError) as exc:
            raise ParseError(f"{source}:{lineno}: {exc}", raw, 0) from exc
    if ring is None:
        raise ParseError(f"{source}: missing 'ring:' header", text, 0)
    return IdealFile(ring, IdealBasis(ring, tuple(gens)), named)


def read_ideal_file(path: str | Path) -> IdealFile:
    path = Path(path)
    return parse_ideal_text(path.read_text(encoding="utf-8"), str(path))


def format_ideal_file(ring: GradedRing, gens, named: dict[str, BinaryPoly] | None = None) -> str:
    lines = [f"ring: {ring.header()}"]
    lines += [g.format() for g in gens]
    for name, p in (named or {}).items():
        lines.append(f"{name}: {p.format()}")
    return "\n".join(lines) + "\n"
