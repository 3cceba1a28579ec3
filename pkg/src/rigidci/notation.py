"""Textual names of homogeneous spaces and the space / degree grammar.

Accepted space syntax (case-insensitive letters, optional ``^``/``_``):

    D5/P5   A2/P1,2   E6/1          marked Dynkin diagram
    P7  Q5  S5                      projective space, quadric, spinor variety
    Gr(3,7)  Lag(3,6)  Grw(2,6)     Grassmannians
    P(T_P3)                         the flag variety A3/P1,3
"""

from __future__ import annotations

import re

from .errors import InvalidTypeError, ParseError
from .rootdata import HomSpace, is_flag_of_lines, normalize, projective_dim, quadric_dim

_DIAGRAM = re.compile(r"^([A-Ga-g])\s*(\d+)\s*/\s*(P?\s*\d+(?:\s*,\s*P?\s*\d+)*)$")
_SIMPLE = re.compile(r"^([PQS])[\^_]?(\d+)$", re.IGNORECASE)
_GR = re.compile(r"^(Gr|Lag|Grw|Gr_w|Grω|Gr_ω)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)$", re.IGNORECASE)
_PT = re.compile(r"^P\s*\(\s*T_?P\^?(\d+)\s*\)$", re.IGNORECASE)


def quadric(n: int) -> HomSpace:
    if n == 1:
        return HomSpace("A", 1, (1,))
    if n == 2:
        raise InvalidTypeError("Q^2 = P^1 x P^1 is not of the form G/P with G simple")
    if n == 4:
        return HomSpace("A", 3, (2,))
    if n % 2:
        return HomSpace("B", (n + 1) // 2, (1,))
    return HomSpace("D", n // 2 + 1, (1,))


def parse_space(text: str) -> HomSpace:
    s = text.strip().replace(" ", "")
    try:
        m = _DIAGRAM.match(s)
        if m:
            nodes = tuple(int(x.lstrip("Pp")) for x in m.group(3).split(","))
            return HomSpace(m.group(1).upper(), int(m.group(2)), nodes)
        m = _PT.match(s)
        if m:
            k = int(m.group(1))
            return HomSpace("A", k, (1, k))
        m = _SIMPLE.match(s)
        if m:
            kind, n = m.group(1).upper(), int(m.group(2))
            if kind == "P":
                return HomSpace("A", n, (1,))
            if kind == "Q":
                return quadric(n)
            return HomSpace("D", n, (n,))
        m = _GR.match(s)
        if m:
            kind, k, n = m.group(1).lower(), int(m.group(2)), int(m.group(3))
            if kind == "gr":
                if not 1 <= k < n:
                    raise ParseError(f"Gr({k},{n}) needs 1 <= k < n")
                return HomSpace("A", n - 1, (k,))
            if kind == "lag":
                if n != 2 * k:
                    raise ParseError("Lag(k, n) needs n = 2k")
                return HomSpace("C", k, (k,))
            if n % 2 or not 1 <= k <= n // 2:
                raise ParseError("Grw(k, 2l) needs an even ambient and k <= l")
            return HomSpace("C", n // 2, (k,))
    except InvalidTypeError as exc:
        raise ParseError(str(exc)) from exc
    raise ParseError(f"cannot parse space {text!r}")


def parse_degrees(text: str) -> tuple[int, ...]:
    """``"2"`` or ``"1:1"`` -> tuple of positive ints (one per marked node)."""
    try:
        out = tuple(int(x) for x in text.split(":"))
    except ValueError:
        raise ParseError(f"bad degree {text!r}") from None
    if not out:
        raise ParseError("empty degree")
    return out


def space_name(hs: HomSpace) -> str:
    """A conventional name for the canonical form of hs."""
    if is_flag_of_lines(hs):
        return f"P(T_P{hs.rank})"
    if hs.picard_rank != 1:
        return hs.label
    c = normalize(hs).canonical
    p, q = projective_dim(c), quadric_dim(c)
    if p is not None:
        return f"P{p}"
    if q is not None:
        return f"Q{q}"
    s, n, k = c.series, c.rank, c.marked[0]
    if s == "A":
        return f"Gr({k},{n + 1})"
    if s == "D" and k == n:
        return f"S{n}"
    if s == "C" and k == n:
        return f"Lag({n},{2 * n})"
    if s == "C":
        return f"Grw({k},{2 * n})"
    return c.label
