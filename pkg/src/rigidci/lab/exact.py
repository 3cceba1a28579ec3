"""Exact kernels and ranks.

Matrices are lists of rows.  Rational input is cleared of denominators row by
row and reduced with a fraction-free (Bareiss) elimination, which keeps every
intermediate entry an integer minor of the input.  Entries from other fields
(:class:`~rigidci.lab.scalars.QTheta`) go through plain Gauss-Jordan.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Sequence

from ..errors import InternalInvariantError


def _is_rational_matrix(rows) -> bool:
    return all(isinstance(x, (int, Rational)) for row in rows for x in row)


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns the echelon rows (only the first ``rank`` rows are meaningful) and
    the pivot columns.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        prow = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            for j in range(c + 1, ncols):
                q, rem = divmod(piv * row[j] - a * prow[j], prev)
                if rem:
                    raise InternalInvariantError("Bareiss division not exact")
                row[j] = q
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def _div(a, b):
    if isinstance(a, (int, Rational)) and isinstance(b, (int, Rational)):
        return Fraction(a) / b
    return a / b


def _gauss_jordan(rows) -> tuple[list[list], list[int]]:
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = _div(1, m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                a = m[i][c]
                m[i] = [x - a * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def _echelon(rows):
    if _is_rational_matrix(rows):
        return bareiss_echelon(_integer_rows(rows))
    return _gauss_jordan(rows)


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(_echelon(rows)[1])


@dataclass(frozen=True)
class KernelAudit:
    nrows: int
    ncols: int
    rank: int
    nullity: int
    residual_zero: bool

    @property
    def passed(self) -> bool:
        return self.rank + self.nullity == self.ncols and self.residual_zero


_audits: list[list[KernelAudit]] = []


@contextmanager
def audit():
    """Record a rank-nullity check for every nullspace computed inside the block.

    The rank is recomputed from the transpose, and every kernel vector is
    multiplied back into the matrix.
    """
    log: list[KernelAudit] = []
    _audits.append(log)
    try:
        yield log
    finally:
        _audits.remove(log)


def _record(rows, n: int, basis: list[list]) -> None:
    rk = rank(transpose(rows)) if rows else 0
    zero = all(
        all(sum(a * b for a, b in zip(row, v) if a != 0 and b != 0) == 0 for row in rows) for v in basis
    )
    entry = KernelAudit(len(rows), n, rk, len(basis), zero)
    for log in _audits:
        log.append(entry)


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of ``{x : M x = 0}``."""
    basis = _nullspace(rows, ncols)
    if _audits:
        _record(rows, len(rows[0]) if rows else ncols, basis)
    return basis


def _nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of ``{x : M x = 0}``, one vector per free column.

    ``ncols`` is required only when ``rows`` is empty.
    """
    if not rows:
        if ncols is None:
            raise ValueError("ncols needed for an empty matrix")
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    n = len(rows[0])
    ech, pivots = _echelon(rows)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    rational = _is_rational_matrix(rows)
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = ech[k]
            s = sum(row[j] * x[j] for j in range(c + 1, n) if x[j] != 0)
            if rational:
                x[c] = Fraction(-s, row[c]) if s else 0
            else:
                x[c] = _div(-s, row[c]) if s != 0 else 0
        basis.append(x)
    return basis


def transpose(rows: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*rows)]


def columns_to_rows(columns: Sequence[Sequence]) -> list[list]:
    """Matrix whose columns are the given vectors."""
    return transpose(columns)


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One solution of ``M x = rhs`` (free variables set to 0), or None."""
    n = len(rows[0])
    aug = [list(r) + [-b] for r, b in zip(rows, rhs)]
    # the right-hand column is free exactly when the system is consistent;
    # its nullspace vector is then normalised to 1 there
    for v in nullspace(aug):
        if v[n] == 1:
            return v[:n]
    return None
