"""Infinitesimal triality and the exceptional Jordan algebra.

A Hermitian octonionic matrix

    [[r1, x3, x2], [conj x3, r2, x1], [conj x2, conj x1, r3]]

is stored as a :class:`JordanElement` and flattened to 27 coordinates
``(r1, r2, r3, x1[0..7], x2[0..7], x3[0..7])``.  A triple (A1, A2, A3) of
so(8) elements acts by ``x_i -> A_i x_i`` and fixes the diagonal; it is
tangent to the automorphisms preserving the Cayley plane when

    A1(conj(x) y) = conj(A3 x) y + conj(x) A2(y)      for all x, y.

so(8) here means skew-symmetric 8 x 8 matrices for the Euclidean norm of
the octonion coordinates.  Columns convention: ``A[r][c]`` is the
coefficient of e_r in A(e_c).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from ..errors import DomainError, InternalInvariantError
from . import exact
from .octonion import Octonion, oct_conj, oct_mul
from .scalars import THETA
from .stabilizer import Mode, linear_stabilizer, orbit_dim


@dataclass(frozen=True)
class JordanElement:
    r1: object
    r2: object
    r3: object
    x1: Octonion
    x2: Octonion
    x3: Octonion

    def coords(self) -> list:
        return [self.r1, self.r2, self.r3, *self.x1.c, *self.x2.c, *self.x3.c]

    @classmethod
    def from_coords(cls, v: Sequence) -> "JordanElement":
        if len(v) != 27:
            raise DomainError("a Jordan element has 27 coordinates")
        return cls(v[0], v[1], v[2], Octonion(v[3:11]), Octonion(v[11:19]), Octonion(v[19:27]))

    def matrix(self) -> list[list]:
        """The 3 x 3 Hermitian matrix, with diagonal entries as real octonions."""
        d = lambda r: Octonion.unit(0, r)
        return [
            [d(self.r1), self.x3, self.x2],
            [oct_conj(self.x3), d(self.r2), self.x1],
            [oct_conj(self.x2), oct_conj(self.x1), d(self.r3)],
        ]

    def satisfies_section(self) -> bool:
        """The two linear equations r1 + r2 + r3 = 0 and r1 - r3 = 0."""
        return self.r1 + self.r2 + self.r3 == 0 and self.r1 - self.r3 == 0


def cayley_point(x: Octonion, y: Octonion) -> JordanElement:
    """[[1, x, y], [conj x, conj(x) x, conj(x) y], [conj y, conj(y) x, conj(y) y]]."""
    xb, yb = oct_conj(x), oct_conj(y)
    return JordanElement(
        1,
        oct_mul(xb, x).real(),
        oct_mul(yb, y).real(),
        oct_mul(xb, y),
        y,
        x,
    )


def general_point() -> JordanElement:
    """The point with x = theta e0, y = e0, theta^2 = -2, on the codimension-2 section."""
    return cayley_point(Octonion.unit(0, THETA), Octonion.unit(0))


def so8_basis() -> list[list[list[int]]]:
    out = []
    for i, j in combinations(range(8), 2):
        m = [[0] * 8 for _ in range(8)]
        m[i][j] = 1
        m[j][i] = -1
        out.append(m)
    return out


def is_so8(A: Sequence[Sequence]) -> bool:
    return all(A[r][c] == -A[c][r] for r in range(8) for c in range(8))


def _apply(A, x: Octonion) -> Octonion:
    return Octonion([sum(A[r][c] * x.c[c] for c in range(8) if x.c[c] != 0) for r in range(8)])


def _combine(coeffs, mats):
    out = [[0] * 8 for _ in range(8)]
    for a, m in zip(coeffs, mats):
        if a:
            for r in range(8):
                for c in range(8):
                    if m[r][c]:
                        out[r][c] += a * m[r][c]
    return out


def _defect_rows():
    """Rows of the linear system in the 84 unknowns (A1, A2, A3) over so8_basis."""
    basis = so8_basis()
    units = [Octonion.unit(i) for i in range(8)]
    rows = []
    for x in units:
        xb = oct_conj(x)
        for y in units:
            xy = oct_mul(xb, y)
            # per unknown, the 8 coordinates of its contribution to the defect
            contrib = []
            for S in basis:
                contrib.append(_apply(S, xy).c)
            for S in basis:
                contrib.append(oct_mul(xb, _apply(S, y)).scale(-1).c)
            for S in basis:
                contrib.append(oct_mul(oct_conj(_apply(S, x)), y).scale(-1).c)
            for k in range(8):
                rows.append([col[k] for col in contrib])
    return rows


@lru_cache(maxsize=1)
def triality_algebra() -> tuple[tuple, ...]:
    """Basis of the solution space of the triality system, as 84-vectors."""
    ker = exact.nullspace(_defect_rows())
    return tuple(tuple(v) for v in ker)


@dataclass(frozen=True)
class TrialityTriple:
    A1: list
    A2: list
    A3: list

    def defect(self) -> int:
        """Number of basis pairs (x, y) violating the triality identity."""
        bad = 0
        for i in range(8):
            x = Octonion.unit(i)
            for j in range(8):
                y = Octonion.unit(j)
                lhs = _apply(self.A1, oct_mul(oct_conj(x), y))
                rhs = oct_mul(oct_conj(_apply(self.A3, x)), y) + oct_mul(oct_conj(x), _apply(self.A2, y))
                if lhs != rhs:
                    bad += 1
        return bad

    def act(self, v: Sequence) -> list:
        """Action on the 27 flattened Jordan coordinates."""
        J = JordanElement.from_coords(v)
        return [0, 0, 0, *_apply(self.A1, J.x1).c, *_apply(self.A2, J.x2).c, *_apply(self.A3, J.x3).c]


def _triple_from_vector(v) -> TrialityTriple:
    basis = so8_basis()
    return TrialityTriple(_combine(v[:28], basis), _combine(v[28:56], basis), _combine(v[56:], basis))


def triality_complete(A3: Sequence[Sequence]) -> TrialityTriple:
    """The unique (A1, A2) in so(8) x so(8) completing A3 to a triality triple."""
    if not is_so8(A3):
        raise DomainError("A3 must be skew for the octonion norm")
    ker = triality_algebra()
    # A3 coordinates over so8_basis
    target = [A3[i][j] for i, j in combinations(range(8), 2)]
    proj = [list(v[56:]) for v in ker]
    if exact.rank(proj) != 28 or len(ker) != 28:
        raise InternalInvariantError("triality system does not project isomorphically onto so(8)")
    coeffs = exact.solve(exact.columns_to_rows(proj), target)
    if coeffs is None:
        raise InternalInvariantError("no triality completion")
    full = [sum(c * v[k] for c, v in zip(coeffs, ker) if c) for k in range(84)]
    t = _triple_from_vector(full)
    if t.defect():
        raise InternalInvariantError("completed triple violates triality")
    return t


def triality_triples() -> list[TrialityTriple]:
    return [_triple_from_vector(v) for v in triality_algebra()]


def jordan_stabilizer(point: JordanElement | None = None):
    """(stabilizer dim, orbit dim) of [point] under the 28-dimensional triality algebra.

    The stabilizer is taken in Line mode; the orbit is projective.
    """
    if point is None:
        point = general_point()
    ops = [t.act for t in triality_triples()]
    v = point.coords()
    dim, _ = linear_stabilizer(ops, v, Mode.LINE)
    return dim, orbit_dim(ops, v, projective=True)


def jordan_stabilizer_dim() -> int:
    return jordan_stabilizer()[0]
