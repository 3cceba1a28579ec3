"""Simple root systems, weights, and rational homogeneous spaces G/P.

Conventions (Bourbaki numbering throughout):

* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row i is the simple root
  alpha_i written in fundamental-weight coordinates.
* ``symmetrizer[i] = (alpha_i, alpha_i) / 2`` with short roots of length 1;
  then ``cartan[i][j] * symmetrizer[j]`` is symmetric.
* Weights are stored in fundamental-weight coordinates, roots in
  simple-root coordinates.  For a weight lambda and a root
  alpha = sum a_i alpha_i, ``(lambda, alpha) = sum lambda_i a_i d_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import tables
from .errors import DomainError, InternalInvariantError, InvalidTypeError, NotSupportedError

SERIES = "ABCDEFG"

Weight = tuple  # fundamental-weight coordinates


def _check_type(series: str, rank: int):
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if series not in ok or not isinstance(rank, int) or not ok[series]:
        raise InvalidTypeError(f"no simple Lie type {series}{rank}")


def _cartan(series: str, n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        # 1-based nodes; C[i][j] = a, C[j][i] = b
        C[i - 1][j - 1] = a
        C[j - 1][i - 1] = b

    if series in "ABCD":
        chain = n - 1 if series == "D" else n
        for i in range(1, chain):
            link(i, i + 1)
        if series == "B":
            link(n - 1, n, -2, -1)
        elif series == "C":
            link(n - 1, n, -1, -2)
        elif series == "D":
            link(n - 2, n)
    elif series == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif series == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif series == "G":
        C[0][1] = -1
        C[1][0] = -3
    return C


def _symmetrizer(series: str, n: int) -> list[int]:
    if series == "B":
        return [2] * (n - 1) + [1]
    if series == "C":
        return [1] * (n - 1) + [2]
    if series == "F":
        return [2, 2, 1, 1]
    if series == "G":
        return [1, 3]
    return [1] * n


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Root-string construction: beta + alpha_i is a root iff q > 0 where
    p - q = <beta, alpha_i^vee> and p is read off the lower levels."""
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    cols = [[(j, cartan[j][i]) for j in range(n) if cartan[j][i]] for i in range(n)]
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                up = beta[:i] + (beta[i] + 1,) + beta[i + 1:]
                if up in roots:
                    continue
                pairing = sum(beta[j] * c for j, c in cols[i])
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    roots.add(up)
                    nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


EXPECTED_POSITIVE = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rho: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def to_fundamental(self, root_coords: Sequence) -> tuple:
        """Simple-root coordinates to fundamental-weight coordinates."""
        n = self.rank
        return tuple(sum(root_coords[j] * self.cartan[j][i] for j in range(n)) for i in range(n))

    def to_roots(self, weight: Sequence) -> tuple[Fraction, ...]:
        """Fundamental-weight coordinates to (rational) simple-root coordinates."""
        inv = _inverse_cartan(self.series, self.rank)
        n = self.rank
        return tuple(sum(weight[i] * inv[i][j] for i in range(n)) for j in range(n))

    def pairing(self, weight: Sequence, root: Sequence):
        """(weight, root) for the invariant form with short roots of square length 2."""
        return sum(weight[i] * root[i] * self.symmetrizer[i] for i in range(self.rank))

    def reflect(self, weight: Sequence, i: int) -> tuple:
        """Simple reflection s_i (0-based) on a fundamental-coordinate weight."""
        c = weight[i]
        row = self.cartan[i]
        return tuple(w - c * a for w, a in zip(weight, row))


@lru_cache(maxsize=None)
def _inverse_cartan(series: str, rank: int) -> tuple[tuple[Fraction, ...], ...]:
    C = _cartan(series, rank)
    n = rank
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(C)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                a = m[i][c]
                m[i] = [x - a * y for x, y in zip(m[i], m[c])]
    return tuple(tuple(row[n:]) for row in m)


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    _check_type(series, rank)
    C = _cartan(series, rank)
    d = _symmetrizer(series, rank)
    for i in range(rank):
        for j in range(rank):
            if C[i][j] * d[j] != C[j][i] * d[i]:
                raise InternalInvariantError("symmetrizer does not symmetrize")
    roots = _positive_roots(C)
    if len(roots) != EXPECTED_POSITIVE[series](rank):
        raise InternalInvariantError(f"{series}{rank}: wrong number of positive roots")
    return RootSystem(
        series,
        rank,
        tuple(map(tuple, C)),
        tuple(d),
        tuple(roots),
        tuple([1] * rank),
    )


@lru_cache(maxsize=None)
def _weyl_data(series: str, rank: int):
    """Per positive root, the pairs (i, a_i d_i) with a_i != 0; and the denominator."""
    rs = build_root_system(series, rank)
    support = []
    den = 1
    for alpha in rs.positive_roots:
        sup = tuple((i, a * rs.symmetrizer[i]) for i, a in enumerate(alpha) if a)
        support.append(sup)
        den *= sum(c for _, c in sup)
    return tuple(support), den


def weyl_dim(rs: RootSystem, w: Sequence[int]) -> int:
    """Dimension of the irreducible module of highest weight w."""
    if len(w) != rs.rank:
        raise DomainError("weight has the wrong length")
    if any(x < 0 for x in w):
        raise DomainError(f"weight {tuple(w)} is not dominant")
    support, den = _weyl_data(rs.series, rs.rank)
    num = 1
    for sup in support:
        num *= sum((w[i] + 1) * c for i, c in sup)
    q, r = divmod(num, den)
    if r:
        raise InternalInvariantError("Weyl dimension is not an integer")
    return q


def lie_dim(rs: RootSystem) -> int:
    return rs.rank + 2 * len(rs.positive_roots)


@dataclass(frozen=True)
class HomSpace:
    """G/P for simple G, with P the parabolic of the marked nodes (1-based)."""

    series: str
    rank: int
    marked: tuple[int, ...]

    def __post_init__(self):
        _check_type(self.series, self.rank)
        m = tuple(sorted(set(self.marked)))
        if not m:
            raise InvalidTypeError("at least one node must be marked")
        if m[0] < 1 or m[-1] > self.rank:
            raise InvalidTypeError(f"node out of range for {self.series}{self.rank}")
        object.__setattr__(self, "marked", m)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.series, self.rank)

    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}/P" + ",".join(map(str, self.marked))

    def __str__(self):
        return self.label

    @property
    def picard_rank(self) -> int:
        return len(self.marked)

    @cached_property
    def outside_roots(self) -> tuple[tuple[int, ...], ...]:
        idx = [i - 1 for i in self.marked]
        return tuple(a for a in self.root_system.positive_roots if any(a[i] for i in idx))

    @property
    def dimension(self) -> int:
        return len(self.outside_roots)

    @property
    def minimal_ample(self) -> tuple[int, ...]:
        return tuple(1 if i + 1 in self.marked else 0 for i in range(self.rank))

    @cached_property
    def anticanonical(self) -> tuple[int, ...]:
        rs = self.root_system
        total = [sum(a[i] for a in self.outside_roots) for i in range(self.rank)]
        w = rs.to_fundamental(total)
        for i in range(self.rank):
            if i + 1 not in self.marked and w[i] != 0:
                raise InternalInvariantError("anticanonical class not supported on the marked nodes")
        return w

    @cached_property
    def fundamental_dim(self) -> int:
        return weyl_dim(self.root_system, self.minimal_ample)

    def index(self) -> int:
        """Fano index for Picard rank one: K^* = O(index)."""
        if self.picard_rank != 1:
            raise DomainError("index is defined for Picard rank one")
        return self.anticanonical[self.marked[0] - 1]

    def weight(self, degrees: Sequence[int]) -> tuple[int, ...]:
        """The weight sum_k degrees[k] * lambda_{marked[k]}."""
        if len(degrees) != self.picard_rank:
            raise DomainError(f"{self.label} needs {self.picard_rank} degree(s)")
        w = [0] * self.rank
        for k, d in zip(self.marked, degrees):
            w[k - 1] = d
        return tuple(w)

    def degrees(self, weight: Sequence[int]) -> tuple[int, ...]:
        for i in range(self.rank):
            if i + 1 not in self.marked and weight[i] != 0:
                raise DomainError("weight is not supported on the marked nodes")
        return tuple(weight[k - 1] for k in self.marked)


def space_dim(hs: HomSpace) -> int:
    return hs.dimension


def anticanonical(hs: HomSpace) -> tuple[int, ...]:
    return hs.anticanonical


def is_flag_of_lines(hs: HomSpace) -> bool:
    """P(T_{P^m}) = A_m with nodes {1, m}, m >= 2."""
    return hs.series == "A" and hs.rank >= 2 and hs.marked == (1, hs.rank)


def diagram_image(hs: HomSpace) -> HomSpace:
    """Smallest representative of the marked node under diagram automorphisms."""
    if hs.picard_rank != 1:
        return hs
    s, n, k = hs.series, hs.rank, hs.marked[0]
    if s == "A":
        k = min(k, n + 1 - k)
    elif s == "D" and n == 4 and k in (3, 4):
        k = 1
    elif s == "D" and k == n - 1:
        k = n
    elif s == "E" and n == 6:
        k = {6: 1, 5: 3}.get(k, k)
    return HomSpace(s, n, (k,))


@dataclass(frozen=True)
class PresentationInfo:
    space: HomSpace
    canonical: HomSpace
    aliases: tuple[HomSpace, ...] = field(default=())
    aut_dim: int = 0
    aut_is_g: bool = True


def _rank_expr(expr, l: int) -> int:
    if isinstance(expr, int):
        return expr
    a, b = expr
    return a * l + b


def _apply_alias(hs: HomSpace, rows) -> HomSpace | None:
    k = hs.marked[0]
    for row in rows:
        src, dst = row["from"], row["to"]
        if src["series"] != hs.series:
            continue
        l = hs.rank
        if "rank" in src and src["rank"] != l:
            continue
        if l < src.get("min_rank", 0):
            continue
        if _rank_expr(src["node"], l) != k:
            continue
        return HomSpace(dst["series"], _rank_expr(dst["rank"], l), (_rank_expr(dst["node"], l),))
    return None


@lru_cache(maxsize=None)
def _normalize_cached(hs: HomSpace, rows_key) -> PresentationInfo:
    rows = tables.load().aliases
    own = lie_dim(hs.root_system)
    if is_flag_of_lines(hs):
        return PresentationInfo(hs, hs, (hs,), own, True)
    if hs.picard_rank != 1:
        raise NotSupportedError(
            f"{hs.label}: only Picard rank one and P(T_P^m) are supported"
        )
    path = [hs]
    cur = diagram_image(hs)
    while True:
        if cur != path[-1]:
            path.append(cur)
        nxt = _apply_alias(cur, rows)
        if nxt is None:
            break
        if nxt in path:
            raise InternalInvariantError(f"alias cycle through {nxt.label}")
        path.append(nxt)
        cur = diagram_image(nxt)
    aut = lie_dim(cur.root_system)
    return PresentationInfo(hs, cur, tuple(path), aut, own == aut)


def normalize(hs: HomSpace) -> PresentationInfo:
    """Canonical presentation (the one with the largest automorphism group)."""
    return _normalize_cached(hs, tables.load().fingerprint)


def iter_single_node_spaces(max_rank: int) -> Iterable[HomSpace]:
    bounds = {"A": 1, "B": 2, "C": 2, "D": 3}
    for s in SERIES:
        for n in range(1, max_rank + 1):
            if s in bounds:
                if n < bounds[s]:
                    continue
            elif s == "E" and n not in (6, 7, 8):
                continue
            elif s == "F" and n != 4:
                continue
            elif s == "G" and n != 2:
                continue
            for k in range(1, n + 1):
                yield HomSpace(s, n, (k,))


def projective_dim(hs: HomSpace) -> int | None:
    """n if the canonical form of hs is P^n, else None."""
    c = canonical_or_self(hs)
    if c.series == "A" and c.marked == (1,):
        return c.rank
    return None


def quadric_dim(hs: HomSpace) -> int | None:
    """n if the canonical form of hs is the quadric Q^n (n >= 3), else None."""
    c = canonical_or_self(hs)
    if c.marked == (1,) and c.series == "B":
        return 2 * c.rank - 1
    if c.marked == (1,) and c.series == "D" and c.rank >= 4:
        return 2 * c.rank - 2
    if (c.series, c.rank, c.marked) == ("A", 3, (2,)):
        return 4
    return None


def canonical_or_self(hs: HomSpace) -> HomSpace:
    if hs.picard_rank == 1:
        return normalize(hs).canonical
    return hs
