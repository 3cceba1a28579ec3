"""Octonions over an exact coefficient field, the associative 3-form on Im(O),
and the G2-extension check for orthonormal triples of the plane <e1, e2, e4>.

The multiplication table is produced once by Cayley-Dickson doubling of the
quaternions <1, e1, e2, e3> (e1 e2 = e3) with e4 as the new unit, and the
remaining units named so that

    e1 e2 = e3,   e2 e4 = e6,   e4 e1 = e7,   (e1 e2) e4 = e5.

All sign facts elsewhere in the lab are relative to this table.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from ..errors import DomainError
from . import exact

# quaternion units 1,i,j,k as indices 0..3: QMUL[a][b] = (sign, c)
_QMUL = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
]

# octonion unit -> (part, sign, quaternion unit) for the pair (a, b) = a + b*l
_CD_BASIS = {
    0: (0, 1, 0),
    1: (0, 1, 1),
    2: (0, 1, 2),
    3: (0, 1, 3),
    4: (1, 1, 0),
    5: (1, 1, 3),
    6: (1, 1, 2),
    7: (1, -1, 1),
}


def _q_mul(x, y):
    out = [0, 0, 0, 0]
    for a, xa in enumerate(x):
        if xa:
            for b, yb in enumerate(y):
                if yb:
                    s, c = _QMUL[a][b]
                    out[c] += s * xa * yb
    return out


def _q_conj(x):
    return [x[0], -x[1], -x[2], -x[3]]


def _cd_mul(p, q):
    # (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
    a, b = p
    c, d = q
    first = [u - v for u, v in zip(_q_mul(a, c), _q_mul(_q_conj(d), b))]
    second = [u + v for u, v in zip(_q_mul(d, a), _q_mul(b, _q_conj(c)))]
    return first, second


def _unit_pair(i):
    part, sign, u = _CD_BASIS[i]
    vec = [0, 0, 0, 0]
    vec[u] = sign
    return (vec, [0, 0, 0, 0]) if part == 0 else ([0, 0, 0, 0], vec)


def _pair_to_unit(pair):
    hits = []
    for i in range(8):
        part, sign, u = _CD_BASIS[i]
        c = pair[part][u]
        if c:
            hits.append((c * sign, i))
    assert len(hits) == 1, hits
    return hits[0]


def _build_table():
    table = []
    for i in range(8):
        row = []
        for j in range(8):
            row.append(_pair_to_unit(_cd_mul(_unit_pair(i), _unit_pair(j))))
        table.append(row)
    return table


MUL_TABLE: list[list[tuple[int, int]]] = _build_table()
"""``MUL_TABLE[i][j] == (sign, k)`` means ``e_i e_j = sign * e_k``."""


def fano_lines() -> list[tuple[int, int, int]]:
    """Oriented lines (i, j, k) with e_i e_j = +e_k, one per unordered line,
    listed as the lexicographically smallest cyclic rotation."""
    lines = set()
    for i, j in product(range(1, 8), repeat=2):
        if i == j:
            continue
        s, k = MUL_TABLE[i][j]
        if s == 1:
            rots = [(i, j, k), (j, k, i), (k, i, j)]
            lines.add(min(rots))
    return sorted(lines)


class Octonion:
    """An octonion with eight exact coordinates over e0, ..., e7."""

    __slots__ = ("c",)

    def __init__(self, coords: Sequence):
        if len(coords) != 8:
            raise DomainError("an octonion has 8 coordinates")
        self.c = tuple(coords)

    @classmethod
    def unit(cls, i: int, scale=1) -> "Octonion":
        c = [0] * 8
        c[i] = scale
        return cls(c)

    @classmethod
    def zero(cls) -> "Octonion":
        return cls([0] * 8)

    def __add__(self, other):
        return Octonion([a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other):
        return Octonion([a - b for a, b in zip(self.c, other.c)])

    def __neg__(self):
        return Octonion([-a for a in self.c])

    def scale(self, s) -> "Octonion":
        return Octonion([s * a for a in self.c])

    def __mul__(self, other):
        if not isinstance(other, Octonion):
            return self.scale(other)
        return oct_mul(self, other)

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        return isinstance(other, Octonion) and all(a == b for a, b in zip(self.c, other.c))

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        terms = [f"{a}*e{i}" for i, a in enumerate(self.c) if a != 0]
        return "Octonion(" + (" + ".join(terms) or "0") + ")"

    def conj(self) -> "Octonion":
        return oct_conj(self)

    def real(self):
        return self.c[0]

    def norm(self):
        """Quadratic norm ``x conj(x)`` extended bilinearly (no complex conjugation)."""
        return sum(a * a for a in self.c)

    def is_imaginary(self) -> bool:
        return self.c[0] == 0


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    out = [0] * 8
    for i, xi in enumerate(x.c):
        if xi == 0:
            continue
        row = MUL_TABLE[i]
        for j, yj in enumerate(y.c):
            if yj == 0:
                continue
            s, k = row[j]
            out[k] = out[k] + s * xi * yj
    return Octonion(out)


def oct_conj(x: Octonion) -> Octonion:
    return Octonion([x.c[0]] + [-a for a in x.c[1:]])


def inner(x: Octonion, y: Octonion):
    """Polarisation of the norm: Re(x conj(y))."""
    return sum(a * b for a, b in zip(x.c, y.c))


def three_form(x: Octonion, y: Octonion, z: Octonion):
    """omega(x, y, z) = Re((x y) z) on imaginary octonions."""
    for v in (x, y, z):
        if not v.is_imaginary():
            raise DomainError("three_form takes imaginary octonions")
    return oct_mul(oct_mul(x, y), z).real()


def three_form_tensor() -> dict[tuple[int, int, int], int]:
    """Nonzero values omega(e_i, e_j, e_k) for 1 <= i < j < k <= 7."""
    out = {}
    for i, j, k in combinations(range(1, 8), 3):
        v = three_form(Octonion.unit(i), Octonion.unit(j), Octonion.unit(k))
        if v:
            out[(i, j, k)] = v
    return out


def _act_on_form(X, form: dict, n: int = 7) -> dict:
    """(X . phi)(a, b, c) = -phi(Xa, b, c) - phi(a, Xb, c) - phi(a, b, Xc).

    ``X[r][c]`` is the coefficient of basis vector r in the image of basis
    vector c (column convention); indices run over 0..n-1.
    """
    def phi(a, b, c):
        if a == b or b == c or a == c:
            return 0
        idx = [a, b, c]
        sign = 1
        for p in range(3):
            for q in range(2 - p):
                if idx[q] > idx[q + 1]:
                    idx[q], idx[q + 1] = idx[q + 1], idx[q]
                    sign = -sign
        return sign * form.get(tuple(idx), 0)

    out = {}
    for a, b, c in combinations(range(n), 3):
        v = 0
        for m in range(n):
            if X[m][a]:
                v -= X[m][a] * phi(m, b, c)
            if X[m][b]:
                v -= X[m][b] * phi(a, m, c)
            if X[m][c]:
                v -= X[m][c] * phi(a, b, m)
        if v:
            out[(a, b, c)] = v
    return out


def omega_on_im() -> dict[tuple[int, int, int], int]:
    """omega as an alternating form on Im(O) indexed 0..6 (for e1..e7)."""
    return {(i - 1, j - 1, k - 1): v for (i, j, k), v in three_form_tensor().items()}


def gl_basis(n: int) -> list[list[list[int]]]:
    out = []
    for r in range(n):
        for c in range(n):
            m = [[0] * n for _ in range(n)]
            m[r][c] = 1
            out.append(m)
    return out


def form_stabilizer(form: dict | None = None, n: int = 7):
    """Kernel of X -> X.form inside gl(n).

    Returns ``(kernel_dim, orbit_dim, basis)`` where the basis consists of
    n x n matrices and ``orbit_dim = n**2 - kernel_dim``.
    """
    if form is None:
        form = omega_on_im()
    basis = gl_basis(n)
    triples = list(combinations(range(n), 3))
    images = [_act_on_form(X, form, n) for X in basis]
    rows = [[img.get(t, 0) for img in images] for t in triples]
    ker = exact.nullspace(rows)
    mats = []
    for vec in ker:
        m = [[0] * n for _ in range(n)]
        for coeff, X in zip(vec, basis):
            if coeff:
                for r in range(n):
                    for c in range(n):
                        if X[r][c]:
                            m[r][c] += coeff * X[r][c]
        mats.append(m)
    return len(ker), n * n - len(ker), mats


def decomposable_form(i: int = 0, j: int = 1, k: int = 2) -> dict:
    """The degenerate 3-form e_i* ^ e_j* ^ e_k* (0-based indices)."""
    return {tuple(sorted((i, j, k))): 1}


L_PLANE = (1, 2, 4)


def g2_extension(g1: Octonion, g2: Octonion, g4: Octonion) -> list[Octonion]:
    """Images g0..g7 from g1, g2, g4 by the products fixed in the module docstring."""
    g3 = oct_mul(g1, g2)
    return [
        Octonion.unit(0),
        g1,
        g2,
        g3,
        g4,
        oct_mul(g3, g4),
        oct_mul(g2, g4),
        oct_mul(g4, g1),
    ]


def _check_orthonormal_in_plane(gs):
    for g in gs:
        if any(g.c[i] != 0 for i in range(8) if i not in L_PLANE):
            raise DomainError("input must lie in <e1, e2, e4>")
    for a, ga in enumerate(gs):
        for b, gb in enumerate(gs):
            if inner(ga, gb) != (1 if a == b else 0):
                raise DomainError("input must be an orthonormal basis of <e1, e2, e4>")


def g2_extension_check(g1: Octonion, g2: Octonion, g4: Octonion) -> bool:
    """True iff e_i -> g_i (i = 0..7) is an algebra automorphism of O."""
    _check_orthonormal_in_plane([g1, g2, g4])
    g = g2_extension(g1, g2, g4)

    def image(x: Octonion) -> Octonion:
        out = Octonion.zero()
        for i, a in enumerate(x.c):
            if a:
                out = out + g[i].scale(a)
        return out

    for i in range(8):
        for j in range(8):
            lhs = image(oct_mul(Octonion.unit(i), Octonion.unit(j)))
            if lhs != oct_mul(g[i], g[j]):
                return False
    return True


def rotation_in_plane(cos: Fraction, sin: Fraction, a: int, b: int) -> list[Octonion]:
    """Images of (e1, e2, e4) under the rotation by (cos, sin) in the (e_a, e_b) plane."""
    out = []
    for i in L_PLANE:
        c = [0] * 8
        if i == a:
            c[a], c[b] = cos, sin
        elif i == b:
            c[a], c[b] = -sin, cos
        else:
            c[i] = 1
        out.append(Octonion(c))
    return out
