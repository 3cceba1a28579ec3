"""Clifford calculus on V = E + F (dim 2n) and its spinor modules.

Basis of V: index ``i`` (0 <= i < n) is e_{i+1}, index ``n + i`` is f_{i+1}.
The Clifford relations are those of the hyperbolic form,

    c(e_i) c(f_j) + c(f_j) c(e_i) = delta_ij,   c(e)^2 = c(f)^2 = 0,

i.e. ``c(v)c(w) + c(w)c(v) = 2 B(v, w)`` with ``B(e_i, f_j) = delta_ij / 2``.

Two spinor modules are realised:

* module ``"E"``: the exterior algebra of E, e_i acting by wedge and f_i by
  contraction (this is where pure spinors s_W live);
* module ``"F"``: the exterior algebra of F, f_i acting by wedge and e_i by
  contraction (this is where the dual spinors s* live).

Basis monomials are bitmasks over {1..n}, written in increasing index order.
The natural pairing <e_I, f_J> = delta_IJ makes the two modules dual and is
invariant under the spin lift (see :func:`is_invariant_pairing`).

Matrices on V use the column convention: ``X[r][c]`` is the coefficient of
basis vector r in the image of basis vector c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..errors import DomainError
from . import exact

HALF = Fraction(1, 2)


def _popcount_below(mask: int, i: int) -> int:
    return bin(mask & ((1 << i) - 1)).count("1")


@dataclass
class SpinorState:
    """A spinor: sparse coefficients on monomials of the module's exterior algebra."""

    n: int
    coeffs: dict[int, object] = field(default_factory=dict)
    module: str = "E"

    def __post_init__(self):
        if self.module not in ("E", "F"):
            raise DomainError("module must be 'E' or 'F'")
        self.coeffs = {m: c for m, c in self.coeffs.items() if c != 0}

    @classmethod
    def one(cls, n: int, module: str = "E") -> "SpinorState":
        return cls(n, {0: 1}, module)

    @classmethod
    def monomial(cls, n: int, indices: Iterable[int], coeff=1, module: str = "E") -> "SpinorState":
        """The product of generators with the given 1-based indices, in the given order."""
        s = cls.one(n, module)
        gen = "e" if module == "E" else "f"
        for i in reversed(list(indices)):
            s = clifford_act(basis_vector(n, gen, i), s)
        return s.scale(coeff)

    @classmethod
    def from_terms(cls, n: int, terms: Sequence[tuple[object, Sequence[int]]], module: str = "E"):
        """Sum of ``coeff * g_{i1} ... g_{ik}`` over ``(coeff, [i1, ..., ik])``."""
        out = cls(n, {}, module)
        for coeff, idx in terms:
            out = out + cls.monomial(n, idx, coeff, module)
        return out

    @classmethod
    def wedge_of_vectors(cls, n: int, vectors: Sequence[Sequence], module: str = "E"):
        """c(v_1) c(v_2) ... c(v_k) applied to 1: for vectors inside the wedge
        space of the module this is their exterior product."""
        s = cls.one(n, module)
        for v in reversed(vectors):
            s = clifford_act(v, s)
        return s

    def __add__(self, other: "SpinorState") -> "SpinorState":
        self._compatible(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return SpinorState(self.n, out, self.module)

    def __sub__(self, other: "SpinorState") -> "SpinorState":
        return self + other.scale(-1)

    def scale(self, a) -> "SpinorState":
        return SpinorState(self.n, {m: a * c for m, c in self.coeffs.items()}, self.module)

    def _compatible(self, other):
        if self.n != other.n or self.module != other.module:
            raise DomainError("spinors live in different modules")

    def is_zero(self) -> bool:
        return not self.coeffs

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for mixed or zero spinors."""
        ps = {bin(m).count("1") % 2 for m in self.coeffs}
        return ps.pop() if len(ps) == 1 else None

    def dense(self) -> list:
        out = [0] * (1 << self.n)
        for m, c in self.coeffs.items():
            out[m] = c
        return out

    @classmethod
    def from_dense(cls, n: int, vec: Sequence, module: str = "E") -> "SpinorState":
        return cls(n, {m: c for m, c in enumerate(vec) if c != 0}, module)

    def __eq__(self, other):
        return (
            isinstance(other, SpinorState)
            and self.n == other.n
            and self.module == other.module
            and self.coeffs == other.coeffs
        )


def basis_vector(n: int, kind: str, i: int) -> list:
    """e_i or f_i (1-based) as a coordinate vector of length 2n."""
    v = [0] * (2 * n)
    v[(i - 1) if kind == "e" else (n + i - 1)] = 1
    return v


def _wedge(mask_coeffs: dict, i: int, a, out: dict):
    for m, c in mask_coeffs.items():
        if m >> i & 1:
            continue
        sign = -1 if _popcount_below(m, i) % 2 else 1
        k = m | (1 << i)
        out[k] = out.get(k, 0) + sign * a * c


def _contract(mask_coeffs: dict, i: int, a, out: dict):
    for m, c in mask_coeffs.items():
        if not m >> i & 1:
            continue
        sign = -1 if _popcount_below(m, i) % 2 else 1
        k = m & ~(1 << i)
        out[k] = out.get(k, 0) + sign * a * c


def clifford_act(v: Sequence, s: SpinorState) -> SpinorState:
    """Clifford multiplication c(v) s."""
    n = s.n
    if len(v) != 2 * n:
        raise DomainError("vector and spinor dimensions differ")
    out: dict = {}
    for i in range(n):
        a, b = v[i], v[n + i]
        if s.module == "E":
            if a:
                _wedge(s.coeffs, i, a, out)
            if b:
                _contract(s.coeffs, i, b, out)
        else:
            if b:
                _wedge(s.coeffs, i, b, out)
            if a:
                _contract(s.coeffs, i, a, out)
    return SpinorState(n, out, s.module)


def gram(n: int) -> list[list]:
    """Gram matrix of B, normalised so that B(e_i, f_i) = 1 (i.e. 2B)."""
    J = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        J[i][n + i] = 1
        J[n + i][i] = 1
    return J


def bilinear(n: int, v: Sequence, w: Sequence):
    """B(v, w) with B(e_i, f_j) = delta_ij / 2."""
    return HALF * sum(v[i] * w[n + i] + v[n + i] * w[i] for i in range(n))


def matvec(X: Sequence[Sequence], v: Sequence) -> list:
    return [sum(X[r][c] * v[c] for c in range(len(v)) if v[c] != 0) for r in range(len(X))]


def is_skew(X: Sequence[Sequence]) -> bool:
    """X^T J + J X == 0 for the hyperbolic Gram matrix J."""
    dim = len(X)
    n = dim // 2
    J = gram(n)
    for a in range(dim):
        for b in range(dim):
            lhs = sum(X[k][a] * J[k][b] for k in range(dim)) + sum(J[a][k] * X[k][b] for k in range(dim))
            if lhs != 0:
                return False
    return True


def _zero(dim):
    return [[0] * dim for _ in range(dim)]


def so_basis(n: int) -> list[list[list]]:
    """A basis of so(2n) with respect to the hyperbolic form, of size 2n^2 - n.

    Order: the gl(n) block (X e_j = e_i, X f_i = -f_j), then for i < j the
    maps f_j -> e_i, f_i -> -e_j, then e_j -> f_i, e_i -> -f_j.
    """
    dim = 2 * n
    out = []
    for i in range(n):
        for j in range(n):
            X = _zero(dim)
            X[i][j] += 1
            X[n + j][n + i] -= 1
            out.append(X)
    for i in range(n):
        for j in range(i + 1, n):
            X = _zero(dim)
            X[i][n + j] = 1
            X[j][n + i] = -1
            out.append(X)
    for i in range(n):
        for j in range(i + 1, n):
            X = _zero(dim)
            X[n + i][j] = 1
            X[n + j][i] = -1
            out.append(X)
    return out


def combine(coeffs: Sequence, mats: Sequence[Sequence[Sequence]]) -> list[list]:
    dim = len(mats[0])
    out = _zero(dim)
    for a, M in zip(coeffs, mats):
        if a == 0:
            continue
        for r in range(dim):
            row, Mr = out[r], M[r]
            for c in range(dim):
                if Mr[c]:
                    row[c] += a * Mr[c]
    return out


class SpinOperator:
    """psi(X) = 1/2 sum_i [c(X e_i) c(f_i) + c(X f_i) c(e_i)].

    This is the unique quadratic Clifford element with [psi(X), c(v)] = c(Xv);
    it acts on both spinor modules.
    """

    def __init__(self, X: Sequence[Sequence]):
        self.X = [list(r) for r in X]
        self.n = len(X) // 2
        n = self.n
        self._cols = []
        for i in range(n):
            xe = [self.X[r][i] for r in range(2 * n)]
            xf = [self.X[r][n + i] for r in range(2 * n)]
            self._cols.append((xe, xf))

    def __call__(self, s: SpinorState) -> SpinorState:
        n = self.n
        if s.n != n:
            raise DomainError("operator and spinor dimensions differ")
        acc = SpinorState(n, {}, s.module)
        for i, (xe, xf) in enumerate(self._cols):
            if any(xe):
                t = clifford_act(basis_vector(n, "f", i + 1), s)
                if not t.is_zero():
                    acc = acc + clifford_act(xe, t)
            if any(xf):
                t = clifford_act(basis_vector(n, "e", i + 1), s)
                if not t.is_zero():
                    acc = acc + clifford_act(xf, t)
        return acc.scale(HALF)


def spin_lift(X: Sequence[Sequence]) -> SpinOperator:
    """The infinitesimal spin action of a J-skew matrix X."""
    if not is_skew(X):
        raise DomainError("spin_lift needs a matrix in so(2n)")
    return SpinOperator(X)


def commutator_defect(X: Sequence[Sequence], v: Sequence, s: SpinorState) -> SpinorState:
    """[psi(X), c(v)] s - c(Xv) s, which must vanish."""
    psi = SpinOperator(X)
    lhs = psi(clifford_act(v, s)) - clifford_act(v, psi(s))
    return lhs - clifford_act(matvec(X, v), s)


def annihilator(s: SpinorState) -> list[list]:
    """Basis of {v in V : c(v) s = 0}; s is pure iff it has dimension n."""
    if s.is_zero():
        raise DomainError("the zero spinor has no annihilator")
    n = s.n
    cols = []
    for k in range(2 * n):
        v = [0] * (2 * n)
        v[k] = 1
        cols.append(clifford_act(v, s).dense())
    return exact.nullspace(exact.columns_to_rows(cols))


def is_pure(s: SpinorState) -> bool:
    return len(annihilator(s)) == s.n


def _complement_sign(mask: int, n: int) -> int:
    inside = [i for i in range(n) if mask >> i & 1]
    outside = [i for i in range(n) if not mask >> i & 1]
    seq = inside + outside
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


PAIRING_CONVENTIONS = ("natural", "complement")


def spinor_pairing(a: SpinorState, b: SpinorState, convention: str = "natural"):
    """Duality pairing of an E-module spinor with an F-module spinor.

    ``"natural"``: <e_I, f_J> = delta_IJ.  ``"complement"``: the same times
    the sign of the shuffle (I, complement of I).  Only the natural one is
    spin-invariant for the lift used here.
    """
    if convention not in PAIRING_CONVENTIONS:
        raise DomainError(f"unknown pairing convention {convention!r}")
    if a.n != b.n:
        raise DomainError("spinors of different rank")
    if {a.module, b.module} != {"E", "F"}:
        raise DomainError("pairing needs one spinor from each module")
    if a.module == "F":
        a, b = b, a
    pa, pb = a.parity(), b.parity()
    if pa is not None and pb is not None and pa != pb:
        raise DomainError("parity mismatch: the pairing is zero between these half-spin spaces")
    total = 0
    for m, c in a.coeffs.items():
        d = b.coeffs.get(m)
        if d:
            eps = 1 if convention == "natural" else _complement_sign(m, a.n)
            total = total + eps * c * d
    return total


def is_invariant_pairing(X, a: SpinorState, b: SpinorState, convention: str = "natural") -> bool:
    psi = SpinOperator(X)
    return spinor_pairing(psi(a), b, convention) + spinor_pairing(a, psi(b), convention) == 0


Operator = Callable[[list], list]


def dense_operator(op: SpinOperator, n: int, module: str) -> Operator:
    """Wrap a spin operator as a map on dense coordinate lists."""

    def apply(vec: list) -> list:
        return op(SpinorState.from_dense(n, vec, module)).dense()

    return apply


# --- the g2 + g2 inside so(14) preserving I1 and I2 -------------------------

I2_F_SIGN = -1
"""Sign of the f-vectors in the ordered basis of I2.

With I1 = (e7 - f7, e1, e2, e3, f1, f2, f3) and
I2 = (e7 + f7, e4, e5, e6, -f4, -f5, -f6), both 7 x 7 block patterns are
read in row convention (row i lists the coordinates of the image of the
i-th basis vector).  With +f4, +f5, +f6 the second pattern is not skew.
"""


def g2_block(A: Sequence[Sequence], a, b, c, u, v, w) -> list[list]:
    """The 7 x 7 pattern for C + V3 + V3* with A in sl3."""
    if sum(A[i][i] for i in range(3)) != 0:
        raise DomainError("A must be traceless")
    M = [[0] * 7 for _ in range(7)]
    M[0][1:] = [2 * u, 2 * v, 2 * w, 2 * a, 2 * b, 2 * c]
    for r, x in enumerate((a, b, c)):
        M[1 + r][0] = x
    for r, x in enumerate((u, v, w)):
        M[4 + r][0] = x
    M[1][4:] = [0, w, -v]
    M[2][4:] = [-w, 0, u]
    M[3][4:] = [v, -u, 0]
    M[4][1:4] = [0, -c, b]
    M[5][1:4] = [c, 0, -a]
    M[6][1:4] = [-b, a, 0]
    for i in range(3):
        for j in range(3):
            M[1 + i][1 + j] = A[i][j]
            M[4 + i][4 + j] = -A[j][i]
    return M


def _std(n, kind, i, coeff=1):
    return [coeff * x for x in basis_vector(n, kind, i)]


def i1_basis() -> list[list]:
    n = 7
    b0 = [x - y for x, y in zip(_std(n, "e", 7), _std(n, "f", 7))]
    return [b0] + [_std(n, "e", i) for i in (1, 2, 3)] + [_std(n, "f", i) for i in (1, 2, 3)]


def i2_basis() -> list[list]:
    n = 7
    c0 = [x + y for x, y in zip(_std(n, "e", 7), _std(n, "f", 7))]
    return [c0] + [_std(n, "e", i) for i in (4, 5, 6)] + [_std(n, "f", i, I2_F_SIGN) for i in (4, 5, 6)]


def _images_from_block(M, basis):
    return [
        [sum(M[i][j] * basis[j][k] for j in range(7)) for k in range(14)]
        for i in range(7)
    ]


def mn_embedding(A, B, a, b, c, u, v, w, d, e, f, lam, mu, nu) -> list[list]:
    """The element of so(14) acting by M on I1 and by N on I2 (column convention)."""
    M = g2_block(A, a, b, c, u, v, w)
    N = g2_block(B, d, e, f, lam, mu, nu)
    im1 = _images_from_block(M, i1_basis())
    im2 = _images_from_block(N, i2_basis())
    cols: dict[int, list] = {}
    for r in range(3):
        cols[r] = im1[1 + r]                       # e1..e3
        cols[7 + r] = im1[4 + r]                   # f1..f3
        cols[3 + r] = im2[1 + r]                   # e4..e6
        cols[10 + r] = [I2_F_SIGN * x for x in im2[4 + r]]  # f4..f6
    cols[6] = [HALF * (x + y) for x, y in zip(im1[0], im2[0])]    # e7
    cols[13] = [HALF * (y - x) for x, y in zip(im1[0], im2[0])]   # f7
    X = [[cols[col][row] for col in range(14)] for row in range(14)]
    if not is_skew(X):
        raise DomainError("assembled element is not in so(14)")
    return X


def mn_basis() -> list[list[list]]:
    """28 elements: sl3 + V3 + V3* on I1, then the same on I2."""
    Z = [[0] * 3 for _ in range(3)]
    sl3 = []
    for i in range(3):
        for j in range(3):
            if i != j:
                E = [[0] * 3 for _ in range(3)]
                E[i][j] = 1
                sl3.append(E)
    for i in range(2):
        H = [[0] * 3 for _ in range(3)]
        H[i][i], H[i + 1][i + 1] = 1, -1
        sl3.append(H)
    out = []
    for side in (0, 1):
        for E in sl3:
            args = [E, Z] if side == 0 else [Z, E]
            out.append(mn_embedding(*args, *([0] * 12)))
        for k in range(6):
            p = [0] * 12
            p[6 * side + k] = 1
            out.append(mn_embedding(Z, Z, *p))
    return out


def s_star() -> SpinorState:
    """The generic spinor 1 + f1f2f3f7 + f4f5f6f7 + f1f2f3f4f5f6 of the F-module, n = 7."""
    return SpinorState.from_terms(
        7, [(1, []), (1, [1, 2, 3, 7]), (1, [4, 5, 6, 7]), (1, [1, 2, 3, 4, 5, 6])], "F"
    )


def s_w() -> SpinorState:
    """(e1 - e4)(e2 - e5)(e3 - e6) e7 in the E-module, n = 7."""
    n = 7
    d = lambda i, j: [x - y for x, y in zip(basis_vector(n, "e", i), basis_vector(n, "e", j))]
    return SpinorState.wedge_of_vectors(n, [d(1, 4), d(2, 5), d(3, 6), basis_vector(n, "e", 7)], "E")
