"""Infinitesimal stabilizers and orbit dimensions for linear actions.

An *algebra* here is a list of operators, each a callable taking a dense
coordinate list to a dense coordinate list of the same length.  Every
answer is an exact kernel dimension.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Sequence

from ..errors import DomainError
from . import exact

Operator = Callable[[list], list]


class Mode(str, Enum):
    VECTOR = "vector"
    LINE = "line"
    SUBSPACE = "subspace"


def _check_dims(vectors: Sequence[Sequence]):
    lens = {len(v) for v in vectors}
    if len(lens) > 1:
        raise DomainError("vectors of different lengths")


def _images(algebra: Sequence[Operator], t: list) -> list[list]:
    out = [op(list(t)) for op in algebra]
    for img in out:
        if len(img) != len(t):
            raise DomainError("operator output has the wrong dimension")
    return out


def linear_stabilizer(algebra: Sequence[Operator], target, mode: Mode | str = Mode.VECTOR):
    """Subalgebra of ``span(algebra)`` fixing ``target``.

    ``target`` is one vector for VECTOR and LINE modes and a list of
    vectors for SUBSPACE mode.  Returns ``(dim, basis)`` where each basis
    element is a coefficient list over ``algebra``.
    """
    mode = Mode(mode)
    m = len(algebra)
    if mode is Mode.SUBSPACE:
        ts = [list(t) for t in target]
        if not ts:
            raise DomainError("empty subspace")
        _check_dims(ts)
        if exact.rank(ts) != len(ts):
            raise DomainError("subspace generators are not independent")
    else:
        ts = [list(target)]
        if mode is Mode.LINE and not any(x != 0 for x in ts[0]):
            raise DomainError("a line needs a nonzero vector")

    k = len(ts) if mode is not Mode.VECTOR else 0
    dim = len(ts[0])
    # unknowns: algebra coefficients c (m of them), then a[l][j] (k*k of them)
    rows = []
    for j, t in enumerate(ts):
        imgs = _images(algebra, t)
        for p in range(dim):
            row = [img[p] for img in imgs] + [0] * (k * k)
            for l in range(k):
                row[m + l * k + j] = -ts[l][p]
            rows.append(row)
    ker = exact.nullspace(rows, m + k * k)
    proj = [v[:m] for v in ker]
    # independent targets make the projection injective
    if proj and exact.rank(proj) != len(proj):
        raise DomainError("projection lost rank; targets dependent")
    return len(proj), proj


def combine_ops(coeffs: Sequence, algebra: Sequence[Operator]) -> Operator:
    pairs = [(a, op) for a, op in zip(coeffs, algebra) if a != 0]

    def apply(v: list) -> list:
        out = [0] * len(v)
        for a, op in pairs:
            for i, x in enumerate(op(v)):
                if x != 0:
                    out[i] = out[i] + a * x
        return out

    return apply


def restrict(algebra: Sequence[Operator], basis: Sequence[Sequence]) -> list[Operator]:
    """Operators spanning the subalgebra given by coefficient vectors."""
    return [combine_ops(b, algebra) for b in basis]


def orbit_dim(stab_basis: Sequence[Operator], point: Sequence, projective: bool = False) -> int:
    """Dimension of the tangent space to the orbit through ``point``.

    In projective mode the line through ``point`` is divided out.
    """
    pt = list(point)
    if not any(x != 0 for x in pt):
        raise DomainError("orbit of the zero vector")
    imgs = _images(stab_basis, pt)
    if projective:
        return exact.rank(imgs + [pt]) - 1
    return exact.rank(imgs) if imgs else 0
