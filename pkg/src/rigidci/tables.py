"""Loader for the embedded dataset ``data/tables.json``.

The field-by-field format is documented in ``docs/tables.md``.  Family rows
carry a parameter t >= param_min; ``rank`` is either an int or ``[a, b]``
meaning ``a*t + b``, and polynomial fields are coefficient lists
``[c0, c1, ...]`` meaning ``c0 + c1*t + ...``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterator

from .errors import DataIntegrityError

REQUIRED = ("elashvili", "section_stabs", "cited_rigid", "aliases", "ms_exceptions", "theorem_lists", "special_constants")


def poly(expr, t: int | None) -> int:
    if isinstance(expr, int):
        return expr
    if t is None:
        raise DataIntegrityError("family expression without a parameter")
    return sum(c * t**k for k, c in enumerate(expr))


def linear(expr, t: int | None) -> int:
    if isinstance(expr, int):
        return expr
    if t is None:
        raise DataIntegrityError("family rank without a parameter")
    a, b = expr
    return a * t + b


@dataclass(frozen=True)
class FamilyRow:
    """A row keyed by (series, rank, node), possibly a family in t."""

    raw: dict

    @property
    def id(self) -> str:
        return self.raw["id"]

    @property
    def series(self) -> str:
        return self.raw["series"]

    @property
    def is_family(self) -> bool:
        return "param" in self.raw

    def param_for_rank(self, rank: int) -> int | None | bool:
        """The family parameter realising ``rank`` (None for fixed rows); False if none."""
        r = self.raw["rank"]
        if isinstance(r, int):
            return None if r == rank else False
        a, b = r
        t, rem = divmod(rank - b, a)
        if rem or t < self.raw.get("param_min", 0):
            return False
        return t

    def instances(self, max_rank: int) -> Iterator[tuple[int, int | None]]:
        """(rank, t) pairs with rank <= max_rank."""
        if not self.is_family:
            if self.raw["rank"] <= max_rank:
                yield self.raw["rank"], None
            return
        t = self.raw["param_min"]
        while linear(self.raw["rank"], t) <= max_rank:
            yield linear(self.raw["rank"], t), t
            t += 1

    def field(self, name: str, t: int | None) -> int:
        return poly(self.raw[name], t)

    def node(self, t: int | None) -> int:
        return linear(self.raw["node"], t)


@dataclass(frozen=True)
class Tables:
    data: dict
    fingerprint: str
    source: str

    @property
    def elashvili(self) -> list[FamilyRow]:
        return [FamilyRow(r) for r in self.data["elashvili"]]

    @property
    def section_stabs(self) -> list[FamilyRow]:
        return [FamilyRow(r) for r in self.data["section_stabs"]]

    @property
    def cited_rigid(self) -> list[FamilyRow]:
        return [FamilyRow(r) for r in self.data["cited_rigid"]]

    @property
    def aliases(self) -> list[dict]:
        return self.data["aliases"]

    @property
    def ms_exceptions(self) -> list[dict]:
        return self.data["ms_exceptions"]

    @property
    def qh_hyperplane(self) -> list[dict]:
        return self.data["theorem_lists"]["qh_hyperplane"]

    @property
    def candidates(self) -> list[dict]:
        return self.data["theorem_lists"]["candidates"]

    @property
    def special_constants(self) -> list[dict]:
        return self.data["special_constants"]


def _check_structure(data: dict, source: str):
    missing = [k for k in REQUIRED if k not in data]
    if missing:
        raise DataIntegrityError(f"{source}: missing sections {missing}")
    for row in data["elashvili"] + data["section_stabs"] + data["cited_rigid"]:
        for key in ("id", "series", "rank", "node"):
            if key not in row:
                raise DataIntegrityError(f"{source}: row {row.get('id', '?')} lacks {key!r}")
        if ("param" in row) != (not isinstance(row["rank"], int)):
            raise DataIntegrityError(f"{source}: row {row['id']} mixes family and fixed forms")
    for row in data["section_stabs"]:
        if row.get("r", 0) < 2:
            raise DataIntegrityError(f"{source}: section row {row['id']} needs r >= 2")


_override: Path | None = None


def set_path(path: str | Path | None) -> None:
    """Use a different tables file for subsequent :func:`load` calls."""
    global _override
    _override = Path(path) if path is not None else None
    load.cache_clear()


@lru_cache(maxsize=4)
def load() -> Tables:
    if _override is not None:
        text = _override.read_text(encoding="utf-8")
        source = str(_override)
    else:
        text = resources.files("rigidci").joinpath("data/tables.json").read_text(encoding="utf-8")
        source = "rigidci/data/tables.json"
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataIntegrityError(f"{source}: {exc}") from exc
    _check_structure(data, source)
    return Tables(data, hashlib.sha256(text.encode()).hexdigest(), source)
