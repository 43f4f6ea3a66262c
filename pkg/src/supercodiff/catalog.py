"""Bundled dataset of low-dimensional codifferentials and their expected invariants.

The package ships a JSON file describing, for each algebra dimension, the
families of odd codifferentials under study: a coefficient expression with
named parameters, the rows at which cohomology is tabulated (a generic
sample, distinguished subfamilies, and isolated special points), expected
cohomology bidimensions for degrees 0 through 3, and structural claims.
A second section records claimed equivalences between rows and claimed
one-parameter jump families.  This module loads that file into typed
records and instantiates rows as concrete cochains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .cochains import Cochain
from .literals import instantiate, parse_cochain
from .spaces import Bidim, GradedSpace

__all__ = [
    "Catalog",
    "CatalogEntry",
    "CatalogRow",
    "EquivalenceClaim",
    "JumpClaim",
    "StructureClaim",
    "load_catalog",
]

DATA_RESOURCE = "catalog.json"


def _parse_bindings(raw: dict[str, str]) -> dict[str, Fraction]:
    return {name: Fraction(value) for name, value in raw.items()}


@dataclass(frozen=True)
class CatalogRow:
    """One tabulated member of a family.

    ``kind`` is "generic" (the family at a sample point avoiding every
    special stratum), "subfamily" (a positive-dimensional stratum, with the
    defining relation kept for display and a frozen sample on it), or
    "point" (an isolated parameter value).  ``bindings`` always contains the
    concrete parameter values used to instantiate the row.
    """

    label: str
    kind: str
    bindings: dict[str, Fraction]
    expected: tuple[Bidim, ...]
    relation: dict[str, str] | None = None

    def is_special_point(self) -> bool:
        return self.kind == "point"


@dataclass(frozen=True)
class StructureClaim:
    """A solvability / nilpotency assertion over some rows of an entry.

    ``where`` is "all" (every row), "generic" (the generic row only),
    "nonzero" (every row whose bindings are not all zero), or a dict of
    parameter values selecting one point.
    """

    where: str | dict[str, Fraction]
    solvable: bool | None
    nilpotent: bool | None

    def applies(self, row: CatalogRow) -> bool:
        if self.where == "all":
            return True
        if self.where == "generic":
            return row.kind == "generic"
        if self.where == "nonzero":
            return not row.bindings or any(v != 0 for v in row.bindings.values())
        assert isinstance(self.where, dict)
        return row.kind == "point" and row.bindings == self.where


@dataclass(frozen=True)
class CatalogEntry:
    """A family of codifferentials on one graded space."""

    id: str
    algebra: Bidim
    space: GradedSpace
    name: str
    params: tuple[str, ...]
    expr: str
    rows: tuple[CatalogRow, ...]
    structure: tuple[StructureClaim, ...]

    def instantiate(self, bindings: dict[str, Fraction]) -> Cochain:
        return instantiate(parse_cochain(self.expr), self.space, bindings)

    def row_cochain(self, row: CatalogRow) -> Cochain:
        return self.instantiate(row.bindings)

    def find_row(self, bindings: dict[str, Fraction]) -> CatalogRow | None:
        for row in self.rows:
            if row.bindings == bindings:
                return row
        return None


@dataclass(frozen=True)
class EquivalenceClaim:
    id: str
    left: tuple[str, dict[str, Fraction]]
    right: tuple[str, dict[str, Fraction]]


@dataclass(frozen=True)
class JumpClaim:
    id: str
    source: tuple[str, dict[str, Fraction]]
    target: tuple[str, dict[str, Fraction]]
    family: str
    samples: tuple[Fraction, ...]


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]
    equivalences: tuple[EquivalenceClaim, ...]
    jumps: tuple[JumpClaim, ...]

    def get(self, entry_id: str) -> CatalogEntry:
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        raise KeyError(f"no catalog entry {entry_id!r}")

    def algebras(self) -> list[str]:
        seen: list[str] = []
        for entry in self.entries:
            label = str(entry.algebra)
            if label not in seen:
                seen.append(label)
        return seen

    def resolve(self, ref: tuple[str, dict[str, Fraction]]) -> Cochain:
        entry_id, bindings = ref
        return self.get(entry_id).instantiate(bindings)

    def total_rows(self) -> int:
        return sum(len(entry.rows) for entry in self.entries)


def _row_from_json(raw: dict) -> CatalogRow:
    bindings = _parse_bindings(raw.get("point", raw.get("sample", {})))
    expected = tuple(Bidim.parse(h) for h in raw["h"])
    return CatalogRow(
        label=raw["label"],
        kind=raw["kind"],
        bindings=bindings,
        expected=expected,
        relation=raw.get("relation"),
    )


def _structure_from_json(raw: dict) -> StructureClaim:
    where = raw["where"]
    if isinstance(where, dict):
        where = _parse_bindings(where)
    return StructureClaim(
        where=where,
        solvable=raw.get("solvable"),
        nilpotent=raw.get("nilpotent"),
    )


def _entry_from_json(raw: dict) -> CatalogEntry:
    return CatalogEntry(
        id=raw["id"],
        algebra=Bidim.parse(raw["algebra"]),
        space=GradedSpace.parse(raw["space"]),
        name=raw["name"],
        params=tuple(raw["params"]),
        expr=raw["expr"],
        rows=tuple(_row_from_json(r) for r in raw["rows"]),
        structure=tuple(_structure_from_json(s) for s in raw.get("structure", ())),
    )


def _ref_from_json(raw: dict) -> tuple[str, dict[str, Fraction]]:
    return raw["entry"], _parse_bindings(raw["point"])


def load_catalog() -> Catalog:
    text = resources.files(__package__).joinpath("data", DATA_RESOURCE).read_text()
    raw = json.loads(text)
    entries = tuple(_entry_from_json(e) for e in raw["entries"])
    claims = raw.get("claims", {})
    equivalences = tuple(
        EquivalenceClaim(
            id=c["id"],
            left=_ref_from_json(c["left"]),
            right=_ref_from_json(c["right"]),
        )
        for c in claims.get("equivalences", ())
    )
    jumps = tuple(
        JumpClaim(
            id=c["id"],
            source=_ref_from_json(c["source"]),
            target=_ref_from_json(c["target"]),
            family=c["family"],
            samples=tuple(Fraction(s) for s in c["samples"]),
        )
        for c in claims.get("jumps", ())
    )
    return Catalog(entries=entries, equivalences=equivalences, jumps=jumps)
