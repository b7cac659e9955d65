"""Embedded reference energy tables.

Five tables of bound-state energies for NO, CO, N2 and CH ship with the
package as a CSV transcription, eight decimal places per value, and serve
as the regression baselines.  Tables 1 and 3 are three-dimensional
rotational-vibrational spectra (the ``m`` column holds l); tables 2, 4
and 5 are planar spectra on a lattice of magnetic-field strengths B and
flux quanta xi.  Tables 3-5 store -E: the tabulated value is the positive
magnitude of a negative energy.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

NEGATED_TABLES = frozenset({3, 4, 5})
TABLE_IDS = (1, 2, 3, 4, 5)
MOLECULES = ("NO", "CO", "N2", "CH")


@dataclass(frozen=True)
class ReferenceRow:
    """One tabulated level: quantum numbers, field point and printed value."""

    molecule: str
    n: int
    m: int
    xi: int
    B: int
    value: float


@dataclass(frozen=True)
class ReferenceTable:
    """One embedded table with its model tag and sign convention."""

    table_id: int
    kind: str
    dims: int
    negated: bool
    rows: tuple

    def energy(self, row: ReferenceRow) -> float:
        """Signed energy in eV of one row (undoing the -E print convention)."""
        return -row.value if self.negated else row.value


def load_reference_tables() -> dict[int, ReferenceTable]:
    """Parse the packaged CSV into one ReferenceTable per table id."""
    text = (
        resources.files("molspec").joinpath("data/reference_tables.csv").read_text()
    )
    grouped: dict[int, dict] = {}
    for record in csv.DictReader(text.splitlines()):
        table_id = int(record["table"])
        entry = grouped.setdefault(
            table_id, {"kind": record["model"], "dims": int(record["dims"]), "rows": []}
        )
        if entry["kind"] != record["model"] or entry["dims"] != int(record["dims"]):
            raise ValueError(f"inconsistent metadata within table {table_id}")
        entry["rows"].append(
            ReferenceRow(
                molecule=record["molecule"],
                n=int(record["n"]),
                m=int(record["m"]),
                xi=int(record["xi"]),
                B=int(record["B"]),
                value=float(record["value"]),
            )
        )
    tables = {}
    for table_id, entry in grouped.items():
        tables[table_id] = ReferenceTable(
            table_id=table_id,
            kind=entry["kind"],
            dims=entry["dims"],
            negated=table_id in NEGATED_TABLES,
            rows=tuple(entry["rows"]),
        )
    return tables


def table1_rows(tables: dict[int, ReferenceTable], molecule: str) -> dict:
    """Map (n, l) -> energy (eV) for one molecule's rotational-vibrational table."""
    table = tables[1]
    return {
        (row.n, row.m): table.energy(row)
        for row in table.rows
        if row.molecule == molecule
    }
