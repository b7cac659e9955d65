#!/usr/bin/env python3
"""Regenerate the packaged data files from the embedded reference energies.

Writes src/molspec/data/registry.ini (spectroscopic constants fitted per
molecule) and src/molspec/data/constants.ini (physical constants with the
field unit calibrated from the Table 2 anchor row).  Both files are
committed; this script exists so they can be rebuilt deterministically.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from scipy.optimize import brentq

from molspec.model import FieldConfig
from molspec.molecules import default_registry, find_molecule, save_registry
from molspec.refdata import load_reference_tables
from molspec.spectrum import energy_model_2d
from molspec.units import DEFAULT_CONSTANTS, save_constants, with_field_unit

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "molspec", "data")


def main() -> int:
    registry = default_registry(DEFAULT_CONSTANTS)
    registry_path = os.path.join(DATA_DIR, "registry.ini")
    save_registry(registry, registry_path)
    for mol in registry:
        print(f"{mol.name}: De={mol.De!r} eV, re={mol.re!r} A, mu={mol.mu!r} amu")
    print(f"wrote {os.path.normpath(registry_path)}")

    tables = load_reference_tables()
    target = next(
        tables[2].energy(row)
        for row in tables[2].rows
        if (row.molecule, row.n, row.m, row.xi, row.B) == ("N2", 1, 1, 0, 1.0)
    )
    mol = find_molecule(registry, "N2")
    field = FieldConfig(B=1.0)

    def mismatch(kappa: float) -> float:
        trial = with_field_unit(DEFAULT_CONSTANTS, kappa)
        return energy_model_2d("pseudoharmonic", mol, field, 1, 1, consts=trial) - target

    kappa = brentq(mismatch, 1e-12, 1.0, xtol=1e-18, rtol=8.9e-16)
    consts = with_field_unit(DEFAULT_CONSTANTS, kappa)
    constants_path = os.path.join(DATA_DIR, "constants.ini")
    save_constants(consts, constants_path)
    print(f"field_unit_kappa={kappa!r}")
    print(f"wrote {os.path.normpath(constants_path)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
