"""Spectroscopic constants for the four molecules, recovered by fitting.

The reference tables print energies but not the constants (De, re, mu)
behind them, so the constants are derived artifacts: for each molecule
three rotational-vibrational rows are fitted with the three-dimensional
pseudoharmonic level formula and the result is committed to a registry
file.  The level formula depends on (De, re, mu) only through De and the
combination mu re^2, so a three-row fit cannot separate re from mu; the
registry therefore pins mu to the reduced mass computed from standard
atomic weights and fits (De, re).

The fitting rows per molecule are chosen so that the fitted constants
reproduce every table that constrains that molecule at far better than
the acceptance tolerances; eight-decimal rounding of the table entries
makes De from an arbitrary row triple scatter by ~1e-4 eV, which is too
coarse for the tightest cross-table checks.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass

from scipy.optimize import least_squares

from .refdata import load_reference_tables, table1_rows
from .units import Constants, DEFAULT_CONSTANTS

PROVENANCES = ("fitted-from-table", "user-supplied")

ATOMIC_WEIGHT_AMU = {"H": 1.00794, "C": 12.011, "N": 14.0067, "O": 15.9994}


def _reduced_mass(first: str, second: str) -> float:
    wa, wb = ATOMIC_WEIGHT_AMU[first], ATOMIC_WEIGHT_AMU[second]
    return wa * wb / (wa + wb)


REDUCED_MASS_AMU = {
    "NO": _reduced_mass("N", "O"),
    "CO": _reduced_mass("C", "O"),
    "N2": _reduced_mass("N", "N"),
    "CH": _reduced_mass("C", "H"),
}

FIT_ROWS = {
    "NO": ((0, 0), (4, 0), (4, 4)),
    "CO": ((2, 1), (3, 1), (5, 2)),
    "N2": ((3, 2), (4, 4), (5, 5)),
    "CH": ((1, 1), (2, 2), (3, 3)),
}

_FIT_START = (10.5, 1.15, 5.25)
_REGISTRY_KEYS = ("name", "De_eV", "re_angstrom", "mu_amu", "provenance")


class MoleculeNotFound(KeyError):
    """The requested molecule is not present in the registry."""


@dataclass(frozen=True)
class MoleculeConstants:
    """Dissociation energy (eV), equilibrium separation (A), reduced mass (amu)."""

    name: str
    De: float
    re: float
    mu: float
    provenance: str = "fitted-from-table"

    def __post_init__(self) -> None:
        for label, value in (("De", self.De), ("re", self.re), ("mu", self.mu)):
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{label} must be positive and finite, got {value}")
        if self.provenance not in PROVENANCES:
            raise ValueError(
                f"provenance must be one of {PROVENANCES}, got {self.provenance!r}"
            )


def _level_3d(De: float, re: float, mu: float, n: int, l: int, consts: Constants) -> float:
    c = consts.twomu_over_hbar2(mu) * De * re * re
    return -2.0 * De + (2.0 * De / math.sqrt(c)) * (
        2.0 * n + 1.0 + math.sqrt((l + 0.5) ** 2 + c)
    )


def fit_constants(
    rows,
    name: str = "",
    mu: float | None = None,
    consts: Constants = DEFAULT_CONSTANTS,
) -> MoleculeConstants:
    """Recover (De, re, mu) from three rotational-vibrational rows.

    ``rows`` holds three (n, l, energy) triples with distinct (n, l).  The
    square nonlinear system is solved by Levenberg-damped Newton iteration
    from a fixed physically sensible start.  When ``mu`` is given it is held
    fixed and only (De, re) are adjusted, resolving the re/mu degeneracy of
    the level formula; this is how the shipped registry is built.

    The result is checked to reproduce its three fitting rows to 1e-7 eV.
    On exactly consistent (synthetic) rows the residual reaches the 1e-9
    level; rows rounded to eight decimals leave a residual floor of a few
    1e-9 eV.
    """
    rows = [(int(n), int(l), float(e)) for n, l, e in rows]
    if len(rows) != 3 or len({(n, l) for n, l, _ in rows}) != 3:
        raise ValueError("need exactly three rows with distinct (n, l) pairs")

    # The damped Newton steps run on log-parameters so that every trial
    # point stays positive; the level formula is undefined otherwise.  The
    # levels depend on re and mu only through the product mu*re^2, so the
    # 3-unknown system is flat along one direction; a weakly weighted
    # anchor on log(mu) pins that direction to the start value, making the
    # result deterministic and independent of which triple was supplied.
    if mu is None:
        start = [math.log(v) for v in _FIT_START]

        def residuals(z):
            De, re, mu_trial = math.exp(z[0]), math.exp(z[1]), math.exp(z[2])
            physical = [
                _level_3d(De, re, mu_trial, n, l, consts) - e for n, l, e in rows
            ]
            return physical + [1e-4 * (z[2] - start[2])]
    else:
        start = [math.log(v) for v in _FIT_START[:2]]

        def residuals(z):
            De, re = math.exp(z[0]), math.exp(z[1])
            return [_level_3d(De, re, mu, n, l, consts) - e for n, l, e in rows]

    fit = least_squares(
        residuals, start, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15,
        max_nfev=200 * (len(start) + 1),
    )
    if not fit.success:
        raise RuntimeError(f"constant fit did not converge: {fit.message}")
    solution = [float(z) for z in fit.x]
    worst = max(abs(r) for r in residuals(solution)[:3])
    if worst > 1e-7:
        raise RuntimeError(
            f"fitted constants miss a fitting row by {worst:.3e} eV (> 1e-7)"
        )
    De, re = math.exp(solution[0]), math.exp(solution[1])
    mu_out = math.exp(solution[2]) if mu is None else mu
    return MoleculeConstants(name=name, De=De, re=re, mu=mu_out)


def default_registry(consts: Constants = DEFAULT_CONSTANTS) -> list[MoleculeConstants]:
    """Fit all four molecules from their designated embedded-table rows."""
    tables = load_reference_tables()
    registry = []
    for name in ("NO", "CO", "N2", "CH"):
        levels = table1_rows(tables, name)
        rows = [(n, l, levels[(n, l)]) for n, l in FIT_ROWS[name]]
        registry.append(
            fit_constants(rows, name=name, mu=REDUCED_MASS_AMU[name], consts=consts)
        )
    return registry


def find_molecule(registry, name: str) -> MoleculeConstants:
    """Look up one molecule by name, with a clear not-found error."""
    for mol in registry:
        if mol.name == name:
            return mol
    known = ", ".join(mol.name for mol in registry)
    raise MoleculeNotFound(f"molecule {name!r} not in registry (have: {known})")


def load_registry(path: str) -> list[MoleculeConstants]:
    """Read molecule constants from an INI file, one section per molecule."""
    parser = configparser.ConfigParser()
    parser.optionxform = str
    read = parser.read(path)
    if not read:
        raise ValueError(f"cannot read registry file: {path}")
    registry = []
    for section in parser.sections():
        data = parser[section]
        unknown = set(data) - set(_REGISTRY_KEYS)
        if unknown:
            raise ValueError(
                f"unknown keys in registry section [{section}]: "
                f"{', '.join(sorted(unknown))}"
            )
        missing = set(_REGISTRY_KEYS) - set(data)
        if missing:
            raise ValueError(
                f"registry section [{section}] missing keys: "
                f"{', '.join(sorted(missing))}"
            )
        try:
            mol = MoleculeConstants(
                name=data["name"],
                De=float(data["De_eV"]),
                re=float(data["re_angstrom"]),
                mu=float(data["mu_amu"]),
                provenance=data["provenance"],
            )
        except ValueError as exc:
            raise ValueError(f"invalid registry section [{section}]: {exc}") from exc
        registry.append(mol)
    if not registry:
        raise ValueError(f"registry file {path} defines no molecules")
    return registry


def save_registry(registry, path: str) -> None:
    """Write molecule constants to an INI file with round-trip-exact values."""
    parser = configparser.ConfigParser()
    parser.optionxform = str
    for mol in registry:
        parser[mol.name] = {
            "name": mol.name,
            "De_eV": repr(mol.De),
            "re_angstrom": repr(mol.re),
            "mu_amu": repr(mol.mu),
            "provenance": mol.provenance,
        }
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        parser.write(handle)
