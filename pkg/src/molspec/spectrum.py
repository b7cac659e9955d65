"""Closed-form bound-state energies.

Two routes to the spectrum are provided.  ``energy_general_2d`` evaluates
the generic level formula indexed by the polynomial degree of the series
solution; it applies whenever the quadratic confinement is nonzero.  The
``energy_model_*`` functions evaluate the four named-model formulas
(pseudoharmonic, harmonic, generalized Kratzer, Mie-Coulombic) indexed by
the radial quantum number n.  The two indexings are linked by the chain
structure of the recurrence: oscillator-type potentials couple every other
coefficient, so degree = 2n, while Coulomb-type potentials couple adjacent
coefficients, so degree = n.

Planar levels carry the effective magnetic quantum number m' = m + xi; the
three-dimensional rotational levels follow from the field-free planar
formulas under the half-integer shift m -> l + 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import (
    FieldConfig,
    PowerPotential,
    derive_radial_params,
    make_potential,
)
from .units import Constants, DEFAULT_CONSTANTS

DEGREE_STEP = {
    "pseudoharmonic": 2,
    "harmonic": 2,
    "generalized-kratzer": 1,
    "mie-coulombic": 1,
}


@dataclass(frozen=True)
class LevelIndex:
    """Quantum numbers of one level: radial n plus m (2D) or l (3D)."""

    n: int
    m: int
    dims: int = 2

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"radial quantum number must be >= 0, got {self.n}")
        if self.dims not in (2, 3):
            raise ValueError(f"dims must be 2 or 3, got {self.dims}")
        if self.dims == 3 and self.m < 0:
            raise ValueError(f"rotational quantum number must be >= 0, got {self.m}")


@dataclass(frozen=True)
class SpectrumLine:
    """One computed level with its bookkeeping."""

    index: LevelIndex
    energy: float
    mprime: float
    kind: str
    field: FieldConfig


def energy_general_2d(
    pot: PowerPotential,
    field: FieldConfig,
    degree: int,
    m: int,
    mu: float,
    consts: Constants = DEFAULT_CONSTANTS,
) -> float:
    """Planar level of the general power potential, indexed by series degree.

    E = d + hbar omega_c m'/2 + (2 gamma / (2mu/hbar^2)) (degree + 1 + beta)
        - (2mu/hbar^2) b^2 / (4 gamma^2)

    Requires gamma > 0 (quadratic or magnetic confinement); purely
    Coulombic potentials must go through the model formulas.
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    params = derive_radial_params(pot, field, m, mu, consts)
    if params.coulomb_branch:
        raise ValueError(
            "general planar formula needs gamma > 0; use the model formula "
            "for purely Coulombic potentials"
        )
    return (
        pot.d
        + 0.5 * params.hbar_omega_c * params.mprime
        + (2.0 * params.gamma / params.twomu) * (degree + 1.0 + params.beta)
        - params.twomu * pot.b * pot.b / (4.0 * params.gamma * params.gamma)
    )


def _core_strength(mol, mu: float, consts: Constants) -> float:
    """Dimensionless well-depth parameter c = (2mu/hbar^2) De re^2."""
    return consts.twomu_over_hbar2(mu) * mol.De * mol.re * mol.re


def vibration_quantum(mol, mu: float, consts: Constants = DEFAULT_CONSTANTS) -> float:
    """Harmonic quantum hbar omega = 2 De / sqrt(c) of the well bottom (eV)."""
    return 2.0 * mol.De / math.sqrt(_core_strength(mol, mu, consts))


def potential_for_model(
    kind: str, mol, mu: float, consts: Constants = DEFAULT_CONSTANTS
) -> PowerPotential:
    """Power-form coefficients of a named model for one molecule.

    The harmonic model is parameterized by the molecule's own well-bottom
    quantum (``vibration_quantum``) so that all four models are defined by
    the same constants (De, re, mu).
    """
    if kind == "pseudoharmonic":
        return make_potential(kind, De=mol.De, re=mol.re)
    if kind == "harmonic":
        return make_potential(
            kind, mu=mu, hbar_omega=vibration_quantum(mol, mu, consts), consts=consts
        )
    if kind == "generalized-kratzer":
        return make_potential(kind, De=mol.De, re=mol.re, eta=-mol.De)
    if kind == "mie-coulombic":
        return make_potential(kind, De=mol.De, re=mol.re)
    raise ValueError(f"unknown model kind: {kind!r}")


def energy_model_2d(
    kind: str,
    mol,
    field: FieldConfig,
    n: int,
    m: int,
    mu: float | None = None,
    consts: Constants = DEFAULT_CONSTANTS,
    eta: float | None = None,
) -> float:
    """Planar level E_{n m} of a named model under magnetic field and flux.

    ``mol`` supplies (De, re) and, when ``mu`` is omitted, the reduced
    mass.  ``eta`` shifts the generalized-Kratzer dissociation plateau and
    defaults to -De, which makes that model coincide with the
    Mie-Coulombic one.
    """
    if n < 0:
        raise ValueError(f"radial quantum number must be >= 0, got {n}")
    if mu is None:
        mu = mol.mu
    hoc = consts.cyclotron_energy(mu, field.B)
    mprime = m + field.xi
    if kind == "harmonic":
        hw = vibration_quantum(mol, mu, consts)
        return math.sqrt(hoc * hoc + 4.0 * hw * hw) * (
            n + (1.0 + abs(mprime)) / 2.0
        ) + 0.5 * hoc * mprime
    c = _core_strength(mol, mu, consts)
    beta = math.sqrt(mprime * mprime + c)
    if kind == "pseudoharmonic":
        hw = 2.0 * mol.De / math.sqrt(c)
        return (
            -2.0 * mol.De
            + math.sqrt(hoc * hoc + 4.0 * hw * hw) * (n + (beta + 1.0) / 2.0)
            + 0.5 * hoc * mprime
        )
    if kind == "generalized-kratzer":
        if eta is None:
            eta = -mol.De
        plateau = mol.De + eta
    elif kind == "mie-coulombic":
        plateau = 0.0
    else:
        raise ValueError(f"unknown model kind: {kind!r}")
    coulomb = c * mol.De / (n + 0.5 + beta) ** 2
    return plateau + 0.5 * hoc * (mprime + n + 1.0 + beta) - coulomb


def energy_model_3d(
    kind: str,
    mol,
    n: int,
    l: int,
    mu: float | None = None,
    consts: Constants = DEFAULT_CONSTANTS,
    eta: float | None = None,
) -> float:
    """Rotational-vibrational level E_{n l}: field-free planar form at m -> l + 1/2."""
    if n < 0 or l < 0:
        raise ValueError(f"quantum numbers must be >= 0, got n={n}, l={l}")
    if mu is None:
        mu = mol.mu
    if kind == "harmonic":
        return vibration_quantum(mol, mu, consts) * (2.0 * n + l + 1.5)
    c = _core_strength(mol, mu, consts)
    beta = math.sqrt((l + 0.5) ** 2 + c)
    if kind == "pseudoharmonic":
        hw = 2.0 * mol.De / math.sqrt(c)
        return -2.0 * mol.De + hw * (2.0 * n + 1.0 + beta)
    if kind == "generalized-kratzer":
        if eta is None:
            eta = -mol.De
        plateau = mol.De + eta
    elif kind == "mie-coulombic":
        plateau = 0.0
    else:
        raise ValueError(f"unknown model kind: {kind!r}")
    return plateau - c * mol.De / (n + 0.5 + beta) ** 2


def splitting(
    kind: str,
    mol,
    field: FieldConfig,
    n: int,
    mu: float | None = None,
    consts: Constants = DEFAULT_CONSTANTS,
) -> float:
    """Energy difference E(m=+1) - E(m=-1) at fixed n under the given fields."""
    return energy_model_2d(kind, mol, field, n, 1, mu, consts) - energy_model_2d(
        kind, mol, field, n, -1, mu, consts
    )


def spectrum_line(
    kind: str,
    mol,
    field: FieldConfig,
    index: LevelIndex,
    mu: float | None = None,
    consts: Constants = DEFAULT_CONSTANTS,
) -> SpectrumLine:
    """Bundle one computed level with its quantum numbers and field setting."""
    if index.dims == 3:
        energy = energy_model_3d(kind, mol, index.n, index.m, mu, consts)
        mprime = index.m + 0.5
    else:
        energy = energy_model_2d(kind, mol, field, index.n, index.m, mu, consts)
        mprime = index.m + field.xi
    return SpectrumLine(index=index, energy=energy, mprime=mprime, kind=kind, field=field)
