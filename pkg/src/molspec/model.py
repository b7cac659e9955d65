"""Potential and field definitions, and reduction to radial parameters.

The interaction potential is the five-coefficient power form

    V(r) = a r^2 + b r + d - g/r + k/r^2

and the external configuration is a uniform magnetic field of strength B
(in calibrated field units) plus an integer number xi of magnetic flux
quanta threading the origin.  ``derive_radial_params`` folds potential,
fields, angular momentum and mass into the parameter set of the
one-dimensional radial problem

    R'' + (-eps^2 - gamma^2 r^2 + g' / r - b' r - (beta^2 - 1/4)/r^2) R = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .units import Constants, DEFAULT_CONSTANTS

MODEL_KINDS = ("pseudoharmonic", "harmonic", "generalized-kratzer", "mie-coulombic")


@dataclass(frozen=True)
class PowerPotential:
    """Coefficients of V(r) = a r^2 + b r + d - g/r + k/r^2.

    Units: a in eV/A^2, b in eV/A, d in eV, g in eV*A, k in eV*A^2.
    Arbitrary coefficients are representable; bound-state viability is
    checked when the radial parameters are derived, not at construction.
    """

    a: float = 0.0
    b: float = 0.0
    d: float = 0.0
    g: float = 0.0
    k: float = 0.0


@dataclass(frozen=True)
class FieldConfig:
    """Magnetic field strength B >= 0 and integer flux quanta xi."""

    B: float = 0.0
    xi: int = 0

    def __post_init__(self) -> None:
        if self.B < 0:
            raise ValueError(f"field strength must be non-negative, got {self.B}")
        if not isinstance(self.xi, int):
            raise ValueError(f"flux quanta must be an integer, got {self.xi!r}")


@dataclass(frozen=True)
class RadialParams:
    """Derived parameters of the radial equation.

    ``mprime`` is the effective magnetic quantum number m + xi; ``beta`` the
    effective centrifugal index; ``gamma``, ``gprime``, ``bprime``,
    ``dprime`` the scaled potential strengths; ``p`` and ``q`` the
    exponential-factor coefficients of the bound-state ansatz.  When the
    confinement is purely Coulombic (gamma = 0, g > 0) the coefficient q
    depends on the polynomial degree and is deferred to the series solver;
    ``coulomb_branch`` flags that case and q is stored as 0.
    """

    mprime: float
    beta: float
    gamma: float
    gprime: float
    bprime: float
    dprime: float
    p: float
    q: float
    hbar_omega_c: float
    mu: float
    twomu: float
    coulomb_branch: bool


def make_potential(kind: str, **params: float) -> PowerPotential:
    """Build the coefficient set for one of the four named models.

    pseudoharmonic(De, re):       a = De/re^2, d = -2 De, k = De re^2
    harmonic(mu, hbar_omega):     a = mu omega^2 / 2, all others zero
    generalized-kratzer(De, re, eta=-De): d = De + eta, g = 2 re De, k = re^2 De
    mie-coulombic(De, re):        g = 2 re De, k = re^2 De

    ``consts`` may be passed for the harmonic model's mass-energy
    conversion; it defaults to the built-in constants.
    """
    consts = params.pop("consts", DEFAULT_CONSTANTS)
    if kind == "pseudoharmonic":
        De, re = _positive(params, "De", "re")
        return PowerPotential(a=De / re**2, d=-2.0 * De, k=De * re**2)
    if kind == "harmonic":
        mu, hbar_omega = _positive(params, "mu", "hbar_omega")
        a = mu * consts.amu_in_ev * hbar_omega**2 / (2.0 * consts.hbar_c**2)
        return PowerPotential(a=a)
    if kind == "generalized-kratzer":
        eta = params.pop("eta", None)
        De, re = _positive(params, "De", "re")
        if eta is None:
            eta = -De
        return PowerPotential(d=De + eta, g=2.0 * re * De, k=re**2 * De)
    if kind == "mie-coulombic":
        De, re = _positive(params, "De", "re")
        return PowerPotential(g=2.0 * re * De, k=re**2 * De)
    raise ValueError(f"unknown model kind: {kind!r}")


def _positive(params: dict, *names: str) -> tuple:
    values = []
    for name in names:
        if name not in params:
            raise ValueError(f"missing model parameter: {name}")
        value = params.pop(name)
        if value <= 0:
            raise ValueError(f"model parameter {name} must be positive, got {value}")
        values.append(value)
    if params:
        raise ValueError(f"unexpected model parameters: {', '.join(sorted(params))}")
    return tuple(values)


def derive_radial_params(
    pot: PowerPotential,
    field: FieldConfig,
    m: int,
    mu: float,
    consts: Constants = DEFAULT_CONSTANTS,
) -> RadialParams:
    """Reduce potential + fields + (m, mu) to the radial parameter set.

    Raises ValueError when the configuration supports no bound spectrum
    (no quadratic confinement and no attractive Coulomb tail).
    """
    twomu = consts.twomu_over_hbar2(mu)
    hbar_omega_c = consts.cyclotron_energy(mu, field.B)
    mprime = float(m + field.xi)
    kprime = twomu * pot.k
    radicand = kprime + mprime * mprime
    if radicand < 0:
        raise AssertionError("negative centrifugal radicand; k must be >= 0")
    beta = math.sqrt(radicand)
    gamma2 = twomu * pot.a + (twomu * hbar_omega_c / 4.0) ** 2
    gprime = twomu * pot.g
    bprime = twomu * pot.b
    dprime = twomu * pot.d
    if gamma2 > 0:
        gamma = math.sqrt(gamma2)
        p = -gamma
        q = -bprime / (2.0 * gamma)
        coulomb = False
    elif gamma2 < 0:
        raise ValueError(
            "anti-confining quadratic coefficient: a < 0 and the magnetic "
            "confinement does not compensate"
        )
    else:
        if pot.g <= 0:
            raise ValueError(
                "no bound spectrum: neither quadratic confinement nor an "
                "attractive Coulomb term is present"
            )
        if pot.b != 0:
            raise ValueError(
                "unsupported configuration: linear term with no quadratic "
                "confinement"
            )
        gamma = 0.0
        p = 0.0
        q = 0.0
        coulomb = True
    return RadialParams(
        mprime=mprime,
        beta=beta,
        gamma=gamma,
        gprime=gprime,
        bprime=bprime,
        dprime=dprime,
        p=p,
        q=q,
        hbar_omega_c=hbar_omega_c,
        mu=mu,
        twomu=twomu,
        coulomb_branch=coulomb,
    )
