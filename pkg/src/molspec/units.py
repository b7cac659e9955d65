"""Physical constants and unit conversions.

All computations use the internal unit system energy = eV, length = angstrom,
mass = amu.  The two fixed constants are standard CODATA values; the third,
``field_unit_kappa``, converts the dimensionless magnetic field strength B of
the reference tables into a cyclotron energy and is determined once by
calibration against a single reference entry.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, replace

HBAR_C_EV_ANGSTROM = 1973.269804
AMU_IN_EV = 931.49410242e6


class ConfigurationError(ValueError):
    """A required configuration value is missing or inconsistent."""


@dataclass(frozen=True)
class Constants:
    """Immutable physical-constant set.

    ``field_unit_kappa`` is the calibration constant for the magnetic field:
    the cyclotron energy is kappa * B / mu.  A value of 0.0 means
    "not calibrated"; computations involving B > 0 refuse to run until a
    calibrated value is supplied (see :func:`with_field_unit`).
    """

    hbar_c: float = HBAR_C_EV_ANGSTROM
    amu_in_ev: float = AMU_IN_EV
    field_unit_kappa: float = 0.0

    def __post_init__(self) -> None:
        if self.hbar_c <= 0:
            raise ValueError(f"hbar_c must be positive, got {self.hbar_c}")
        if self.amu_in_ev <= 0:
            raise ValueError(f"amu_in_ev must be positive, got {self.amu_in_ev}")
        if self.field_unit_kappa < 0:
            raise ValueError(
                f"field_unit_kappa must be non-negative, got {self.field_unit_kappa}"
            )

    @property
    def calibrated(self) -> bool:
        return self.field_unit_kappa > 0

    def twomu_over_hbar2(self, mu: float) -> float:
        """Return 2*mu/hbar^2 in 1/(angstrom^2 eV) for ``mu`` in amu.

        This factor converts an energy-like quantity to the scaled
        (inverse-length-squared) form used throughout the radial problem.
        """
        if mu <= 0:
            raise ValueError(f"mass must be positive, got {mu}")
        return 2.0 * (mu * self.amu_in_ev) / (self.hbar_c * self.hbar_c)

    def cyclotron_energy(self, mu: float, B: float) -> float:
        """Return the cyclotron energy hbar*omega_c = kappa*B/mu in eV."""
        if mu <= 0:
            raise ValueError(f"mass must be positive, got {mu}")
        if B < 0:
            raise ValueError(f"field strength must be non-negative, got {B}")
        if B == 0:
            return 0.0
        if not self.calibrated:
            raise ConfigurationError(
                "field_unit_kappa is not calibrated; run calibration before "
                "computing with B > 0"
            )
        return self.field_unit_kappa * B / mu


def with_field_unit(consts: Constants, kappa: float) -> Constants:
    """Return a copy of ``consts`` with the field unit set.

    The field unit may be set only once: attempting to overwrite an
    already-calibrated value raises :class:`ConfigurationError`.
    """
    if kappa <= 0:
        raise ValueError(f"field_unit_kappa must be positive, got {kappa}")
    if consts.calibrated:
        raise ConfigurationError(
            "field_unit_kappa is already calibrated and may be set only once"
        )
    return replace(consts, field_unit_kappa=kappa)


DEFAULT_CONSTANTS = Constants()

_SECTION = "constants"
_FIELDS = ("hbar_c", "amu_in_ev", "field_unit_kappa")


def load_constants(path: str) -> Constants:
    """Load a :class:`Constants` set from an INI file's [constants] section."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigurationError(f"cannot read constants file: {path}")
    if not parser.has_section(_SECTION):
        raise ConfigurationError(f"missing [{_SECTION}] section in {path}")
    section = parser[_SECTION]
    unknown = set(section) - set(_FIELDS)
    if unknown:
        raise ConfigurationError(
            f"unknown keys in [{_SECTION}]: {', '.join(sorted(unknown))}"
        )
    kwargs = {}
    for key in _FIELDS:
        if key in section:
            try:
                kwargs[key] = float(section[key])
            except ValueError as exc:
                raise ConfigurationError(
                    f"invalid numeric value for {key}: {section[key]!r}"
                ) from exc
    try:
        return Constants(**kwargs)
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from exc


def save_constants(consts: Constants, path: str) -> None:
    """Write ``consts`` to an INI file, one shortest-round-trip value per key."""
    parser = configparser.ConfigParser()
    parser[_SECTION] = {
        "hbar_c": repr(consts.hbar_c),
        "amu_in_ev": repr(consts.amu_in_ev),
        "field_unit_kappa": repr(consts.field_unit_kappa),
    }
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        parser.write(handle)
