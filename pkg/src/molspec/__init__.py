"""Closed-form rovibrational spectra of diatomic molecules in magnetic and
Aharonov-Bohm flux fields, with an independent finite-difference oracle.

The package models a planar power-law interaction (quadratic, linear,
Coulomb, and inverse-square terms) whose bound states admit polynomial-times-
exponential solutions on a solvability surface, specializes it to the
pseudoharmonic, harmonic, generalized-Kratzer, and Mie-Coulombic molecular
models, fits spectroscopic constants for NO, CO, N2, and CH from embedded
reference energies, and cross-checks every closed form numerically.
"""

from .ansatz import (
    ConstraintViolation,
    SeriesSolution,
    closure_epsilon2,
    determinant_residual,
    effective_params,
    energy_from_epsilon,
    eval_radial_wavefunction,
    normalize,
    recurrence_coeffs,
    s1_g_strengths,
    solve_series,
)
from .model import (
    MODEL_KINDS,
    FieldConfig,
    PowerPotential,
    RadialParams,
    derive_radial_params,
    make_potential,
)
from .molecules import (
    MoleculeConstants,
    MoleculeNotFound,
    REDUCED_MASS_AMU,
    default_registry,
    find_molecule,
    fit_constants,
    load_registry,
    save_registry,
)
from .oracle import (
    OracleError,
    OracleReport,
    OracleRow,
    RadialGrid,
    auto_grid,
    effective_potential,
    fd_eigenvalues,
    validate_many,
    validate_spectrum,
)
from .refdata import (
    MOLECULES,
    ReferenceRow,
    ReferenceTable,
    load_reference_tables,
    table1_rows,
)
from .spectrum import (
    DEGREE_STEP,
    LevelIndex,
    SpectrumLine,
    energy_general_2d,
    energy_model_2d,
    energy_model_3d,
    potential_for_model,
    spectrum_line,
    splitting,
    vibration_quantum,
)
from .units import (
    Constants,
    ConfigurationError,
    DEFAULT_CONSTANTS,
    load_constants,
    save_constants,
    with_field_unit,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError",
    "Constants",
    "ConstraintViolation",
    "DEFAULT_CONSTANTS",
    "DEGREE_STEP",
    "FieldConfig",
    "LevelIndex",
    "MODEL_KINDS",
    "MOLECULES",
    "MoleculeConstants",
    "MoleculeNotFound",
    "OracleError",
    "OracleReport",
    "OracleRow",
    "PowerPotential",
    "RadialGrid",
    "RadialParams",
    "REDUCED_MASS_AMU",
    "ReferenceRow",
    "ReferenceTable",
    "SeriesSolution",
    "SpectrumLine",
    "auto_grid",
    "closure_epsilon2",
    "default_registry",
    "derive_radial_params",
    "determinant_residual",
    "effective_params",
    "effective_potential",
    "energy_from_epsilon",
    "energy_general_2d",
    "energy_model_2d",
    "energy_model_3d",
    "eval_radial_wavefunction",
    "fd_eigenvalues",
    "find_molecule",
    "fit_constants",
    "load_constants",
    "load_reference_tables",
    "load_registry",
    "make_potential",
    "normalize",
    "potential_for_model",
    "recurrence_coeffs",
    "s1_g_strengths",
    "save_constants",
    "save_registry",
    "solve_series",
    "spectrum_line",
    "splitting",
    "table1_rows",
    "validate_many",
    "validate_spectrum",
    "vibration_quantum",
    "with_field_unit",
    "__version__",
]
