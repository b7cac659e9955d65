"""Closed-form level formulas, field phenomenology, and model dispatch."""

import math

import pytest
from hypothesis import given, strategies as st

from molspec import (
    DEGREE_STEP,
    FieldConfig,
    LevelIndex,
    derive_radial_params,
    energy_general_2d,
    energy_model_2d,
    energy_model_3d,
    potential_for_model,
    spectrum_line,
    splitting,
    vibration_quantum,
)

ALL_KINDS = ("pseudoharmonic", "harmonic", "generalized-kratzer", "mie-coulombic")


def test_degree_step_mapping():
    assert DEGREE_STEP == {
        "pseudoharmonic": 2,
        "harmonic": 2,
        "generalized-kratzer": 1,
        "mie-coulombic": 1,
    }


def test_level_index_validation():
    index = LevelIndex(n=1, m=-2)
    assert index.dims == 2
    with pytest.raises(ValueError):
        LevelIndex(n=-1, m=0)
    with pytest.raises(ValueError):
        LevelIndex(n=0, m=-1, dims=3)
    with pytest.raises(ValueError):
        LevelIndex(n=0, m=0, dims=4)


def test_reference_spot_values(n2, ch, tables, consts):
    """A few verbatim table entries pin the formulas end to end."""
    t1 = {(r.molecule, r.n, r.m): tables[1].energy(r) for r in tables[1].rows}
    assert energy_model_3d("pseudoharmonic", n2, 2, 2, consts=consts) == pytest.approx(
        t1[("N2", 2, 2)], abs=5e-7
    )
    assert t1[("N2", 2, 2)] == 0.54717177
    assert energy_model_3d("pseudoharmonic", ch, 5, 5, consts=consts) == pytest.approx(
        1.90457946, abs=5e-7
    )
    # planar ground state, no fields
    assert energy_model_2d(
        "pseudoharmonic", n2, FieldConfig(), 0, 0, consts=consts
    ) == pytest.approx(0.10912268, abs=5e-7)
    assert energy_model_2d(
        "generalized-kratzer", n2, FieldConfig(), 0, 0, consts=consts
    ) == pytest.approx(-11.88381894, abs=5e-7)


def test_vibration_quantum_consistency(n2, consts):
    """hbar omega equals the well-bottom curvature quantum of the molecule."""
    hw = vibration_quantum(n2, n2.mu, consts)
    c = consts.twomu_over_hbar2(n2.mu) * n2.De * n2.re * n2.re
    assert hw == 2.0 * n2.De / math.sqrt(c)
    # pseudoharmonic level spacing at B=0 is exactly 2 hbar omega
    e0 = energy_model_2d("pseudoharmonic", n2, FieldConfig(), 0, 0, consts=consts)
    e1 = energy_model_2d("pseudoharmonic", n2, FieldConfig(), 1, 0, consts=consts)
    assert e1 - e0 == pytest.approx(2.0 * hw, rel=1e-12)


def test_general_form_matches_model_forms(n2, consts):
    """The degree-indexed planar formula agrees with each named model."""
    for kind in ("pseudoharmonic", "harmonic"):
        pot = potential_for_model(kind, n2, n2.mu, consts)
        for field in (FieldConfig(), FieldConfig(B=2.0), FieldConfig(xi=2)):
            for n in range(3):
                for m in (0, 1, -1):
                    general = energy_general_2d(
                        pot, field, DEGREE_STEP[kind] * n, m, n2.mu, consts
                    )
                    named = energy_model_2d(kind, n2, field, n, m, consts=consts)
                    assert general == pytest.approx(named, rel=1e-12)


def test_general_form_rejects_coulomb_branch(n2, consts):
    pot = potential_for_model("mie-coulombic", n2, n2.mu, consts)
    with pytest.raises(ValueError):
        energy_general_2d(pot, FieldConfig(), 1, 0, n2.mu, consts)


def test_negative_quantum_numbers_rejected(n2, consts):
    with pytest.raises(ValueError):
        energy_model_2d("pseudoharmonic", n2, FieldConfig(), -1, 0, consts=consts)
    with pytest.raises(ValueError):
        energy_model_3d("pseudoharmonic", n2, 0, -1, consts=consts)
    with pytest.raises(ValueError):
        energy_model_2d("no-such-model", n2, FieldConfig(), 0, 0, consts=consts)


@given(
    kind=st.sampled_from(ALL_KINDS),
    n=st.integers(min_value=0, max_value=4),
    m=st.integers(min_value=-3, max_value=3),
    xi=st.integers(min_value=1, max_value=3),
    B=st.sampled_from([0.0, 1.0, 3.0]),
)
def test_mprime_shift_invariance(n2, consts, kind, n, m, xi, B):
    """Energy depends on m and xi only through m' = m + xi."""
    shifted = energy_model_2d(kind, n2, FieldConfig(B=B, xi=xi), n, m, consts=consts)
    raised = energy_model_2d(
        kind, n2, FieldConfig(B=B, xi=xi - 1), n, m + 1, consts=consts
    )
    assert shifted == raised


@given(
    kind=st.sampled_from(ALL_KINDS),
    n=st.integers(min_value=0, max_value=4),
    xi=st.integers(min_value=0, max_value=3),
)
def test_interchange_at_zero_field(ch, consts, kind, n, xi):
    """With B=0, raising the flux by one relabels the m ladder."""
    e_down = energy_model_2d(kind, ch, FieldConfig(xi=xi + 1), n, -1, consts=consts)
    e_mid = energy_model_2d(kind, ch, FieldConfig(xi=xi), n, 0, consts=consts)
    e_up = energy_model_2d(kind, ch, FieldConfig(xi=xi), n, 1, consts=consts)
    assert e_down == e_mid
    assert energy_model_2d(kind, ch, FieldConfig(xi=xi + 1), n, 0, consts=consts) == e_up


def test_m_degeneracy_iff_no_fields(n2, consts):
    """E(m) = E(-m) exactly when xi = 0 and B = 0, broken otherwise."""
    for kind in ALL_KINDS:
        free = FieldConfig()
        assert energy_model_2d(kind, n2, free, 1, 1, consts=consts) == energy_model_2d(
            kind, n2, free, 1, -1, consts=consts
        )
        with_field = FieldConfig(B=1.0)
        assert energy_model_2d(
            kind, n2, with_field, 1, 1, consts=consts
        ) != energy_model_2d(kind, n2, with_field, 1, -1, consts=consts)
        with_flux = FieldConfig(xi=1)
        assert energy_model_2d(
            kind, n2, with_flux, 1, 1, consts=consts
        ) != energy_model_2d(kind, n2, with_flux, 1, -1, consts=consts)


def test_antisymmetric_part_is_cyclotron_linear(n2, ch, consts):
    """At xi=0 the m-odd part of E is hbar m omega_c, to rounding."""
    for mol in (n2, ch):
        hoc = consts.cyclotron_energy(mol.mu, 2.0)
        for kind in ALL_KINDS:
            for n in range(3):
                for m in (1, 2, 3):
                    field = FieldConfig(B=2.0)
                    plus = energy_model_2d(kind, mol, field, n, m, consts=consts)
                    minus = energy_model_2d(kind, mol, field, n, -m, consts=consts)
                    assert plus - minus == pytest.approx(
                        m * hoc, abs=1e-12 * max(1.0, abs(plus))
                    )


def test_kratzer_equals_mie_at_default_plateau(n2, consts):
    for field in (FieldConfig(), FieldConfig(B=3.0), FieldConfig(xi=2)):
        for n in range(4):
            for m in (0, 1, -1):
                kratzer = energy_model_2d(
                    "generalized-kratzer", n2, field, n, m, consts=consts
                )
                mie = energy_model_2d("mie-coulombic", n2, field, n, m, consts=consts)
                assert kratzer == mie


def test_plateau_shift_moves_kratzer_rigidly(n2, consts):
    base = energy_model_2d(
        "generalized-kratzer", n2, FieldConfig(), 1, 1, consts=consts
    )
    shifted = energy_model_2d(
        "generalized-kratzer", n2, FieldConfig(), 1, 1, consts=consts, eta=-n2.De + 0.5
    )
    assert shifted - base == pytest.approx(0.5, rel=1e-12)


def test_monotonic_in_n(n2, consts):
    """Oscillator-family levels rise with n; Coulomb-family levels rise to 0."""
    for kind in ALL_KINDS:
        energies = [
            energy_model_2d(kind, n2, FieldConfig(), n, 1, consts=consts)
            for n in range(9)
        ]
        assert all(b > a for a, b in zip(energies, energies[1:]))
        if kind in ("generalized-kratzer", "mie-coulombic"):
            assert all(e < 0 for e in energies)


def test_splitting_definition(n2, consts):
    field = FieldConfig(B=2.0)
    direct = energy_model_2d(
        "pseudoharmonic", n2, field, 1, 1, consts=consts
    ) - energy_model_2d("pseudoharmonic", n2, field, 1, -1, consts=consts)
    assert splitting("pseudoharmonic", n2, field, 1, consts=consts) == direct


def test_spectrum_line_bundles(n2, consts):
    line = spectrum_line(
        "pseudoharmonic", n2, FieldConfig(xi=1), LevelIndex(n=1, m=1), consts=consts
    )
    assert line.energy == energy_model_2d(
        "pseudoharmonic", n2, FieldConfig(xi=1), 1, 1, consts=consts
    )
    line3 = spectrum_line(
        "pseudoharmonic", n2, FieldConfig(), LevelIndex(n=1, m=2, dims=3),
        consts=consts,
    )
    assert line3.energy == energy_model_3d("pseudoharmonic", n2, 1, 2, consts=consts)
