"""Shared fixtures: packaged constants, registry, and reference tables."""

from importlib import resources

import pytest

from molspec import (
    find_molecule,
    load_constants,
    load_reference_tables,
    load_registry,
)


def packaged(name: str) -> str:
    return str(resources.files("molspec") / "data" / name)


@pytest.fixture(scope="session")
def consts():
    """Physical constants with the calibrated field unit."""
    return load_constants(packaged("constants.ini"))


@pytest.fixture(scope="session")
def registry():
    return load_registry(packaged("registry.ini"))


@pytest.fixture(scope="session")
def tables():
    return load_reference_tables()


@pytest.fixture(scope="session")
def n2(registry):
    return find_molecule(registry, "N2")


@pytest.fixture(scope="session")
def ch(registry):
    return find_molecule(registry, "CH")
