from __future__ import annotations

import pytest

from alcove.chains import PolysimplicialComplex
from alcove.contraction import build_table
from alcove.elliptic import LatticeGroup
from alcove.rootdata import preset

PRESETS = ("A1", "A1xA1", "A2", "B2", "G2")


@pytest.fixture(scope="session")
def b2():
    return preset("B2")


@pytest.fixture(scope="session")
def b2_complex(b2):
    return PolysimplicialComplex.of(b2)


@pytest.fixture(scope="session")
def b2_pinned(b2_complex):
    return build_table(b2_complex, "paper")


@pytest.fixture(scope="session")
def b2_lattice(b2):
    return LatticeGroup.from_datum(b2)


@pytest.fixture(scope="session")
def complexes():
    return {name: PolysimplicialComplex.of(preset(name)) for name in PRESETS}


@pytest.fixture(scope="session")
def lattices():
    return {name: LatticeGroup.from_datum(preset(name)) for name in PRESETS}
