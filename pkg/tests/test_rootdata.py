from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcove.errors import AlcoveError
from alcove.finitegroup import MatrixGroup
from alcove.linalg import dot
from alcove.rootdata import (
    LATTICES,
    BasedRootDatum,
    chamber_face,
    chamber_position,
    from_cartan,
    is_dominant,
    preset,
    validate,
)

PRESETS = ("A1", "A1xA1", "A2", "B2", "G2")
# classical counts: number of roots and |W_0|
CLASSICAL = {"A1": (2, 2), "A1xA1": (4, 4), "A2": (6, 6), "B2": (8, 8), "G2": (12, 12)}


@pytest.mark.parametrize("name", PRESETS)
@pytest.mark.parametrize("lattice", LATTICES)
def test_presets_are_valid_and_have_classical_sizes(name, lattice):
    datum = preset(name, lattice)
    assert validate(datum).ok
    nroots, order = CLASSICAL[name]
    assert len(datum.roots) == nroots
    assert len(datum.positive_roots) == nroots // 2
    assert MatrixGroup.generate(datum.rank, datum.simple_reflection_matrices()).order == order
    assert datum.is_semisimple


def test_b2_standard_model():
    b2 = preset("B2")
    assert b2.simple_roots == ((1, -1), (0, 1))
    assert b2.simple_coroots == ((1, -1), (0, 2))
    assert set(b2.positive_roots) == {(1, -1), (0, 1), (1, 0), (1, 1)}
    assert b2.cartan_matrix == ((2, -1), (-2, 2))
    assert b2.coroots[b2.highest_coroot_index(0)] == (2, 0)


@pytest.mark.parametrize("name", PRESETS)
def test_cartan_matrix_round_trip(name):
    datum = preset(name, "root")
    a = datum.cartan_matrix
    for i, ai in enumerate(datum.simple_roots):
        for j, cj in enumerate(datum.simple_coroots):
            assert a[j][i] == dot(ai, cj)
    again = from_cartan(a, "root")
    assert again.cartan_matrix == a


def test_fundamental_weights_are_dual_to_simple_coroots():
    for name in PRESETS:
        datum = preset(name)
        for i, w in enumerate(datum.fundamental_weights):
            assert [dot(w, c) for c in datum.simple_coroots] == [int(i == j) for j in range(datum.num_simple)]


def test_json_round_trip(tmp_path):
    datum = preset("G2")
    path = tmp_path / "g2.json"
    path.write_text(json.dumps(datum.to_json()), encoding="utf-8")
    assert BasedRootDatum.load(str(path)) == datum
    with pytest.raises(AlcoveError):
        BasedRootDatum.from_json({"rank": 2})


def test_unknown_presets_raise():
    with pytest.raises(AlcoveError, match="unknown-name"):
        preset("E8")
    with pytest.raises(AlcoveError, match="unknown-lattice"):
        preset("A2", "spin")


def _broken(**changes):
    data = preset("B2").to_json()
    data.update(changes)
    return BasedRootDatum.from_json(data)


@pytest.mark.parametrize("changes,code", [
    ({"coroots": [[1, -1]]}, "length-mismatch"),
    ({"roots": [[1, -1, 0]] + preset("B2").to_json()["roots"][1:]}, "dimension-mismatch"),
    ({"simple": [0, 9]}, "bad-simple-index"),
    ({"simple": [0, 4]}, "simple-not-independent"),
    ({"simple": [2, 3]}, "not-sign-coherent"),
])
def test_validation_codes(changes, code):
    assert code in validate(_broken(**changes))


def test_pairing_and_closure_failures():
    bad = BasedRootDatum(1, [(1,), (-1,)], [(1,), (-1,)], (0,))
    assert "pairing-not-2" in validate(bad)
    lonely = BasedRootDatum(2, [(1, 0), (-1, 0), (0, 1)], [(2, 0), (-2, 0), (0, 2)], (0, 2))
    assert "not-closed-under-reflection" in validate(lonely)
    nonreduced = BasedRootDatum(1, [(1,), (-1,), (2,), (-2,)], [(2,), (-2,), (1,), (-1,)], (0,))
    assert "not-reduced" in validate(nonreduced)


def test_non_semisimple_datum_is_valid_but_flagged():
    gl2 = BasedRootDatum(2, [(1, -1), (-1, 1)], [(1, -1), (-1, 1)], (0,), "GL2")
    assert validate(gl2).ok
    assert not gl2.is_semisimple


def test_chamber_face_examples():
    b2 = preset("B2")
    assert chamber_face(b2, (1, Fraction(1, 2))).subset == ()
    assert chamber_face(b2, (1, Fraction(1, 2))).interior
    assert chamber_face(b2, (1, 1)).subset == (0,)
    assert chamber_face(b2, (0, 0)).subset == (0, 1)
    with pytest.raises(AlcoveError, match="point-not-dominant"):
        chamber_face(b2, (0, 1))
    assert chamber_position(b2, (1, 1), [0]) == "interior"
    assert chamber_position(b2, (0, 0), [0]) == "boundary"
    assert chamber_position(b2, (1, 0), [0]) == "outside"


@settings(max_examples=200, deadline=None)
@given(st.tuples(st.fractions(0, 5, max_denominator=4), st.fractions(0, 5, max_denominator=4)))
def test_chamber_faces_partition_the_positive_chamber(yz):
    b2 = preset("B2")
    # points sum y_i omega_i with y_i >= 0 are exactly the dominant ones
    w1, w2 = b2.fundamental_weights
    p = tuple(yz[0] * a + yz[1] * b for a, b in zip(w1, w2))
    assert is_dominant(b2, p)
    face = chamber_face(b2, p)
    assert set(face.subset) == {i for i, y in enumerate(yz) if y == 0}
    assert [chamber_position(b2, p, s) for s in ((), (0,), (1,), (0, 1))].count("interior") == 1
