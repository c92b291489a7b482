from __future__ import annotations

import random
from fractions import Fraction

import pytest

from alcove.affine import AffineElement
from alcove.chains import AUGMENTATION, Chain
from alcove.contraction import (
    b2_displayed_identities,
    b2_pins,
    base_vectors,
    build_table,
    make_config,
    translated_region,
    verify,
)
from alcove.errors import AlcoveError
from alcove.rootdata import BasedRootDatum, preset

from conftest import PRESETS

F = Fraction


def test_b2_base_vectors(b2):
    assert base_vectors(b2) == [(1, 0), (1, 1)]


@pytest.mark.parametrize("name", PRESETS)
@pytest.mark.parametrize("lattice", ["root", "standard", "weight"])
def test_base_vectors_are_minimal_root_lattice_multiples(name, lattice):
    datum = preset(name, lattice)
    betas = base_vectors(datum)
    for i, (beta, w) in enumerate(zip(betas, datum.fundamental_weights)):
        # beta_i is orthogonal to every other simple coroot
        for j, c in enumerate(datum.simple_coroots):
            pairing = sum(a * b for a, b in zip(beta, c))
            assert (pairing > 0) if i == j else (pairing == 0)
        # beta_i = c * omega_i with c the least positive integer landing in Z R_0
        ratio = {F(b) / x for b, x in zip(beta, w) if x}
        assert len(ratio) == 1
        c = ratio.pop()
        assert c.denominator == 1 and c > 0
        assert all(x.denominator == 1 for x in datum.simple_coordinates(beta))
        for k in range(1, int(c)):
            smaller = [k * x for x in w]
            assert not all(y.denominator == 1 for y in datum.simple_coordinates(smaller))


def test_base_vectors_need_semisimple_data():
    gl2 = BasedRootDatum(2, ((1, -1), (-1, 1)), ((1, -1), (-1, 1)), (0,), "GL2")
    with pytest.raises(AlcoveError, match="not-semisimple"):
        base_vectors(gl2)


def test_parallelepipeds(b2):
    from alcove.chains import PolysimplicialComplex

    cfg = make_config(PolysimplicialComplex.of(b2))
    assert cfg.coordinates((2, 1)) == [1, 1]
    assert cfg.in_parallelepiped((F(1, 2), 0))
    assert not cfg.in_parallelepiped((1, 0))
    assert cfg.in_p1((F(3, 2), F(1, 2)))
    assert not cfg.in_p1((F(5, 2), F(3, 2)))  # y = (1, 3/2): both floors are 1
    assert cfg.in_p2((2, 2)) and not cfg.in_p2((3, 0))


def test_augmentation_goes_to_the_origin(b2_pinned, b2_complex):
    g = b2_pinned.gamma(AUGMENTATION)
    origin, _ = b2_complex.identify([[(0, 0)]])
    assert g == Chain.of(origin)
    assert b2_complex.boundary(g) == Chain.scalar(1)


def test_pinned_and_derived_b2_identities(b2_pinned, b2_complex):
    ids = b2_displayed_identities(b2_complex)
    assert len(ids) == 6
    for edge, expected in ids:
        assert b2_pinned.gamma_chain(edge) == expected


def test_pinned_vertex_paths(b2_pinned, b2_complex):
    h = F(1, 2)
    cell, _ = b2_complex.identify([[(F(3, 2), h)]])
    path = b2_complex.chain_from_tuples([(1, ((0, 0), (h, h))), (1, ((h, h), (1, h))), (1, ((1, h), (F(3, 2), h)))])
    assert b2_pinned.gamma(cell) == path


def test_pins_are_checked(b2_complex):
    pins = b2_pins(b2_complex)
    cell = next(c for c in pins if c.dim == 1)
    bad = dict(pins)
    bad[cell] = pins[cell] * 2
    with pytest.raises(AlcoveError, match="pin-invalid"):
        build_table(b2_complex, bad)
    far, _ = b2_complex.identify([[(5, 0)]])
    with pytest.raises(AlcoveError, match="pin-invalid"):
        build_table(b2_complex, {**pins, far: Chain(1)})
    with pytest.raises(AlcoveError, match="unknown-pins"):
        build_table(b2_complex, "folklore")


def test_pins_only_exist_for_b2(complexes):
    with pytest.raises(AlcoveError, match="pin-invalid"):
        b2_pins(complexes["A2"])


@pytest.mark.parametrize("pins", ["paper", None])
def test_b2_contraction_on_a_small_region(b2_complex, pins):
    table = build_table(b2_complex, pins)
    report = verify(table, translated_region(b2_complex, [2, 2]))
    assert report.ok, report.failures[:3]
    assert report.cells_checked > 100


@pytest.mark.parametrize("name", ["A1", "A1xA1", "A2", "G2"])
def test_other_presets_on_a_small_region(complexes, name):
    cplx = complexes[name]
    table = build_table(cplx)
    report = verify(table, translated_region(cplx, [2] * cplx.datum.num_simple))
    assert report.ok, report.failures[:3]


def test_max_coefficient_stabilizes(b2_complex):
    table = build_table(b2_complex, "paper")
    small = verify(table, translated_region(b2_complex, [2, 2]), equivariance=False)
    large = verify(table, translated_region(b2_complex, [3, 3]), equivariance=False)
    assert small.max_coeff == large.max_coeff == table.base_max()


def test_random_equivariance_samples(b2_pinned, b2_complex):
    rng = random.Random(11)
    reg = translated_region(b2_complex, [3, 3])
    cells = [c for cs in b2_complex.all_cells_in(reg).values() for c in cs]
    w0 = [AffineElement.pure_linear(u) for u in b2_complex.group.W0.elements]
    for _ in range(200):
        cell = rng.choice(cells)
        w = rng.choice(w0)
        moved, sign = b2_complex.act_cell(w, cell)
        assert b2_pinned.gamma(moved) * sign == b2_complex.act(w, b2_pinned.gamma(cell))


def test_translation_shadow_on_long_strips(b2_pinned, b2_complex):
    # gamma of the vertical edge at x = m + 1/2 is the strip of that length
    from alcove.contraction import _b2_strip

    for twice in (3, 5, 7, 9):
        length = F(twice, 2)
        cell, sign = b2_complex.identify([[(length, 0), (length, F(1, 2))]])
        strip = b2_complex.chain_from_tuples((1, t) for t in _b2_strip(length))
        assert b2_pinned.gamma(cell) * sign == strip


def test_table_serializes(b2_pinned):
    rows = b2_pinned.to_json()
    assert len(rows) == len(b2_pinned.base)
    assert all("gamma" in r and "cell" in r for r in rows)
