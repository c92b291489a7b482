from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from alcove.affine import AffineElement
from alcove.elliptic import (
    LatticeGroup,
    VirtualWCharacter,
    coinvariants,
    counting_identity,
    ds_upper_bound,
    e_pair,
    e_pair_hom,
    ell_dim_finite,
    ell_dim_oracle,
    ep_gram_matrix,
    ep_pair,
    inverse_int,
    irreducible_inductions,
    same_class_sets,
    sign_character,
)
from alcove.errors import AlcoveError
from alcove.finitegroup import MatrixGroup, TorsionCharacter, character_table, det_one_minus, is_elliptic
from alcove.golden import B2_CHARACTER_ORDER, B2_ELLIPTIC_PAIRING
from alcove.linalg import is_positive_semidefinite, matmul, matvec
from alcove.rootdata import BasedRootDatum, preset

from conftest import PRESETS

F = Fraction
ROT_PI = ((-1, 0), (0, -1))
ROT_HALF_PI = ((0, -1), (1, 0))


def infinite_dihedral() -> LatticeGroup:
    return LatticeGroup(MatrixGroup.generate(1, [((-1,),)]), name="infinite dihedral")


# --------------------------------------------------------------------------
# finite groups


def test_b2_elliptic_pairing_table(b2_lattice):
    table = character_table(b2_lattice.group)
    for i, a in enumerate(B2_CHARACTER_ORDER):
        for j, b in enumerate(B2_CHARACTER_ORDER):
            x, y = table.by_name(a), table.by_name(b)
            assert e_pair(b2_lattice.group, x, y) == B2_ELLIPTIC_PAIRING[i][j]
            assert e_pair_hom(b2_lattice.group, x, y) == B2_ELLIPTIC_PAIRING[i][j]


@pytest.mark.parametrize("name", PRESETS)
def test_elliptic_dimension_two_ways(lattices, name):
    g = lattices[name].group
    assert ell_dim_finite(g) == ell_dim_oracle(g)


def test_b2_elliptic_dimension(b2_lattice):
    assert ell_dim_finite(b2_lattice.group) == 2


# --------------------------------------------------------------------------
# coinvariants


@pytest.mark.parametrize("g,order", [(ROT_PI, 4), (ROT_HALF_PI, 2), (((-1,),), 2),
                                     (((0, -1), (1, -1)), 3), (((0, -1), (1, 1)), 1)])
def test_coinvariant_orders(g, order):
    co = coinvariants(g)
    assert co.order == order == abs(det_one_minus(g))
    assert len(co.representatives) == order


def test_coinvariants_of_rotation_by_pi():
    co = coinvariants(ROT_PI)
    assert set(co.representatives) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert co.reduce((3, -2)) == (1, 0)
    assert co.contains_zero_class((2, 4))
    assert not co.contains_zero_class((1, 4))


def test_coinvariants_need_ellipticity():
    with pytest.raises(AlcoveError, match="not-elliptic"):
        coinvariants(((0, 1), (1, 0)))


# --------------------------------------------------------------------------
# elliptic classes of Gamma x| X


def test_trivial_group_has_no_elliptic_classes():
    L = LatticeGroup.trivial(2)
    assert L.elliptic_classes_affine() == []
    assert L.total_measure() == 0  # E^Gamma = E has Euler characteristic 0


def test_infinite_dihedral_group():
    L = infinite_dihedral()
    classes = L.elliptic_classes_affine()
    assert len(classes) == 2
    assert [c.fixed_point for c in classes] == [(0,), (F(1, 2),)]
    assert [c.measure for c in classes] == [F(1, 2), F(1, 2)]
    assert L.total_measure() == 1
    assert counting_identity(L) == (2, 2, True)


def test_b2_classes(b2_lattice):
    classes = b2_lattice.elliptic_classes_affine()
    got = [(c.fixed_point, c.representative.translation, c.representative.linear, c.measure) for c in classes]
    assert got == [
        ((0, 0), (0, 0), ROT_PI, F(1, 8)),
        ((0, 0), (0, 0), ROT_HALF_PI, F(1, 4)),
        ((F(1, 2), F(1, 2)), (1, 1), ROT_PI, F(1, 8)),
        ((F(1, 2), F(1, 2)), (1, 0), ROT_HALF_PI, F(1, 4)),
        ((F(1, 2), 0), (1, 0), ROT_PI, F(1, 4)),
    ]


@pytest.mark.parametrize("name", PRESETS)
@pytest.mark.parametrize("lattice", ["root", "weight"])
def test_class_routes_and_measures_agree(name, lattice):
    L = LatticeGroup.from_datum(preset(name, lattice))
    snf = L.elliptic_classes_affine("snf")
    geo = L.elliptic_classes_affine("geometric")
    assert same_class_sets(L, snf, geo)
    assert L.total_measure() == 1
    for c in snf:
        assert c.measure == L.bookkeeping_measure(c)
    assert counting_identity(L)[2]


def brute_conjugate(L: LatticeGroup, w1: AffineElement, w2: AffineElement) -> bool:
    """Try every h = t_y u with y forced by h p1 = p2 for the fixed points p1, p2."""
    p1, p2 = L.fixed_point(w1), L.fixed_point(w2)
    for u in L.group.elements:
        y = [a - b for a, b in zip(p2, matvec(u, p1))]
        if any(F(c).denominator != 1 for c in y):
            continue
        h = AffineElement(tuple(int(c) for c in y), u)
        if h * w1 * h.inverse() == w2:
            return True
    return False


@pytest.mark.parametrize("name", ["B2", "A2", "G2"])
def test_conjugacy_against_brute_force(name):
    L = LatticeGroup.from_datum(preset(name))
    rng = random.Random(5)
    elliptic = [g for g in L.group.elements if is_elliptic(g)]
    samples = [AffineElement(tuple(rng.randint(-2, 2) for _ in range(L.d)), rng.choice(elliptic))
               for _ in range(12)]
    for w1, w2 in itertools.combinations(samples, 2):
        assert L.is_conjugate_affine(w1, w2) == brute_conjugate(L, w1, w2)


def test_b2_conjugacy_examples(b2_lattice):
    L = b2_lattice
    a = AffineElement((0, 0), ROT_PI)
    assert L.is_conjugate_affine(a, AffineElement((2, 0), ROT_PI))
    assert not L.is_conjugate_affine(a, AffineElement((1, 0), ROT_PI))
    assert L.is_conjugate_affine(AffineElement((1, 0), ROT_PI), AffineElement((0, 1), ROT_PI))
    assert not L.is_conjugate_affine(a, AffineElement((0, 0), ROT_HALF_PI))
    with pytest.raises(AlcoveError, match="not-elliptic"):
        L.is_conjugate_affine(a, AffineElement((0, 0), ((0, 1), (1, 0))))
    assert L.class_of(AffineElement((3, 1), ROT_PI)).fixed_point == (F(1, 2), F(1, 2))


# --------------------------------------------------------------------------
# torsion and induced characters


def test_b2_torsion(b2_lattice):
    pts = [t.coords for t in b2_lattice.torsion_points()]
    assert pts == [(0, 0), (0, F(1, 2)), (F(1, 2), 0), (F(1, 2), F(1, 2))]
    reps = [t.coords for t in b2_lattice.relevant_torsion()]
    assert reps == [(0, 0), (F(1, 2), F(1, 2)), (F(1, 2), 0)]


def test_b2_induced_character_values(b2_lattice):
    L = b2_lattice
    t = TorsionCharacter((F(1, 2), 0))
    triv = L.stabilizer(t).trivial_character
    assert L.stabilizer(t).order == 4
    assert L.ind_char_value(t, triv, AffineElement((0, 0), ROT_PI)) == 2
    assert L.ind_char_value(t, triv, AffineElement((1, 0), ROT_PI)) == 0
    assert L.ind_char_value(t, triv, AffineElement((0, 0), ((1, 0), (0, 1)))) == 2


def test_induced_character_against_the_definition(b2_lattice):
    """Compare with the trace of the permutation-with-signs matrix of Ind."""
    L = b2_lattice
    t = TorsionCharacter((F(1, 2), 0))
    sub = L.stabilizer(t)
    chi = sub.trivial_character
    reps = L.coset_representatives(t)
    rng = random.Random(2)
    for _ in range(30):
        x = tuple(rng.randint(-3, 3) for _ in range(2))
        g = rng.choice(L.group.elements)
        w = AffineElement(x, g)
        # (t_x g) acts on functions supported on h Gamma_t; the diagonal entries
        # come from cosets with g h Gamma_t = h Gamma_t
        trace = 0
        for h in reps:
            for k in sub.elements:
                if matmul(g, h) == matmul(h, k):
                    hinv = inverse_int(h)
                    trace += t(matvec(hinv, x)) * chi(k)
        assert L.ind_char_value(t, chi, w) == trace


@pytest.mark.parametrize("name", ["A1", "B2", "G2", "A1xA1"])
def test_gram_matrix_of_inductions(lattices, name):
    L = lattices[name]
    chars = irreducible_inductions(L)
    gram = ep_gram_matrix(L, chars)
    assert is_positive_semidefinite(gram)
    for i, j in itertools.product(range(len(chars)), repeat=2):
        v = gram[i][j]
        assert F(v).denominator == 1
        ti, tj = chars[i].terms[0][1], chars[j].terms[0][1]
        if ti != tj:
            assert v == 0


@pytest.mark.parametrize("name", PRESETS)
def test_three_routes_agree(lattices, name):
    L = lattices[name]
    chars = irreducible_inductions(L)
    for a, b in itertools.product(chars, repeat=2):
        m = ep_pair(L, a, b, "measure").value
        assert ep_pair(L, a, b, "hom").value == m
        assert ep_pair(L, a, b, "facets").value == m


def test_facet_route_with_nontrivial_omega():
    L = LatticeGroup.from_datum(preset("A2", "weight"))
    chars = irreducible_inductions(L)
    for a, b in itertools.product(chars, repeat=2):
        assert ep_pair(L, a, b, "facets").value == ep_pair(L, a, b, "measure").value


def test_a1_sign_character():
    L = LatticeGroup.from_datum(preset("A1"))
    sgn = sign_character(L)
    triv = VirtualWCharacter.induced(L, TorsionCharacter((0,)), "eps0")
    assert ep_pair(L, sgn, sgn).value == 1
    assert ep_pair(L, sgn, triv).value == -1
    aff = L.affine
    for w, length in aff.word_distances(6).items():
        assert sgn(w) == (-1) ** length


def test_sign_character_needs_trivial_omega():
    with pytest.raises(AlcoveError, match="nontrivial-omega"):
        sign_character(LatticeGroup.from_datum(preset("A2")))


def test_parser(b2_lattice):
    L = b2_lattice
    v = VirtualWCharacter.parse(L, "2*t=1/2,0;chi=0 + t=0,0;chi=E")
    assert len(v.terms) == 2 and v.terms[0][0] == 2
    assert VirtualWCharacter.parse(L, "").terms == []
    for bad in ("t=0,0", "x*t=0,0;chi=E", "t=0;chi=E", "t=0,0;chi=E;z=1", "t=0,0 chi=E"):
        with pytest.raises(AlcoveError):
            VirtualWCharacter.parse(L, bad)


def test_discrete_series_bounds():
    assert ds_upper_bound(preset("A1")) == 2
    assert ds_upper_bound(preset("B2")) == 5
    gl2 = BasedRootDatum(2, ((1, -1), (-1, 1)), ((1, -1), (-1, 1)), (0,), "GL2")
    assert ds_upper_bound(gl2) == 0
