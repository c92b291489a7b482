"""Embedded reference values and the B2 report.

Each entry records where its value comes from: "published" values are
transcribed from the published B2 worked example, "derived" values follow
from an independent hand computation noted next to them.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .chains import PolysimplicialComplex
from .contraction import b2_displayed_identities, base_vectors, build_table
from .elliptic import (
    LatticeGroup,
    VirtualWCharacter,
    counting_breakdown,
    ds_upper_bound,
    e_pair,
    e_pair_hom,
    ell_dim_finite,
    ep_pair_measure,
    sign_character,
)
from .finitegroup import TorsionCharacter, character_table
from .rootdata import preset

F = Fraction
ROT_PI = ((-1, 0), (0, -1))
ROT_HALF_PI = ((0, -1), (1, 0))

# published: values of the linear characters on s_1, s_2
B2_LINEAR_CHARACTERS = {"eps0": (1, 1), "eps1": (-1, 1), "eps2": (1, -1), "eps3": (-1, -1)}

# published: elliptic pairing of W_0(B2), rows and columns eps0..eps3, E
B2_CHARACTER_ORDER = ("eps0", "eps1", "eps2", "eps3", "E")
B2_ELLIPTIC_PAIRING = (
    (1, 0, 0, 1, -1),
    (0, 1, 1, 0, -1),
    (0, 1, 1, 0, -1),
    (1, 0, 0, 1, -1),
    (-1, -1, -1, -1, 2),
)

# published: (fixed point, translation, linear part, elliptic measure)
B2_ELLIPTIC_CLASSES = (
    ((F(0), F(0)), (0, 0), ROT_PI, F(1, 8)),
    ((F(0), F(0)), (0, 0), ROT_HALF_PI, F(1, 4)),
    ((F(1, 2), F(1, 2)), (1, 1), ROT_PI, F(1, 8)),
    ((F(1, 2), F(1, 2)), (1, 0), ROT_HALF_PI, F(1, 4)),
    ((F(1, 2), F(0)), (1, 0), ROT_PI, F(1, 4)),
)

# published: dim Ell(W_0) = 2, dim Ell(V_4) = 1, dim Ell(W) = 5 split over t
B2_ELL_DIM_W0 = 2
B2_ELL_DIM_W = 5
B2_ELL_SPLIT = {(F(0), F(0)): 2, (F(1, 2), F(1, 2)): 2, (F(1, 2), F(0)): 1}

# published: base vectors of the contraction for B2
B2_BASE_VECTORS = ((1, 0), (1, 1))

# published: Euler-Poincare values for the sign and trivial characters of A1 (X = Z),
# and the discrete series bounds
A1_EP = {("sgn", "sgn"): 1, ("sgn", "triv"): -1}
DS_UPPER_BOUNDS = {"A1": 2, "B2": 5}


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def b2_tables(L: LatticeGroup | None = None) -> dict[str, str]:
    """The three B2 tables (linear characters, elliptic pairing, elliptic classes) as CSV."""
    L = L or LatticeGroup.from_datum(preset("B2"))
    table = character_table(L.group)
    s1, s2 = L.datum.simple_reflection_matrices()
    linear = [["pi", "pi(s1)", "pi(s2)"]]
    for name in B2_CHARACTER_ORDER[:4]:
        chi = table.by_name(name)
        linear.append([name, str(chi(s1)), str(chi(s2))])
    pairing = [["e_W0", *B2_CHARACTER_ORDER]]
    for a in B2_CHARACTER_ORDER:
        pairing.append([a] + [str(e_pair(L.group, table.by_name(a), table.by_name(b))) for b in B2_CHARACTER_ORDER])
    classes = [["vertex", "conjugacy class", "elliptic measure"]]
    for c in L.elliptic_classes_affine():
        e = ",".join(str(x) for x in c.fixed_point)
        classes.append([f"({e})", str(c.representative), str(c.measure)])
    return {"linear_characters": _csv(linear), "elliptic_pairing": _csv(pairing), "elliptic_classes": _csv(classes)}


def b2_checks() -> list[Check]:
    """Compare every embedded B2/A1 value against a fresh computation."""
    checks = []
    datum = preset("B2")
    L = LatticeGroup.from_datum(datum)
    table = character_table(L.group)
    s1, s2 = datum.simple_reflection_matrices()

    for name, (a, b) in B2_LINEAR_CHARACTERS.items():
        chi = table.by_name(name)
        checks.append(Check(f"character {name} on s1, s2", (chi(s1), chi(s2)) == (a, b)))

    bad = []
    for i, a in enumerate(B2_CHARACTER_ORDER):
        for j, b in enumerate(B2_CHARACTER_ORDER):
            x, y = table.by_name(a), table.by_name(b)
            want = B2_ELLIPTIC_PAIRING[i][j]
            if e_pair(L.group, x, y) != want or e_pair_hom(L.group, x, y) != want:
                bad.append(f"{a},{b}")
    checks.append(Check("elliptic pairing table (25 entries, two routes)", not bad, ";".join(bad)))

    classes = L.elliptic_classes_affine()
    got = [(c.fixed_point, c.representative.translation, c.representative.linear, c.measure) for c in classes]
    checks.append(Check("elliptic classes, fixed points and measures", got == list(B2_ELLIPTIC_CLASSES),
                        "; ".join(str(g) for g in got)))
    checks.append(Check("dim Ell(W_0)", ell_dim_finite(L.group) == B2_ELL_DIM_W0))
    split = {t.coords: n for t, n in counting_breakdown(L)}
    checks.append(Check("dim Ell(W) and its split over t", len(classes) == B2_ELL_DIM_W and split == B2_ELL_SPLIT,
                        str(split)))

    checks.append(Check("base vectors", tuple(base_vectors(datum)) == B2_BASE_VECTORS))
    cplx = PolysimplicialComplex.of(datum)
    gamma = build_table(cplx, "paper")
    ids = b2_displayed_identities(cplx)
    bad = [i for i, (edge, want) in enumerate(ids) if gamma.gamma_chain(edge) != want]
    checks.append(Check("pinned and derived contraction chains", not bad, str(bad)))

    a1 = LatticeGroup.from_datum(preset("A1"))
    sgn = sign_character(a1)
    triv = VirtualWCharacter.induced(a1, TorsionCharacter((0,)), "eps0")
    chars = {"sgn": sgn, "triv": triv}
    for (u, v), want in A1_EP.items():
        got_ep = ep_pair_measure(a1, chars[u], chars[v]).value
        checks.append(Check(f"A1 EP({u},{v})", got_ep == want, str(got_ep)))
    for name, want in DS_UPPER_BOUNDS.items():
        checks.append(Check(f"discrete series bound {name}", ds_upper_bound(preset(name)) == want))
    return checks
