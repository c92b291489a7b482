"""Elliptic representation theory of Gamma and of Gamma x| X.

Characters of Gamma x| X are handled in the form sum_i m_i Ind_{t_i}(chi_i)
with t_i a torsion character of X and chi_i a class function on the
stabilizer Gamma_{t_i}. The Euler-Poincare pairing is evaluated three
ways: against the elliptic measure, as an alternating sum over the
facets of the fundamental alcove, and through the elliptic pairings of
the stabilizers Gamma_t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Sequence

from .affine import AffineElement, AffineWeylGroup, isotropy_in_group
from .chains import PolysimplicialComplex
from .cyclotomic import Cyclotomic, format_number
from .errors import AlcoveError
from .finitegroup import (
    ClassFunction,
    MatrixGroup,
    TorsionCharacter,
    character_table,
    conj,
    det_one_minus,
    exterior_power_character,
    induce_character,
    is_elliptic,
    name_weyl_characters,
    normalize,
    stabilizer_of_character,
    subgroups_up_to_conjugacy,
)
from .linalg import det, identity, inverse, matmul, matvec, rank, smith_normal_form, transpose
from .rootdata import BasedRootDatum, Point


def _int_vec(v) -> tuple[int, ...]:
    return tuple(int(c) for c in v)


# --------------------------------------------------------------------------
# finite groups: the elliptic pairing


def e_pair(group: MatrixGroup, chi: ClassFunction, psi: ClassFunction):
    """sum_g det(1 - g)/|G| conj(chi(g)) psi(g)."""
    total = Fraction(0)
    for c, a, b in zip(group.conjugacy_classes, chi.values, psi.values):
        d = det_one_minus(group.elements[c.representative])
        if d:
            total = total + c.size * d * conj(a) * b
    return normalize(total / group.order)


def e_pair_hom(group: MatrixGroup, chi: ClassFunction, psi: ClassFunction):
    """sum_n (-1)^n dim Hom_G(U (x) Lambda^n E, V)."""
    total = Fraction(0)
    for n in range(group.degree + 1):
        lam = exterior_power_character(group, n)
        total = total + (-1) ** n * (chi * lam).inner(psi)
    return normalize(total)


def ell_dim_finite(group: MatrixGroup) -> int:
    """Number of elliptic conjugacy classes."""
    return sum(1 for c in group.conjugacy_classes if is_elliptic(group.elements[c.representative]))


def ell_dim_oracle(group: MatrixGroup) -> int:
    """#classes minus the rank of the characters induced from subgroups with E^H != 0."""
    table = character_table(group)
    rows = []
    for sub in subgroups_up_to_conjugacy(group):
        if not sub.has_fixed_vectors:
            continue
        for chi in character_table(sub.group).characters:
            rows.append(table.decompose(induce_character(group, sub.group, chi)))
    return group.num_classes - (rank(rows) if rows else 0)


@dataclass
class Coinvariants:
    """X / (1 - g) X with explicit coset representatives."""
    order: int
    representatives: tuple[tuple[int, ...], ...]
    smith: object

    def reduce(self, x: Sequence[int]) -> tuple[int, ...]:
        """The listed representative of x + (1 - g) X."""
        s = self.smith
        y = matvec(s.left, x)
        k = [int(c) % s.diag[i][i] for i, c in enumerate(y)]
        return _int_vec(matvec(s.left_inv, k))

    def contains_zero_class(self, x: Sequence[int]) -> bool:
        s = self.smith
        y = matvec(s.left, x)
        return all(int(c) % s.diag[i][i] == 0 for i, c in enumerate(y))


def coinvariants(g: Sequence[Sequence[int]]) -> Coinvariants:
    d = len(g)
    m = [[int(i == j) - g[i][j] for j in range(d)] for i in range(d)]
    if det(m) == 0:
        raise AlcoveError("not-elliptic", f"{g} has nonzero fixed vectors")
    snf = smith_normal_form(m)
    ranges = [range(snf.diag[i][i]) for i in range(d)]
    reps = sorted(_int_vec(matvec(snf.left_inv, k)) for k in product(*ranges))
    co = Coinvariants(len(reps), (), snf)
    co.representatives = tuple(sorted({co.reduce(x) for x in reps}))
    return co


# --------------------------------------------------------------------------
# the group Gamma x| X


@dataclass
class AffineConjClass:
    representative: AffineElement
    linear_class: int
    fixed_point: Point
    coinvariant_order: int
    orbit_size: int
    stabilizer_order: int
    members_in_stabilizer: int
    measure: Fraction

    def to_json(self) -> dict:
        return {"representative": str(self.representative),
                "translation": list(self.representative.translation),
                "linear": [list(r) for r in self.representative.linear],
                "linear_class": self.linear_class,
                "fixed_point": [str(c) for c in self.fixed_point],
                "coinvariant_order": self.coinvariant_order,
                "stabilizer_order": self.stabilizer_order,
                "measure": str(self.measure)}


class LatticeGroup:
    """A finite group Gamma of integral matrices acting on X = Z^d."""

    def __init__(self, group: MatrixGroup, datum: BasedRootDatum | None = None, name: str = ""):
        self.group = group
        self.d = group.degree
        self.datum = datum
        self.name = name or (datum.name if datum else "")
        self._stabilizers: dict[TorsionCharacter, MatrixGroup] = {}

    @classmethod
    def from_datum(cls, datum: BasedRootDatum) -> "LatticeGroup":
        """W = X x| W_0 with characters of W_0 named eps_k and E."""
        gens = datum.simple_reflection_matrices()
        w0 = MatrixGroup.generate(datum.rank, gens)
        name_weyl_characters(character_table(w0), gens)
        return cls(w0, datum)

    @classmethod
    def trivial(cls, d: int) -> "LatticeGroup":
        return cls(MatrixGroup(d, [identity(d)]), name="trivial")

    @cached_property
    def affine(self) -> AffineWeylGroup | None:
        if self.datum is None or not self.datum.is_semisimple:
            return None
        return AffineWeylGroup(self.datum)

    # -- torsion characters ---------------------------------------------------------

    def stabilizer(self, t: TorsionCharacter) -> MatrixGroup:
        hit = self._stabilizers.get(t)
        if hit is None:
            hit = stabilizer_of_character(self.group, t)
            if hit.order == self.group.order:
                hit = self.group
            self._stabilizers[t] = hit
        return hit

    def character(self, t: TorsionCharacter, name: str) -> ClassFunction:
        """A class function on Gamma_t by table name, index or 'det'."""
        sub = self.stabilizer(t)
        if name == "det":
            return ClassFunction.from_function(sub, lambda g: int(det(g)), "det")
        return character_table(sub).by_name(name)

    def _is_dominant_torsion(self, t: TorsionCharacter) -> bool:
        if self.datum is None:
            return True
        return all(sum(a * c for a, c in zip(alpha, t.coords)) >= 0 for alpha in self.datum.simple_roots)

    def torsion_orbit_rep(self, t: TorsionCharacter) -> TorsionCharacter:
        orbit = {t.act(g) for g in self.group.elements}
        return min(orbit, key=lambda s: (not self._is_dominant_torsion(s), s.coords))

    def torsion_points(self) -> list[TorsionCharacter]:
        """All characters of X trivial on (1-g)X for some elliptic g."""
        found = set()
        for c in self.group.conjugacy_classes:
            g = self.group.elements[c.representative]
            if not is_elliptic(g):
                continue
            # t kills (1-g)X  iff  (1-g)^T t is integral
            mt = transpose([[int(i == j) - g[i][j] for j in range(self.d)] for i in range(self.d)])
            minv = inverse(mt)
            for r in coinvariants(transpose(g)).representatives:
                t = TorsionCharacter(matvec(minv, r))
                found |= {t.act(h) for h in self.group.elements}
        return sorted(found, key=lambda t: (t.order, t.coords))

    def relevant_torsion(self) -> list[TorsionCharacter]:
        """Gamma-orbit representatives of torsion_points."""
        found = {self.torsion_orbit_rep(t) for t in self.torsion_points()}
        return sorted(found, key=lambda t: (t.order, -self.stabilizer(t).order, t.coords))

    def coset_representatives(self, t: TorsionCharacter) -> list[tuple[int, ...]]:
        """Left coset representatives h of Gamma / Gamma_t (as matrices)."""
        sub = self.stabilizer(t)
        seen = set()
        reps = []
        for h in self.group.elements:
            if h in seen:
                continue
            reps.append(h)
            for k in sub.elements:
                seen.add(matmul(h, k))
        return reps

    # -- fixed points ------------------------------------------------------------------

    def fixed_point(self, w: AffineElement) -> Point:
        """The unique fixed point (1 - g)^{-1} x of an elliptic t_x g."""
        g = w.linear
        m = [[int(i == j) - g[i][j] for j in range(self.d)] for i in range(self.d)]
        if det(m) == 0:
            raise AlcoveError("not-elliptic", str(w))
        return tuple(matvec(inverse(m), w.translation))

    def canonical_point(self, p: Sequence) -> Point:
        """Representative of the W-orbit of p in the closed fundamental alcove."""
        aff = self.affine
        if aff is None:
            return tuple(Fraction(c) for c in p)
        _, q = aff.folding_element(p)
        return min(o.act(q) for o in aff.omega)

    def stabilizer_of_point(self, p: Sequence) -> list[AffineElement]:
        """Elements of Gamma x| X fixing p, sorted by (linear part index, translation)."""
        elems = isotropy_in_group(self.group, p)
        return sorted(elems, key=lambda w: (self.group.index[w.linear], w.translation))

    # -- conjugacy ----------------------------------------------------------------------

    def is_conjugate_affine(self, w1: AffineElement, w2: AffineElement) -> bool:
        for w in (w1, w2):
            if not is_elliptic(w.linear):
                raise AlcoveError("not-elliptic", str(w))
        g1, g2 = w1.linear, w2.linear
        if self.group.class_index(g1) != self.group.class_index(g2):
            return False
        co = coinvariants(g2)
        for u in self.group.elements:
            if matmul(matmul(u, g1), inverse_int(u)) != g2:
                continue
            diff = [a - b for a, b in zip(matvec(u, w1.translation), w2.translation)]
            if co.contains_zero_class(diff):
                return True
        return False

    def _make_class(self, w: AffineElement, orbit_size: int) -> AffineConjClass:
        e = self.canonical_point(self.fixed_point(w))
        stab = self.stabilizer_of_point(e)
        members = [s for s in stab if is_elliptic(s.linear) and self.is_conjugate_affine(w, s)]
        rep = members[0]
        cls_idx = self.group.class_index(rep.linear)
        return AffineConjClass(
            representative=rep,
            linear_class=cls_idx,
            fixed_point=e,
            coinvariant_order=abs(det_one_minus(rep.linear)),
            orbit_size=orbit_size,
            stabilizer_order=len(stab),
            members_in_stabilizer=len(members),
            measure=Fraction(len(members), len(stab)),
        )

    @staticmethod
    def _class_key(c: AffineConjClass):
        return (-c.stabilizer_order, c.fixed_point, c.linear_class)

    @cached_property
    def _classes_snf(self) -> list[AffineConjClass]:
        out = []
        for k, c in enumerate(self.group.conjugacy_classes):
            g = self.group.elements[c.representative]
            if not is_elliptic(g):
                continue
            co = coinvariants(g)
            cent = self.group.centralizer(c.representative).elements
            seen = set()
            for x in co.representatives:
                if x in seen:
                    continue
                orbit = {co.reduce(matvec(u, x)) for u in cent}
                seen |= orbit
                out.append(self._make_class(AffineElement(x, g), len(orbit)))
        return sorted(out, key=self._class_key)

    def elliptic_classes_affine(self, method: str = "snf") -> list[AffineConjClass]:
        if method == "snf":
            return list(self._classes_snf)
        if method == "geometric":
            return self._classes_geometric()
        raise AlcoveError("unknown-method", method)

    def _classes_geometric(self) -> list[AffineConjClass]:
        """Elliptic elements fixing facet barycenters of the fundamental alcove, fused."""
        aff = self.affine
        if aff is None:
            if self.datum is not None and not self.datum.is_semisimple:
                return []
            raise AlcoveError("no-alcove", "the geometric route needs a semisimple root datum")
        reps: list[AffineElement] = []
        for f in aff.fundamental_facets:
            for s in self.stabilizer_of_point(f.barycenter):
                if is_elliptic(s.linear) and not any(self.is_conjugate_affine(s, r) for r in reps):
                    reps.append(s)
        out = []
        for r in reps:
            co = coinvariants(r.linear)
            cent = self.group.centralizer(self.group.index[r.linear]).elements
            orbit = {co.reduce(matvec(u, r.translation)) for u in cent}
            out.append(self._make_class(r, len(orbit)))
        return sorted(out, key=self._class_key)

    def class_of(self, w: AffineElement) -> AffineConjClass:
        for c in self._classes_snf:
            if self.is_conjugate_affine(w, c.representative):
                return c
        raise AlcoveError("not-elliptic", str(w))

    # -- measure -------------------------------------------------------------------------

    def bookkeeping_measure(self, c: AffineConjClass) -> Fraction:
        """#cosets (y + (1-g)X)g inside the class, each of measure 1/|Gamma|."""
        size = self.group.conjugacy_classes[c.linear_class].size
        return Fraction(size * c.orbit_size, self.group.order)

    def invariant_euler_characteristic(self) -> Fraction:
        """sum_n (-1)^n dim (Lambda^n E)^Gamma."""
        total = Fraction(0)
        triv = self.group.trivial_character
        for n in range(self.d + 1):
            total += (-1) ** n * Fraction(triv.inner(exterior_power_character(self.group, n)))
        return total

    def total_measure(self) -> Fraction:
        classes = self._classes_snf
        total = sum((c.measure for c in classes), Fraction(0))
        book = sum((self.bookkeeping_measure(c) for c in classes), Fraction(0))
        inv = self.invariant_euler_characteristic()
        if not total == book == inv:
            raise AlcoveError("measure-mismatch", f"stabilizer {total}, cosets {book}, invariants {inv}")
        return total

    # -- characters ------------------------------------------------------------------------

    def ind_char_value(self, t: TorsionCharacter, chi: ClassFunction, w: AffineElement):
        """sum_{h in Gamma/Gamma_t} t(h^-1 x) chi(h^-1 g h), chi zero off Gamma_t."""
        sub = chi.group
        x, g = w.translation, w.linear
        total = Fraction(0)
        for h in self.coset_representatives(t):
            hinv = inverse_int(h)
            inner = matmul(matmul(hinv, g), h)
            if inner not in sub.index:
                continue
            total = total + t(matvec(hinv, x)) * chi(inner)
        return normalize(total)

    def __repr__(self) -> str:
        return f"LatticeGroup({self.name or '?'}, d={self.d}, |Gamma|={self.group.order})"


def inverse_int(m) -> tuple[tuple[int, ...], ...]:
    return tuple(_int_vec(row) for row in inverse(m))


def elliptic_classes_affine(L: LatticeGroup, method: str = "snf") -> list[AffineConjClass]:
    return L.elliptic_classes_affine(method)


def is_conjugate_affine(L: LatticeGroup, w1: AffineElement, w2: AffineElement) -> bool:
    return L.is_conjugate_affine(w1, w2)


def measure(L: LatticeGroup, c: AffineConjClass) -> Fraction:
    return c.measure


def total_measure(L: LatticeGroup) -> Fraction:
    return L.total_measure()


def ind_char_value(L: LatticeGroup, t: TorsionCharacter, chi: ClassFunction, w: AffineElement):
    return L.ind_char_value(t, chi, w)


def same_class_sets(L: LatticeGroup, a: list[AffineConjClass], b: list[AffineConjClass]) -> bool:
    """Bijection between two class lists under conjugacy, with equal measures."""
    if len(a) != len(b):
        return False
    used = set()
    for c in a:
        match = next((i for i, d in enumerate(b) if i not in used
                      and L.is_conjugate_affine(c.representative, d.representative)), None)
        if match is None or b[match].measure != c.measure or b[match].fixed_point != c.fixed_point:
            return False
        used.add(match)
    return True


# --------------------------------------------------------------------------
# virtual characters of Gamma x| X


@dataclass
class VirtualWCharacter:
    """sum_i m_i Ind_{t_i}(chi_i) with chi_i a class function on Gamma_{t_i}."""
    lattice: LatticeGroup
    terms: list[tuple[object, TorsionCharacter, ClassFunction]] = field(default_factory=list)

    @classmethod
    def induced(cls, L: LatticeGroup, t: TorsionCharacter, chi: ClassFunction | str, mult=1) -> "VirtualWCharacter":
        if isinstance(chi, str):
            chi = L.character(t, chi)
        if chi.group is not L.stabilizer(t):
            raise AlcoveError("bad-character", f"class function is not on the stabilizer of {t}")
        return cls(L, [(mult, t, chi)])

    @classmethod
    def parse(cls, L: LatticeGroup, text: str) -> "VirtualWCharacter":
        """Terms "k*t=a,b;chi=name" joined by "+"; k defaults to 1."""
        out = cls(L)
        text = text.strip()
        if not text:
            return out
        for term in text.split("+"):
            term = term.strip()
            mult: object = 1
            head, sep, rest = term.partition("*")
            if sep and not head.strip().startswith("t="):
                try:
                    mult = Fraction(head.strip())
                except ValueError as exc:
                    raise AlcoveError("bad-character", f"bad multiplicity in {term!r}") from exc
                term = rest
            fields = {}
            for part in term.split(";"):
                key, eq, val = part.partition("=")
                if not eq:
                    raise AlcoveError("bad-character", f"expected key=value in {term!r}")
                fields[key.strip()] = val.strip()
            if set(fields) != {"t", "chi"}:
                raise AlcoveError("bad-character", f"need exactly t= and chi= in {term!r}")
            t = TorsionCharacter.parse(fields["t"])
            if len(t.coords) != L.d:
                raise AlcoveError("bad-character", f"t has {len(t.coords)} coordinates, expected {L.d}")
            out = out + cls.induced(L, t, fields["chi"], mult)
        return out

    def __add__(self, other: "VirtualWCharacter") -> "VirtualWCharacter":
        return VirtualWCharacter(self.lattice, self.terms + other.terms)

    def __rmul__(self, c) -> "VirtualWCharacter":
        return VirtualWCharacter(self.lattice, [(c * m, t, chi) for m, t, chi in self.terms])

    def __call__(self, w: AffineElement):
        total = Fraction(0)
        for m, t, chi in self.terms:
            total = total + m * self.lattice.ind_char_value(t, chi, w)
        return normalize(total)

    def __str__(self) -> str:
        return " + ".join(f"{format_number(m)}*t={t};chi={chi.name}" for m, t, chi in self.terms) or "0"


@dataclass
class EPReport:
    value: object
    method: str
    breakdown: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"value": format_number(self.value), "method": self.method,
                "breakdown": [{k: (format_number(v) if not isinstance(v, (str, list, int)) else v)
                               for k, v in row.items()} for row in self.breakdown]}


def ep_pair_measure(L: LatticeGroup, U: VirtualWCharacter, V: VirtualWCharacter) -> EPReport:
    """Integral of conj(chi_U) chi_V against the elliptic measure."""
    total = Fraction(0)
    rows = []
    for c in L.elliptic_classes_affine():
        w = c.representative
        contrib = c.measure * conj(U(w)) * V(w)
        total = total + contrib
        rows.append({"class": str(w), "measure": c.measure, "contribution": normalize(contrib)})
    return EPReport(normalize(total), "measure", rows)


def facet_sign(cplx: PolysimplicialComplex, facet_index: int, w: AffineElement) -> int:
    """Orientation character of the stabilizer of a fundamental facet."""
    cell = cplx.fundamental_cell(facet_index)
    img, sign = cplx.act_cell(w, cell)
    if img != cell:
        raise AlcoveError("not-in-stabilizer", f"{w} moves facet {facet_index}")
    return sign


def ep_pair_facets(L: LatticeGroup, U: VirtualWCharacter, V: VirtualWCharacter) -> EPReport:
    """sum_f (-1)^dim f / [Omega:Omega_f] dim Hom_{W_f x| Omega_f}(U (x) eps_f, V)."""
    if L.datum is None or not L.datum.is_semisimple:
        raise AlcoveError("not-semisimple", "the facet formula needs a semisimple root datum")
    cplx = PolysimplicialComplex.of(L.datum)
    aff = cplx.group
    n_omega = len(aff.omega)
    total = Fraction(0)
    rows = []
    for f in aff.fundamental_facets:
        stab = L.stabilizer_of_point(f.barycenter)
        hom = Fraction(0)
        for w in stab:
            hom = hom + conj(U(w) * facet_sign(cplx, f.index, w)) * V(w)
        hom = normalize(hom / len(stab))
        weight = Fraction((-1) ** f.dim * len(f.omega), n_omega)
        total = total + weight * hom
        rows.append({"facet": f.index, "dim": f.dim, "weight": weight, "hom": hom})
    return EPReport(normalize(total), "facets", rows)


def _transport(L: LatticeGroup, h, chi: ClassFunction, target: MatrixGroup) -> ClassFunction:
    """chi on Gamma_{h t} pulled back to Gamma_t: g -> chi(h g h^-1)."""
    hinv = inverse_int(h)
    return ClassFunction.from_function(target, lambda g: chi(matmul(matmul(h, g), hinv)))


def ep_pair_hom(L: LatticeGroup, U: VirtualWCharacter, V: VirtualWCharacter) -> EPReport:
    """Pairs of terms on one Gamma-orbit of t contribute e_{Gamma_t}; others vanish."""
    total = Fraction(0)
    rows = []
    for mu, tu, chu in U.terms:
        for mv, tv, chv in V.terms:
            h = next((g for g in L.group.elements if tu.act(g) == tv), None)
            if h is None:
                continue
            sub = L.stabilizer(tu)
            pulled = _transport(L, h, chv, sub)
            value = e_pair_hom(sub, chu, pulled)
            contrib = conj(mu) * mv * value
            total = total + contrib
            rows.append({"t": str(tu), "u": chu.name, "v": chv.name, "contribution": normalize(contrib)})
    return EPReport(normalize(total), "hom-oracle", rows)


def ep_pair(L: LatticeGroup, U: VirtualWCharacter, V: VirtualWCharacter, method: str = "measure") -> EPReport:
    if method == "measure":
        return ep_pair_measure(L, U, V)
    if method == "facets":
        return ep_pair_facets(L, U, V)
    if method in ("hom", "hom-oracle"):
        return ep_pair_hom(L, U, V)
    raise AlcoveError("unknown-method", method)


# --------------------------------------------------------------------------
# consequences


def isometry_check(L: LatticeGroup, t: TorsionCharacter, chi: ClassFunction, psi: ClassFunction):
    """(EP(Ind_t chi, Ind_t psi), e_{Gamma_t}(chi, psi), equal?)."""
    lhs = ep_pair_measure(L, VirtualWCharacter.induced(L, t, chi), VirtualWCharacter.induced(L, t, psi)).value
    rhs = e_pair(L.stabilizer(t), chi, psi)
    return lhs, rhs, lhs == rhs


def counting_identity(L: LatticeGroup):
    """(#elliptic classes of Gamma x| X, sum_t dim Ell(Gamma_t), equal?)."""
    lhs = len(L.elliptic_classes_affine())
    parts = [ell_dim_finite(L.stabilizer(t)) for t in L.relevant_torsion()]
    rhs = sum(parts)
    return lhs, rhs, lhs == rhs


def counting_breakdown(L: LatticeGroup) -> list[tuple[TorsionCharacter, int]]:
    return [(t, ell_dim_finite(L.stabilizer(t))) for t in L.relevant_torsion()]


def ds_upper_bound(datum: BasedRootDatum) -> int:
    """Number of elliptic conjugacy classes of X x| W_0."""
    return len(LatticeGroup.from_datum(datum).elliptic_classes_affine())


def sign_character(L: LatticeGroup) -> VirtualWCharacter:
    """w -> (-1)^{l(w)} as Ind_t(det) with t = rho^vee mod Z."""
    datum = L.datum
    if datum is None or not datum.is_semisimple:
        raise AlcoveError("not-semisimple", "the sign character needs a semisimple root datum")
    if len(L.affine.omega) > 1:
        raise AlcoveError("nontrivial-omega", "length parity is not a character once Omega is nontrivial")
    rho = [Fraction(sum(c[k] for c in datum.positive_coroots), 2) for k in range(datum.rank)]
    return VirtualWCharacter.induced(L, TorsionCharacter(tuple(rho)), "det")


def ep_gram_matrix(L: LatticeGroup, chars: Sequence[VirtualWCharacter]) -> list[list]:
    return [[ep_pair_measure(L, a, b).value for b in chars] for a in chars]


def irreducible_inductions(L: LatticeGroup) -> list[VirtualWCharacter]:
    """Ind_t chi for every relevant torsion orbit t and irreducible chi of Gamma_t."""
    out = []
    for t in L.relevant_torsion():
        for chi in character_table(L.stabilizer(t)).characters:
            out.append(VirtualWCharacter.induced(L, t, chi))
    return out
