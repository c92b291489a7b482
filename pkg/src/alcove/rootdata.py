"""Based root data on X = Y = Z^d with the dot product as pairing."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import AlcoveError
from .linalg import dot, inverse, rank, transpose

IntVec = tuple[int, ...]
Point = tuple[Fraction, ...]

CARTAN = {
    "A1": ((2,),),
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}
LATTICES = ("root", "standard", "weight")
# which Cartan-built lattice plays the role of "standard" when no explicit
# model is given below
_STANDARD = {"A1": "root", "A1xA1": "root", "A2": "weight", "G2": "root"}


def point(coords: Iterable) -> Point:
    """Exact rational point from ints, Fractions or strings like "1/2"."""
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class BasedRootDatum:
    rank: int
    roots: tuple[IntVec, ...]
    coroots: tuple[IntVec, ...]
    simple_indices: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(tuple(int(c) for c in r) for r in self.roots))
        object.__setattr__(self, "coroots", tuple(tuple(int(c) for c in r) for r in self.coroots))
        object.__setattr__(self, "simple_indices", tuple(int(i) for i in self.simple_indices))

    # -- basic data ---------------------------------------------------------

    @staticmethod
    def pairing(x: Sequence, y: Sequence):
        return dot(x, y)

    @property
    def simple_roots(self) -> tuple[IntVec, ...]:
        return tuple(self.roots[i] for i in self.simple_indices)

    @property
    def simple_coroots(self) -> tuple[IntVec, ...]:
        return tuple(self.coroots[i] for i in self.simple_indices)

    @property
    def num_simple(self) -> int:
        return len(self.simple_indices)

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """A[i][j] = <alpha_j, alpha_i^vee>."""
        return tuple(tuple(dot(a, c) for a in self.simple_roots) for c in self.simple_coroots)

    @cached_property
    def is_semisimple(self) -> bool:
        return bool(self.roots) and rank(self.roots) == self.rank

    def coroot_of(self, root: Sequence[int]) -> IntVec:
        return self.coroots[self.roots.index(tuple(root))]

    def root_of_coroot(self, coroot: Sequence[int]) -> IntVec:
        return self.roots[self.coroots.index(tuple(coroot))]

    # -- simple-root coordinates ---------------------------------------------

    def simple_coordinates(self, v: Sequence) -> tuple[Fraction, ...] | None:
        """Coefficients of ``v`` in the simple roots, or None if not in their span."""
        return _express(v, self.simple_roots)

    @cached_property
    def positive_indices(self) -> tuple[int, ...]:
        out = []
        for i, r in enumerate(self.roots):
            c = self.simple_coordinates(r)
            if c is not None and all(x >= 0 for x in c):
                out.append(i)
        return tuple(out)

    @property
    def positive_roots(self) -> tuple[IntVec, ...]:
        return tuple(self.roots[i] for i in self.positive_indices)

    @property
    def positive_coroots(self) -> tuple[IntVec, ...]:
        return tuple(self.coroots[i] for i in self.positive_indices)

    # -- reflections -------------------------------------------------------------

    def reflection_matrix(self, index: int) -> tuple[IntVec, ...]:
        """Matrix of s_alpha (alpha = roots[index]) acting on column vectors of X."""
        a, c = self.roots[index], self.coroots[index]
        return tuple(tuple(int(i == j) - a[i] * c[j] for j in range(self.rank)) for i in range(self.rank))

    def simple_reflection_matrices(self) -> list[tuple[IntVec, ...]]:
        return [self.reflection_matrix(i) for i in self.simple_indices]

    # -- components and chamber geometry -----------------------------------------

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Positions (into the simple-root list) grouped by Dynkin connectivity."""
        n = self.num_simple
        a = self.cartan_matrix
        seen: set[int] = set()
        comps = []
        for start in range(n):
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and (a[i][j] or a[j][i]):
                        seen.add(j)
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def component_of_root(self, index: int) -> int:
        c = self.simple_coordinates(self.roots[index])
        support = {i for i, x in enumerate(c) if x}
        for k, comp in enumerate(self.components):
            if support <= set(comp):
                return k
        raise AlcoveError("not-irreducible-root", str(self.roots[index]))

    @cached_property
    def fundamental_weights(self) -> tuple[Point, ...]:
        """omega_i in the span of the roots with <omega_i, alpha_j^vee> = delta_ij."""
        if not self.num_simple:
            return ()
        # omega_i = sum_l m[i][l] alpha_l with m = (A^T)^-1
        m = inverse(transpose(self.cartan_matrix))
        out = []
        for i in range(self.num_simple):
            w = [Fraction(0)] * self.rank
            for l, root in enumerate(self.simple_roots):
                for k in range(self.rank):
                    w[k] += m[i][l] * root[k]
            out.append(tuple(w))
        return tuple(out)

    def highest_coroot_index(self, component: int) -> int:
        """Root index whose coroot is the highest coroot of the given component."""
        comp = set(self.components[component])
        best, best_height = None, -1
        for i in self.positive_indices:
            c = _express(self.coroots[i], self.simple_coroots)
            support = {j for j, x in enumerate(c) if x}
            if support <= comp:
                h = sum(c)
                if h > best_height:
                    best, best_height = i, h
        return best

    def project_to_component(self, x: Sequence, component: int) -> Point:
        """Component of ``x`` in the span of the roots of one irreducible factor."""
        out = [Fraction(0)] * self.rank
        for i in self.components[component]:
            p = dot(x, self.simple_coroots[i])
            if p:
                for k, w in enumerate(self.fundamental_weights[i]):
                    out[k] += p * w
        return tuple(out)

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"rank": self.rank, "roots": [list(r) for r in self.roots],
                "coroots": [list(c) for c in self.coroots],
                "simple": list(self.simple_indices), "name": self.name}

    @classmethod
    def from_json(cls, data: dict) -> "BasedRootDatum":
        try:
            return cls(int(data["rank"]), data["roots"], data["coroots"], data["simple"], data.get("name", ""))
        except (KeyError, TypeError) as exc:
            raise AlcoveError("bad-datum-file", str(exc)) from exc

    @classmethod
    def load(cls, path: str) -> "BasedRootDatum":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def _express(v: Sequence, basis: Sequence[Sequence]) -> tuple[Fraction, ...] | None:
    """Exact coefficients of v in a linearly independent family, or None."""
    n = len(basis)
    d = len(v)
    # augmented system: rows are coordinates, columns are basis vectors
    m = [[Fraction(basis[j][k]) for j in range(n)] + [Fraction(v[k])] for k in range(d)]
    row = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(row, d) if m[r][col] != 0), None)
        if piv is None:
            return None  # dependent family; callers pass independent ones
        m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        m[row] = [x / p for x in m[row]]
        for r in range(d):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    if any(m[r][n] for r in range(row, d)):
        return None
    return tuple(m[i][n] for i in range(n))


# -- presets -----------------------------------------------------------------


def _close_under_reflections(simple_roots, simple_coroots):
    pairs = {(tuple(a), tuple(c)) for a, c in zip(simple_roots, simple_coroots)}
    pairs |= {(tuple(-x for x in a), tuple(-x for x in c)) for a, c in pairs}
    frontier = list(pairs)
    while frontier:
        new = []
        for a, c in frontier:
            for sa, sc in zip(simple_roots, simple_coroots):
                p = dot(a, sc)
                q = dot(sa, c)
                b = tuple(x - p * y for x, y in zip(a, sa))
                bc = tuple(x - q * y for x, y in zip(c, sc))
                if (b, bc) not in pairs:
                    pairs.add((b, bc))
                    new.append((b, bc))
        frontier = new
    return pairs


def from_simple_system(simple_roots, simple_coroots, name: str = "") -> BasedRootDatum:
    """Datum generated by closing simple (root, coroot) pairs under reflections."""
    pairs = _close_under_reflections(simple_roots, simple_coroots)
    simple_roots = [tuple(a) for a in simple_roots]

    def key(pair):
        c = _express(pair[0], simple_roots)
        return (sum(c), tuple(c))

    positive = sorted((p for p in pairs if all(x >= 0 for x in _express(p[0], simple_roots))), key=key)
    ordered = positive + [(tuple(-x for x in a), tuple(-x for x in c)) for a, c in positive]
    roots = [a for a, _ in ordered]
    coroots = [c for _, c in ordered]
    simple = [roots.index(a) for a in simple_roots]
    return BasedRootDatum(len(simple_roots[0]), roots, coroots, simple, name)


def from_cartan(cartan: Sequence[Sequence[int]], lattice: str = "root", name: str = "") -> BasedRootDatum:
    """Semisimple datum from a Cartan matrix A[i][j] = <alpha_j, alpha_i^vee>.

    ``lattice="root"`` takes X = Z R_0 with the simple roots as basis;
    ``lattice="weight"`` takes X = the weight lattice with the fundamental
    weights as basis.
    """
    n = len(cartan)
    if lattice == "root":
        sroots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        scoroots = [tuple(cartan[i]) for i in range(n)]
    elif lattice == "weight":
        sroots = [tuple(cartan[i][j] for i in range(n)) for j in range(n)]
        scoroots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    else:
        raise AlcoveError("unknown-lattice", lattice)
    return from_simple_system(sroots, scoroots, name)


def _b2_standard() -> BasedRootDatum:
    pos = [(1, -1), (0, 1), (1, 0), (1, 1)]
    pos_co = [(1, -1), (0, 2), (2, 0), (1, 1)]
    roots = pos + [(-a, -b) for a, b in pos]
    coroots = pos_co + [(-a, -b) for a, b in pos_co]
    return BasedRootDatum(2, roots, coroots, (0, 1), "B2")


def preset(name: str, lattice: str = "standard") -> BasedRootDatum:
    """One of the built-in semisimple data A1, A1xA1, A2, B2, G2."""
    if name not in CARTAN:
        raise AlcoveError("unknown-name", name)
    if lattice not in LATTICES:
        raise AlcoveError("unknown-lattice", lattice)
    if lattice == "standard":
        if name == "B2":
            datum = _b2_standard()
        else:
            datum = from_cartan(CARTAN[name], _STANDARD[name], name)
    else:
        datum = from_cartan(CARTAN[name], lattice, f"{name}/{lattice}")
    report = validate(datum)
    assert report.ok, report
    return datum


# -- validation --------------------------------------------------------------


@dataclass
class ValidationReport:
    issues: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    @property
    def codes(self) -> list[str]:
        return sorted({c for c, _ in self.issues})

    def add(self, code: str, detail: str) -> None:
        self.issues.append((code, detail))

    def __contains__(self, code: str) -> bool:
        return any(c == code for c, _ in self.issues)

    def __str__(self) -> str:
        return "\n".join(f"{c}: {d}" for c, d in self.issues) or "ok"


def validate(datum: BasedRootDatum) -> ValidationReport:
    """Check the based root datum axioms; an empty report means valid."""
    rep = ValidationReport()
    d = datum.rank
    if len(datum.roots) != len(datum.coroots):
        rep.add("length-mismatch", f"{len(datum.roots)} roots vs {len(datum.coroots)} coroots")
        return rep
    for v in datum.roots + datum.coroots:
        if len(v) != d:
            rep.add("dimension-mismatch", str(v))
    if not rep.ok:
        return rep
    if len(set(datum.roots)) != len(datum.roots):
        rep.add("duplicate-root", "roots are not distinct")
    if any(not 0 <= i < len(datum.roots) for i in datum.simple_indices):
        rep.add("bad-simple-index", str(datum.simple_indices))
        return rep

    for a, c in zip(datum.roots, datum.coroots):
        if dot(a, c) != 2:
            rep.add("pairing-not-2", f"<{a},{c}> = {dot(a, c)}")

    root_set = set(datum.roots)
    pairs = set(zip(datum.roots, datum.coroots))
    for i in datum.simple_indices:
        sa, sc = datum.roots[i], datum.coroots[i]
        for a, c in zip(datum.roots, datum.coroots):
            b = tuple(x - dot(a, sc) * y for x, y in zip(a, sa))
            if b not in root_set:
                rep.add("not-closed-under-reflection", f"s_{sa}({a}) = {b}")
                continue
            bc = tuple(x - dot(sa, c) * y for x, y in zip(c, sc))
            if (b, bc) not in pairs:
                rep.add("coroots-not-compatible", f"s_{sa} maps ({a},{c}) to ({b},{bc})")

    for a in datum.roots:
        if tuple(2 * x for x in a) in root_set:
            rep.add("not-reduced", f"{a} and 2*{a} are both roots")

    if datum.simple_roots and rank(datum.simple_roots) < len(datum.simple_roots):
        rep.add("simple-not-independent", str(datum.simple_roots))
        return rep
    for a in datum.roots:
        c = datum.simple_coordinates(a)
        if c is None:
            rep.add("not-in-simple-span", str(a))
        elif any(x.denominator != 1 for x in c) or not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            rep.add("not-sign-coherent", f"{a} = {[str(x) for x in c]} in simple roots")
    return rep


# -- chamber geometry --------------------------------------------------------


@dataclass(frozen=True)
class ChamberFace:
    """The face C_I^{++} of the positive chamber containing a point.

    ``subset`` lists positions in the simple-root sequence.
    """
    subset: tuple[int, ...]

    @property
    def interior(self) -> bool:
        """True when the point lies in the open positive chamber."""
        return not self.subset


def chamber_face(datum: BasedRootDatum, p: Sequence) -> ChamberFace:
    p = point(p)
    vals = [dot(p, c) for c in datum.simple_coroots]
    if any(v < 0 for v in vals):
        raise AlcoveError("point-not-dominant", str([str(x) for x in p]))
    return ChamberFace(tuple(i for i, v in enumerate(vals) if v == 0))


def chamber_position(datum: BasedRootDatum, p: Sequence, subset: Iterable[int]) -> str:
    """Where ``p`` sits relative to C_I^+ for the given I.

    Returns "interior" (p in C_I^{++}), "boundary" (p in C_I^+ but not in
    C_I^{++}) or "outside".
    """
    p = point(p)
    subset = set(subset)
    vals = [dot(p, c) for c in datum.simple_coroots]
    if any(v < 0 for v in vals) or any(vals[i] != 0 for i in subset):
        return "outside"
    if all(vals[i] > 0 for i in range(len(vals)) if i not in subset):
        return "interior"
    return "boundary"


def is_dominant(datum: BasedRootDatum, p: Sequence) -> bool:
    return all(dot(p, c) >= 0 for c in datum.simple_coroots)
