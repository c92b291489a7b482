"""The polysimplicial complex of alcoves and its augmented chain complex.

A polysimplex is stored by its fundamental facet type together with the
ordered vertex tuple of each simplex factor. Orientations come from the
fundamental facets (vertices sorted lexicographically) and are carried
along by W^aff, so two records are equal exactly when they describe the
same oriented cell.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import ceil, floor
from typing import Iterable, Iterator, Mapping, Sequence

from .affine import (AffineElement, AffineWeylGroup, FactorTuple, factor_barycenter,
                     product_vertices)
from .errors import AlcoveError
from .linalg import dot, sparse_rank
from .rootdata import Point, point


@dataclass(frozen=True, order=True)
class Polysimplex:
    facet: int
    factors: tuple[FactorTuple, ...]

    @property
    def dim(self) -> int:
        if self.facet < 0:
            return -1
        return sum(len(f) - 1 for f in self.factors)

    @property
    def vertices(self) -> tuple[Point, ...]:
        return product_vertices(self.factors)

    @property
    def barycenter(self) -> Point:
        return factor_barycenter(self.factors)

    def __str__(self) -> str:
        if self.facet < 0:
            return "[1]"
        parts = []
        for f in self.factors:
            parts.append("[" + ",".join("(" + ",".join(str(c) for c in v) + ")" for v in f) + "]")
        return "x".join(parts)


# the single basis element of C_{-1} = Q
AUGMENTATION = Polysimplex(-1, ())


class Chain:
    """A finitely supported rational combination of polysimplices of one degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Polysimplex, Fraction] | None = None):
        self.degree = degree
        self.terms: dict[Polysimplex, Fraction] = {}
        for cell, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[cell] = c

    @classmethod
    def scalar(cls, c) -> "Chain":
        return cls(-1, {AUGMENTATION: c})

    @classmethod
    def of(cls, cell: Polysimplex, coeff=1) -> "Chain":
        return cls(cell.dim, {cell: coeff})

    def _check(self, other: "Chain") -> None:
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        out = dict(self.terms)
        for cell, c in other.terms.items():
            v = out.get(cell, 0) + c
            if v:
                out[cell] = v
            else:
                out.pop(cell, None)
        return Chain(self.degree if self.terms else other.degree, out)

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __mul__(self, c) -> "Chain":
        return Chain(self.degree, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.terms == other.terms and (self.degree == other.degree or not self.terms)

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Polysimplex, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def support(self) -> list[Polysimplex]:
        return sorted(self.terms)

    def max_coeff(self) -> Fraction:
        return max((abs(v) for v in self.terms.values()), default=Fraction(0))

    def coefficient(self, cell: Polysimplex) -> Fraction:
        return self.terms.get(cell, Fraction(0))

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*{k}" for k, v in self)
        return f"Chain[{self.degree}]({body or '0'})"


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class PolysimplicialComplex:
    """Sigma for a semisimple datum, with boundary, action and regions."""

    def __init__(self, group: AffineWeylGroup):
        self.group = group
        self.datum = group.datum
        self.facets = group.fundamental_facets
        self._identify_cache: dict = {}

    @classmethod
    def of(cls, datum) -> "PolysimplicialComplex":
        return cls(AffineWeylGroup(datum))

    # -- cells -------------------------------------------------------------------

    def fundamental_cell(self, facet_index: int) -> Polysimplex:
        return Polysimplex(facet_index, self.facets[facet_index].factors)

    @property
    def fundamental_alcove(self) -> Polysimplex:
        return self.fundamental_cell(0)

    def cell(self, w: AffineElement, facet_index: int) -> Polysimplex:
        """w . f with the pushed-forward orientation (w in W^aff)."""
        return Polysimplex(facet_index, self.group.act_factors(w, self.facets[facet_index].factors))

    @cached_property
    def _face_table(self) -> dict[tuple, int]:
        """(facet, kept positions per factor) -> facet index of that face."""
        table = {}
        for f in self.facets:
            choices = []
            for fac in f.factors:
                opts = []
                for k in range(1, len(fac) + 1):
                    opts.extend(combinations(range(len(fac)), k))
                choices.append(opts)
            for keep in product(*choices):
                sub = tuple(tuple(fac[i] for i in pos) for fac, pos in zip(f.factors, keep))
                table[(f.index, keep)] = self.group.facet_by_vertices(sub).index
        return table

    def face(self, cell: Polysimplex, keep: Sequence[Sequence[int]]) -> Polysimplex:
        keep = tuple(tuple(k) for k in keep)
        return Polysimplex(self._face_table[(cell.facet, keep)],
                           tuple(tuple(fac[i] for i in pos) for fac, pos in zip(cell.factors, keep)))

    def faces(self, cell: Polysimplex, dim: int | None = None) -> list[Polysimplex]:
        """All faces (including the cell itself), optionally of a fixed dimension."""
        choices = []
        for fac in cell.factors:
            opts = []
            for k in range(1, len(fac) + 1):
                opts.extend(combinations(range(len(fac)), k))
            choices.append(opts)
        out = []
        for keep in product(*choices):
            if dim is None or sum(len(k) - 1 for k in keep) == dim:
                out.append(self.face(cell, keep))
        return out

    def identify(self, factors: Sequence[Sequence[Sequence]]) -> tuple[Polysimplex, int]:
        """Canonical cell and orientation sign for ordered factor vertex tuples."""
        factors = tuple(tuple(point(v) for v in f) for f in factors)
        hit = self._identify_cache.get(factors)
        if hit is not None:
            return hit
        v, _ = self.group.folding_element(factor_barycenter(factors))
        folded = self.group.act_factors(v, factors)
        facet = self.group.facet_by_vertices(folded)
        canonical = self.group.act_factors(v.inverse(), facet.factors)
        sign = 1
        for given, canon in zip(factors, canonical):
            if set(given) != set(canon):
                raise AlcoveError("not-a-cell", str(factors))
            sign *= _perm_sign([canon.index(x) for x in given])
        result = (Polysimplex(facet.index, canonical), sign)
        self._identify_cache[factors] = result
        return result

    def chain_from_tuples(self, items: Iterable[tuple[object, Sequence]]) -> Chain:
        """Chain from (coefficient, vertex tuple) pairs of a single-factor datum.

        For products pass the list of factor tuples instead of a flat tuple.
        """
        out: Chain | None = None
        for coeff, verts in items:
            factors = verts if len(self.group.components) > 1 else [verts]
            cell, sign = self.identify(factors)
            term = Chain.of(cell, sign * Fraction(coeff))
            out = term if out is None else out + term
        return out if out is not None else Chain(0)

    # -- boundary and action ------------------------------------------------------

    def boundary_cell(self, cell: Polysimplex) -> Chain:
        if cell.dim == 0:
            return Chain.scalar(1)
        if cell.dim < 0:
            raise AlcoveError("bad-degree", "C_{-1} has no boundary")
        terms: dict[Polysimplex, Fraction] = {}
        prefix = 0
        for j, fac in enumerate(cell.factors):
            if len(fac) > 1:
                for i in range(len(fac)):
                    keep = [tuple(range(len(f))) for f in cell.factors]
                    keep[j] = tuple(k for k in range(len(fac)) if k != i)
                    sign = (-1) ** (prefix + i)
                    face = self.face(cell, keep)
                    terms[face] = terms.get(face, 0) + sign
            prefix += len(fac) - 1
        return Chain(cell.dim - 1, terms)

    def boundary(self, chain: Chain) -> Chain:
        if chain.degree < 0:
            raise AlcoveError("bad-degree", "C_{-1} has no boundary")
        out = Chain(chain.degree - 1)
        acc: dict[Polysimplex, Fraction] = {}
        for cell, c in chain.terms.items():
            for face, s in self.boundary_cell(cell).terms.items():
                acc[face] = acc.get(face, 0) + c * s
        out = Chain(chain.degree - 1, acc)
        return out

    def act_cell(self, w: AffineElement, cell: Polysimplex) -> tuple[Polysimplex, int]:
        if cell.facet < 0:
            return cell, 1
        moved = self.group.act_factors(w, cell.factors)
        if self.group.in_affine_subgroup(w):
            return Polysimplex(cell.facet, moved), 1
        return self.identify(moved)

    def act(self, w: AffineElement, chain: Chain) -> Chain:
        acc = {}
        for cell, c in chain.terms.items():
            img, s = self.act_cell(w, cell)
            acc[img] = acc.get(img, 0) + s * c
        return Chain(chain.degree, acc)

    def translate(self, x: Sequence[int], chain: Chain) -> Chain:
        return self.act(AffineElement.pure_translation(x), chain)

    # -- canonical coset representatives -----------------------------------------

    def coset_rep(self, cell: Polysimplex) -> AffineElement:
        """Minimal-length u in W^aff with u . f = cell."""
        g = self.group
        v, _ = g.folding_element(cell.barycenter)
        u = v.inverse()
        walls = self.facets[cell.facet].walls
        while True:
            for i in walls:
                cand = u * g.generators[i]
                if g.length_roots(cand) < g.length_roots(u):
                    u = cand
                    break
            else:
                return u

    def to_json(self, chain: Chain) -> list[dict]:
        rows = []
        for cell, c in chain:
            if cell.facet < 0:
                rows.append({"facet": -1, "coeff": str(c)})
                continue
            u = self.coset_rep(cell)
            rows.append({
                "facet": cell.facet,
                "translation": list(u.translation),
                "linear": [list(r) for r in u.linear],
                "word": list(self.group.reduced_word(u)),
                "vertices": [[[str(x) for x in v] for v in f] for f in cell.factors],
                "coeff": str(c),
            })
        return rows

    def from_json(self, degree: int, rows: Sequence[Mapping]) -> Chain:
        acc = {}
        for row in rows:
            c = Fraction(row["coeff"])
            if row["facet"] < 0:
                acc[AUGMENTATION] = acc.get(AUGMENTATION, 0) + c
                continue
            u = AffineElement(tuple(row["translation"]), tuple(tuple(r) for r in row["linear"]))
            cell = self.cell(u, row["facet"])
            acc[cell] = acc.get(cell, 0) + c
        return Chain(degree, acc)

    # -- regions ------------------------------------------------------------------

    def region(self, items: Iterable = ()) -> "Region":
        """A(K) for cells or points K; empty K gives the closed fundamental alcove."""
        pts = list(self.group.alcove_vertices)
        for item in items:
            if isinstance(item, Polysimplex):
                pts.extend(item.vertices)
            else:
                pts.append(point(item))
        bounds = []
        for c in self.datum.positive_coroots:
            vals = [dot(p, c) for p in pts]
            bounds.append((c, floor(min(vals)), ceil(max(vals))))
        return Region(self, tuple(bounds))

    def alcoves_in(self, region: "Region") -> list[Polysimplex]:
        start = self.fundamental_alcove
        seen = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nb in self.group.alcove_neighbors(cur.factors):
                cell = Polysimplex(0, nb)
                if cell not in seen and region.contains(cell):
                    seen.add(cell)
                    queue.append(cell)
        return sorted(seen, key=_cell_order)

    def cells_in(self, region: "Region", dim: int) -> list[Polysimplex]:
        found = set()
        for alc in self.alcoves_in(region):
            found.update(self.faces(alc, dim))
        return sorted(found, key=_cell_order)

    def all_cells_in(self, region: "Region") -> dict[int, list[Polysimplex]]:
        alcs = self.alcoves_in(region)
        out: dict[int, set] = {}
        for alc in alcs:
            for f in self.faces(alc):
                out.setdefault(f.dim, set()).add(f)
        return {n: sorted(s, key=_cell_order) for n, s in sorted(out.items())}


def _cell_order(cell: Polysimplex):
    return (cell.barycenter, cell.facet)


@dataclass(frozen=True)
class Region:
    """Integer bounds m <= <x, a^vee> <= M for every positive coroot a^vee."""
    complex: PolysimplicialComplex
    bounds: tuple[tuple[tuple[int, ...], int, int], ...]

    def contains_point(self, p: Sequence) -> bool:
        return all(m <= dot(p, c) <= M for c, m, M in self.bounds)

    def contains(self, cell: Polysimplex) -> bool:
        return all(self.contains_point(v) for v in cell.vertices)

    def cells(self, dim: int) -> list[Polysimplex]:
        return self.complex.cells_in(self, dim)

    def alcoves(self) -> list[Polysimplex]:
        return self.complex.alcoves_in(self)

    def interval(self, coroot: Sequence[int]) -> tuple[int, int]:
        for c, m, M in self.bounds:
            if c == tuple(coroot):
                return m, M
        raise KeyError(coroot)

    def to_json(self) -> list[dict]:
        return [{"coroot": list(c), "min": m, "max": M} for c, m, M in self.bounds]


def region(cplx: PolysimplicialComplex, items: Iterable = ()) -> Region:
    return cplx.region(items)


def contains(reg: Region, cell: Polysimplex) -> bool:
    return reg.contains(cell)


def enumerate_cells(reg: Region, dim: int) -> list[Polysimplex]:
    return reg.cells(dim)


def boundary(cplx: PolysimplicialComplex, chain: Chain) -> Chain:
    return cplx.boundary(chain)


def act(cplx: PolysimplicialComplex, w: AffineElement, chain: Chain) -> Chain:
    return cplx.act(w, chain)


# --------------------------------------------------------------------------
# checks


def augmented_homology(cplx: PolysimplicialComplex, reg: Region) -> dict[int, int]:
    """Dimensions of the augmented homology of the subcomplex on a region."""
    cells = cplx.all_cells_in(reg)
    top = max(cells)
    dims = {-1: 1, **{n: len(c) for n, c in cells.items()}}
    ranks = {}
    for n in range(0, top + 1):
        rows = []
        for cell in cells.get(n, []):
            rows.append(cplx.boundary_cell(cell).terms)
        ranks[n] = sparse_rank(rows)
    ranks[top + 1] = 0
    ranks[-1] = 0
    return {n: dims[n] - ranks[n] - ranks[n + 1] for n in range(-1, top + 1)}


def check_boundary_squared(cplx: PolysimplicialComplex, reg: Region) -> tuple[int, list]:
    """(cells checked, failures) for d o d = 0 on every cell of a region."""
    failures = []
    count = 0
    for n, cells in cplx.all_cells_in(reg).items():
        for cell in cells:
            count += 1
            b = cplx.boundary_cell(cell)
            if b.degree >= 0 and cplx.boundary(b):
                failures.append(str(cell))
    return count, failures


def verify_region_lemma(cplx: PolysimplicialComplex, max_length: int) -> dict:
    """A(w A_0) is the union of u A_0 over u <=_A w, for l(w) <= max_length."""
    g = cplx.group
    words = g.word_distances(max_length)
    by_length: dict[int, list[AffineElement]] = {}
    for w, l in words.items():
        by_length.setdefault(l, []).append(w)
    failures = []
    for w, l in sorted(words.items(), key=lambda kv: (kv[1], kv[0])):
        alc = cplx.cell(w, 0)
        in_region = {a.factors for a in cplx.region([alc]).alcoves()}
        below = set()
        for k in range(l + 1):
            for u in by_length.get(k, []):
                if g.le_A(u, w):
                    below.add(cplx.cell(u, 0).factors)
        if in_region != below:
            failures.append({"element": str(w), "region_only": len(in_region - below),
                             "order_only": len(below - in_region)})
    return {"checked": len(words), "failures": failures}
