"""The extended affine Weyl group W = X x| W_0 and its alcove geometry.

Elements are pairs (x, u) meaning t_x u, acting on E = Q^d by
p -> x + u p. Affine roots (a^vee, k) are the functionals
p -> <p, a^vee> + k. The fundamental alcove is cut out by the simple
affine roots (alpha_i^vee, 0) and, per irreducible factor, (-theta^vee, 1)
with theta^vee the highest coroot of that factor.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import ceil, floor
from typing import Iterable, Sequence

from .errors import AlcoveError
from .finitegroup import Matrix, MatrixGroup
from .linalg import dot, identity, in_lattice, inverse, matmul, matvec, smith_normal_form, transpose
from .rootdata import BasedRootDatum, Point, point

FactorTuple = tuple[Point, ...]


@dataclass(frozen=True, order=True)
class AffineElement:
    """t_x u with x in Z^d and u an integer matrix."""
    translation: tuple[int, ...]
    linear: Matrix

    @classmethod
    def identity(cls, d: int) -> "AffineElement":
        return cls((0,) * d, identity(d))

    @classmethod
    def pure_translation(cls, x: Sequence[int]) -> "AffineElement":
        return cls(tuple(int(c) for c in x), identity(len(x)))

    @classmethod
    def pure_linear(cls, u: Sequence[Sequence[int]]) -> "AffineElement":
        u = tuple(tuple(int(c) for c in row) for row in u)
        return cls((0,) * len(u), u)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        x = tuple(a + b for a, b in zip(self.translation, matvec(self.linear, other.translation)))
        return AffineElement(x, matmul(self.linear, other.linear))

    def inverse(self) -> "AffineElement":
        uinv = tuple(tuple(int(c) for c in row) for row in inverse(self.linear))
        return AffineElement(tuple(-int(c) for c in matvec(uinv, self.translation)), uinv)

    def act(self, p: Sequence) -> Point:
        return tuple(a + b for a, b in zip(self.translation, matvec(self.linear, p)))

    def is_identity(self) -> bool:
        return not any(self.translation) and self.linear == identity(len(self.linear))

    def __str__(self) -> str:
        return f"t{list(self.translation)}*{[list(r) for r in self.linear]}"


@dataclass(frozen=True)
class AffineRoot:
    """The affine functional p -> <p, coroot> + k."""
    coroot: tuple[int, ...]
    k: int

    def __call__(self, p: Sequence):
        return dot(p, self.coroot) + self.k

    def is_positive(self, datum: BasedRootDatum) -> bool:
        if self.k != 0:
            return self.k > 0
        return self.coroot in datum.positive_coroots


def act_point(w: AffineElement, p: Sequence) -> Point:
    return w.act(point(p))


def act_affine_root(w: AffineElement, a: AffineRoot) -> AffineRoot:
    """(w.a)(p) = a(w^-1 p)."""
    uinv_t = transpose(inverse(w.linear))
    beta = tuple(int(c) for c in matvec(uinv_t, a.coroot))
    return AffineRoot(beta, a.k - dot(w.translation, beta))


@dataclass(frozen=True)
class FundamentalFacet:
    """A face of the closed fundamental alcove.

    ``walls`` is the set J of simple affine reflections fixing the facet;
    ``factors`` holds, per irreducible factor, the lexicographically
    sorted vertex tuple that fixes the orientation.
    """
    index: int
    walls: tuple[int, ...]
    dim: int
    factors: tuple[FactorTuple, ...]
    generators: tuple[AffineElement, ...]
    omega: tuple[AffineElement, ...]

    @property
    def vertices(self) -> tuple[Point, ...]:
        return product_vertices(self.factors)

    @property
    def barycenter(self) -> Point:
        return factor_barycenter(self.factors)


def product_vertices(factors: Sequence[FactorTuple]) -> tuple[Point, ...]:
    out = []
    for combo in product(*factors):
        out.append(tuple(sum(c) for c in zip(*combo)))
    return tuple(out)


def factor_barycenter(factors: Sequence[FactorTuple]) -> Point:
    d = len(factors[0][0])
    b = [Fraction(0)] * d
    for f in factors:
        for v in f:
            for i in range(d):
                b[i] += v[i] / len(f)
    return tuple(b)


class AffineWeylGroup:
    """Affine Weyl group data for a semisimple based root datum."""

    def __init__(self, datum: BasedRootDatum):
        if not datum.is_semisimple:
            raise AlcoveError("not-semisimple", f"{datum.name or 'datum'} has a nonzero radical")
        self.datum = datum
        self.d = datum.rank
        self.W0 = MatrixGroup.generate(datum.rank, datum.simple_reflection_matrices())
        self.components = datum.components
        walls: list[AffineRoot] = []
        names: list[str] = []
        wall_component: list[int] = []
        reflecting_roots: list[tuple[int, ...]] = []
        for pos, i in enumerate(datum.simple_indices):
            walls.append(AffineRoot(datum.coroots[i], 0))
            names.append(f"s{pos + 1}")
            reflecting_roots.append(datum.roots[i])
            wall_component.append(next(j for j, c in enumerate(self.components) if pos in c))
        for j in range(len(self.components)):
            h = datum.highest_coroot_index(j)
            walls.append(AffineRoot(tuple(-c for c in datum.coroots[h]), 1))
            names.append("s0" if len(self.components) == 1 else f"s0_{j + 1}")
            reflecting_roots.append(tuple(-c for c in datum.roots[h]))
            wall_component.append(j)
        self.walls = tuple(walls)
        self.names = tuple(names)
        self.wall_component = tuple(wall_component)
        self.generators = tuple(self._reflection(a, r) for a, r in zip(walls, reflecting_roots))
        self._wall_root = tuple(reflecting_roots)
        self.identity = AffineElement.identity(self.d)
        self._positive_coroots = frozenset(datum.positive_coroots)
        self._length_cache: dict[AffineElement, int] = {}

    @staticmethod
    def _reflection(a: AffineRoot, root: Sequence[int]) -> AffineElement:
        # s_a(p) = p - a(p) root
        d = len(root)
        lin = tuple(tuple(int(i == j) - root[i] * a.coroot[j] for j in range(d)) for i in range(d))
        return AffineElement(tuple(-a.k * r for r in root), lin)

    # -- the fundamental alcove ------------------------------------------------

    @cached_property
    def factor_vertices(self) -> tuple[dict[int, Point], ...]:
        """Per component, wall index -> vertex of the alcove factor opposite that wall."""
        datum = self.datum
        zero = (Fraction(0),) * self.d
        out = []
        for j, comp in enumerate(self.components):
            h = datum.highest_coroot_index(j)
            coeffs = _coroot_coefficients(datum, datum.coroots[h])
            verts = {}
            for w, (a, cj) in enumerate(zip(self.walls, self.wall_component)):
                if cj != j:
                    continue
                if a.k == 1:
                    verts[w] = zero
                else:
                    pos = w  # simple walls come first, in simple-root order
                    verts[w] = tuple(x / coeffs[pos] for x in datum.fundamental_weights[pos])
            out.append(verts)
        return tuple(out)

    @cached_property
    def alcove_factors(self) -> tuple[FactorTuple, ...]:
        return tuple(tuple(sorted(f.values())) for f in self.factor_vertices)

    @cached_property
    def alcove_vertices(self) -> tuple[Point, ...]:
        return product_vertices(self.alcove_factors)

    @cached_property
    def alcove_barycenter(self) -> Point:
        return factor_barycenter(self.alcove_factors)

    def in_closed_alcove(self, p: Sequence) -> bool:
        return all(a(p) >= 0 for a in self.walls)

    # -- acting on factor data ---------------------------------------------------

    def component_translation(self, w: AffineElement, j: int) -> Point:
        if len(self.components) == 1:
            return tuple(Fraction(c) for c in w.translation)
        return self.datum.project_to_component(w.translation, j)

    def act_factors(self, w: AffineElement, factors: Sequence[FactorTuple]) -> tuple[FactorTuple, ...]:
        out = []
        for j, f in enumerate(factors):
            x = self.component_translation(w, j)
            out.append(tuple(tuple(a + b for a, b in zip(x, matvec(w.linear, v))) for v in f))
        return tuple(out)

    # -- membership -----------------------------------------------------------------

    def in_affine_subgroup(self, w: AffineElement) -> bool:
        """w in W^aff, i.e. its translation lies in Z R_0."""
        return in_lattice(w.translation, self.datum.simple_roots)

    def element_from_word(self, word: Iterable) -> AffineElement:
        w = self.identity
        for s in word:
            w = w * self.generators[self.wall_index(s)]
        return w

    def wall_index(self, s) -> int:
        if isinstance(s, int):
            return s
        try:
            return self.names.index(s)
        except ValueError:
            raise AlcoveError("unknown-generator", f"{s}; known: {', '.join(self.names)}") from None

    # -- folding into the fundamental alcove ------------------------------------

    def fold(self, p: Sequence) -> tuple[tuple[int, ...], Point]:
        """(word, q) with q = s_word[-1] ... s_word[0] p in the closed alcove."""
        q = point(p)
        word = []
        while True:
            for i, a in enumerate(self.walls):
                if a(q) < 0:
                    q = self.generators[i].act(q)
                    word.append(i)
                    break
            else:
                return tuple(word), q

    def folding_element(self, p: Sequence) -> tuple[AffineElement, Point]:
        """v in W^aff with v p in the closed fundamental alcove."""
        word, q = self.fold(p)
        v = self.identity
        for i in word:
            v = self.generators[i] * v
        return v, q

    # -- lengths ----------------------------------------------------------------------

    def length(self, w: AffineElement, method: str = "roots") -> int:
        if method == "roots":
            return self.length_roots(w)
        if method == "hyperplanes":
            return self.length_hyperplanes(w)
        if method == "gallery":
            return self.length_gallery(w)
        if method == "word":
            return self.length_word(w)
        raise AlcoveError("unknown-method", method)

    def length_roots(self, w: AffineElement) -> int:
        """#{a > 0 : w a < 0}, enumerating k up to max |<x, a^vee>| + 1."""
        hit = self._length_cache.get(w)
        if hit is not None:
            return hit
        datum = self.datum
        positive = self._positive_coroots
        bound = max((abs(dot(w.translation, c)) for c in datum.coroots), default=0) + 1
        uinv_t = transpose(tuple(tuple(int(c) for c in row) for row in inverse(w.linear)))
        count = 0
        for c in datum.coroots:
            beta = tuple(dot(row, c) for row in uinv_t)
            shift = dot(w.translation, beta)
            c_pos = c in positive
            b_pos = beta in positive
            for k in range(0, bound + 1):
                if k == 0 and not c_pos:
                    continue
                k2 = k - shift
                if k2 < 0 or (k2 == 0 and not b_pos):
                    count += 1
        self._length_cache[w] = count
        return count

    def length_hyperplanes(self, w: AffineElement) -> int:
        """Number of hyperplanes H_(a^vee, k) separating A_0 and w A_0."""
        b0 = self.alcove_barycenter
        b1 = w.act(b0)
        count = 0
        for c in self.datum.positive_coroots:
            v0, v1 = dot(b0, c), dot(b1, c)
            lo = floor(min(v0, v1)) - 1
            hi = ceil(max(v0, v1)) + 1
            for k in range(-hi, -lo + 1):
                if (v0 + k) * (v1 + k) < 0:
                    count += 1
        return count

    def alcove_key(self, factors: Sequence[FactorTuple]) -> tuple:
        return tuple(tuple(sorted(f)) for f in factors)

    def alcove_neighbors(self, factors: Sequence[FactorTuple]) -> list[tuple[FactorTuple, ...]]:
        """Alcoves sharing a wall with the given one."""
        out = []
        pos = self.datum.positive_indices
        for j, f in enumerate(factors):
            for drop in range(len(f)):
                rest = [v for i, v in enumerate(f) if i != drop]
                v = f[drop]
                for idx in pos:
                    c = self.datum.coroots[idx]
                    vals = {dot(r, c) for r in rest}
                    if len(vals) == 1 and dot(v, c) not in vals:
                        (val,) = vals
                        if val.denominator != 1:
                            continue
                        root = self.datum.roots[idx]
                        new_v = tuple(a - (dot(v, c) - val) * b for a, b in zip(v, root))
                        nf = list(f)
                        nf[drop] = new_v
                        new = list(factors)
                        new[j] = tuple(nf)
                        out.append(tuple(new))
                        break
        return out

    def alcove_distances(self, max_depth: int, start=None) -> dict:
        """Breadth-first gallery distances from A_0 over alcoves."""
        start = self.alcove_key(start or self.alcove_factors)
        dist = {start: 0}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            if dist[cur] >= max_depth:
                continue
            for nb in self.alcove_neighbors(cur):
                key = self.alcove_key(nb)
                if key not in dist:
                    dist[key] = dist[cur] + 1
                    queue.append(key)
        return dist

    def length_gallery(self, w: AffineElement, max_depth: int = 64) -> int:
        """Length of a minimal gallery from A_0 to w A_0, by search over alcoves."""
        target = self.alcove_key(self.act_factors(w, self.alcove_factors))
        start = self.alcove_key(self.alcove_factors)
        dist = {start: 0}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            if cur == target:
                return dist[cur]
            if dist[cur] >= max_depth:
                continue
            for nb in self.alcove_neighbors(cur):
                key = self.alcove_key(nb)
                if key not in dist:
                    dist[key] = dist[cur] + 1
                    queue.append(key)
        raise AlcoveError("search-exhausted", f"no gallery of length <= {max_depth}")

    def word_distances(self, max_depth: int) -> dict[AffineElement, int]:
        """Breadth-first word lengths in the Cayley graph of W^aff."""
        dist = {self.identity: 0}
        frontier = [self.identity]
        for depth in range(1, max_depth + 1):
            new = []
            for w in frontier:
                for s in self.generators:
                    ws = w * s
                    if ws not in dist:
                        dist[ws] = depth
                        new.append(ws)
            frontier = new
        return dist

    def length_word(self, w: AffineElement, max_depth: int = 64) -> int:
        if not self.in_affine_subgroup(w):
            raise AlcoveError("not-in-Waff", "the word method is defined on W^aff only")
        if w == self.identity:
            return 0
        dist = {self.identity}
        frontier = [self.identity]
        for depth in range(1, max_depth + 1):
            new = []
            for x in frontier:
                for s in self.generators:
                    xs = x * s
                    if xs == w:
                        return depth
                    if xs not in dist:
                        dist.add(xs)
                        new.append(xs)
            frontier = new
        raise AlcoveError("search-exhausted", f"no word of length <= {max_depth}")

    # -- words and galleries --------------------------------------------------------

    def reduced_word(self, w: AffineElement) -> tuple[str, ...]:
        """Lexicographically first reduced word (generators in wall order)."""
        if not self.in_affine_subgroup(w):
            raise AlcoveError("not-in-Waff", str(w))
        b = w.act(self.alcove_barycenter)
        word = []
        while True:
            for i, a in enumerate(self.walls):
                if a(b) < 0:
                    word.append(i)
                    b = self.generators[i].act(b)
                    break
            else:
                break
        assert self.element_from_word(word) == w
        return tuple(self.names[i] for i in word)

    def gallery(self, word: Iterable) -> list[tuple[FactorTuple, ...]]:
        """(s_1 ... s_m A_0) for m = 0..n, as factor vertex tuples."""
        out = [self.alcove_key(self.alcove_factors)]
        w = self.identity
        for s in word:
            w = w * self.generators[self.wall_index(s)]
            out.append(self.alcove_key(self.act_factors(w, self.alcove_factors)))
        return out

    def shares_wall(self, a: Sequence[FactorTuple], b: Sequence[FactorTuple]) -> bool:
        common = sum(len(set(x) & set(y)) for x, y in zip(a, b))
        total = sum(len(x) for x in a)
        differing = sum(1 for x, y in zip(a, b) if set(x) != set(y))
        return differing == 1 and common == total - 1

    def le_A(self, u: AffineElement, w: AffineElement) -> bool:
        """u <=_A w iff l(u) + l(u^-1 w) = l(w)."""
        return self.length_roots(u) + self.length_roots(u.inverse() * w) == self.length_roots(w)

    def element_of_alcove(self, factors: Sequence[FactorTuple]) -> AffineElement:
        """The u in W^aff with u A_0 equal to the given alcove."""
        v, q = self.folding_element(factor_barycenter(factors))
        return v.inverse()

    # -- Omega and facets --------------------------------------------------------------

    @cached_property
    def omega(self) -> tuple[AffineElement, ...]:
        """Length-zero elements: one per coset of X / Z R_0."""
        snf = smith_normal_form(transpose(self.datum.simple_roots))  # d x r, columns = roots
        reps = []
        # y ranges over Z^d / diag Z^d; x = left_inv y
        ranges = []
        for i in range(self.d):
            di = snf.diag[i][i] if i < len(snf.diag[0]) else 0
            if di == 0:
                raise AlcoveError("not-semisimple", "X / Z R_0 is infinite")
            ranges.append(range(di))
        for y in product(*ranges):
            reps.append(tuple(int(c) for c in matvec(snf.left_inv, y)))
        out = set()
        for x in reps:
            t = AffineElement.pure_translation(x)
            v, _ = self.folding_element(t.act(self.alcove_barycenter))
            out.add(v * t)
        return tuple(sorted(out, key=lambda w: (not w.is_identity(), w)))

    @cached_property
    def fundamental_facets(self) -> tuple[FundamentalFacet, ...]:
        comps = range(len(self.components))
        per_comp = []
        for j in comps:
            walls = [w for w in range(len(self.walls)) if self.wall_component[w] == j]
            subsets = []
            for size in range(len(walls)):
                subsets.extend(combinations(walls, size))
            per_comp.append(subsets)
        raw = []
        for choice in product(*per_comp):
            factors = []
            for j, J in zip(comps, choice):
                fv = self.factor_vertices[j]
                factors.append(tuple(sorted(v for w, v in fv.items() if w not in J)))
            J = tuple(sorted(w for part in choice for w in part))
            dim = sum(len(f) - 1 for f in factors)
            raw.append((dim, tuple(factors), J))
        raw.sort(key=lambda t: (-t[0], t[1]))
        out = []
        for idx, (dim, factors, J) in enumerate(raw):
            om = tuple(o for o in self.omega if self._same_cell(self.act_factors(o, factors), factors))
            out.append(FundamentalFacet(idx, J, dim, factors, tuple(self.generators[w] for w in J), om))
        return tuple(out)

    @staticmethod
    def _same_cell(a, b) -> bool:
        return all(set(x) == set(y) for x, y in zip(a, b))

    def facet_by_vertices(self, factors: Sequence[FactorTuple]) -> FundamentalFacet:
        key = tuple(tuple(sorted(f)) for f in factors)
        for f in self.fundamental_facets:
            if f.factors == key:
                return f
        raise AlcoveError("not-a-facet", str(factors))

    # -- isotropy ------------------------------------------------------------------------

    def isotropy(self, p: Sequence) -> tuple[AffineElement, ...]:
        return isotropy_in_group(self.W0, p)


def _coroot_coefficients(datum: BasedRootDatum, coroot: Sequence[int]) -> tuple[Fraction, ...]:
    from .rootdata import _express

    return _express(coroot, datum.simple_coroots)


def isotropy_in_group(group: MatrixGroup, p: Sequence) -> tuple[AffineElement, ...]:
    """{t_x u : x + u p = p, x in Z^d, u in the group}, sorted."""
    p = point(p)
    out = []
    for u in group.elements:
        x = tuple(a - b for a, b in zip(p, matvec(u, p)))
        if all(c.denominator == 1 for c in x):
            out.append(AffineElement(tuple(int(c) for c in x), u))
    return tuple(sorted(out))


def isotropy(datum: BasedRootDatum, p: Sequence) -> tuple[AffineElement, ...]:
    """Stabilizer of p in W = X x| W_0."""
    if not datum.is_semisimple:
        raise AlcoveError("infinite-stabilizer", "translations along the radical fix every point of E")
    return isotropy_in_group(MatrixGroup.generate(datum.rank, datum.simple_reflection_matrices()), p)


# --------------------------------------------------------------------------
# exhaustive checks


@dataclass
class LengthCheck:
    checked: int
    failures: list

    def to_json(self) -> dict:
        return {"checked": self.checked, "failures": self.failures}


def verify_lengths(group: AffineWeylGroup, max_length: int) -> LengthCheck:
    """All four length computations agree on every w with l(w) <= max_length."""
    words = group.word_distances(max_length)
    galleries = group.alcove_distances(max_length)
    failures = []
    for w, lw in sorted(words.items(), key=lambda kv: (kv[1], kv[0])):
        key = group.alcove_key(group.act_factors(w, group.alcove_factors))
        values = {
            "word": lw,
            "gallery": galleries.get(key),
            "roots": group.length_roots(w),
            "hyperplanes": group.length_hyperplanes(w),
        }
        if len(set(values.values())) != 1:
            failures.append({"element": str(w), **values})
    return LengthCheck(len(words), failures)


def count_reduced_words(group: AffineWeylGroup, w: AffineElement) -> int:
    """Number of reduced words, via left descents."""
    memo: dict[AffineElement, int] = {}

    def count(x: AffineElement) -> int:
        if x.is_identity():
            return 1
        if x in memo:
            return memo[x]
        b = x.act(group.alcove_barycenter)
        total = 0
        for i, a in enumerate(group.walls):
            if a(b) < 0:
                total += count(group.generators[i] * x)
        memo[x] = total
        return total

    return count(w)


def count_minimal_galleries(group: AffineWeylGroup, w: AffineElement) -> int:
    """Number of shortest alcove paths from A_0 to w A_0."""
    target = group.alcove_key(group.act_factors(w, group.alcove_factors))
    start = group.alcove_key(group.alcove_factors)
    dist = {start: 0}
    ways = {start: 1}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == target:
            return ways[cur]
        for nb in group.alcove_neighbors(cur):
            key = group.alcove_key(nb)
            if key not in dist:
                dist[key] = dist[cur] + 1
                ways[key] = ways[cur]
                queue.append(key)
            elif dist[key] == dist[cur] + 1:
                ways[key] += ways[cur]
    raise AlcoveError("search-exhausted", "target alcove not reached")
