"""Finite subgroups of GL_d(Z): classes, character tables, induction.

Group elements are integer matrices stored as tuples of rows and ordered
lexicographically by their entries; every listing in this module follows
that order so results are reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd, isqrt
from typing import Callable, Iterable, Sequence

from .cyclotomic import Cyclotomic, format_number, root_of_unity_power
from .errors import AlcoveError
from .linalg import det, identity, matmul, matvec, rank, transpose

Matrix = tuple[tuple[int, ...], ...]
Value = "Fraction | Cyclotomic"

DEFAULT_CAP = 10368
SUBGROUP_CAP = 384


def group_cap() -> int:
    """Size bound for group closure; ALCOVE_EP_CAP overrides the default."""
    env = os.environ.get("ALCOVE_EP_CAP")
    return int(env) if env else DEFAULT_CAP


def _mat(m) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def normalize(x) -> Value:
    """Rational values become Fractions; others stay cyclotomic."""
    if isinstance(x, Cyclotomic):
        q = x.to_fraction()
        return x if q is None else q
    return Fraction(x)


def conj(x) -> Value:
    return x.conjugate() if isinstance(x, Cyclotomic) else x


# --------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]
    centralizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


class MatrixGroup:
    """A finite group of invertible integer matrices."""

    def __init__(self, degree: int, elements: Iterable[Sequence[Sequence[int]]],
                 generators: Iterable[Sequence[Sequence[int]]] = ()):
        self.degree = degree
        self.elements: tuple[Matrix, ...] = tuple(sorted({_mat(e) for e in elements}))
        self.index = {e: i for i, e in enumerate(self.elements)}
        gens = [_mat(g) for g in generators]
        self.generators: tuple[Matrix, ...] = tuple(gens) if gens else self.elements
        self.identity = self.index[identity(degree)]

    # -- construction -----------------------------------------------------------

    @classmethod
    def generate(cls, degree: int, generators: Iterable[Sequence[Sequence[int]]],
                 cap: int | None = None) -> "MatrixGroup":
        cap = group_cap() if cap is None else cap
        gens = [_mat(g) for g in generators]
        for g in gens:
            if abs(det(g)) != 1:
                raise AlcoveError("not-invertible", f"generator {g} is not in GL_{degree}(Z)")
        one = identity(degree)
        seen = {one}
        frontier = [one]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = matmul(x, g)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
                        if len(seen) > cap:
                            raise AlcoveError("cap-exceeded", f"group order exceeds {cap}")
            frontier = new
        return cls(degree, seen, gens)

    def subgroup(self, members: Iterable[int]) -> "MatrixGroup":
        """Subgroup from a set of element indices (assumed closed)."""
        return MatrixGroup(self.degree, [self.elements[i] for i in members])

    def subgroup_where(self, predicate: Callable[[Matrix], bool]) -> "MatrixGroup":
        return MatrixGroup(self.degree, [g for g in self.elements if predicate(g)])

    # -- arithmetic -------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.index[matmul(self.elements[i], self.elements[j])]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for i, g in enumerate(self.elements):
            if inv[i]:
                continue
            for j, h in enumerate(self.elements):
                if matmul(g, h) == self.elements[self.identity]:
                    inv[i], inv[j] = j, i
                    break
        return tuple(inv)

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        e = 1
        for i in range(self.order):
            k = self.element_order(i)
            e = e * k // gcd(e, k)
        return e

    def contains(self, other: "MatrixGroup") -> bool:
        return all(g in self.index for g in other.elements)

    # -- conjugacy --------------------------------------------------------------

    @cached_property
    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        """Classes ordered by (size, lexicographically smallest member)."""
        gens = [self.index[g] for g in self.generators]
        inv = self.inverses
        assigned = [False] * self.order
        classes = []
        for i in range(self.order):
            if assigned[i]:
                continue
            orbit = {i}
            frontier = [i]
            while frontier:
                new = []
                for x in frontier:
                    for g in gens:
                        y = self.mul(self.mul(g, x), inv[g])
                        if y not in orbit:
                            orbit.add(y)
                            new.append(y)
                frontier = new
            for x in orbit:
                assigned[x] = True
            members = tuple(sorted(orbit))
            classes.append(ConjugacyClass(members[0], members, self.order // len(members)))
        classes.sort(key=lambda c: (c.size, self.elements[c.representative]))
        return tuple(classes)

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        out = [0] * self.order
        for k, c in enumerate(self.conjugacy_classes):
            for m in c.members:
                out[m] = k
        return tuple(out)

    def class_index(self, g: Sequence[Sequence[int]]) -> int:
        return self.class_of[self.index[_mat(g)]]

    @property
    def num_classes(self) -> int:
        return len(self.conjugacy_classes)

    def centralizer(self, i: int) -> "MatrixGroup":
        g = self.elements[i]
        return self.subgroup_where(lambda h: matmul(g, h) == matmul(h, g))

    def are_conjugate(self, i: int, j: int) -> bool:
        return self.class_of[i] == self.class_of[j]

    @cached_property
    def trivial_character(self) -> "ClassFunction":
        return ClassFunction(self, [Fraction(1)] * self.num_classes)

    def __repr__(self) -> str:
        return f"MatrixGroup(degree={self.degree}, order={self.order})"


def conjugacy_classes(group: MatrixGroup) -> tuple[ConjugacyClass, ...]:
    return group.conjugacy_classes


# --------------------------------------------------------------------------
# class functions


class ClassFunction:
    """A function on the conjugacy classes of a group (values in Q(zeta_m))."""

    def __init__(self, group: MatrixGroup, values: Sequence, name: str = ""):
        if len(values) != group.num_classes:
            raise ValueError("one value per conjugacy class is required")
        self.group = group
        self.values = tuple(normalize(v) for v in values)
        self.name = name

    @classmethod
    def from_function(cls, group: MatrixGroup, f: Callable[[Matrix], object], name: str = "") -> "ClassFunction":
        return cls(group, [f(group.elements[c.representative]) for c in group.conjugacy_classes], name)

    def __call__(self, g: Sequence[Sequence[int]]):
        return self.values[self.group.class_index(g)]

    def at_index(self, i: int):
        return self.values[self.group.class_of[i]]

    @property
    def degree(self):
        return self.values[self.group.class_of[self.group.identity]]

    @property
    def conductor(self) -> int:
        m = 1
        for v in self.values:
            if isinstance(v, Cyclotomic):
                m = m * v.n // gcd(m, v.n)
        return m

    def is_rational(self) -> bool:
        return all(not isinstance(v, Cyclotomic) for v in self.values)

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [conj(v) for v in self.values])

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [other * a for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and all(a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def inner(self, other: "ClassFunction"):
        """<self, other> = |G|^-1 sum_g conj(self(g)) other(g)."""
        total = Fraction(0)
        for c, a, b in zip(self.group.conjugacy_classes, self.values, other.values):
            total = total + c.size * conj(a) * b
        return normalize(total / self.group.order)

    def restrict(self, sub: MatrixGroup) -> "ClassFunction":
        return ClassFunction.from_function(sub, self)

    def __repr__(self) -> str:
        vals = ", ".join(format_number(v) for v in self.values)
        return f"ClassFunction({self.name or '?'}: [{vals}])"


@dataclass
class CharacterTable:
    group: MatrixGroup
    characters: list[ClassFunction]

    @property
    def degrees(self) -> list:
        return [c.degree for c in self.characters]

    def by_name(self, name: str) -> ClassFunction:
        for c in self.characters:
            if c.name == name:
                return c
        if name.isdigit() and int(name) < len(self.characters):
            return self.characters[int(name)]
        raise AlcoveError("unknown-character", f"{name}; known: {[c.name for c in self.characters]}")

    def decompose(self, chi: ClassFunction) -> list:
        return [c.inner(chi) for c in self.characters]

    def check_orthogonality(self) -> bool:
        g = self.group
        for i, a in enumerate(self.characters):
            for j, b in enumerate(self.characters):
                if a.inner(b) != int(i == j):
                    return False
        for k, ck in enumerate(g.conjugacy_classes):
            for l, cl in enumerate(g.conjugacy_classes):
                s = sum((conj(c.values[k]) * c.values[l] for c in self.characters), Fraction(0))
                if normalize(s) != (Fraction(g.order, ck.size) if k == l else 0):
                    return False
        return True


# --------------------------------------------------------------------------
# character tables (Burnside-Dixon)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _choose_prime(exponent: int, order: int) -> int:
    p = exponent + 1
    while not (_is_prime(p) and p > 2 * isqrt(order) + 2):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    factors = {q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)}
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


def _nullspace_mod(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis (as vectors) of the right nullspace of m over F_p."""
    rows = [r[:] for r in m]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-rows[i][f]) % p
        basis.append(v)
    return basis


def _charpoly_mod(m: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial det(xI - m) over F_p, lowest degree first."""
    n = len(m)
    # Faddeev-LeVerrier; valid since p > n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = m (M_{k-1} + c_{n-k+1} I)
        prev = [[(mk[i][j] + (coeffs[n - k + 1] if i == j else 0)) % p for j in range(n)] for i in range(n)]
        mk = [[sum(m[i][l] * prev[l][j] for l in range(n)) % p for j in range(n)] for i in range(n)]
        tr = sum(mk[i][i] for i in range(n)) % p
        coeffs[n - k] = (-tr * pow(k, p - 2, p)) % p
    return coeffs


def _roots_mod(poly: list[int], p: int) -> list[int]:
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


def _split_common_eigenspaces(matrices: list[list[list[int]]], k: int, p: int) -> list[list[int]]:
    """Common one-dimensional eigenspaces of commuting matrices over F_p."""
    spaces = [[[int(i == j) for j in range(k)] for i in range(k)]]  # list of bases (lists of vectors)
    for m in matrices:
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            dim = len(basis)
            # restriction R with m b_j = sum_i R[i][j] b_i
            images = [[sum(m[r][c] * b[c] for c in range(k)) % p for r in range(k)] for b in basis]
            cols = list(range(k))
            bmat = [[basis[j][r] for j in range(dim)] for r in range(k)]  # k x dim
            # pick dim independent rows of bmat
            chosen, work = [], []
            for r in cols:
                cand = work + [bmat[r]]
                if _rank_mod(cand, p) > len(work):
                    work = cand
                    chosen.append(r)
                if len(chosen) == dim:
                    break
            sub = [bmat[r] for r in chosen]
            sub_inv = _inverse_mod(sub, p)
            img_sub = [[images[j][r] for j in range(dim)] for r in chosen]
            rmat = [[sum(sub_inv[i][l] * img_sub[l][j] for l in range(dim)) % p for j in range(dim)]
                    for i in range(dim)]
            for lam in _roots_mod(_charpoly_mod(rmat, p), p):
                shifted = [[(rmat[i][j] - (lam if i == j else 0)) % p for j in range(dim)] for i in range(dim)]
                for coeffs in [_nullspace_mod(shifted, p)]:
                    vecs = [[sum(c[j] * basis[j][r] for j in range(dim)) % p for r in range(k)] for c in coeffs]
                    if vecs:
                        new_spaces.append(vecs)
        spaces = new_spaces
    if any(len(b) != 1 for b in spaces) or len(spaces) != k:
        raise AlcoveError("lift-failure", "class matrices did not split into one-dimensional eigenspaces")
    return [b[0] for b in spaces]


def _rank_mod(rows: list[list[int]], p: int) -> int:
    n = len(rows[0]) if rows else 0
    return n - len(_nullspace_mod(rows, p)) if rows else 0


def _inverse_mod(m: list[list[int]], p: int) -> list[list[int]]:
    n = len(m)
    a = [[x % p for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c])
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], p - 2, p)
        a[c] = [(x * inv) % p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def character_table(group: MatrixGroup) -> CharacterTable:
    """Irreducible characters via the Burnside-Dixon algorithm.

    Works over a prime field F_p with p = 1 mod exp(G), then recovers the
    complex values by counting eigenvalue multiplicities of each element
    (the Dixon lift), so non-rational characters are supported as well.
    """
    cached = getattr(group, "_character_table", None)
    if cached is not None:
        return cached
    classes = group.conjugacy_classes
    k = len(classes)
    n = group.order
    e = group.exponent
    p = _choose_prime(e, n)
    inv = group.inverses
    cls = group.class_of

    # a[i][j][l] = #{x in C_i : x^-1 z_l in C_j}
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for l, c in enumerate(classes):
        z = c.representative
        for x in range(n):
            a[cls[x]][cls[group.mul(inv[x], z)]][l] += 1
    matrices = [[[a[i][j][l] % p for l in range(k)] for j in range(k)] for i in range(k)]
    vectors = _split_common_eigenspaces(matrices, k, p)

    id_class = cls[group.identity]
    inv_class = [cls[inv[c.representative]] for c in classes]
    z = pow(_primitive_root(p), (p - 1) // e, p)
    power_class = [[cls[_power(group, c.representative, l)] for l in range(e)] for c in classes]

    characters = []
    for v in vectors:
        scale = pow(v[id_class], p - 2, p)
        omega = [(x * scale) % p for x in v]
        s = sum(omega[j] * omega[inv_class[j]] * pow(classes[j].size, p - 2, p) for j in range(k)) % p
        target = (n * pow(s, p - 2, p)) % p
        deg = next((d for d in range(1, isqrt(n) + 1) if (d * d - target) % p == 0), None)
        if deg is None:
            raise AlcoveError("lift-failure", "no admissible degree")
        chi_p = [(omega[j] * deg * pow(classes[j].size, p - 2, p)) % p for j in range(k)]
        values = []
        e_inv = pow(e, p - 2, p)
        for j in range(k):
            mult = []
            for s_ in range(e):
                m = sum(chi_p[power_class[j][l]] * pow(z, (-s_ * l) % e, p) for l in range(e)) % p
                m = (m * e_inv) % p
                if m > deg:
                    raise AlcoveError("lift-failure", f"multiplicity {m} exceeds degree {deg}")
                mult.append(m)
            if sum(mult) != deg:
                raise AlcoveError("lift-failure", "multiplicities do not add up to the degree")
            values.append(normalize(Cyclotomic(e, mult)))
        characters.append(ClassFunction(group, values))

    def key(chi):
        trivial = all(v == 1 for v in chi.values)
        return (not trivial, chi.degree, tuple(format_number(v) for v in chi.values))

    characters.sort(key=key)
    for i, chi in enumerate(characters):
        chi.name = "triv" if i == 0 else f"chi{i}"
    table = CharacterTable(group, characters)
    if not table.check_orthogonality():
        raise AlcoveError("lift-failure", "orthogonality relations fail")
    group._character_table = table
    return table


def _power(group: MatrixGroup, i: int, l: int) -> int:
    x = group.identity
    for _ in range(l):
        x = group.mul(x, i)
    return x


def name_weyl_characters(table: CharacterTable, simple_reflections: Sequence[Matrix]) -> None:
    """Name linear characters eps_k with k = sum 2^i [chi(s_{i+1}) = -1].

    The remaining characters are called E when there is exactly one of
    them, otherwise E1, E2, ... in table order.
    """
    linear = [c for c in table.characters if c.degree == 1]
    others = [c for c in table.characters if c.degree != 1]
    index = {}
    for chi in linear:
        k = sum(1 << i for i, s in enumerate(simple_reflections) if chi(s) == -1)
        chi.name = f"eps{k}"
        index[id(chi)] = k
    for j, chi in enumerate(others):
        chi.name = "E" if len(others) == 1 else f"E{j + 1}"
    # linear characters first, by k; then the rest in their previous order
    linear.sort(key=lambda c: index[id(c)])
    table.characters[:] = linear + others


# --------------------------------------------------------------------------
# exterior powers and ellipticity


def exterior_power_character(group: MatrixGroup, n: int) -> ClassFunction:
    """Character of the n-th exterior power of the defining representation."""
    d = group.degree
    if not 0 <= n <= d:
        raise ValueError("exterior power degree out of range")

    def value(g):
        if n == 0:
            return 1
        return sum(det([[g[i][j] for j in idx] for i in idx]) for idx in combinations(range(d), n))

    return ClassFunction.from_function(group, value, f"Lambda^{n}")


def det_one_minus(g: Sequence[Sequence[int]]) -> int:
    d = len(g)
    return int(det([[int(i == j) - g[i][j] for j in range(d)] for i in range(d)]))


def is_elliptic(g: Sequence[Sequence[int]]) -> bool:
    """No nonzero fixed vectors, i.e. det(1 - g) != 0."""
    return det_one_minus(g) != 0


def fixed_space_dimension(group: MatrixGroup) -> int:
    """dim of the vectors fixed by the whole group."""
    d = group.degree
    rows = []
    for g in group.generators:
        rows.extend([[g[i][j] - int(i == j) for j in range(d)] for i in range(d)])
    return d - (rank(rows) if rows else 0)


# --------------------------------------------------------------------------
# subgroups and induction


@dataclass(frozen=True)
class Subgroup:
    group: MatrixGroup
    has_fixed_vectors: bool


def subgroups_up_to_conjugacy(group: MatrixGroup, cap: int = SUBGROUP_CAP) -> list[Subgroup]:
    """All subgroups up to conjugacy, each flagged by E^H != 0."""
    if group.order > cap:
        raise AlcoveError("cap-exceeded", f"subgroup enumeration limited to order {cap}")
    cyclic = set()
    for i in range(group.order):
        members = {group.identity}
        x = i
        while x not in members:
            members.add(x)
            x = group.mul(x, i)
        cyclic.add(frozenset(members))
    cyclic = sorted(cyclic, key=lambda s: (len(s), sorted(s)))

    def join(h: frozenset, c: frozenset) -> frozenset:
        members = set(h)
        gens = list(h | c)
        frontier = list(c - h)
        members |= c
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    for y in (group.mul(x, g), group.mul(g, x)):
                        if y not in members:
                            members.add(y)
                            new.append(y)
            frontier = new
        return frozenset(members)

    found = set(cyclic)
    queue = list(cyclic)
    while queue:
        h = queue.pop()
        for c in cyclic:
            if c <= h:
                continue
            j = join(h, c)
            if j not in found:
                found.add(j)
                queue.append(j)

    inv = group.inverses

    def canonical(s: frozenset) -> tuple:
        best = None
        for g in range(group.order):
            conj_set = tuple(sorted(group.mul(group.mul(g, x), inv[g]) for x in s))
            if best is None or conj_set < best:
                best = conj_set
        return best

    reps = {}
    for s in found:
        reps.setdefault(canonical(s), s)
    out = []
    for key in sorted(reps, key=lambda t: (len(t), t)):
        sub = group.subgroup(key)
        out.append(Subgroup(sub, fixed_space_dimension(sub) > 0))
    return out


def induce_character(group: MatrixGroup, sub: MatrixGroup, chi: ClassFunction) -> ClassFunction:
    """Ind_H^G chi via Ind(g) = |C_G(g)|/|H| * sum_{h in H, h ~ g} chi(h)."""
    if not group.contains(sub):
        raise AlcoveError("not-a-subgroup", "H is not contained in G")
    sums = [Fraction(0)] * group.num_classes
    for h in sub.elements:
        k = group.class_index(h)
        sums[k] = sums[k] + chi(h)
    values = [c.centralizer_order * s / sub.order for c, s in zip(group.conjugacy_classes, sums)]
    return ClassFunction(group, values, f"Ind({chi.name})" if chi.name else "")


# --------------------------------------------------------------------------
# torsion characters of the lattice


@dataclass(frozen=True)
class TorsionCharacter:
    """t in (Q/Z)^d, the character x -> exp(2 pi i t.x) of Z^d."""
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) % 1 for c in self.coords))

    @classmethod
    def parse(cls, text: str) -> "TorsionCharacter":
        try:
            return cls(tuple(Fraction(c.strip()) for c in text.split(",")))
        except (ValueError, ZeroDivisionError) as exc:
            raise AlcoveError("bad-character", f"{text!r} is not a list of rationals") from exc

    @property
    def order(self) -> int:
        m = 1
        for c in self.coords:
            m = m * c.denominator // gcd(m, c.denominator)
        return m

    def __call__(self, x: Sequence[int]) -> Cyclotomic:
        return root_of_unity_power(sum(c * int(v) for c, v in zip(self.coords, x)))

    def act(self, h: Sequence[Sequence[int]]) -> "TorsionCharacter":
        """(h.t)(x) = t(h^-1 x), i.e. coordinates h^-T t."""
        from .linalg import inverse

        hinv_t = transpose(inverse(h))
        return TorsionCharacter(matvec(hinv_t, self.coords))

    def is_trivial(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


def stabilizer_of_character(group: MatrixGroup, t: TorsionCharacter) -> MatrixGroup:
    """Gamma_t = {g : t(g x) = t(x) for all x}, i.e. g^T t = t mod Z^d."""
    def fixes(g):
        moved = matvec(transpose(g), t.coords)
        return all((a - b).denominator == 1 for a, b in zip(moved, t.coords))

    return group.subgroup_where(fixes)
