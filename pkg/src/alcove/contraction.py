"""A W_0-equivariant contraction of the augmented chain complex of Sigma.

On dominant cells whose barycenter lies in P_1 the contraction is fixed by
solving d gamma(s) = s - gamma(d s) exactly (or taken from pins); further
out it is propagated by the two translation rules

    gamma(t_{(m+1)b_i} T) = gamma(t_{m b_i} T) + t_{m b_i} gamma(t_{b_i} T - T)
    gamma(t_b T) = gamma(t_{n_k b_k} T) + t_{n_k b_k} gamma(t_{b - n_k b_k} T - T)

and extended to all cells by the finite Weyl group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Iterable, Mapping, Sequence

from .affine import AffineElement
from .chains import AUGMENTATION, Chain, PolysimplicialComplex, Polysimplex, Region, _cell_order
from .errors import AlcoveError
from .linalg import dot, matvec, solve_sparse
from .rootdata import BasedRootDatum


def base_vectors(datum: BasedRootDatum) -> list[tuple[int, ...]]:
    """beta_i: the smallest multiple of omega_i lying in Z R_0."""
    if not datum.is_semisimple:
        raise AlcoveError("not-semisimple", "base vectors need a semisimple datum")
    out = []
    for w in datum.fundamental_weights:
        coeffs = datum.simple_coordinates(w)
        c = 1
        for x in coeffs:
            c = c * x.denominator // _gcd(c, x.denominator)
        out.append(tuple(int(c * x) for x in w))
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass
class ContractionConfig:
    datum: BasedRootDatum
    betas: list[tuple[int, ...]]
    pins: dict[Polysimplex, Chain] = field(default_factory=dict)

    def coordinates(self, p: Sequence) -> list[Fraction]:
        """y with p = sum y_i beta_i."""
        out = []
        for beta, c in zip(self.betas, self.datum.simple_coroots):
            out.append(Fraction(dot(p, c)) / dot(beta, c))
        return out

    def in_parallelepiped(self, p: Sequence) -> bool:
        """p in P_0 = {sum y_i beta_i : 0 <= y_i < 1}."""
        return all(0 <= y < 1 for y in self.coordinates(p))

    def in_p1(self, p: Sequence) -> bool:
        """p in P_1 = P_0 union the translates t_{beta_i} P_0."""
        floors = [floor(y) for y in self.coordinates(p)]
        if any(f < 0 for f in floors):
            return False
        return sum(floors) <= 1 and all(f <= 1 for f in floors)

    def in_p2(self, p: Sequence) -> bool:
        """p in P_2 = 2 * closure(P_0)."""
        return all(0 <= y <= 2 for y in self.coordinates(p))


def make_config(cplx: PolysimplicialComplex, pins: str | Mapping | None = None) -> ContractionConfig:
    cfg = ContractionConfig(cplx.datum, base_vectors(cplx.datum))
    if pins == "paper":
        cfg.pins = b2_pins(cplx)
    elif isinstance(pins, Mapping):
        cfg.pins = dict(pins)
    elif pins not in (None, "none"):
        raise AlcoveError("unknown-pins", str(pins))
    return cfg


@dataclass
class VerifyReport:
    identity_ok: bool
    support_ok: bool
    equivariance_ok: bool
    max_coeff: Fraction
    base_max: Fraction
    cells_checked: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.support_ok and self.equivariance_ok

    def to_json(self) -> dict:
        return {"identity_ok": self.identity_ok, "support_ok": self.support_ok,
                "equivariance_ok": self.equivariance_ok, "max_coeff": str(self.max_coeff),
                "base_max": str(self.base_max), "cells_checked": self.cells_checked,
                "failures": self.failures[:20]}


class ContractionTable:
    """Memoized gamma, built from base values on P_1."""

    def __init__(self, cplx: PolysimplicialComplex, config: ContractionConfig):
        self.cplx = cplx
        self.config = config
        self.datum = cplx.datum
        self.base: dict[Polysimplex, Chain] = {}
        self.memo: dict[Polysimplex, Chain] = {}
        origin = tuple(((Fraction(0),) * self.datum.rank,) for _ in cplx.group.components)
        self.origin_cell, _ = cplx.identify(origin)
        self._built = False
        self._complete_below = -1  # base values are final in degrees below this

    # -- geometry helpers ------------------------------------------------------------

    def is_dominant(self, cell: Polysimplex) -> bool:
        return all(dot(v, c) >= 0 for v in cell.vertices for c in self.datum.simple_coroots)

    def vanishing_simple(self, cell: Polysimplex) -> tuple[int, ...]:
        """Positions i with <v, alpha_i^vee> = 0 on every vertex."""
        return tuple(i for i, c in enumerate(self.datum.simple_coroots)
                     if all(dot(v, c) == 0 for v in cell.vertices))

    def in_face(self, cell: Polysimplex, subset: Iterable[int]) -> bool:
        """cell inside C_I^+ (dominant, and alpha_i^vee vanishes for i in I)."""
        coroots = self.datum.simple_coroots
        subset = set(subset)
        for v in cell.vertices:
            for i, c in enumerate(coroots):
                p = dot(v, c)
                if p < 0 or (i in subset and p != 0):
                    return False
        return True

    def candidates(self, cell: Polysimplex) -> list[Polysimplex]:
        """(n+1)-cells in A(cell) intersected with C_I^+, I as fine as possible."""
        I = self.vanishing_simple(cell)
        reg = self.cplx.region([cell])
        return [c for c in reg.cells(cell.dim + 1) if self.in_face(c, I)]

    # -- building --------------------------------------------------------------------

    def base_cells(self) -> dict[int, list[Polysimplex]]:
        """Dominant cells whose barycenter lies in P_1, by dimension."""
        corners = []
        r = len(self.config.betas)
        for mask in range(1 << r):
            corners.append(tuple(sum(2 * self.config.betas[i][k] for i in range(r) if mask >> i & 1)
                                 for k in range(self.datum.rank)))
        reg = self.cplx.region(corners)
        out = {}
        for n, cells in self.cplx.all_cells_in(reg).items():
            out[n] = [c for c in cells if self.is_dominant(c) and self.config.in_p1(c.barycenter)]
        return out

    def build(self) -> "ContractionTable":
        if self._built:
            return self
        for n, cells in sorted(self.base_cells().items()):
            self._complete_below = n
            for cell in cells:
                self.base[cell] = self._base_value(cell)
        self._complete_below = max(self._complete_below, self.datum.rank + 1)
        unused = [c for c in self.config.pins if c not in self.base]
        if unused:
            raise AlcoveError("pin-invalid", f"pinned cells outside P_1: {[str(c) for c in unused]}")
        self._built = True
        return self

    def _base_value(self, cell: Polysimplex) -> Chain:
        rhs = Chain.of(cell) - self.gamma_chain(self.cplx.boundary_cell(cell))
        if cell in self.config.pins:
            value = self.config.pins[cell]
            if self.cplx.boundary(value) != rhs:
                raise AlcoveError("pin-invalid", f"pinned value of {cell} fails d gamma = 1 - gamma d")
            allowed = set(self.candidates(cell))
            if any(c not in allowed for c in value.terms):
                raise AlcoveError("pin-invalid", f"pinned value of {cell} leaves A(s) or C_I^+")
            return value
        cands = self.candidates(cell)
        if not cands:
            if rhs:
                raise AlcoveError("no-solution", f"nonzero cycle at top degree for {cell}")
            return Chain(cell.dim + 1)
        columns = [self.cplx.boundary_cell(c).terms for c in cands]
        rows = sorted({k for col in columns for k in col} | set(rhs.terms), key=_cell_order)
        sol = solve_sparse(columns, rhs.terms, row_order=rows)
        if sol is None:
            raise AlcoveError("no-solution", f"d gamma = 1 - gamma d has no solution for {cell}")
        return Chain(cell.dim + 1, {c: x for c, x in zip(cands, sol) if x})

    # -- evaluation ----------------------------------------------------------------

    def gamma_chain(self, chain: Chain) -> Chain:
        acc: dict[Polysimplex, Fraction] = {}
        for cell, c in chain.terms.items():
            for k, v in self.gamma(cell).terms.items():
                acc[k] = acc.get(k, 0) + c * v
        return Chain(chain.degree + 1, acc)

    def gamma(self, cell: Polysimplex) -> Chain:
        if cell.facet < 0:
            return Chain.of(self.origin_cell)
        hit = self.memo.get(cell)
        if hit is not None:
            return hit
        if self.is_dominant(cell):
            value = self._gamma_dominant(cell)
        else:
            u = self._fold_linear(cell.barycenter)
            inner = self.gamma(self.cplx.act_cell(u, cell)[0])
            value = self.cplx.act(u.inverse(), inner)
        self.memo[cell] = value
        return value

    def _fold_linear(self, p) -> AffineElement:
        """u in W_0 of minimal length with u p dominant."""
        g = self.cplx.group
        u = g.identity
        q = p
        nsimple = self.datum.num_simple
        while True:
            for i in range(nsimple):
                if dot(q, self.datum.simple_coroots[i]) < 0:
                    s = g.generators[i]
                    q = s.act(q)
                    u = s * u
                    break
            else:
                return u

    def _gamma_dominant(self, cell: Polysimplex) -> Chain:
        if cell in self.base:
            return self.base[cell]
        if cell.dim >= self._complete_below:
            raise AlcoveError("decomposition-failure", f"{cell} needed before the base was built")
        y = self.config.coordinates(cell.barycenter)
        n = [floor(v) for v in y]
        if any(v < 0 for v in n):
            raise AlcoveError("decomposition-failure", str(cell))
        betas = self.config.betas
        beta = self._combo(n)
        tau = self._translate_cell(cell, [-c for c in beta])
        nonzero = [i for i, v in enumerate(n) if v > 0]
        if len(nonzero) == 1:
            (i,) = nonzero
            m = n[i]
            if m < 2:
                raise AlcoveError("decomposition-failure", f"{cell} should be a base cell")
            shift = [(m - 1) * c for c in betas[i]]
            first = self.gamma(self._translate_cell(tau, shift))
            diff = Chain.of(self._translate_cell(tau, betas[i])) - Chain.of(tau)
            second = self.cplx.translate(shift, self.gamma_chain(diff))
            return first + second
        k = max(nonzero)
        outer = [n[k] * c for c in betas[k]]
        rest = [a - b for a, b in zip(beta, outer)]
        first = self.gamma(self._translate_cell(tau, outer))
        diff = Chain.of(self._translate_cell(tau, rest)) - Chain.of(tau)
        second = self.cplx.translate(outer, self.gamma_chain(diff))
        return first + second

    def _combo(self, coeffs: Sequence[int]) -> list[int]:
        out = [0] * self.datum.rank
        for c, b in zip(coeffs, self.config.betas):
            for k in range(self.datum.rank):
                out[k] += c * b[k]
        return out

    def _translate_cell(self, cell: Polysimplex, x: Sequence[int]) -> Polysimplex:
        return self.cplx.act_cell(AffineElement.pure_translation(x), cell)[0]

    # -- statistics ---------------------------------------------------------------

    def base_max(self) -> Fraction:
        """Largest |coefficient| of gamma over dominant cells inside P_2."""
        corners = []
        r = len(self.config.betas)
        for mask in range(1 << r):
            corners.append(tuple(sum(2 * self.config.betas[i][k] for i in range(r) if mask >> i & 1)
                                 for k in range(self.datum.rank)))
        reg = self.cplx.region(corners)
        best = Fraction(0)
        for cells in self.cplx.all_cells_in(reg).values():
            for c in cells:
                if self.is_dominant(c) and all(self.config.in_p2(v) for v in c.vertices):
                    best = max(best, self.gamma(c).max_coeff())
        return best

    def to_json(self) -> list[dict]:
        rows = []
        for cell in sorted(self.base, key=lambda c: (c.dim, _cell_order(c))):
            rows.append({"cell": self.cplx.to_json(Chain.of(cell))[0],
                         "dim": cell.dim,
                         "gamma": self.cplx.to_json(self.base[cell])})
        return rows


def build_table(cplx: PolysimplicialComplex, pins: str | Mapping | None = None) -> ContractionTable:
    return ContractionTable(cplx, make_config(cplx, pins)).build()


def translated_region(cplx: PolysimplicialComplex, coeffs: Sequence[int]) -> Region:
    """region(t_beta A_0) with beta = sum coeffs_i beta_i."""
    betas = base_vectors(cplx.datum)
    x = [sum(c * b[k] for c, b in zip(coeffs, betas)) for k in range(cplx.datum.rank)]
    alc = cplx.cell(AffineElement.pure_translation(x), 0)
    return cplx.region([alc])


def verify(table: ContractionTable, reg: Region, degrees: Iterable[int] | None = None,
           equivariance: bool = True) -> VerifyReport:
    """Check d gamma + gamma d = id, supports and W_0-equivariance on a region."""
    cplx = table.cplx
    cells_by_dim = cplx.all_cells_in(reg)
    top = max(cells_by_dim)
    degrees = list(range(-1, top + 1)) if degrees is None else list(degrees)
    identity_ok = support_ok = equiv_ok = True
    failures = []
    max_coeff = Fraction(0)
    count = 0
    w0 = [AffineElement.pure_linear(u) for u in cplx.group.W0.elements]
    for n in degrees:
        cells = [AUGMENTATION] if n == -1 else cells_by_dim.get(n, [])
        for cell in cells:
            count += 1
            g = table.gamma(cell)
            max_coeff = max(max_coeff, g.max_coeff())
            if n == -1:
                lhs = cplx.boundary(g)
            else:
                lhs = cplx.boundary(g) + table.gamma_chain(cplx.boundary_cell(cell))
            if lhs != Chain.of(cell):
                identity_ok = False
                failures.append({"check": "identity", "cell": str(cell)})
            if n >= 0:
                sreg = cplx.region([cell])
                if any(not sreg.contains(c) for c in g.terms):
                    support_ok = False
                    failures.append({"check": "support", "cell": str(cell)})
                if equivariance:
                    for w in w0:
                        if table.gamma(cplx.act_cell(w, cell)[0]) != cplx.act(w, g):
                            equiv_ok = False
                            failures.append({"check": "equivariance", "cell": str(cell), "w": str(w)})
                            break
    return VerifyReport(identity_ok, support_ok, equiv_ok, max_coeff, table.base_max(), count, failures)


# --------------------------------------------------------------------------
# pinned base values for B2


def _b2_path(a: Fraction, b: Fraction) -> list[tuple]:
    """Edges of the path 0 -> (b, b) -> (a, b): diagonal first, then horizontal."""
    half = Fraction(1, 2)
    pts = [(Fraction(0), Fraction(0))]
    while pts[-1][1] < b:
        x, y = pts[-1]
        pts.append((x + half, y + half))
    while pts[-1][0] < a:
        x, y = pts[-1]
        pts.append((x + half, y))
    return [(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]


def _b2_strip(length: Fraction) -> list[tuple]:
    """Counterclockwise triangles filling [0, length] x [0, 1/2] below the diagonal."""
    half = Fraction(1, 2)
    tris = [((0, 0), (half, 0), (half, half))]
    x = half
    while x < length:
        if (2 * x) % 2 == 1:
            # the square is cut by the wall x + y = const
            tris.append(((x, 0), (x + half, 0), (x, half)))
            tris.append(((x + half, 0), (x + half, half), (x, half)))
        else:
            tris.append(((x, 0), (x + half, 0), (x + half, half)))
            tris.append(((x, 0), (x + half, half), (x, half)))
        x += half
    return tris


def b2_pins(cplx: PolysimplicialComplex) -> dict[Polysimplex, Chain]:
    """Base values for B2 in the standard model reproducing the worked example.

    Vertices (a, b) go to the path along the diagonal and then horizontally;
    four edges are pinned to the triangles and the strip shown in the example.
    """
    from .rootdata import preset

    if cplx.datum != preset("B2", "standard"):
        raise AlcoveError("pin-invalid", "the pinned values exist for B2 (standard) only")
    F = Fraction
    half = F(1, 2)
    pins: dict[Polysimplex, Chain] = {}
    betas = base_vectors(cplx.datum)
    cfg = ContractionConfig(cplx.datum, betas)
    # all dominant vertices with barycenter in P_1
    for a2 in range(0, 9):
        for b2 in range(0, a2 + 1):
            a, b = F(a2, 2), F(b2, 2)
            if not cfg.in_p1((a, b)) or (a == 0 and b == 0):
                continue
            cell, _ = cplx.identify([[(a, b)]])
            pins[cell] = cplx.chain_from_tuples((1, e) for e in _b2_path(a, b))

    def edge(p, q):
        return cplx.identify([[p, q]])

    pinned = {
        ((half, 0), (half, half)): [((0, 0), (half, 0), (half, half))],
        ((1, half), (1, 1)): [((half, half), (1, half), (1, 1))],
        ((F(3, 2), 1), (F(3, 2), F(3, 2))): [((1, 1), (F(3, 2), 1), (F(3, 2), F(3, 2)))],
        ((F(3, 2), 0), (F(3, 2), half)): _b2_strip(F(3, 2)),
    }
    for (p, q), tris in pinned.items():
        cell, sign = edge(p, q)
        pins[cell] = cplx.chain_from_tuples((1, t) for t in tris) * sign
    return pins


def b2_displayed_identities(cplx: PolysimplicialComplex) -> list[tuple[Chain, Chain]]:
    """(gamma(edge), expected chain) for the six worked-example identities."""
    F = Fraction
    half = F(1, 2)

    def lhs(p, q):
        cell, sign = cplx.identify([[p, q]])
        return cell, sign

    expected = [
        (((half, 0), (half, half)), [((0, 0), (half, 0), (half, half))]),
        (((1, half), (1, 1)), [((half, half), (1, half), (1, 1))]),
        (((F(3, 2), 1), (F(3, 2), F(3, 2))), [((1, 1), (F(3, 2), 1), (F(3, 2), F(3, 2)))]),
        (((F(3, 2), 0), (F(3, 2), half)), _b2_strip(F(3, 2))),
        (((F(5, 2), 0), (F(5, 2), half)), _b2_strip(F(5, 2))),
        (((F(7, 2), 1), (F(7, 2), F(3, 2))),
         [tuple((F(x) + 1, F(y) + 1) for x, y in t) for t in _b2_strip(F(5, 2))]),
    ]
    out = []
    for (p, q), tris in expected:
        cell, sign = lhs(p, q)
        out.append((Chain.of(cell, sign), cplx.chain_from_tuples((1, t) for t in tris)))
    return out
