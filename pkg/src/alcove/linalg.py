"""Exact integer and rational linear algebra.

Matrices are tuples (or lists) of rows. Entries are ``int`` or
``fractions.Fraction``; nothing here ever produces a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[Fraction, ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple[tuple, ...]:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(zip(*a))


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(u, v))


def vscale(c, v: Sequence) -> tuple:
    return tuple(c * x for x in v)


def det(a: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result


def inverse(a: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...]:
    """Solve a square nonsingular system ``a x = b`` exactly."""
    return matvec(inverse(a), b)


def is_integral(v: Iterable) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def rank(rows: Sequence[Sequence]) -> int:
    return len(_echelon([[Fraction(x) for x in r] for r in rows]))


def _echelon(m: list[list[Fraction]]) -> list[list[Fraction]]:
    out: list[list[Fraction]] = []
    ncols = len(m[0]) if m else 0
    rows = [r for r in m if any(r)]
    for col in range(ncols):
        pivot = next((r for r in rows if r[col] != 0), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        p = pivot[col]
        pivot = [x / p for x in pivot]
        reduced = []
        for r in rows:
            if r[col]:
                f = r[col]
                r = [x - f * y for x, y in zip(r, pivot)]
            if any(r):
                reduced.append(r)
        rows = reduced
        out.append(pivot)
    return out


# --------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """``left @ matrix @ right == diag`` with unimodular ``left`` and ``right``.

    ``diagonal`` lists the nonzero invariant factors d_1 | d_2 | ... (all
    positive); the remaining diagonal entries of ``diag`` are zero.
    """
    matrix: Matrix
    diag: Matrix
    left: Matrix
    right: Matrix
    left_inv: Matrix
    right_inv: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(len(self.diag), len(self.diag[0]) if self.diag else 0)
        return tuple(self.diag[i][i] for i in range(n) if self.diag[i][i] != 0)

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form of an integer matrix with transformation matrices."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    d = [[int(x) for x in row] for row in a]
    left = [list(r) for r in identity(nrows)]
    left_inv = [list(r) for r in identity(nrows)]
    right = [list(r) for r in identity(ncols)]
    right_inv = [list(r) for r in identity(ncols)]

    # Row op on d: row_i += c*row_j  <=> left := E left, left_inv := left_inv E^-1
    def add_row(i, j, c):
        d[i] = [x + c * y for x, y in zip(d[i], d[j])]
        left[i] = [x + c * y for x, y in zip(left[i], left[j])]
        for row in left_inv:
            row[j] -= c * row[i]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        left[i], left[j] = left[j], left[i]
        for row in left_inv:
            row[i], row[j] = row[j], row[i]

    def neg_row(i):
        d[i] = [-x for x in d[i]]
        left[i] = [-x for x in left[i]]
        for row in left_inv:
            row[i] = -row[i]

    # Column op on d: col_i += c*col_j  <=> right := right E, right_inv := E^-1 right_inv
    def add_col(i, j, c):
        for row in d:
            row[i] += c * row[j]
        for row in right:
            row[i] += c * row[j]
        right_inv[j] = [x - c * y for x, y in zip(right_inv[j], right_inv[i])]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]
        right_inv[i], right_inv[j] = right_inv[j], right_inv[i]

    t = 0
    while t < min(nrows, ncols):
        nonzero = [(abs(d[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if d[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, nrows):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    if d[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, ncols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    if d[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: pull a non-divisible entry into row t
            bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                        if d[i][j] % d[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if d[t][t] < 0:
            neg_row(t)
        t += 1

    tup = lambda m: tuple(tuple(r) for r in m)  # noqa: E731
    return SmithForm(tup(a), tup(d), tup(left), tup(right), tup(left_inv), tup(right_inv))


def lattice_index(generators: Sequence[Sequence[int]], dim: int) -> int | None:
    """Index of the lattice spanned by ``generators`` in Z^dim (None if infinite)."""
    if not generators:
        return None if dim else 1
    snf = smith_normal_form(transpose(generators))
    if snf.rank < dim:
        return None
    out = 1
    for x in snf.diagonal:
        out *= x
    return out


def in_lattice(x: Sequence, generators: Sequence[Sequence[int]]) -> bool:
    """Whether ``x`` is an integer combination of ``generators``."""
    x = [Fraction(c) for c in x]
    if not is_integral(x):
        return False
    if not generators:
        return not any(x)
    snf = smith_normal_form(transpose(generators))
    y = matvec(snf.left, [int(c) for c in x])
    for i, yi in enumerate(y):
        di = snf.diag[i][i] if i < len(snf.diag[0]) else 0
        if di == 0:
            if yi:
                return False
        elif yi % di:
            return False
    return True


# --------------------------------------------------------------------------
# Sparse exact elimination


def solve_sparse(
    columns: Sequence[Mapping[Hashable, Fraction]],
    rhs: Mapping[Hashable, Fraction],
    row_order: Sequence[Hashable] | None = None,
) -> list[Fraction] | None:
    """Particular solution of a sparse linear system, or None if inconsistent.

    ``columns[j]`` maps row keys to the entries of column j. Elimination
    runs over the columns in the given order; free variables are set to
    zero, so the result is a deterministic function of the inputs.
    """
    keys = list(row_order) if row_order is not None else []
    seen = set(keys)
    for col in columns:
        for k in col:
            if k not in seen:
                seen.add(k)
                keys.append(k)
    for k in rhs:
        if k not in seen:
            seen.add(k)
            keys.append(k)
    rows: dict[int, dict[int, Fraction]] = {i: {} for i in range(len(keys))}
    index = {k: i for i, k in enumerate(keys)}
    ncols = len(columns)
    for j, col in enumerate(columns):
        for k, v in col.items():
            if v:
                rows[index[k]][j] = Fraction(v)
    for k, v in rhs.items():
        if v:
            rows[index[k]][ncols] = Fraction(v)

    # column -> rows having a nonzero entry there
    occupancy: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            occupancy.setdefault(j, set()).add(i)

    pivots: dict[int, int] = {}
    used: set[int] = set()
    for j in range(ncols):
        candidates = sorted(i for i in occupancy.get(j, ()) if i not in used)
        if not candidates:
            continue
        pi = candidates[0]
        used.add(pi)
        prow = rows[pi]
        p = prow[j]
        if p != 1:
            for c in prow:
                prow[c] /= p
        for i in list(occupancy.get(j, ())):
            if i == pi:
                continue
            r = rows[i]
            f = r[j]
            for c, v in prow.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    if c not in r:
                        occupancy.setdefault(c, set()).add(i)
                    r[c] = nv
                elif c in r:
                    del r[c]
                    occupancy[c].discard(i)
        pivots[j] = pi

    for i, r in rows.items():
        if i not in used and r.get(ncols):
            return None
    sol = [Fraction(0)] * ncols
    for j, i in pivots.items():
        sol[j] = rows[i].get(ncols, Fraction(0))
    return sol


def sparse_rank(rows: Iterable[Mapping[Hashable, Fraction]]) -> int:
    """Rank of a matrix given as sparse rows (dicts column -> value)."""
    basis: dict[Hashable, dict[Hashable, Fraction]] = {}
    r = 0
    for row in rows:
        v = {k: Fraction(x) for k, x in row.items() if x}
        while v:
            lead = min(v, key=_sort_key)
            if lead not in basis:
                p = v[lead]
                basis[lead] = {k: x / p for k, x in v.items()}
                r += 1
                break
            b = basis[lead]
            f = v[lead]
            for k, x in b.items():
                nv = v.get(k, 0) - f * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return r


def _sort_key(k):
    return repr(k) if not isinstance(k, (int, tuple)) else k


def is_positive_semidefinite(matrix: Sequence[Sequence]) -> bool:
    """Exact semidefiniteness test for a symmetric rational matrix.

    Symmetric elimination: a negative pivot, or a zero pivot with a nonzero
    remainder of its row, certifies an indefinite direction.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    active = list(range(n))
    while active:
        k = active.pop(0)
        p = m[k][k]
        if p < 0:
            return False
        if p == 0:
            if any(m[k][j] for j in active):
                return False
            continue
        for i in active:
            f = m[i][k] / p
            if f:
                for j in active:
                    m[i][j] -= f * m[k][j]
    return True
