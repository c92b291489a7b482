from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from alcove.cyclotomic import Cyclotomic, cyclotomic_polynomial, format_number, root_of_unity_power
from alcove.linalg import (
    det,
    inverse,
    is_positive_semidefinite,
    matmul,
    rank,
    smith_normal_form,
    solve_sparse,
    sparse_rank,
)

small = st.integers(-6, 6)


def int_matrices(n, m=None):
    m = m or n
    return st.lists(st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n)


# --------------------------------------------------------------------------
# Smith normal form and dense linear algebra


@settings(max_examples=60, deadline=None)
@given(int_matrices(3))
def test_smith_form_factorization_and_invariants(a):
    s = smith_normal_form(a)
    assert matmul(matmul(s.left, a), s.right) == s.diag
    assert matmul(s.left, s.left_inv) == tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    diag = s.diagonal
    assert all(d > 0 for d in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))
    # independent oracle: sympy's invariant factors
    ref = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    ref_diag = tuple(abs(int(ref[i, i])) for i in range(3) if ref[i, i] != 0)
    assert diag == ref_diag


def test_smith_form_of_one_minus_rotation_by_pi():
    s = smith_normal_form([[2, 0], [0, 2]])
    assert s.diagonal == (2, 2)


@settings(max_examples=60, deadline=None)
@given(int_matrices(3))
def test_det_inverse_and_rank_match_sympy(a):
    m = sympy.Matrix(a)
    assert det(a) == int(m.det())
    assert rank(a) == m.rank()
    if m.det() != 0:
        inv = inverse(a)
        ref = m.inv()
        assert all(inv[i][j] == Fraction(str(ref[i, j])) for i in range(3) for j in range(3))


@settings(max_examples=60, deadline=None)
@given(int_matrices(4, 3), st.lists(small, min_size=3, max_size=3))
def test_solve_sparse_finds_a_solution_of_consistent_systems(a, x):
    columns = [{i: Fraction(a[i][j]) for i in range(4) if a[i][j]} for j in range(3)]
    rhs = {i: Fraction(sum(a[i][j] * x[j] for j in range(3))) for i in range(4)}
    rhs = {k: v for k, v in rhs.items() if v}
    sol = solve_sparse(columns, rhs)
    assert sol is not None
    for i in range(4):
        assert sum(a[i][j] * sol[j] for j in range(3)) == rhs.get(i, 0)


def test_solve_sparse_detects_inconsistency():
    assert solve_sparse([{0: Fraction(1)}, {0: Fraction(2)}], {1: Fraction(1)}) is None


@settings(max_examples=60, deadline=None)
@given(int_matrices(4))
def test_sparse_rank_matches_sympy(a):
    rows = [{j: Fraction(v) for j, v in enumerate(r) if v} for r in a]
    assert sparse_rank(rows) == sympy.Matrix(a).rank()


@settings(max_examples=80, deadline=None)
@given(int_matrices(3))
def test_semidefinite_test_matches_eigenvalues(a):
    sym = [[a[i][j] + a[j][i] for j in range(3)] for i in range(3)]
    eig = np.linalg.eigvalsh(np.array(sym, dtype=float))
    expected = bool(eig.min() > -1e-9)
    assert is_positive_semidefinite(sym) == expected


@settings(max_examples=40, deadline=None)
@given(int_matrices(2, 3))
def test_gram_matrices_are_semidefinite(m):
    gram = [[sum(m[k][i] * m[k][j] for k in range(2)) for j in range(3)] for i in range(3)]
    assert is_positive_semidefinite(gram)


# --------------------------------------------------------------------------
# cyclotomic numbers


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    x = sympy.Symbol("x")
    for n in range(1, 25):
        ref = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert cyclotomic_polynomial(n) == tuple(int(c) for c in ref)


def test_roots_of_unity_identities():
    assert Cyclotomic.zeta(4) ** 2 == -1
    assert Cyclotomic.zeta(3) + Cyclotomic.zeta(3, 2) == -1
    assert Cyclotomic.zeta(6) == -Cyclotomic.zeta(3, 2)
    assert Cyclotomic.zeta(5) ** 5 == 1
    assert root_of_unity_power(Fraction(1, 2)) == -1
    assert (Cyclotomic.zeta(8) * Cyclotomic.zeta(8).conjugate()) == 1


def elements(n):
    return st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=5), min_size=1, max_size=n) \
        .map(lambda cs: Cyclotomic(n, cs))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5, 8, 12]).flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_cyclotomic_arithmetic_matches_complex_numbers(pair):
    a, b = pair
    for got, want in ((a + b, complex(a) + complex(b)), (a * b, complex(a) * complex(b)),
                      (a - b, complex(a) - complex(b)), (a.conjugate(), complex(a).conjugate())):
        assert cmath.isclose(complex(got), want, abs_tol=1e-9)


def test_equality_across_conductors_and_formatting():
    assert Cyclotomic.zeta(4).lift(12) == Cyclotomic.zeta(12, 3)
    assert format_number(Cyclotomic.zeta(12, 3)) == "1*z4^1"
    assert format_number(Cyclotomic.rational(Fraction(-3, 4))) == "-3/4"
    assert format_number(Fraction(2)) == "2"


def test_division_only_by_rationals():
    with pytest.raises(Exception):
        Cyclotomic.zeta(4) / Cyclotomic.zeta(4)
    assert Cyclotomic.zeta(4) * 2 / 2 == Cyclotomic.zeta(4)
