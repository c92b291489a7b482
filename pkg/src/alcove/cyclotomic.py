"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored as a coefficient vector in the power basis
1, z, ..., z^(phi(n)-1) with z = exp(2 pi i / n), reduced modulo the
n-th cyclotomic polynomial. Elements of different conductors are
compared and combined after lifting to the lcm of the conductors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

Number = Union[int, Fraction, "Cyclotomic"]

MAX_CONDUCTOR = 240


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # x^n - 1 = prod_{d | n} Phi_d(x)
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn] // den[dn]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


def _reduce(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        lead = c[i]
        if lead:
            # Phi_n is monic
            for j in range(deg + 1):
                c[i - deg + j] -= lead * phi[j]
    c = c[:deg] + [Fraction(0)] * max(0, deg - len(c))
    return tuple(c)


class Cyclotomic:
    """An element of Q(zeta_n)."""

    __slots__ = ("n", "coeffs")
    __hash__ = None  # equality is defined across conductors

    def __init__(self, n: int, coeffs=()):
        if n > MAX_CONDUCTOR:
            raise ValueError(f"conductor {n} exceeds the supported bound {MAX_CONDUCTOR}")
        self.n = n
        self.coeffs = _reduce(n, [Fraction(c) for c in coeffs])

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        return cls(1, [Fraction(q)])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        """zeta_n^k."""
        k %= n
        c = [0] * (k + 1)
        c[k] = 1
        return cls(n, c)

    @classmethod
    def coerce(cls, x: Number) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        return cls.rational(x)

    # -- conductor handling ----------------------------------------------------

    def lift(self, m: int) -> "Cyclotomic":
        """The same number written in Q(zeta_m); requires n | m."""
        if m % self.n:
            raise ValueError(f"cannot lift conductor {self.n} to {m}")
        step = m // self.n
        c = [Fraction(0)] * (step * len(self.coeffs) + 1)
        for i, x in enumerate(self.coeffs):
            c[i * step] = x
        return Cyclotomic(m, c)

    @staticmethod
    def _common(a: "Cyclotomic", b: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if a.n == b.n:
            return a, b
        m = _lcm(a.n, b.n)
        return a.lift(m), b.lift(m)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: Number) -> "Cyclotomic":
        a, b = self._common(self, Cyclotomic.coerce(other))
        return Cyclotomic(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, [-x for x in self.coeffs])

    def __sub__(self, other: Number) -> "Cyclotomic":
        return self + (-Cyclotomic.coerce(other))

    def __rsub__(self, other: Number) -> "Cyclotomic":
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other: Number) -> "Cyclotomic":
        if not isinstance(other, Cyclotomic):
            q = Fraction(other)
            return Cyclotomic(self.n, [q * x for x in self.coeffs])
        a, b = self._common(self, other)
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.n, prod)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            q = other.to_fraction()
            if q is None:
                raise NotImplementedError("division by an irrational cyclotomic")
            other = q
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugate, zeta -> zeta^-1."""
        c = [Fraction(0)] * self.n
        for i, x in enumerate(self.coeffs):
            c[(-i) % self.n] += x
        return Cyclotomic(self.n, c)

    # -- comparisons and conversion ------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    def to_fraction(self) -> Fraction | None:
        """The value as a rational number, or None if it is irrational."""
        if all(x == 0 for x in self.coeffs[1:]):
            return self.coeffs[0] if self.coeffs else Fraction(0)
        return None

    def is_rational(self) -> bool:
        return self.to_fraction() is not None

    def __complex__(self) -> complex:
        # for display and debugging only; never used in computations
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(complex(float(x)) * z ** i for i, x in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"Cyclotomic({self.n}, {[str(x) for x in self.coeffs]})"

    def __str__(self) -> str:
        return format_number(self)


def _minimal(c: Cyclotomic) -> Cyclotomic:
    """Rewrite in the smallest conductor dividing n that contains it."""
    for m in sorted(d for d in range(1, c.n + 1) if c.n % d == 0):
        # Q(zeta_m) sits inside Q(zeta_n) as combinations of zeta_n^(k n/m)
        step = c.n // m
        candidate = _project(c, m, step)
        if candidate is not None:
            return candidate
    return c


def _project(c: Cyclotomic, m: int, step: int) -> Cyclotomic | None:
    # Solve for coefficients in Q(zeta_m) by matching the lift; the lift of
    # the power basis of Q(zeta_m) is a subset of zeta_n powers reduced mod Phi_n.
    from .linalg import solve_sparse

    basis = [Cyclotomic.zeta(m, k).lift(c.n) for k in range(len(cyclotomic_polynomial(m)) - 1)]
    columns = [{i: x for i, x in enumerate(b.coeffs) if x} for b in basis]
    rhs = {i: x for i, x in enumerate(c.coeffs) if x}
    sol = solve_sparse(columns, rhs, row_order=range(len(c.coeffs)))
    if sol is None:
        return None
    return Cyclotomic(m, sol)


def format_number(x: Number) -> str:
    """Exact string: "p/q" for rationals, "c0 + c1*z^1 (z=zeta_n)" otherwise."""
    if isinstance(x, Cyclotomic):
        q = x.to_fraction()
        if q is None:
            x = _minimal(x)
            terms = []
            for k, c in enumerate(x.coeffs):
                if c:
                    terms.append(f"{c}" if k == 0 else f"{c}*z{x.n}^{k}")
            return " + ".join(terms)
        x = q
    return str(Fraction(x))


def as_fraction(x: Number) -> Fraction:
    """Rational value of ``x``; raises if ``x`` is irrational."""
    if isinstance(x, Cyclotomic):
        q = x.to_fraction()
        if q is None:
            raise ValueError(f"{format_number(x)} is not rational")
        return q
    return Fraction(x)


def root_of_unity_power(q: Fraction) -> Cyclotomic:
    """exp(2 pi i q) for rational q."""
    q = Fraction(q) % 1
    return Cyclotomic.zeta(q.denominator, q.numerator)
