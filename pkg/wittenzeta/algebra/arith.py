# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Exact combinatorics: binomials, Bernoulli polynomials and power sums."""

from fractions import Fraction
from functools import cache
from math import comb, factorial, prod
from typing import Iterable, Sequence

import sympy as sp

X = sp.Symbol("x")


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    """(p1 + ... + pr)! / (p1! ... pr!) for nonnegative parts."""
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be nonnegative, got {tuple(parts)}")
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


@cache
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0, giving B_1 = -1/2
    numbers = [Fraction(1)]
    for m in range(1, n + 1):
        total = sum((comb(m + 1, k) * numbers[k] for k in range(m)), Fraction(0))
        numbers.append(-total / (m + 1))
    return tuple(numbers)


def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _bernoulli_table(n)


def _to_sympy(value) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


class RatPolynomial:
    """Polynomial in one variable with exact rational coefficients.

    Wraps a ``sympy.Poly`` over QQ. ``coefficients[i]`` multiplies ``x**i`` as a
    ``Fraction``, and the zero polynomial has no coefficients at all.
    """

    __slots__ = ("poly",)

    def __init__(self, coefficients: Iterable = (), *, poly: sp.Poly | None = None):
        if poly is None:
            # Poly.from_list wants the leading coefficient first
            values = [_to_sympy(c) for c in coefficients][::-1]
            poly = sp.Poly.from_list(values or [0], X, domain=sp.QQ)
        self.poly = poly

    @classmethod
    def monomial(cls, power: int, coefficient=1) -> "RatPolynomial":
        return cls([0] * power + [coefficient])

    @classmethod
    def binomial(cls, k: int) -> "RatPolynomial":
        """C(x, k) = x(x-1)...(x-k+1) / k!"""
        falling = sp.Poly(sp.prod([X - i for i in range(k)]), X, domain=sp.QQ)
        return cls(poly=falling.mul_ground(sp.Rational(1, factorial(k))))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        if self.poly.is_zero:
            return ()
        return tuple(_to_fraction(c) for c in reversed(self.poly.all_coeffs()))

    @property
    def degree(self) -> int:
        return -1 if self.poly.is_zero else self.poly.degree()

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return _to_fraction(self.poly.eval(_to_sympy(x)))
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __getitem__(self, power: int) -> Fraction:
        if power < 0:
            return Fraction(0)
        return _to_fraction(self.poly.nth(power))

    def items(self):
        """(power, coefficient) pairs with a nonzero coefficient, lowest power first."""
        return ((m, _to_fraction(c)) for (m,), c in reversed(self.poly.terms()) if c)

    def __add__(self, other):
        return RatPolynomial(poly=self.poly + _as_poly(other))

    __radd__ = __add__

    def __neg__(self):
        return RatPolynomial(poly=-self.poly)

    def __sub__(self, other):
        return RatPolynomial(poly=self.poly - _as_poly(other))

    def __rsub__(self, other):
        return RatPolynomial(poly=_as_poly(other) - self.poly)

    def __mul__(self, other):
        return RatPolynomial(poly=self.poly * _as_poly(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPolynomial([other])
        if not isinstance(other, RatPolynomial):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.coefficients)

    def shift(self, c) -> "RatPolynomial":
        """p(x + c)"""
        return RatPolynomial(poly=self.poly.shift(_to_sympy(c)))

    def __repr__(self):
        return f"RatPolynomial({self.poly.as_expr()})"


def _as_poly(value) -> sp.Poly:
    if isinstance(value, RatPolynomial):
        return value.poly
    if isinstance(value, (int, Fraction)):
        return sp.Poly(_to_sympy(value), X, domain=sp.QQ)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


@cache
def bernoulli_poly(n: int) -> RatPolynomial:
    """B_n(x) = sum_k C(n, k) B_k x^(n-k), so that B_n(0) = B_n and B_1(x) = x - 1/2."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    numbers = bernoulli_numbers(n)
    return RatPolynomial(comb(n, n - power) * numbers[n - power] for power in range(n + 1))


@cache
def faulhaber(t: int) -> RatPolynomial:
    """P_t with P_t(n) = 1^t + 2^t + ... + n^t for every n >= 0.

    Uses (B_{t+1}(n+1) - B_{t+1}(1)) / (t+1); subtracting B_{t+1}(1) rather than
    B_{t+1}(0) keeps t = 0 correct.
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    b = bernoulli_poly(t + 1)
    return (b.shift(1) - b(Fraction(1))) * Fraction(1, t + 1)
