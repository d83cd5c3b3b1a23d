# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Multiple zeta symbols and their exact Q-linear combinations.

Conventions: ``ζ(s1, ..., sd) = Σ_{m1 > ... > md >= 1} m1^-s1 ... md^-sd`` so the
first exponent sits on the largest summation variable. A regularized symbol
``ζ̄(1, tail)`` is a polynomial in the formal variable ``T = ζ̄(1)`` fixed by the
stuffle product.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from itertools import accumulate
from typing import Iterable, Iterator, Mapping

from wittenzeta.algebra.arith import RatPolynomial, binomial, faulhaber
from wittenzeta.exceptions import (
    DivergentError,
    DivergentResidueError,
    PreconditionError,
    RegularizationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MzvIndex:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(int(s) for s in self.exponents)
        if not exponents:
            raise ValueError("an MZV index needs at least one exponent")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def of(cls, value: "MzvIndex | Iterable[int]") -> "MzvIndex":
        return value if isinstance(value, MzvIndex) else cls(tuple(value))

    @property
    def depth(self) -> int:
        return len(self.exponents)

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    def is_convergent(self) -> bool:
        return mzv_is_convergent(self)

    def is_canonical(self) -> bool:
        return min(self.exponents) >= 1 and self.is_convergent()

    @property
    def sort_key(self) -> tuple:
        return (self.weight, self.depth, self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def __getitem__(self, item):
        return self.exponents[item]

    def __str__(self):
        return f"ζ({','.join(map(str, self.exponents))})"


def convergence_violations(index) -> list[str]:
    """Prefix conditions s1+...+sl > l that fail, formatted for error messages."""
    exponents = tuple(MzvIndex.of(index))
    failed = []
    for length, total in enumerate(accumulate(exponents), start=1):
        if total <= length:
            failed.append(f"{'+'.join(f's{i}' for i in range(1, length + 1))} > {length}")
    return failed


def mzv_is_convergent(index) -> bool:
    exponents = tuple(MzvIndex.of(index))
    return all(total > length for length, total in enumerate(accumulate(exponents), start=1))


@dataclass(frozen=True)
class MzvSymbol:
    """One factor of a monomial: ζ(index), or ζ̄(index) when regularized."""

    index: MzvIndex
    regularized: bool = False

    def __post_init__(self):
        if self.regularized and self.index[0] != 1:
            raise RegularizationError(
                f"regularized symbols must have head exponent 1, got {self.index.exponents}"
            )

    @property
    def sort_key(self) -> tuple:
        return (*self.index.sort_key, self.regularized)

    def __str__(self):
        if self.regularized:
            return f"ζ̄({','.join(map(str, self.index))})"
        return str(self.index)


@dataclass(frozen=True)
class MzvMonomial:
    t_power: int = 0
    factors: tuple[MzvSymbol, ...] = ()

    def __post_init__(self):
        if self.t_power < 0:
            raise ValueError("T powers are nonnegative")
        object.__setattr__(
            self, "factors", tuple(sorted(self.factors, key=lambda f: f.sort_key))
        )

    @property
    def weight(self) -> int:
        return sum(f.index.weight for f in self.factors)

    @property
    def has_regularized(self) -> bool:
        return any(f.regularized for f in self.factors)

    def is_canonical(self) -> bool:
        return (
            self.t_power == 0
            and len(self.factors) == 1
            and not self.factors[0].regularized
            and self.factors[0].index.is_canonical()
        )

    @property
    def sort_key(self) -> tuple:
        return (
            self.weight,
            max((f.index.depth for f in self.factors), default=0),
            self.t_power,
            len(self.factors),
            tuple(f.sort_key for f in self.factors),
        )

    def __mul__(self, other: "MzvMonomial") -> "MzvMonomial":
        return MzvMonomial(self.t_power + other.t_power, self.factors + other.factors)

    def __str__(self):
        parts = [str(f) for f in self.factors]
        if self.t_power:
            parts.insert(0, "T" if self.t_power == 1 else f"T^{self.t_power}")
        return "*".join(parts) or "1"


class MzvCombination:
    """Finite Q-linear combination of MZV monomials. Instances are immutable."""

    def __init__(self, terms: "Mapping[MzvMonomial, Fraction] | None" = None):
        self._terms: dict[MzvMonomial, Fraction] = {
            monomial: Fraction(c) for monomial, c in (terms or {}).items() if c
        }

    # constructors

    @classmethod
    def zeta(cls, *exponents: int) -> "MzvCombination":
        return cls({MzvMonomial(0, (MzvSymbol(MzvIndex(exponents)),)): Fraction(1)})

    @classmethod
    def regularized(cls, *exponents: int) -> "MzvCombination":
        """ζ̄(exponents); exponents[0] must be 1."""
        return cls({MzvMonomial(0, (MzvSymbol(MzvIndex(exponents), True),)): Fraction(1)})

    @classmethod
    def t_power(cls, k: int) -> "MzvCombination":
        return cls({MzvMonomial(k, ()): Fraction(1)})

    @classmethod
    def unit(cls) -> "MzvCombination":
        return cls.t_power(0)

    @classmethod
    def from_words(cls, words: "Mapping[tuple[int, ...], int | Fraction]") -> "MzvCombination":
        """Build from ``{exponents: coefficient}``; words led by a divergent 1 become ζ̄."""
        terms: dict[MzvMonomial, Fraction] = defaultdict(Fraction)
        for word, c in words.items():
            index = MzvIndex(word)
            symbol = MzvSymbol(index, regularized=word[0] == 1 and not index.is_convergent())
            terms[MzvMonomial(0, (symbol,))] += c
        return cls(terms)

    @classmethod
    def linear_sum(
        cls, pairs: "Iterable[tuple[Fraction | int, MzvCombination]]"
    ) -> "MzvCombination":
        terms: dict[MzvMonomial, Fraction] = defaultdict(Fraction)
        for c, combo in pairs:
            if not c:
                continue
            for monomial, coefficient in combo._terms.items():
                terms[monomial] += c * coefficient
        return cls(terms)

    # inspection

    def terms(self) -> list[tuple[MzvMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key)

    def __iter__(self) -> Iterator[tuple[MzvMonomial, Fraction]]:
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial: MzvMonomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def coefficient_of(self, *exponents: int) -> Fraction:
        return self.coefficient(MzvMonomial(0, (MzvSymbol(MzvIndex(exponents)),)))

    @property
    def max_t_power(self) -> int:
        return max((m.t_power for m in self._terms), default=0)

    def t_coefficient(self, k: int) -> "MzvCombination":
        """Coefficient of T^k, itself a T-free combination."""
        return MzvCombination(
            {MzvMonomial(0, m.factors): c for m, c in self._terms.items() if m.t_power == k}
        )

    def has_regularized(self) -> bool:
        return any(m.has_regularized for m in self._terms)

    def is_canonical(self) -> bool:
        return all(m.is_canonical() for m in self._terms)

    def indices(self) -> list[MzvIndex]:
        return [m.factors[0].index for m, _ in self.terms() if len(m.factors) == 1]

    def strata(self) -> dict[int, int]:
        """{weight: largest depth} over the single-factor monomials."""
        strata: dict[int, int] = {}
        for index in self.indices():
            strata[index.weight] = max(strata.get(index.weight, 0), index.depth)
        return dict(sorted(strata.items()))

    def to_pairs(self) -> list[tuple[Fraction, tuple[int, ...]]]:
        if not self.is_canonical():
            raise DivergentResidueError("only canonical combinations serialize to index lists")
        return [(c, m.factors[0].index.exponents) for m, c in self.terms()]

    # arithmetic

    def __add__(self, other: "MzvCombination") -> "MzvCombination":
        if not isinstance(other, MzvCombination):
            return NotImplemented
        return MzvCombination.linear_sum([(1, self), (1, other)])

    def __sub__(self, other: "MzvCombination") -> "MzvCombination":
        if not isinstance(other, MzvCombination):
            return NotImplemented
        return MzvCombination.linear_sum([(1, self), (-1, other)])

    def __neg__(self) -> "MzvCombination":
        return MzvCombination({m: -c for m, c in self._terms.items()})

    def __mul__(self, other) -> "MzvCombination":
        if isinstance(other, (int, Fraction)):
            return MzvCombination({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MzvCombination):
            return NotImplemented
        terms: dict[MzvMonomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                terms[m1 * m2] += c1 * c2
        return MzvCombination(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MzvCombination):
            return NotImplemented
        return self._terms == other._terms

    @cached_property
    def _hash(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for monomial, c in self.terms():
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            body = str(monomial) if magnitude == 1 else f"{magnitude}*{monomial}"
            out.append(f"{sign} {body}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else f"-{text[2:]}"

    def __repr__(self):
        return f"MzvCombination({self})"


ZERO = MzvCombination()


# ---------------------------------------------------------------------------
# stuffle
# ---------------------------------------------------------------------------


@cache
def _stuffle_words(
    u: tuple[int, ...], v: tuple[int, ...]
) -> tuple[tuple[tuple[int, ...], int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    words: dict[tuple[int, ...], int] = defaultdict(int)
    a, b = u[0], v[0]
    for w, c in _stuffle_words(u[1:], v):
        words[(a, *w)] += c
    for w, c in _stuffle_words(u, v[1:]):
        words[(b, *w)] += c
    for w, c in _stuffle_words(u[1:], v[1:]):
        words[(a + b, *w)] += c
    return tuple(sorted(words.items()))


def stuffle_words(u, v) -> dict[tuple[int, ...], int]:
    return dict(_stuffle_words(tuple(u), tuple(v)))


def _is_regularized_head(index: MzvIndex) -> bool:
    return index[0] == 1 and not index.is_convergent()


def stuffle(u, v) -> MzvCombination:
    """Quasi-shuffle product u * v as a combination of single symbols."""
    u, v = MzvIndex.of(u), MzvIndex.of(v)
    regularized = [x for x in (u, v) if not x.is_convergent()]
    if len(regularized) == 2:
        raise RegularizationError(f"cannot stuffle two regularized symbols {u} and {v}")
    for index in regularized:
        if not _is_regularized_head(index) or not mzv_is_convergent(index[1:] or (2,)):
            raise RegularizationError(f"{index} is neither convergent nor a regularized head")
    return MzvCombination.from_words(stuffle_words(u, v))


# ---------------------------------------------------------------------------
# integer arguments
# ---------------------------------------------------------------------------


@cache
def _normalize(exponents: tuple[int, ...]) -> MzvCombination:
    position = next((i for i, s in enumerate(exponents) if s <= 0), None)
    if position is None:
        return MzvCombination.zeta(*exponents)
    if position == 0:
        raise DivergentError(f"ζ{exponents} diverges", convergence_violations(exponents))

    # Σ_{m_{j+1} < m_j < m_{j-1}} m_j^t = [P(m_{j-1}) - m_{j-1}^t] - P(m_{j+1})
    t = -exponents[position]
    power_sum = faulhaber(t)
    upper = power_sum - RatPolynomial.monomial(t)
    head, tail = exponents[: position - 1], exponents[position + 1 :]
    previous = exponents[position - 1]

    pieces: list[tuple[Fraction, tuple[int, ...]]] = []
    for i, c in upper.items():
        pieces.append((c, (*head, previous - i, *tail)))
    if tail:
        for i, c in power_sum.items():
            pieces.append((-c, (*head, previous, tail[0] - i, *tail[1:])))

    return MzvCombination.linear_sum((c, _normalize(piece)) for c, piece in pieces)


def normalize_integer_args(index) -> MzvCombination:
    """Rewrite a convergent index with integer (possibly nonpositive) entries
    as a combination of canonical MZVs."""
    index = MzvIndex.of(index)
    if failed := convergence_violations(index):
        raise DivergentError(f"{index} diverges", failed)
    return _normalize(index.exponents)


# ---------------------------------------------------------------------------
# regularization and normal form
# ---------------------------------------------------------------------------


@cache
def _expand_symbol(symbol: MzvSymbol) -> MzvCombination:
    if not symbol.regularized:
        return MzvCombination({MzvMonomial(0, (symbol,)): Fraction(1)})
    tail = symbol.index[1:]
    if not tail:
        return MzvCombination.t_power(1)
    if not mzv_is_convergent(tail):
        raise RegularizationError(f"{symbol} has a divergent tail")

    # ζ̄(1)ζ(tail) = Σ_{w in (1)*tail} ζ̄(w), and ζ̄(1, tail) occurs exactly once
    words = stuffle_words((1,), tail)
    own = words.pop(symbol.index.exponents)
    rest = MzvCombination.from_words(words)
    if rest.has_regularized():
        raise RegularizationError(f"stuffle remainder of {symbol} is not convergent")
    t_part = MzvCombination({MzvMonomial(1, (MzvSymbol(MzvIndex(tail)),)): Fraction(1)})
    return (t_part - rest) * Fraction(1, own)


def expand_regularized(combo: MzvCombination) -> MzvCombination:
    """Replace every ζ̄(1, tail) by its polynomial in T."""
    if not combo.has_regularized():
        return combo
    pairs = []
    for monomial, c in combo:
        expanded = MzvCombination.t_power(monomial.t_power)
        for factor in monomial.factors:
            expanded = expanded * _expand_symbol(factor)
        pairs.append((c, expanded))
    return MzvCombination.linear_sum(pairs)


def _stuffle_combinations(left: MzvCombination, right: MzvCombination) -> MzvCombination:
    pairs = []
    for m1, c1 in left:
        for m2, c2 in right:
            pairs.append((c1 * c2, stuffle(m1.factors[0].index, m2.factors[0].index)))
    return MzvCombination.linear_sum(pairs)


def canonicalize(combo: MzvCombination) -> MzvCombination:
    """Expand products by stuffle and normalize every index."""
    if combo.max_t_power or combo.has_regularized():
        raise DivergentResidueError(f"divergent residue in {combo}")
    pairs = []
    for monomial, c in combo:
        if not monomial.factors:
            pairs.append((c, MzvCombination({monomial: Fraction(1)})))
            continue
        product = None
        for factor in monomial.factors:
            normal = normalize_integer_args(factor.index)
            product = normal if product is None else _stuffle_combinations(product, normal)
        pairs.append((c, product))
    return MzvCombination.linear_sum(pairs)


# ---------------------------------------------------------------------------
# Euler's identities
# ---------------------------------------------------------------------------


def euler_identity_check(s: int, t: int) -> tuple[MzvCombination, MzvCombination]:
    """Both sides of one of Euler's identities, as canonical combinations.

    With ``t == 1`` (or ``s == 1``) this is ζ(n+1) = Σ_{a=1}^{n-1} ζ(1+a, n-a);
    otherwise the decomposition of ζ(s)ζ(t), whose left side is stuffle-expanded.
    """
    if 1 in (s, t):
        n = s if t == 1 else t
        if n < 2:
            raise PreconditionError(f"ζ(n+1) = Σ ζ(1+a, n-a) needs n >= 2, got {n}")
        lhs = MzvCombination.zeta(n + 1)
        rhs = MzvCombination.linear_sum(
            (1, MzvCombination.zeta(1 + a, n - a)) for a in range(1, n)
        )
        return lhs, rhs

    if s < 2 or t < 2:
        raise PreconditionError(f"Euler's decomposition needs s, t >= 2, got ({s}, {t})")
    lhs = canonicalize(MzvCombination.zeta(s) * MzvCombination.zeta(t))
    rhs = MzvCombination.linear_sum(
        [(binomial(t - 1 + a, a), MzvCombination.zeta(t + a, s - a)) for a in range(s)]
        + [(binomial(s - 1 + b, b), MzvCombination.zeta(s + b, t - b)) for b in range(t)]
    )
    return lhs, rhs
