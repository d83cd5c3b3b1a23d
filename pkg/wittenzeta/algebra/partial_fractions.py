# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Partial fractions over products of integer linear forms, and convergence tests
for lattice sums built from such forms."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from wittenzeta.algebra.arith import multinomial
from wittenzeta.exceptions import PreconditionError, ReductionError


@dataclass(frozen=True)
class LinearForm:
    """c1*m1 + ... + cd*md with integer coefficients and no constant term."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "LinearForm":
        return cls(coeffs)

    @property
    def dimension(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def support(self) -> frozenset[int]:
        """1-based variables with a nonzero coefficient."""
        return frozenset(i for i, c in enumerate(self.coeffs, start=1) if c)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        if self.dimension != other.dimension:
            raise ValueError("linear forms live in different dimensions")
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple(-c for c in self.coeffs))

    def __mul__(self, scale: int) -> "LinearForm":
        return LinearForm(tuple(scale * c for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, values: Sequence):
        return sum(c * v for c, v in zip(self.coeffs, values))

    def ratio_to(self, other: "LinearForm") -> Fraction | None:
        """c with self == c * other, or None when the forms are not proportional."""
        if other.is_zero() or self.dimension != other.dimension:
            return None
        pivot = next(i for i, c in enumerate(other.coeffs) if c)
        ratio = Fraction(self.coeffs[pivot], other.coeffs[pivot])
        if ratio and all(a == ratio * b for a, b in zip(self.coeffs, other.coeffs)):
            return ratio
        return None

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs, start=1):
            if not c:
                continue
            name = f"m{i}" if abs(c) == 1 else f"{abs(c)}*m{i}"
            parts.append(("-" if c < 0 else "+") + name)
        text = "".join(parts) or "0"
        return text[1:] if text.startswith("+") else text


Factor = tuple[LinearForm, int]


@dataclass(frozen=True)
class FactoredTerm:
    """coefficient / prod(form ** exponent)"""

    coefficient: Fraction
    factors: tuple[Factor, ...]

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    def evaluate(self, values: Sequence) -> Fraction:
        value = Fraction(self.coefficient)
        for form, e in self.factors:
            value /= Fraction(form(values)) ** e
        return value


def pf_expand(factors: Sequence[Factor]) -> list[FactoredTerm]:
    """Rewrite 1/(x1^n1 ... xr^nr) so that every term contains x = x1+...+xr.

    For each j and each choice of 0 <= a_k < n_k (k != j) the term is
    M_j / (x^(n_j+A) * prod_{k != j} x_k^(n_k-a_k)) with A = sum a_k and
    M_j = (n_j+A-1)! / ((n_j-1)! prod a_k!).
    """
    if len(factors) < 2:
        raise PreconditionError("partial fractions need at least two factors")
    for form, e in factors:
        if e < 1:
            raise PreconditionError(f"exponent of {form} must be >= 1, got {e}")
    total = factors[0][0]
    for form, _ in factors[1:]:
        total = total + form
    if total.is_zero():
        raise PreconditionError("the forms sum to zero")

    terms = []
    for j, (_, n_j) in enumerate(factors):
        others = [(form, e) for k, (form, e) in enumerate(factors) if k != j]
        for shifts in product(*(range(e) for _, e in others)):
            coefficient = multinomial((n_j - 1, *shifts))
            out: list[Factor] = [(total, n_j + sum(shifts))]
            out.extend((form, e - a) for (form, e), a in zip(others, shifts))
            terms.append(FactoredTerm(Fraction(coefficient), tuple(out)))
    return terms


# ---------------------------------------------------------------------------
# convergence
# ---------------------------------------------------------------------------


def _nonempty_subsets(d: int):
    for size in range(1, d + 1):
        yield from (frozenset(c) for c in combinations(range(1, d + 1), size))


def conv_check_general(d: int, exponents: Mapping[Iterable[int], int]) -> bool:
    """Σ_{m in N^d} prod_J (Σ_{j in J} m_j)^(-s_J) converges iff, for every nonempty
    I ⊆ [d], the exponents of the subsets J meeting I add up to more than |I|."""
    return not convergence_violations(d, exponents)


def _subset_label(subset: frozenset[int]) -> str:
    return f"({'+'.join(f'm{j}' for j in sorted(subset))})"


def convergence_violations(
    d: int,
    exponents: Mapping[Iterable[int], int],
    labels: Mapping[frozenset[int], str] | None = None,
) -> list[str]:
    """Every failed subset condition of :func:`conv_check_general`, written as the
    sum of the labels of the subsets J meeting I, then ``> |I|``.

    Subsets without a label in ``labels`` are named by their linear form.
    """
    labels = labels or {}
    by_subset = [(frozenset(subset), s) for subset, s in exponents.items()]
    failed = []
    for chosen in _nonempty_subsets(d):
        involved = [(subset, s) for subset, s in by_subset if subset & chosen]
        if sum(s for _, s in involved) <= len(chosen):
            names = (labels.get(subset) or _subset_label(subset) for subset, _ in involved)
            failed.append(f"{'+'.join(names)} > {len(chosen)}")
    return failed


def forms_to_subset_exponents(forms: Iterable[Factor]) -> dict[frozenset[int], int]:
    exponents: dict[frozenset[int], int] = {}
    for form, e in forms:
        if not form.is_nonnegative() or form.is_zero():
            raise PreconditionError(f"{form} is not a nonnegative nonzero form")
        exponents[form.support] = exponents.get(form.support, 0) + e
    return exponents


def slot_violations(
    values: Sequence[int], slot_forms: Sequence[LinearForm], slot_names: Sequence[str]
) -> list[str]:
    """Failed subset conditions for a lattice sum given slot by slot, zero slots included."""
    exponents = {form.support: v for form, v in zip(slot_forms, values)}
    labels = {form.support: name for form, name in zip(slot_forms, slot_names)}
    return convergence_violations(slot_forms[0].dimension, exponents, labels)


def conv_check_zeta3(args: Sequence[int]) -> bool:
    s1, s2, s3, s4, s5, s6, s7 = args
    return (
        s1 + s4 + s6 + s7 > 1
        and s2 + s4 + s5 + s7 > 1
        and s3 + s5 + s6 + s7 > 1
        and s1 + s2 + s4 + s5 + s6 + s7 > 2
        and s2 + s3 + s4 + s5 + s6 + s7 > 2
        and s1 + s3 + s4 + s5 + s6 + s7 > 2
        and s1 + s2 + s3 + s4 + s5 + s6 + s7 > 3
    )


# ---------------------------------------------------------------------------
# rewriting slot exponents
# ---------------------------------------------------------------------------


def locate_slot(form: LinearForm, slot_forms: Sequence[LinearForm]) -> tuple[int, Fraction]:
    for slot, candidate in enumerate(slot_forms):
        if (ratio := form.ratio_to(candidate)) is not None:
            return slot, ratio
    raise ReductionError(f"{form} is not a multiple of any slot form")


def rewrite_slots(
    exponents: Sequence[int],
    slot_forms: Sequence[LinearForm],
    slots: Sequence[int],
    negated: Iterable[int] = (),
) -> list[tuple[Fraction, tuple[int, ...]]]:
    """Apply pf_expand to the forms of ``slots`` (0-based) and read every
    resulting term back as a new exponent tuple.

    Slots in ``negated`` enter the expansion as ``-form``; their sign
    ``(-1)^exponent`` is folded into the coefficients, as is ``c^-e`` for an
    output form ``c * slot_form``.
    """
    negated = set(negated)
    sign = 1
    factors: list[Factor] = []
    for slot in slots:
        e = exponents[slot]
        form = slot_forms[slot]
        if slot in negated:
            form = -form
            sign *= (-1) ** e
        factors.append((form, e))

    remaining = list(exponents)
    for slot in slots:
        remaining[slot] = 0

    rewritten = []
    for term in pf_expand(factors):
        new = list(remaining)
        coefficient = sign * term.coefficient
        for form, e in term.factors:
            slot, ratio = locate_slot(form, slot_forms)
            new[slot] += e
            coefficient /= ratio**e
        rewritten.append((coefficient, tuple(new)))
    return rewritten
