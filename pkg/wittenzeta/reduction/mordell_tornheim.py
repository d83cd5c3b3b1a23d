# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Mordell–Tornheim sums ζ_MT(s1, ..., sd; s) of depth 2 and 3.

Positive parts are eliminated with one partial-fraction step whose merged
form is the outer sum m1+...+md. What is left has zero parts, which are
counted: the zero variables with fixed total n - m contribute C(n-m-1, z-1).
"""

import logging
from fractions import Fraction
from functools import cache

from wittenzeta.algebra.arith import RatPolynomial, binomial
from wittenzeta.algebra.mzv import MzvCombination, normalize_integer_args
from wittenzeta.algebra.partial_fractions import LinearForm, pf_expand, rewrite_slots
from wittenzeta.exceptions import PreconditionError
from wittenzeta.reduction.args import WittenKind, as_args, mt_forms
from wittenzeta.trace import record, tracing

logger = logging.getLogger(__name__)


def reduce_mt(args) -> MzvCombination:
    """ζ_MT as a canonical MZV combination; ``args`` is ``(s1, ..., sd, s)``."""
    args = as_args(WittenKind.MT, args).check_convergent()
    if tracing():
        return _reduce(args.values)
    return _reduce_cached(args.values)


def mt(parts, outer: int) -> MzvCombination:
    return reduce_mt((*parts, outer))


def _reduce(values: tuple[int, ...]) -> MzvCombination:
    *parts, outer = values
    positive = [i for i, p in enumerate(parts) if p]
    zero_count = len(parts) - len(positive)
    logger.debug("reducing ζ_MT%s", values)

    if len(positive) >= 2 and not zero_count:
        record("mt_partial_fractions", values)
        terms = rewrite_slots(values, mt_forms(len(parts)), positive)
        return MzvCombination.linear_sum((c, reduce_mt(v)) for c, v in terms)

    if len(positive) == 2:
        record("mt_chain", values)
        b, c = (parts[i] for i in positive)
        return _two_positive_one_zero(b, c, outer)

    record("mt_counting", values)
    if not positive:
        # m1 + ... + mz = n has C(n-1, z-1) solutions: split off the last zero as m
        return mt_base_counting(zero_count - 1, 0, outer)
    return mt_base_counting(zero_count, parts[positive[0]], outer)


_reduce_cached = cache(_reduce)


def _two_positive_one_zero(b: int, c: int, outer: int) -> MzvCombination:
    # Σ m_b^-b m_c^-c (m_0 + m_b + m_c)^-s: after splitting 1/(m_b^b m_c^c) every
    # term is a chain outer > m_b + m_c > (m_b or m_c)
    x_b, x_c = LinearForm.of(1, 0), LinearForm.of(0, 1)
    pairs = []
    for term in pf_expand([(x_b, b), (x_c, c)]):
        exponents = dict(term.factors)
        merged = exponents.pop(x_b + x_c)
        (remaining,) = exponents.values()
        pairs.append((term.coefficient, normalize_integer_args((outer, merged, remaining))))
    return MzvCombination.linear_sum(pairs)


def mt_base_counting(zero_count: int, last_part: int, outer: int) -> MzvCombination:
    """Σ_{n>m} C(n-m-1, z-1) m^-p n^-s, rewritten through integer-argument MZVs.

    ``last_part`` may be 0, which also covers sums with no positive part at all.
    """
    if not 1 <= zero_count <= 3:
        raise PreconditionError(f"zero count must be in 1..3, got {zero_count}")
    if last_part < 0:
        raise PreconditionError(f"last part must be nonnegative, got {last_part}")
    # C(x-1, z-1) with x = n - m
    count = RatPolynomial.binomial(zero_count - 1).shift(-1)

    # (n - m)^e = Σ_i C(e, i) n^(e-i) (-m)^i
    pairs: list[tuple[Fraction, MzvCombination]] = []
    for e, c in count.items():
        for i in range(e + 1):
            coefficient = c * binomial(e, i) * (-1) ** i
            pairs.append(
                (coefficient, normalize_integer_args((outer - (e - i), last_part - i)))
            )
    return MzvCombination.linear_sum(pairs)
