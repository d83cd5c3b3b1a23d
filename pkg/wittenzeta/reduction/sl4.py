# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Reduction of ζ_sl4(s1, ..., s6) to MZVs.

    ζ_sl4(s) = Σ m1^-s1 m2^-s2 m3^-s3 (m1+m2)^-s4 (m2+m3)^-s5 (m1+m2+m3)^-s6

Every step picks two or three of these forms, applies partial fractions so
that their sum merges into a form already present, and recurses on the
resulting argument tuples until each is a chain (an MZV), a Mordell–Tornheim
value, or one of the boundary pieces in ``wittenzeta.reduction.limits``.
"""

import logging
from fractions import Fraction
from functools import cache
from typing import Sequence

from wittenzeta.algebra.arith import binomial
from wittenzeta.algebra.mzv import MzvCombination, normalize_integer_args
from wittenzeta.algebra.partial_fractions import rewrite_slots
from wittenzeta.exceptions import PreconditionError, ReductionError
from wittenzeta.reduction.args import (
    REGULAR,
    SL4_FORMS,
    IrregularCase,
    RegularityClass,
    WittenArgs,
    WittenKind,
    as_args,
)
from wittenzeta.reduction.limits import case_A, case_B_limit, tech_lemma
from wittenzeta.reduction.mordell_tornheim import mt
from wittenzeta.trace import record, tracing

logger = logging.getLogger(__name__)

Sl4Tuple = tuple[int, int, int, int, int, int]
Terms = list[tuple[Fraction, Sl4Tuple]]

# zero slots (1-based) of each irregular family, in matching precedence
IRREGULAR_PATTERNS: tuple[tuple[IrregularCase, tuple[int, ...]], ...] = (
    (IrregularCase.IRR3, (1, 2, 3, 4, 5)),
    (IrregularCase.IRR1A, (1, 2, 3, 5)),
    (IrregularCase.IRR1B, (1, 2, 3, 4)),
    (IrregularCase.IRR2A, (2, 3, 4, 5)),
    (IrregularCase.IRR2B, (1, 3, 4, 5)),
    (IrregularCase.IRR2C, (1, 2, 4, 5)),
    (IrregularCase.IRR4A, (1, 2, 5)),
    (IrregularCase.IRR4B, (2, 3, 4)),
    (IrregularCase.IRR5, (1, 2, 3, 6)),
)


def _checked(args) -> Sl4Tuple:
    return as_args(WittenKind.SL4, args).check_convergent().values


def _require(condition: bool, rule: str, values: Sequence[int]) -> None:
    if not condition:
        raise PreconditionError(f"{rule} does not apply to ζ_sl4{tuple(values)}")


def _convergent_terms(terms: Terms, rule: str) -> Terms:
    for _, values in terms:
        if not WittenArgs(WittenKind.SL4, values).is_convergent():
            raise ReductionError(f"{rule} produced the divergent value ζ_sl4{values}")
    return terms


def _combine(terms: Terms) -> MzvCombination:
    return MzvCombination.linear_sum((c, reduce_sl4(values)) for c, values in terms)


def classify(args) -> RegularityClass:
    values = _checked(args)
    for case, zero_slots in IRREGULAR_PATTERNS:
        if all(values[slot - 1] == 0 for slot in zero_slots):
            return RegularityClass(case)
    return REGULAR


def reduce_irregular(args, regularity: RegularityClass | None = None) -> MzvCombination:
    values = _checked(args)
    regularity = regularity or classify(values)
    if regularity.is_regular:
        raise PreconditionError(f"ζ_sl4{values} is regular")
    s1, s2, s3, s4, s5, s6 = values
    record("irregular", values, note=regularity.case.value)

    match regularity.case:
        case IrregularCase.IRR1A:
            return normalize_integer_args((s6, s4, 0))
        case IrregularCase.IRR1B:
            return normalize_integer_args((s6, s5, 0))
        case IrregularCase.IRR2A | IrregularCase.IRR2B | IrregularCase.IRR2C:
            return normalize_integer_args((s6, 0, s1 + s2 + s3))
        case IrregularCase.IRR3:
            return normalize_integer_args((s6, 0, 0))
        case IrregularCase.IRR4A:
            # x1 = m3, x2 = m1+m2 merge into m1+m2+m3
            return _combine(_convergent_terms(rewrite_slots(values, SL4_FORMS, (2, 3)), "irr4a"))
        case IrregularCase.IRR4B:
            return _combine(step_ii(values))
        case IrregularCase.IRR5:
            # order m1+m2 against m2+m3; both exceed m2
            return (
                normalize_integer_args((s4, s5, 0))
                + normalize_integer_args((s5, s4, 0))
                + normalize_integer_args((s4 + s5, 0))
            )
    raise ReductionError(f"no closed form for {regularity}")


def step_ii(args) -> Terms:
    """x1 = m1, x2 = m2+m3: leaves s1 = 0 or s5 = 0."""
    values = _checked(args)
    _require(values[0] >= 1 and values[4] >= 1, "step (ii)", values)
    record("step_ii", values)
    return _convergent_terms(rewrite_slots(values, SL4_FORMS, (0, 4)), "step (ii)")


def step_ii1(args) -> MzvCombination:
    values = _checked(args)
    s1, s2, s3, s4, s5, s6 = values
    _require(s5 == 0 and (s1 or s2), "step (ii.1)", values)
    if not classify(values).is_regular:
        raise PreconditionError(f"ζ_sl4{values} is irregular")

    if s1 and s2:
        record("step_ii1_split", values)
        terms = rewrite_slots(values, SL4_FORMS, (0, 1))
        return _combine(_convergent_terms(terms, "step (ii.1)"))

    if s2 == 0:
        # m1 <-> m2 fixes m1+m2 and m1+m2+m3
        record("swap_m1_m2", values, note="s5 = 0")
        values = (s2, s1, s3, s4, s5, s6)
        s1, s2 = s2, s1

    if s3 and s4:
        record("step_ii1_merge", values)
        terms = rewrite_slots(values, SL4_FORMS, (2, 3))
        return _combine(_convergent_terms(terms, "step (ii.1)"))

    if s3 == 0:
        record("chain", values)
        return normalize_integer_args((s6, s4, s2))

    record("mt_base", values)
    return mt((s2, s3, 0), s6)


def step_ii2(args) -> Terms:
    """x1 = m1+m2, x2 = m3; a single pass-through term when s3 or s4 is zero."""
    values = _checked(args)
    s1, s2, s3, s4, s5, s6 = values
    _require(s1 == 0 and s5 >= 1, "step (ii.2)", values)
    if not (s3 and s4):
        return [(Fraction(1), values)]
    record("step_ii2", values)
    return _convergent_terms(rewrite_slots(values, SL4_FORMS, (2, 3)), "step (ii.2)")


def step_ii21(args) -> MzvCombination:
    values = _checked(args)
    s1, s2, s3, s4, s5, s6 = values
    _require(s1 == 0 and s4 == 0 and s5 >= 1 and s6 >= 1 and (s2 or s3), "step (ii.2.1)", values)
    record("step_ii21", values)

    if s2 and s3:
        # m2 + m3 is already a form, so each term is a chain
        terms = _convergent_terms(rewrite_slots(values, SL4_FORMS, (1, 2)), "step (ii.2.1)")
        return MzvCombination.linear_sum(
            (c, normalize_integer_args((t6, t5, t2 + t3))) for c, (_, t2, t3, _, t5, t6) in terms
        )
    return normalize_integer_args((s6, s5, s2 + s3))


def step_ii22(args) -> MzvCombination:
    """x1 = -m2, x2 = m1+m2, x3 = m2+m3 with sum m1+m2+m3."""
    values = _checked(args)
    s1, s2, s3, s4, s5, s6 = values
    _require(s1 == 0 and s3 == 0 and s2 >= 1 and s4 >= 1 and s5 >= 1, "step (ii.2.2)", values)
    record("step_ii22", values)
    terms = rewrite_slots(values, SL4_FORMS, (1, 3, 4), negated=(1,))
    return _combine(_convergent_terms(terms, "step (ii.2.2)"))


def step_ii23(args) -> MzvCombination:
    """x1 = -(m2+m3), x2 = m1+m2+m3 with sum m1.

    Two of the resulting terms diverge. Together they form the truncated
    difference whose limit is case B (s4 >= 2) or minus the technical double sum.
    """
    values = _checked(args)
    s1, s2, s3, s4, s5, s6 = values
    _require(
        s1 == s2 == s3 == 0 and s4 >= 1 and s5 >= 1 and s6 >= 1, "step (ii.2.3)", values
    )
    if s4 < s5:
        # m1 <-> m3 swaps m1+m2 and m2+m3
        record("swap_m1_m3", values)
        s4, s5 = s5, s4
        values = (0, 0, 0, s4, s5, s6)
    record("step_ii23", values)

    pairs: list[tuple[Fraction, MzvCombination]] = []
    boundary: dict[Sl4Tuple, Fraction] = {}
    for c, (t1, _, _, t4, t5, t6) in rewrite_slots(values, SL4_FORMS, (4, 5), negated=(4,)):
        term = (t1, 0, 0, t4, t5, t6)
        if not WittenArgs(WittenKind.SL4, term).is_convergent():
            boundary[term] = boundary.get(term, Fraction(0)) + c
        elif t6 == 0:
            pairs.append((c, case_A(t1, t4, t5)))
        else:
            pairs.append((c, normalize_integer_args((t6, t4, t1))))

    s = s5 + s6 - 1
    scale = binomial(s5 + s6 - 2, s5 - 1) * (-1) ** s5
    expected = {(s, 0, 0, s4, 0, 1): Fraction(scale), (s, 0, 0, s4, 1, 0): Fraction(-scale)}
    if boundary != expected:
        raise ReductionError(f"unexpected divergent terms {boundary} for ζ_sl4{values}")

    limit = case_B_limit(s, s4) if s4 >= 2 else -tech_lemma(s, 1)
    pairs.append((scale, limit))
    return MzvCombination.linear_sum(pairs)


def _reduce(values: Sl4Tuple) -> MzvCombination:
    regularity = classify(values)
    logger.debug("reducing ζ_sl4%s (%s)", values, regularity)
    if not regularity.is_regular:
        return reduce_irregular(values, regularity)

    s1, s2, s3, s4, s5, s6 = values
    if s1 and s5:
        return _combine(step_ii(values))
    if s5 == 0:
        return step_ii1(values)
    if s3 and s4:
        return _combine(step_ii2(values))
    if s4 == 0:
        return step_ii21(values)
    if s2:
        return step_ii22(values)
    return step_ii23(values)


_reduce_cached = cache(_reduce)


def reduce_sl4(args) -> MzvCombination:
    """ζ_sl4 at nonnegative integers as a canonical MZV combination."""
    values = _checked(args)
    if tracing():
        return _reduce(values)
    return _reduce_cached(values)
