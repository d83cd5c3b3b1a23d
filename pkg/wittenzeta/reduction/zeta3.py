# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""ζ_3(s1, ..., s7) with the extra form m1+m3 in slot 6.

(m1+m2) + (m2+m3) + (m1+m3) = 2(m1+m2+m3), so one partial-fraction step over
slots 4..6 leaves a zero in one of them, and a permutation of m1, m2, m3
turns the result into a ζ_sl4 value.
"""

import logging
from fractions import Fraction
from functools import cache

from wittenzeta.algebra.mzv import MzvCombination
from wittenzeta.algebra.partial_fractions import rewrite_slots
from wittenzeta.exceptions import PreconditionError
from wittenzeta.reduction.args import ZETA3_FORMS, WittenKind, as_args
from wittenzeta.reduction.sl4 import reduce_sl4
from wittenzeta.trace import record, tracing

logger = logging.getLogger(__name__)

Zeta3Tuple = tuple[int, int, int, int, int, int, int]


def step_i(args) -> list[tuple[Fraction, Zeta3Tuple]]:
    values = as_args(WittenKind.ZETA3, args).check_convergent().values
    if not all(values[3:6]):
        return [(Fraction(1), values)]
    record("step_i", values)
    # the merged form 2(m1+m2+m3) lands in slot 7 with ratio 2
    return rewrite_slots(values, ZETA3_FORMS, (3, 4, 5))


def zeta3_symmetrize(args) -> tuple[int, ...]:
    values = as_args(WittenKind.ZETA3, args).values
    s1, s2, s3, s4, s5, s6, s7 = values
    if s6 == 0:
        return (s1, s2, s3, s4, s5, s7)
    if s4 == 0:
        # m2 <-> m3 carries m1+m3 to m1+m2
        record("swap_m2_m3", values)
        return (s1, s3, s2, s6, s5, s7)
    if s5 == 0:
        # m1 <-> m2 carries m1+m3 to m2+m3
        record("swap_m1_m2", values)
        return (s2, s1, s3, s4, s6, s7)
    raise PreconditionError(f"ζ_3{values} has no zero among s4, s5, s6")


def _reduce(values: Zeta3Tuple) -> MzvCombination:
    logger.debug("reducing ζ_3%s", values)
    return MzvCombination.linear_sum(
        (c, reduce_sl4(zeta3_symmetrize(term))) for c, term in step_i(values)
    )


_reduce_cached = cache(_reduce)


def reduce_zeta3(args) -> MzvCombination:
    values = as_args(WittenKind.ZETA3, args).check_convergent().values
    if tracing():
        return _reduce(values)
    return _reduce_cached(values)
