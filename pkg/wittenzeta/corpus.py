# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Published closed forms of ζ_sl4 and ζ_3 values used by ``verify paper``.

A closed form is a sum of rational multiples of products of MZVs, e.g.
``((Fraction(2, 5), ((2,), (2,))),)`` is 2/5·ζ(2)². Where a decimal is quoted
it is compared as printed, so its last digit bounds the tolerance that can pass.
"""

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterator

import mpmath as mp

from wittenzeta.constants import DEFAULT_TARGET_ERROR, NumericMethod
from wittenzeta.numeric.evaluate import NumericResult, eval_mzv
from wittenzeta.reduction.args import WittenArgs, WittenKind
from wittenzeta.settings import get_settings

ClosedFormTerm = tuple[Q, tuple[tuple[int, ...], ...]]

Z2SQ = ((2,), (2,))
Z2_6 = ((2,),) * 6


@dataclass(frozen=True)
class Golden:
    kind: WittenKind
    args: tuple[int, ...]
    closed_form: tuple[ClosedFormTerm, ...]
    decimal: str | None = None

    @property
    def witten_args(self) -> WittenArgs:
        return WittenArgs(self.kind, self.args)

    @property
    def weight(self) -> int:
        return sum(self.args)

    def closed_form_value(self, target_error: float = DEFAULT_TARGET_ERROR) -> NumericResult:
        with mp.workdps(get_settings().working_dps):
            value, error = mp.mpf(0), mp.mpf(0)
            for c, factors in self.closed_form:
                product, product_error = mp.mpf(1), mp.mpf(0)
                for index in factors:
                    result = eval_mzv(index, target_error)
                    # |ab - a'b'| <= |a| e_b + |b'| e_a
                    bound = abs(result.value) + result.error_bound
                    product_error = abs(product) * result.error_bound + bound * product_error
                    product *= result.value
                coefficient = mp.mpf(c.numerator) / c.denominator
                value += coefficient * product
                error += abs(coefficient) * product_error
        return NumericResult(value, error, NumericMethod.ACCELERATED_SERIES)

    def closed_form_text(self) -> str:
        parts = []
        for c, factors in self.closed_form:
            body = "".join(f"ζ({','.join(map(str, index))})" for index in factors)
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}" if abs(c) == 1 else f"{sign} {abs(c)}*{body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else f"-{text[2:]}"

    def __str__(self):
        return f"{self.witten_args} = {self.closed_form_text()}"


def _sl4(closed_form, *tuples, decimal=None) -> list[Golden]:
    return [Golden(WittenKind.SL4, args, tuple(closed_form), decimal) for args in tuples]


# weight 4: all 34 convergent tuples, 16 distinct values, the first seven irregular
WEIGHT_FOUR = [
    *_sl4([(Q(1, 2), ((2,),)), (Q(-3, 2), ((3,),)), (Q(2, 5), Z2SQ)], (0, 0, 0, 0, 0, 4)),
    *_sl4([(Q(3), ((3,),)), (Q(-1), Z2SQ)], (0, 0, 0, 2, 2, 0)),
    *_sl4(
        [(Q(1), ((2,),)), (Q(-1), ((3,),)), (Q(-1, 10), Z2SQ)],
        (0, 0, 0, 0, 1, 3),
        (0, 0, 0, 1, 0, 3),
    ),
    *_sl4([(Q(1), ((3,),)), (Q(-3, 10), Z2SQ)], (0, 0, 0, 0, 2, 2), (0, 0, 0, 2, 0, 2)),
    *_sl4([(Q(1), ((3,),)), (Q(-1, 5), Z2SQ)], (1, 0, 0, 0, 1, 2), (0, 0, 1, 1, 0, 2)),
    *_sl4([(Q(2), ((3,),)), (Q(-1, 2), Z2SQ)], (1, 0, 0, 0, 2, 1), (0, 0, 1, 2, 0, 1)),
    *_sl4(
        [(Q(2), ((3,),)), (Q(-1), ((2,),)), (Q(-1, 10), Z2SQ)],
        (0, 0, 1, 0, 0, 3),
        (0, 1, 0, 0, 0, 3),
        (1, 0, 0, 0, 0, 3),
    ),
    *_sl4([(Q(7, 10), Z2SQ)], (0, 1, 0, 1, 1, 1), (1, 0, 0, 1, 2, 0), (0, 0, 1, 2, 1, 0)),
    *_sl4([(Q(12, 5), Z2SQ)], (1, 1, 1, 0, 0, 1)),
    *_sl4([(Q(1, 10), Z2SQ)], (0, 0, 0, 1, 1, 2)),
    *_sl4([(Q(1, 5), Z2SQ)], (0, 0, 0, 1, 2, 1), (0, 0, 0, 2, 1, 1)),
    *_sl4([(Q(17, 10), Z2SQ)], (1, 0, 1, 1, 1, 0)),
    *_sl4([(Q(4, 5), Z2SQ)], (1, 0, 1, 0, 0, 2), (0, 1, 1, 0, 0, 2), (1, 1, 0, 0, 0, 2)),
    *_sl4([(Q(1, 2), Z2SQ)], (1, 0, 0, 1, 1, 1), (0, 0, 1, 1, 1, 1)),
    *_sl4(
        [(Q(2, 5), Z2SQ)],
        (0, 1, 0, 1, 0, 2),
        (1, 0, 0, 1, 0, 2),
        (0, 1, 0, 0, 1, 2),
        (0, 0, 1, 0, 1, 2),
    ),
    *_sl4(
        [(Q(6, 5), Z2SQ)],
        (1, 1, 0, 0, 1, 1),
        (1, 0, 1, 1, 0, 1),
        (1, 0, 1, 0, 1, 1),
        (0, 1, 1, 1, 0, 1),
    ),
]

WEIGHT_FOUR_TUPLES = 34
WEIGHT_FOUR_DISTINCT = 16
WEIGHT_FOUR_IRREGULAR_DISTINCT = 7

HIGHER_WEIGHT = [
    *_sl4(
        [(Q(5, 2), ((5,),)), (Q(-1), ((2,), (3,)))],
        (1, 1, 0, 1, 1, 1),
        (0, 1, 1, 1, 1, 1),
        decimal=".6150150376",
    ),
    *_sl4([(Q(-3, 2), ((5,),)), (Q(1), ((2,), (3,)))], (1, 0, 1, 1, 1, 1), decimal=".4219127176"),
    *_sl4(
        [(Q(-62, 105), ((2,), (2,), (2,))), (Q(2), ((3,), (3,)))],
        (1, 1, 1, 1, 1, 1),
        decimal=".2617453534",
    ),
    *_sl4([(Q(7, 4), ((7,),)), (Q(-1), ((2,), (5,)))], (1, 1, 1, 1, 1, 2)),
    Golden(
        WittenKind.ZETA3,
        (1, 1, 1, 1, 1, 1, 1),
        ((Q(21, 8), ((7,),)), (Q(-3, 2), ((2,), (5,)))),
        ".08840016918",
    ),
    *_sl4([(Q(368, 875875), Z2_6)], (2, 2, 2, 2, 2, 2), decimal=".0083233212"),
    *_sl4(
        [
            (Q(1), ((2,), (8, 2))),
            (Q(811324, 238875), Z2_6),
            (Q(-5, 2), ((2,), (5,), (5,))),
            (Q(-37, 2), ((3,), (9,))),
            (Q(-35), ((5,), (7,))),
            (Q(-2), ((7,), (2,), (3,))),
            (Q(37, 4), ((10, 2),)),
        ],
        (1, 2, 3, 3, 2, 1),
        decimal=".0129650292",
    ),
    *_sl4(
        [
            (Q(10), ((2,), (8, 2))),
            (Q(-120112, 53625), Z2_6),
            (Q(-6), ((2,), (5,), (5,))),
            (Q(44), ((3,), (9,))),
            (Q(40), ((5,), (7,))),
            (Q(-20), ((7,), (2,), (3,))),
            (Q(-22), ((10, 2),)),
        ],
        (3, 2, 1, 1, 2, 3),
        decimal=".0056078053",
    ),
]

# weights past 8 take noticeably longer to reduce
SLOW_WEIGHT = 9


def goldens(include_slow: bool = True) -> Iterator[Golden]:
    for golden in (*WEIGHT_FOUR, *HIGHER_WEIGHT):
        if include_slow or golden.weight < SLOW_WEIGHT:
            yield golden


def decimal_tolerance(decimal: str) -> float:
    """One unit in the last printed place; quoted decimals are truncated."""
    return 10.0 ** -len(decimal.split(".")[1])
