# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""High-precision values of canonical MZVs.

ζ(s1, ..., sd) is the iterated integral over 1 > t1 > ... > tn > 0 of the word
x0^(s1-1) x1 ... x0^(sd-1) x1 with x0 = dt/t and x1 = dt/(1-t). Splitting the
simplex at 1/2 gives

    ζ(w) = Σ_k Li(dual(w[:k]))(1/2) * Li(w[k:])(1/2)

where dual reverses a word and swaps its letters. Multiple polylogarithms at
1/2 converge geometrically, so a few hundred terms reach 10^-40.
"""

import logging
import math
from dataclasses import dataclass
from functools import cache
from typing import TYPE_CHECKING

import mpmath as mp

from wittenzeta.algebra.mzv import MzvIndex
from wittenzeta.constants import (
    DEFAULT_TARGET_ERROR,
    MAX_PRECISION_RETRIES,
    NumericMethod,
)
from wittenzeta.exceptions import PrecisionError, PreconditionError
from wittenzeta.settings import get_settings

if TYPE_CHECKING:
    from wittenzeta.algebra.mzv import MzvCombination

logger = logging.getLogger(__name__)

MAX_EVAL_DEPTH = 5
MAX_EVAL_WEIGHT = 14

Word = tuple[int, ...]


@dataclass(frozen=True)
class NumericResult:
    value: mp.mpf
    error_bound: mp.mpf
    method: NumericMethod

    def __float__(self):
        return float(self.value)

    def agrees_with(self, other: "NumericResult | float", tolerance: float = 0.0) -> bool:
        """|a - b| within both error bounds plus ``tolerance``."""
        if isinstance(other, NumericResult):
            slack = self.error_bound + other.error_bound
            other = other.value
        else:
            slack = self.error_bound
        return abs(self.value - other) <= slack + tolerance

    def format(self, digits: int = 15) -> str:
        return mp.nstr(self.value, digits, strip_zeros=False)

    def __str__(self):
        return f"{self.format()} ± {mp.nstr(self.error_bound, 3)}"


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


def index_to_word(index: MzvIndex) -> Word:
    word: list[int] = []
    for s in index:
        word.extend([0] * (s - 1))
        word.append(1)
    return tuple(word)


def word_to_exponents(word: Word) -> tuple[int, ...]:
    """Inverse of index_to_word; the word must end in x1."""
    exponents, run = [], 1
    for letter in word:
        if letter:
            exponents.append(run)
            run = 1
        else:
            run += 1
    if run != 1:
        raise PreconditionError(f"word {word} does not end in x1")
    return tuple(exponents)


def dual(word: Word) -> Word:
    return tuple(1 - letter for letter in reversed(word))


# ---------------------------------------------------------------------------
# polylogarithms at 1/2
# ---------------------------------------------------------------------------


def series_tail_bound(depth: int, terms: int) -> float:
    """Bound on Σ_{m > terms} 2^-m Π (partial harmonic sums) for a depth-``depth`` series."""
    return 2.0**-terms * (2 + math.log(terms)) ** depth


@cache
def _polylog_half(exponents: tuple[int, ...], terms: int, dps: int) -> mp.mpf:
    # Li_{n1..nr}(1/2) = Σ_{m1 > ... > mr} 2^-m1 m1^-n1 ... mr^-nr, innermost first
    with mp.workdps(dps):
        ms = [mp.mpf(m) for m in range(1, terms + 1)]
        inner = [m ** -exponents[-1] for m in ms]
        for n in reversed(exponents[:-1]):
            running, outer = mp.mpf(0), []
            for m, value in zip(ms, inner):
                outer.append(running * m**-n)
                running += value
            inner = outer
        half, weight, total = mp.mpf(1) / 2, mp.mpf(1), mp.mpf(0)
        for value in inner:
            weight *= half
            total += weight * value
        return +total


def _hoelder_sum(word: Word, terms: int, dps: int) -> tuple[mp.mpf, mp.mpf]:
    value, error = mp.mpf(0), mp.mpf(0)
    for k in range(len(word) + 1):
        left, right = dual(word[:k]), word[k:]
        a = _polylog_half(word_to_exponents(left), terms, dps) if left else mp.mpf(1)
        b = _polylog_half(word_to_exponents(right), terms, dps) if right else mp.mpf(1)
        ea = series_tail_bound(len(word_to_exponents(left)), terms) if left else 0.0
        eb = series_tail_bound(len(word_to_exponents(right)), terms) if right else 0.0
        value += a * b
        error += abs(a) * eb + abs(b) * ea + ea * eb
    return value, error


def _initial_terms(target_error: float, weight: int) -> int:
    return max(32, math.ceil(-math.log2(target_error)) + 2 * weight + 8)


# ---------------------------------------------------------------------------
# public api
# ---------------------------------------------------------------------------


def eval_mzv(index, target_error: float = DEFAULT_TARGET_ERROR) -> NumericResult:
    index = MzvIndex.of(index)
    if not index.is_canonical():
        raise PreconditionError(f"{index} is not a canonical MZV")
    if index.depth > MAX_EVAL_DEPTH or index.weight > MAX_EVAL_WEIGHT:
        raise PreconditionError(
            f"{index} exceeds depth {MAX_EVAL_DEPTH} or weight {MAX_EVAL_WEIGHT}"
        )
    settings = get_settings()
    dps = max(settings.working_dps, math.ceil(-math.log10(target_error)) + 10)
    return _eval_index(index.exponents, float(target_error), dps, settings.max_series_terms)


@cache
def _eval_index(
    exponents: tuple[int, ...], target_error: float, dps: int, max_terms: int
) -> NumericResult:
    rounding = mp.mpf(10) ** (-dps + 5)
    if len(exponents) == 1:
        with mp.workdps(dps):
            value = +mp.zeta(exponents[0])
        return NumericResult(value, rounding, NumericMethod.ACCELERATED_SERIES)

    word = index_to_word(MzvIndex(exponents))
    terms = min(_initial_terms(target_error, sum(exponents)), max_terms)
    best = None
    for attempt in range(1 + MAX_PRECISION_RETRIES):
        with mp.workdps(dps):
            value, error = _hoelder_sum(word, terms, dps)
            error += rounding * (len(word) + 1)
        best = error if best is None else min(best, error)
        if error <= target_error:
            return NumericResult(value, mp.mpf(error), NumericMethod.ACCELERATED_SERIES)
        if attempt < MAX_PRECISION_RETRIES and terms < max_terms:
            terms = min(2 * terms, max_terms)
            logger.info("ζ%s: raising series length to %d", exponents, terms)
            continue
        break
    raise PrecisionError(f"ζ{exponents} cannot reach {target_error:g}", best)


def eval_combo(
    combo: "MzvCombination", target_error: float = DEFAULT_TARGET_ERROR
) -> NumericResult:
    pairs = combo.to_pairs()
    if not pairs:
        return NumericResult(mp.mpf(0), mp.mpf(0), NumericMethod.EXACT)

    scale = sum(abs(c) for c, _ in pairs)
    per_term = target_error / float(scale)
    settings = get_settings()
    with mp.workdps(settings.working_dps):
        value, error = mp.mpf(0), mp.mpf(0)
        for c, exponents in pairs:
            result = eval_mzv(exponents, per_term)
            coefficient = mp.mpf(c.numerator) / c.denominator
            value += coefficient * result.value
            error += abs(coefficient) * result.error_bound
    return NumericResult(value, error, NumericMethod.ACCELERATED_SERIES)
