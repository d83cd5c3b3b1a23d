# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Test helpers shared by the reduction, numeric and CLI suites.

This module provides:
- Seeded generators for convergent argument tuples
- An assertClose mixin for NumericResult and mpf comparisons
- Builders for MZV combinations and Witten arguments
- A context manager that swaps the environment-driven settings
"""

import os
from contextlib import contextmanager
from fractions import Fraction
from random import Random
from unittest.mock import patch

import mpmath as mp

from wittenzeta.algebra.mzv import MzvCombination, canonicalize
from wittenzeta.numeric.evaluate import NumericResult, eval_combo
from wittenzeta.reduction.args import WittenArgs, WittenKind, random_args
from wittenzeta.settings import get_settings

TEST_SEED = 20250401


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def sl4(*values):
    return WittenArgs(WittenKind.SL4, values)


def zeta3(*values):
    return WittenArgs(WittenKind.ZETA3, values)


def combo(*terms):
    """combo((2, (3,)), (Fraction(-1, 2), (2, 1))) is 2ζ(3) - 1/2 ζ(2,1)."""
    return MzvCombination.linear_sum(
        (Fraction(c), MzvCombination.zeta(*index)) for c, index in terms
    )


def zeta2_squared():
    """ζ(2)^2 expanded by stuffle: 2ζ(2,2) + ζ(4)."""
    return canonicalize(MzvCombination.zeta(2) * MzvCombination.zeta(2))


# ---------------------------------------------------------------------------
# random tuples
# ---------------------------------------------------------------------------


def make_rng(offset=0):
    return Random(TEST_SEED + offset)


def random_tuples(kind, count, max_weight=7, offset=0):
    rng = make_rng(offset)
    return [random_args(rng, kind, max_weight) for _ in range(count)]


# ---------------------------------------------------------------------------
# assertions
# ---------------------------------------------------------------------------


class NumericAssertions:
    """Mixin for unittest.TestCase."""

    def assertClose(self, actual, expected, tolerance=1e-12, msg=None):
        a = actual.value if isinstance(actual, NumericResult) else mp.mpf(actual)
        b = expected.value if isinstance(expected, NumericResult) else mp.mpf(expected)
        difference = abs(a - b)
        if difference > tolerance:
            standard = f"{mp.nstr(a, 20)} != {mp.nstr(b, 20)} (diff {mp.nstr(difference, 3)})"
            self.fail(self._formatMessage(msg, standard))

    def assertSameValue(self, left, right, tolerance=1e-12, msg=None):
        """Two MZV combinations agree numerically."""
        self.assertClose(eval_combo(left), eval_combo(right), tolerance, msg)


# ---------------------------------------------------------------------------
# settings
# ---------------------------------------------------------------------------


@contextmanager
def patched_env(**values):
    """Set WITTENZETA_* variables and rebuild the settings inside the block."""
    env = {f"WITTENZETA_{name.upper()}": str(value) for name, value in values.items()}
    get_settings.cache_clear()
    try:
        with patch.dict(os.environ, env):
            yield
    finally:
        get_settings.cache_clear()
