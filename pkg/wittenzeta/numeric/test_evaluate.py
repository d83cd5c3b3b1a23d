# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

from unittest import TestCase

import mpmath as mp

from wittenzeta.algebra.mzv import MzvCombination
from wittenzeta.constants import NumericMethod
from wittenzeta.exceptions import PrecisionError, PreconditionError
from wittenzeta.numeric.evaluate import (
    MAX_EVAL_DEPTH,
    NumericResult,
    dual,
    eval_combo,
    eval_mzv,
    index_to_word,
    series_tail_bound,
    word_to_exponents,
)
from wittenzeta.tests.test_helpers import NumericAssertions, combo, patched_env


class TestWords(TestCase):
    def test_index_to_word(self):
        """ζ(2,1) is x0 x1 x1."""
        self.assertEqual(index_to_word((2, 1)), (0, 1, 1))
        self.assertEqual(index_to_word((3,)), (0, 0, 1))

    def test_round_trip(self):
        """word_to_exponents inverts index_to_word."""
        for index in ((2,), (3, 1, 2), (2, 2, 2, 1)):
            self.assertEqual(word_to_exponents(index_to_word(index)), index)

    def test_duality(self):
        """The dual of ζ(3) is ζ(2,1)."""
        self.assertEqual(word_to_exponents(dual(index_to_word((3,)))), (2, 1))
        self.assertEqual(dual(dual((0, 1, 0, 1))), (0, 1, 0, 1))

    def test_word_must_end_in_x1(self):
        """x1 x0 is no MZV word."""
        with self.assertRaises(PreconditionError):
            word_to_exponents((1, 0))

    def test_tail_bound_decreases(self):
        """Doubling the series length shrinks the tail."""
        self.assertLess(series_tail_bound(3, 128), series_tail_bound(3, 64))


class TestEvalMzv(NumericAssertions, TestCase):
    def test_single_zeta(self):
        """Depth one goes straight to mpmath."""
        with mp.workdps(50):
            self.assertClose(eval_mzv((2,)), mp.pi**2 / 6, 1e-30)

    def test_euler_sum(self):
        """ζ(2,1) = ζ(3)."""
        result = eval_mzv((2, 1))
        self.assertClose(result, mp.zeta(3), 1e-12)
        self.assertLessEqual(result.error_bound, 1e-12)
        self.assertEqual(result.method, NumericMethod.ACCELERATED_SERIES)

    def test_depth_two_closed_forms(self):
        """ζ(3,1) = ζ(4)/4 and ζ(2,2) = 3ζ(4)/4."""
        self.assertClose(eval_mzv((3, 1)), mp.zeta(4) / 4, 1e-12)
        self.assertClose(eval_mzv((2, 2)), 3 * mp.zeta(4) / 4, 1e-12)

    def test_higher_depth(self):
        """ζ(2,1,1) = ζ(4), ζ(2,2,2) = π^6/7! and ζ(3,1,3,1) = 2π^8/10!."""
        self.assertClose(eval_mzv((2, 1, 1)), mp.zeta(4), 1e-12)
        self.assertClose(eval_mzv((2, 2, 2)), mp.pi**6 / mp.factorial(7), 1e-12)
        self.assertClose(eval_mzv((3, 1, 3, 1)), 2 * mp.pi**8 / mp.factorial(10), 1e-12)

    def test_tighter_target(self):
        """Asking for 1e-25 is honoured."""
        result = eval_mzv((2, 1), 1e-25)
        self.assertLessEqual(result.error_bound, 1e-25)
        with mp.workdps(50):
            self.assertClose(result, mp.zeta(3), 1e-25)

    def test_rejects_non_canonical(self):
        """Divergent, nonpositive and oversized indices are refused."""
        for index in ((1, 2), (3, 0), (2,) * (MAX_EVAL_DEPTH + 1), (15,)):
            with self.assertRaises(PreconditionError, msg=str(index)):
                eval_mzv(index)

    def test_precision_error(self):
        """A target out of reach of max_series_terms raises with the best bound."""
        with patched_env(max_series_terms=16):
            with self.assertRaises(PrecisionError) as ctx:
                eval_mzv((2, 1), 1e-30)
        self.assertIsNotNone(ctx.exception.best_error)
        self.assertGreater(ctx.exception.best_error, 1e-30)


class TestEvalCombo(NumericAssertions, TestCase):
    def test_empty_combination_is_exact(self):
        """0 needs no evaluation."""
        result = eval_combo(MzvCombination())
        self.assertEqual(result.value, 0)
        self.assertEqual(result.method, NumericMethod.EXACT)

    def test_cancellation(self):
        """2ζ(2,1) - 2ζ(3) vanishes numerically."""
        result = eval_combo(combo((2, (2, 1)), (-2, (3,))))
        self.assertClose(result, 0, 1e-12)

    def test_error_budget(self):
        """The bound accounts for every coefficient."""
        result = eval_combo(combo((1000, (2, 1)), (-1, (5,))), 1e-12)
        self.assertLessEqual(result.error_bound, 1e-12)
        self.assertClose(result, 1000 * mp.zeta(3) - mp.zeta(5), 1e-10)


class TestNumericResult(TestCase):
    def test_agreement_uses_both_bounds(self):
        """|a - b| <= e_a + e_b + tolerance."""
        a = NumericResult(mp.mpf("1.0"), mp.mpf("1e-6"), NumericMethod.ACCELERATED_SERIES)
        b = NumericResult(mp.mpf("1.0000015"), mp.mpf("1e-6"), NumericMethod.TRUNCATED_SUM)
        self.assertTrue(a.agrees_with(b))
        self.assertFalse(a.agrees_with(1.0000015))
        self.assertTrue(a.agrees_with(1.0000015, tolerance=1e-6))

    def test_format_keeps_zeros(self):
        """Fixed number of significant digits."""
        result = NumericResult(mp.mpf("0.5"), mp.mpf(0), NumericMethod.EXACT)
        self.assertEqual(result.format(5), "0.50000")
        self.assertEqual(float(result), 0.5)
