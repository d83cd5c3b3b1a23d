# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

from fractions import Fraction
from unittest import TestCase

from wittenzeta.algebra.mzv import (
    MzvCombination,
    MzvIndex,
    MzvSymbol,
    canonicalize,
    convergence_violations,
    euler_identity_check,
    expand_regularized,
    mzv_is_convergent,
    normalize_integer_args,
    stuffle,
    stuffle_words,
)
from wittenzeta.exceptions import (
    DivergentError,
    DivergentResidueError,
    PreconditionError,
    RegularizationError,
)
from wittenzeta.tests.test_helpers import NumericAssertions, combo

Z = MzvCombination.zeta
R = MzvCombination.regularized


class TestMzvIndex(TestCase):
    def test_weight_and_depth(self):
        """ζ(3,1,2) has weight 6 and depth 3."""
        index = MzvIndex((3, 1, 2))
        self.assertEqual((index.weight, index.depth), (6, 3))
        self.assertEqual(str(index), "ζ(3,1,2)")

    def test_empty_index_rejected(self):
        """An MZV needs at least one exponent."""
        with self.assertRaises(ValueError):
            MzvIndex(())

    def test_convergence(self):
        """Every prefix must exceed its length."""
        self.assertTrue(mzv_is_convergent((2, 1)))
        self.assertTrue(mzv_is_convergent((3, 0)))
        self.assertFalse(mzv_is_convergent((1, 2)))
        self.assertFalse(mzv_is_convergent((2, 0, 0)))
        self.assertEqual(convergence_violations((1, 1)), ["s1 > 1", "s1+s2 > 2"])

    def test_canonical_needs_positive_entries(self):
        """ζ(3,0) converges but is not canonical."""
        self.assertFalse(MzvIndex((3, 0)).is_canonical())
        self.assertTrue(MzvIndex((3, 1)).is_canonical())

    def test_regularized_symbol_head(self):
        """Only ζ̄(1, ...) symbols exist."""
        with self.assertRaises(RegularizationError):
            MzvSymbol(MzvIndex((2, 1)), regularized=True)


class TestCombination(TestCase):
    def test_cancellation_drops_terms(self):
        """ζ(2) - ζ(2) is the empty combination."""
        zero = Z(2) - Z(2)
        self.assertTrue(zero.is_zero())
        self.assertEqual(str(zero), "0")

    def test_linear_sum_collects_coefficients(self):
        """Equal monomials add up and report through coefficient_of."""
        total = combo((2, (3,)), (Fraction(-1, 2), (3,)), (1, (2, 1)))
        self.assertEqual(total.coefficient_of(3), Fraction(3, 2))
        self.assertEqual(total.coefficient_of(2, 1), 1)
        self.assertEqual(total.coefficient_of(4), 0)

    def test_products_are_commutative(self):
        """ζ(2)ζ(3) and ζ(3)ζ(2) are the same monomial."""
        self.assertEqual(Z(2) * Z(3), Z(3) * Z(2))
        self.assertEqual(hash(Z(2) * Z(3)), hash(Z(3) * Z(2)))

    def test_strata(self):
        """Largest depth per weight."""
        total = combo((1, (5,)), (1, (3, 2)), (1, (2, 1, 1, 1)), (1, (2,)))
        self.assertEqual(total.strata(), {2: 1, 5: 4})

    def test_to_pairs_rejects_t_powers(self):
        """Only canonical combinations serialize."""
        with self.assertRaises(DivergentResidueError):
            (Z(2) * MzvCombination.t_power(1)).to_pairs()

    def test_from_words_marks_regularized(self):
        """A divergent word led by 1 becomes ζ̄."""
        words = MzvCombination.from_words({(1, 2): 1, (2, 1): 1})
        self.assertTrue(words.has_regularized())
        self.assertEqual(words.coefficient_of(2, 1), 1)


class TestStuffle(TestCase):
    def test_depth_one(self):
        """ζ(s) * ζ(t) = ζ(s,t) + ζ(t,s) + ζ(s+t)."""
        self.assertEqual(stuffle_words((2,), (3,)), {(2, 3): 1, (3, 2): 1, (5,): 1})
        self.assertEqual(stuffle_words((1,), (1,)), {(1, 1): 2, (2,): 1})

    def test_word_count(self):
        """(2,1) * (3) has three insertion points and two merges."""
        words = stuffle_words((2, 1), (3,))
        self.assertEqual(
            words, {(3, 2, 1): 1, (2, 3, 1): 1, (2, 1, 3): 1, (5, 1): 1, (2, 4): 1}
        )

    def test_two_regularized_operands(self):
        """ζ̄ * ζ̄ is not defined."""
        with self.assertRaises(RegularizationError):
            stuffle((1,), (1, 2))

    def test_regularized_operand(self):
        """ζ̄(1) * ζ(2) keeps ζ̄(1,2) symbolic."""
        product = stuffle((1,), (2,))
        self.assertTrue(product.has_regularized())
        self.assertEqual(product.coefficient_of(2, 1), 1)
        self.assertEqual(product.coefficient_of(3), 1)


class TestNormalize(NumericAssertions, TestCase):
    def test_single_zero(self):
        """Σ_{m1 > m2} m1^-3 = ζ(2) - ζ(3)."""
        self.assertEqual(normalize_integer_args((3, 0)), combo((1, (2,)), (-1, (3,))))

    def test_double_zero(self):
        """Σ_{m1 > m2 > m3} m1^-4 = C(m1-1, 2) summed against m1^-4."""
        expected = combo((Fraction(1, 2), (2,)), (Fraction(-3, 2), (3,)), (1, (4,)))
        self.assertEqual(normalize_integer_args((4, 0, 0)), expected)

    def test_inner_zero(self):
        """ζ(3,0,2) counts the free middle variable."""
        self.assertEqual(
            normalize_integer_args((3, 0, 2)), combo((1, (2, 2)), (-1, (3, 1)), (-1, (3, 2)))
        )

    def test_positive_index_unchanged(self):
        """Canonical input is returned as is."""
        self.assertEqual(normalize_integer_args((3, 1)), Z(3, 1))

    def test_divergent_input(self):
        """ζ(0, 3) diverges and names the violated prefix."""
        with self.assertRaises(DivergentError) as ctx:
            normalize_integer_args((0, 3))
        self.assertIn("s1 > 1", ctx.exception.violations)


class TestRegularization(TestCase):
    def test_t(self):
        """ζ̄(1) is T."""
        self.assertEqual(expand_regularized(R(1)), MzvCombination.t_power(1))

    def test_head_one(self):
        """ζ̄(1,2) = Tζ(2) - ζ(2,1) - ζ(3)."""
        expected = MzvCombination.t_power(1) * Z(2) - Z(2, 1) - Z(3)
        self.assertEqual(expand_regularized(R(1, 2)), expected)

    def test_canonicalize_products(self):
        """Products are expanded by stuffle."""
        self.assertEqual(canonicalize(Z(2) * Z(3)), Z(2, 3) + Z(3, 2) + Z(5))

    def test_canonicalize_rejects_residue(self):
        """A surviving T is an error."""
        with self.assertRaises(DivergentResidueError):
            canonicalize(MzvCombination.t_power(1) * Z(2))


class TestEulerIdentities(NumericAssertions, TestCase):
    def test_sum_formula(self):
        """ζ(n+1) = Σ_a ζ(1+a, n-a)."""
        for n in range(2, 7):
            self.assertSameValue(*euler_identity_check(n, 1))

    def test_decomposition(self):
        """ζ(s)ζ(t) through binomial sums of double zetas."""
        for s in range(2, 5):
            for t in range(2, 5):
                self.assertSameValue(*euler_identity_check(s, t))

    def test_bad_arguments(self):
        """n = 1 has no sum formula."""
        with self.assertRaises(PreconditionError):
            euler_identity_check(1, 1)
