# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

from fractions import Fraction
from unittest import TestCase

from wittenzeta.algebra.mzv import MzvCombination, canonicalize, normalize_integer_args
from wittenzeta.exceptions import DivergentError, PreconditionError
from wittenzeta.reduction.args import (
    REGULAR,
    IrregularCase,
    WittenKind,
    enumerate_convergent,
    sl4_as_zeta3,
)
from wittenzeta.reduction.limits import (
    case_A,
    case_B_limit,
    tech_lemma,
    tech_lemma_regularized,
    tech_lemma_residue,
)
from wittenzeta.reduction.sl4 import (
    IRREGULAR_PATTERNS,
    classify,
    reduce_irregular,
    reduce_sl4,
    step_ii,
    step_ii1,
    step_ii2,
    step_ii22,
    step_ii23,
)
from wittenzeta.reduction.zeta3 import reduce_zeta3, step_i, zeta3_symmetrize
from wittenzeta.tests.test_helpers import NumericAssertions, sl4, zeta2_squared
from wittenzeta.trace import record_trace, tracing

Z = MzvCombination.zeta


class TestClassify(TestCase):
    def test_patterns(self):
        """One representative per irregular family."""
        cases = {
            (0, 0, 0, 0, 0, 4): IrregularCase.IRR3,
            (0, 0, 0, 1, 0, 3): IrregularCase.IRR1A,
            (0, 0, 0, 0, 1, 3): IrregularCase.IRR1B,
            (1, 0, 0, 0, 0, 3): IrregularCase.IRR2A,
            (0, 1, 0, 0, 0, 3): IrregularCase.IRR2B,
            (0, 0, 1, 0, 0, 3): IrregularCase.IRR2C,
            (0, 0, 1, 1, 0, 2): IrregularCase.IRR4A,
            (1, 0, 0, 0, 1, 2): IrregularCase.IRR4B,
            (0, 0, 0, 2, 2, 0): IrregularCase.IRR5,
        }
        for values, case in cases.items():
            self.assertEqual(classify(values).case, case, values)

    def test_regular(self):
        """All exponents positive is regular."""
        self.assertEqual(classify((1, 1, 1, 1, 1, 1)), REGULAR)
        self.assertEqual(str(classify((0, 1, 0, 1, 1, 1))), "regular")

    def test_precedence(self):
        """The first matching pattern wins."""
        names = [case for case, _ in IRREGULAR_PATTERNS]
        self.assertEqual(names[0], IrregularCase.IRR3)
        self.assertEqual(len(set(names)), 9)

    def test_weight_four_split(self):
        """13 of the 34 weight-four tuples are irregular."""
        tuples = list(enumerate_convergent(WittenKind.SL4, 4))
        irregular = [args for args in tuples if not classify(args).is_regular]
        self.assertEqual((len(tuples), len(irregular)), (34, 13))


class TestIrregular(NumericAssertions, TestCase):
    def test_triple_count(self):
        """irr3 counts the ordered triples below m1+m2+m3."""
        self.assertEqual(reduce_sl4((0, 0, 0, 0, 0, 4)), normalize_integer_args((4, 0, 0)))

    def test_crossing_sums(self):
        """irr5: ζ_sl4(0,0,0,2,2,0) = 3ζ(3) - ζ(2)^2."""
        self.assertSameValue(reduce_sl4((0, 0, 0, 2, 2, 0)), Z(3) * 3 - zeta2_squared())

    def test_mixed_weight(self):
        """Irregular values carry lower weights."""
        strata = reduce_sl4((1, 0, 0, 0, 0, 3)).strata()
        self.assertIn(2, strata)
        self.assertIn(3, strata)

    def test_regular_rejected(self):
        """reduce_irregular needs an irregular tuple."""
        with self.assertRaises(PreconditionError):
            reduce_irregular((1, 1, 1, 1, 1, 1))


class TestSteps(NumericAssertions, TestCase):
    def test_step_ii_leaves_zero(self):
        """Every term has s1 = 0 or s5 = 0."""
        for _, values in step_ii((1, 1, 1, 1, 1, 1)):
            self.assertTrue(values[0] == 0 or values[4] == 0, values)

    def test_step_ii2_pass_through(self):
        """With s3 = 0 there is nothing to split."""
        self.assertEqual(step_ii2((0, 1, 0, 1, 1, 1)), [(Fraction(1), (0, 1, 0, 1, 1, 1))])

    def test_chain_collapse(self):
        """ζ_sl4(0,1,1,0,1,2) = 2ζ(2,2,1)."""
        self.assertEqual(reduce_sl4((0, 1, 1, 0, 1, 2)), 2 * Z(2, 2, 1))

    def test_preconditions(self):
        """Each step checks the zeros it relies on."""
        with self.assertRaises(PreconditionError):
            step_ii((0, 1, 1, 1, 1, 1))
        with self.assertRaises(PreconditionError):
            step_ii22((0, 1, 0, 1, 0, 2))
        with self.assertRaises(PreconditionError):
            step_ii23((0, 1, 0, 1, 1, 1))
        with self.assertRaises(PreconditionError):
            step_ii1((1, 0, 0, 0, 1, 2))

    def test_swap_symmetry(self):
        """ζ_sl4 is invariant under m1 <-> m3 with s1 <-> s3, s4 <-> s5."""
        self.assertSameValue(reduce_sl4((0, 0, 0, 1, 2, 2)), reduce_sl4((0, 0, 0, 2, 1, 2)))
        self.assertSameValue(reduce_sl4((2, 1, 1, 1, 2, 1)), reduce_sl4((1, 1, 2, 2, 1, 1)))

    def test_boundary_with_s4_one(self):
        """s4 = 1 after the swap goes through the regularized double sum."""
        with record_trace() as steps:
            reduce_sl4((0, 0, 0, 1, 1, 2))
        self.assertIn("tech_lemma", [step.rule for step in steps])

    def test_divergent(self):
        """ζ_sl4(1,1,1,0,0,0) diverges."""
        with self.assertRaises(DivergentError) as ctx:
            reduce_sl4((1, 1, 1, 0, 0, 0))
        self.assertTrue(ctx.exception.violations)


class TestPurity(NumericAssertions, TestCase):
    def test_regular_lower_weights_vanish(self):
        """Lower-weight parts of regular reductions evaluate to zero."""
        for weight in (4, 5):
            for args in enumerate_convergent(WittenKind.SL4, weight):
                if not classify(args).is_regular:
                    continue
                reduced = reduce_sl4(args)
                self.assertTrue(reduced.is_canonical(), args)
                lower = MzvCombination({m: c for m, c in reduced.terms() if m.weight < weight})
                self.assertSameValue(lower, MzvCombination(), 1e-10, str(args))


class TestTrace(TestCase):
    def test_trace_is_complete_after_caching(self):
        """A reduction memoised earlier still records its steps."""
        reduce_sl4((1, 1, 1, 1, 1, 1))
        with record_trace() as steps:
            reduce_sl4((1, 1, 1, 1, 1, 1))
            self.assertTrue(tracing())
        self.assertFalse(tracing())
        self.assertEqual(steps[0].rule, "step_ii")


class TestLimits(NumericAssertions, TestCase):
    def test_case_A_preconditions(self):
        """s4 and t must be at least 2."""
        with self.assertRaises(PreconditionError):
            case_A(1, 1, 2)
        with self.assertRaises(PreconditionError):
            case_B_limit(1, 1)

    def test_case_A_is_canonical(self):
        """ζ(t)ζ(s4,s1) minus the MT parts expands fully."""
        self.assertTrue(case_A(1, 2, 2).is_canonical())

    def test_t_cancels(self):
        """The T-coefficient matches Euler's identity."""
        for s, t in ((2, 1), (1, 2), (3, 2), (2, 3)):
            self.assertTrue(tech_lemma_residue(s, t).is_zero(), (s, t))

    def test_regularized_form_has_symbols(self):
        """Before expansion the double sum is written with ζ̄."""
        self.assertTrue(tech_lemma_regularized(2, 1).has_regularized())
        self.assertTrue(tech_lemma(2, 1).is_canonical())


class TestZeta3(NumericAssertions, TestCase):
    def test_step_i_pass_through(self):
        """A zero among s4..s6 needs no partial fractions."""
        values = (1, 1, 1, 0, 1, 1, 1)
        self.assertEqual(step_i(values), [(Fraction(1), values)])

    def test_step_i_leaves_zero(self):
        """Every term has a zero among s4..s6."""
        for _, values in step_i((1, 2, 1, 1, 1, 1, 1)):
            self.assertIn(0, values[3:6], values)

    def test_symmetrize(self):
        """Each zero position maps to a ζ_sl4 tuple."""
        self.assertEqual(zeta3_symmetrize((1, 2, 3, 4, 5, 0, 6)), (1, 2, 3, 4, 5, 6))
        self.assertEqual(zeta3_symmetrize((1, 2, 3, 0, 5, 4, 6)), (1, 3, 2, 4, 5, 6))
        self.assertEqual(zeta3_symmetrize((2, 1, 3, 4, 0, 5, 6)), (1, 2, 3, 4, 5, 6))
        with self.assertRaises(PreconditionError):
            zeta3_symmetrize((1, 1, 1, 1, 1, 1, 1))

    def test_embedding(self):
        """ζ_sl4(s) is ζ_3(s1..s5, 0, s6)."""
        values = (1, 0, 1, 1, 1, 1)
        self.assertEqual(reduce_zeta3(sl4_as_zeta3(values)), reduce_sl4(values))

    def test_all_ones(self):
        """ζ_3(1,...,1) = 3/2 ζ_sl4(1,1,1,1,1,2) = 21/8 ζ(7) - 3/2 ζ(2)ζ(5)."""
        self.assertEqual(
            reduce_zeta3((1,) * 7), reduce_sl4((1, 1, 1, 1, 1, 2)) * Fraction(3, 2)
        )
        expected = canonicalize(Z(7) * Fraction(21, 8) - Z(2) * Z(5) * Fraction(3, 2))
        self.assertSameValue(reduce_zeta3((1,) * 7), expected)

    def test_accepts_args_objects(self):
        """WittenArgs and plain tuples give the same answer."""
        self.assertEqual(reduce_sl4(sl4(1, 1, 1, 1, 1, 1)), reduce_sl4((1, 1, 1, 1, 1, 1)))
