# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

import logging
from dataclasses import dataclass, field
from random import Random

import mpmath as mp

from wittenzeta.algebra.mzv import MzvCombination
from wittenzeta.constants import (
    DEFAULT_ORACLE_SAMPLES,
    DEFAULT_ORACLE_SEED,
    DEFAULT_PRINT_DIGITS,
    DEFAULT_TARGET_ERROR,
    DEFAULT_VERIFY_TOLERANCE,
    MAX_RANDOM_WEIGHT,
    ORACLE_TOLERANCE,
    TABLE_GROUPING_TOLERANCE,
)
from wittenzeta.corpus import goldens
from wittenzeta.numeric.evaluate import NumericResult, eval_combo
from wittenzeta.numeric.oracle import oracle_mt, oracle_sl4, oracle_zeta3
from wittenzeta.records import ReductionCache, ReductionRecord
from wittenzeta.reduction.args import (
    REGULAR,
    RegularityClass,
    WittenArgs,
    WittenKind,
    as_args,
    enumerate_convergent,
    random_args,
)
from wittenzeta.reduction.mordell_tornheim import reduce_mt
from wittenzeta.reduction.sl4 import classify, reduce_sl4
from wittenzeta.reduction.zeta3 import reduce_zeta3, step_i, zeta3_symmetrize
from wittenzeta.trace import record_trace

logger = logging.getLogger(__name__)


def reduce_args(args: WittenArgs) -> MzvCombination:
    match args.kind:
        case WittenKind.SL4:
            return reduce_sl4(args)
        case WittenKind.ZETA3:
            return reduce_zeta3(args)
        case WittenKind.MT:
            return reduce_mt(args)


def regularity_of(args: WittenArgs) -> RegularityClass | None:
    """Irregular class of the value, or None for a Mordell–Tornheim value with a zero part."""
    match args.kind:
        case WittenKind.SL4:
            return classify(args)
        case WittenKind.ZETA3:
            for _, term in step_i(args):
                regularity = classify(zeta3_symmetrize(term))
                if not regularity.is_regular:
                    return regularity
            return REGULAR
        case WittenKind.MT:
            return REGULAR if all(args.values[:-1]) else None


def oracle_value(args: WittenArgs, cutoff: int | None = None) -> NumericResult:
    match args.kind:
        case WittenKind.SL4:
            return oracle_sl4(args, cutoff)
        case WittenKind.ZETA3:
            return oracle_zeta3(args, cutoff)
        case WittenKind.MT:
            return oracle_mt(args, cutoff)


def _target_error(digits: int) -> float:
    return min(DEFAULT_TARGET_ERROR, 10.0 ** -(digits + 2))


def reduce_value(
    kind: WittenKind,
    args,
    *,
    trace: bool = False,
    digits: int = DEFAULT_PRINT_DIGITS,
    cache: ReductionCache | None = None,
) -> ReductionRecord:
    """Reduce one value and evaluate it. Divergent arguments raise DivergentError."""
    args = as_args(kind, args).check_convergent()
    if cache is not None and not trace:
        if (hit := cache.get(args, digits)) is not None:
            return hit

    steps = None
    if trace:
        with record_trace() as steps:
            combo = reduce_args(args)
    else:
        combo = reduce_args(args)

    regularity = regularity_of(args)
    numeric = eval_combo(combo, _target_error(digits))
    result = ReductionRecord(
        kind=args.kind,
        args=args.values,
        regular=bool(regularity and regularity.is_regular),
        case=regularity.case.value if regularity and regularity.case else None,
        combination=tuple(combo.to_pairs()),
        strata=combo.strata(),
        value=numeric.format(digits),
        error_bound=mp.nstr(numeric.error_bound, 3),
        method=numeric.method.label,
        digits=digits,
        trace=tuple(str(step) for step in steps) if steps is not None else None,
    )
    if cache is not None:
        cache.put(result)
    return result


# ---------------------------------------------------------------------------
# weight tables
# ---------------------------------------------------------------------------


@dataclass
class WeightTable:
    kind: WittenKind
    weight: int
    records: list[ReductionRecord] = field(default_factory=list)
    groups: list[list[ReductionRecord]] = field(default_factory=list)

    @property
    def tuple_count(self) -> int:
        return len(self.records)

    @property
    def distinct_count(self) -> int:
        return len(self.groups)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "weight": self.weight,
            "tuples": self.tuple_count,
            "distinct": self.distinct_count,
            "groups": [
                {
                    "value": group[0].value,
                    "args": [list(r.args) for r in group],
                    "record": group[0].to_json_dict(),
                }
                for group in self.groups
            ],
        }


def _group_by_value(
    records: list[ReductionRecord], tolerance: float
) -> list[list[ReductionRecord]]:
    groups: list[tuple[mp.mpf, list[ReductionRecord]]] = []
    for record in records:
        value = mp.mpf(record.value)
        for representative, members in groups:
            if abs(representative - value) <= tolerance:
                members.append(record)
                break
        else:
            groups.append((value, [record]))
    return [members for _, members in groups]


def weight_table(
    weight: int,
    kind: WittenKind = WittenKind.SL4,
    *,
    regular_only: bool = False,
    digits: int = DEFAULT_PRINT_DIGITS,
    cache: ReductionCache | None = None,
) -> WeightTable:
    """Every convergent tuple of the given weight, reduced and grouped by numeric value."""
    kind = WittenKind(kind)
    table = WeightTable(kind, weight)
    for args in enumerate_convergent(kind, weight):
        result = reduce_value(kind, args, digits=digits, cache=cache)
        if regular_only and not result.regular:
            continue
        table.records.append(result)
    table.groups = _group_by_value(table.records, TABLE_GROUPING_TOLERANCE)
    logger.info(
        "weight %d %s table: %d tuples, %d distinct values",
        weight,
        kind.value,
        table.tuple_count,
        table.distinct_count,
    )
    return table


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationCase:
    label: str
    expected: str
    actual: str
    difference: float
    passed: bool

    def __str__(self):
        status = "ok" if self.passed else "FAIL"
        return (
            f"[{status}] {self.label}: expected {self.expected}, got {self.actual}"
            f" (diff {self.difference:.3e})"
        )


@dataclass
class VerificationReport:
    suite: str
    tolerance: float
    cases: list[VerificationCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> list[VerificationCase]:
        return [case for case in self.cases if not case.passed]

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "cases": len(self.cases),
            "failures": [
                {
                    "label": case.label,
                    "expected": case.expected,
                    "actual": case.actual,
                    "difference": case.difference,
                }
                for case in self.failures
            ],
        }


def verify_paper(
    tolerance: float = DEFAULT_VERIFY_TOLERANCE, include_slow: bool = True
) -> VerificationReport:
    """Compare every golden value with its closed form and, where quoted, its printed decimal."""
    report = VerificationReport("paper", tolerance)
    target = min(DEFAULT_TARGET_ERROR, tolerance / 10)
    for golden in goldens(include_slow):
        args = golden.witten_args
        actual = eval_combo(reduce_args(args), target)
        expected = golden.closed_form_value(target)
        difference = abs(actual.value - expected.value)
        report.cases.append(
            VerificationCase(
                label=f"{args} closed form",
                expected=expected.format(),
                actual=actual.format(),
                difference=float(difference),
                passed=actual.agrees_with(expected, tolerance),
            )
        )
        if golden.decimal is not None:
            difference = abs(actual.value - mp.mpf(golden.decimal))
            report.cases.append(
                VerificationCase(
                    label=f"{args} decimal",
                    expected=golden.decimal,
                    actual=actual.format(),
                    difference=float(difference),
                    passed=difference <= tolerance,
                )
            )
    return report


def verify_oracle(
    samples: int = DEFAULT_ORACLE_SAMPLES,
    seed: int = DEFAULT_ORACLE_SEED,
    tolerance: float = ORACLE_TOLERANCE,
    max_weight: int = MAX_RANDOM_WEIGHT,
    cutoff: int | None = None,
) -> VerificationReport:
    """Reduced values against truncated lattice sums on seeded random ζ_sl4 and ζ_3 tuples."""
    rng = Random(seed)
    report = VerificationReport("oracle", tolerance)
    for i in range(samples):
        kind = WittenKind.SL4 if i % 2 == 0 else WittenKind.ZETA3
        args = random_args(rng, kind, max_weight)
        actual = eval_combo(reduce_args(args))
        oracle = oracle_value(args, cutoff)
        difference = abs(actual.value - oracle.value)
        report.cases.append(
            VerificationCase(
                label=str(args),
                expected=oracle.format(8),
                actual=actual.format(8),
                difference=float(difference),
                passed=difference <= tolerance,
            )
        )
        logger.debug("%s: diff %.3e", args, difference)
    return report
