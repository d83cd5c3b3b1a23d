# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Command line front end.

    wittenzeta reduce sl4 1 1 1 1 1 1
    wittenzeta reduce --json mt 1 1 0 2
    wittenzeta table --regular-only 4
    wittenzeta verify --tolerance 1e-8 paper
"""

import logging
import sys
from json import dumps
from pathlib import Path

from face import Command, Flag, PosArgSpec, UsageError, echo, echo_err, face_middleware

from wittenzeta.api import reduce_value, verify_oracle, verify_paper, weight_table
from wittenzeta.constants import (
    DEFAULT_ORACLE_SAMPLES,
    DEFAULT_ORACLE_SEED,
    DEFAULT_PRINT_DIGITS,
    DEFAULT_VERIFY_TOLERANCE,
    EXIT_DIVERGENT,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    ORACLE_TOLERANCE,
)
from wittenzeta.exceptions import ConfigurationError, DivergentError
from wittenzeta.records import ReductionCache
from wittenzeta.reduction.args import WittenArgs, WittenKind
from wittenzeta.settings import get_settings

logger = logging.getLogger(__name__)

SUITES = ("paper", "oracle")


# ---------------------------------------------------------------------------
# middleware
# ---------------------------------------------------------------------------


@face_middleware(
    provides=["reduction_cache"],
    flags=[
        Flag("--verbose", parse_as=True, doc="log every reduction step"),
        Flag("--cache", parse_as=str, missing=None, doc="JSON-lines reduction cache"),
    ],
)
def mw_setup(next_, verbose, cache):
    try:
        settings = get_settings()
    except ConfigurationError as e:
        echo_err(f"error: {e}")
        raise SystemExit(EXIT_USAGE)
    logging.basicConfig(level=logging.DEBUG if verbose else settings.log_level)

    path = cache or settings.cache_path
    return next_(reduction_cache=ReductionCache(Path(path)) if path else None)


@face_middleware
def mw_exit_codes(next_):
    try:
        return next_()
    except DivergentError as e:
        echo_err(f"divergent: {e}")
        for violation in e.violations:
            echo_err(f"  violated: {violation}")
        raise SystemExit(EXIT_DIVERGENT)


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------


def parse_witten_args(kind: str, raw: list[str]) -> WittenArgs:
    try:
        return WittenArgs(WittenKind(kind), tuple(int(value) for value in raw))
    except (TypeError, ValueError) as e:
        raise UsageError(f"invalid {kind} arguments {' '.join(raw)}: {e}")


def reduce_handler(posargs_, json, trace, precision, reduction_cache):
    """Reduce one value: sl4 s1..s6, zeta3 s1..s7, or mt p1 p2 [p3] s."""
    kind, *raw = posargs_
    if kind not in {k.value for k in WittenKind}:
        raise UsageError(f"unknown kind {kind!r}, expected sl4, zeta3 or mt")
    args = parse_witten_args(kind, raw)
    record = reduce_value(args.kind, args, trace=trace, digits=precision, cache=reduction_cache)
    echo(record.to_json() if json else record.to_text())
    return EXIT_OK


def table_handler(posargs_, kind, regular_only, json, out, precision, reduction_cache):
    """Reduce every convergent tuple of one weight and group equal values."""
    (weight,) = posargs_
    if weight < 4:
        raise UsageError(f"convergent values have weight >= 4, got {weight}")
    if kind not in (WittenKind.SL4.value, WittenKind.ZETA3.value):
        raise UsageError(f"tables cover sl4 and zeta3, got {kind!r}")

    table = weight_table(
        weight,
        WittenKind(kind),
        regular_only=regular_only,
        digits=precision,
        cache=reduction_cache,
    )
    if json:
        text = dumps(table.to_json_dict(), ensure_ascii=False)
    else:
        lines = [
            f"weight {weight} {kind}: {table.tuple_count} tuples,"
            f" {table.distinct_count} distinct values"
        ]
        for group in table.groups:
            head = group[0]
            lines.append(f"{head.value}  {head.witten_args} [{head.regularity_label}]")
            lines.append(f"    = {head.combination_text()}")
            lines.extend(f"    also {member.witten_args}" for member in group[1:])
        text = "\n".join(lines)

    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
        echo(f"wrote {table.tuple_count} tuples to {out}")
    else:
        echo(text)
    return EXIT_OK


def verify_handler(posargs_, json, tolerance, samples, seed, quick):
    """Check golden values (paper) or random values against lattice sums (oracle)."""
    (suite,) = posargs_
    match suite:
        case "paper":
            report = verify_paper(tolerance or DEFAULT_VERIFY_TOLERANCE, include_slow=not quick)
        case "oracle":
            report = verify_oracle(samples, seed, tolerance or ORACLE_TOLERANCE)
        case _:
            raise UsageError(f"unknown suite {suite!r}, expected one of {', '.join(SUITES)}")

    if json:
        echo(dumps(report.to_json_dict()))
    else:
        for case in report.cases:
            echo(str(case))
        passed = len(report.cases) - len(report.failures)
        echo(
            f"{report.suite}: {passed}/{len(report.cases)} passed"
            f" at tolerance {report.tolerance:g}"
        )

    if not report.passed:
        for case in report.failures:
            echo_err(str(case))
        raise SystemExit(EXIT_VERIFICATION_FAILED)
    return EXIT_OK


def root_handler():
    raise UsageError("expected a subcommand: reduce, table or verify")


# ---------------------------------------------------------------------------
# command tree
# ---------------------------------------------------------------------------


def get_command() -> Command:
    cmd = Command(root_handler, name="wittenzeta", doc=__doc__.splitlines()[0])
    cmd.add(Flag("--json", parse_as=True, doc="print JSON instead of text"))
    cmd.add(Flag("--trace", parse_as=True, doc="include the applied reduction rules"))
    cmd.add(Flag("--precision", parse_as=int, missing=DEFAULT_PRINT_DIGITS, doc="printed digits"))
    cmd.add(mw_setup)
    cmd.add(mw_exit_codes)

    reduce_cmd = Command(
        reduce_handler,
        name="reduce",
        posargs=PosArgSpec(parse_as=str, min_count=4),
    )
    cmd.add(reduce_cmd)

    table_cmd = Command(table_handler, name="table", posargs=PosArgSpec(parse_as=int, count=1))
    table_cmd.add(Flag("--kind", parse_as=str, missing=WittenKind.SL4.value))
    table_cmd.add(Flag("--regular-only", parse_as=True, doc="skip mixed-weight values"))
    table_cmd.add(Flag("--out", parse_as=str, missing=None, doc="write the table to a file"))
    cmd.add(table_cmd)

    verify_cmd = Command(verify_handler, name="verify", posargs=PosArgSpec(parse_as=str, count=1))
    verify_cmd.add(Flag("--tolerance", parse_as=float, missing=None))
    verify_cmd.add(Flag("--samples", parse_as=int, missing=DEFAULT_ORACLE_SAMPLES))
    verify_cmd.add(Flag("--seed", parse_as=int, missing=DEFAULT_ORACLE_SEED))
    verify_cmd.add(Flag("--quick", parse_as=True, doc="skip the weight-12 goldens"))
    cmd.add(verify_cmd)
    return cmd


def main(argv=None) -> int:
    return get_command().run(argv) or EXIT_OK


def console_main():
    sys.exit(main())
