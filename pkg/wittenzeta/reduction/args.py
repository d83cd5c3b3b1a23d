# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Iterable, Iterator, Sequence

from wittenzeta.algebra.partial_fractions import (
    LinearForm,
    conv_check_general,
    forms_to_subset_exponents,
    slot_violations,
)
from wittenzeta.constants import SL4_SLOT_NAMES, ZETA3_SLOT_NAMES
from wittenzeta.exceptions import DivergentError

M1, M2, M3 = LinearForm.of(1, 0, 0), LinearForm.of(0, 1, 0), LinearForm.of(0, 0, 1)

# m1, m2, m3, m1+m2, m2+m3, m1+m2+m3
SL4_FORMS = (M1, M2, M3, M1 + M2, M2 + M3, M1 + M2 + M3)

# m1, m2, m3, m1+m2, m2+m3, m1+m3, m1+m2+m3
ZETA3_FORMS = (M1, M2, M3, M1 + M2, M2 + M3, M1 + M3, M1 + M2 + M3)


def mt_forms(depth: int) -> tuple[LinearForm, ...]:
    """m1, ..., md and their sum."""
    variables = [LinearForm(tuple(int(i == j) for j in range(depth))) for i in range(depth)]
    total = variables[0]
    for form in variables[1:]:
        total = total + form
    return (*variables, total)


def mt_slot_names(depth: int) -> tuple[str, ...]:
    return (*(f"s{i}" for i in range(1, depth + 1)), "s")


class WittenKind(str, Enum):
    SL4 = "sl4"
    ZETA3 = "zeta3"
    MT = "mt"


class IrregularCase(str, Enum):
    IRR1A = "irr1a"
    IRR1B = "irr1b"
    IRR2A = "irr2a"
    IRR2B = "irr2b"
    IRR2C = "irr2c"
    IRR3 = "irr3"
    IRR4A = "irr4a"
    IRR4B = "irr4b"
    IRR5 = "irr5"


@dataclass(frozen=True)
class RegularityClass:
    case: IrregularCase | None = None

    @property
    def is_regular(self) -> bool:
        return self.case is None

    def __str__(self):
        return "regular" if self.is_regular else f"irregular({self.case.value})"


REGULAR = RegularityClass()


def _as_values(values: Iterable[int]) -> tuple[int, ...]:
    values = tuple(values)
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"arguments must be integers, got {v!r}")
        if v < 0:
            raise ValueError(f"arguments must be nonnegative, got {values}")
    return values


@dataclass(frozen=True)
class WittenArgs:
    kind: WittenKind
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", WittenKind(self.kind))
        values = _as_values(self.values)
        expected = {WittenKind.SL4: (6,), WittenKind.ZETA3: (7,), WittenKind.MT: (3, 4)}[self.kind]
        if len(values) not in expected:
            raise ValueError(
                f"{self.kind.value} takes {' or '.join(map(str, expected))} arguments,"
                f" got {len(values)}"
            )
        object.__setattr__(self, "values", values)

    @classmethod
    def sl4(cls, *values: int) -> "WittenArgs":
        return cls(WittenKind.SL4, values)

    @classmethod
    def zeta3(cls, *values: int) -> "WittenArgs":
        return cls(WittenKind.ZETA3, values)

    @classmethod
    def mt(cls, parts: Sequence[int], outer: int) -> "WittenArgs":
        return cls(WittenKind.MT, (*parts, outer))

    @property
    def weight(self) -> int:
        return sum(self.values)

    @property
    def slot_forms(self) -> tuple[LinearForm, ...]:
        match self.kind:
            case WittenKind.SL4:
                return SL4_FORMS
            case WittenKind.ZETA3:
                return ZETA3_FORMS
            case _:
                return mt_forms(len(self.values) - 1)

    @property
    def slot_names(self) -> tuple[str, ...]:
        match self.kind:
            case WittenKind.SL4:
                return SL4_SLOT_NAMES
            case WittenKind.ZETA3:
                return ZETA3_SLOT_NAMES
            case _:
                return mt_slot_names(len(self.values) - 1)

    @property
    def forms(self) -> list[tuple[LinearForm, int]]:
        """Factors with a positive exponent, as (form, exponent) pairs."""
        return [(form, e) for form, e in zip(self.slot_forms, self.values) if e]

    def is_convergent(self) -> bool:
        d = self.slot_forms[0].dimension
        return conv_check_general(d, forms_to_subset_exponents(self.forms))

    def violations(self) -> list[str]:
        return slot_violations(self.values, self.slot_forms, self.slot_names)

    def check_convergent(self) -> "WittenArgs":
        if failed := self.violations():
            raise DivergentError(f"{self} diverges", failed)
        return self

    def __str__(self):
        if self.kind is WittenKind.MT:
            *parts, outer = self.values
            return f"ζ_MT({','.join(map(str, parts))};{outer})"
        return f"ζ_{self.kind.value}({','.join(map(str, self.values))})"


def as_args(kind: WittenKind, args) -> WittenArgs:
    if isinstance(args, WittenArgs):
        if args.kind is not WittenKind(kind):
            raise ValueError(f"expected {WittenKind(kind).value} arguments, got {args.kind.value}")
        return args
    return WittenArgs(kind, tuple(args))


def sl4_as_zeta3(values: Sequence[int]) -> tuple[int, ...]:
    """ζ_sl4(s1..s6) is ζ_3(s1..s5, 0, s6)."""
    s1, s2, s3, s4, s5, s6 = values
    return (s1, s2, s3, s4, s5, 0, s6)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative tuples of length ``parts`` summing to ``total``, in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head, *tail)


def enumerate_convergent(kind: WittenKind, weight: int) -> Iterator[WittenArgs]:
    """Every convergent argument tuple of ``kind`` with the given weight.

    Mordell–Tornheim tuples are enumerated at depth 2 then depth 3.
    """
    kind = WittenKind(kind)
    arities = {WittenKind.SL4: (6,), WittenKind.ZETA3: (7,), WittenKind.MT: (3, 4)}[kind]
    for arity in arities:
        for values in _compositions(weight, arity):
            args = WittenArgs(kind, values)
            if args.is_convergent():
                yield args


def random_args(rng: Random, kind: WittenKind, max_weight: int, min_weight: int = 4) -> WittenArgs:
    """A convergent tuple with weight in [min_weight, max_weight], drawn by rejection."""
    kind = WittenKind(kind)
    arity = {WittenKind.SL4: 6, WittenKind.ZETA3: 7}.get(kind) or rng.choice((3, 4))
    while True:
        weight = rng.randint(min_weight, max_weight)
        values = [0] * arity
        for _ in range(weight):
            values[rng.randrange(arity)] += 1
        args = WittenArgs(kind, tuple(values))
        if args.is_convergent():
            return args
