# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class TraceStep:
    rule: str
    args: tuple
    coefficient: Fraction = Fraction(1)
    note: str = ""

    def __str__(self):
        text = f"{self.rule}{self.args}"
        if self.coefficient != 1:
            text = f"{text} x {self.coefficient}"
        if self.note:
            text = f"{text} [{self.note}]"
        return text


_active_trace: ContextVar["list[TraceStep] | None"] = ContextVar("wittenzeta_trace", default=None)


def tracing() -> bool:
    return _active_trace.get() is not None


def record(rule: str, args: tuple, coefficient=1, note: str = "") -> None:
    steps = _active_trace.get()
    if steps is not None:
        steps.append(TraceStep(rule, tuple(args), Fraction(coefficient), note))


@contextmanager
def record_trace():
    """Collect every rule applied inside the block.

    Reductions run inside the block skip their memo tables, so the collected
    list is complete even for arguments reduced earlier.
    """
    steps: list[TraceStep] = []
    token = _active_trace.set(steps)
    try:
        yield steps
    finally:
        _active_trace.reset(token)
