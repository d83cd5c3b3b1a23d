# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

import json
import logging
import threading
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from wittenzeta.reduction.args import WittenArgs, WittenKind

logger = logging.getLogger(__name__)

Term = tuple[Fraction, tuple[int, ...]]


@dataclass(frozen=True)
class ReductionRecord:
    kind: WittenKind
    args: tuple[int, ...]
    regular: bool
    case: str | None
    combination: tuple[Term, ...]
    strata: dict[int, int]
    value: str
    error_bound: str
    method: str
    digits: int
    trace: tuple[str, ...] | None = None

    @property
    def key(self) -> tuple[str, tuple[int, ...]]:
        return (WittenKind(self.kind).value, tuple(self.args))

    @property
    def witten_args(self) -> WittenArgs:
        return WittenArgs(self.kind, self.args)

    @property
    def regularity_label(self) -> str:
        if self.regular:
            return "regular"
        return f"irregular({self.case})" if self.case else "mixed-weight"

    def without_trace(self) -> "ReductionRecord":
        return replace(self, trace=None)

    def to_json_dict(self) -> dict:
        data = {
            "kind": WittenKind(self.kind).value,
            "args": list(self.args),
            "regular": self.regular,
            "case": self.case,
            "combination": [
                {
                    "coefficient": {"num": str(c.numerator), "den": str(c.denominator)},
                    "mzv": list(index),
                }
                for c, index in self.combination
            ],
            "strata": {str(weight): depth for weight, depth in sorted(self.strata.items())},
            "numeric": {
                "value": self.value,
                "error_bound": self.error_bound,
                "method": self.method,
                "digits": self.digits,
            },
        }
        if self.trace is not None:
            data["trace"] = list(self.trace)
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "ReductionRecord":
        numeric = data["numeric"]
        trace = data.get("trace")
        return cls(
            kind=WittenKind(data["kind"]),
            args=tuple(int(v) for v in data["args"]),
            regular=bool(data["regular"]),
            case=data["case"],
            combination=tuple(
                (
                    Fraction(int(term["coefficient"]["num"]), int(term["coefficient"]["den"])),
                    tuple(int(s) for s in term["mzv"]),
                )
                for term in data["combination"]
            ),
            strata={int(weight): int(depth) for weight, depth in data["strata"].items()},
            value=numeric["value"],
            error_bound=numeric["error_bound"],
            method=numeric["method"],
            digits=int(numeric["digits"]),
            trace=tuple(trace) if trace is not None else None,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "ReductionRecord":
        return cls.from_json_dict(json.loads(line))

    def combination_text(self) -> str:
        if not self.combination:
            return "0"
        parts = []
        for c, index in self.combination:
            sign = "-" if c < 0 else "+"
            body = f"ζ({','.join(map(str, index))})"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else f"-{text[2:]}"

    def to_text(self) -> str:
        lines = [
            f"{self.witten_args} [{self.regularity_label}]",
            f"  = {self.combination_text()}",
            f"  ≈ {self.value} (± {self.error_bound}, {self.method})",
        ]
        if self.trace:
            lines.append("  trace:")
            lines.extend(f"    {step}" for step in self.trace)
        return "\n".join(lines)


@dataclass
class ReductionCache:
    """Append-only JSON-lines store of records keyed by (kind, args). Later lines win."""

    path: Path
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        self.path = Path(self.path)

    @cached_property
    def _entries(self) -> dict[tuple[str, tuple[int, ...]], ReductionRecord]:
        entries = {}
        if not self.path.exists():
            return entries
        with self.path.open(encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    record = ReductionRecord.from_json(line)
                except (ValueError, KeyError, TypeError):
                    logger.warning("skipping unreadable cache line %d in %s", number, self.path)
                    continue
                entries[record.key] = record
        return entries

    def get(self, args: WittenArgs, digits: int) -> ReductionRecord | None:
        record = self._entries.get((args.kind.value, args.values))
        if record is None or record.digits != digits:
            logger.debug("cache miss for %s", args)
            return None
        logger.debug("cache hit for %s", args)
        return record

    def put(self, record: ReductionRecord) -> None:
        record = record.without_trace()
        with self._lock:
            if self._entries.get(record.key) == record:
                return
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as f:
                f.write(record.to_json() + "\n")
            self._entries[record.key] = record

    def __len__(self):
        return len(self._entries)
