"""Verdicts, report entries and the small harness the verification suites share."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .exactfield import MissingConstantError, NumberField, constants_in, nf_embed


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"
    REPORTED = "REPORTED"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ReportEntry:
    check: str
    verdict: Verdict
    detail: str
    elapsed: float = 0.0

    def text(self) -> str:
        return f"{self.check} {self.verdict} {self.detail}"

    def jsonl(self) -> str:
        return json.dumps({"check": self.check, "verdict": str(self.verdict), "detail": self.detail},
                          ensure_ascii=False)

    @property
    def ok(self) -> bool:
        return self.verdict in (Verdict.PASS, Verdict.REPORTED)


class PreconditionError(ValueError):
    pass


def require_constants(field: NumberField, *names: str) -> None:
    """Raise PreconditionError naming the first constant ``field`` lacks."""
    for name in names:
        try:
            nf_embed(name, field)
        except MissingConstantError:
            have = ", ".join(constants_in(field)) or "none"
            raise PreconditionError(
                f"field {field.name} lacks the constant {name} (available: {have})") from None


CheckFn = Callable[[], "tuple[Verdict | bool, str]"]


def run_checks(module: str, checks: list[tuple[str, CheckFn]]) -> list[ReportEntry]:
    """Run named checks in order; a raised exception becomes a FAIL entry."""
    out = []
    for name, fn in checks:
        t0 = time.perf_counter()
        try:
            verdict, detail = fn()
            if isinstance(verdict, bool):
                verdict = Verdict.PASS if verdict else Verdict.FAIL
        except PreconditionError:
            raise
        except Exception as exc:  # a crashing check is a failing check
            verdict, detail = Verdict.FAIL, f"{type(exc).__name__}: {exc}"
        out.append(ReportEntry(f"{module}.{name}", verdict, detail, time.perf_counter() - t0))
    return out


def verdict_of(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL
