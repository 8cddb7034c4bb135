"""Claim records, reports, and the registry that runs them."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from ..errors import UnknownClaim

PROVENANCES = ("PAPER", "TRIVIAL", "DERIVED")
STATUSES = ("verified", "refuted", "unverified-at-budget", "error")


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    statement: str
    check: Callable[[float], Any]
    expected: Any
    provenance: str
    anchor: str  # topic the statement comes from
    bound: str  # the finite scale the check runs at
    tags: tuple = ()
    cost: str = "seconds"
    subject: str | None = None  # word reported as counterexample on a plain value mismatch
    bounded: bool = False  # search claims may come back "open"


@dataclass
class ClaimReport:
    id: str
    status: str
    observed: Any
    expected: Any
    provenance: str
    bound: str
    counterexample: str | None = None
    elapsed_ms: float | None = None
    detail: str = ""

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "observed": self.observed,
            "expected": self.expected,
            "provenance": self.provenance,
            "bound": self.bound,
            "elapsed_ms": round(self.elapsed_ms, 1) if timings and self.elapsed_ms is not None else None,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail:
            out["detail"] = self.detail
        return out


REGISTRY: dict[str, ClaimRecord] = {}


def claim(id, statement, expected, *, provenance, anchor, bound, tags=(), cost="seconds", subject=None, bounded=False):
    """Register the decorated checker under ``id``."""
    if provenance not in PROVENANCES:
        raise ValueError(f"bad provenance {provenance!r}")

    def deco(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate claim id {id}")
        REGISTRY[id] = ClaimRecord(
            id, statement, fn, normalize(expected), provenance, anchor, bound, tuple(tags), cost, subject, bounded
        )
        return fn

    return deco


def normalize(x):
    """JSON-ready canonical form: sets sorted, tuples as lists, fractions as "p/q"."""
    if isinstance(x, dict):
        return {str(k): normalize(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (set, frozenset)):
        return sorted((normalize(v) for v in x), key=_sort_key)
    if isinstance(x, (list, tuple)):
        return [normalize(v) for v in x]
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, str):
        return str(x)  # drops Word subclasses
    return x


def _sort_key(v):
    return (len(v), v) if isinstance(v, str) else (0, str(v))


def budget_scale() -> float:
    """Global budget multiplier from ``WORDLAB_BUDGET`` (default 1)."""
    raw = os.environ.get("WORDLAB_BUDGET", "")
    try:
        value = float(raw) if raw else 1.0
    except ValueError:
        value = 1.0
    return value if value > 0 else 1.0


def _find_counterexample(observed):
    # depth-first over nested suites, keys already in sorted order
    if not isinstance(observed, dict):
        return None
    for key in ("counterexample", "first"):
        if isinstance(observed.get(key), str):
            return observed[key]
    for value in observed.values():
        found = _find_counterexample(value)
        if found is not None:
            return found
    return None


def _counterexample(record: ClaimRecord, observed):
    found = _find_counterexample(observed)
    return record.subject if found is None else found


def run_claim(id: str, budget: float | None = None) -> ClaimReport:
    try:
        record = REGISTRY[id]
    except KeyError:
        raise UnknownClaim(id) from None
    scale = budget_scale() if budget is None else budget
    start = time.perf_counter()
    try:
        observed = normalize(record.check(scale))
    except Exception as exc:  # a checker crash is reported, not raised
        elapsed = (time.perf_counter() - start) * 1000
        return ClaimReport(
            id, "error", None, record.expected, record.provenance, record.bound,
            elapsed_ms=elapsed, detail=f"{type(exc).__name__}: {exc}",
        )
    elapsed = (time.perf_counter() - start) * 1000
    if record.bounded and isinstance(observed, dict) and observed.get("maxlen") == "open":
        status = "unverified-at-budget"
    elif observed == record.expected:
        status = "verified"
    else:
        status = "refuted"
    cx = _counterexample(record, observed) if status == "refuted" else None
    return ClaimReport(id, status, observed, record.expected, record.provenance, record.bound, cx, elapsed)


def claim_ids(tag: str | None = None) -> list[str]:
    return sorted(i for i, r in REGISTRY.items() if tag is None or tag in r.tags)


def run_all(tag: str | None = None, budget: float | None = None, jobs: int = 1) -> list[ClaimReport]:
    """Reports for every (or every ``tag``-matching) claim, ordered by id."""
    ids = claim_ids(tag)
    if jobs <= 1 or len(ids) < 2:
        return [run_claim(i, budget) for i in ids]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_claim, ids, [budget] * len(ids)))


def all_tags() -> list[str]:
    return sorted({t for r in REGISTRY.values() for t in r.tags})


@dataclass
class Suite:
    """Accumulates an equivalence check over many words; keeps the first failure."""

    checked: int = 0
    discrepancies: int = 0
    first: str | None = None
    notes: dict = field(default_factory=dict)

    def add(self, word, ok: bool) -> None:
        self.checked += 1
        if not ok:
            self.discrepancies += 1
            if self.first is None:
                self.first = str(word)

    def result(self) -> dict:
        return {"checked": self.checked, "discrepancies": self.discrepancies, "counterexample": self.first, **self.notes}


def clean(checked: int, **extra) -> dict:
    """Expected value of a suite with no discrepancies."""
    return {"checked": checked, "discrepancies": 0, "counterexample": None, **extra}
