"""
Verification runner.

``verify`` walks one catalog entry over one ring and stops at the first
failing case, which is the minimal counterexample in canonical order.
``verify_many`` runs several entries concurrently on a shared context and
returns the reports in input order.
"""

from __future__ import annotations

import asyncio
import logging
import time
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Union

from pydantic import BaseModel

from engine.config import get_settings
from engine.errors import StructuralError
from engine.inverses.equations import EquationSet, satisfies
from engine.oracle.catalog import RingContext, get_theorem, theorem_ids
from engine.ring.core import MatrixRing, Ring, RingElement
from engine.ring.spec import dump_ring_spec
from engine.runtime.verify_status import mark_fail, mark_incomplete, mark_pass, mark_skipped

log = logging.getLogger(__name__)

Status = Literal["pass", "fail", "skipped", "incomplete"]


class VerificationReport(BaseModel):
    ring: Dict[str, Any]
    theorem: str
    status: Status
    cases_checked: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    reason: Optional[str] = None
    elapsed: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "skipped")


def _report(ring: Ring, theorem_id: str, status: Status, started: float, **kw) -> VerificationReport:
    return VerificationReport(
        ring=dump_ring_spec(ring.spec),
        theorem=theorem_id,
        status=status,
        elapsed=round(time.monotonic() - started, 3),
        **kw,
    )


def resolve_theorems(ids: Union[str, Sequence[str]]) -> List[str]:
    """'all' or a comma list (or sequence) of ids; unknown ids raise StructuralError."""
    if isinstance(ids, str):
        if ids.strip() == "all":
            return theorem_ids()
        ids = [t.strip() for t in ids.split(",") if t.strip()]
    unknown = [t for t in ids if get_theorem(t) is None]
    if unknown:
        raise StructuralError(f"unknown theorem id(s): {', '.join(unknown)}")
    if not ids:
        raise StructuralError("no theorem ids given")
    return list(ids)


def verify(
    theorem_id: str,
    ring: Ring,
    max_cases: Optional[int] = None,
    max_seconds: Optional[float] = None,
    context: Optional[RingContext] = None,
) -> VerificationReport:
    entry = get_theorem(theorem_id)
    if entry is None:
        raise StructuralError(f"unknown theorem id {theorem_id!r}")
    settings = get_settings()
    max_cases = max_cases or settings.max_cases
    max_seconds = max_seconds or settings.max_seconds
    started = time.monotonic()

    if entry.needs_involution and not ring.has_involution:
        reason = f"{ring.label} has no involution"
        mark_skipped(theorem_id, ring.label, reason)
        return _report(ring, theorem_id, "skipped", started, reason=reason)
    if entry.finite_only and not ring.is_finite:
        reason = f"{theorem_id} ranges over whole finite rings; {ring.label} is infinite"
        mark_skipped(theorem_id, ring.label, reason)
        return _report(ring, theorem_id, "skipped", started, reason=reason)
    if entry.matrix_only and not isinstance(ring, MatrixRing):
        reason = f"{theorem_id} is stated for matrix rings; {ring.label} is not one"
        mark_skipped(theorem_id, ring.label, reason)
        return _report(ring, theorem_id, "skipped", started, reason=reason)

    ctx = context or RingContext(ring)
    checked = 0
    for case in entry.check(ctx):
        if checked >= max_cases:
            reason = f"case budget of {max_cases} reached"
            break
        if time.monotonic() - started > max_seconds:
            reason = f"time budget of {max_seconds:g}s reached"
            break
        checked += 1
        if not case.ok:
            log.info("%s fails on %s after %d cases", theorem_id, ring.label, checked)
            mark_fail(theorem_id, ring.label, checked, str(case.assignment))
            return _report(ring, theorem_id, "fail", started, cases_checked=checked, counterexample=case.assignment)
    else:
        log.debug("%s passes on %s: %d cases", theorem_id, ring.label, checked)
        mark_pass(theorem_id, ring.label, checked)
        return _report(ring, theorem_id, "pass", started, cases_checked=checked)

    log.warning("%s on %s incomplete: %s", theorem_id, ring.label, reason)
    mark_incomplete(theorem_id, ring.label, checked, reason)
    return _report(ring, theorem_id, "incomplete", started, cases_checked=checked, reason=reason)


async def _verify_all(
    theorem_ids_: Sequence[str], ring: Ring, max_cases: Optional[int], max_seconds: Optional[float], threads: int
) -> List[VerificationReport]:
    ctx = RingContext(ring)
    sem = asyncio.Semaphore(threads)

    async def run_one(tid: str) -> VerificationReport:
        async with sem:
            return await asyncio.to_thread(verify, tid, ring, max_cases, max_seconds, ctx)

    return list(await asyncio.gather(*(run_one(t) for t in theorem_ids_)))


def verify_many(
    theorem_ids_: Sequence[str],
    ring: Ring,
    max_cases: Optional[int] = None,
    max_seconds: Optional[float] = None,
    threads: Optional[int] = None,
) -> List[VerificationReport]:
    threads = threads or get_settings().threads
    return asyncio.run(_verify_all(theorem_ids_, ring, max_cases, max_seconds, threads))


def brute_force_set(
    a: RingElement, predicate: Union[EquationSet, Callable[[RingElement], bool]]
) -> List[RingElement]:
    """Every x in the (finite) ring satisfying the predicate, in canonical order."""
    if isinstance(predicate, EquationSet):
        eqs = predicate
        predicate = lambda x: satisfies(a, x, eqs)  # noqa: E731
    return [x for x in a.ring.elements() if predicate(x)]
