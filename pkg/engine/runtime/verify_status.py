import threading
from datetime import datetime, timezone
from typing import Any, Dict, Optional

_lock = threading.Lock()
_store: Dict[str, Dict[str, Any]] = {}


def _now_utc_z() -> str:
    # ISO8601 with trailing Z, seconds precision
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _key(theorem_id: str, ring_label: str) -> str:
    return f"{theorem_id}@{ring_label}"


def _ensure(theorem_id: str, ring_label: str) -> Dict[str, Any]:
    k = _key(theorem_id, ring_label)
    if k not in _store:
        _store[k] = {
            "theorem": theorem_id,
            "ring": ring_label,
            "status": None,
            "cases": 0,
            "runs": 0,
            "last_run_ts": None,
            "last_reason": None,
        }
    return _store[k]


def _mark(theorem_id: str, ring_label: str, status: str, cases: int, reason: Optional[str] = None) -> None:
    if reason is not None and len(reason) > 200:
        reason = reason[:197] + "..."
    with _lock:
        rec = _ensure(theorem_id, ring_label)
        rec["status"] = status
        rec["cases"] = cases
        rec["runs"] += 1
        rec["last_run_ts"] = _now_utc_z()
        rec["last_reason"] = reason


def mark_pass(theorem_id: str, ring_label: str, cases: int) -> None:
    _mark(theorem_id, ring_label, "pass", cases)


def mark_fail(theorem_id: str, ring_label: str, cases: int, reason: Optional[str] = None) -> None:
    _mark(theorem_id, ring_label, "fail", cases, reason)


def mark_skipped(theorem_id: str, ring_label: str, reason: str) -> None:
    _mark(theorem_id, ring_label, "skipped", 0, reason)


def mark_incomplete(theorem_id: str, ring_label: str, cases: int, reason: str) -> None:
    _mark(theorem_id, ring_label, "incomplete", cases, reason)


def snapshot() -> Dict[str, Dict[str, Any]]:
    with _lock:
        return {k: dict(v) for k, v in _store.items()}


def reset() -> None:
    with _lock:
        _store.clear()
