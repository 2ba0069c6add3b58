"""
Theorem catalog.

Every entry is a generator over the quantifier scope of one statement:
it yields one Case per assignment, in canonical order, and the runner
stops at the first case that fails. Entries register themselves with
the ``theorem`` decorator; the modules holding them are imported at the
bottom of this file so the catalog is complete once it is imported.
"""

from __future__ import annotations

import itertools
import logging
import threading
from typing import Any, Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from engine.config import get_settings
from engine.errors import InternalVerificationError, NotEnumerableError
from engine.ideals.lattice import SidedIdeal, annihilator, generating_family, principal_ideal
from engine.inverses.equations import EQ1, EQ2, EQ12, EquationSet, enumerate_inverse_set
from engine.ring.core import MatrixRing, Ring, RingElement

log = logging.getLogger(__name__)


class Case(NamedTuple):
    assignment: Dict[str, Any]
    ok: bool


CheckFn = Callable[["RingContext"], Iterator[Case]]


class TheoremEntry(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    id: str
    statement: str
    scope: str
    needs_involution: bool = False
    finite_only: bool = True
    matrix_only: bool = False
    check: CheckFn

    def summary(self) -> Dict[str, Any]:
        return self.model_dump(exclude={"check"})


CATALOG: Dict[str, TheoremEntry] = {}


def theorem(
    id: str,
    statement: str,
    scope: str,
    *,
    needs_involution: bool = False,
    finite_only: bool = True,
    matrix_only: bool = False,
) -> Callable[[CheckFn], CheckFn]:
    def deco(fn: CheckFn) -> CheckFn:
        if id in CATALOG:
            raise ValueError(f"duplicate theorem id {id}")
        CATALOG[id] = TheoremEntry(
            id=id,
            statement=statement,
            scope=scope,
            needs_involution=needs_involution,
            finite_only=finite_only,
            matrix_only=matrix_only,
            check=fn,
        )
        return fn

    return deco


def theorem_ids() -> List[str]:
    return list(CATALOG)


def get_theorem(theorem_id: str) -> Optional[TheoremEntry]:
    return CATALOG.get(theorem_id)


def holds(fn: Callable[[], Any]) -> bool:
    """Evaluate a statement; an internal verification failure counts as a failed case."""
    try:
        return bool(fn())
    except InternalVerificationError as e:
        log.debug("internal verification failed inside a check: %s", e)
        return False


# small integer entries for the sampled rational rings
_SAMPLE_SCALARS = ("0", "1", "-1", "2")
_SAMPLE_LIMIT = 256


class RingContext:
    """
    The quantifier universe of one ring: its elements (a deterministic
    sample on rational rings), the generating family of ideals and memoised
    inverse sets. Shared by the checks that run concurrently on the ring.
    """

    def __init__(self, ring: Ring) -> None:
        self.ring = ring
        self._lock = threading.Lock()
        self._memo: Dict[Tuple, Any] = {}

    def cached(self, key: Tuple, fn: Callable[[], Any]) -> Any:
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = fn()
        with self._lock:
            return self._memo.setdefault(key, value)

    @property
    def elements(self) -> List[RingElement]:
        return self.cached(("elements",), self._build_elements)

    def _build_elements(self) -> List[RingElement]:
        ring = self.ring
        if ring.is_finite:
            return ring.element_list()
        n = ring.n
        if n > get_settings().max_q_size:
            raise NotEnumerableError(f"{ring.label} exceeds the rational size cap ({n} > {get_settings().max_q_size})")
        grid = itertools.product(_SAMPLE_SCALARS, repeat=n * n)
        total = len(_SAMPLE_SCALARS) ** (n * n)
        stride = max(1, total // _SAMPLE_LIMIT)
        out = []
        for i, flat in enumerate(grid):
            if i % stride == 0:
                out.append(ring.element([list(flat[r * n:(r + 1) * n]) for r in range(n)]))
            if len(out) >= _SAMPLE_LIMIT:
                break
        log.debug("sampled %d elements of %s", len(out), ring.label)
        return out

    def ideals(self, side: str) -> List[SidedIdeal]:
        return self.cached(("ideals", side), lambda: self._build_ideals(side))

    def _build_ideals(self, side: str) -> List[SidedIdeal]:
        if self.ring.is_finite:
            return generating_family(self.ring, side)
        seen = {}
        for g in self.elements:
            for I in (principal_ideal(g, side), annihilator(g, side)):
                seen.setdefault(I, I)
        return sorted(seen, key=lambda I: I.sort_key())

    def inverse_set(self, a: RingElement, eqs: EquationSet) -> List[RingElement]:
        return self.cached(("set", a.key, eqs.render()), lambda: enumerate_inverse_set(a, eqs))

    def inner(self, a: RingElement) -> List[RingElement]:
        return self.inverse_set(a, EQ1)

    def outer(self, a: RingElement) -> List[RingElement]:
        return self.inverse_set(a, EQ2)

    def reflexive(self, a: RingElement) -> List[RingElement]:
        return self.inverse_set(a, EQ12)

    def idempotents(self) -> List[RingElement]:
        return self.cached(("idempotents",), lambda: [e for e in self.elements if e * e == e])

    def pairs(self) -> Iterator[Tuple[RingElement, RingElement]]:
        return itertools.product(self.elements, repeat=2)

    def triples(self, limit: Optional[int] = None) -> Iterator[Tuple[RingElement, RingElement, RingElement]]:
        """All triples on Z_n; a deterministic stride through them on matrix rings when ``limit`` is set."""
        elems = self.elements
        total = len(elems) ** 3
        stride = 1
        if limit is not None and isinstance(self.ring, MatrixRing) and total > limit:
            stride = total // limit
        for i, t in enumerate(itertools.product(elems, repeat=3)):
            if i % stride == 0:
                yield t

    def render_ideal(self, I: SidedIdeal) -> Dict[str, Any]:
        if I.basis is not None:
            render = self.ring.field.render
            return {"side": I.side, "span": [[render(k) for k in v] for v in I.basis]}
        return {"side": I.side, "elements": [str(k) for k in sorted(I.keys)]}

    def render(self, **values: Any) -> Dict[str, Any]:
        """Assignment rendering: elements through the ring, ideals by span or members."""
        out = {}
        for name, v in values.items():
            if isinstance(v, RingElement):
                out[name] = self.ring.render(v)
            elif isinstance(v, SidedIdeal):
                out[name] = self.render_ideal(v)
            else:
                out[name] = v
        return out


def ideal_pairs(ctx: RingContext, first: str, second: str) -> Iterable[Tuple[SidedIdeal, SidedIdeal]]:
    return itertools.product(ctx.ideals(first), ctx.ideals(second))


from engine.oracle import theorems_basic, theorems_prescribed, theorems_special  # noqa: E402,F401
