from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from engine.ideals.projector import Projector
from engine.inverses.equations import EquationSet
from engine.ring.core import RingElement

Status = Literal["unique", "family", "none"]


class InverseReport(BaseModel):
    """Outcome of an inverse computation; absence is a normal result with a reason."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: str
    subject: RingElement
    status: Status
    element: Optional[RingElement] = None
    members: Optional[List[RingElement]] = None
    family: Optional[str] = None
    satisfied: Optional[EquationSet] = None
    index: Optional[int] = None
    reason: Optional[str] = None
    projector_data: List[Tuple[str, Projector]] = Field(default_factory=list)
    # theorem clause evaluations, cross checks and similar diagnostics
    details: Dict[str, Any] = Field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status != "none"

    @classmethod
    def unique(cls, kind: str, subject: RingElement, x: RingElement, **kw) -> "InverseReport":
        return cls(kind=kind, subject=subject, status="unique", element=x, **kw)

    @classmethod
    def none(cls, kind: str, subject: RingElement, reason: str, **kw) -> "InverseReport":
        return cls(kind=kind, subject=subject, status="none", reason=reason, **kw)


class ClauseReport(BaseModel):
    """Evaluation of a list of statements a theorem asserts to be equivalent."""

    theorem: str
    clauses: Dict[str, bool]

    @property
    def holds(self) -> bool:
        return next(iter(self.clauses.values()), False)

    @property
    def consistent(self) -> bool:
        return len(set(self.clauses.values())) <= 1

    def disagreeing(self) -> List[str]:
        first = self.holds
        return [name for name, v in self.clauses.items() if v != first]
