"""
JSON encoding for the command line.

Scalars travel as strings ("1/4", "3"), elements as their canonical
rendering (a residue string on Z_n, a list of rows on matrix rings).
Ideals are given by exactly one of

  {"side": "right", "principal": <element>}
  {"side": "left",  "annihilator": <element>}
  {"side": "right", "set": [<element>, ...]}          finite rings
  {"side": "right", "span": [[...], ...]}              matrix rings; colspace / rowspace accepted

Output is canonical: sorted keys, no floats, members in canonical order.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from engine.errors import StructuralError
from engine.ideals.lattice import SidedIdeal, annihilator, from_elements, principal_ideal, subspace_ideal
from engine.ideals.projector import Projector
from engine.inverses.equations import EquationSet
from engine.inverses.prescribed import IdealConstraints, Mode
from engine.inverses.report import InverseReport
from engine.ring.core import Ring, RingElement, ring_for
from engine.ring.spec import dump_ring_spec

_FORMS = ("principal", "annihilator", "set", "span")
_SLOTS = {
    "right_prin": ("right_prin", "right"),
    "S": ("right_prin", "right"),
    "right_ann": ("right_ann", "right"),
    "T": ("right_ann", "right"),
    "left_prin": ("left_prin", "left"),
    "S'": ("left_prin", "left"),
    "left_ann": ("left_ann", "left"),
    "T'": ("left_ann", "left"),
}


class IdealPayload(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    side: Optional[Literal["right", "left"]] = None
    principal: Any = None
    annihilator: Any = None
    set: Optional[List[Any]] = Field(default=None, alias="elements")
    span: Optional[List[List[Any]]] = None
    colspace: Optional[List[List[Any]]] = None
    rowspace: Optional[List[List[Any]]] = None

    @model_validator(mode="after")
    def _one_form(self) -> "IdealPayload":
        if self.colspace is not None or self.rowspace is not None:
            if self.span is not None or (self.colspace is not None and self.rowspace is not None):
                raise ValueError("give the span once")
            if self.colspace is not None:
                self.span, self.colspace = self.colspace, None
                self.side = self.side or "right"
            else:
                self.span, self.rowspace = self.rowspace, None
                self.side = self.side or "left"
        given = [f for f in _FORMS if getattr(self, f) is not None]
        if len(given) != 1:
            raise ValueError(f"an ideal needs exactly one of {', '.join(_FORMS)}; got {given or 'none'}")
        return self


def load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise StructuralError(f"malformed JSON for {what}: {e}") from e


def _maybe_json(value: Any, what: str) -> Any:
    if isinstance(value, str):
        text = value.strip()
        if text[:1] in ("[", "{", '"'):
            return load_json(text, what)
    return value


def decode_ring(value: Any) -> Ring:
    return ring_for(value)


def decode_element(ring: Ring, payload: Any) -> RingElement:
    return ring.element(_maybe_json(payload, "element"))


def decode_ideal(ring: Ring, payload: Any, side: Optional[str] = None) -> SidedIdeal:
    body = IdealPayload.model_validate(_maybe_json(payload, "ideal"))
    if side is not None and body.side is not None and side != body.side:
        raise StructuralError(f"expected a {side} ideal, got a {body.side} ideal")
    side = body.side or side
    if side is None:
        raise StructuralError("ideal side is missing")
    if body.principal is not None:
        return principal_ideal(decode_element(ring, body.principal), side)
    if body.annihilator is not None:
        return annihilator(decode_element(ring, body.annihilator), side)
    if body.set is not None:
        return from_elements(ring, side, [decode_element(ring, e) for e in body.set])
    return subspace_ideal(ring, side, body.span)


def decode_constraints(ring: Ring, payload: Any, mode: Mode) -> IdealConstraints:
    body = _maybe_json(payload, "constraints")
    if not isinstance(body, dict) or not body:
        raise StructuralError("constraints must be a non-empty JSON object")
    kwargs: Dict[str, SidedIdeal] = {}
    for name, value in body.items():
        if name not in _SLOTS:
            raise StructuralError(f"unknown constraint slot {name!r}; expected one of {', '.join(_SLOTS)}")
        field, side = _SLOTS[name]
        if field in kwargs:
            raise StructuralError(f"constraint slot {field} given twice")
        kwargs[field] = decode_ideal(ring, value, side)
    return IdealConstraints(mode=mode, **kwargs)


def decode_equations(text: str) -> EquationSet:
    return EquationSet.parse(text)


def encode_ideal(I: SidedIdeal) -> Dict[str, Any]:
    if I.basis is not None:
        render = I.ring.field.render
        return {"side": I.side, "span": [[render(k) for k in v] for v in I.basis]}
    return {"side": I.side, "set": [I.ring.render(e) for e in _members(I)]}


def _members(I: SidedIdeal) -> List[RingElement]:
    ring = I.ring
    return sorted((RingElement(ring, k) for k in I.keys), key=lambda e: e.sort_key())


def encode(value: Any) -> Any:
    """Turn engine values into JSON-safe data."""
    if isinstance(value, RingElement):
        return value.ring.render(value)
    if isinstance(value, SidedIdeal):
        return encode_ideal(value)
    if isinstance(value, Projector):
        return {"onto": encode_ideal(value.onto), "along": encode_ideal(value.along)}
    if isinstance(value, EquationSet):
        return value.render()
    if isinstance(value, InverseReport):
        return encode_report(value)
    if isinstance(value, BaseModel):
        return encode(dict(value))
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(encode(k)): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [encode(v) for v in value]
    if isinstance(value, float):
        return repr(value)
    return value


def encode_report(rep: InverseReport) -> Dict[str, Any]:
    ring = rep.subject.ring
    out: Dict[str, Any] = {
        "kind": rep.kind,
        "ring": dump_ring_spec(ring.spec),
        "subject": encode(rep.subject),
        "status": rep.status,
        "result": encode(rep.element) if rep.element is not None else None,
    }
    if rep.members is not None:
        out["members"] = encode(rep.members)
        out["count"] = len(rep.members)
    for name in ("family", "index", "reason"):
        v = getattr(rep, name)
        if v is not None:
            out[name] = v
    if rep.satisfied is not None:
        out["satisfied"] = rep.satisfied.render()
    if rep.projector_data:
        out["projectors"] = {label: encode(rho) for label, rho in rep.projector_data}
    if rep.details:
        out["details"] = encode(rep.details)
    return out


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, UTF-8 text, stable across runs."""
    return json.dumps(encode(obj), sort_keys=True, ensure_ascii=False, indent=2)
