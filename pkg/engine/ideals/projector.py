"""
Projectors ρ_{S,T} attached to direct sums R = S ⊕ T of one-sided ideals.

A projector is stored as its two ideals plus the unit image ρ(1). For
right ideals ρ(r) = ρ(1)·r, for left ideals ρ(r) = r·ρ(1), so applying
a projector costs one multiplication.

Left and right multiplication maps are written φ_u(r) = u·r and
_uφ(r) = r·u throughout.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, Optional

from pydantic import BaseModel, ConfigDict

from engine.errors import PreconditionError, StructuralError
from engine.ideals.lattice import (
    DirectSumWitness,
    Side,
    SidedIdeal,
    annihilator,
    check_side,
    direct_sum,
    orthogonal,
    principal_ideal,
)
from engine.ring.core import Ring, RingElement

log = logging.getLogger(__name__)


class Projector:
    __slots__ = ("onto", "along", "witness", "unit_image")

    def __init__(self, witness: DirectSumWitness) -> None:
        self.witness = witness
        self.onto = witness.left_part
        self.along = witness.right_part
        self.unit_image = witness.unit

    @property
    def side(self) -> Side:
        return self.onto.side

    @property
    def ring(self) -> Ring:
        return self.onto.ring

    def __call__(self, r: RingElement) -> RingElement:
        return projector_apply(self, r)

    def __eq__(self, other) -> bool:
        return isinstance(other, Projector) and other.onto == self.onto and other.along == self.along

    def __hash__(self) -> int:
        return hash((self.onto, self.along))

    def __repr__(self) -> str:
        return f"<projector {self.side} onto {self.onto!r} along {self.along!r}>"


def projector_from_sum(S: SidedIdeal, T: SidedIdeal) -> Optional[Projector]:
    if S.side != T.side:
        raise StructuralError(f"mixed-side sum: {S.side} ideal with {T.side} ideal")
    w = direct_sum(S, T)
    if w is None:
        return None
    return Projector(w)


def projector_apply(rho: Projector, r: RingElement) -> RingElement:
    if r.ring is not rho.ring:
        raise StructuralError(f"ring mismatch: {r.ring.label} vs {rho.ring.label}")
    return rho.witness.decompose(r)[0]


def projector_from_idempotent(p: RingElement, side: Side) -> Projector:
    """ρ_{pR, rann(p)} (right) or ρ_{Rp, lann(p)} (left); unit image p."""
    side = check_side(side)
    if p * p != p:
        raise PreconditionError("projector_from_idempotent: p is not idempotent (p² ≠ p)")
    onto, along = principal_ideal(p, side), annihilator(p, side)
    return Projector(DirectSumWitness(onto, along, p))


def projector_complement(rho: Projector) -> Projector:
    """ρ_{T,S}; its unit image is 1 − ρ_{S,T}(1)."""
    return Projector(DirectSumWitness(rho.along, rho.onto, rho.ring.one - rho.unit_image))


class OrthogonalityFlags(BaseModel):
    model_config = ConfigDict(frozen=True)

    right_orthogonal: bool
    left_orthogonal: bool


def projector_orthogonality(rho: Projector) -> OrthogonalityFlags:
    rho.ring.require_involution("projector orthogonality")
    return OrthogonalityFlags(
        right_orthogonal=orthogonal(rho.onto, rho.along, "right"),
        left_orthogonal=orthogonal(rho.onto, rho.along, "left"),
    )


def map_equals_projector(u: RingElement, S: SidedIdeal, T: SidedIdeal) -> bool:
    """φ_u = ρ_{S,T} for right ideals, _uφ = ρ_{S,T} for left ideals."""
    rho = projector_from_sum(S, T)
    return rho is not None and rho.unit_image == u


def map_as_projector(u: RingElement, side: Side) -> Optional[Projector]:
    """φ_u (side='right') or _uφ (side='left') as a projector, if it is one."""
    if u * u != u:
        return None
    return projector_from_idempotent(u, side)


class EndomorphismTable:
    """A finite-ring group endomorphism tabulated on every element."""

    def __init__(self, ring: Ring, fn: Callable[[RingElement], RingElement]) -> None:
        self.ring = ring
        self.table: Dict[object, RingElement] = {r.key: fn(r) for r in ring.element_list()}

    def __call__(self, r: RingElement) -> RingElement:
        return self.table[r.key]

    def is_additive(self) -> bool:
        elems = self.ring.element_list()
        return all(self(x + y) == self(x) + self(y) for x in elems for y in elems)

    def is_idempotent(self) -> bool:
        return all(self(v) == v for v in self.table.values())

    def image_keys(self) -> frozenset:
        return frozenset(v.key for v in self.table.values())

    def kernel_keys(self) -> frozenset:
        z = self.ring.zero
        return frozenset(k for k, v in self.table.items() if v == z)

    def equals_projector(self, rho: Projector) -> bool:
        return all(self(r) == rho(r) for r in self.ring.element_list())
