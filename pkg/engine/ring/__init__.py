"""Concrete rings: Z_n and square matrices over Q or F_p."""

from engine.ring.core import (
    ElementFlags,
    MatrixRing,
    ModularRing,
    Ring,
    RingElement,
    classify_element,
    enumerate_elements,
    involute,
    ring_arith,
    ring_for,
)
from engine.ring.spec import MatrixSpec, ModularSpec, parse_ring_spec, ring_label

__all__ = [
    "ElementFlags",
    "MatrixRing",
    "MatrixSpec",
    "ModularRing",
    "ModularSpec",
    "Ring",
    "RingElement",
    "classify_element",
    "enumerate_elements",
    "involute",
    "parse_ring_spec",
    "ring_arith",
    "ring_for",
    "ring_label",
]
