"""
Ring specifications.

A RingSpec is a small frozen pydantic model; it is hashable and is the
key under which concrete ring backends are cached. Shorthand strings
(zn:6, m2f2, m2q, m2f5, ...) are accepted wherever a spec is parsed.
"""

from __future__ import annotations

import json
import re
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator
from sympy import isprime

from engine.errors import StructuralError


class RationalScalars(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["q"] = "q"


class PrimeFieldScalars(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["gf"] = "gf"
    p: int

    @field_validator("p")
    @classmethod
    def _prime(cls, v: int) -> int:
        if not isprime(v):
            raise ValueError(f"prime-field modulus must be prime, got {v}")
        return v


ScalarSpec = Annotated[Union[RationalScalars, PrimeFieldScalars], Field(discriminator="kind")]


class ModularSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["modular"] = "modular"
    # unit 1 != 0 needs n >= 2
    n: int = Field(ge=2)


class MatrixSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["matrix"] = "matrix"
    size: int = Field(ge=1)
    scalars: ScalarSpec
    involution: Literal["transpose", "none"] = "transpose"


RingSpec = Annotated[Union[ModularSpec, MatrixSpec], Field(discriminator="kind")]

_ADAPTER = TypeAdapter(RingSpec)

_SHORT_ZN = re.compile(r"^zn:(\d+)$")
_SHORT_MAT = re.compile(r"^m(\d+)(q|f(\d+))$")


def ring_label(spec: ModularSpec | MatrixSpec) -> str:
    if isinstance(spec, ModularSpec):
        return f"Z{spec.n}"
    field = "Q" if isinstance(spec.scalars, RationalScalars) else f"F{spec.scalars.p}"
    inv = "" if spec.involution == "transpose" else " (no involution)"
    return f"M{spec.size}({field}){inv}"


def parse_ring_spec(value) -> ModularSpec | MatrixSpec:
    """Accept a spec model, a dict, a JSON string or a shorthand like 'zn:6' / 'm2f5'."""
    if isinstance(value, (ModularSpec, MatrixSpec)):
        return value
    if isinstance(value, str):
        text = value.strip()
        m = _SHORT_ZN.match(text)
        if m:
            return ModularSpec(n=int(m.group(1)))
        m = _SHORT_MAT.match(text)
        if m:
            scalars = RationalScalars() if m.group(2) == "q" else PrimeFieldScalars(p=int(m.group(3)))
            return MatrixSpec(size=int(m.group(1)), scalars=scalars)
        try:
            value = json.loads(text)
        except json.JSONDecodeError as e:
            raise StructuralError(f"unrecognised ring '{text}': not a shorthand and not JSON ({e})") from e
    return _ADAPTER.validate_python(value)


def dump_ring_spec(spec: ModularSpec | MatrixSpec) -> dict:
    return spec.model_dump()
