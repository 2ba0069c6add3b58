"""
The inverse equations and the sets a{i, j, ..., l} they define.

  (1) axa = a      (2) xax = x      (3) (ax)* = ax   (4) (xa)* = xa
  (5) ax = xa      (6) xa² = a      (7) ax² = x      (8) a²x = a
  (9) x²a = x      (1^k) xa^{k+1} = a^k             (^k1) a^{k+1}x = a^k

Equation sets are written as comma separated tokens: "1,2,3,4",
"2,5,1^2" for {2,5,1^2}, "^3 1" (or "pow_right(3)") for (^3 1).
"""

from __future__ import annotations

import re
from typing import FrozenSet, Iterator, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from engine.errors import StructuralError
from engine.ring.core import RingElement

STAR_EQUATIONS = frozenset({3, 4})

_POW_LEFT = re.compile(r"^(?:1\^(\d+)|pow_left\((\d+)\))$")
_POW_RIGHT = re.compile(r"^(?:\^(\d+)\s*1|pow_right\((\d+)\))$")


class EquationSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    equations: FrozenSet[int] = Field(default_factory=frozenset)
    pow_left: Optional[int] = Field(default=None, ge=1)
    pow_right: Optional[int] = Field(default=None, ge=1)

    @field_validator("equations")
    @classmethod
    def _range(cls, v: FrozenSet[int]) -> FrozenSet[int]:
        bad = sorted(e for e in v if not 1 <= e <= 9)
        if bad:
            raise ValueError(f"unknown equation numbers: {bad}")
        return v

    @property
    def needs_involution(self) -> bool:
        return bool(self.equations & STAR_EQUATIONS)

    @property
    def is_empty(self) -> bool:
        return not self.equations and self.pow_left is None and self.pow_right is None

    @classmethod
    def of(cls, *numbers: int, pow_left: Optional[int] = None, pow_right: Optional[int] = None) -> "EquationSet":
        return cls(equations=frozenset(numbers), pow_left=pow_left, pow_right=pow_right)

    @classmethod
    def parse(cls, text: str) -> "EquationSet":
        eqs = set()
        pl = pr = None
        for raw in str(text).split(","):
            tok = raw.strip()
            if not tok:
                continue
            m = _POW_LEFT.match(tok)
            if m:
                pl = int(m.group(1) or m.group(2))
                continue
            m = _POW_RIGHT.match(tok)
            if m:
                pr = int(m.group(1) or m.group(2))
                continue
            if not tok.isdigit():
                raise StructuralError(f"malformed equation token {tok!r}")
            eqs.add(int(tok))
        try:
            out = cls(equations=frozenset(eqs), pow_left=pl, pow_right=pr)
        except ValueError as e:
            raise StructuralError(str(e)) from e
        if out.is_empty:
            raise StructuralError(f"empty equation set {text!r}")
        return out

    def render(self) -> str:
        parts = [str(e) for e in sorted(self.equations)]
        if self.pow_left is not None:
            parts.append(f"1^{self.pow_left}")
        if self.pow_right is not None:
            parts.append(f"^{self.pow_right} 1")
        return ",".join(parts)

    def __str__(self) -> str:
        return "{" + self.render() + "}"

    def union(self, other: "EquationSet") -> "EquationSet":
        return EquationSet(
            equations=self.equations | other.equations,
            pow_left=self.pow_left if other.pow_left is None else other.pow_left,
            pow_right=self.pow_right if other.pow_right is None else other.pow_right,
        )


def _holds(n: int, a: RingElement, x: RingElement) -> bool:
    if n == 1:
        return a * x * a == a
    if n == 2:
        return x * a * x == x
    if n == 3:
        ax = a * x
        return ax.star() == ax
    if n == 4:
        xa = x * a
        return xa.star() == xa
    if n == 5:
        return a * x == x * a
    if n == 6:
        return x * a * a == a
    if n == 7:
        return a * x * x == x
    if n == 8:
        return a * a * x == a
    return x * x * a == x


def satisfies(a: RingElement, x: RingElement, eqs: EquationSet) -> bool:
    """True iff x satisfies every listed equation with respect to a."""
    if a.ring is not x.ring:
        raise StructuralError(f"ring mismatch: {a.ring.label} vs {x.ring.label}")
    if eqs.needs_involution:
        a.ring.require_involution("equations (3)/(4)")
    # cheap equations first
    for n in sorted(eqs.equations, key=lambda e: (e in STAR_EQUATIONS, e)):
        if not _holds(n, a, x):
            return False
    if eqs.pow_left is not None:
        k = eqs.pow_left
        if x * a ** (k + 1) != a**k:
            return False
    if eqs.pow_right is not None:
        k = eqs.pow_right
        if a ** (k + 1) * x != a**k:
            return False
    return True


def satisfied_equations(a: RingElement, x: RingElement) -> EquationSet:
    """Which of (1)-(9) hold; (3) and (4) only on rings with an involution."""
    numbers = [n for n in range(1, 10) if n not in STAR_EQUATIONS or a.ring.has_involution]
    return EquationSet(equations=frozenset(n for n in numbers if _holds(n, a, x)))


def iter_inverse_set(a: RingElement, eqs: EquationSet) -> Iterator[RingElement]:
    """Stream a{eqs} in canonical order; never materializes the result."""
    if eqs.needs_involution:
        a.ring.require_involution("equations (3)/(4)")
    for x in a.ring.elements():
        if satisfies(a, x, eqs):
            yield x


def enumerate_inverse_set(a: RingElement, eqs: EquationSet) -> List[RingElement]:
    return list(iter_inverse_set(a, eqs))


def count_inverse_set(a: RingElement, eqs: EquationSet) -> int:
    return sum(1 for _ in iter_inverse_set(a, eqs))


def first_inverse(a: RingElement, eqs: EquationSet) -> Optional[RingElement]:
    return next(iter_inverse_set(a, eqs), None)


# shorthands used across the package
EQ1 = EquationSet.of(1)
EQ2 = EquationSet.of(2)
EQ12 = EquationSet.of(1, 2)
EQ15 = EquationSet.of(1, 5)
EQ125 = EquationSet.of(1, 2, 5)
EQ1234 = EquationSet.of(1, 2, 3, 4)
EQ_CORE = EquationSet.of(1, 2, 3, 6, 7)
EQ_DUAL_CORE = EquationSet.of(1, 2, 4, 8, 9)


def drazin_equations(k: int) -> EquationSet:
    return EquationSet.of(2, 5, pow_left=k)
