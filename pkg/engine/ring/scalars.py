"""
Exact scalar fields for matrix rings: QQ and GF(p) from sympy.

Scalars travel through the engine as canonical keys: a reduced
(numerator, denominator) pair for QQ and a residue in [0, p) for GF(p).
Keys are hashable and compare by value, domain elements are only
materialized when a DomainMatrix is built.
"""

from __future__ import annotations

from typing import Iterator, Tuple, Union

from sympy import GF, QQ, Rational

from engine.errors import StructuralError
from engine.ring.spec import PrimeFieldScalars, RationalScalars

ScalarKey = Union[int, Tuple[int, int]]


class ScalarField:
    def __init__(self, spec: RationalScalars | PrimeFieldScalars) -> None:
        self.spec = spec
        if isinstance(spec, PrimeFieldScalars):
            self.p = spec.p
            self.domain = GF(spec.p)
            self.label = f"F{spec.p}"
        else:
            self.p = None
            self.domain = QQ
            self.label = "Q"

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def zero_key(self) -> ScalarKey:
        return 0 if self.p else (0, 1)

    @property
    def one_key(self) -> ScalarKey:
        return 1 if self.p else (1, 1)

    def keys(self) -> Iterator[ScalarKey]:
        if not self.p:
            raise StructuralError("the rational field cannot be enumerated")
        return iter(range(self.p))

    def to_domain(self, key: ScalarKey):
        if self.p:
            return self.domain(key)
        return self.domain(*key)

    def from_domain(self, e) -> ScalarKey:
        if self.p:
            return int(e) % self.p
        return (int(e.numerator), int(e.denominator))

    def from_rational(self, num: int, den: int) -> ScalarKey:
        if den == 0:
            raise StructuralError("zero denominator")
        if self.p:
            if den % self.p == 0:
                raise StructuralError(f"denominator {den} is not invertible in F{self.p}")
            return (num * pow(den, -1, self.p)) % self.p
        return self.from_domain(QQ(num, den))

    def parse(self, value) -> ScalarKey:
        """Scalars arrive as strings ("1/4", "-2"), ints, or (num, den) pairs."""
        if isinstance(value, bool):
            raise StructuralError(f"not a scalar: {value!r}")
        if isinstance(value, int):
            return self.from_rational(value, 1)
        if isinstance(value, tuple) and len(value) == 2:
            return self.from_rational(int(value[0]), int(value[1]))
        if isinstance(value, str):
            try:
                r = Rational(value.strip())
            except ZeroDivisionError as e:
                raise StructuralError("zero denominator") from e
            except (TypeError, ValueError) as e:
                raise StructuralError(f"malformed scalar {value!r}") from e
            return self.from_rational(int(r.p), int(r.q))
        raise StructuralError(f"not a scalar: {value!r}")

    def render(self, key: ScalarKey) -> str:
        if self.p:
            return str(key)
        n, d = key
        return str(n) if d == 1 else f"{n}/{d}"

    def order_key(self, key: ScalarKey):
        if self.p:
            return key
        return QQ(*key)

    def is_zero_key(self, key: ScalarKey) -> bool:
        return key == self.zero_key
