"""
Concrete ring backends with exact arithmetic.

Two backends are provided:

  ModularRing   Z_n, residues in [0, n), no involution.
  MatrixRing    M_n(Q) or M_n(F_p) on sympy DomainMatrix, with the
                transpose involution unless configured without one.

Elements are immutable RingElement values. Equality is canonical:
two equal elements carry identical keys. Backends are cached per
RingSpec, so ``ring_for(spec)`` always returns the same object and
element identity checks stay cheap.
"""

from __future__ import annotations

import itertools
import logging
import threading
from abc import ABC, abstractmethod
from math import gcd
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict
from sympy.polys.matrices import DomainMatrix

from engine.config import get_settings
from engine.errors import NotEnumerableError, StructuralError, UnsupportedInvolutionError
from engine.ring import linalg
from engine.ring.scalars import ScalarField
from engine.ring.spec import MatrixSpec, ModularSpec, parse_ring_spec, ring_label

log = logging.getLogger(__name__)


class RingElement:
    __slots__ = ("ring", "key")

    def __init__(self, ring: "Ring", key) -> None:
        self.ring = ring
        self.key = key

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise StructuralError(f"expected a ring element, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise StructuralError(f"ring mismatch: {self.ring.label} vs {other.ring.label}")

    def __eq__(self, other) -> bool:
        return isinstance(other, RingElement) and other.ring is self.ring and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return self.ring.add(self, other)

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return self.ring.sub(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return self.ring.mul(self, other)

    def __neg__(self) -> "RingElement":
        return self.ring.neg(self)

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise StructuralError("negative powers are not defined")
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def star(self) -> "RingElement":
        return self.ring.star(self)

    @property
    def is_zero(self) -> bool:
        return self == self.ring.zero

    def sort_key(self):
        return self.ring.order_key(self.key)

    def __repr__(self) -> str:
        return f"<{self.ring.label} {self.ring.render(self)}>"


class Ring(ABC):
    """Common surface of the backends."""

    spec: ModularSpec | MatrixSpec
    label: str
    is_matrix = False

    @property
    @abstractmethod
    def is_finite(self) -> bool: ...

    @property
    @abstractmethod
    def has_involution(self) -> bool: ...

    @property
    @abstractmethod
    def one(self) -> RingElement: ...

    @property
    @abstractmethod
    def zero(self) -> RingElement: ...

    @abstractmethod
    def add(self, a: RingElement, b: RingElement) -> RingElement: ...

    @abstractmethod
    def mul(self, a: RingElement, b: RingElement) -> RingElement: ...

    @abstractmethod
    def neg(self, a: RingElement) -> RingElement: ...

    @abstractmethod
    def star(self, a: RingElement) -> RingElement: ...

    @abstractmethod
    def size(self) -> int: ...

    @abstractmethod
    def _iter_keys(self) -> Iterator: ...

    @abstractmethod
    def element(self, payload) -> RingElement: ...

    @abstractmethod
    def render(self, a: RingElement): ...

    @abstractmethod
    def order_key(self, key): ...

    @abstractmethod
    def inverse(self, a: RingElement) -> Optional[RingElement]: ...

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        return self.add(a, self.neg(b))

    def is_unit(self, a: RingElement) -> bool:
        return self.inverse(a) is not None

    def require_involution(self, what: str = "involution") -> None:
        if not self.has_involution:
            raise UnsupportedInvolutionError(self.label, what)

    def elements(self) -> Iterator[RingElement]:
        """Every element once, in canonical order."""
        if not self.is_finite:
            raise NotEnumerableError(f"{self.label} is infinite and cannot be enumerated")
        self._check_cap()
        for key in self._iter_keys():
            yield RingElement(self, key)

    def _check_cap(self) -> None:
        pass

    def element_list(self) -> List[RingElement]:
        cached = getattr(self, "_element_list", None)
        if cached is None:
            cached = list(self.elements())
            self._element_list = cached
        return cached


class ModularRing(Ring):
    def __init__(self, spec: ModularSpec) -> None:
        self.spec = spec
        self.n = spec.n
        self.label = ring_label(spec)
        self._one = RingElement(self, 1 % self.n)
        self._zero = RingElement(self, 0)

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def has_involution(self) -> bool:
        return False

    @property
    def one(self) -> RingElement:
        return self._one

    @property
    def zero(self) -> RingElement:
        return self._zero

    def add(self, a, b):
        return RingElement(self, (a.key + b.key) % self.n)

    def mul(self, a, b):
        return RingElement(self, (a.key * b.key) % self.n)

    def neg(self, a):
        return RingElement(self, (-a.key) % self.n)

    def star(self, a):
        raise UnsupportedInvolutionError(self.label)

    def size(self) -> int:
        return self.n

    def _iter_keys(self):
        return iter(range(self.n))

    def element(self, payload) -> RingElement:
        if isinstance(payload, RingElement):
            if payload.ring is not self:
                raise StructuralError(f"ring mismatch: {payload.ring.label} vs {self.label}")
            return payload
        if isinstance(payload, bool):
            raise StructuralError(f"malformed residue {payload!r}")
        try:
            value = int(payload)
        except (TypeError, ValueError) as e:
            raise StructuralError(f"malformed residue {payload!r} for {self.label}") from e
        if isinstance(payload, str) and payload.strip() != str(value):
            raise StructuralError(f"malformed residue {payload!r} for {self.label}")
        return RingElement(self, value % self.n)

    def render(self, a: RingElement) -> str:
        return str(a.key)

    def order_key(self, key):
        return key

    def inverse(self, a):
        if gcd(a.key, self.n) != 1:
            return None
        return RingElement(self, pow(a.key, -1, self.n))

    def additive_exponent(self) -> int:
        return self.n

    def subgroup_ideal_generators(self) -> List[RingElement]:
        """One generator d | n per additive subgroup dZ_n, by increasing d."""
        return [RingElement(self, d % self.n) for d in range(1, self.n + 1) if self.n % d == 0]


class MatrixRing(Ring):
    is_matrix = True

    def __init__(self, spec: MatrixSpec) -> None:
        self.spec = spec
        self.n = spec.size
        self.field = ScalarField(spec.scalars)
        self.K = self.field.domain
        self.label = ring_label(spec)
        self._lock = threading.Lock()
        self._dm_cache: Dict[tuple, DomainMatrix] = {}
        self._mul_cache: Dict[Tuple[tuple, tuple], tuple] = {}
        z, o = self.field.zero_key, self.field.one_key
        n = self.n
        self._zero = RingElement(self, tuple(tuple(z for _ in range(n)) for _ in range(n)))
        self._one = RingElement(self, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def is_finite(self) -> bool:
        return self.field.is_finite

    @property
    def has_involution(self) -> bool:
        return self.spec.involution == "transpose"

    @property
    def one(self) -> RingElement:
        return self._one

    @property
    def zero(self) -> RingElement:
        return self._zero

    # DomainMatrix bridge

    def _build_dm(self, a: RingElement) -> DomainMatrix:
        rows = [[self.field.to_domain(k) for k in row] for row in a.key]
        return DomainMatrix(rows, (self.n, self.n), self.K)

    def to_dm(self, a: RingElement) -> DomainMatrix:
        # only finite rings are cached; their element count bounds the cache
        if not self.is_finite:
            return self._build_dm(a)
        dm = self._dm_cache.get(a.key)
        if dm is None:
            dm = self._build_dm(a)
            with self._lock:
                self._dm_cache[a.key] = dm
        return dm

    def from_dm(self, M: DomainMatrix) -> RingElement:
        fd = self.field.from_domain
        return RingElement(self, tuple(tuple(fd(e) for e in row) for row in M.to_list()))

    def from_rows(self, rows) -> RingElement:
        """Element from rows of domain elements."""
        fd = self.field.from_domain
        return RingElement(self, tuple(tuple(fd(e) for e in row) for row in rows))

    # arithmetic

    def add(self, a, b):
        return self.from_dm(self.to_dm(a) + self.to_dm(b))

    def neg(self, a):
        return self.from_dm(-self.to_dm(a))

    def sub(self, a, b):
        return self.from_dm(self.to_dm(a) - self.to_dm(b))

    def mul(self, a, b):
        if not self.is_finite:
            return self.from_dm(self.to_dm(a) * self.to_dm(b))
        k = (a.key, b.key)
        hit = self._mul_cache.get(k)
        if hit is not None:
            return RingElement(self, hit)
        out = self.from_dm(self.to_dm(a) * self.to_dm(b))
        with self._lock:
            self._mul_cache[k] = out.key
        return out

    def star(self, a):
        if not self.has_involution:
            raise UnsupportedInvolutionError(self.label)
        n = self.n
        return RingElement(self, tuple(tuple(a.key[i][j] for i in range(n)) for j in range(n)))

    def size(self) -> int:
        if not self.is_finite:
            raise NotEnumerableError(f"{self.label} is infinite")
        return self.field.p ** (self.n * self.n)

    def _check_cap(self) -> None:
        cap = get_settings().max_fp_size
        if self.n > cap:
            raise NotEnumerableError(
                f"{self.label} exceeds the exhaustive size cap ({self.n} > {cap}); raise --max-size to allow it"
            )

    def _iter_keys(self):
        n = self.n
        for flat in itertools.product(range(self.field.p), repeat=n * n):
            yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))

    def element(self, payload) -> RingElement:
        if isinstance(payload, RingElement):
            if payload.ring is not self:
                raise StructuralError(f"ring mismatch: {payload.ring.label} vs {self.label}")
            return payload
        if not isinstance(payload, (list, tuple)) or len(payload) != self.n:
            raise StructuralError(f"expected {self.n} rows for {self.label}, got {payload!r}")
        rows = []
        for row in payload:
            if not isinstance(row, (list, tuple)) or len(row) != self.n:
                raise StructuralError(f"expected {self.n} entries per row for {self.label}, got {row!r}")
            rows.append(tuple(self.field.parse(v) for v in row))
        return RingElement(self, tuple(rows))

    def render(self, a: RingElement):
        return [[self.field.render(k) for k in row] for row in a.key]

    def order_key(self, key):
        return tuple(self.field.order_key(k) for row in key for k in row)

    def inverse(self, a):
        M = self.to_dm(a)
        if M.det() == self.K.zero:
            return None
        return self.from_dm(M.inv())

    def rank(self, a: RingElement) -> int:
        return linalg.rank_of(self.to_dm(a).to_list(), self.n, self.K)

    def unit_matrix(self, i: int, j: int) -> RingElement:
        """E_ij with 1-based indices."""
        z, o = self.field.zero_key, self.field.one_key
        n = self.n
        return RingElement(
            self, tuple(tuple(o if (r, c) == (i - 1, j - 1) else z for c in range(n)) for r in range(n))
        )


_lock = threading.Lock()
_rings: Dict[object, Ring] = {}


def ring_for(spec) -> Ring:
    """The cached backend for a spec (model, dict, JSON or shorthand)."""
    spec = parse_ring_spec(spec)
    with _lock:
        ring = _rings.get(spec)
        if ring is None:
            ring = ModularRing(spec) if isinstance(spec, ModularSpec) else MatrixRing(spec)
            _rings[spec] = ring
            log.debug("ring backend created: %s", ring.label)
        return ring


def ring_arith(a: RingElement, b: Optional[RingElement], op: str) -> RingElement:
    if op == "neg":
        return -a
    if b is None:
        raise StructuralError(f"operation {op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise StructuralError(f"unknown ring operation {op!r}")


def involute(a: RingElement) -> RingElement:
    return a.star()


class ElementFlags(BaseModel):
    model_config = ConfigDict(frozen=True)

    idempotent: bool
    invertible: bool
    # None when the ring has no involution
    symmetric: Optional[bool] = None
    projection: Optional[bool] = None


def classify_element(a: RingElement) -> ElementFlags:
    idem = a * a == a
    inv = a.ring.is_unit(a)
    if not a.ring.has_involution:
        return ElementFlags(idempotent=idem, invertible=inv)
    sym = a.star() == a
    return ElementFlags(idempotent=idem, invertible=inv, symmetric=sym, projection=idem and sym)


def enumerate_elements(ring) -> Iterator[RingElement]:
    if not isinstance(ring, Ring):
        ring = ring_for(ring)
    return ring.elements()
