"""
One-sided ideals of the concrete rings.

Representation depends on the backend:

  - Matrix rings M_n(F): a right ideal is {X : col(X) ⊆ V} and a left
    ideal is {X : row(X) ⊆ W} for a subspace V (resp. W) of F^n. The
    subspace is stored as its reduced echelon basis, which makes the
    encoding canonical and finite even over Q.
  - Z_n: ideals are stored extensionally as the set of residues.

Every operation below dispatches on that representation. Sets given
explicitly on a matrix ring are converted to the subspace form after a
closure check.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Callable, Iterable, List, Literal, Optional, Tuple

from engine.errors import NotEnumerableError, StructuralError
from engine.ring import linalg
from engine.ring.core import MatrixRing, Ring, RingElement

log = logging.getLogger(__name__)

Side = Literal["right", "left"]
SIDES: Tuple[Side, Side] = ("right", "left")


def check_side(side: str) -> Side:
    if side not in SIDES:
        raise StructuralError(f"side must be 'right' or 'left', got {side!r}")
    return side  # type: ignore[return-value]


class SidedIdeal:
    """A right or left ideal; immutable, hashable, canonical."""

    __slots__ = ("ring", "side", "basis", "keys", "_rows", "_perp")

    def __init__(self, ring: Ring, side: Side, *, basis=None, keys=None) -> None:
        self.ring = ring
        self.side = check_side(side)
        self.basis: Optional[Tuple[tuple, ...]] = basis
        self.keys: Optional[frozenset] = keys
        self._rows = None
        self._perp = None

    @property
    def repr(self) -> str:
        return "subspace" if self.basis is not None else "extensional"

    # subspace helpers

    def rows(self) -> list:
        """Basis vectors as rows of domain elements."""
        if self._rows is None:
            to = self.ring.field.to_domain
            self._rows = [[to(k) for k in v] for v in self.basis]
        return self._rows

    def perp(self) -> list:
        if self._perp is None:
            self._perp = linalg.perp_rows(self.rows(), self.ring.n, self.ring.K)
        return self._perp

    @property
    def dim(self) -> int:
        return len(self.basis)

    # identity

    def _canon(self):
        if self.basis is not None:
            return self.basis
        return self.keys

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SidedIdeal)
            and other.ring is self.ring
            and other.side == self.side
            and other._canon() == self._canon()
        )

    def __hash__(self) -> int:
        return hash((self.side, self._canon()))

    def sort_key(self):
        if self.basis is not None:
            order = self.ring.field.order_key
            return (len(self.basis), tuple(tuple(order(k) for k in v) for v in self.basis))
        return (len(self.keys), tuple(sorted(self.keys)))

    def __contains__(self, r: RingElement) -> bool:
        return ideal_contains(self, r)

    def __repr__(self) -> str:
        if self.basis is not None:
            what = "col" if self.side == "right" else "row"
            return f"<{self.side} ideal {what}span dim={self.dim} in {self.ring.label}>"
        return f"<{self.side} ideal {sorted(self.keys)} in {self.ring.label}>"


def _from_rows(ring: MatrixRing, side: Side, rows) -> SidedIdeal:
    fd = ring.field.from_domain
    basis = linalg.span_basis(rows, ring.n, ring.K)
    return SidedIdeal(ring, side, basis=tuple(tuple(fd(e) for e in v) for v in basis))


def _from_keys(ring: Ring, side: Side, keys: Iterable) -> SidedIdeal:
    return SidedIdeal(ring, side, keys=frozenset(keys))


def _same(I: SidedIdeal, J: SidedIdeal) -> None:
    if I.ring is not J.ring:
        raise StructuralError(f"ring mismatch: {I.ring.label} vs {J.ring.label}")
    if I.side != J.side:
        raise StructuralError(f"side mismatch: {I.side} ideal vs {J.side} ideal")


def _rows_of(a: RingElement) -> list:
    return a.ring.to_dm(a).to_list()


# constructors


def zero_ideal(ring: Ring, side: Side) -> SidedIdeal:
    if ring.is_matrix:
        return SidedIdeal(ring, side, basis=())
    return _from_keys(ring, side, [ring.zero.key])


def whole_ring(ring: Ring, side: Side) -> SidedIdeal:
    if ring.is_matrix:
        return _from_rows(ring, side, linalg.identity_rows(ring.n, ring.K))
    return _from_keys(ring, side, (e.key for e in ring.element_list()))


@lru_cache(maxsize=8192)
def principal_ideal(a: RingElement, side: Side) -> SidedIdeal:
    """aR for side='right', Ra for side='left'."""
    side = check_side(side)
    ring = a.ring
    if ring.is_matrix:
        rows = _rows_of(a)
        if side == "right":
            rows = linalg.transpose_rows(rows, ring.n)
        return _from_rows(ring, side, rows)
    if side == "right":
        return _from_keys(ring, side, ((a * r).key for r in ring.element_list()))
    return _from_keys(ring, side, ((r * a).key for r in ring.element_list()))


@lru_cache(maxsize=8192)
def annihilator(a: RingElement, side: Side) -> SidedIdeal:
    """rann(a) for side='right', lann(a) for side='left'."""
    side = check_side(side)
    ring = a.ring
    if ring.is_matrix:
        rows = _rows_of(a)
        if side == "left":
            rows = linalg.transpose_rows(rows, ring.n)
        return _from_rows(ring, side, linalg.nullspace_rows(rows, ring.n, ring.K))
    zero = ring.zero
    if side == "right":
        return _from_keys(ring, side, (r.key for r in ring.element_list() if a * r == zero))
    return _from_keys(ring, side, (r.key for r in ring.element_list() if r * a == zero))


def subspace_ideal(ring: Ring, side: Side, vectors) -> SidedIdeal:
    """Right ideal with column space in span(vectors), or left ideal with row space in it."""
    side = check_side(side)
    if not ring.is_matrix:
        raise StructuralError(f"subspace ideals need a matrix ring, got {ring.label}")
    rows = []
    for v in vectors:
        if not isinstance(v, (list, tuple)) or len(v) != ring.n:
            raise StructuralError(f"expected vectors of length {ring.n}, got {v!r}")
        rows.append([ring.field.to_domain(ring.field.parse(s)) for s in v])
    return _from_rows(ring, side, rows)


def from_elements(ring: Ring, side: Side, elements: Iterable[RingElement]) -> SidedIdeal:
    """An ideal given by its full element set; closure is checked."""
    side = check_side(side)
    elems = [ring.element(e) for e in elements]
    if not elems:
        raise StructuralError("an ideal contains at least 0")
    if ring.is_matrix:
        if not ring.is_finite:
            raise StructuralError("explicit element sets are only accepted on finite rings")
        vectors = []
        for x in elems:
            rows = _rows_of(x)
            vectors.extend(linalg.transpose_rows(rows, ring.n) if side == "right" else rows)
        ideal = _from_rows(ring, side, vectors)
        # the span of the columns (rows) is an ideal; the set is one iff nothing was added
        if ideal_size(ideal) != len(set(elems)):
            raise StructuralError(f"element set is not a {side} ideal of {ring.label}")
        return ideal
    ideal = _from_keys(ring, side, (x.key for x in elems))
    if not _closed(ideal):
        raise StructuralError(f"element set is not a {side} ideal of {ring.label}")
    return ideal


def _closed(I: SidedIdeal) -> bool:
    ring = I.ring
    mine = [RingElement(ring, k) for k in I.keys]
    if ring.zero.key not in I.keys:
        return False
    for x in mine:
        if (-x).key not in I.keys:
            return False
        for y in mine:
            if (x + y).key not in I.keys:
                return False
        for r in ring.element_list():
            prod = x * r if I.side == "right" else r * x
            if prod.key not in I.keys:
                return False
    return True


def all_subgroup_ideals(ring: Ring) -> List[SidedIdeal]:
    """All ideals dZ_n of Z_n (every additive subgroup is one)."""
    if ring.is_matrix:
        raise StructuralError("subgroup ideals are only listed for Z_n")
    return [principal_ideal(g, "right") for g in ring.subgroup_ideal_generators()]


# predicates


def ideal_contains(I: SidedIdeal, r: RingElement) -> bool:
    if r.ring is not I.ring:
        raise StructuralError(f"ring mismatch: {r.ring.label} vs {I.ring.label}")
    if I.basis is None:
        return r.key in I.keys
    P = I.perp()
    if not P:
        return True
    ring = I.ring
    X = ring.to_dm(r)
    Pm = linalg.build(P, ring.n, ring.K)
    prod = Pm * X if I.side == "right" else X * Pm.transpose()
    return all(e == ring.K.zero for row in prod.to_list() for e in row)


def membership_condition(I: SidedIdeal) -> Callable[[RingElement], RingElement]:
    """
    An additive map m with m(r) = 0 iff r ∈ I.

    On matrix rings m(X) = P·X (right) or X·Pᵀ (left) for P spanning the
    orthogonal complement, so membership constraints stay linear in X.
    On Z_n every ideal is dZ_n and r ∈ dZ_n iff |dZ_n|·r = 0.
    """
    ring = I.ring
    if I.basis is None:
        g = RingElement(ring, len(I.keys) % ring.n)
        return lambda r: g * r
    P = list(I.perp())
    P += [[ring.K.zero] * ring.n for _ in range(ring.n - len(P))]
    if I.side == "right":
        Pe = ring.from_rows(P)
        return lambda r: Pe * r
    Pt = ring.from_rows(linalg.transpose_rows(P, ring.n))
    return lambda r: r * Pt


def ideal_subset(I: SidedIdeal, J: SidedIdeal) -> bool:
    _same(I, J)
    if I.basis is None:
        return I.keys <= J.keys
    if I.dim > J.dim:
        return False
    ring = I.ring
    return linalg.rank_of(J.rows() + I.rows(), ring.n, ring.K) == J.dim


def ideal_equal(I: SidedIdeal, J: SidedIdeal) -> bool:
    _same(I, J)
    return I == J


def is_zero_ideal(I: SidedIdeal) -> bool:
    return I.dim == 0 if I.basis is not None else I.keys == {I.ring.zero.key}


def is_whole_ring(I: SidedIdeal) -> bool:
    if I.basis is not None:
        return I.dim == I.ring.n
    return len(I.keys) == I.ring.size()


# lattice operations


def ideal_meet(I: SidedIdeal, J: SidedIdeal) -> SidedIdeal:
    _same(I, J)
    if I.basis is None:
        return _from_keys(I.ring, I.side, I.keys & J.keys)
    ring = I.ring
    return _from_rows(ring, I.side, linalg.perp_rows(I.perp() + J.perp(), ring.n, ring.K))


def ideal_join(I: SidedIdeal, J: SidedIdeal) -> SidedIdeal:
    _same(I, J)
    if I.basis is None:
        ring = I.ring
        sums = {(RingElement(ring, x) + RingElement(ring, y)).key for x in I.keys for y in J.keys}
        return _from_keys(ring, I.side, sums)
    return _from_rows(I.ring, I.side, I.rows() + J.rows())


def ideal_image(a: RingElement, I: SidedIdeal) -> SidedIdeal:
    """aS for a right ideal S, S'a for a left ideal S'."""
    ring = I.ring
    if a.ring is not ring:
        raise StructuralError(f"ring mismatch: {a.ring.label} vs {ring.label}")
    if I.basis is None:
        if I.side == "right":
            return _from_keys(ring, "right", ((a * RingElement(ring, k)).key for k in I.keys))
        return _from_keys(ring, "left", ((RingElement(ring, k) * a).key for k in I.keys))
    if I.dim == 0:
        return I
    B = linalg.build(I.rows(), ring.n, ring.K)
    A = ring.to_dm(a)
    rows = (B * A.transpose()).to_list() if I.side == "right" else (B * A).to_list()
    return _from_rows(ring, I.side, rows)


def ideal_preimage(a: RingElement, I: SidedIdeal) -> SidedIdeal:
    """{r : ar ∈ T} for a right ideal T, {r : ra ∈ T'} for a left ideal T'."""
    ring = I.ring
    if a.ring is not ring:
        raise StructuralError(f"ring mismatch: {a.ring.label} vs {ring.label}")
    if I.basis is None:
        if I.side == "right":
            keys = (r.key for r in ring.element_list() if (a * r).key in I.keys)
        else:
            keys = (r.key for r in ring.element_list() if (r * a).key in I.keys)
        return _from_keys(ring, I.side, keys)
    P = I.perp()
    if not P:
        return whole_ring(ring, I.side)
    Pm = linalg.build(P, ring.n, ring.K)
    A = ring.to_dm(a)
    M = Pm * A if I.side == "right" else Pm * A.transpose()
    return _from_rows(ring, I.side, linalg.nullspace_rows(M.to_list(), ring.n, ring.K))


def annihilator_of(I: SidedIdeal) -> SidedIdeal:
    """lann(S) (a left ideal) for a right ideal S; rann(S') (a right ideal) for a left ideal S'."""
    ring = I.ring
    other: Side = "left" if I.side == "right" else "right"
    if I.basis is not None:
        return _from_rows(ring, other, I.perp())
    mine = [RingElement(ring, k) for k in I.keys]
    zero = ring.zero
    if I.side == "right":
        keys = (x.key for x in ring.element_list() if all(x * s == zero for s in mine))
    else:
        keys = (x.key for x in ring.element_list() if all(s * x == zero for s in mine))
    return _from_keys(ring, other, keys)


# enumeration


def ideal_size(I: SidedIdeal) -> int:
    if I.basis is None:
        return len(I.keys)
    if not I.ring.is_finite:
        raise NotEnumerableError(f"ideals of {I.ring.label} are infinite")
    return I.ring.field.p ** (I.dim * I.ring.n)


def ideal_members(I: SidedIdeal) -> List[RingElement]:
    """All elements in canonical order (finite rings)."""
    ring = I.ring
    if I.basis is None:
        out = [RingElement(ring, k) for k in I.keys]
        out.sort(key=lambda e: e.sort_key())
        return out
    if not ring.is_finite:
        raise NotEnumerableError(f"ideals of {ring.label} are infinite")
    p, n = ring.field.p, ring.n
    vectors = []
    for coeffs in itertools.product(range(p), repeat=I.dim):
        vectors.append(tuple(sum(c * v[j] for c, v in zip(coeffs, I.basis)) % p for j in range(n)))
    out = []
    for pick in itertools.product(vectors, repeat=n):
        if I.side == "right":
            key = tuple(tuple(pick[j][i] for j in range(n)) for i in range(n))
        else:
            key = tuple(pick)
        out.append(RingElement(ring, key))
    out.sort(key=lambda e: e.sort_key())
    return out


def to_extensional(I: SidedIdeal) -> SidedIdeal:
    if I.basis is None:
        return I
    return _from_keys(I.ring, I.side, (e.key for e in ideal_members(I)))


def spanning_elements(I: SidedIdeal) -> List[RingElement]:
    """Elements whose additive span is I."""
    ring = I.ring
    if I.basis is None:
        return [RingElement(ring, k) for k in sorted(I.keys)]
    z = ring.field.zero_key
    n = ring.n
    out = []
    for v in I.basis:
        for j in range(n):
            if I.side == "right":
                key = tuple(tuple(v[i] if c == j else z for c in range(n)) for i in range(n))
            else:
                key = tuple(tuple(v) if r == j else tuple(z for _ in range(n)) for r in range(n))
            out.append(RingElement(ring, key))
    return out


# direct sums


class DirectSumWitness:
    """R = S ⊕ T together with the S-component of 1."""

    __slots__ = ("left_part", "right_part", "unit")

    def __init__(self, left_part: SidedIdeal, right_part: SidedIdeal, unit: RingElement) -> None:
        self.left_part = left_part
        self.right_part = right_part
        self.unit = unit

    def decompose(self, r: RingElement) -> Tuple[RingElement, RingElement]:
        # one-sided ideals make the S-part of r equal to unit*r (right) or r*unit (left)
        s = self.unit * r if self.left_part.side == "right" else r * self.unit
        return s, r - s


def direct_sum(S: SidedIdeal, T: SidedIdeal) -> Optional[DirectSumWitness]:
    _same(S, T)
    ring = S.ring
    if S.basis is not None:
        n = ring.n
        if S.dim + T.dim != n or linalg.rank_of(S.rows() + T.rows(), n, ring.K) != n:
            return None
        P = linalg.oblique_projector(S.rows(), T.rows(), n, ring.K)
        unit = ring.from_dm(P) if S.side == "right" else ring.from_dm(P.transpose())
        return DirectSumWitness(S, T, unit)
    if S.keys & T.keys != {ring.zero.key}:
        return None
    one = ring.one
    for k in sorted(S.keys):
        s = RingElement(ring, k)
        if (one - s).key in T.keys:
            # S ∩ T = 0 and 1 ∈ S + T give S + T = R
            return DirectSumWitness(S, T, s)
    return None


def _candidates(ring: Ring, side: Side) -> Iterable[SidedIdeal]:
    seen = set()
    for g in ring.element_list():
        I = principal_ideal(g, side)
        if I not in seen:
            seen.add(I)
            yield I


def complement(S: SidedIdeal) -> Optional[SidedIdeal]:
    """Some T with R = S ⊕ T, chosen deterministically."""
    ring = S.ring
    if S.basis is not None:
        n, K = ring.n, ring.K
        rows = list(S.rows())
        added = []
        for e in linalg.identity_rows(n, K):
            if linalg.rank_of(rows + [e], n, K) > len(rows):
                rows.append(e)
                added.append(e)
        return _from_rows(ring, S.side, added)
    for T in _candidates(ring, S.side):
        if direct_sum(S, T) is not None:
            log.debug("complement of %r found: %r", S, T)
            return T
    return None


def orthogonal(I: SidedIdeal, J: SidedIdeal, flavor: Side) -> bool:
    """I ⊥_r J (a*b = 0) or I ⊥_l J (ab* = 0) for all a ∈ I, b ∈ J."""
    flavor = check_side(flavor)
    ring = I.ring
    ring.require_involution("ideal orthogonality")
    if J.ring is not ring:
        raise StructuralError(f"ring mismatch: {I.ring.label} vs {J.ring.label}")
    zero = ring.zero
    xs, ys = spanning_elements(I), spanning_elements(J)
    if flavor == "right":
        return all(x.star() * y == zero for x in xs for y in ys)
    return all(x * y.star() == zero for x in xs for y in ys)


def generating_family(ring: Ring, side: Side) -> List[SidedIdeal]:
    """
    The ideals oracle quantifiers range over: every principal ideal and
    annihilator of a ring element, closed under complement, plus every
    subgroup ideal on Z_n. Canonical order.
    """
    side = check_side(side)
    found = set()
    for g in ring.element_list():
        found.add(principal_ideal(g, side))
        found.add(annihilator(g, side))
    if not ring.is_matrix:
        found.update(
            I if side == "right" else SidedIdeal(ring, "left", keys=I.keys) for I in all_subgroup_ideals(ring)
        )
    frontier = list(found)
    while frontier:
        nxt = []
        for I in frontier:
            T = complement(I)
            if T is not None and T not in found:
                found.add(T)
                nxt.append(T)
        frontier = nxt
    return sorted(found, key=lambda I: I.sort_key())


def ideal_filter(ring: Ring, side: Side, pred: Callable[[RingElement], bool]) -> SidedIdeal:
    """Extensional ideal of the elements satisfying pred (finite rings, caller guarantees closure)."""
    keys = [r.key for r in ring.element_list() if pred(r)]
    if ring.is_matrix:
        return from_elements(ring, side, [RingElement(ring, k) for k in keys])
    return _from_keys(ring, side, keys)
