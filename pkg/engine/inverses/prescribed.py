"""
Generalized inverses with prescribed principal and annihilator ideals.

A constraint bundle fills up to four slots:

  S   right ideal        T   right ideal
  S'  left ideal         T'  left ideal

In ``inner`` mode the slots bind xaR, rann(ax), Rax and lann(xa), the
ideals an inner inverse controls. In ``outer`` mode they bind xR,
rann(x), Rx and lann(x). Eight shapes are supported: the four pairs
(S,T), (S',T'), (S,S'), (T,T') and the four single slots.

Projector unit images drive every construction:

  S   ρ_{S,rann(a)}(1)     multiplies a^(1) on the left
  T   ρ_{aR,T}(1)          multiplies a^(1) on the right
  S'  ρ_{S',lann(a)}(1)    multiplies a^(1) on the right
  T'  ρ_{Ra,T'}(1)         multiplies a^(1) on the left
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from engine.errors import (
    ConstraintShapeError,
    InternalVerificationError,
    NotEnumerableError,
    PreconditionError,
    StructuralError,
)
from engine.ideals.lattice import (
    SidedIdeal,
    annihilator,
    annihilator_of,
    direct_sum,
    ideal_image,
    ideal_meet,
    ideal_members,
    ideal_preimage,
    ideal_subset,
    is_zero_ideal,
    membership_condition,
    principal_ideal,
    spanning_elements,
)
from engine.ideals.projector import EndomorphismTable, map_equals_projector, projector_from_sum
from engine.inverses.classic import inner_inverse, projector_data, solve_affine
from engine.inverses.equations import EQ1, EQ2, EQ12, enumerate_inverse_set, iter_inverse_set, satisfied_equations, satisfies
from engine.inverses.report import ClauseReport, InverseReport
from engine.ring.core import Ring, RingElement

log = logging.getLogger(__name__)

R = "right"
L = "left"


class Mode(str, Enum):
    INNER = "inner"
    OUTER = "outer"


class Shape(str, Enum):
    RIGHT_PAIR = "S,T"
    LEFT_PAIR = "S',T'"
    PRINCIPAL_PAIR = "S,S'"
    ANNIHILATOR_PAIR = "T,T'"
    RIGHT_PRINCIPAL = "S"
    RIGHT_ANNIHILATOR = "T"
    LEFT_PRINCIPAL = "S'"
    LEFT_ANNIHILATOR = "T'"


PAIR_SHAPES = frozenset({Shape.RIGHT_PAIR, Shape.LEFT_PAIR, Shape.PRINCIPAL_PAIR, Shape.ANNIHILATOR_PAIR})

_SLOT_SIDES = {"S": R, "T": R, "S'": L, "T'": L}
_SHAPES = {frozenset(s.value.split(",")): s for s in Shape}


class IdealConstraints(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    right_prin: Optional[SidedIdeal] = None
    right_ann: Optional[SidedIdeal] = None
    left_prin: Optional[SidedIdeal] = None
    left_ann: Optional[SidedIdeal] = None
    mode: Mode = Mode.INNER

    def __init__(self, **data) -> None:
        super().__init__(**data)
        slots = self.slots()
        if not slots:
            raise ConstraintShapeError("at least one ideal constraint is required")
        for name, ideal in slots.items():
            if ideal.side != _SLOT_SIDES[name]:
                raise ConstraintShapeError(f"{name} must be a {_SLOT_SIDES[name]} ideal, got a {ideal.side} ideal")
        if len({id(I.ring) for I in slots.values()}) > 1:
            raise StructuralError("constraint ideals belong to different rings")
        if frozenset(slots) not in _SHAPES:
            raise ConstraintShapeError(f"unsupported constraint shape {{{', '.join(slots)}}}")

    def slots(self) -> Dict[str, SidedIdeal]:
        pairs = (("S", self.right_prin), ("T", self.right_ann), ("S'", self.left_prin), ("T'", self.left_ann))
        return {name: I for name, I in pairs if I is not None}

    @property
    def shape(self) -> Shape:
        return _SHAPES[frozenset(self.slots())]

    @property
    def ring(self) -> Ring:
        return next(iter(self.slots().values())).ring

    def with_mode(self, mode: Mode) -> "IdealConstraints":
        return self.model_copy(update={"mode": mode})

    def bound_ideals(self, a: RingElement, x: RingElement) -> Dict[str, SidedIdeal]:
        """The ideals of x (or of xa, ax) that the slots are compared with."""
        out = {}
        for name in self.slots():
            if self.mode == Mode.INNER:
                out[name] = {
                    "S": lambda: principal_ideal(x * a, R),
                    "T": lambda: annihilator(a * x, R),
                    "S'": lambda: principal_ideal(a * x, L),
                    "T'": lambda: annihilator(x * a, L),
                }[name]()
            else:
                out[name] = {
                    "S": lambda: principal_ideal(x, R),
                    "T": lambda: annihilator(x, R),
                    "S'": lambda: principal_ideal(x, L),
                    "T'": lambda: annihilator(x, L),
                }[name]()
        return out

    def holds(self, a: RingElement, x: RingElement) -> bool:
        slots = self.slots()
        return all(slots[name] == I for name, I in self.bound_ideals(a, x).items())

    def describe(self) -> str:
        return f"{self.mode.value} constraints on {{{self.shape.value}}}"


def _unit(S: SidedIdeal, T: SidedIdeal) -> Optional[RingElement]:
    rho = projector_from_sum(S, T)
    return None if rho is None else rho.unit_image


def _inner_units(a: RingElement, c: IdealConstraints) -> Tuple[Optional[RingElement], Optional[RingElement], Optional[str]]:
    """The left and right multipliers of a^(1) for the shape, or the failed direct sum."""
    one = a.ring.one
    s = c.slots()
    left = right = one
    if "S" in s:
        left = _unit(s["S"], annihilator(a, R))
        if left is None:
            return None, None, "R = S ⊕ rann(a) fails"
    if "T'" in s:
        left = _unit(principal_ideal(a, L), s["T'"])
        if left is None:
            return None, None, "R = Ra ⊕ T' fails"
    if "T" in s:
        right = _unit(principal_ideal(a, R), s["T"])
        if right is None:
            return None, None, "R = aR ⊕ T fails"
    if "S'" in s:
        right = _unit(s["S'"], annihilator(a, L))
        if right is None:
            return None, None, "R = S' ⊕ lann(a) fails"
    return left, right, None


# {1}-inverses


class ParamFamily(BaseModel):
    """x = left_mult·a^(1)·right_mult + corr_left·y·corr_right, y ∈ R."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    subject: RingElement
    shape: Shape
    inner: RingElement
    left_mult: RingElement
    right_mult: RingElement
    corr_left: RingElement
    corr_right: RingElement
    free_parameter_role: str
    # True when one side of the correction is the identity: a single fixed
    # a^(1) with (1-a^(1)a)y(1-aa^(1)) does not reach every solution there
    widened: bool = False

    @property
    def base(self) -> RingElement:
        return self.left_mult * self.inner * self.right_mult

    def instantiate(self, y: RingElement) -> RingElement:
        return self.base + self.corr_left * y * self.corr_right

    def contains(self, x: RingElement) -> bool:
        d = x - self.base
        return self.corr_left * d * self.corr_right == d

    def members(self) -> List[RingElement]:
        seen = {}
        for y in self.subject.ring.elements():
            x = self.instantiate(y)
            seen.setdefault(x.key, x)
        return sorted(seen.values(), key=lambda e: e.sort_key())

    def describe(self) -> str:
        return f"{{{self.shape.value}}}: {self.free_parameter_role}"


def _correction_role(xa_fixed: bool, ax_fixed: bool) -> str:
    if xa_fixed and ax_fixed:
        return "base + (1 - a1·a)·y·(1 - a·a1), y ∈ R (rann(a) ∩ lann(a))"
    if xa_fixed:
        return "base + y·(1 - a·a1), y ∈ R (lann(a))"
    return "base + (1 - a1·a)·y, y ∈ R (rann(a))"


def _inner_family(a: RingElement, c: IdealConstraints) -> Tuple[Optional[ParamFamily], Optional[str]]:
    if c.mode != Mode.INNER:
        raise ConstraintShapeError("{1}-inverse families take inner-mode constraints")
    left, right, why = _inner_units(a, c)
    if why is not None:
        return None, why
    g = inner_inverse(a)
    if g is None:
        return None, "a{1} is empty"
    ring = a.ring
    one = ring.one
    slots = c.slots()
    xa_fixed = "S" in slots or "T'" in slots
    ax_fixed = "T" in slots or "S'" in slots
    fam = ParamFamily(
        subject=a,
        shape=c.shape,
        inner=g,
        left_mult=left,
        right_mult=right,
        corr_left=one - g * a if ax_fixed else one,
        corr_right=one - a * g if xa_fixed else one,
        free_parameter_role=_correction_role(xa_fixed, ax_fixed),
        widened=not (xa_fixed and ax_fixed),
    )
    base = fam.base
    if not satisfies(a, base, EQ1) or not c.holds(a, base):
        raise InternalVerificationError(f"{{1}}-family base for {c.describe()} misses its constraints")
    if fam.widened:
        log.debug("family for %s widened beyond a single inner inverse", c.describe())
    return fam, None


def one_inverse_family(a: RingElement, c: IdealConstraints) -> Optional[ParamFamily]:
    """All x ∈ a{1} whose xaR / rann(ax) / Rax / lann(xa) match c, or None."""
    return _inner_family(a, c)[0]


def one_inverse_report(a: RingElement, c: IdealConstraints) -> InverseReport:
    fam, why = _inner_family(a, c)
    details = {"shape": c.shape.value}
    if fam is None:
        return InverseReport.none("inner", a, why, details=details)
    members = None
    if a.ring.is_finite:
        try:
            members = fam.members()
        except NotEnumerableError:
            members = None
    details.update(widened=fam.widened, idempotents=idempotent_witnesses(a, fam.base, c))
    return InverseReport(
        kind="inner",
        subject=a,
        status="family",
        element=fam.base,
        members=members,
        family=fam.describe(),
        satisfied=satisfied_equations(a, fam.base),
        projector_data=projector_data(a, fam.base),
        details=details,
    )


class SolutionSetReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    shape: Shape
    proposed: List[RingElement]
    actual: List[RingElement]

    @property
    def equal(self) -> bool:
        return [e.key for e in self.proposed] == [e.key for e in self.actual]


def one_inverse_solution_set(a: RingElement, c: IdealConstraints, fixed_inner: RingElement) -> SolutionSetReport:
    """
    {g + (1-ga)y(1-ag) : y ∈ R} for a fixed inner inverse g carrying the
    prescribed ideals, next to the true solution set. The two agree for
    the pair shapes; single shapes may leave out solutions.
    """
    if c.mode != Mode.INNER:
        raise ConstraintShapeError("solution sets take inner-mode constraints")
    if not satisfies(a, fixed_inner, EQ1):
        raise PreconditionError("fixed_inner is not an inner inverse of a (a·g·a ≠ a)")
    _, _, why = _inner_units(a, c)
    if why is not None:
        raise PreconditionError(f"solution set hypothesis: {why}")
    if not c.holds(a, fixed_inner):
        raise PreconditionError("fixed_inner does not carry the prescribed ideals")
    ring = a.ring
    one = ring.one
    g = fixed_inner
    left, right = one - g * a, one - a * g
    seen = {}
    for y in ring.elements():
        x = g + left * y * right
        seen.setdefault(x.key, x)
    proposed = sorted(seen.values(), key=lambda e: e.sort_key())
    actual = [x for x in iter_inverse_set(a, EQ1) if c.holds(a, x)]
    out = SolutionSetReport(shape=c.shape, proposed=proposed, actual=actual)
    if c.shape in PAIR_SHAPES and not out.equal:
        raise InternalVerificationError(f"solution set for {c.describe()} differs from the brute-force set")
    return out


def _projector_conditions(a: RingElement, x: RingElement, slots: Dict[str, SidedIdeal]) -> Dict[str, bool]:
    ax, xa = a * x, x * a
    checks = {
        "S": lambda: map_equals_projector(xa, slots["S"], annihilator(a, R)),
        "T": lambda: map_equals_projector(ax, principal_ideal(a, R), slots["T"]),
        "S'": lambda: map_equals_projector(ax, slots["S'"], annihilator(a, L)),
        "T'": lambda: map_equals_projector(xa, principal_ideal(a, L), slots["T'"]),
    }
    return {name: checks[name]() for name in slots}


_PROJECTOR_LABELS = {
    "S": "φ_xa=ρ(S,rann(a))",
    "T": "φ_ax=ρ(aR,T)",
    "S'": "_axφ=ρ(S',lann(a))",
    "T'": "_xaφ=ρ(Ra,T')",
}


def _projector_label(slots) -> str:
    return ", ".join(_PROJECTOR_LABELS[n] for n in slots)


def inner_characterize(a: RingElement, x: RingElement, c: IdealConstraints) -> ClauseReport:
    """The three equivalent descriptions of a {1}-inverse with prescribed ideals."""
    c = c.with_mode(Mode.INNER)
    slots = c.slots()
    fam = one_inverse_family(a, c)
    return ClauseReport(
        theorem=f"inner inverse {{{c.shape.value}}}",
        clauses={
            "x ∈ a{1} with the prescribed ideals": satisfies(a, x, EQ1) and c.holds(a, x),
            _projector_label(slots): all(_projector_conditions(a, x, slots).values()),
            "x in the parametrized family": fam is not None and fam.contains(x),
        },
    )


# {2}-inverses


def _solve_in(a: RingElement, I: SidedIdeal, u: RingElement) -> Optional[RingElement]:
    """x ∈ I with ax = u (right I) or xa = u (left I)."""
    member = membership_condition(I)
    if I.side == R:
        return solve_affine(a.ring, [member, lambda x: a * x - u])
    return solve_affine(a.ring, [member, lambda x: x * a - u])


def _outer_right(a: RingElement, S: SidedIdeal, T: SidedIdeal) -> Tuple[Optional[RingElement], Optional[str]]:
    if not is_zero_ideal(ideal_meet(annihilator(a, R), S)):
        return None, "rann(a) ∩ S ≠ {0}"
    u = _unit(ideal_image(a, S), T)
    if u is None:
        return None, "R = aS ⊕ T fails"
    x = _solve_in(a, S, u)
    if x is None:
        raise InternalVerificationError("no x ∈ S with ax = ρ_{aS,T}(1) although R = aS ⊕ T")
    return x, None


def _outer_left(a: RingElement, S: SidedIdeal, T: SidedIdeal) -> Tuple[Optional[RingElement], Optional[str]]:
    if not is_zero_ideal(ideal_meet(annihilator(a, L), S)):
        return None, "lann(a) ∩ S' ≠ {0}"
    u = _unit(ideal_image(a, S), T)
    if u is None:
        return None, "R = S'a ⊕ T' fails"
    x = _solve_in(a, S, u)
    if x is None:
        raise InternalVerificationError("no x ∈ S' with xa = ρ_{S'a,T'}(1) although R = S'a ⊕ T'")
    return x, None


def _outer(a: RingElement, c: IdealConstraints) -> Tuple[Optional[RingElement], Optional[str]]:
    s = c.slots()
    shape = c.shape
    if shape == Shape.RIGHT_PAIR:
        x, why = _outer_right(a, s["S"], s["T"])
    elif shape == Shape.LEFT_PAIR:
        x, why = _outer_left(a, s["S'"], s["T'"])
    elif shape == Shape.PRINCIPAL_PAIR:
        S, S2 = s["S"], s["S'"]
        if direct_sum(ideal_image(a, S), annihilator_of(S2)) is None:
            return None, "R = aS ⊕ rann(S') fails"
        if direct_sum(ideal_image(a, S2), annihilator_of(S)) is None:
            return None, "R = S'a ⊕ lann(S) fails"
        x, why = _outer_right(a, S, annihilator_of(S2))
        if x is None:
            raise InternalVerificationError(f"(S,S') direct sums hold but {why}")
    elif shape == Shape.ANNIHILATOR_PAIR:
        T, T2 = s["T"], s["T'"]
        # an outer inverse x with lann(x) = T' has xR = rann(T')
        x, why = _outer_right(a, annihilator_of(T2), T)
        if x is None:
            return None, f"no outer inverse with xR = rann(T') and rann(x) = T ({why})"
        if annihilator(x, L) != T2:
            return None, "the outer inverse with xR = rann(T'), rann(x) = T has lann(x) ≠ T'"
    else:
        raise ConstraintShapeError(f"outer inverses need a pair shape, got {{{shape.value}}}")
    if x is not None and (not satisfies(a, x, EQ2) or not c.holds(a, x)):
        raise InternalVerificationError(f"outer inverse for {c.describe()} misses its constraints")
    return x, why


def reflexive_conditions(a: RingElement, c: IdealConstraints) -> Dict[str, bool]:
    """Direct sums under which the {1,2}-inverse with the prescribed ideals exists."""
    s = c.slots()
    aR, Ra = principal_ideal(a, R), principal_ideal(a, L)
    rann_a, lann_a = annihilator(a, R), annihilator(a, L)
    shape = c.shape
    if shape == Shape.RIGHT_PAIR:
        pairs = {"R = aR ⊕ T": (aR, s["T"]), "R = S ⊕ rann(a)": (s["S"], rann_a)}
    elif shape == Shape.LEFT_PAIR:
        pairs = {"R = Ra ⊕ T'": (Ra, s["T'"]), "R = S' ⊕ lann(a)": (s["S'"], lann_a)}
    elif shape == Shape.PRINCIPAL_PAIR:
        pairs = {
            "R = aR ⊕ rann(S')": (aR, annihilator_of(s["S'"])),
            "R = S ⊕ rann(a)": (s["S"], rann_a),
            "R = Ra ⊕ lann(S)": (Ra, annihilator_of(s["S"])),
            "R = S' ⊕ lann(a)": (s["S'"], lann_a),
        }
    elif shape == Shape.ANNIHILATOR_PAIR:
        pairs = {"R = aR ⊕ T": (aR, s["T"]), "R = Ra ⊕ T'": (Ra, s["T'"])}
    else:
        raise ConstraintShapeError(f"reflexive inverses with a unique answer need a pair shape, got {{{shape.value}}}")
    return {name: direct_sum(I, J) is not None for name, (I, J) in pairs.items()}


def reflexive_formula(a: RingElement, c: IdealConstraints) -> Optional[RingElement]:
    """ρ·a^(1)·ρ' with the shape's projector unit images; independent of the inner inverse."""
    left, right, why = _inner_units(a, c)
    if why is not None:
        return None
    g = inner_inverse(a)
    return None if g is None else left * g * right


def outer_projector_identities(a: RingElement, x: RingElement, c: IdealConstraints) -> Dict[str, bool]:
    s = c.slots()
    ax, xa = a * x, x * a
    shape = c.shape
    if shape == Shape.RIGHT_PAIR:
        S, T = s["S"], s["T"]
        return {
            "φ_ax=ρ(aS,T)": map_equals_projector(ax, ideal_image(a, S), T),
            "φ_xa=ρ(S,φ_a⁻¹(T))": map_equals_projector(xa, S, ideal_preimage(a, T)),
        }
    if shape == Shape.LEFT_PAIR:
        S, T = s["S'"], s["T'"]
        return {
            "_xaφ=ρ(S'a,T')": map_equals_projector(xa, ideal_image(a, S), T),
            "_axφ=ρ(S',_aφ⁻¹(T'))": map_equals_projector(ax, S, ideal_preimage(a, T)),
        }
    if shape == Shape.PRINCIPAL_PAIR:
        S, S2 = s["S"], s["S'"]
        return {
            "φ_ax=ρ(aS,rann(S'))": map_equals_projector(ax, ideal_image(a, S), annihilator_of(S2)),
            "_xaφ=ρ(S'a,lann(S))": map_equals_projector(xa, ideal_image(a, S2), annihilator_of(S)),
        }
    T, T2 = s["T"], s["T'"]
    return {
        "φ_ax=ρ(axR,T)": map_equals_projector(ax, principal_ideal(ax, R), T),
        "_xaφ=ρ(Rxa,T')": map_equals_projector(xa, principal_ideal(xa, L), T2),
    }


def idempotent_witnesses(a: RingElement, x: RingElement, c: IdealConstraints) -> Dict[str, bool]:
    """p = xa and q = ax are idempotents generating the prescribed ideals."""
    p, q = x * a, a * x
    s = c.slots()
    out = {"p=xa idempotent": p * p == p, "q=ax idempotent": q * q == q}
    if "S" in s:
        out["S = pR"] = principal_ideal(p, R) == s["S"]
    if "T" in s:
        out["T = rann(q)"] = annihilator(q, R) == s["T"]
    if "S'" in s:
        out["S' = Rq"] = principal_ideal(q, L) == s["S'"]
    if "T'" in s:
        out["T' = lann(p)"] = annihilator(p, L) == s["T'"]
    return out


def outer_with(a: RingElement, c: IdealConstraints, reflexive: bool = False) -> InverseReport:
    """
    The unique {2}-inverse (or {1,2}-inverse when ``reflexive``) whose xR,
    rann(x), Rx, lann(x) are prescribed by a pair-shaped bundle.
    """
    c = c.with_mode(Mode.OUTER)
    kind = "reflexive" if reflexive else "outer"
    details: Dict[str, object] = {"shape": c.shape.value}
    x, why = _outer(a, c)
    if reflexive:
        conds = reflexive_conditions(a, c)
        details["conditions"] = conds
        failed = [name for name, ok in conds.items() if not ok]
        if failed:
            if x is not None and satisfies(a, x, EQ1):
                raise InternalVerificationError(f"{failed[0]} fails yet the outer inverse is reflexive")
            return InverseReport.none(kind, a, "; ".join(f"{name} fails" for name in failed), details=details)
        y = reflexive_formula(a, c)
        if y is None or x is None or y != x or not satisfies(a, y, EQ12):
            raise InternalVerificationError(f"reflexive construction for {c.describe()} disagrees with the outer one")
    elif x is None:
        return InverseReport.none(kind, a, why, details=details)
    details["identities"] = outer_projector_identities(a, x, c)
    details["idempotents"] = idempotent_witnesses(a, x, c)
    return InverseReport.unique(
        kind, a, x, satisfied=satisfied_equations(a, x), projector_data=projector_data(a, x), details=details
    )


def _brute_outer(a: RingElement, c: IdealConstraints) -> bool:
    if a.ring.is_finite:
        return any(c.holds(a, x) for x in iter_inverse_set(a, EQ2))
    return _outer(a, c)[0] is not None


def outer_existence(a: RingElement, c: IdealConstraints) -> ClauseReport:
    """The equivalent existence statements for the shape, evaluated independently."""
    c = c.with_mode(Mode.OUTER)
    s = c.slots()
    ring = a.ring
    one = ring.one
    shape = c.shape
    exists = _brute_outer(a, c)
    if shape == Shape.RIGHT_PAIR:
        S, T = s["S"], s["T"]
        trivial = is_zero_ideal(ideal_meet(annihilator(a, R), S))
        u = _unit(ideal_image(a, S), T)
        mS, mT = membership_condition(S), membership_condition(T)
        conds: List[Callable] = [mS, lambda x: mT(one - a * x)]
        conds += [lambda x, v=v: x * a * v - v for v in spanning_elements(S)]
        conds += [lambda x, t=t: x * t for t in spanning_elements(T)]
        clauses = {
            "a^(2)[rprin=S, rann=T] exists": exists,
            "∃x ∈ S: φ_ax=ρ(aS,T), rann(a) ∩ S = 0": trivial and u is not None and _solve_in(a, S, u) is not None,
            "R = aS ⊕ T, rann(a) ∩ S = 0": trivial and u is not None,
            "∃x ∈ S: xas = s on S, 1-ax ∈ T, xT = 0": solve_affine(ring, conds) is not None,
        }
    elif shape == Shape.LEFT_PAIR:
        S, T = s["S'"], s["T'"]
        trivial = is_zero_ideal(ideal_meet(annihilator(a, L), S))
        u = _unit(ideal_image(a, S), T)
        mS, mT = membership_condition(S), membership_condition(T)
        conds = [mS, lambda x: mT(one - x * a)]
        conds += [lambda x, v=v: v * a * x - v for v in spanning_elements(S)]
        conds += [lambda x, t=t: t * x for t in spanning_elements(T)]
        clauses = {
            "a^(2)[lprin=S', lann=T'] exists": exists,
            "∃x ∈ S': _xaφ=ρ(S'a,T'), lann(a) ∩ S' = 0": trivial and u is not None and _solve_in(a, S, u) is not None,
            "R = S'a ⊕ T', lann(a) ∩ S' = 0": trivial and u is not None,
            "∃x ∈ S': sax = s on S', 1-xa ∈ T', T'x = 0": solve_affine(ring, conds) is not None,
        }
    elif shape == Shape.PRINCIPAL_PAIR:
        S, S2 = s["S"], s["S'"]
        aS, S2a = ideal_image(a, S), ideal_image(a, S2)
        u1, u2 = _unit(aS, annihilator_of(S2)), _unit(S2a, annihilator_of(S))
        mS, mS2 = membership_condition(S), membership_condition(S2)
        conds = [mS, mS2]
        conds += [lambda x, v=v: x * a * v - v for v in spanning_elements(S)]
        conds += [lambda x, v=v: v * a * x - v for v in spanning_elements(S2)]
        proj_found = False
        if u1 is not None and u2 is not None:
            proj = [mS, mS2, lambda x: a * x - u1, lambda x: x * a - u2]
            proj_found = solve_affine(ring, proj) is not None
        clauses = {
            "∃x ∈ a{2}: xR = S, Rx = S'": exists,
            "R = aS ⊕ rann(S'), R = S'a ⊕ lann(S)": u1 is not None and u2 is not None,
            "∃x ∈ S ∩ S': xas = s on S, sax = s on S'": solve_affine(ring, conds) is not None,
            "∃x ∈ S ∩ S': φ_ax=ρ(aS,rann(S')), _xaφ=ρ(S'a,lann(S))": proj_found,
        }
    elif shape == Shape.ANNIHILATOR_PAIR:
        T, T2 = s["T"], s["T'"]
        mT, mT2 = membership_condition(T), membership_condition(T2)
        conds = [lambda x: mT(one - a * x), lambda x: mT2(one - x * a)]
        conds += [lambda x, t=t: x * t for t in spanning_elements(T)]
        conds += [lambda x, t=t: t * x for t in spanning_elements(T2)]
        clauses = {
            "∃x ∈ a{2}: rann(x) = T, lann(x) = T'": exists,
            "∃x: 1-ax ∈ T, xT = 0, 1-xa ∈ T', T'x = 0": solve_affine(ring, conds) is not None,
        }
    else:
        raise ConstraintShapeError(f"outer inverses need a pair shape, got {{{shape.value}}}")
    return ClauseReport(theorem=f"outer existence {{{shape.value}}}", clauses=clauses)


def annihilator_outer_clauses(a: RingElement, x: RingElement, c: IdealConstraints) -> ClauseReport:
    """The six equivalent statements about x ∈ a{2} with rann(x) = T, lann(x) = T'."""
    c = c.with_mode(Mode.OUTER)
    if c.shape != Shape.ANNIHILATOR_PAIR:
        raise ConstraintShapeError(f"expected a {{T,T'}} bundle, got {{{c.shape.value}}}")
    s = c.slots()
    T, T2 = s["T"], s["T'"]
    ring = a.ring
    one = ring.one
    ax, xa = a * x, x * a
    proj = map_equals_projector(ax, principal_ideal(ax, R), T) and map_equals_projector(xa, principal_ideal(xa, L), T2)
    rann_x, lann_x = annihilator(x, R), annihilator(x, L)
    clauses = {
        "x ∈ a{2}, rann(x) = T, lann(x) = T'": satisfies(a, x, EQ2) and rann_x == T and lann_x == T2,
        "projectors, rann(a) ∩ xR = 0": proj and is_zero_ideal(ideal_meet(annihilator(a, R), principal_ideal(x, R))),
        "projectors, lann(a) ∩ Rx = 0": proj and is_zero_ideal(ideal_meet(annihilator(a, L), principal_ideal(x, L))),
        "projectors, T ⊆ rann(x)": proj and ideal_subset(T, rann_x),
        "projectors, T' ⊆ lann(x)": proj and ideal_subset(T2, lann_x),
        "1-ax ∈ T, xT = 0, 1-xa ∈ T', T'x = 0": (
            (one - ax) in T
            and all((x * t).is_zero for t in spanning_elements(T))
            and (one - xa) in T2
            and all((t * x).is_zero for t in spanning_elements(T2))
        ),
    }
    return ClauseReport(theorem="outer inverse {T,T'}", clauses=clauses)


# {1,2}-inverses


_SIDE_CONDITIONS = {
    Shape.RIGHT_PAIR: ("x ∈ S", "lann(S) ⊆ lann(x)", "T ⊆ rann(x)"),
    Shape.LEFT_PAIR: ("x ∈ S'", "rann(S') ⊆ rann(x)", "T' ⊆ lann(x)"),
    Shape.PRINCIPAL_PAIR: ("x ∈ S ∪ S'", "lann(S) ⊆ lann(x)", "rann(S') ⊆ rann(x)"),
    Shape.ANNIHILATOR_PAIR: ("T ⊆ rann(x)", "T' ⊆ lann(x)"),
    Shape.RIGHT_PRINCIPAL: ("x ∈ S", "lann(S) ⊆ lann(x)"),
    Shape.RIGHT_ANNIHILATOR: ("T ⊆ rann(x)",),
    Shape.LEFT_PRINCIPAL: ("x ∈ S'", "rann(S') ⊆ rann(x)"),
    Shape.LEFT_ANNIHILATOR: ("T' ⊆ lann(x)",),
}


def _side_condition(name: str, x: RingElement, s: Dict[str, SidedIdeal]) -> bool:
    if name == "x ∈ S":
        return x in s["S"]
    if name == "x ∈ S'":
        return x in s["S'"]
    if name == "x ∈ S ∪ S'":
        return x in s["S"] or x in s["S'"]
    if name == "lann(S) ⊆ lann(x)":
        return ideal_subset(annihilator_of(s["S"]), annihilator(x, L))
    if name == "rann(S') ⊆ rann(x)":
        return ideal_subset(annihilator_of(s["S'"]), annihilator(x, R))
    if name == "T ⊆ rann(x)":
        return ideal_subset(s["T"], annihilator(x, R))
    return ideal_subset(s["T'"], annihilator(x, L))


def _unit_matrices(ring) -> List[RingElement]:
    return [ring.unit_matrix(i, j) for i in range(1, ring.n + 1) for j in range(1, ring.n + 1)]


def isomorphism_matches(a: RingElement, b: RingElement, S: SidedIdeal, T: SidedIdeal) -> bool:
    """
    With ψ(r) = (φ_a restricted to S)⁻¹(ρ_{aR,T}(r)) for right ideals
    (or the left analogue through _aφ and ρ_{Ra,T}), whether ψ equals
    φ_b (resp. _bφ). False when the hypotheses R = S ⊕ ann(a) and
    R = aR ⊕ T (resp. Ra ⊕ T) fail.
    """
    side = S.side
    ring = a.ring
    rho = projector_from_sum(principal_ideal(a, side), T)
    if rho is None or direct_sum(S, annihilator(a, side)) is None:
        return False

    def mul_b(r: RingElement) -> RingElement:
        return b * r if side == R else r * b

    if ring.is_finite:
        lookup = {(a * v if side == R else v * a).key: v for v in ideal_members(S)}
        psi = EndomorphismTable(ring, lambda r: lookup[rho(r).key])
        return all(psi(r) == mul_b(r) for r in ring.element_list())
    # ψ and φ_b are linear over the scalars; the unit matrices span R
    member = membership_condition(S)
    for r in _unit_matrices(ring):
        t = rho(r)
        if side == R:
            v = solve_affine(ring, [member, lambda x, t=t: a * x - t])
        else:
            v = solve_affine(ring, [member, lambda x, t=t: x * a - t])
        if v is None or v != mul_b(r):
            return False
    return True


def reflexive_characterize(a: RingElement, x: RingElement, c: IdealConstraints) -> ClauseReport:
    """
    Every equivalent description of "x is the {1,2}-inverse with the
    prescribed ideals" for the bundle's shape: projector identities with
    each side condition, inner-inverse ideals with each side condition,
    and the closed form through an inner inverse. The pair shapes with
    one side add the group isomorphism description.
    """
    c = c.with_mode(Mode.OUTER)
    s = c.slots()
    shape = c.shape
    ring = a.ring
    in1 = satisfies(a, x, EQ1)
    proj = all(_projector_conditions(a, x, s).values())
    inner_ideals = in1 and c.with_mode(Mode.INNER).holds(a, x)
    label = _projector_label(s)
    clauses = {"x ∈ a{1,2} with the prescribed ideals": satisfies(a, x, EQ12) and c.holds(a, x)}
    side_values = {name: _side_condition(name, x, s) for name in _SIDE_CONDITIONS[shape]}
    for name, ok in side_values.items():
        clauses[f"{label}, {name}"] = proj and ok
    for name, ok in side_values.items():
        clauses[f"x ∈ a{{1}} with inner ideals, {name}"] = inner_ideals and ok
    left, right, why = _inner_units(a, c)
    formula = False
    if why is None:
        formula = solve_affine(ring, [lambda g: a * g * a - a, lambda g: left * g * right - x]) is not None
    clauses["x = ρ·a^(1)·ρ' for some a^(1)"] = formula
    if shape == Shape.RIGHT_PAIR and why is None:
        T = s["T"]
        clauses["x ∈ S with ax = ρ(aR,T)(1)"] = x in s["S"] and a * x == right
        clauses["ψ = φ_x"] = isomorphism_matches(a, x, s["S"], T)
    elif shape == Shape.LEFT_PAIR and why is None:
        T2 = s["T'"]
        clauses["x ∈ S' with xa = ρ(Ra,T')(1)"] = x in s["S'"] and x * a == left
        clauses["ψ = _xφ"] = isomorphism_matches(a, x, s["S'"], T2)
    return ClauseReport(theorem=f"reflexive inverse {{{shape.value}}}", clauses=clauses)


# Mitsch order


def mitsch_leq(y: RingElement, z: RingElement) -> bool:
    """y ≤_M z: some v, w with vz = vy = y = yw = zw."""
    if y.ring is not z.ring:
        raise StructuralError(f"ring mismatch: {y.ring.label} vs {z.ring.label}")
    ring = y.ring
    if solve_affine(ring, [lambda v: v * z - y, lambda v: v * y - y]) is None:
        return False
    return solve_affine(ring, [lambda w: y * w - y, lambda w: z * w - y]) is not None


class MitschReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    shape: Shape
    lower: List[RingElement]
    upper: List[RingElement]
    related: bool
    intersection: List[RingElement]
    maximum: Optional[RingElement] = None
    minimum: Optional[RingElement] = None
    prescribed: Optional[RingElement] = None

    @property
    def consistent(self) -> bool:
        if self.prescribed is None:
            return not self.intersection and not (self.maximum is not None and self.maximum == self.minimum)
        return (
            [e.key for e in self.intersection] == [self.prescribed.key]
            and self.maximum == self.prescribed
            and self.minimum == self.prescribed
        )


def _mitsch_sets(a: RingElement, c: IdealConstraints):
    s = c.slots()
    shape = c.shape

    def xR(z):
        return principal_ideal(z, R)

    def Rx(z):
        return principal_ideal(z, L)

    if shape == Shape.PRINCIPAL_PAIR:
        S, S2 = s["S"], s["S'"]
        lower = lambda y: y in S and y in S2  # noqa: E731
        upper = lambda z: ideal_subset(S, xR(z)) and ideal_subset(S2, Rx(z))  # noqa: E731
    elif shape == Shape.RIGHT_PAIR:
        S, T = s["S"], s["T"]
        lower = lambda y: y in S and ideal_subset(T, annihilator(y, R))  # noqa: E731
        upper = lambda z: ideal_subset(S, xR(z)) and ideal_subset(annihilator(z, R), T)  # noqa: E731
    elif shape == Shape.LEFT_PAIR:
        S2, T2 = s["S'"], s["T'"]
        lower = lambda y: y in S2 and ideal_subset(T2, annihilator(y, L))  # noqa: E731
        upper = lambda z: ideal_subset(S2, Rx(z)) and ideal_subset(annihilator(z, L), T2)  # noqa: E731
    elif shape == Shape.ANNIHILATOR_PAIR:
        T, T2 = s["T"], s["T'"]
        lower = lambda y: ideal_subset(T, annihilator(y, R)) and ideal_subset(T2, annihilator(y, L))  # noqa: E731
        upper = lambda z: ideal_subset(annihilator(z, R), T) and ideal_subset(annihilator(z, L), T2)  # noqa: E731
    else:
        raise ConstraintShapeError(f"Mitsch extremes need a pair shape, got {{{shape.value}}}")
    return lower, upper


def mitsch_extremes(a: RingElement, c: IdealConstraints) -> MitschReport:
    """
    The outer inverses below (Y) and above (Z) the prescribed data, the
    order relation between them, and the extremes. The prescribed outer
    inverse, when it exists, is the single element of Y ∩ Z, the maximum
    of Y and the minimum of Z.
    """
    c = c.with_mode(Mode.OUTER)
    lower_ok, upper_ok = _mitsch_sets(a, c)
    outer = enumerate_inverse_set(a, EQ2)
    Y = [y for y in outer if lower_ok(y)]
    Z = [z for z in outer if upper_ok(z)]
    related = all(mitsch_leq(y, z) for y in Y for z in Z)
    zkeys = {z.key for z in Z}
    both = [y for y in Y if y.key in zkeys]
    maximum = next((m for m in Y if all(mitsch_leq(y, m) for y in Y)), None)
    minimum = next((m for m in Z if all(mitsch_leq(m, z) for z in Z)), None)
    x, _ = _outer(a, c)
    log.debug("mitsch sets for %s: |Y|=%d |Z|=%d", c.describe(), len(Y), len(Z))
    return MitschReport(
        shape=c.shape,
        lower=Y,
        upper=Z,
        related=related,
        intersection=both,
        maximum=maximum,
        minimum=minimum,
        prescribed=x,
    )


def prescribe(a: RingElement, c: IdealConstraints, kind: str) -> InverseReport:
    """Dispatch for the front ends: kind is inner, outer or reflexive."""
    if kind == "inner":
        return one_inverse_report(a, c.with_mode(Mode.INNER))
    if kind == "outer":
        return outer_with(a, c, reflexive=False)
    if kind == "reflexive":
        if c.shape not in PAIR_SHAPES:
            return reflexive_family_report(a, c)
        return outer_with(a, c, reflexive=True)
    raise StructuralError(f"unknown prescribed kind {kind!r}")


def reflexive_family_report(a: RingElement, c: IdealConstraints) -> InverseReport:
    """
    {1,2}-inverses with one prescribed ideal are not unique. One of them is
    ρ·a^(1)·ρ'; on finite rings the whole set is listed.
    """
    c = c.with_mode(Mode.OUTER)
    left, right, why = _inner_units(a, c)
    details = {"shape": c.shape.value}
    if why is not None:
        return InverseReport.none("reflexive", a, why, details=details)
    x = reflexive_formula(a, c)
    if x is None:
        return InverseReport.none("reflexive", a, "a{1} is empty", details=details)
    if not satisfies(a, x, EQ12) or not c.holds(a, x):
        raise InternalVerificationError(f"reflexive closed form for {c.describe()} misses its constraints")
    members = None
    if a.ring.is_finite:
        try:
            members = [y for y in iter_inverse_set(a, EQ12) if c.holds(a, y)]
        except NotEnumerableError:
            members = None
    details["idempotents"] = idempotent_witnesses(a, x, c)
    return InverseReport(
        kind="reflexive",
        subject=a,
        status="family",
        element=x,
        members=members,
        family=f"{{{c.shape.value}}}: ρ·a1·ρ' over a1 ∈ a{{1}}",
        satisfied=satisfied_equations(a, x),
        projector_data=projector_data(a, x),
        details=details,
    )
