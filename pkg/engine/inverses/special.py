"""
Special classes read through projectors and prescribed ideals.

  * the *-equation classes a{1,3}, a{1,4}, a{1,3,4}, a{1,3,6}, a{1,4,8},
    a{1,3,7}, a{1,4,9} and their descriptions as inner inverses with
    prescribed ideals
  * the (e,f)-weighted Moore-Penrose inverse, the e-core and the f-dual
    core inverses, each pinned by four equivalent prescribed-ideal forms
  * the w-core and v-dual core inverses and their one-sided relatives,
    the right w-core and left v-dual core inverses

Each unique inverse here comes with a condition grid: groups of
statements such that picking any one statement from every group is
equivalent to the defining property.
"""

from __future__ import annotations

import itertools
import logging
from enum import Enum
from functools import cached_property
from typing import Callable, Dict, List, NamedTuple, Optional

from pydantic import BaseModel

from engine.errors import InternalVerificationError, NotEnumerableError, PreconditionError
from engine.ideals.lattice import SidedIdeal, annihilator, ideal_subset, membership_condition, principal_ideal
from engine.ideals.projector import map_equals_projector
from engine.inverses.classic import core_inverse, dual_core_inverse, equation_condition, projector_data, solve_affine
from engine.inverses.equations import EQ1, EQ12, EquationSet, iter_inverse_set, satisfied_equations, satisfies
from engine.inverses.prescribed import IdealConstraints, Mode, Shape, outer_with
from engine.inverses.report import InverseReport
from engine.ring.core import RingElement

log = logging.getLogger(__name__)

R = "right"
L = "left"


class StarClass(str, Enum):
    C13 = "13"
    C14 = "14"
    C134 = "134"
    C136 = "136"
    C148 = "148"
    C137 = "137"
    C149 = "149"

    @property
    def equations(self) -> EquationSet:
        return EquationSet.of(*(int(d) for d in self.value))

    @property
    def one_way(self) -> bool:
        """Projector conditions only imply membership for these classes."""
        return self in (StarClass.C136, StarClass.C148)


class _Anchors:
    """Principal ideals and annihilators of a and a*, computed on demand."""

    def __init__(self, a: RingElement) -> None:
        self.a = a

    @cached_property
    def s(self) -> RingElement:
        return self.a.star()

    @cached_property
    def aR(self) -> SidedIdeal:
        return principal_ideal(self.a, R)

    @cached_property
    def Ra(self) -> SidedIdeal:
        return principal_ideal(self.a, L)

    @cached_property
    def rann(self) -> SidedIdeal:
        return annihilator(self.a, R)

    @cached_property
    def lann(self) -> SidedIdeal:
        return annihilator(self.a, L)

    @cached_property
    def sR(self) -> SidedIdeal:
        return principal_ideal(self.s, R)

    @cached_property
    def Rs(self) -> SidedIdeal:
        return principal_ideal(self.s, L)

    @cached_property
    def rann_s(self) -> SidedIdeal:
        return annihilator(self.s, R)

    @cached_property
    def lann_s(self) -> SidedIdeal:
        return annihilator(self.s, L)


def _projector_clauses(cls: StarClass, a: RingElement, x: RingElement) -> Dict[str, bool]:
    k = _Anchors(a)
    ax, xa = a * x, x * a
    three = {
        "φ_ax=ρ(aR,rann(a*))": lambda: map_equals_projector(ax, k.aR, k.rann_s),
        "_axφ=ρ(Ra*,lann(a))": lambda: map_equals_projector(ax, k.Rs, k.lann),
    }
    four = {
        "φ_xa=ρ(a*R,rann(a))": lambda: map_equals_projector(xa, k.sR, k.rann),
        "_xaφ=ρ(Ra,lann(a*))": lambda: map_equals_projector(xa, k.Ra, k.lann_s),
    }
    six = {
        "φ_xa=ρ(aR,rann(a))": lambda: map_equals_projector(xa, k.aR, k.rann),
        "_xaφ=ρ(Ra,lann(a))": lambda: map_equals_projector(xa, k.Ra, k.lann),
    }
    eight = {
        "φ_ax=ρ(aR,rann(a))": lambda: map_equals_projector(ax, k.aR, k.rann),
        "_axφ=ρ(Ra,lann(a))": lambda: map_equals_projector(ax, k.Ra, k.lann),
    }

    def pairs(first, second):
        return {f"{p}, {q}": (lambda f=f, g=g: f() and g()) for (p, f), (q, g) in itertools.product(first.items(), second.items())}

    table = {
        StarClass.C13: three,
        StarClass.C14: four,
        StarClass.C134: pairs(three, four),
        StarClass.C136: pairs(three, six),
        StarClass.C148: pairs(eight, four),
        StarClass.C137: {
            "φ_ax=ρ(aR,rann(a*)), x ∈ aR": lambda: three["φ_ax=ρ(aR,rann(a*))"]() and x in k.aR,
            "_axφ=ρ(Ra*,lann(a)), lann(a) ⊆ lann(x)": lambda: (
                three["_axφ=ρ(Ra*,lann(a))"]() and ideal_subset(k.lann, annihilator(x, L))
            ),
        },
        StarClass.C149: {
            "φ_xa=ρ(a*R,rann(a)), rann(a) ⊆ rann(x)": lambda: (
                four["φ_xa=ρ(a*R,rann(a))"]() and ideal_subset(k.rann, annihilator(x, R))
            ),
            "_xaφ=ρ(Ra,lann(a*)), x ∈ Ra": lambda: four["_xaφ=ρ(Ra,lann(a*))"]() and x in k.Ra,
        },
    }
    return {name: fn() for name, fn in table[cls].items()}


class StarMembership(BaseModel):
    cls: StarClass
    by_equations: bool
    by_projectors: Dict[str, bool]

    @property
    def consistent(self) -> bool:
        if self.cls.one_way:
            return self.by_equations or not any(self.by_projectors.values())
        return all(v == self.by_equations for v in self.by_projectors.values())


def star_class_contains(a: RingElement, x: RingElement, cls: StarClass) -> StarMembership:
    """Decide x ∈ a{cls} by the raw equations and by every projector description."""
    a.ring.require_involution(f"class {{{','.join(cls.value)}}}")
    return StarMembership(cls=cls, by_equations=satisfies(a, x, cls.equations), by_projectors=_projector_clauses(cls, a, x))


def star_class_set(a: RingElement, cls: StarClass) -> List[RingElement]:
    a.ring.require_involution(f"class {{{','.join(cls.value)}}}")
    return list(iter_inverse_set(a, cls.equations))


# set identities: a{...} as {x ∈ a{1}: conditions on xaR, rann(ax), Rax, lann(xa)}

_Pred = Callable[[RingElement], bool]

SET_IDENTITY_TAGS = ("15", "13", "14", "134", "136", "148", "137", "149")


def _identity_variants(tag: str, a: RingElement) -> Dict[str, List[_Pred]]:
    k = _Anchors(a)

    def xaR(target):
        return lambda x: principal_ideal(x * a, R) == target()

    def rann_ax(target):
        return lambda x: annihilator(a * x, R) == target()

    def Rax(target):
        return lambda x: principal_ideal(a * x, L) == target()

    def lann_xa(target):
        return lambda x: annihilator(x * a, L) == target()

    aR, Ra, rann, lann = (lambda: k.aR), (lambda: k.Ra), (lambda: k.rann), (lambda: k.lann)
    sR, Rs, rann_s, lann_s = (lambda: k.sR), (lambda: k.Rs), (lambda: k.rann_s), (lambda: k.lann_s)
    if tag == "15":
        return {
            "xaR=aR, rann(ax)=rann(a)": [xaR(aR), rann_ax(rann)],
            "Rax=Ra, lann(xa)=lann(a)": [Rax(Ra), lann_xa(lann)],
        }
    if tag == "13":
        return {"rann(ax)=rann(a*)": [rann_ax(rann_s)], "Rax=Ra*": [Rax(Rs)]}
    if tag == "14":
        return {"xaR=a*R": [xaR(sR)], "lann(xa)=lann(a*)": [lann_xa(lann_s)]}
    if tag == "134":
        return {
            "xaR=a*R, rann(ax)=rann(a*)": [xaR(sR), rann_ax(rann_s)],
            "lann(xa)=lann(a*), rann(ax)=rann(a*)": [lann_xa(lann_s), rann_ax(rann_s)],
            "xaR=a*R, Rax=Ra*": [xaR(sR), Rax(Rs)],
            "Rax=Ra*, lann(xa)=lann(a*)": [Rax(Rs), lann_xa(lann_s)],
        }
    if tag == "136":
        return {
            "xaR=aR, rann(ax)=rann(a*)": [xaR(aR), rann_ax(rann_s)],
            "lann(xa)=lann(a), rann(ax)=rann(a*)": [lann_xa(lann), rann_ax(rann_s)],
            "xaR=aR, Rax=Ra*": [xaR(aR), Rax(Rs)],
            "Rax=Ra*, lann(xa)=lann(a)": [Rax(Rs), lann_xa(lann)],
        }
    if tag == "148":
        return {
            "xaR=a*R, rann(ax)=rann(a)": [xaR(sR), rann_ax(rann)],
            "lann(xa)=lann(a*), rann(ax)=rann(a)": [lann_xa(lann_s), rann_ax(rann)],
            "xaR=a*R, Rax=Ra": [xaR(sR), Rax(Ra)],
            "Rax=Ra, lann(xa)=lann(a*)": [Rax(Ra), lann_xa(lann_s)],
        }
    if tag == "137":
        return {
            "rann(ax)=rann(a*), x ∈ aR": [rann_ax(rann_s), lambda x: x in k.aR],
            "Rax=Ra*, lann(a) ⊆ lann(x)": [Rax(Rs), lambda x: ideal_subset(k.lann, annihilator(x, L))],
        }
    if tag == "149":
        return {
            "xaR=a*R, rann(a) ⊆ rann(x)": [xaR(sR), lambda x: ideal_subset(k.rann, annihilator(x, R))],
            "lann(xa)=lann(a*), x ∈ Ra": [lann_xa(lann_s), lambda x: x in k.Ra],
        }
    raise PreconditionError(f"no set identity for {{{tag}}}; expected one of {', '.join(SET_IDENTITY_TAGS)}")


class SetIdentityReport(BaseModel):
    tag: str
    actual: int
    variants: Dict[str, int]
    # variant ⊆ actual, variant = actual
    included: Dict[str, bool]
    equal: Dict[str, bool]

    @property
    def holds(self) -> bool:
        """Inclusion for {1,3,6} and {1,4,8}; equality everywhere else."""
        if self.tag in ("136", "148"):
            return all(self.included.values()) and len(set(self.variants.values())) == 1
        return all(self.equal.values())


def star_set_identity(a: RingElement, tag: str) -> SetIdentityReport:
    """Compare a{tag} with each of its descriptions as inner inverses with prescribed ideals."""
    eqs = EquationSet.of(*(int(d) for d in tag))
    variants = _identity_variants(tag, a)
    if eqs.needs_involution:
        a.ring.require_involution(f"set identity {{{tag}}}")
    inner = list(iter_inverse_set(a, EQ1))
    actual = {x.key for x in inner if satisfies(a, x, eqs)}
    sizes, included, equal = {}, {}, {}
    for name, preds in variants.items():
        got = {x.key for x in inner if all(p(x) for p in preds)}
        sizes[name] = len(got)
        included[name] = got <= actual
        equal[name] = got == actual
    return SetIdentityReport(tag=tag, actual=len(actual), variants=sizes, included=included, equal=equal)


# condition grids


class ConditionGrid(BaseModel):
    """Groups of statements; one statement from every group is equivalent to ``target``."""

    name: str
    target: bool
    groups: List[Dict[str, bool]]

    @property
    def combinations(self) -> Dict[str, bool]:
        out = {}
        for combo in itertools.product(*(list(g.items()) for g in self.groups)):
            out[" + ".join(name for name, _ in combo)] = all(v for _, v in combo)
        return out

    @property
    def consistent(self) -> bool:
        return all(v == self.target for v in self.combinations.values())

    def disagreeing(self) -> List[str]:
        return [name for name, v in self.combinations.items() if v != self.target]


class FourIdeals(NamedTuple):
    S: SidedIdeal
    T: SidedIdeal
    S2: SidedIdeal
    T2: SidedIdeal


def _four_ideal_groups(b: RingElement, x: RingElement, ideals: FourIdeals) -> List[Dict[str, bool]]:
    """Projector pairs and one-sided inclusions pinning x as b^(1,2) with all four ideals."""
    S, T, S2, T2 = ideals
    bx, xb = b * x, x * b
    phi_bx = map_equals_projector(bx, principal_ideal(b, R), T)
    phi_xb = map_equals_projector(xb, S, annihilator(b, R))
    bx_phi = map_equals_projector(bx, S2, annihilator(b, L))
    xb_phi = map_equals_projector(xb, principal_ideal(b, L), T2)
    projectors = {
        "φ_bx=ρ(bR,T), φ_xb=ρ(S,rann(b))": phi_bx and phi_xb,
        "_bxφ=ρ(S',lann(b)), _xbφ=ρ(Rb,T')": bx_phi and xb_phi,
        "φ_bx=ρ(bR,T), _xbφ=ρ(Rb,T')": phi_bx and xb_phi,
        "_bxφ=ρ(S',lann(b)), φ_xb=ρ(S,rann(b))": bx_phi and phi_xb,
    }
    sides = {
        "xR ⊆ S": ideal_subset(principal_ideal(x, R), S),
        "T' ⊆ lann(x)": ideal_subset(T2, annihilator(x, L)),
        "Rx ⊆ S'": ideal_subset(principal_ideal(x, L), S2),
        "T ⊆ rann(x)": ideal_subset(T, annihilator(x, R)),
    }
    return [projectors, sides]


def _reflexive_four(kind: str, a: RingElement, ideals: FourIdeals) -> InverseReport:
    """The {1,2}-inverse of a pinned by S, T, S', T'; all four pair forms must agree."""
    S, T, S2, T2 = ideals
    forms = {
        Shape.RIGHT_PAIR: IdealConstraints(right_prin=S, right_ann=T, mode=Mode.OUTER),
        Shape.LEFT_PAIR: IdealConstraints(left_prin=S2, left_ann=T2, mode=Mode.OUTER),
        Shape.PRINCIPAL_PAIR: IdealConstraints(right_prin=S, left_prin=S2, mode=Mode.OUTER),
        Shape.ANNIHILATOR_PAIR: IdealConstraints(right_ann=T, left_ann=T2, mode=Mode.OUTER),
    }
    reports = {shape: outer_with(a, c, reflexive=True) for shape, c in forms.items()}
    keys = {shape: (r.element.key if r.found else None) for shape, r in reports.items()}
    if len(set(keys.values())) != 1:
        raise InternalVerificationError(f"{kind}: the four prescribed-ideal forms disagree")
    primary = reports[Shape.RIGHT_PAIR]
    details = {"forms": {shape.value: r.status for shape, r in reports.items()}}
    if not primary.found:
        return InverseReport.none(kind, a, primary.reason, details=details)
    x = primary.element
    return InverseReport.unique(
        kind, a, x, satisfied=satisfied_equations(a, x), projector_data=projector_data(a, x), details=details
    )


def _check_weight(w: RingElement, name: str) -> RingElement:
    """Return w⁻¹ after checking w is invertible and symmetric."""
    if w.ring.inverse(w) is None:
        raise PreconditionError(f"weight {name} is not invertible")
    if w.star() != w:
        raise PreconditionError(f"weight {name} is not symmetric ({name}* ≠ {name})")
    return w.ring.inverse(w)


def _is_sym(u: RingElement) -> bool:
    return u.star() == u


# (e,f)-Moore-Penrose


def weighted_mp_ideals(a: RingElement, e: RingElement, f: RingElement) -> FourIdeals:
    fi = _check_weight(f, "f")
    _check_weight(e, "e")
    s = a.star()
    return FourIdeals(
        S=principal_ideal(fi * s, R),
        T=annihilator(s * e, R),
        S2=principal_ideal(s * e, L),
        T2=annihilator(fi * s, L),
    )


def is_weighted_mp(a: RingElement, x: RingElement, e: RingElement, f: RingElement) -> bool:
    return satisfies(a, x, EQ12) and _is_sym(e * a * x) and _is_sym(f * x * a)


def weighted_mp(a: RingElement, e: RingElement, f: RingElement) -> InverseReport:
    """a†_{e,f}: x ∈ a{1,2} with (eax)* = eax and (fxa)* = fxa."""
    a.ring.require_involution("weighted Moore-Penrose inverse")
    ideals = weighted_mp_ideals(a, e, f)
    rep = _reflexive_four("ef-moore-penrose", a, ideals)
    if rep.found:
        x = rep.element
        if not is_weighted_mp(a, x, e, f):
            raise InternalVerificationError("ef-moore-penrose: prescribed-ideal answer fails (eax)* = eax or (fxa)* = fxa")
        rep.details["grid"] = weighted_mp_grid(a, x, e, f).consistent
    return rep


def weighted_mp_grid(a: RingElement, x: RingElement, e: RingElement, f: RingElement) -> ConditionGrid:
    return ConditionGrid(
        name="ef-moore-penrose",
        target=is_weighted_mp(a, x, e, f),
        groups=_four_ideal_groups(a, x, weighted_mp_ideals(a, e, f)),
    )


# e-core and f-dual core


def e_core_ideals(a: RingElement, e: RingElement) -> FourIdeals:
    _check_weight(e, "e")
    se = a.star() * e
    return FourIdeals(S=principal_ideal(a, R), T=annihilator(se, R), S2=principal_ideal(se, L), T2=annihilator(a, L))


def f_dual_core_ideals(a: RingElement, f: RingElement) -> FourIdeals:
    fs = _check_weight(f, "f") * a.star()
    return FourIdeals(S=principal_ideal(fs, R), T=annihilator(a, R), S2=principal_ideal(a, L), T2=annihilator(fs, L))


def is_e_core(a: RingElement, x: RingElement, e: RingElement) -> bool:
    ideals = e_core_ideals(a, e)
    return satisfies(a, x, EQ1) and principal_ideal(x, R) == ideals.S and principal_ideal(x, L) == ideals.S2


def is_f_dual_core(a: RingElement, x: RingElement, f: RingElement) -> bool:
    ideals = f_dual_core_ideals(a, f)
    return satisfies(a, x, EQ1) and principal_ideal(x, R) == ideals.S and principal_ideal(x, L) == ideals.S2


def e_core(a: RingElement, e: RingElement) -> InverseReport:
    """a^{core,e}: x ∈ a{1} with xR = aR and Rx = Ra*e."""
    a.ring.require_involution("e-core inverse")
    rep = _reflexive_four("e-core", a, e_core_ideals(a, e))
    if rep.found and not is_e_core(a, rep.element, e):
        raise InternalVerificationError("e-core: prescribed-ideal answer fails xR = aR, Rx = Ra*e")
    if rep.found:
        rep.details["grid"] = e_core_grid(a, rep.element, e).consistent
    return rep


def f_dual_core(a: RingElement, f: RingElement) -> InverseReport:
    """a_{core,f}: x ∈ a{1} with xR = f⁻¹a*R and Rx = Ra."""
    a.ring.require_involution("f-dual core inverse")
    rep = _reflexive_four("f-dual-core", a, f_dual_core_ideals(a, f))
    if rep.found and not is_f_dual_core(a, rep.element, f):
        raise InternalVerificationError("f-dual-core: prescribed-ideal answer fails xR = f⁻¹a*R, Rx = Ra")
    if rep.found:
        rep.details["grid"] = f_dual_core_grid(a, rep.element, f).consistent
    return rep


def e_core_grid(a: RingElement, x: RingElement, e: RingElement) -> ConditionGrid:
    return ConditionGrid(name="e-core", target=is_e_core(a, x, e), groups=_four_ideal_groups(a, x, e_core_ideals(a, e)))


def f_dual_core_grid(a: RingElement, x: RingElement, f: RingElement) -> ConditionGrid:
    return ConditionGrid(
        name="f-dual-core", target=is_f_dual_core(a, x, f), groups=_four_ideal_groups(a, x, f_dual_core_ideals(a, f))
    )


# w-core and v-dual core


def is_w_core(a: RingElement, x: RingElement, w: RingElement) -> bool:
    aw = a * w
    return _is_sym(aw * x) and x * aw * a == a and aw * x * x == x


def is_v_dual_core(a: RingElement, x: RingElement, v: RingElement) -> bool:
    va = v * a
    return _is_sym(x * va) and a * va * x == a and x * x * va == x


def w_core(a: RingElement, w: RingElement) -> InverseReport:
    """a^{core,w} = (aw)^core, provided aR ⊆ awR."""
    kind = "w-core"
    ring = a.ring
    ring.require_involution("w-core inverse")
    b = a * w
    inclusion = ideal_subset(principal_ideal(a, R), principal_ideal(b, R))
    annihilators = ideal_subset(annihilator(b, L), annihilator(a, L))
    if inclusion != annihilators:
        raise InternalVerificationError("w-core: aR ⊆ awR and lann(aw) ⊆ lann(a) disagree")
    details = {"aR ⊆ awR": inclusion, "lann(aw) ⊆ lann(a)": annihilators}
    core = core_inverse(b)
    if not core.found:
        return InverseReport.none(kind, a, f"(aw)^core does not exist: {core.reason}", details=details)
    if not inclusion:
        return InverseReport.none(kind, a, "aR ⊆ awR fails", details=details)
    x = core.element
    if not is_w_core(a, x, w):
        raise InternalVerificationError("w-core: (aw)^core fails (awx)* = awx, xawa = a, awx² = x")
    details["grid"] = w_core_grid(a, x, w).consistent
    return InverseReport.unique(kind, a, x, satisfied=satisfied_equations(a, x), projector_data=projector_data(a, x), details=details)


def v_dual_core(a: RingElement, v: RingElement) -> InverseReport:
    """a_{core,v} = (va)_core, provided Ra ⊆ Rva."""
    kind = "v-dual-core"
    ring = a.ring
    ring.require_involution("v-dual core inverse")
    c = v * a
    inclusion = ideal_subset(principal_ideal(a, L), principal_ideal(c, L))
    annihilators = ideal_subset(annihilator(c, R), annihilator(a, R))
    if inclusion != annihilators:
        raise InternalVerificationError("v-dual-core: Ra ⊆ Rva and rann(va) ⊆ rann(a) disagree")
    details = {"Ra ⊆ Rva": inclusion, "rann(va) ⊆ rann(a)": annihilators}
    dual = dual_core_inverse(c)
    if not dual.found:
        return InverseReport.none(kind, a, f"(va)_core does not exist: {dual.reason}", details=details)
    if not inclusion:
        return InverseReport.none(kind, a, "Ra ⊆ Rva fails", details=details)
    x = dual.element
    if not is_v_dual_core(a, x, v):
        raise InternalVerificationError("v-dual-core: (va)_core fails (xva)* = xva, avax = a, x²va = x")
    details["grid"] = v_dual_core_grid(a, x, v).consistent
    return InverseReport.unique(kind, a, x, satisfied=satisfied_equations(a, x), projector_data=projector_data(a, x), details=details)


def w_core_grid(a: RingElement, x: RingElement, w: RingElement) -> ConditionGrid:
    b = a * w
    s = b.star()
    ideals = FourIdeals(S=principal_ideal(b, R), T=annihilator(s, R), S2=principal_ideal(s, L), T2=annihilator(b, L))
    extra = {
        "aR ⊆ bR": ideal_subset(principal_ideal(a, R), ideals.S),
        "lann(b) ⊆ lann(a)": ideal_subset(ideals.T2, annihilator(a, L)),
    }
    return ConditionGrid(name="w-core", target=is_w_core(a, x, w), groups=_four_ideal_groups(b, x, ideals) + [extra])


def v_dual_core_grid(a: RingElement, x: RingElement, v: RingElement) -> ConditionGrid:
    c = v * a
    s = c.star()
    ideals = FourIdeals(S=principal_ideal(s, R), T=annihilator(c, R), S2=principal_ideal(c, L), T2=annihilator(s, L))
    extra = {
        "Ra ⊆ Rc": ideal_subset(principal_ideal(a, L), ideals.S2),
        "rann(c) ⊆ rann(a)": ideal_subset(ideals.T, annihilator(a, R)),
    }
    return ConditionGrid(name="v-dual-core", target=is_v_dual_core(a, x, v), groups=_four_ideal_groups(c, x, ideals) + [extra])


# right w-core and left v-dual core: defined by equations, not unique


def is_right_w_core(a: RingElement, x: RingElement, w: RingElement) -> bool:
    aw = a * w
    return aw * x * a == a and _is_sym(aw * x) and aw * x * x == x


def is_left_v_dual_core(a: RingElement, x: RingElement, v: RingElement) -> bool:
    va = v * a
    return a * x * va == a and _is_sym(x * va) and x * x * va == x


def right_w_core_grid(a: RingElement, x: RingElement, w: RingElement) -> ConditionGrid:
    b = a * w
    s = b.star()
    bx = b * x
    bR, lann_b = principal_ideal(b, R), annihilator(b, L)
    projectors = {
        "φ_bx=ρ(bR,rann(b*)), x ∈ bR": map_equals_projector(bx, bR, annihilator(s, R)) and x in bR,
        "_bxφ=ρ(Rb*,lann(b)), lann(b) ⊆ lann(x)": (
            map_equals_projector(bx, principal_ideal(s, L), lann_b) and ideal_subset(lann_b, annihilator(x, L))
        ),
    }
    extra = {"aR ⊆ bR": ideal_subset(principal_ideal(a, R), bR), "lann(b) ⊆ lann(a)": ideal_subset(lann_b, annihilator(a, L))}
    return ConditionGrid(name="right-w-core", target=is_right_w_core(a, x, w), groups=[projectors, extra])


def left_v_dual_core_grid(a: RingElement, x: RingElement, v: RingElement) -> ConditionGrid:
    c = v * a
    s = c.star()
    xc = x * c
    Rc, rann_c = principal_ideal(c, L), annihilator(c, R)
    projectors = {
        "φ_xc=ρ(c*R,rann(c)), x ∈ Rc": map_equals_projector(xc, principal_ideal(s, R), rann_c) and x in Rc,
        "_xcφ=ρ(Rc,lann(c*)), rann(c) ⊆ rann(x)": (
            map_equals_projector(xc, Rc, annihilator(s, L)) and ideal_subset(rann_c, annihilator(x, R))
        ),
    }
    extra = {"Ra ⊆ Rc": ideal_subset(principal_ideal(a, L), Rc), "rann(c) ⊆ rann(a)": ideal_subset(rann_c, annihilator(a, R))}
    return ConditionGrid(name="left-v-dual-core", target=is_left_v_dual_core(a, x, v), groups=[projectors, extra])


def _one_sided_family(
    kind: str,
    a: RingElement,
    base: RingElement,
    cls: StarClass,
    inclusion: bool,
    failed: str,
    conditions,
    member: Callable[[RingElement], bool],
) -> InverseReport:
    ring = a.ring
    if not inclusion:
        return InverseReport.none(kind, a, failed)
    if ring.is_finite:
        try:
            members = [x for x in iter_inverse_set(base, cls.equations) if member(x)]
        except NotEnumerableError:
            members = None
        if members is not None:
            if not members:
                return InverseReport.none(kind, a, f"{{{','.join(cls.value)}}}-inverses of the product do not exist")
            return InverseReport(
                kind=kind,
                subject=a,
                status="family",
                element=members[0],
                members=members,
                family=f"x ∈ (product){{{','.join(cls.value)}}}",
                satisfied=satisfied_equations(a, members[0]),
            )
    x = solve_affine(ring, conditions)
    if x is None:
        return InverseReport.none(kind, a, f"{{{','.join(cls.value)}}}-inverses of the product do not exist")
    if not member(x):
        raise InternalVerificationError(f"{kind}: witness fails the defining equations")
    return InverseReport(
        kind=kind,
        subject=a,
        status="family",
        element=x,
        family=f"x ∈ (product){{{','.join(cls.value)}}}",
        satisfied=satisfied_equations(a, x),
    )


def right_w_core(a: RingElement, w: RingElement) -> InverseReport:
    """All right w-core inverses: x ∈ (aw){1,3,7} once aR ⊆ awR."""
    a.ring.require_involution("right w-core inverse")
    b = a * w
    bR = principal_ideal(b, R)
    conditions = [equation_condition(b, 1), equation_condition(b, 3), membership_condition(bR)]
    return _one_sided_family(
        "right-w-core",
        a,
        b,
        StarClass.C137,
        ideal_subset(principal_ideal(a, R), bR),
        "aR ⊆ awR fails",
        conditions,
        lambda x: is_right_w_core(a, x, w),
    )


def left_v_dual_core(a: RingElement, v: RingElement) -> InverseReport:
    """All left v-dual core inverses: x ∈ (va){1,4,9} once Ra ⊆ Rva."""
    a.ring.require_involution("left v-dual core inverse")
    c = v * a
    Rc = principal_ideal(c, L)
    conditions = [equation_condition(c, 1), equation_condition(c, 4), membership_condition(Rc)]
    return _one_sided_family(
        "left-v-dual-core",
        a,
        c,
        StarClass.C149,
        ideal_subset(principal_ideal(a, L), Rc),
        "Ra ⊆ Rva fails",
        conditions,
        lambda x: is_left_v_dual_core(a, x, v),
    )


def reduction_holds(kind: str, a: RingElement, x: RingElement, weight: RingElement) -> Dict[str, bool]:
    """The equivalent descriptions of the w-core family through the product aw (or va)."""
    if kind == "w-core":
        b = a * weight
        core = core_inverse(b)
        is_core = core.found and core.element == x
        return {
            "defining equations": is_w_core(a, x, weight),
            "x = (aw)^core, aR ⊆ awR": is_core and ideal_subset(principal_ideal(a, R), principal_ideal(b, R)),
            "x = (aw)^core, lann(aw) ⊆ lann(a)": is_core and ideal_subset(annihilator(b, L), annihilator(a, L)),
        }
    if kind == "v-dual-core":
        c = weight * a
        dual = dual_core_inverse(c)
        is_dual = dual.found and dual.element == x
        return {
            "defining equations": is_v_dual_core(a, x, weight),
            "x = (va)_core, Ra ⊆ Rva": is_dual and ideal_subset(principal_ideal(a, L), principal_ideal(c, L)),
            "x = (va)_core, rann(va) ⊆ rann(a)": is_dual and ideal_subset(annihilator(c, R), annihilator(a, R)),
        }
    if kind == "right-w-core":
        b = a * weight
        in137 = satisfies(b, x, StarClass.C137.equations)
        return {
            "defining equations": is_right_w_core(a, x, weight),
            "x ∈ (aw){1,3,7}, aR ⊆ awR": in137 and ideal_subset(principal_ideal(a, R), principal_ideal(b, R)),
            "x ∈ (aw){1,3,7}, lann(aw) ⊆ lann(a)": in137 and ideal_subset(annihilator(b, L), annihilator(a, L)),
        }
    if kind == "left-v-dual-core":
        c = weight * a
        in149 = satisfies(c, x, StarClass.C149.equations)
        return {
            "defining equations": is_left_v_dual_core(a, x, weight),
            "x ∈ (va){1,4,9}, Ra ⊆ Rva": in149 and ideal_subset(principal_ideal(a, L), principal_ideal(c, L)),
            "x ∈ (va){1,4,9}, rann(va) ⊆ rann(a)": in149 and ideal_subset(annihilator(c, R), annihilator(a, R)),
        }
    raise PreconditionError(f"unknown family {kind!r}")


def weighted(kind: str, a: RingElement, first: RingElement, second: Optional[RingElement] = None) -> InverseReport:
    """Front-end dispatch by inverse name."""
    if kind == "ef-mp":
        return weighted_mp(a, first, second if second is not None else first)
    table = {
        "e-core": e_core,
        "f-dual-core": f_dual_core,
        "w-core": w_core,
        "v-dual-core": v_dual_core,
        "right-w-core": right_w_core,
        "left-v-dual-core": left_v_dual_core,
    }
    if kind not in table:
        raise PreconditionError(f"unknown weighted inverse {kind!r}")
    return table[kind](a, first)
