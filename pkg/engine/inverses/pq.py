"""
Outer inverses fixed by a pair of idempotents p, q.

The Djordjević–Wei (p,q) inverse is x ∈ a{2} with xa = p and ax = 1−q.
It coincides with the image-kernel inverse a^(2)[xR=pR, rann(x)=qR]
whenever it exists, and the image-kernel inverse is the Bott–Duffin
(p, 1−q) inverse.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Dict, List, Optional

from engine.errors import InternalVerificationError, PreconditionError, StructuralError, UnsupportedInvolutionError
from engine.ideals.lattice import annihilator, ideal_preimage, ideal_subset, principal_ideal
from engine.inverses.classic import (
    core_inverse,
    drazin_inverse,
    dual_core_inverse,
    moore_penrose,
    projector_data,
    reflexive_inverse,
)
from engine.inverses.equations import EQ1, EQ2, satisfied_equations, satisfies
from engine.inverses.prescribed import IdealConstraints, Mode, outer_with
from engine.inverses.report import ClauseReport, InverseReport
from engine.ring.core import RingElement

log = logging.getLogger(__name__)

R = "right"
L = "left"


class PQFlavor(str, Enum):
    DJORDJEVIC_WEI = "djordjevic_wei"
    IMAGE_KERNEL = "image_kernel"
    BOTT_DUFFIN = "bott_duffin"


def _require_idempotent(p: RingElement, name: str) -> None:
    if p * p != p:
        raise PreconditionError(f"{name} is not idempotent")


def _image_kernel_element(a: RingElement, p: RingElement, q: RingElement) -> Optional[RingElement]:
    c = IdealConstraints(right_prin=principal_ideal(p, R), right_ann=principal_ideal(q, R), mode=Mode.OUTER)
    rep = outer_with(a, c)
    return rep.element if rep.found else None


def bott_duffin_pq_holds(a: RingElement, x: RingElement, p: RingElement, q: RingElement) -> bool:
    return x == p * x and x == x * q and x * a * p == p and q * a * x == q


def image_kernel_inverse(a: RingElement, p: RingElement, q: RingElement) -> InverseReport:
    """a^(2) with xR = pR and rann(x) = qR."""
    _require_idempotent(p, "p")
    _require_idempotent(q, "q")
    c = IdealConstraints(right_prin=principal_ideal(p, R), right_ann=principal_ideal(q, R), mode=Mode.OUTER)
    rep = outer_with(a, c)
    details = dict(rep.details)
    if rep.found:
        bd = bott_duffin_pq_holds(a, rep.element, p, a.ring.one - q)
        if not bd:
            raise InternalVerificationError("image-kernel inverse is not the Bott-Duffin (p,1-q) inverse")
        details["bott_duffin_(p,1-q)"] = bd
    return rep.model_copy(update={"kind": "image-kernel", "details": details})


def dw_clauses(a: RingElement, x: RingElement, p: RingElement, q: RingElement) -> ClauseReport:
    """The equivalent descriptions of the Djordjević–Wei inverse, the inclusion variants kept apart."""
    one = a.ring.one
    xa, ax = x * a, a * x
    in2 = satisfies(a, x, EQ2)
    pR, qR = principal_ideal(p, R), principal_ideal(q, R)
    rann_p, rann_q = annihilator(p, R), annihilator(q, R)
    xaR, axR = principal_ideal(xa, R), principal_ideal(ax, R)
    rann_xa, rann_ax = annihilator(xa, R), annihilator(ax, R)
    p_side = {
        "xaR ⊆ pR, rann(xa) ⊆ rann(p)": ideal_subset(xaR, pR) and ideal_subset(rann_xa, rann_p),
        "pR ⊆ xaR, rann(p) ⊆ rann(xa)": ideal_subset(pR, xaR) and ideal_subset(rann_p, rann_xa),
    }
    q_side = {
        "axR ⊆ rann(q), rann(ax) ⊆ qR": ideal_subset(axR, rann_q) and ideal_subset(rann_ax, qR),
        "rann(q) ⊆ axR, qR ⊆ rann(ax)": ideal_subset(rann_q, axR) and ideal_subset(qR, rann_ax),
    }
    clauses = {
        "x ∈ a{2}, xa = p, ax = 1−q": in2 and xa == p and ax == one - q,
        "a(1−p)R ⊆ qR, xap = p, ax = 1−q, xq = 0": (
            ideal_subset(principal_ideal(a * (one - p), R), qR)
            and x * a * p == p
            and ax == one - q
            and (x * q).is_zero
        ),
        "Rqa ⊆ R(1−p), xa = p, px = x, (1−q)ax = 1−q": (
            ideal_subset(principal_ideal(q * a, L), principal_ideal(one - p, L))
            and xa == p
            and p * x == x
            and (one - q) * ax == one - q
        ),
    }
    for pk, pv in p_side.items():
        for qk, qv in q_side.items():
            clauses[f"x ∈ a{{2}}, {pk}, {qk}"] = in2 and pv and qv
    return ClauseReport(theorem="Djordjević-Wei (p,q)", clauses=clauses)


def pq_proposition(a: RingElement, x: RingElement, p: RingElement, q: RingElement) -> ClauseReport:
    """Djordjević–Wei versus the right and left prescribed outer inverses."""
    one = a.ring.one
    right = _image_kernel_element(a, p, q)
    left_c = IdealConstraints(left_prin=annihilator(q, L), left_ann=annihilator(p, L), mode=Mode.OUTER)
    left_rep = outer_with(a, left_c)
    left = left_rep.element if left_rep.found else None
    clauses = {
        "Djordjević-Wei": satisfies(a, x, EQ2) and x * a == p and a * x == one - q,
        "x = a^(2)[pR, qR], apR = (1−q)R, φ_a⁻¹(qR) = (1−p)R": (
            right is not None
            and x == right
            and principal_ideal(a * p, R) == principal_ideal(one - q, R)
            and ideal_preimage(a, principal_ideal(q, R)) == principal_ideal(one - p, R)
        ),
        "x = a^(2)[lann(q), lann(p)], R(1−q)a = Rp, _aφ⁻¹(R(1−p)) = Rq": (
            left is not None
            and x == left
            and principal_ideal((one - q) * a, L) == principal_ideal(p, L)
            and ideal_preimage(a, principal_ideal(one - p, L)) == principal_ideal(q, L)
        ),
    }
    return ClauseReport(theorem="(p,q) as prescribed outer inverse", clauses=clauses)


def final_claim(a: RingElement, p: RingElement, q: RingElement) -> Dict[str, bool]:
    return {
        "rann(p) = φ_a⁻¹(qR)": annihilator(p, R) == ideal_preimage(a, principal_ideal(q, R)),
        "Rq = _aφ⁻¹(lann(p))": principal_ideal(q, L) == ideal_preimage(a, annihilator(p, L)),
    }


def djordjevic_wei(a: RingElement, p: RingElement, q: RingElement) -> InverseReport:
    _require_idempotent(p, "p")
    _require_idempotent(q, "q")
    one = a.ring.one
    kind = "djordjevic-wei"
    candidate = _image_kernel_element(a, p, q)
    trial = candidate if candidate is not None else a.ring.zero
    grid = dw_clauses(a, trial, p, q)
    prop = pq_proposition(a, trial, p, q)
    for report in (grid, prop):
        if not report.consistent:
            raise InternalVerificationError(
                f"{report.theorem}: clauses disagree ({', '.join(report.disagreeing())})"
            )
    details: Dict[str, object] = {"clauses": grid.clauses, "proposition": prop.clauses}
    if not grid.holds:
        if candidate is None:
            reason = "no outer inverse with xR = pR and rann(x) = qR"
        elif candidate * a != p:
            reason = "the image-kernel inverse has xa ≠ p"
        else:
            reason = "the image-kernel inverse has ax ≠ 1−q"
        return InverseReport.none(kind, a, reason, details=details)
    if candidate is None:
        raise InternalVerificationError(f"{kind}: clauses hold but no image-kernel inverse exists")
    claim = final_claim(a, p, q)
    if not all(claim.values()):
        raise InternalVerificationError(f"{kind}: annihilator identities fail ({claim})")
    if candidate * a != p or a * candidate != one - q:
        raise InternalVerificationError(f"{kind}: construction misses xa = p or ax = 1−q")
    details["final_claim"] = claim
    details["reflexive"] = satisfies(a, candidate, EQ1)
    return InverseReport.unique(
        kind,
        a,
        candidate,
        satisfied=satisfied_equations(a, candidate),
        projector_data=projector_data(a, candidate),
        details=details,
    )


def bott_duffin_p(a: RingElement, p: RingElement) -> InverseReport:
    """p(1−p+ap)⁻¹ when 1−p+ap is a unit."""
    _require_idempotent(p, "p")
    ring = a.ring
    u = ring.one - p + a * p
    inv = ring.inverse(u)
    if inv is None:
        return InverseReport.none("bott-duffin", a, "1−p+ap is not invertible")
    x = p * inv
    if not bott_duffin_pq_holds(a, x, p, p):
        raise InternalVerificationError("p(1−p+ap)⁻¹ fails the Bott-Duffin (p,p) equations")
    ik = _image_kernel_element(a, p, ring.one - p)
    if ik is not None and ik != x:
        raise InternalVerificationError("Bott-Duffin p inverse differs from the image-kernel (p,1−p) inverse")
    return InverseReport.unique(
        "bott-duffin", a, x, satisfied=satisfied_equations(a, x), projector_data=projector_data(a, x)
    )


def bott_duffin_pq(a: RingElement, p: RingElement, q: RingElement) -> InverseReport:
    """x = px = xq, xap = p, qax = q; the image-kernel (p, 1−q) inverse."""
    _require_idempotent(p, "p")
    _require_idempotent(q, "q")
    x = _image_kernel_element(a, p, a.ring.one - q)
    if x is None:
        return InverseReport.none("bott-duffin", a, "no outer inverse with xR = pR and rann(x) = (1−q)R")
    if not bott_duffin_pq_holds(a, x, p, q):
        raise InternalVerificationError("image-kernel (p,1−q) inverse fails the Bott-Duffin (p,q) equations")
    return InverseReport.unique(
        "bott-duffin", a, x, satisfied=satisfied_equations(a, x), projector_data=projector_data(a, x)
    )


def pq_inverse(
    a: RingElement, p: RingElement, q: Optional[RingElement] = None, flavor: PQFlavor = PQFlavor.DJORDJEVIC_WEI
) -> InverseReport:
    flavor = PQFlavor(flavor)
    if flavor == PQFlavor.BOTT_DUFFIN:
        return bott_duffin_p(a, p) if q is None else bott_duffin_pq(a, p, q)
    if q is None:
        raise StructuralError(f"{flavor.value} needs both p and q")
    if flavor == PQFlavor.IMAGE_KERNEL:
        return image_kernel_inverse(a, p, q)
    return djordjevic_wei(a, p, q)


def pq_special_cases(a: RingElement) -> Dict[str, bool]:
    """
    a^D, a†, a^core and a_core rebuilt as Djordjević–Wei inverses. Only the
    inverses that exist on the ring are listed.
    """
    one = a.ring.one
    out: Dict[str, bool] = {}
    d = drazin_inverse(a)
    if d.found:
        y = d.element
        out["a^D"] = djordjevic_wei(a, a * y, one - a * y).element == y
    if not a.ring.has_involution:
        return out
    for name, fn in (("a†", moore_penrose), ("a^core", core_inverse), ("a_core", dual_core_inverse)):
        try:
            rep = fn(a)
        except UnsupportedInvolutionError:
            continue
        if not rep.found:
            continue
        y = rep.element
        dw = djordjevic_wei(a, y * a, one - a * y)
        out[name] = dw.element == y and bool(dw.details.get("reflexive"))
    return out


def _idempotents(a: RingElement) -> List[RingElement]:
    ring = a.ring
    if ring.is_finite:
        return [e for e in ring.element_list() if e * e == e]
    # infinite matrix rings are regular: the pair xa, ax from a reflexive inverse suffices
    x = reflexive_inverse(a)
    return [] if x is None else [x * a, a * x]


def regular_iff_idempotents(a: RingElement) -> ClauseReport:
    """a{1,2} ≠ ∅ against three ways of matching a's ideals with idempotents."""
    idem = _idempotents(a)
    aR, Ra = principal_ideal(a, R), principal_ideal(a, L)
    rann_a, lann_a = annihilator(a, R), annihilator(a, L)
    p_rann = any(annihilator(e, R) == rann_a for e in idem)
    p_left = any(principal_ideal(e, L) == Ra for e in idem)
    q_right = any(principal_ideal(e, R) == aR for e in idem)
    q_lann = any(annihilator(e, L) == lann_a for e in idem)
    return ClauseReport(
        theorem="a{1,2} ≠ ∅ via idempotents",
        clauses={
            "a{1,2} ≠ ∅": reflexive_inverse(a) is not None,
            "rann(a) = rann(p), aR = qR": p_rann and q_right,
            "Ra = Rp, lann(a) = lann(q)": p_left and q_lann,
            "Ra = Rp, aR = qR": p_left and q_right,
        },
    )
