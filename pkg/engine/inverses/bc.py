"""
(b,c) inverses and their hybrid and annihilator relatives.

  full           xR = bR,        Rx = Rc
  right_hybrid   xR = bR,        rann(x) = rann(c)
  left_hybrid    Rx = Rc,        lann(x) = lann(b)
  annihilator    lann(x) = lann(b), rann(x) = rann(c)

All four are outer inverses with prescribed ideals. When cab is regular
the closed form b·(cab)^(1)·c is offered next to the prescribed answer.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Dict, Optional

from engine.errors import InternalVerificationError
from engine.ideals.lattice import (
    annihilator,
    direct_sum,
    ideal_preimage,
    is_whole_ring,
    is_zero_ideal,
    principal_ideal,
)
from engine.inverses.classic import inner_inverse
from engine.inverses.equations import EQ1, EQ2, iter_inverse_set, satisfies
from engine.inverses.prescribed import IdealConstraints, Mode, outer_with
from engine.inverses.report import ClauseReport, InverseReport
from engine.ring.core import RingElement

log = logging.getLogger(__name__)

R = "right"
L = "left"


class BCFlavor(str, Enum):
    FULL = "full"
    RIGHT_HYBRID = "right_hybrid"
    LEFT_HYBRID = "left_hybrid"
    ANNIHILATOR = "annihilator"


def bc_constraints(b: RingElement, c: RingElement, flavor: BCFlavor) -> IdealConstraints:
    if flavor == BCFlavor.FULL:
        return IdealConstraints(right_prin=principal_ideal(b, R), left_prin=principal_ideal(c, L), mode=Mode.OUTER)
    if flavor == BCFlavor.RIGHT_HYBRID:
        return IdealConstraints(right_prin=principal_ideal(b, R), right_ann=annihilator(c, R), mode=Mode.OUTER)
    if flavor == BCFlavor.LEFT_HYBRID:
        return IdealConstraints(left_prin=principal_ideal(c, L), left_ann=annihilator(b, L), mode=Mode.OUTER)
    return IdealConstraints(left_ann=annihilator(b, L), right_ann=annihilator(c, R), mode=Mode.OUTER)


def _prescribed(a: RingElement, b: RingElement, c: RingElement, flavor: BCFlavor) -> Optional[RingElement]:
    rep = outer_with(a, bc_constraints(b, c, flavor))
    return rep.element if rep.found else None


def closed_form_clauses(a: RingElement, b: RingElement, c: RingElement, g: RingElement) -> Dict[str, ClauseReport]:
    """The five chains of equivalences for x = b·g·c with g ∈ (cab){1}."""
    x = b * g * c
    cab, ab = c * a * b, a * b
    in2 = satisfies(a, x, EQ2)
    rann_cab_b = annihilator(cab, R) == annihilator(b, R)
    Rcab_Rb = principal_ideal(cab, L) == principal_ideal(b, L)
    cabR_cR = principal_ideal(cab, R) == principal_ideal(c, R)
    lann_cab_c = annihilator(cab, L) == annihilator(c, L)
    abR_aR = principal_ideal(ab, R) == principal_ideal(a, R)
    return {
        "inner": ClauseReport(
            theorem="b(cab)^(1)c inner",
            clauses={
                "x ∈ a{1}": satisfies(a, x, EQ1),
                "abR = aR, rann(cab) = rann(ab)": abR_aR and annihilator(cab, R) == annihilator(ab, R),
                "abR = aR, Rcab = Rab": abR_aR and principal_ideal(cab, L) == principal_ideal(ab, L),
            },
        ),
        "right principal": ClauseReport(
            theorem="b(cab)^(1)c with xR = bR",
            clauses={
                "x ∈ a{2}, xR = bR": in2 and principal_ideal(x, R) == principal_ideal(b, R),
                "rann(cab) = rann(b)": rann_cab_b,
                "Rcab = Rb": Rcab_Rb,
            },
        ),
        "right annihilator": ClauseReport(
            theorem="b(cab)^(1)c with rann(x) = rann(c)",
            clauses={
                "x ∈ a{2}, rann(x) = rann(c)": in2 and annihilator(x, R) == annihilator(c, R),
                "cabR = cR": cabR_cR,
                "lann(cab) = lann(c)": lann_cab_c,
            },
        ),
        "left principal": ClauseReport(
            theorem="b(cab)^(1)c with Rx = Rc",
            clauses={
                "x ∈ a{2}, Rx = Rc": in2 and principal_ideal(x, L) == principal_ideal(c, L),
                "lann(cab) = lann(c)": lann_cab_c,
                "cabR = cR": cabR_cR,
            },
        ),
        "left annihilator": ClauseReport(
            theorem="b(cab)^(1)c with lann(x) = lann(b)",
            clauses={
                "x ∈ a{2}, lann(x) = lann(b)": in2 and annihilator(x, L) == annihilator(b, L),
                "Rcab = Rb": Rcab_Rb,
                "rann(cab) = rann(b)": rann_cab_b,
            },
        ),
    }


def hybrid_hypotheses(a: RingElement, b: RingElement, c: RingElement, flavor: BCFlavor) -> Dict[str, bool]:
    """Sufficient conditions for cab ∈ R⁻¹ with b(cab)⁻¹c the hybrid inverse."""
    ab, ca = a * b, c * a
    if flavor == BCFlavor.RIGHT_HYBRID:
        return {
            "rann(ab) = 0, cR = R, R = abR ⊕ rann(c)": (
                is_zero_ideal(annihilator(ab, R))
                and is_whole_ring(principal_ideal(c, R))
                and direct_sum(principal_ideal(ab, R), annihilator(c, R)) is not None
            ),
            "rann(b) = 0, caR = R, R = bR ⊕ φ_a⁻¹(rann(c))": (
                is_zero_ideal(annihilator(b, R))
                and is_whole_ring(principal_ideal(ca, R))
                and direct_sum(principal_ideal(b, R), ideal_preimage(a, annihilator(c, R))) is not None
            ),
        }
    if flavor == BCFlavor.LEFT_HYBRID:
        return {
            "lann(ca) = 0, Rb = R, R = Rca ⊕ lann(b)": (
                is_zero_ideal(annihilator(ca, L))
                and is_whole_ring(principal_ideal(b, L))
                and direct_sum(principal_ideal(ca, L), annihilator(b, L)) is not None
            ),
            "lann(c) = 0, Rab = R, R = Rc ⊕ _aφ⁻¹(lann(b))": (
                is_zero_ideal(annihilator(c, L))
                and is_whole_ring(principal_ideal(ab, L))
                and direct_sum(principal_ideal(c, L), ideal_preimage(a, annihilator(b, L))) is not None
            ),
        }
    return {}


def bc_inverse(a: RingElement, b: RingElement, c: RingElement, flavor: BCFlavor = BCFlavor.FULL) -> InverseReport:
    flavor = BCFlavor(flavor)
    kind = "bc" if flavor == BCFlavor.FULL else f"bc-{flavor.value.replace('_', '-')}"
    rep = outer_with(a, bc_constraints(b, c, flavor))
    details = dict(rep.details)
    details["flavor"] = flavor.value
    cab = c * a * b
    g = inner_inverse(cab)
    if g is not None:
        closed = b * g * c
        grid = closed_form_clauses(a, b, c, g)
        bad = [name for name, cr in grid.items() if not cr.consistent]
        if bad:
            raise InternalVerificationError(f"{kind}: closed-form clauses disagree ({', '.join(bad)})")
        details["closed_form"] = closed
        details["closed_form_clauses"] = {name: cr.holds for name, cr in grid.items()}
        if rep.found and closed != rep.element:
            raise InternalVerificationError(f"{kind}: b(cab)^(1)c differs from the prescribed answer")
    hyp = hybrid_hypotheses(a, b, c, flavor)
    if hyp:
        details["hypotheses"] = hyp
    if any(hyp.values()):
        inv = a.ring.inverse(cab)
        if inv is None:
            raise InternalVerificationError(f"{kind}: hypotheses hold but cab is not invertible")
        if not rep.found or b * inv * c != rep.element:
            raise InternalVerificationError(f"{kind}: b(cab)⁻¹c differs from the prescribed answer")
    log.debug("%s inverse: %s", kind, rep.status)
    return rep.model_copy(update={"kind": kind, "details": details})


def _regular(r: RingElement) -> bool:
    return inner_inverse(r) is not None


def _closed_form_for_all(a: RingElement, b: RingElement, c: RingElement, x: RingElement) -> bool:
    """(cab){1} ≠ ∅ and x = b·g·c for every g ∈ (cab){1} (one g on infinite rings)."""
    cab = c * a * b
    if cab.ring.is_finite:
        seen = False
        for g in iter_inverse_set(cab, EQ1):
            seen = True
            if b * g * c != x:
                return False
        return seen
    g = inner_inverse(cab)
    return g is not None and b * g * c == x


def bc_equality_clauses(a: RingElement, b: RingElement, c: RingElement, x: RingElement) -> ClauseReport:
    """
    Equivalent statements tying x to the four flavors. Parenthetical
    alternatives ("x ∈ Rc" or "c{1} ≠ ∅") are evaluated as separate clauses.
    """
    rh = _prescribed(a, b, c, BCFlavor.RIGHT_HYBRID)
    lh = _prescribed(a, b, c, BCFlavor.LEFT_HYBRID)
    full = _prescribed(a, b, c, BCFlavor.FULL)
    ann = _prescribed(a, b, c, BCFlavor.ANNIHILATOR)
    cab = c * a * b
    cab_regular = _regular(cab)
    b_regular, c_regular = _regular(b), _regular(c)
    in_Rc = x in principal_ideal(c, L)
    in_bR = x in principal_ideal(b, R)
    is_rh, is_lh, is_ann = rh is not None and x == rh, lh is not None and x == lh, ann is not None and x == ann
    for_all = _closed_form_for_all(a, b, c, x)
    clauses = {
        "(b,c) inverse": full is not None and x == full,
        "right hybrid, x ∈ Rc": is_rh and in_Rc,
        "right hybrid, c{1} ≠ ∅": is_rh and c_regular,
        "right hybrid, (cab){1} ≠ ∅": is_rh and cab_regular,
        "left hybrid, x ∈ bR": is_lh and in_bR,
        "left hybrid, b{1} ≠ ∅": is_lh and b_regular,
        "left hybrid, (cab){1} ≠ ∅": is_lh and cab_regular,
        "annihilator, x ∈ bR, x ∈ Rc": is_ann and in_bR and in_Rc,
        "annihilator, b{1} ≠ ∅, c{1} ≠ ∅": is_ann and b_regular and c_regular,
        "annihilator, (cab){1} ≠ ∅": is_ann and cab_regular,
        "Rcab = Rb, cabR = cR, x = b(cab)^(1)c": (
            for_all
            and principal_ideal(cab, L) == principal_ideal(b, L)
            and principal_ideal(cab, R) == principal_ideal(c, R)
        ),
        "rann(cab) = rann(b), lann(cab) = lann(c), x = b(cab)^(1)c": (
            for_all
            and annihilator(cab, R) == annihilator(b, R)
            and annihilator(cab, L) == annihilator(c, L)
        ),
    }
    return ClauseReport(theorem="(b,c) flavors", clauses=clauses)
