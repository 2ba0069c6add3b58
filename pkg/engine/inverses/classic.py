"""
Inner, group, Drazin, Moore-Penrose, core and dual core inverses.

Matrix backends use exact rank factorizations; every constructed answer
is checked against its defining equations before it is returned. Finite
rings without a matrix structure (Z_n) fall back to bounded enumeration.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field
from sympy.polys.matrices import DomainMatrix

from engine.errors import InternalVerificationError, StructuralError, UndecidableError
from engine.ideals.lattice import annihilator, ideal_subset, principal_ideal
from engine.ideals.projector import Projector, map_as_projector, map_equals_projector
from engine.inverses.equations import (
    EQ1,
    EQ2,
    EQ12,
    EQ15,
    EQ125,
    EQ1234,
    EQ_CORE,
    EQ_DUAL_CORE,
    EquationSet,
    drazin_equations,
    first_inverse,
    satisfied_equations,
    satisfies,
)
from engine.inverses.report import InverseReport
from engine.ring import linalg
from engine.ring.core import MatrixRing, Ring, RingElement

log = logging.getLogger(__name__)


def _dm(a: RingElement) -> DomainMatrix:
    return a.ring.to_dm(a)


def _checked(kind: str, a: RingElement, x: RingElement, eqs: EquationSet) -> RingElement:
    if not satisfies(a, x, eqs):
        raise InternalVerificationError(f"{kind}: constructed element fails {eqs}")
    return x


def projector_data(a: RingElement, x: RingElement) -> List[tuple]:
    """The maps φ_ax, φ_xa, _axφ, _xaφ that are projectors."""
    out = []
    for label, u, side in (
        ("φ_ax", a * x, "right"),
        ("φ_xa", x * a, "right"),
        ("_axφ", a * x, "left"),
        ("_xaφ", x * a, "left"),
    ):
        rho = map_as_projector(u, side)
        if rho is not None:
            out.append((label, rho))
    return out


def _found(kind: str, a: RingElement, x: RingElement, **kw) -> InverseReport:
    return InverseReport.unique(
        kind, a, x, satisfied=satisfied_equations(a, x), projector_data=projector_data(a, x), **kw
    )


# inner inverses


def inner_inverse(a: RingElement) -> Optional[RingElement]:
    """Some x with axa = a; always exists on matrix rings."""
    ring = a.ring
    if isinstance(ring, MatrixRing):
        x = ring.from_dm(linalg.inner_inverse(_dm(a)))
        return _checked("inner inverse", a, x, EQ1)
    return first_inverse(a, EQ1)


def reflexive_inverse(a: RingElement) -> Optional[RingElement]:
    """x = g a g for an inner inverse g lies in a{1,2}."""
    g = inner_inverse(a)
    if g is None:
        return None
    return _checked("reflexive inverse", a, g * a * g, EQ12)


def one_three_inverse(a: RingElement) -> Optional[RingElement]:
    """(a*a)^(1) a* when rank(a*a) = rank(a); an element of a{1,3}."""
    ring = a.ring
    ring.require_involution("{1,3}-inverse")
    if isinstance(ring, MatrixRing):
        s = a.star()
        if ring.rank(s * a) != ring.rank(a):
            return None
        return _checked("{1,3}-inverse", a, inner_inverse(s * a) * s, EquationSet.of(1, 3))
    return first_inverse(a, EquationSet.of(1, 3))


def one_four_inverse(a: RingElement) -> Optional[RingElement]:
    """a*(aa*)^(1) when rank(aa*) = rank(a); an element of a{1,4}."""
    ring = a.ring
    ring.require_involution("{1,4}-inverse")
    if isinstance(ring, MatrixRing):
        s = a.star()
        if ring.rank(a * s) != ring.rank(a):
            return None
        return _checked("{1,4}-inverse", a, s * inner_inverse(a * s), EquationSet.of(1, 4))
    return first_inverse(a, EquationSet.of(1, 4))


# group and Drazin


def drazin_index(a: RingElement) -> Optional[int]:
    """Least k >= 1 with a{2,5,1^k} nonempty, within the backend bound."""
    ring = a.ring
    if isinstance(ring, MatrixRing):
        prev = ring.rank(a)
        p = a
        for k in range(1, ring.n + 1):
            p = p * a
            nxt = ring.rank(p)
            if nxt == prev:
                return k
            prev = nxt
        return None
    for k in range(1, ring.additive_exponent() + 1):
        if first_inverse(a, drazin_equations(k)) is not None:
            return k
    return None


def _group_matrix(a: RingElement) -> Optional[RingElement]:
    ring: MatrixRing = a.ring
    fact = linalg.rank_factorization(_dm(a))
    if fact is None:
        return ring.zero
    F, G, _ = fact
    GF = G * F
    if GF.det() == ring.K.zero:
        return None
    inv = GF.inv()
    return ring.from_dm(F * inv * inv * G)


def group_inverse(a: RingElement) -> InverseReport:
    kind = "group"
    ring = a.ring
    if isinstance(ring, MatrixRing):
        x = _group_matrix(a)
        if x is None:
            k = drazin_index(a)
            return InverseReport.none(kind, a, f"index {k} > 1", index=k)
        return _found(kind, a, _checked(kind, a, x, EQ125), index=1)
    x = first_inverse(a, EQ125)
    if x is None:
        k = drazin_index(a)
        reason = f"index {k} > 1" if k is not None else "a is not Drazin invertible"
        return InverseReport.none(kind, a, reason, index=k)
    return _found(kind, a, x, index=1)


def drazin_inverse(a: RingElement) -> InverseReport:
    kind = "drazin"
    ring = a.ring
    k = drazin_index(a)
    if k is None:
        return InverseReport.none(kind, a, "no index found within the backend bound")
    eqs = drazin_equations(k)
    if isinstance(ring, MatrixRing):
        ak = a**k
        g = inner_inverse(a ** (2 * k + 1))
        x = _checked(kind, a, ak * g * ak, eqs)
    else:
        x = first_inverse(a, eqs)
    log.debug("drazin inverse of %r has index %d", a, k)
    return _found(kind, a, x, index=k)


# *-inverses


def moore_penrose(a: RingElement) -> InverseReport:
    kind = "moore-penrose"
    ring = a.ring
    ring.require_involution("Moore-Penrose inverse")
    r = ring.rank(a)
    s = a.star()
    if ring.rank(s * a) != r or ring.rank(a * s) != r:
        return InverseReport.none(kind, a, "rank(a*a) = rank(a) = rank(aa*) fails; a{1,2,3,4} is empty")
    fact = linalg.rank_factorization(_dm(a))
    if fact is None:
        return _found(kind, a, ring.zero)
    F, G, _ = fact
    Ft, Gt = F.transpose(), G.transpose()
    x = ring.from_dm(Gt * (G * Gt).inv() * (Ft * F).inv() * Ft)
    return _found(kind, a, _checked(kind, a, x, EQ1234))


def core_inverse(a: RingElement) -> InverseReport:
    """a^core = a^# a a^(1,3), the element of a{1,2,3,6,7}."""
    kind = "core"
    ring = a.ring
    ring.require_involution("core inverse")
    g = group_inverse(a)
    if not g.found:
        return InverseReport.none(kind, a, f"a is not group invertible ({g.reason})")
    m = one_three_inverse(a)
    if m is None:
        return InverseReport.none(kind, a, "a{1,3} is empty")
    x = g.element * a * m
    return _found(kind, a, _checked(kind, a, x, EQ_CORE))


def dual_core_inverse(a: RingElement) -> InverseReport:
    """a_core = a^(1,4) a a^#, the element of a{1,2,4,8,9}."""
    kind = "dual-core"
    ring = a.ring
    ring.require_involution("dual core inverse")
    g = group_inverse(a)
    if not g.found:
        return InverseReport.none(kind, a, f"a is not group invertible ({g.reason})")
    m = one_four_inverse(a)
    if m is None:
        return InverseReport.none(kind, a, "a{1,4} is empty")
    x = m * a * g.element
    return _found(kind, a, _checked(kind, a, x, EQ_DUAL_CORE))


def two_sided_inverse(a: RingElement) -> InverseReport:
    x = a.ring.inverse(a)
    if x is None:
        return InverseReport.none("inverse", a, "a is not invertible")
    return _found("inverse", a, x)


# ideal identities attached to inner, outer and Drazin inverses


def inner_identities(a: RingElement, x: RingElement) -> Dict[str, bool]:
    """For x ∈ a{1}: axR = aR, rann(xa) = rann(a), lann(ax) = lann(a), Rxa = Ra."""
    return {
        "axR=aR": principal_ideal(a * x, "right") == principal_ideal(a, "right"),
        "rann(xa)=rann(a)": annihilator(x * a, "right") == annihilator(a, "right"),
        "lann(ax)=lann(a)": annihilator(a * x, "left") == annihilator(a, "left"),
        "Rxa=Ra": principal_ideal(x * a, "left") == principal_ideal(a, "left"),
    }


def outer_identities(a: RingElement, x: RingElement) -> Dict[str, bool]:
    """For x ∈ a{2}: rann(ax) = rann(x), xaR = xR, Rax = Rx, lann(xa) = lann(x)."""
    return {
        "rann(ax)=rann(x)": annihilator(a * x, "right") == annihilator(x, "right"),
        "xaR=xR": principal_ideal(x * a, "right") == principal_ideal(x, "right"),
        "Rax=Rx": principal_ideal(a * x, "left") == principal_ideal(x, "left"),
        "lann(xa)=lann(x)": annihilator(x * a, "left") == annihilator(x, "left"),
    }


def drazin_identities(a: RingElement, d: RingElement, l: int) -> Dict[str, bool]:
    """For d = a^D and l at least the index: the four ideal chains through a^l."""
    al = a**l
    ad, da = a * d, d * a
    right_p = {principal_ideal(u, "right") for u in (da, ad, d, al)}
    right_a = {annihilator(u, "right") for u in (ad, da, d, al)}
    left_p = {principal_ideal(u, "left") for u in (ad, da, d, al)}
    left_a = {annihilator(u, "left") for u in (ad, da, d, al)}
    return {
        "a^D aR = aa^D R = a^D R = a^l R": len(right_p) == 1,
        "rann chain": len(right_a) == 1,
        "Raa^D = Ra^D a = Ra^D = Ra^l": len(left_p) == 1,
        "lann chain": len(left_a) == 1,
    }


def reflexive_criteria(a: RingElement, x: RingElement) -> Dict[str, Optional[bool]]:
    """
    Sufficient conditions for x ∈ a{1,2}: an inner inverse with xR = xaR
    (or Rx = Rax), or an outer inverse with aR = axR (or Ra = Rxa).
    Each entry is None when its hypothesis does not hold.
    """
    out: Dict[str, Optional[bool]] = {}
    reflexive = satisfies(a, x, EQ12)
    if satisfies(a, x, EQ1):
        out["inner, xR=xaR"] = reflexive if principal_ideal(x, "right") == principal_ideal(x * a, "right") else None
        out["inner, Rx=Rax"] = reflexive if principal_ideal(x, "left") == principal_ideal(a * x, "left") else None
    if satisfies(a, x, EQ2):
        out["outer, aR=axR"] = reflexive if principal_ideal(a, "right") == principal_ideal(a * x, "right") else None
        out["outer, Ra=Rxa"] = reflexive if principal_ideal(a, "left") == principal_ideal(x * a, "left") else None
    return out


# projector characterizations


def _rho(u: RingElement, S, T) -> bool:
    return map_equals_projector(u, S, T)


def inner_clauses(a: RingElement, x: RingElement) -> Dict[str, bool]:
    ax, xa = a * x, x * a
    R, L = "right", "left"
    return {
        "φ_ax=ρ(aR,rann(ax))": _rho(ax, principal_ideal(a, R), annihilator(ax, R)),
        "φ_xa=ρ(xaR,rann(a))": _rho(xa, principal_ideal(xa, R), annihilator(a, R)),
        "_axφ=ρ(Rax,lann(a))": _rho(ax, principal_ideal(ax, L), annihilator(a, L)),
        "_xaφ=ρ(Ra,lann(xa))": _rho(xa, principal_ideal(a, L), annihilator(xa, L)),
    }


def outer_clauses(a: RingElement, x: RingElement) -> Dict[str, bool]:
    ax, xa = a * x, x * a
    R, L = "right", "left"
    return {
        "φ_ax=ρ(axR,rann(x))": _rho(ax, principal_ideal(ax, R), annihilator(x, R)),
        "φ_xa=ρ(xR,rann(xa))": _rho(xa, principal_ideal(x, R), annihilator(xa, R)),
        "_axφ=ρ(Rx,lann(ax))": _rho(ax, principal_ideal(x, L), annihilator(ax, L)),
        "_xaφ=ρ(Rxa,lann(x))": _rho(xa, principal_ideal(xa, L), annihilator(x, L)),
    }


def reflexive_clauses(a: RingElement, x: RingElement) -> Dict[str, bool]:
    ax, xa = a * x, x * a
    R, L = "right", "left"
    return {
        "φ_ax=ρ(aR,rann(x))": _rho(ax, principal_ideal(a, R), annihilator(x, R)),
        "φ_xa=ρ(xR,rann(a))": _rho(xa, principal_ideal(x, R), annihilator(a, R)),
        "_axφ=ρ(Rx,lann(a))": _rho(ax, principal_ideal(x, L), annihilator(a, L)),
        "_xaφ=ρ(Ra,lann(x))": _rho(xa, principal_ideal(a, L), annihilator(x, L)),
    }


def commuting_clauses(a: RingElement, x: RingElement) -> Dict[str, bool]:
    ax, xa = a * x, x * a
    right = _rho(ax, principal_ideal(a, "right"), annihilator(a, "right"))
    left = _rho(ax, principal_ideal(a, "left"), annihilator(a, "left"))
    return {
        "φ_ax=φ_xa=ρ(aR,rann(a))": ax == xa and right,
        "_axφ=_xaφ=ρ(Ra,lann(a))": ax == xa and left,
    }


def drazin_clauses(a: RingElement, x: RingElement, l: int) -> Dict[str, bool]:
    """The four projector descriptions of x = a^D with index at most l."""
    al = a**l
    ax, xa = a * x, x * a
    right = ax == xa and _rho(ax, principal_ideal(al, "right"), annihilator(al, "right"))
    left = ax == xa and _rho(ax, principal_ideal(al, "left"), annihilator(al, "left"))
    return {
        "right, xR⊆a^lR": right and ideal_subset(principal_ideal(x, "right"), principal_ideal(al, "right")),
        "right, rann(a^l)⊆rann(x)": right and ideal_subset(annihilator(al, "right"), annihilator(x, "right")),
        "left, Rx⊆Ra^l": left and ideal_subset(principal_ideal(x, "left"), principal_ideal(al, "left")),
        "left, lann(a^l)⊆lann(x)": left and ideal_subset(annihilator(al, "left"), annihilator(x, "left")),
    }


class ProjectorRelations(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    maps: Dict[str, Optional[Projector]]
    memberships: Dict[str, bool]
    clauses: Dict[str, Dict[str, bool]]
    # names of the characterizations whose clauses all hold
    flagged: List[str] = Field(default_factory=list)
    consistent: bool = True


def classify_projector_relations(a: RingElement, x: RingElement, l: Optional[int] = None) -> ProjectorRelations:
    """
    For each of φ_ax, φ_xa, _axφ, _xaφ report the projector it is (if any)
    and evaluate the projector characterizations of {1}, {2}, {1,2},
    {1,5} and Drazin inverses against the raw equations.
    """
    if a.ring is not x.ring:
        raise StructuralError(f"ring mismatch: {a.ring.label} vs {x.ring.label}")
    maps = {
        "φ_ax": map_as_projector(a * x, "right"),
        "φ_xa": map_as_projector(x * a, "right"),
        "_axφ": map_as_projector(a * x, "left"),
        "_xaφ": map_as_projector(x * a, "left"),
    }
    if l is None:
        l = drazin_index(a) or 1
    memberships = {
        "1": satisfies(a, x, EQ1),
        "2": satisfies(a, x, EQ2),
        "1,2": satisfies(a, x, EQ12),
        "1,5": satisfies(a, x, EQ15),
        f"drazin(l={l})": satisfies(a, x, drazin_equations(l)) and satisfies(a, x, EQ2),
    }
    clauses = {
        "1": inner_clauses(a, x),
        "2": outer_clauses(a, x),
        "1,2": reflexive_clauses(a, x),
        "1,5": commuting_clauses(a, x),
        f"drazin(l={l})": drazin_clauses(a, x, l),
    }
    if a.ring.has_involution:
        s = a.star()
        memberships["1,3"] = satisfies(a, x, EquationSet.of(1, 3))
        memberships["1,4"] = satisfies(a, x, EquationSet.of(1, 4))
        clauses["1,3"] = {"φ_ax=ρ(aR,rann(a*))": _rho(a * x, principal_ideal(a, "right"), annihilator(s, "right"))}
        clauses["1,4"] = {"φ_xa=ρ(a*R,rann(a))": _rho(x * a, principal_ideal(s, "right"), annihilator(a, "right"))}
    consistent = all(all(v == memberships[name] for v in cl.values()) for name, cl in clauses.items())
    flagged = [name for name, cl in clauses.items() if all(cl.values())]
    return ProjectorRelations(
        maps=maps, memberships=memberships, clauses=clauses, flagged=flagged, consistent=consistent
    )


# affine solution sets of conditions linear in X


class AffineSpace:
    """{particular + span(directions)} in K^(n*n), or empty."""

    def __init__(self, particular: Optional[list], directions: list, K) -> None:
        self.particular = particular
        self.directions = directions
        self.K = K

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    @property
    def dimension(self) -> int:
        return -1 if self.is_empty else len(self.directions)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineSpace):
            return NotImplemented
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        if self.directions != other.directions:
            return False
        diff = [p - q for p, q in zip(self.particular, other.particular)]
        # the offsets must differ by a direction vector
        return linalg.rank_of(self.directions + [diff], len(diff), self.K) == len(self.directions)

    def contains(self, point: list) -> bool:
        if self.is_empty:
            return False
        return AffineSpace(point, self.directions, self.K) == self


Condition = Callable[[RingElement], RingElement]


def equation_condition(a: RingElement, n: int) -> Condition:
    """X ↦ lhs(X) − rhs for the equations that are linear in X."""
    if n == 1:
        return lambda x: a * x * a - a
    if n == 3:
        return lambda x: (a * x).star() - a * x
    if n == 4:
        return lambda x: (x * a).star() - x * a
    if n == 5:
        return lambda x: a * x - x * a
    if n == 6:
        return lambda x: x * a * a - a
    if n == 8:
        return lambda x: a * a * x - a
    raise StructuralError(f"equation ({n}) is not linear in x")


def affine_solutions(ring: MatrixRing, conditions: Sequence[Condition]) -> AffineSpace:
    """Exact solution set of conditions c(X) = 0, each affine in X."""
    n, K = ring.n, ring.K
    basis = [ring.unit_matrix(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    def flat(e: RingElement) -> list:
        return [v for row in _dm(e).to_list() for v in row]

    rows: List[list] = []
    for c in conditions:
        c0 = flat(c(ring.zero))
        cols = [[u - v for u, v in zip(flat(c(b)), c0)] for b in basis]
        for r in range(len(c0)):
            rows.append([col[r] for col in cols] + [-c0[r]])
    m = n * n
    if not rows:
        return AffineSpace([K.zero] * m, linalg.identity_rows(m, K), K)
    A = linalg.build([r[:m] for r in rows], m, K)
    Y = linalg.build([[r[m]] for r in rows], 1, K)
    sol = linalg.solve(A, Y)
    if sol is None:
        return AffineSpace(None, [], K)
    particular = [r[0] for r in sol.to_list()]
    directions = linalg.nullspace_rows([r[:m] for r in rows], m, K)
    return AffineSpace(particular, directions, K)


def solve_affine(ring: Ring, conditions: Sequence[Condition]) -> Optional[RingElement]:
    """
    Some X with c(X) = 0 for every condition, or None.

    Conditions must be affine in X on matrix rings (one exact linear
    solve); other finite rings are scanned in canonical order.
    """
    if isinstance(ring, MatrixRing):
        space = affine_solutions(ring, conditions)
        if space.is_empty:
            return None
        n = ring.n
        flat = space.particular
        return ring.from_rows([flat[i * n:(i + 1) * n] for i in range(n)])
    if not ring.is_finite:
        raise UndecidableError(f"no decision procedure for affine conditions on {ring.label}")
    for x in ring.elements():
        if all(c(x).is_zero for c in conditions):
            return x
    return None


def linear_grid_equal(ring: MatrixRing, lhs: Sequence[Condition], rhs: Sequence[Condition]) -> bool:
    """Whether two systems of conditions linear in X have the same solutions."""
    return affine_solutions(ring, lhs) == affine_solutions(ring, rhs)


def example_grids(a: RingElement) -> Dict[str, bool]:
    """
    The four grids relating the maps X ↦ AX, X ↦ XA to A^#, A^†, A^core
    and A_core: each condition pair has the same solutions as an
    equation class.
    """
    ring: MatrixRing = a.ring
    g = group_inverse(a).element
    mp = moore_penrose(a).element
    core = core_inverse(a).element
    dcore = dual_core_inverse(a).element
    cond = lambda n: equation_condition(a, n)  # noqa: E731
    return {
        "AX=XA=AA#=A#A ⇔ {1,5}": linear_grid_equal(
            ring,
            [lambda x: a * x - x * a, lambda x: a * x - a * g, lambda x: x * a - g * a],
            [cond(1), cond(5)],
        ),
        "AX=AA†, XA=A†A ⇔ {1,3,4}": linear_grid_equal(
            ring, [lambda x: a * x - a * mp, lambda x: x * a - mp * a], [cond(1), cond(3), cond(4)]
        ),
        "AX=AA^core, XA=A^core A ⇔ {3,6}": linear_grid_equal(
            ring, [lambda x: a * x - a * core, lambda x: x * a - core * a], [cond(3), cond(6)]
        ),
        "AX=AA_core, XA=A_core A ⇔ {4,8}": linear_grid_equal(
            ring, [lambda x: a * x - a * dcore, lambda x: x * a - dcore * a], [cond(4), cond(8)]
        ),
    }
