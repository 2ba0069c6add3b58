"""Star classes, weighted and w-core inverses, (b,c) inverses and (p,q) inverses."""

from __future__ import annotations

from typing import Iterator, List

from engine.inverses.bc import BCFlavor, bc_equality_clauses, bc_inverse, closed_form_clauses, hybrid_hypotheses
from engine.inverses.pq import (
    bott_duffin_p,
    bott_duffin_pq,
    bott_duffin_pq_holds,
    djordjevic_wei,
    dw_clauses,
    pq_special_cases,
    regular_iff_idempotents,
)
from engine.inverses.special import (
    SET_IDENTITY_TAGS,
    StarClass,
    e_core,
    e_core_grid,
    f_dual_core,
    f_dual_core_grid,
    is_e_core,
    is_f_dual_core,
    is_v_dual_core,
    is_w_core,
    is_weighted_mp,
    left_v_dual_core_grid,
    reduction_holds,
    right_w_core_grid,
    star_class_contains,
    star_set_identity,
    v_dual_core,
    v_dual_core_grid,
    w_core,
    w_core_grid,
    weighted_mp,
    weighted_mp_grid,
)
from engine.oracle.catalog import Case, RingContext, holds, theorem
from engine.ring.core import RingElement

# (a, b, c) triples checked on matrix rings
_TRIPLE_LIMIT = 4096


def _weights(ctx: RingContext) -> List[RingElement]:
    """Invertible symmetric elements."""
    return ctx.cached(
        ("weights",), lambda: [w for w in ctx.elements if ctx.ring.is_unit(w) and w.star() == w]
    )


def _agrees(rep, members: List[RingElement]) -> bool:
    return [x.key for x in members] == ([rep.element.key] if rep.found else [])


@theorem(
    "T-star-classes",
    "membership in a{1,3}, a{1,4}, a{1,3,4}, a{1,3,7}, a{1,4,9} equals each projector description; "
    "for a{1,3,6} and a{1,4,8} the projector description implies membership",
    "all pairs (a, x), every class",
    needs_involution=True,
)
def star_classes(ctx: RingContext) -> Iterator[Case]:
    for a, x in ctx.pairs():
        for cls in StarClass:
            yield Case(ctx.render(a=a, x=x, cls=cls.value), star_class_contains(a, x, cls).consistent)


@theorem(
    "T-star-set-identities",
    "a{1,5}, a{1,3}, ... written as inner inverses with prescribed xaR, rann(ax), Rax, lann(xa)",
    "all a, every identity",
    needs_involution=True,
)
def star_set_identities(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for tag in SET_IDENTITY_TAGS:
            yield Case(ctx.render(a=a, tag=tag), star_set_identity(a, tag).holds)


@theorem(
    "T-weighted-mp-grid",
    "a†_{e,f} ⇔ one projector pair and one inclusion from the four-ideal grid; the construction finds it",
    "all a, invertible symmetric e, f, every x",
    needs_involution=True,
)
def weighted_mp_grid_check(ctx: RingContext) -> Iterator[Case]:
    ws = _weights(ctx)
    for e in ws:
        for f in ws:
            for a in ctx.elements:
                brute = [x for x in ctx.reflexive(a) if is_weighted_mp(a, x, e, f)]
                ok = len(brute) <= 1 and holds(lambda: _agrees(weighted_mp(a, e, f), brute))
                ok = ok and all(weighted_mp_grid(a, x, e, f).consistent for x in ctx.elements)
                yield Case(ctx.render(a=a, e=e, f=f), ok)


@theorem(
    "T-e-core-grid",
    "a^{core,e} ⇔ one projector pair and one inclusion from the four-ideal grid; the construction finds it",
    "all a, invertible symmetric e, every x",
    needs_involution=True,
)
def e_core_grid_check(ctx: RingContext) -> Iterator[Case]:
    for e in _weights(ctx):
        for a in ctx.elements:
            brute = [x for x in ctx.inner(a) if is_e_core(a, x, e)]
            ok = len(brute) <= 1 and holds(lambda: _agrees(e_core(a, e), brute))
            ok = ok and all(e_core_grid(a, x, e).consistent for x in ctx.elements)
            yield Case(ctx.render(a=a, e=e), ok)


@theorem(
    "T-f-dual-core-grid",
    "a_{core,f} ⇔ one projector pair and one inclusion from the four-ideal grid; the construction finds it",
    "all a, invertible symmetric f, every x",
    needs_involution=True,
)
def f_dual_core_grid_check(ctx: RingContext) -> Iterator[Case]:
    for f in _weights(ctx):
        for a in ctx.elements:
            brute = [x for x in ctx.inner(a) if is_f_dual_core(a, x, f)]
            ok = len(brute) <= 1 and holds(lambda: _agrees(f_dual_core(a, f), brute))
            ok = ok and all(f_dual_core_grid(a, x, f).consistent for x in ctx.elements)
            yield Case(ctx.render(a=a, f=f), ok)


@theorem(
    "T-w-core-grid",
    "the w-core inverse is (aw)^core with aR ⊆ awR, equivalently described by the grid on b = aw",
    "all a, w, every x",
    needs_involution=True,
)
def w_core_grid_check(ctx: RingContext) -> Iterator[Case]:
    for w in ctx.elements:
        for a in ctx.elements:
            brute = [x for x in ctx.elements if is_w_core(a, x, w)]
            ok = len(brute) <= 1 and holds(lambda: _agrees(w_core(a, w), brute))
            for x in ctx.elements:
                ok = ok and w_core_grid(a, x, w).consistent and len(set(reduction_holds("w-core", a, x, w).values())) == 1
                if not ok:
                    break
            yield Case(ctx.render(a=a, w=w), ok)


@theorem(
    "T-v-dual-core-grid",
    "the v-dual core inverse is (va)_core with Ra ⊆ Rva, equivalently described by the grid on c = va",
    "all a, v, every x",
    needs_involution=True,
)
def v_dual_core_grid_check(ctx: RingContext) -> Iterator[Case]:
    for v in ctx.elements:
        for a in ctx.elements:
            brute = [x for x in ctx.elements if is_v_dual_core(a, x, v)]
            ok = len(brute) <= 1 and holds(lambda: _agrees(v_dual_core(a, v), brute))
            for x in ctx.elements:
                ok = ok and v_dual_core_grid(a, x, v).consistent and len(
                    set(reduction_holds("v-dual-core", a, x, v).values())
                ) == 1
                if not ok:
                    break
            yield Case(ctx.render(a=a, v=v), ok)


@theorem(
    "T-right-w-core-grid",
    "right w-core inverses are (aw){1,3,7} once aR ⊆ awR; projector descriptions on b = aw agree",
    "all a, w, every x",
    needs_involution=True,
)
def right_w_core_grid_check(ctx: RingContext) -> Iterator[Case]:
    for w in ctx.elements:
        for a in ctx.elements:
            ok = True
            for x in ctx.elements:
                ok = right_w_core_grid(a, x, w).consistent and len(
                    set(reduction_holds("right-w-core", a, x, w).values())
                ) == 1
                if not ok:
                    break
            yield Case(ctx.render(a=a, w=w), ok)


@theorem(
    "T-left-v-dual-core-grid",
    "left v-dual core inverses are (va){1,4,9} once Ra ⊆ Rva; projector descriptions on c = va agree",
    "all a, v, every x",
    needs_involution=True,
)
def left_v_dual_core_grid_check(ctx: RingContext) -> Iterator[Case]:
    for v in ctx.elements:
        for a in ctx.elements:
            ok = True
            for x in ctx.elements:
                ok = left_v_dual_core_grid(a, x, v).consistent and len(
                    set(reduction_holds("left-v-dual-core", a, x, v).values())
                ) == 1
                if not ok:
                    break
            yield Case(ctx.render(a=a, v=v), ok)


@theorem(
    "T-bc-closed-form",
    "for every g ∈ (cab){1}, x = bgc satisfies each chain of equivalent ideal conditions, "
    "and all four flavors agree with their closed forms",
    "(a, b, c) triples, every g ∈ (cab){1}",
)
def bc_closed_form(ctx: RingContext) -> Iterator[Case]:
    for a, b, c in ctx.triples(_TRIPLE_LIMIT):
        cab = c * a * b
        ok = True
        for g in ctx.inner(cab):
            ok = ok and all(cr.consistent for cr in closed_form_clauses(a, b, c, g).values())
        for flavor in BCFlavor:
            ok = ok and holds(lambda: bc_inverse(a, b, c, flavor) is not None)
        yield Case(ctx.render(a=a, b=b, c=c), ok)


@theorem(
    "T-bc-equality",
    "x is the (b,c) inverse ⇔ x is a hybrid or annihilator inverse with the matching side condition "
    "⇔ x = b(cab)^(1)c under either pair of ideal equalities",
    "(a, b, c) triples, x over the flavor answers and 0, 1",
)
def bc_equality(ctx: RingContext) -> Iterator[Case]:
    ring = ctx.ring
    for a, b, c in ctx.triples(_TRIPLE_LIMIT):
        candidates = {ring.zero.key: ring.zero, ring.one.key: ring.one}
        for flavor in BCFlavor:
            rep = bc_inverse(a, b, c, flavor)
            if rep.found:
                candidates.setdefault(rep.element.key, rep.element)
        for x in sorted(candidates.values(), key=lambda e: e.sort_key()):
            yield Case(ctx.render(a=a, b=b, c=c, x=x), holds(lambda: bc_equality_clauses(a, b, c, x).consistent))


@theorem(
    "T-bc-hybrid-invertible",
    "under either sufficient condition cab is invertible and b(cab)⁻¹c is the hybrid inverse",
    "(a, b, c) triples, both hybrid flavors",
)
def bc_hybrid_invertible(ctx: RingContext) -> Iterator[Case]:
    ring = ctx.ring
    for a, b, c in ctx.triples(_TRIPLE_LIMIT):
        for flavor in (BCFlavor.RIGHT_HYBRID, BCFlavor.LEFT_HYBRID):
            if not any(hybrid_hypotheses(a, b, c, flavor).values()):
                continue
            inv = ring.inverse(c * a * b)

            def matches() -> bool:
                rep = bc_inverse(a, b, c, flavor)
                return rep.found and rep.element == b * inv * c

            yield Case(ctx.render(a=a, b=b, c=c, flavor=flavor.value), inv is not None and holds(matches))


@theorem(
    "T-pq-djordjevic-wei",
    "the (p,q) inverse exists ⇔ the image-kernel inverse a^(2)[pR, qR] has xa = p, ax = 1−q; "
    "its descriptions agree at every x",
    "all a, idempotents p, q, every x",
)
def pq_djordjevic_wei(ctx: RingContext) -> Iterator[Case]:
    one = ctx.ring.one
    idem = ctx.idempotents()
    for a in ctx.elements:
        for p in idem:
            for q in idem:
                brute = [x for x in ctx.outer(a) if x * a == p and a * x == one - q]
                ok = len(brute) <= 1 and holds(lambda: _agrees(djordjevic_wei(a, p, q), brute))
                ok = ok and all(dw_clauses(a, x, p, q).consistent for x in ctx.elements)
                yield Case(ctx.render(a=a, p=p, q=q), ok)


@theorem(
    "T-pq-bott-duffin",
    "the Bott-Duffin (p,q) inverse is unique, equals the image-kernel (p, 1−q) inverse, "
    "and p(1−p+ap)⁻¹ is the (p,p) case",
    "all a, idempotents p, q",
)
def pq_bott_duffin(ctx: RingContext) -> Iterator[Case]:
    idem = ctx.idempotents()
    for a in ctx.elements:
        for p in idem:
            ok = holds(lambda: bott_duffin_p(a, p) is not None)
            for q in idem:
                brute = [x for x in ctx.elements if bott_duffin_pq_holds(a, x, p, q)]
                ok = ok and len(brute) <= 1 and holds(lambda: _agrees(bott_duffin_pq(a, p, q), brute))
                if not ok:
                    break
            yield Case(ctx.render(a=a, p=p), ok)


@theorem(
    "T-pq-special-cases",
    "a^D, a†, a^core and a_core are (p,q) inverses for the idempotents they induce",
    "all elements a",
    finite_only=False,
)
def pq_special(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        yield Case(ctx.render(a=a), holds(lambda: all(pq_special_cases(a).values())))


@theorem(
    "T-regular-idempotents",
    "a{1,2} ≠ ∅ ⇔ a's principal ideal and annihilator are matched by idempotents (three ways)",
    "all elements a",
    finite_only=False,
)
def regular_idempotents(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        yield Case(ctx.render(a=a), regular_iff_idempotents(a).consistent)

