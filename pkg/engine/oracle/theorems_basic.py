"""Element lemmas, ideals, projectors and the projector descriptions of classic inverses."""

from __future__ import annotations

from typing import Iterator

from engine.ideals.lattice import (
    annihilator,
    from_elements,
    ideal_subset,
    is_whole_ring,
    is_zero_ideal,
    orthogonal,
    principal_ideal,
)
from engine.ideals.projector import EndomorphismTable, projector_complement, projector_from_sum
from engine.inverses.classic import (
    classify_projector_relations,
    core_inverse,
    drazin_identities,
    drazin_index,
    drazin_inverse,
    dual_core_inverse,
    group_inverse,
    inner_identities,
    inner_inverse,
    moore_penrose,
    outer_identities,
    reflexive_criteria,
)
from engine.inverses.equations import (
    EQ1,
    EQ2,
    EQ125,
    EQ1234,
    EQ_CORE,
    EQ_DUAL_CORE,
    EquationSet,
    drazin_equations,
    satisfies,
)
from engine.oracle.catalog import Case, RingContext, holds, ideal_pairs, theorem


@theorem(
    "T-involution-laws",
    "(ab)* = b*a*, (a+b)* = a* + b*, a** = a",
    "all pairs (a, b)",
    needs_involution=True,
    finite_only=False,
)
def involution_laws(ctx: RingContext) -> Iterator[Case]:
    for a, b in ctx.pairs():
        ok = (a * b).star() == b.star() * a.star() and (a + b).star() == a.star() + b.star() and a.star().star() == a
        yield Case(ctx.render(a=a, b=b), ok)


@theorem(
    "T-invertible-lemma",
    "a ∈ R⁻¹ ⇔ aR = R and rann(a) = 0 ⇔ Ra = R and lann(a) = 0",
    "all elements a",
    finite_only=False,
)
def invertible_lemma(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        inv = ctx.ring.is_unit(a)
        right = is_whole_ring(principal_ideal(a, "right")) and is_zero_ideal(annihilator(a, "right"))
        left = is_whole_ring(principal_ideal(a, "left")) and is_zero_ideal(annihilator(a, "left"))
        yield Case(ctx.render(a=a), inv == right == left)


@theorem(
    "T-idempotent-ideals",
    "p² = p ⇒ pR = rann(1−p) and Rp = lann(1−p)",
    "all idempotents p",
    finite_only=False,
)
def idempotent_ideals(ctx: RingContext) -> Iterator[Case]:
    one = ctx.ring.one
    for p in ctx.idempotents():
        ok = principal_ideal(p, "right") == annihilator(one - p, "right") and principal_ideal(
            p, "left"
        ) == annihilator(one - p, "left")
        yield Case(ctx.render(p=p), ok)


@theorem(
    "T-idempotent-equality",
    "for idempotents p, q: q = p ⇔ qR ⊆ pR and rann(q) ⊆ rann(p)",
    "all pairs of idempotents",
)
def idempotent_equality(ctx: RingContext) -> Iterator[Case]:
    idem = ctx.idempotents()
    for p in idem:
        for q in idem:
            incl = ideal_subset(principal_ideal(q, "right"), principal_ideal(p, "right")) and ideal_subset(
                annihilator(q, "right"), annihilator(p, "right")
            )
            yield Case(ctx.render(p=p, q=q), (q == p) == incl)


@theorem(
    "T-annihilator-lemma",
    "aR ⊆ bR ⇒ lann(b) ⊆ lann(a), with the converse when b{1} ≠ ∅ (and the left dual)",
    "all pairs (a, b)",
)
def annihilator_lemma(ctx: RingContext) -> Iterator[Case]:
    for a, b in ctx.pairs():
        regular = bool(ctx.inner(b))
        r_incl = ideal_subset(principal_ideal(a, "right"), principal_ideal(b, "right"))
        l_ann = ideal_subset(annihilator(b, "left"), annihilator(a, "left"))
        l_incl = ideal_subset(principal_ideal(a, "left"), principal_ideal(b, "left"))
        r_ann = ideal_subset(annihilator(b, "right"), annihilator(a, "right"))
        ok = (not r_incl or l_ann) and (not l_incl or r_ann)
        if regular:
            ok = ok and (not l_ann or r_incl) and (not r_ann or l_incl)
        yield Case(ctx.render(a=a, b=b), ok)


@theorem(
    "T-regular-lemma",
    "rann(a) = rann(b) and b{1} ≠ ∅ ⇒ (Rb ⊆ Ra ⇔ a{1} ≠ ∅)",
    "all pairs (a, b)",
)
def regular_lemma(ctx: RingContext) -> Iterator[Case]:
    for a, b in ctx.pairs():
        if annihilator(a, "right") != annihilator(b, "right") or not ctx.inner(b):
            yield Case(ctx.render(a=a, b=b), True)
            continue
        incl = ideal_subset(principal_ideal(b, "left"), principal_ideal(a, "left"))
        yield Case(ctx.render(a=a, b=b), incl == bool(ctx.inner(a)))


@theorem(
    "T-orthogonality-lemma",
    "aR ⊥ rann(a*); a = a* ⇒ aR ⊥ rann(a); idempotent a with aR ⊥ rann(a) ⇒ a = a*",
    "all elements a",
    needs_involution=True,
    finite_only=False,
)
def orthogonality_lemma(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        aR, rann = principal_ideal(a, "right"), annihilator(a, "right")
        s = a.star()
        ok = orthogonal(aR, annihilator(s, "right"), "right")
        perp = orthogonal(aR, rann, "right")
        if s == a:
            ok = ok and perp
        if a * a == a and perp:
            ok = ok and s == a
        yield Case(ctx.render(a=a), ok)


@theorem(
    "T-projector-laws",
    "ρ_{S,T} + ρ_{T,S} = id and ρ(r1 r2) = ρ(r1) r2 (right) / r1 ρ(r2) (left)",
    "all direct sums R = S ⊕ T from the ideal family, every r1, r2",
)
def projector_laws(ctx: RingContext) -> Iterator[Case]:
    for side in ("right", "left"):
        for S, T in ideal_pairs(ctx, side, side):
            rho = projector_from_sum(S, T)
            if rho is None:
                continue
            comp = projector_complement(rho)
            ok = all(rho(r) + comp(r) == r for r in ctx.elements)
            for r1, r2 in ctx.pairs():
                if side == "right":
                    ok = ok and rho(r1 * r2) == rho(r1) * r2
                else:
                    ok = ok and rho(r1 * r2) == r1 * rho(r2)
                if not ok:
                    break
            yield Case(ctx.render(S=S, T=T), ok)


@theorem(
    "T-projector-unit",
    "for right ideals: ρ(1)a = a ⇔ aR ⊆ S and aρ(1) = a ⇔ T ⊆ rann(a) (and the left dual)",
    "all direct sums from the ideal family, every a",
)
def projector_unit(ctx: RingContext) -> Iterator[Case]:
    for side in ("right", "left"):
        for S, T in ideal_pairs(ctx, side, side):
            rho = projector_from_sum(S, T)
            if rho is None:
                continue
            u = rho.unit_image
            for a in ctx.elements:
                if side == "right":
                    ok = ((u * a == a) == ideal_subset(principal_ideal(a, "right"), S)) and (
                        (a * u == a) == ideal_subset(T, annihilator(a, "right"))
                    )
                else:
                    ok = ((a * u == a) == ideal_subset(principal_ideal(a, "left"), S)) and (
                        (u * a == a) == ideal_subset(T, annihilator(a, "left"))
                    )
                yield Case(ctx.render(S=S, T=T, a=a), ok)


@theorem(
    "T-endomorphism-projector",
    "φ_u (and _uφ) is idempotent iff u² = u, and then it is ρ_{im, ker}",
    "all elements u",
)
def endomorphism_projector(ctx: RingContext) -> Iterator[Case]:
    ring = ctx.ring
    for u in ctx.elements:
        ok = True
        for side in ("right", "left"):
            table = EndomorphismTable(ring, (lambda r, u=u: u * r) if side == "right" else (lambda r, u=u: r * u))
            idem = table.is_idempotent()
            ok = ok and idem == (u * u == u)
            if idem:
                im = from_elements(ring, side, [r for r in ctx.elements if r.key in table.image_keys()])
                ker = from_elements(ring, side, [r for r in ctx.elements if r.key in table.kernel_keys()])
                rho = projector_from_sum(im, ker)
                ok = ok and rho is not None and table.equals_projector(rho)
        yield Case(ctx.render(u=u), ok)


@theorem(
    "T-inverse-identities",
    "x ∈ a{1}: axR = aR, rann(xa) = rann(a), lann(ax) = lann(a), Rxa = Ra; x ∈ a{2}: the outer identities",
    "all pairs (a, x)",
)
def inverse_identities(ctx: RingContext) -> Iterator[Case]:
    for a, x in ctx.pairs():
        ok = True
        if satisfies(a, x, EQ1):
            ok = all(inner_identities(a, x).values())
        if satisfies(a, x, EQ2):
            ok = ok and all(outer_identities(a, x).values())
        yield Case(ctx.render(a=a, x=x), ok)


@theorem(
    "T-drazin-identities",
    "for l ≥ ind(a): a^D aR = aa^D R = a^D R = a^l R and the rann, left and lann chains",
    "all Drazin invertible a, l ∈ {ind(a), ind(a)+1}",
)
def drazin_identity_chains(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        rep = drazin_inverse(a)
        if not rep.found:
            continue
        for l in (rep.index, rep.index + 1):
            yield Case(ctx.render(a=a, l=l), all(drazin_identities(a, rep.element, l).values()))


@theorem(
    "T-product-lemma",
    "ab(ab)^(1)a = a ⇔ abR = aR ⇔ lann(ab) = lann(a)",
    "all pairs (a, b), every g ∈ (ab){1}",
)
def product_lemma(ctx: RingContext) -> Iterator[Case]:
    for a, b in ctx.pairs():
        ab = a * b
        same_r = principal_ideal(ab, "right") == principal_ideal(a, "right")
        same_l = annihilator(ab, "left") == annihilator(a, "left")
        for g in ctx.inner(ab):
            yield Case(ctx.render(a=a, b=b, g=g), (ab * g * a == a) == same_r == same_l)


@theorem(
    "T-reflexive-remark",
    "x ∈ a{1} with xR = xaR (or Rx = Rax), or x ∈ a{2} with aR = axR (or Ra = Rxa), lies in a{1,2}",
    "all pairs (a, x)",
)
def reflexive_remark(ctx: RingContext) -> Iterator[Case]:
    for a, x in ctx.pairs():
        yield Case(ctx.render(a=a, x=x), all(v is not False for v in reflexive_criteria(a, x).values()))


@theorem(
    "T-uniqueness",
    "|a{2,5,1^k}| ≤ 1 for k = ind(a) and |a{1,2,3,4}| ≤ 1",
    "all elements a",
)
def uniqueness(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        k = drazin_index(a)
        ok = k is None or len(ctx.inverse_set(a, drazin_equations(k))) <= 1
        if ctx.ring.has_involution:
            ok = ok and len(ctx.inverse_set(a, EQ1234)) <= 1
        yield Case(ctx.render(a=a), ok)


def _relations(ctx: RingContext, key: str) -> Iterator[Case]:
    for a, x in ctx.pairs():
        rel = classify_projector_relations(a, x)
        name = next(n for n in rel.clauses if n == key or n.startswith(key + "("))
        member = rel.memberships[name]
        yield Case(ctx.render(a=a, x=x), all(v == member for v in rel.clauses[name].values()))


@theorem("T-1I-projectors", "x ∈ a{1} ⇔ each projector description of φ_ax, φ_xa, _axφ, _xaφ", "all pairs (a, x)")
def inner_projectors(ctx: RingContext) -> Iterator[Case]:
    return _relations(ctx, "1")


@theorem("T-2I-projectors", "x ∈ a{2} ⇔ each projector description of φ_ax, φ_xa, _axφ, _xaφ", "all pairs (a, x)")
def outer_projectors(ctx: RingContext) -> Iterator[Case]:
    return _relations(ctx, "2")


@theorem("T-12I-projectors", "x ∈ a{1,2} ⇔ each projector description with aR, rann(x), Rx, lann(a)", "all pairs (a, x)")
def reflexive_projectors(ctx: RingContext) -> Iterator[Case]:
    return _relations(ctx, "1,2")


@theorem("T-15I-projectors", "x ∈ a{1,5} ⇔ φ_ax = φ_xa = ρ_{aR,rann(a)} ⇔ _axφ = _xaφ = ρ_{Ra,lann(a)}", "all pairs (a, x)")
def commuting_projectors(ctx: RingContext) -> Iterator[Case]:
    return _relations(ctx, "1,5")


@theorem(
    "T-drazin-projectors",
    "x = a^D with index ≤ l ⇔ φ_ax = φ_xa = ρ_{a^lR, rann(a^l)} with one side condition",
    "all pairs (a, x), l = ind(a)",
)
def drazin_projectors(ctx: RingContext) -> Iterator[Case]:
    return _relations(ctx, "drazin")


@theorem(
    "T-star-projectors",
    "x ∈ a{1,3} ⇔ φ_ax = ρ_{aR,rann(a*)}; x ∈ a{1,4} ⇔ φ_xa = ρ_{a*R,rann(a)}",
    "all pairs (a, x)",
    needs_involution=True,
)
def star_projectors(ctx: RingContext) -> Iterator[Case]:
    for a, x in ctx.pairs():
        rel = classify_projector_relations(a, x)
        ok = all(v == rel.memberships[k] for k in ("1,3", "1,4") for v in rel.clauses[k].values())
        yield Case(ctx.render(a=a, x=x), ok)


def _matches(report, ground) -> bool:
    if not report.found:
        return not ground
    return [e.key for e in ground] == [report.element.key]


@theorem(
    "T-constructive-agreement",
    "group, Drazin, Moore-Penrose, core and dual core constructions equal the brute-force sets",
    "all elements a",
)
def constructive_agreement(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        ok = holds(lambda: _matches(group_inverse(a), ctx.inverse_set(a, EQ125)))
        k = drazin_index(a)
        ok = ok and holds(lambda: _matches(drazin_inverse(a), ctx.inverse_set(a, drazin_equations(k)) if k else []))
        if ctx.ring.has_involution:
            ok = ok and holds(lambda: _matches(moore_penrose(a), ctx.inverse_set(a, EQ1234)))
            ok = ok and holds(lambda: _matches(core_inverse(a), ctx.inverse_set(a, EQ_CORE)))
            ok = ok and holds(lambda: _matches(dual_core_inverse(a), ctx.inverse_set(a, EQ_DUAL_CORE)))
        yield Case(ctx.render(a=a), ok)


@theorem(
    "T-core-three-equations",
    "a{3,6,7} = a{1,2,3,6,7} and a{4,8,9} = a{1,2,4,8,9}",
    "all elements a",
    needs_involution=True,
)
def core_three_equations(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        ok = [e.key for e in ctx.inverse_set(a, EquationSet.of(3, 6, 7))] == [
            e.key for e in ctx.inverse_set(a, EQ_CORE)
        ] and [e.key for e in ctx.inverse_set(a, EquationSet.of(4, 8, 9))] == [
            e.key for e in ctx.inverse_set(a, EQ_DUAL_CORE)
        ]
        yield Case(ctx.render(a=a), ok)


@theorem(
    "T-matrix-inner-inverse",
    "every matrix has an inner inverse and the construction satisfies axa = a",
    "all elements a",
    finite_only=False,
    matrix_only=True,
)
def matrix_inner_inverse(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        yield Case(ctx.render(a=a), holds(lambda: (g := inner_inverse(a)) is not None and a * g * a == a))
