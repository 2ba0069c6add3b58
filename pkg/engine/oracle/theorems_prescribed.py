"""Inner, outer and reflexive inverses with prescribed ideals, and the Mitsch order."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional

from engine.inverses.prescribed import (
    PAIR_SHAPES,
    IdealConstraints,
    Mode,
    Shape,
    annihilator_outer_clauses,
    idempotent_witnesses,
    inner_characterize,
    mitsch_extremes,
    mitsch_leq,
    one_inverse_family,
    one_inverse_solution_set,
    outer_existence,
    outer_projector_identities,
    outer_with,
    reflexive_characterize,
    reflexive_conditions,
)
from engine.oracle.catalog import Case, RingContext, holds, theorem

_SLOT_FIELDS = {"S": ("right_prin", "right"), "T": ("right_ann", "right"), "S'": ("left_prin", "left"), "T'": ("left_ann", "left")}

# canonical shape order: pairs first, then the single slots
_SHAPE_ORDER = (
    Shape.RIGHT_PAIR,
    Shape.LEFT_PAIR,
    Shape.PRINCIPAL_PAIR,
    Shape.ANNIHILATOR_PAIR,
    Shape.RIGHT_PRINCIPAL,
    Shape.RIGHT_ANNIHILATOR,
    Shape.LEFT_PRINCIPAL,
    Shape.LEFT_ANNIHILATOR,
)


def bundles(ctx: RingContext, mode: Mode, shapes: Optional[Iterable[Shape]] = None) -> Iterator[IdealConstraints]:
    """Every constraint bundle of the given shapes over the ring's ideal family."""
    for shape in shapes or _SHAPE_ORDER:
        names = shape.value.split(",")
        pools = [ctx.ideals(_SLOT_FIELDS[n][1]) for n in names]
        for chosen in itertools.product(*pools):
            kwargs = {_SLOT_FIELDS[n][0]: I for n, I in zip(names, chosen)}
            yield IdealConstraints(mode=mode, **kwargs)


def _render(ctx: RingContext, c: IdealConstraints, **values):
    out = {"shape": c.shape.value}
    out.update({name: ctx.render_ideal(I) for name, I in c.slots().items()})
    out.update(ctx.render(**values))
    return out


def _pair_shapes():
    return [s for s in _SHAPE_ORDER if s in PAIR_SHAPES]


def _keys(xs):
    return [x.key for x in xs]


@theorem(
    "T-1I-prescribed",
    "x ∈ a{1} with prescribed ideals ⇔ projector description ⇔ x in the parametrized family; "
    "the family is the full solution set",
    "all a, every constraint bundle of the eight shapes, every x",
)
def inner_prescribed(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.INNER):
            brute = [x for x in ctx.inner(a) if c.holds(a, x)]

            def same_set() -> bool:
                fam = one_inverse_family(a, c)
                return _keys(fam.members()) == _keys(brute) if fam is not None else not brute

            ok = holds(same_set)
            for x in ctx.elements:
                ok = ok and holds(lambda: inner_characterize(a, x, c).consistent)
                if not ok:
                    break
            yield Case(_render(ctx, c, a=a), ok)


@theorem(
    "T-1I-solution-set",
    "for the pair shapes, {g + (1-ga)y(1-ag) : y ∈ R} is exactly the set of inner inverses with the prescribed ideals",
    "all a, every pair-shaped bundle with a solution",
)
def inner_solution_set(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.INNER, _pair_shapes()):
            if not any(c.holds(a, x) for x in ctx.inner(a)):
                continue
            fam = one_inverse_family(a, c)
            ok = fam is not None and holds(lambda: one_inverse_solution_set(a, c, fam.base).equal)
            yield Case(_render(ctx, c, a=a), ok)


@theorem(
    "T-2I-existence",
    "each shape's existence statements for a^(2) with prescribed ideals are equivalent",
    "all a, every pair-shaped bundle",
)
def outer_existence_clauses(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.OUTER, _pair_shapes()):
            yield Case(_render(ctx, c, a=a), holds(lambda: outer_existence(a, c).consistent))


@theorem(
    "T-2I-uniqueness",
    "at most one x ∈ a{2} carries a pair of prescribed ideals, and the construction finds it",
    "all a, every pair-shaped bundle",
)
def outer_uniqueness(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.OUTER, _pair_shapes()):
            brute = [x for x in ctx.outer(a) if c.holds(a, x)]

            def agrees() -> bool:
                rep = outer_with(a, c)
                return _keys(brute) == ([rep.element.key] if rep.found else [])

            yield Case(_render(ctx, c, a=a), len(brute) <= 1 and holds(agrees))


@theorem(
    "T-2I-annihilator-clauses",
    "x ∈ a{2} with rann(x) = T, lann(x) = T' ⇔ each projector formulation ⇔ the membership formulation",
    "all a, every {T,T'} bundle, every x",
)
def outer_annihilator_clauses(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.OUTER, [Shape.ANNIHILATOR_PAIR]):
            for x in ctx.elements:
                yield Case(_render(ctx, c, a=a, x=x), holds(lambda: annihilator_outer_clauses(a, x, c).consistent))


@theorem(
    "T-2I-idempotents",
    "the prescribed outer inverse gives idempotents xa, ax generating the prescribed ideals, "
    "and its projector identities hold",
    "all a, every pair-shaped bundle with a solution",
)
def outer_idempotents(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.OUTER, _pair_shapes()):
            x = next((y for y in ctx.outer(a) if c.holds(a, y)), None)
            if x is None:
                continue
            ok = all(idempotent_witnesses(a, x, c).values()) and all(outer_projector_identities(a, x, c).values())
            yield Case(_render(ctx, c, a=a, x=x), ok)


@theorem(
    "T-12I-characterization",
    "every description of the {1,2}-inverse with prescribed ideals agrees with the raw definition",
    "all a, every constraint bundle, every x",
)
def reflexive_characterization(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.OUTER):
            for x in ctx.elements:
                yield Case(_render(ctx, c, a=a, x=x), holds(lambda: reflexive_characterize(a, x, c).consistent))


@theorem(
    "T-12I-existence",
    "the {1,2}-inverse with a prescribed pair exists ⇔ the shape's direct sums hold",
    "all a, every pair-shaped bundle",
)
def reflexive_existence(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.OUTER, _pair_shapes()):
            brute = [x for x in ctx.reflexive(a) if c.holds(a, x)]
            conds = all(reflexive_conditions(a, c).values())

            def agrees() -> bool:
                rep = outer_with(a, c, reflexive=True)
                return rep.found == conds and (not rep.found or [rep.element.key] == _keys(brute))

            yield Case(_render(ctx, c, a=a), conds == bool(brute) and len(brute) <= 1 and holds(agrees))


@theorem(
    "T-mitsch",
    "the prescribed outer inverse is the single element of Y ∩ Z, the maximum of Y and the minimum of Z",
    "all a, every pair-shaped bundle",
)
def mitsch_sets(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.OUTER, _pair_shapes()):
            yield Case(_render(ctx, c, a=a), holds(lambda: mitsch_extremes(a, c).consistent))


@theorem(
    "T-mitsch-lemma",
    "y ≤_M z for every y ∈ Y and every z ∈ Z",
    "all a, every pair-shaped bundle",
)
def mitsch_lemma(ctx: RingContext) -> Iterator[Case]:
    for a in ctx.elements:
        for c in bundles(ctx, Mode.OUTER, _pair_shapes()):
            yield Case(_render(ctx, c, a=a), holds(lambda: mitsch_extremes(a, c).related))


@theorem(
    "T-mitsch-order",
    "y ≤_M z ⇔ some v, w with vz = vy = y = yw = zw",
    "all pairs (y, z)",
)
def mitsch_order(ctx: RingContext) -> Iterator[Case]:
    elems = ctx.elements
    for y, z in ctx.pairs():
        left = any(v * z == y and v * y == y for v in elems)
        right = any(y * w == y and z * w == y for w in elems)
        yield Case(ctx.render(y=y, z=z), mitsch_leq(y, z) == (left and right))

