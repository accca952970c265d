"""Stabilisation calculus on canonical classes.

Positive and negative stabilisations commute and act on canonical forms
by explicit rules; destabilisation is the exact formal inverse, returning
the full set of preimages (possibly empty, possibly several).  On top of
the calculus sit the stable-equivalence queries: when do two curves merge
after extra stabilisations applied to both, and what remains of the
classification once negative stabilisations are quotiented away (the
transverse side, graded by sl = tb - r).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .classes import (
    LegendrianClass,
    NonVertical,
    Presentation,
    VerticalMax,
    VerticalMixed,
    VerticalPure,
    _require_comparable,
    canonicalize,
)
from .contact import HorizontalDividingStructure, as_contact, tb_max
from .lattice import as_direction, knot_type_kind


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")


def stabilize(c: LegendrianClass, sign: int) -> LegendrianClass:
    """One stabilisation of the given sign: tb drops by 1, r moves by sign."""
    _check_sign(sign)
    if isinstance(c, NonVertical):
        return NonVertical(tb_max=c.tb_max, tb=c.tb - 1, r=c.r + sign)
    if isinstance(c, VerticalMax):
        hs = HorizontalDividingStructure(c.n)
        region = hs.region_of_sign(c.component, -sign)
        return VerticalPure(n=c.n, sign=sign, region=region, k=1)
    if isinstance(c, VerticalPure):
        if sign == c.sign:
            return VerticalPure(n=c.n, sign=c.sign, region=c.region, k=c.k + 1)
        return VerticalMixed(n=c.n, tb=-(c.k + 1), r=c.sign * (c.k - 1))
    if isinstance(c, VerticalMixed):
        return VerticalMixed(n=c.n, tb=c.tb - 1, r=c.r + sign)
    raise TypeError(f"not a canonical class: {c!r}")


def destabilize_parents(c: LegendrianClass) -> frozenset[tuple[LegendrianClass, int]]:
    """All pairs (parent, sign) with stabilize(parent, sign) == c."""
    parents: set[tuple[LegendrianClass, int]] = set()
    if isinstance(c, NonVertical):
        for sign in (1, -1):
            tb, r = c.tb + 1, c.r - sign
            if tb <= c.tb_max and abs(r) <= c.tb_max - tb:
                parents.add((NonVertical(tb_max=c.tb_max, tb=tb, r=r), sign))
    elif isinstance(c, VerticalMax):
        pass
    elif isinstance(c, VerticalPure):
        if c.k > 1:
            parents.add((VerticalPure(n=c.n, sign=c.sign, region=c.region, k=c.k - 1), c.sign))
        else:
            hs = HorizontalDividingStructure(c.n)
            for component in hs.components_of_region(c.region):
                parents.add((VerticalMax(n=c.n, component=component), c.sign))
    elif isinstance(c, VerticalMixed):
        hs = HorizontalDividingStructure(c.n)
        p = (c.r - c.tb) // 2
        m = (-c.tb - c.r) // 2
        if p > 1:
            parents.add((VerticalMixed(n=c.n, tb=c.tb + 1, r=c.r - 1), 1))
        else:
            # removing the single positive stabilisation leaves a pure
            # negative class over any positive region
            for region in hs.regions():
                if hs.region_sign(region) == 1:
                    parents.add((VerticalPure(n=c.n, sign=-1, region=region, k=m), 1))
        if m > 1:
            parents.add((VerticalMixed(n=c.n, tb=c.tb + 1, r=c.r + 1), -1))
        else:
            for region in hs.regions():
                if hs.region_sign(region) == -1:
                    parents.add((VerticalPure(n=c.n, sign=1, region=region, k=p), -1))
    else:
        raise TypeError(f"not a canonical class: {c!r}")
    return frozenset(parents)


@dataclass(frozen=True)
class StableQuery:
    """Two presentations plus extra stabilisations applied to both sides."""

    pres1: Presentation
    pres2: Presentation
    extra_p: int = 0
    extra_m: int = 0

    def __post_init__(self):
        if self.extra_p < 0 or self.extra_m < 0:
            raise ValueError("extra stabilisation counts must be non-negative")
        _require_comparable(self.pres1, self.pres2)


def _augment(pres: Presentation, extra_p: int, extra_m: int) -> Presentation:
    return replace(pres, p=pres.p + extra_p, m=pres.m + extra_m)


def becomes_isotopic_after(query: StableQuery) -> bool:
    """Do the two curves agree once the extra stabilisations are applied?"""
    first = canonicalize(_augment(query.pres1, query.extra_p, query.extra_m))
    second = canonicalize(_augment(query.pres2, query.extra_p, query.extra_m))
    return first == second


def minimal_mixed_merge(pres1: Presentation, pres2: Presentation) -> tuple[int, int] | None:
    """Smallest extra (p, m), ordered by (p + m, p), merging the two curves.

    Returns None when no amount of shared stabilisation merges them: extra
    stabilisations shift both invariant pairs equally, so curves whose
    (tb, r) already differ never merge.  When the invariants agree a merge
    always exists with p + m <= 2.
    """
    _require_comparable(pres1, pres2)
    first, second = canonicalize(pres1), canonicalize(pres2)
    if (first.tb, first.r) != (second.tb, second.r):
        return None
    for total in range(3):
        for p in range(total + 1):
            query = StableQuery(pres1, pres2, extra_p=p, extra_m=total - p)
            if becomes_isotopic_after(query):
                return (p, total - p)
    return None


def negative_stable_class_count(cs, d, sl: int) -> int:
    """Classes with tb - r = sl, counted modulo negative stabilisation.

    Vertical kinds keep n distinct classes at sl = 0 (one per positive
    region) and a single class at each negative even sl; every other kind
    carries at most one class per level.
    """
    cs = as_contact(cs)
    d = as_direction(d)
    if not knot_type_kind(d).vertical:
        top = tb_max(cs, d)
        return 1 if sl <= top and (top - sl) % 2 == 0 else 0
    if sl == 0:
        return cs.n
    if sl < 0 and sl % 2 == 0:
        return 1
    return 0


@dataclass(frozen=True)
class NegativeStableClassKey:
    """Label of one negative-stable class at a given sl level."""

    sl: int
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("index must be non-negative")


def negative_stable_class_keys(cs, d, sl: int) -> tuple[NegativeStableClassKey, ...]:
    count = negative_stable_class_count(cs, d, sl)
    return tuple(NegativeStableClassKey(sl=sl, index=i) for i in range(count))


def is_transversally_simple(cs, d) -> bool:
    """False exactly when some sl level carries more than one stable class."""
    cs = as_contact(cs)
    d = as_direction(d)
    return not (knot_type_kind(d).vertical and cs.n > 1)
