"""Canonical forms for Legendrian isotopy classes of linear curves.

A curve is presented as a maximally twisted base together with counts of
positive and negative stabilisations; the order of stabilisations never
matters.  For knot types with nonzero third coordinate the classical
invariant pair (tb, r) is complete, so the canonical form is that pair
next to the ceiling value of tb.  Knot types with vanishing third
coordinate reduce, by a determinant-one change of coordinates fixing the
third coordinate (see lattice.normalize_horizontal_knot_type), to the
vertical type, whose maximally twisted representatives sit on the 2n
components of the horizontal dividing set.  Their stabilisations
coincide exactly as dictated by the signed regions between components:

* no stabilisations: the class remembers the component itself;
* stabilisations all of one sign: the class remembers the adjacent
  region of the opposite sign (the two components bounding that region
  yield the same curve) and the number of stabilisations;
* both signs present: the class collapses to the pair (tb, r) alone.

Because vertical canonical forms live in normalized coordinates, classes
arising from different horizontal knot types carry identical data;
is_isotopic therefore insists on equal directions before comparing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contact import (
    ContactStructure,
    HorizontalDividingStructure,
    as_contact,
    horizontal_structure,
    tb_max,
)
from .lattice import Direction, as_direction, knot_type_kind


class LegendrianClass:
    """Common interface of the canonical-form variants."""

    __slots__ = ()

    tb: int
    r: int

    def as_dict(self) -> dict:
        raise NotImplementedError


def _sign_label(sign: int) -> str:
    return "+" if sign > 0 else "-"


@dataclass(frozen=True)
class NonVertical(LegendrianClass):
    """Class in a knot type with nonzero third coordinate.

    The pair (tb, r) is a complete invariant; tb_max = -n |c3| is the
    ceiling shared by the whole knot type.
    """

    tb_max: int
    tb: int
    r: int

    def __post_init__(self):
        if self.tb_max >= 0:
            raise ValueError("non-vertical classes have negative maximal tb")
        drop = self.tb_max - self.tb
        if drop < 0:
            raise ValueError("tb exceeds the maximal Thurston-Bennequin number")
        if abs(self.r) > drop or (self.r - drop) % 2:
            raise ValueError("rotation number out of range or off parity")

    def as_dict(self) -> dict:
        return {"kind": "non-vertical", "tb_max": self.tb_max, "tb": self.tb, "r": self.r}


@dataclass(frozen=True)
class VerticalMax(LegendrianClass):
    """Maximally twisted vertical curve sitting on one dividing component."""

    n: int
    component: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("twisting parameter must be a positive integer")
        if not 0 <= self.component < 2 * self.n:
            raise ValueError("component index out of range")

    @property
    def tb(self) -> int:
        return 0

    @property
    def r(self) -> int:
        return 0

    def as_dict(self) -> dict:
        return {"kind": "vertical-max", "n": self.n, "component": self.component,
                "tb": 0, "r": 0}


@dataclass(frozen=True)
class VerticalPure(LegendrianClass):
    """Vertical class whose k >= 1 stabilisations all share one sign.

    Stores the region of the opposite sign adjacent to the base; the two
    components bounding that region produce this same class.
    """

    n: int
    sign: int
    region: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("twisting parameter must be a positive integer")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.k < 1:
            raise ValueError("stabilisation count must be positive")
        hs = HorizontalDividingStructure(self.n)
        if hs.region_sign(self.region) != -self.sign:
            raise ValueError("stored region must oppose the stabilisation sign")

    @property
    def tb(self) -> int:
        return -self.k

    @property
    def r(self) -> int:
        return self.sign * self.k

    def as_dict(self) -> dict:
        return {"kind": "vertical-pure", "n": self.n, "sign": _sign_label(self.sign),
                "region": self.region, "k": self.k, "tb": self.tb, "r": self.r}


@dataclass(frozen=True)
class VerticalMixed(LegendrianClass):
    """Vertical class with stabilisations of both signs; (tb, r) is complete."""

    n: int
    tb: int
    r: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("twisting parameter must be a positive integer")
        if self.tb > -2:
            raise ValueError("mixed classes need at least one stabilisation of each sign")
        if abs(self.r) > -self.tb - 2 or (self.r - self.tb) % 2:
            raise ValueError("rotation number out of range or off parity")

    def as_dict(self) -> dict:
        return {"kind": "vertical-mixed", "n": self.n, "tb": self.tb, "r": self.r}


@dataclass(frozen=True)
class Presentation:
    """A curve given as a maximally twisted base plus stabilisation counts.

    Vertical-kind directions require a base component index into the
    horizontal dividing structure; other kinds carry no base.
    """

    cs: ContactStructure
    d: Direction
    base: int | None = None
    p: int = 0
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cs", as_contact(self.cs))
        object.__setattr__(self, "d", as_direction(self.d))
        if self.p < 0 or self.m < 0:
            raise ValueError("stabilisation counts must be non-negative")
        if knot_type_kind(self.d).vertical:
            if self.base is None:
                raise ValueError("vertical presentation requires a base component")
            if not 0 <= self.base < 2 * self.cs.n:
                raise ValueError("base component index out of range")
        elif self.base is not None:
            raise ValueError("non-vertical presentation carries no base component")


def canonicalize(pres: Presentation) -> LegendrianClass:
    """Collapse a stabilised presentation to the canonical form of its class."""
    cs, d, p, m = pres.cs, pres.d, pres.p, pres.m
    if not knot_type_kind(d).vertical:
        top = tb_max(cs, d)
        return NonVertical(tb_max=top, tb=top - p - m, r=p - m)
    hs = horizontal_structure(cs)
    if p == 0 and m == 0:
        return VerticalMax(n=cs.n, component=pres.base)
    if m == 0:
        return VerticalPure(n=cs.n, sign=1, region=hs.region_of_sign(pres.base, -1), k=p)
    if p == 0:
        return VerticalPure(n=cs.n, sign=-1, region=hs.region_of_sign(pres.base, 1), k=m)
    return VerticalMixed(n=cs.n, tb=-(p + m), r=p - m)


def _require_comparable(pres1: Presentation, pres2: Presentation) -> None:
    if pres1.d != pres2.d:
        raise ValueError("not smoothly isotopic")
    if pres1.cs != pres2.cs:
        raise ValueError("presentations live in different contact structures")


def is_isotopic(pres1: Presentation, pres2: Presentation) -> bool:
    """Decide Legendrian isotopy of two presentations of the same knot type."""
    _require_comparable(pres1, pres2)
    return canonicalize(pres1) == canonicalize(pres2)


def is_realizable(cs, d, tb: int, r: int) -> bool:
    """True iff some Legendrian representative has the given invariants."""
    drop = tb_max(cs, d) - tb
    return drop >= 0 and abs(r) <= drop and (r - drop) % 2 == 0


def count_classes(cs, d, tb: int, r: int) -> int:
    """Number of Legendrian isotopy classes with the given invariants."""
    cs = as_contact(cs)
    d = as_direction(d)
    if not is_realizable(cs, d, tb, r):
        return 0
    if d.c3 != 0:
        return 1
    if tb == 0:
        return 2 * cs.n
    if abs(r) == -tb:
        return cs.n
    return 1


def enumerate_range(cs, d, tb_min: int) -> list[tuple[int, int, int]]:
    """All (tb, r, count) rows with count > 0 and tb_min <= tb <= tb_max.

    Rows are ordered by descending tb, then ascending r: the mountain
    range read top to bottom, left to right.
    """
    cs = as_contact(cs)
    d = as_direction(d)
    top = tb_max(cs, d)
    if tb_min > top:
        raise ValueError("tb_min exceeds the maximal Thurston-Bennequin number")
    rows = []
    for tb in range(top, tb_min - 1, -1):
        for r in range(tb - top, top - tb + 1):
            count = count_classes(cs, d, tb, r)
            if count:
                rows.append((tb, r, count))
    return rows
