"""Combinatorial model of the tight contact structures on the 3-torus.

A twisting parameter n >= 1 selects the structure.  The module computes
the maximal Thurston-Bennequin number of a linear knot type, the
dividing-set profile (slope and curve count) of a convex linear torus
spanned by two lattice vectors, and the cyclic sign structure on the
complement of the 2n horizontal dividing curves.

Sign convention.  Components of the horizontal dividing set are labelled
0 .. 2n-1 in cyclic order; region i sits between components i and i+1
(indices mod 2n) and carries sign + exactly when i is even.  Only the
alternation is intrinsic: the global choice is a coorientation
convention, and every count produced downstream is invariant under the
relabelling i -> i+1 with the two stabilisation signs swapped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice import Vec3, as_direction


@dataclass(frozen=True)
class ContactStructure:
    """Twisting parameter selecting one tight contact structure."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("twisting parameter must be a positive integer")


def as_contact(cs) -> ContactStructure:
    if isinstance(cs, ContactStructure):
        return cs
    if isinstance(cs, int):
        return ContactStructure(cs)
    raise TypeError(f"not a contact structure: {cs!r}")


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class Slope:
    """Extended rational in lowest terms; (1, 0) encodes the infinite slope."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise ValueError("denominator must be non-negative")
        if self.den == 0:
            if self.num != 1:
                raise ValueError("infinite slope is encoded as (1, 0)")
        elif math.gcd(self.num, self.den) != 1:
            raise ValueError("slope is not reduced")

    @classmethod
    def of(cls, num: int, den: int) -> "Slope":
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a slope")
            return cls(1, 0)
        g = math.gcd(num, den)
        if den < 0:
            g = -g
        return cls(num // g, den // g)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __str__(self) -> str:
        return "inf" if self.den == 0 else f"{self.num}/{self.den}"


@dataclass(frozen=True)
class TorusSpan:
    """Two lattice vectors spanning a linear torus.

    The pair must extend to an integer basis of Z^3; equivalently the
    three 2x2 minors of the 3x2 matrix (b|c) are jointly coprime.
    """

    b: Vec3
    c: Vec3

    def __post_init__(self):
        for name in ("b", "c"):
            value = tuple(int(x) for x in getattr(self, name))
            if len(value) != 3:
                raise ValueError("spanning vectors must have three integer entries")
            object.__setattr__(self, name, value)
        if math.gcd(*self.minors()) != 1:
            raise ValueError("span does not extend to a basis of Z^3")

    def minors(self) -> Vec3:
        b, c = self.b, self.c
        return (
            b[1] * c[2] - b[2] * c[1],
            b[2] * c[0] - b[0] * c[2],
            b[0] * c[1] - b[1] * c[0],
        )


def as_span(span) -> TorusSpan:
    if isinstance(span, TorusSpan):
        return span
    b, c = span
    return TorusSpan(tuple(b), tuple(c))


@dataclass(frozen=True)
class DividingSetProfile:
    """Slope and dividing-curve count of a convex linear torus."""

    slope: Slope
    count: int


def tb_max(cs, d) -> int:
    """Maximal Thurston-Bennequin number of the knot type: -n |c3|."""
    cs = as_contact(cs)
    d = as_direction(d)
    return -cs.n * abs(d.c3)


def dividing_profile(cs, span) -> DividingSetProfile:
    """Slope -b3/c3 (infinite when c3 = 0) and curve count 2n gcd(|b3|, |c3|)."""
    cs = as_contact(cs)
    span = as_span(span)
    b3, c3 = span.b[2], span.c[2]
    if b3 == 0 and c3 == 0:
        raise ValueError("horizontal torus: profile formula inapplicable")
    return DividingSetProfile(
        slope=Slope.of(-b3, c3),
        count=2 * cs.n * math.gcd(b3, c3),
    )


@dataclass(frozen=True)
class HorizontalDividingStructure:
    """Cyclic dividing data of a horizontal torus: 2n curves, 2n signed regions."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("twisting parameter must be a positive integer")

    @property
    def size(self) -> int:
        # number of components == number of regions == 2n
        return 2 * self.n

    def components(self) -> range:
        return range(self.size)

    def regions(self) -> range:
        return range(self.size)

    def region_sign(self, i: int) -> int:
        self._check(i)
        return 1 if i % 2 == 0 else -1

    def regions_of_component(self, i: int) -> tuple[int, int]:
        """The two regions bounded by component i, of opposite signs."""
        self._check(i)
        return ((i - 1) % self.size, i)

    def components_of_region(self, i: int) -> tuple[int, int]:
        """The two components bounding region i, in cyclic order."""
        self._check(i)
        return (i, (i + 1) % self.size)

    def region_of_sign(self, component: int, sign: int) -> int:
        """The unique region of the given sign bounded by the component."""
        _check_sign(sign)
        before, after = self.regions_of_component(component)
        return after if self.region_sign(after) == sign else before

    def _check(self, i: int) -> None:
        if not 0 <= i < self.size:
            raise ValueError(f"index {i} out of range for {self.size} components")


def horizontal_structure(cs) -> HorizontalDividingStructure:
    return HorizontalDividingStructure(as_contact(cs).n)


def shared_region(hs: HorizontalDividingStructure, i: int, j: int, sign: int) -> int | None:
    """Region of the given sign bounded by both components, or None.

    Two distinct components bound a common region only when adjacent in
    the cyclic order; for n = 1 the two components bound both regions, so
    either sign succeeds.  A component never shares a region with itself.
    """
    _check_sign(sign)
    hs._check(i)
    hs._check(j)
    if i == j:
        return None
    for region in hs.regions():
        if set(hs.components_of_region(region)) == {i, j} and hs.region_sign(region) == sign:
            return region
    return None
