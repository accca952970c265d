"""Integer-lattice arithmetic underlying linear knot types on the 3-torus.

A linear knot type is named by a primitive vector in Z^3, the homology
class of the curve.  This module provides the primitivity test, the
determinant-one extension of a coprime pair to a 2x2 integer matrix, and
the block change of coordinates carrying any knot type with vanishing
third coordinate to the vertical type (1, 0, 0).  Everything is exact
integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Vec3 = tuple[int, int, int]
Mat2 = tuple[tuple[int, int], tuple[int, int]]


def is_primitive(v) -> bool:
    """True iff the integer 3-vector is nonzero with coprime entries."""
    a, b, c = v
    return math.gcd(a, b, c) == 1


@dataclass(frozen=True)
class Direction:
    """Primitive homology class of an oriented linear curve."""

    c1: int
    c2: int
    c3: int

    def __post_init__(self):
        if not is_primitive((self.c1, self.c2, self.c3)):
            raise ValueError("not primitive")

    def as_tuple(self) -> Vec3:
        return (self.c1, self.c2, self.c3)


def as_direction(d) -> Direction:
    if isinstance(d, Direction):
        return d
    return Direction(*d)


@dataclass(frozen=True)
class KnotKind:
    """Coarse taxonomy of a linear knot type.

    Vertical kinds (third coordinate zero) admit maximally twisted
    representatives with tb = 0; the others are graded by |c3|.
    """

    vertical: bool
    c3_abs: int


def knot_type_kind(d) -> KnotKind:
    d = as_direction(d)
    return KnotKind(vertical=d.c3 == 0, c3_abs=abs(d.c3))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # invariant: x*a + y*b == g and nx*a + ny*b == ng throughout
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def extend_to_sl2(a: int, b: int) -> Mat2:
    """Determinant-one integer matrix taking the coprime pair (a, b) to (1, 0).

    The second row is forced to (-b, a) by the determinant condition; the
    Bezout first row is pinned by taking its first entry minimal in
    absolute value, ties resolved toward the non-negative representative.
    """
    x, y, g = _xgcd(a, b)
    if g != 1:
        raise ValueError("not primitive")
    if b == 0:
        x, y = a, 0  # a is +1 or -1 here
    else:
        x %= abs(b)  # first row shifts by multiples of (b, -a)
        if 2 * x > abs(b):
            x -= abs(b)
        y = (1 - x * a) // b
    return ((x, y), (-b, a))


@dataclass(frozen=True)
class UnimodularMatrix:
    """3x3 integer matrix with determinant one, stored as row tuples."""

    rows: tuple[Vec3, Vec3, Vec3]

    def __post_init__(self):
        if self.det() != 1:
            raise ValueError("determinant is not one")

    def det(self) -> int:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def apply(self, v) -> Vec3:
        x, y, z = v
        return tuple(row[0] * x + row[1] * y + row[2] * z for row in self.rows)


def normalize_horizontal_knot_type(d) -> UnimodularMatrix:
    """Coordinate change carrying a knot type with c3 = 0 to (1, 0, 0).

    The result fixes the third coordinate, so it maps the family of
    horizontal tori to itself.
    """
    d = as_direction(d)
    if d.c3 != 0:
        raise ValueError("not a horizontal knot type")
    (x, y), (u, v) = extend_to_sl2(d.c1, d.c2)
    return UnimodularMatrix(((x, y, 0), (u, v, 0), (0, 0, 1)))
