"""Draw the "mountain range" of a knot type: how many Legendrian classes
realize each pair of classical invariants (tb, r).

For a knot type with direction (c1, c2, c3) in the contact structure with
twisting parameter n, classes only exist on a triangular lattice hanging
from the peak tb = -n|c3|.  Non-vertical knot types carry exactly one class
per lattice point.  Vertical ones (c3 = 0) are wider at the top: 2n classes
at the peak, n along each extremal edge |r| = |tb|, and one in the interior.

Run as a script to print the ranges for a handful of knot types side by
side.  The output is deterministic.
"""

from __future__ import annotations

import legtorus as lt


def render_range(n: int, direction: tuple[int, int, int], floor: int) -> str:
    """Text picture of the counts for tb from the peak down to ``floor``."""
    top = lt.tb_max(n, direction)
    width = top - floor
    lines = [f"n={n}  direction={direction}  tb_max={top}"]
    for tb in range(top, floor - 1, -1):
        cells = []
        for r in range(-width, width + 1):
            count = lt.count_classes(n, direction, tb, r)
            cells.append(str(count) if count else ".")
        lines.append(f"tb={tb:3d}  " + " ".join(cells))
    labels = [str(r) for r in range(-width, width + 1)]
    lines.append("r:      " + " ".join(labels))
    return "\n".join(lines)


def main() -> None:
    cases = [
        (1, (0, 1, 1)),
        (2, (0, 1, 1)),
        (1, (1, 0, 0)),
        (3, (1, 0, 0)),
    ]
    for n, direction in cases:
        floor = lt.tb_max(n, direction) - 4
        print(render_range(n, direction, floor))
        print()

    # the same data, queried the way the library reports it
    print("enumerate_range(1, (1, 0, 0), tb_min=-2):")
    for tb, r, count in lt.enumerate_range(1, (1, 0, 0), -2):
        print(f"  tb={tb:3d}  r={r:3d}  count={count}")


if __name__ == "__main__":
    main()
