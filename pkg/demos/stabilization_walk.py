"""Follow vertical Legendrian curves down the stabilization tree.

In the contact structure with twisting parameter n, a vertical knot type
has 2n maximal classes, one per dividing curve of a convex horizontal
torus.  Stabilizing positively pushes a curve into the adjacent negative
region, stabilizing negatively into the adjacent positive region.  Curves
that keep receiving the same sign stay distinguishable as long as their
regions differ; a single stabilization of the opposite sign collapses
everything with equal invariants into one class.

The script walks these lanes explicitly for n = 2, then asks the reverse
question (which classes destabilize to which) and finishes with the
minimal number of extra stabilizations needed to merge each pair of
maximal curves.
"""

from __future__ import annotations

import legtorus as lt

N = 2
VERTICAL = (1, 0, 0)


def describe(c) -> str:
    data = c.as_dict()
    kind = data.pop("kind")
    inner = ", ".join(f"{k}={v}" for k, v in sorted(data.items()))
    return f"{kind}({inner})"


def walk_one_sign() -> None:
    print(f"Repeated positive stabilization of each maximal class (n={N}):")
    hs = lt.horizontal_structure(N)
    for component in hs.components():
        c = lt.VerticalMax(n=N, component=component)
        trail = [describe(c)]
        for _ in range(3):
            c = lt.stabilize(c, +1)
            trail.append(describe(c))
        print("  " + "  ->  ".join(trail))
    print()
    print("Components sharing a negative region land in the same lane:")
    for i in hs.components():
        region = hs.region_of_sign(i, -1)
        print(f"  component {i} -> negative region {region}")
    print()


def funnel() -> None:
    print("One stabilization of each sign funnels everything together:")
    a = lt.Presentation(N, VERTICAL, base=0)
    b = lt.Presentation(N, VERTICAL, base=2)
    for extra_p, extra_m in [(1, 0), (2, 0), (1, 1)]:
        merged = lt.becomes_isotopic_after(lt.StableQuery(a, b, extra_p, extra_m))
        print(f"  bases 0, 2 after ({extra_p}, {extra_m}) extra: {merged}")
    print()


def parents() -> None:
    print("Destabilizations (class <- parent, removed sign):")
    samples = [
        lt.VerticalPure(n=N, sign=+1, region=1, k=2),
        lt.VerticalMixed(n=N, tb=-2, r=0),
        lt.VerticalMax(n=N, component=0),
    ]
    for c in samples:
        entries = sorted(
            (describe(parent), "+" if sign > 0 else "-")
            for parent, sign in lt.destabilize_parents(c)
        )
        print(f"  {describe(c)}:")
        if not entries:
            print("    (none: already maximal)")
        for parent, sign in entries:
            print(f"    <- {parent}  via S{sign}")
    print()


def merge_table() -> None:
    print("Minimal (positive, negative) extra stabilizations to merge")
    print(f"maximal curves at bases i and j (n={N}):")
    header = "      " + "".join(f"j={j}     " for j in range(2 * N))
    print(header)
    for i in range(2 * N):
        cells = []
        for j in range(2 * N):
            a = lt.Presentation(N, VERTICAL, base=i)
            b = lt.Presentation(N, VERTICAL, base=j)
            cells.append(str(lt.minimal_mixed_merge(a, b)))
        print(f"  i={i} " + "  ".join(cells))


def main() -> None:
    walk_one_sign()
    funnel()
    parents()
    merge_table()


if __name__ == "__main__":
    main()
