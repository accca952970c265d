"""Shared helpers for the test suite: exact random generators, explicit
class enumeration, the sign-flip symmetry, and the CLI golden-case table."""

from __future__ import annotations

import os
import subprocess
import sys
from dataclasses import replace
from pathlib import Path

import legtorus as lt
from legtorus.oracle import DisjointSet

REPO = Path(__file__).resolve().parents[1]
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def random_unimodular(rng, steps=10):
    """Random 3x3 integer matrix of determinant one, built from shear moves."""
    rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        rows[j] = [rows[j][k] + c * rows[i][k] for k in range(3)]
    return tuple(tuple(row) for row in rows)


def random_primitive_direction(rng):
    # rows of a determinant-one matrix are primitive
    return random_unimodular(rng)[rng.randrange(3)]


def random_span(rng):
    m = random_unimodular(rng)
    i, j = rng.sample(range(3), 2)
    return (m[i], m[j])


def all_classes(n, d, depth):
    """Every canonical class with tb >= tb_max - depth, built by constructor."""
    top = lt.tb_max(n, d)
    out = []
    if lt.knot_type_kind(d).vertical:
        hs = lt.horizontal_structure(n)
        out.extend(lt.VerticalMax(n=n, component=i) for i in range(2 * n))
        for k in range(1, depth + 1):
            for region in hs.regions():
                out.append(lt.VerticalPure(n=n, sign=-hs.region_sign(region),
                                           region=region, k=k))
            for r in range(-(k - 2), k - 1, 2):
                out.append(lt.VerticalMixed(n=n, tb=-k, r=r))
    else:
        for drop in range(depth + 1):
            for r in range(-drop, drop + 1, 2):
                out.append(lt.NonVertical(tb_max=top, tb=top - drop, r=r))
    return out


def maximal_classes(n, d):
    if lt.knot_type_kind(d).vertical:
        return [lt.VerticalMax(n=n, component=i) for i in range(2 * n)]
    top = lt.tb_max(n, d)
    return [lt.NonVertical(tb_max=top, tb=top, r=0)]


def reachable_classes(n, d, depth):
    """Closure of the maximal classes under depth-many stabilisations."""
    frontier = set(maximal_classes(n, d))
    seen = set(frontier)
    for _ in range(depth):
        frontier = {lt.stabilize(c, s) for c in frontier for s in (1, -1)}
        seen |= frontier
    return seen


def flip_class(c):
    """Relabel components i -> i+1 and swap the stabilisation signs."""
    if isinstance(c, lt.VerticalMax):
        return lt.VerticalMax(n=c.n, component=(c.component + 1) % (2 * c.n))
    if isinstance(c, lt.VerticalPure):
        return lt.VerticalPure(n=c.n, sign=-c.sign,
                               region=(c.region + 1) % (2 * c.n), k=c.k)
    if isinstance(c, lt.VerticalMixed):
        return lt.VerticalMixed(n=c.n, tb=c.tb, r=-c.r)
    return lt.NonVertical(tb_max=c.tb_max, tb=c.tb, r=-c.r)


def flip_presentation(pres):
    base = pres.base
    if base is not None:
        base = (base + 1) % (2 * pres.cs.n)
    return replace(pres, base=base, p=pres.m, m=pres.p)


def negative_stable_counts_from_words(n, d, depth):
    """Explicit quotient by one extra negative stabilisation, per sl level.

    Built on top of the word quotient without consulting the closed-form
    counts.  Levels are reliable once deeper words cannot add merges:
    vertical levels sl = -2p need words of length p + 1, so only
    p <= depth - 1 is reported; non-vertical levels are stable outright.
    """
    q = lt.build_quotient(n, d, depth)
    ds = DisjointSet()
    for node in q.nodes:
        ds.add(q.class_of(node))
    for node in q.nodes:
        if len(node.word) < q.depth:
            child = lt.WordNode(node.base, node.word + (-1,))
            ds.union(q.class_of(node), q.class_of(child))
    per_sl = {}
    for node in q.nodes:
        tb, r = q.invariants(node)
        per_sl.setdefault(tb - r, set()).add(ds.find(q.class_of(node)))
    counts = {sl: len(roots) for sl, roots in per_sl.items()}
    if q.vertical:
        for p in range(depth, 0, -1):
            counts.pop(-2 * p, None)
    return counts


# --- CLI golden cases -------------------------------------------------------

# (name, argv, expected exit code); the file extension tracks --format.
CLI_CASES = [
    ("tbmax_basic", ["tbmax", "--n", "3", "--direction", "1,2,-2"], 0),
    ("tbmax_vertical", ["tbmax", "--n", "2", "--direction", "1,0,0"], 0),
    ("count_vertical_max", ["count", "--n", "1", "--direction", "1,0,0",
                            "--tb", "0", "--r", "0"], 0),
    ("count_extremal", ["count", "--n", "2", "--direction", "1,0,0",
                        "--tb", "-3", "--r", "3"], 0),
    ("classify_pair_true", ["classify", "--n", "2", "--direction", "1,0,0",
                            "--pres", "1:1:0", "--pres", "2:1:0"], 0),
    ("classify_pair_false", ["classify", "--n", "2", "--direction", "1,0,0",
                             "--pres", "0:1:0", "--pres", "1:1:0"], 0),
    ("classify_single_nonvertical", ["classify", "--n", "1", "--direction", "0,1,1",
                                     "--pres", "2:1"], 0),
    ("dividing_profile_infinite", ["dividing-profile", "--n", "2",
                                   "--span", "0,0,1:0,1,0"], 0),
    ("dividing_profile_slope", ["dividing-profile", "--n", "1",
                                "--span", "1,0,2:0,1,3"], 0),
    ("stabilize_max", ["stabilize", "--n", "2", "--direction", "1,0,0",
                       "--pres", "1:0:0", "--sign", "+"], 0),
    ("destabilize_mixed", ["destabilize", "--n", "1", "--direction", "1,0,0",
                           "--pres", "0:1:1"], 0),
    ("range_json", ["range", "--n", "1", "--direction", "1,0,0",
                    "--tb-min", "-2"], 0),
    ("range_tsv", ["range", "--n", "1", "--direction", "1,0,0",
                   "--tb-min", "-2", "--format", "tsv"], 0),
    ("range_svg", ["range", "--n", "1", "--direction", "0,0,1",
                   "--tb-min", "-3", "--format", "svg"], 0),
    ("stable_merge_adjacent", ["stable-merge", "--n", "2", "--direction", "1,0,0",
                               "--pres", "1:0:0", "--pres", "2:0:0"], 0),
    ("stable_merge_opposite", ["stable-merge", "--n", "2", "--direction", "1,0,0",
                               "--pres", "0:0:0", "--pres", "2:0:0"], 0),
    ("transverse_simple", ["transverse", "--n", "1", "--direction", "1,0,0"], 0),
    ("transverse_not_simple", ["transverse", "--n", "2", "--direction", "1,0,0"], 0),
    ("transverse_sl", ["transverse", "--n", "2", "--direction", "1,0,0",
                       "--sl", "0"], 0),
    ("oracle_vertical", ["oracle", "--n", "1", "--direction", "1,0,0",
                         "--depth", "3"], 0),
    ("error_not_primitive", ["tbmax", "--n", "1", "--direction", "2,4,6"], 1),
    ("error_horizontal_span", ["dividing-profile", "--n", "1",
                               "--span", "1,0,0:0,1,0"], 1),
    ("error_tb_min", ["range", "--n", "1", "--direction", "0,1,1",
                      "--tb-min", "0"], 1),
]


def golden_extension(argv):
    if "--format" in argv:
        return "." + argv[argv.index("--format") + 1]
    return ".json"


def golden_path(name, argv):
    return GOLDEN_DIR / (name + golden_extension(argv))


def run_cli(argv, extra_args=()):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(REPO / "src") + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "legtorus", *argv, *extra_args],
        capture_output=True, env=env,
    )
    return proc.returncode, proc.stdout
