"""Brute-force cross-check of the classification counts.

The verifier never consults the closed-form counts while building its
answer.  It enumerates stabilisation words over the maximally twisted
base curves and closes them under two local moves only:

* adjacent letters of a word commute;
* a word whose first letter is a positive (negative) stabilisation of a
  base component may hop to the other component bounding the same
  negative (positive) region, the word left unchanged.

The second move, applied at every suffix, is exactly the congruence
generated by the one-letter identifications, since stabilisation is well
defined on isotopy classes.  Counting the resulting equivalence classes
per invariant pair and comparing with the closed-form counts is a
genuine two-route check: a bug on either route surfaces as a mismatch.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classes import count_classes
from .contact import as_contact, horizontal_structure, tb_max
from .lattice import as_direction, knot_type_kind


class DisjointSet:
    """Union-find with path compression and union by size."""

    def __init__(self):
        self._parent = {}
        self._size = {}

    def add(self, x) -> None:
        if x not in self._parent:
            self._parent[x] = x
            self._size[x] = 1

    def find(self, x):
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, x, y) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self._size[x] < self._size[y]:
            x, y = y, x
        self._parent[y] = x
        self._size[x] += self._size[y]


@dataclass(frozen=True)
class WordNode:
    """A base curve together with a finite stabilisation word (letters +-1)."""

    base: int
    word: tuple[int, ...]


@dataclass(frozen=True)
class MergeRelationSet:
    """Which local moves the closure uses; both on by default."""

    letter_transpositions: bool = True
    base_merges: bool = True


def _node_key(node: WordNode) -> tuple:
    return (len(node.word), node.base, node.word)


def _words(depth: int):
    yield ()
    for length in range(1, depth + 1):
        yield from itertools.product((1, -1), repeat=length)


class Quotient:
    """Equivalence classes of stabilisation words up to the explored depth."""

    def __init__(self, n, direction, vertical, tb_top, depth, nodes, root_of):
        self.n = n
        self.direction = direction
        self.vertical = vertical
        self.tb_top = tb_top
        self.depth = depth
        self.nodes = nodes
        self._root_of = root_of
        self._counts: dict[tuple[int, int], int] = {}
        per_cell: dict[tuple[int, int], set[WordNode]] = {}
        for node in nodes:
            per_cell.setdefault(self.invariants(node), set()).add(root_of[node])
        for cell, roots in per_cell.items():
            self._counts[cell] = len(roots)

    def invariants(self, node: WordNode) -> tuple[int, int]:
        return (self.tb_top - len(node.word), sum(node.word))

    def class_of(self, node: WordNode) -> WordNode:
        return self._root_of[node]

    def classes(self) -> tuple[tuple[WordNode, ...], ...]:
        groups: dict[WordNode, list[WordNode]] = {}
        for node in self.nodes:
            groups.setdefault(self._root_of[node], []).append(node)
        ordered = sorted(groups.items(), key=lambda item: _node_key(item[0]))
        return tuple(tuple(sorted(members, key=_node_key)) for _, members in ordered)

    def count(self, tb: int, r: int) -> int:
        if tb < self.tb_top - self.depth:
            raise ValueError("insufficient depth")
        return self._counts.get((tb, r), 0)


def build_quotient(cs, d, depth: int,
                   relations: MergeRelationSet = MergeRelationSet(),
                   max_nodes: int = 1_000_000) -> Quotient:
    """Enumerate words to the given depth and close under the local moves."""
    cs = as_contact(cs)
    d = as_direction(d)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    vertical = knot_type_kind(d).vertical
    bases = range(2 * cs.n) if vertical else range(1)
    total = len(bases) * (2 ** (depth + 1) - 1)
    if total > max_nodes:
        raise ValueError("depth exceeds the configured resource bound")
    nodes = tuple(WordNode(base, word) for base in bases for word in _words(depth))
    ds = DisjointSet()
    for node in nodes:
        ds.add(node)
    if relations.letter_transpositions:
        for node in nodes:
            word = node.word
            for i in range(len(word) - 1):
                if word[i] != word[i + 1]:
                    swapped = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
                    ds.union(node, WordNode(node.base, swapped))
    if relations.base_merges and vertical:
        hs = horizontal_structure(cs)
        for node in nodes:
            if not node.word:
                continue
            region = hs.region_of_sign(node.base, -node.word[0])
            x, y = hs.components_of_region(region)
            other = y if node.base == x else x
            ds.union(node, WordNode(other, node.word))
    groups: dict[WordNode, list[WordNode]] = {}
    for node in nodes:
        groups.setdefault(ds.find(node), []).append(node)
    root_of: dict[WordNode, WordNode] = {}
    for members in groups.values():
        representative = min(members, key=_node_key)
        for node in members:
            root_of[node] = representative
    return Quotient(cs.n, d.as_tuple(), vertical, tb_max(cs, d), depth, nodes, root_of)


def quotient_count(q: Quotient, tb: int, r: int) -> int:
    """Number of equivalence classes with the given invariants."""
    return q.count(tb, r)


@dataclass(frozen=True)
class VerificationRow:
    tb: int
    r: int
    oracle_count: int
    closed_form_count: int

    @property
    def ok(self) -> bool:
        return self.oracle_count == self.closed_form_count


@dataclass(frozen=True)
class VerificationReport:
    """Cell-by-cell comparison of the word quotient with the closed form."""

    n: int
    direction: tuple[int, int, int]
    depth: int
    rows: tuple[VerificationRow, ...]

    @property
    def mismatches(self) -> tuple[VerificationRow, ...]:
        return tuple(row for row in self.rows if not row.ok)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        def row_dict(row):
            return {"tb": row.tb, "r": row.r, "oracle": row.oracle_count,
                    "closed_form": row.closed_form_count}

        return {
            "n": self.n,
            "direction": list(self.direction),
            "depth": self.depth,
            "ok": self.ok,
            "rows": [row_dict(row) for row in self.rows],
            "mismatches": [row_dict(row) for row in self.mismatches],
        }


def verify_against_closed_form(cs, d, depth: int) -> VerificationReport:
    """Compare oracle counts with the closed form on every explored cell."""
    cs = as_contact(cs)
    d = as_direction(d)
    q = build_quotient(cs, d, depth)
    rows = []
    for tb in range(q.tb_top, q.tb_top - depth - 1, -1):
        for r in range(tb - q.tb_top, q.tb_top - tb + 1):
            rows.append(VerificationRow(tb, r, q.count(tb, r), count_classes(cs, d, tb, r)))
    return VerificationReport(cs.n, d.as_tuple(), depth, tuple(rows))
