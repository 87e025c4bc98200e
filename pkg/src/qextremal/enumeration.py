"""Graph enumeration: every labeled graph of order n, and isomorphism-class
generation by vertex augmentation for hereditary properties.

A property is hereditary when it survives vertex deletion (no P_p, longest
cycle <= c, ...). Every graph in such a class on n vertices is then a
one-vertex extension of a class member on n - 1 vertices, so augmenting the
deduplicated level n - 1 reaches every isomorphism class on level n.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .canon import canonical_graph6
from .formats import parse_graph6
from .graph import Graph

Predicate = Callable[[Graph], bool]


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs, in edge-mask order."""
    m = n * (n - 1) // 2
    for mask in range(1 << m):
        yield Graph.from_edge_mask(n, mask)


def extend(G: Graph) -> Iterator[Graph]:
    """Every graph obtained by adding vertex ``G.n`` with some neighborhood."""
    n = G.n
    rows = list(G.rows)
    for nbrs in range(1 << n):
        new_rows = [r | (((nbrs >> v) & 1) << n) for v, r in enumerate(rows)]
        new_rows.append(nbrs)
        yield Graph(n + 1, new_rows, G.m + nbrs.bit_count())


def iso_classes(n: int, predicate: Predicate | None = None) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices
    satisfying the hereditary ``predicate`` (all graphs when None)."""
    level = [Graph(0, [])]
    for _ in range(n):
        seen: dict[str, None] = {}
        for G in level:
            for H in extend(G):
                if predicate is not None and not predicate(H):
                    continue
                seen.setdefault(canonical_graph6(H), None)
        level = [parse_graph6(s) for s in sorted(seen)]
    return level


def hereditary_graphs(n: int, predicate: Predicate | None = None) -> Iterator[Graph]:
    """Every class on ``n`` vertices satisfying ``predicate``, possibly repeated.

    Deduplicates levels up to n - 1 and streams the raw extensions at level n,
    which skips the canonical labeling of the largest level. Use for checks of
    isomorphism-invariant properties where repeats are harmless.
    """
    if n == 0:
        yield Graph(0, [])
        return
    for G in iso_classes(n - 1, predicate):
        for H in extend(G):
            if predicate is None or predicate(H):
                yield H


# number of unlabeled graphs on n vertices (OEIS A000088)
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)
