"""Canonical graph6 strings for desk-scale graphs (n <= ~12).

Degree refinement produces an ordered equitable partition; the first
non-singleton cell is individualized vertex by vertex and the search recurses.
The canonical form is the least graph6 string over all leaves. Branching
visits one vertex per twin class, since swapping twins is an automorphism.
"""

from __future__ import annotations

from .formats import parse_graph6, write_graph6
from .graph import Graph, iter_bits


def _refine(rows, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sig = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                for key in keys:
                    new_cells.append([v for v in c if sig[v] == key])
            else:
                new_cells.append(c)
        cells = new_cells
        if not changed:
            return cells


def _twin_reps(rows, cell: list[int]) -> list[int]:
    reps = []
    seen = []
    for v in cell:
        for u in seen:
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                break
        else:
            seen.append(v)
            reps.append(v)
    return reps


def _encode(rows, order: list[int]) -> str:
    pos = {v: i for i, v in enumerate(order)}
    new_rows = [0] * len(order)
    for v in order:
        r = 0
        for u in iter_bits(rows[v]):
            r |= 1 << pos[u]
        new_rows[pos[v]] = r
    return write_graph6(Graph(len(order), new_rows))


def canonical_graph6(G: Graph) -> str:
    rows = G.rows
    n = G.n
    if n == 0:
        return _encode(rows, [])
    best: list[str | None] = [None]

    def search(cells):
        cells = _refine(rows, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            s = _encode(rows, [c[0] for c in cells])
            if best[0] is None or s < best[0]:
                best[0] = s
            return
        cell = cells[idx]
        for v in _twin_reps(rows, cell):
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    degs = {}
    for v in range(n):
        degs.setdefault(rows[v].bit_count(), []).append(v)
    search([degs[d] for d in sorted(degs)])
    return best[0]


def canonical_graph(G: Graph) -> Graph:
    return parse_graph6(canonical_graph6(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_graph6(G) == canonical_graph6(H)
