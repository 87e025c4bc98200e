"""Simple undirected graphs stored as packed bitset rows.

Row ``u`` is a Python int whose bit ``v`` is set iff ``uv`` is an edge.
Graphs are immutable; every mutating helper returns a new value.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 4096


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, range errors)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_index(i: int, j: int) -> int:
    """Position of the pair {i, j} in graph6 (column-major upper triangle) order."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_list(n: int) -> list[tuple[int, int]]:
    """All unordered pairs of ``range(n)`` in graph6 order."""
    return [(i, j) for j in range(n) for i in range(j)]


class Graph:
    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, n: int, rows: Sequence[int], edge_count: int | None = None):
        # Unchecked fast path; use build_from_edges for validated input.
        self._n = n
        self._rows = tuple(rows)
        if edge_count is None:
            edge_count = sum(r.bit_count() for r in self._rows) // 2
        self._m = edge_count

    @property
    def order(self) -> int:
        return self._n

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self._rows[u]))

    def degree(self, u: int) -> int:
        return self._rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def complement(self) -> Graph:
        full = (1 << self._n) - 1
        rows = [(full ^ r) & ~(1 << u) for u, r in enumerate(self._rows)]
        return Graph(self._n, rows, self._n * (self._n - 1) // 2 - self._m)

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self._n, u, v)
        if self.has_edge(u, v):
            return self
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self._n, rows, self._m + 1)

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self._n, u, v)
        if not self.has_edge(u, v):
            return self
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self._n, rows, self._m - 1)

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        A = np.zeros((self._n, self._n), dtype=dtype)
        for u, v in self.edges():
            A[u, v] = A[v, u] = 1
        return A

    def edge_mask(self) -> int:
        """Edge set as a bitmask over :func:`pair_index` positions."""
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(u, v)
        return mask

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> Graph:
        rows = [0] * n
        for idx, (i, j) in enumerate(pair_list(n)):
            if (mask >> idx) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls(n, rows)


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphError(f"loop at vertex {u} is not allowed")


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise GraphError(f"vertex {v} outside 0..{n - 1}")


def build_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs collapse to one edge."""
    if n < 0 or n > MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    return build_from_edges(n, [])


def degree_stats(G: Graph) -> tuple[list[int], int | None, int | None]:
    """Per-vertex degrees with (min, max); both are None on the null graph."""
    degs = G.degrees()
    if not degs:
        return degs, None, None
    return degs, min(degs), max(degs)


def vertex_mask(S: Iterable[int], n: int) -> int:
    mask = 0
    for v in S:
        _check_vertex(n, v)
        mask |= 1 << v
    return mask


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced by ``S``, relabeled in ascending order of original id."""
    keep = sorted(set(S))
    for v in keep:
        _check_vertex(G.n, v)
    pos = {v: i for i, v in enumerate(keep)}
    keep_mask = vertex_mask(keep, G.n)
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(G.rows[v] & keep_mask):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(keep), rows)


def edges_within(G: Graph, S: Iterable[int]) -> int:
    """e(S): edges with both ends in S."""
    mask = vertex_mask(S, G.n)
    return sum((G.rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2


def edges_between(G: Graph, X: Iterable[int], Y: Iterable[int]) -> int:
    """e(X, Y) for disjoint X and Y."""
    ymask = vertex_mask(Y, G.n)
    return sum((G.rows[v] & ymask).bit_count() for v in set(X))


def component_masks(G: Graph, within: int | None = None) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest member."""
    remaining = (1 << G.n) - 1 if within is None else within
    out = []
    rows = G.rows
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        remaining &= ~comp
    return out


def components(G: Graph) -> list[list[int]]:
    return [list(iter_bits(c)) for c in component_masks(G)]


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(component_masks(G)) == 1


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    shift = G1.n
    rows = list(G1.rows) + [r << shift for r in G2.rows]
    return Graph(G1.n + G2.n, rows, G1.m + G2.m)


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n1, n2 = G1.n, G2.n
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    rows = [r | high for r in G1.rows] + [(r << n1) | low for r in G2.rows]
    return Graph(n1 + n2, rows, G1.m + G2.m + n1 * n2)


def delete_vertex(G: Graph, w: int) -> Graph:
    _check_vertex(G.n, w)
    return induced_subgraph(G, [v for v in range(G.n) if v != w])
