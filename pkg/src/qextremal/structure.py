"""Min-degree peeling, the P_{2k+2} / S_{n,k} / L_{t,k} trichotomy, and the
dominating-vertex partition diagnostic."""

from __future__ import annotations

from dataclasses import dataclass, field

from .detectors import SubgraphWitness, has_path
from .graph import (Graph, GraphError, component_masks, delete_vertex, edges_between,
                    edges_within, is_connected, iter_bits)


class PreconditionError(ValueError):
    """A classification hypothesis does not hold for the given input."""


class UnclassifiedGraph(RuntimeError):
    """A structural claim failed on a concrete graph; carries the graph."""

    def __init__(self, message: str, graph: Graph):
        super().__init__(message)
        self.graph = graph


@dataclass
class PeelTrace:
    threshold: int
    removed: list[tuple[int, int]]
    survivor: list[int]

    @property
    def steps(self) -> int:
        return len(self.removed)

    def to_dict(self) -> dict:
        return {"threshold": self.threshold, "steps": self.steps,
                "removed": [list(p) for p in self.removed], "survivor": self.survivor}


def peel(G: Graph, threshold: int) -> PeelTrace:
    """Delete a minimum-degree vertex (lowest id on ties) while min degree < threshold."""
    rows = G.rows
    alive = (1 << G.n) - 1
    deg = [r.bit_count() for r in rows]
    removed = []
    while alive:
        v = min(iter_bits(alive), key=lambda u: (deg[u], u))
        if deg[v] >= threshold:
            break
        removed.append((v, deg[v]))
        alive &= ~(1 << v)
        for u in iter_bits(rows[v] & alive):
            deg[u] -= 1
    return PeelTrace(threshold, removed, list(iter_bits(alive)))


def _cover_search(rows, edges_left: int, budget: int, chosen: list[int]) -> list[int] | None:
    if not edges_left:
        return list(chosen)
    if budget == 0:
        return None
    # lowest uncovered edge (u, v), u < v
    u = next(i for i, r in enumerate(rows) if r)
    v = (rows[u] & -rows[u]).bit_length() - 1
    maxdeg = max(r.bit_count() for r in rows)
    if edges_left > budget * maxdeg:
        return None
    for pick in (u, v):
        nbrs = rows[pick]
        new_rows = list(rows)
        new_rows[pick] = 0
        for w in iter_bits(nbrs):
            new_rows[w] &= ~(1 << pick)
        chosen.append(pick)
        found = _cover_search(new_rows, edges_left - nbrs.bit_count(), budget - 1, chosen)
        chosen.pop()
        if found is not None:
            return found
    return None


def vertex_cover_le(G: Graph, k: int) -> list[int] | None:
    """The lexicographically least minimum vertex cover if its size is <= k, else None.

    Bounded search tree over the lowest uncovered edge, run at budgets
    0, 1, ..., k so the first hit has minimum size. Trying the lower
    endpoint first makes that hit the lexicographically least one.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    for budget in range(k + 1):
        found = _cover_search(list(G.rows), G.m, budget, [])
        if found is not None:
            return sorted(found)
    return None


def is_cover(G: Graph, cover) -> bool:
    chosen = set(cover)
    return all(u in chosen or v in chosen for u, v in G.edges())


def match_ltk(G: Graph, k: int) -> int | None:
    """t if G is isomorphic to L_{t,k} = K_1 joined to t disjoint K_k, else None."""
    n = G.n
    if k < 1 or n < 1 or (n - 1) % k:
        return None
    t = (n - 1) // k
    hubs = [v for v in range(n) if G.degree(v) == n - 1]
    if t >= 2 and len(hubs) != 1:
        return None
    if not hubs:
        return None
    H = delete_vertex(G, hubs[0])
    comps = component_masks(H)
    if len(comps) != t:
        return None
    for c in comps:
        if c.bit_count() != k or any((H.rows[v] & c).bit_count() != k - 1 for v in iter_bits(c)):
            return None
    return t


@dataclass
class StructureClass:
    tag: str  # "SubgraphOfSnk", "IsLtk", "HasLongPath"
    cover: list[int] | None = None
    t: int | None = None
    witness: SubgraphWitness | None = None

    def to_dict(self) -> dict:
        d = {"tag": self.tag}
        if self.cover is not None:
            d["cover"] = self.cover
        if self.t is not None:
            d["t"] = self.t
        if self.witness is not None:
            d["witness"] = list(self.witness.vertices)
        return d


def check_classify_preconditions(G: Graph, k: int) -> None:
    if k < 1:
        raise PreconditionError("k >= 1 required")
    if G.n < 2 * k + 1:
        raise PreconditionError(f"order n={G.n} < 2k+1={2 * k + 1}")
    if not is_connected(G):
        raise PreconditionError("graph is not connected")
    if min(G.degrees()) < k:
        raise PreconditionError(f"minimum degree {min(G.degrees())} < k={k}")


def classify(G: Graph, k: int) -> StructureClass:
    """Sort a connected graph with min degree >= k and n >= 2k+1 into one of
    HasLongPath (P_{2k+2} witness), IsLtk, or SubgraphOfSnk (k-cover)."""
    check_classify_preconditions(G, k)
    w = has_path(G, 2 * k + 2)
    if w is not None:
        return StructureClass("HasLongPath", witness=w)
    t = match_ltk(G, k)
    if t is not None:
        return StructureClass("IsLtk", t=t)
    cover = vertex_cover_le(G, k)
    if cover is not None:
        return StructureClass("SubgraphOfSnk", cover=cover)
    raise UnclassifiedGraph(f"no P_{2 * k + 2}, not L_(t,{k}), and no {k}-vertex cover", G)


@dataclass
class DominationDiagnostic:
    w: int
    k: int
    A: list[int]
    B: list[int]
    A_prime: list[int]
    e_A: int
    e_AB: int
    flags: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"w": self.w, "k": self.k, "A": self.A, "B": self.B, "A_prime": self.A_prime,
                "e_A": self.e_A, "e_AB": self.e_AB, "flags": self.flags}


def domination_diagnostic(G: Graph, w: int, k: int) -> DominationDiagnostic:
    """Split V into {w}, A = N(w), B = the rest, and evaluate the counting
    claims used to force a dominating vertex."""
    if not 0 <= w < G.n:
        raise GraphError(f"vertex {w} outside 0..{G.n - 1}")
    amask = G.rows[w]
    bmask = ((1 << G.n) - 1) & ~amask & ~(1 << w)
    A, B = list(iter_bits(amask)), list(iter_bits(bmask))
    A_prime = [a for a in A if G.rows[a] & bmask == bmask]
    some_b_dominates_A = any(G.rows[b] & amask == amask for b in B) if A else bool(B)
    flags = {
        "some_b_dominates_A": some_b_dominates_A,
        "b_lt_2k2": len(B) < 2 * k * k,
        "a_prime_gt_a_minus_2k2": len(A_prime) > len(A) - 2 * k * k,
        "dominating": not B,
    }
    return DominationDiagnostic(w, k, A, B, A_prime, edges_within(G, A),
                                edges_between(G, A, B), flags)
