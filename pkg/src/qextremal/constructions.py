"""Named graph families with fixed canonical labelings.

* ``snk(n, k)``: K_k joined to an independent set of n - k vertices.
  Vertices ``0..k-1`` are the clique (the centers).
* ``snk_plus(n, k)``: ``snk(n, k)`` plus the edge ``(k, k + 1)``.
* ``ltk(t, k)``: t copies of K_k sharing a hub; vertex 0 is the hub and
  clique ``i`` occupies ``1 + i*k .. (i + 1)*k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, build_from_edges, disjoint_union, empty_graph, join

FAMILIES = ("complete", "empty", "path", "cycle", "snk", "snk_plus", "ltk")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    k: int | None = None
    t: int | None = None

    def __post_init__(self):
        f = self.family
        if f not in FAMILIES:
            raise GraphError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
        need = {"ltk": ("t", "k"), "snk": ("n", "k"), "snk_plus": ("n", "k")}.get(f, ("n",))
        for name in need:
            if getattr(self, name) is None:
                raise GraphError(f"family {f} requires parameter {name}")
        n, k, t = self.n, self.k, self.t
        if f in ("complete", "empty") and n < 0:
            raise GraphError("n must be >= 0")
        if f == "path" and n < 1:
            raise GraphError("path needs n >= 1")
        if f == "cycle" and n < 3:
            raise GraphError("cycle needs n >= 3")
        if f == "snk" and not 0 <= k <= n:
            raise GraphError(f"snk needs 0 <= k <= n, got n={n}, k={k}")
        if f == "snk_plus" and not (0 <= k and k + 2 <= n):
            raise GraphError(f"snk_plus needs an independent part of size >= 2, got n={n}, k={k}")
        if f == "ltk" and (t < 1 or k < 1):
            raise GraphError(f"ltk needs t >= 1 and k >= 1, got t={t}, k={k}")


def complete_graph(n: int) -> Graph:
    return empty_graph(n).complement()


def path_graph(n: int) -> Graph:
    return build_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def snk(n: int, k: int) -> Graph:
    FamilySpec("snk", n=n, k=k)
    return join(complete_graph(k), empty_graph(n - k))


def snk_plus(n: int, k: int) -> Graph:
    FamilySpec("snk_plus", n=n, k=k)
    return snk(n, k).add_edge(k, k + 1)


def ltk(t: int, k: int) -> Graph:
    FamilySpec("ltk", t=t, k=k)
    cliques = empty_graph(0)
    for _ in range(t):
        cliques = disjoint_union(cliques, complete_graph(k))
    return join(complete_graph(1), cliques)


def construct(spec: FamilySpec) -> Graph:
    f = spec.family
    if f == "complete":
        return complete_graph(spec.n)
    if f == "empty":
        return empty_graph(spec.n)
    if f == "path":
        return path_graph(spec.n)
    if f == "cycle":
        return cycle_graph(spec.n)
    if f == "snk":
        return snk(spec.n, spec.k)
    if f == "snk_plus":
        return snk_plus(spec.n, spec.k)
    return ltk(spec.t, spec.k)


def center_vertices(spec: FamilySpec) -> list[int]:
    """The degree n - 1 clique vertices of S_{n,k} under the canonical labeling."""
    if spec.family != "snk":
        raise GraphError(f"center vertices are defined for snk only, not {spec.family}")
    return list(range(spec.k))
