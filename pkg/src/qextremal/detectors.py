"""Exact path and cycle detection by bitset backtracking.

Witnesses are lexicographically least: the search tries start vertices in
ascending order and always extends by the smallest admissible neighbor.
A cycle witness starts at its smallest vertex.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, component_masks, iter_bits, pair_index


@dataclass(frozen=True)
class SubgraphWitness:
    kind: str  # "path" or "cycle"
    vertices: tuple[int, ...]

    def verify(self, G: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < G.n for v in vs):
            return False
        if not all(G.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        if self.kind == "cycle":
            return len(vs) >= 3 and G.has_edge(vs[-1], vs[0])
        return True


def _reaches(rows, v: int, free: int, need: int) -> bool:
    """True if at least ``need`` vertices of ``free`` are reachable from v through ``free``."""
    seen = 0
    frontier = rows[v] & free
    count = 0
    while frontier:
        seen |= frontier
        count += frontier.bit_count()
        if count >= need:
            return True
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & free & ~seen
    return count >= need


def _dfs(rows, start: int, length: int, allowed: int, closing: int | None):
    path = [start]
    visited = 1 << start
    if length == 1:
        return path
    stack = [rows[start] & allowed & ~visited]
    while stack:
        cands = stack[-1]
        if not cands:
            stack.pop()
            visited ^= 1 << path.pop()
            continue
        low = cands & -cands
        stack[-1] = cands ^ low
        v = low.bit_length() - 1
        need = length - len(path) - 1
        if need == 0:
            if closing is None or (closing >> v) & 1:
                return path + [v]
            continue
        free = allowed & ~visited & ~low
        if closing is not None and not (closing & free):
            continue
        if not _reaches(rows, v, free, need):
            continue
        path.append(v)
        visited |= low
        stack.append(rows[v] & free)
    return None


def has_path(G: Graph, length: int) -> SubgraphWitness | None:
    """A path on ``length`` distinct vertices, or None. Exact."""
    if length < 1:
        raise ValueError("path order must be >= 1")
    if length > G.n:
        return None
    rows = G.rows
    full = (1 << G.n) - 1
    big = 0
    for comp in component_masks(G):
        if comp.bit_count() >= length:
            big |= comp
    for s in iter_bits(big):
        found = _dfs(rows, s, length, full, None)
        if found is not None:
            return SubgraphWitness("path", tuple(found))
    return None


def has_cycle(G: Graph, length: int) -> SubgraphWitness | None:
    """A cycle on exactly ``length`` vertices, or None. Exact."""
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    if length > G.n or G.m < length:
        return None
    rows = G.rows
    full = (1 << G.n) - 1
    for s in range(G.n - length + 1):
        allowed = full & ~((1 << s) - 1)
        if rows[s].bit_count() < 2:
            continue
        found = _dfs(rows, s, length, allowed, rows[s])
        if found is not None:
            return SubgraphWitness("cycle", tuple(found))
    return None


def _distances_to(rows, target: int, n: int) -> list[int]:
    dist = [n + 1] * n
    dist[target] = 0
    frontier, seen, d = 1 << target, 1 << target, 0
    while frontier:
        d += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        nxt &= ~seen
        for u in iter_bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def has_uv_path(G: Graph, u: int, v: int, length: int) -> SubgraphWitness | None:
    """A path on ``length`` vertices from u to v, or None. Exact.

    G + uv contains a C_length through uv iff this returns a witness.
    """
    if u == v or length < 2 or length > G.n:
        return None
    rows = G.rows
    dist = _distances_to(rows, v, G.n)
    if dist[u] > length - 1:
        return None
    if length == 2:
        return SubgraphWitness("path", (u, v)) if G.has_edge(u, v) else None
    path = [u]
    visited = 1 << u
    inner = ((1 << G.n) - 1) & ~(1 << v)
    stack = [rows[u] & inner & ~visited]
    while stack:
        cands = stack[-1]
        if not cands:
            stack.pop()
            visited ^= 1 << path.pop()
            continue
        low = cands & -cands
        stack[-1] = cands ^ low
        w = low.bit_length() - 1
        steps_left = length - len(path) - 1  # edges still to walk from w to v
        if dist[w] > steps_left:
            continue
        if steps_left == 1:
            if (rows[w] >> v) & 1:
                return SubgraphWitness("path", tuple(path + [w, v]))
            continue
        path.append(w)
        visited |= low
        stack.append(rows[w] & inner & ~visited)
    return None


def circumference(G: Graph) -> int:
    """Length of a longest cycle; 0 for forests."""
    n = G.n
    if G.m <= n - len(component_masks(G)):
        return 0
    rows = G.rows
    full = (1 << n) - 1
    best = 0
    for s in range(n):
        if n - s <= best:
            break
        allowed = full & ~((1 << (s + 1)) - 1)
        closing = rows[s] & allowed
        if closing.bit_count() < 2:
            continue
        path = [s]
        visited = 1 << s
        stack = [rows[s] & allowed]
        while stack:
            cands = stack[-1]
            if not cands:
                stack.pop()
                visited ^= 1 << path.pop()
                continue
            low = cands & -cands
            stack[-1] = cands ^ low
            v = low.bit_length() - 1
            size = len(path) + 1
            if size >= 3 and (closing >> v) & 1 and size > best:
                best = size
                if best == n:
                    return best
            free = allowed & ~visited & ~low
            if not (closing & free):
                continue
            if not _reaches(rows, v, free, max(1, best - size + 1)):
                continue
            path.append(v)
            visited |= low
            stack.append(rows[v] & free)
    return best


def cycle_spectrum(G: Graph, max_length: int) -> set[int]:
    """All cycle lengths in ``3..max_length`` present in G."""
    if max_length > G.n:
        raise ValueError(f"max_length {max_length} exceeds order {G.n}")
    return {l for l in range(3, max_length + 1) if has_cycle(G, l) is not None}


def is_cycle_free(G: Graph, length: int) -> bool:
    return has_cycle(G, length) is None


def cycle_edge_masks(n: int, length: int) -> np.ndarray:
    """Edge masks (graph6 pair order) of every ``length``-cycle in K_n.

    A labeled graph with edge mask M contains a C_length iff some returned
    mask C satisfies ``M & C == C``.
    """
    out = []
    for subset in itertools.combinations(range(n), length):
        first, rest = subset[0], subset[1:]
        for perm in itertools.permutations(rest):
            if perm[0] > perm[-1]:
                continue
            cyc = (first,) + perm
            mask = 0
            for a, b in zip(cyc, cyc[1:] + (first,)):
                mask |= 1 << pair_index(a, b)
            out.append(mask)
    return np.array(out, dtype=np.uint64)


PROBABLY_ABSENT = "probably-absent"


@dataclass(frozen=True)
class ColorCodingResult:
    status: str  # "present" or PROBABLY_ABSENT
    witness: SubgraphWitness | None = None
    trials: int = 0


def has_path_color_coding(G: Graph, length: int, seed: int, trials: int | None = None,
                          failure: float = 1e-6) -> ColorCodingResult:
    """Randomized path search (Alon-Yuster-Zwick color coding).

    A returned witness is always valid; "absent" is only ever reported as
    PROBABLY_ABSENT, never as an exact answer.
    """
    if length < 1:
        raise ValueError("path order must be >= 1")
    if length > G.n:
        return ColorCodingResult(PROBABLY_ABSENT, None, 0)
    if trials is None:
        trials = max(1, math.ceil(math.e ** length * math.log(1 / failure)))
    rng = np.random.default_rng(seed)
    rows = G.rows
    full_set = (1 << length) - 1
    for trial in range(1, trials + 1):
        colors = rng.integers(0, length, size=G.n)
        classes = [0] * length
        for v, c in enumerate(colors):
            classes[c] |= 1 << v
        table = {1 << c: classes[c] for c in range(length)}
        for size in range(2, length + 1):
            for combo in itertools.combinations(range(length), size):
                S = sum(1 << c for c in combo)
                ends = 0
                for c in combo:
                    prev = table.get(S ^ (1 << c), 0)
                    if not prev:
                        continue
                    for v in iter_bits(classes[c]):
                        if rows[v] & prev:
                            ends |= 1 << v
                if ends:
                    table[S] = ends
        if table.get(full_set):
            path = []
            S = full_set
            cur = None
            while S:
                ends = table[S]
                if cur is not None:
                    ends &= rows[cur]
                v = (ends & -ends).bit_length() - 1
                path.append(v)
                S ^= 1 << int(colors[v])
                cur = v
            return ColorCodingResult("present", SubgraphWitness("path", tuple(path)), trial)
    return ColorCodingResult(PROBABLY_ABSENT, None, trials)
