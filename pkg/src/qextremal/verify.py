"""Numeric checks of the C_{2k+1}-free Q-index extremal problem.

Exhaustive scans over labeled graphs, scans of external graph6 catalogues,
a seeded hill-climbing falsification search, and constructed-instance
harnesses for the dominating-vertex reduction steps.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable

import numpy as np

from .canon import canonical_graph6
from .constructions import complete_graph, snk
from .detectors import cycle_edge_masks, cycle_spectrum, has_cycle, has_uv_path
from .formats import ParseError, parse_graph6, write_graph6
from .graph import Graph, GraphError, disjoint_union, empty_graph, join, pair_list
from .spectra import q_dense, q_index, q_matrix, snk_q_closed_form

TIE_TOL = 1e-8
SLACK = 1e-8
MAX_EXHAUSTIVE_N = 7
SHARD_BITS = 16


@dataclass
class VerificationReport:
    n: int
    k: int
    total_graphs: int
    free_graphs: int
    max_q: float
    maximizer: str
    maximizer_is_snk: bool
    ties: list[str]
    mode: str
    seed: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        return cls(**d)


def _snk_canonical(n: int, k: int) -> str | None:
    if not 0 <= k <= n:
        return None
    return canonical_graph6(snk(n, k))


def _finish(n, k, total, free, max_q, graphs: Iterable[Graph], mode, seed=None):
    ties = sorted({canonical_graph6(G) for G in graphs})
    target = _snk_canonical(n, k)
    return VerificationReport(n=n, k=k, total_graphs=total, free_graphs=free, max_q=max_q,
                              maximizer=ties[0] if ties else "",
                              maximizer_is_snk=ties == [target], ties=ties, mode=mode,
                              seed=seed)


# ---------------------------------------------------------------- exhaustive


def _batch_q(n: int, masks: np.ndarray) -> np.ndarray:
    pairs = pair_list(n)
    A = np.zeros((len(masks), n, n))
    for idx, (i, j) in enumerate(pairs):
        bit = ((masks >> np.uint64(idx)) & np.uint64(1)).astype(float)
        A[:, i, j] = bit
        A[:, j, i] = bit
    deg = A.sum(axis=2)
    Q = A.copy()
    Q[:, np.arange(n), np.arange(n)] = deg
    return np.linalg.eigvalsh(Q)[:, -1]


def _scan_shard(args) -> tuple[int, int, float, list[tuple[int, float]]]:
    n, k, lo, hi = args
    cycles = cycle_edge_masks(n, 2 * k + 1) if 2 * k + 1 <= n else np.zeros(0, np.uint64)
    free_count = 0
    best = -math.inf
    cands: list[tuple[int, float]] = []
    step = 1 << SHARD_BITS
    for start in range(lo, hi, step):
        masks = np.arange(start, min(hi, start + step), dtype=np.uint64)
        bad = np.zeros(len(masks), dtype=bool)
        for c in cycles:
            bad |= (masks & c) == c
        free = masks[~bad]
        free_count += len(free)
        if not len(free):
            continue
        qs = _batch_q(n, free)
        top = float(qs.max())
        if top > best:
            best = top
            cands = [(m, q) for m, q in cands if q >= best - TIE_TOL]
        sel = np.nonzero(qs >= best - TIE_TOL)[0]
        cands.extend((int(free[i]), float(qs[i])) for i in sel)
    return hi - lo, free_count, best, cands


def verify_exhaustive(n: int, k: int, jobs: int = 1) -> VerificationReport:
    """Scan every labeled graph of order n, keep the C_{2k+1}-free ones, and
    report the largest Q-index with all maximizers up to isomorphism.

    Output is identical for any ``jobs``: shards are contiguous mask ranges
    and the reduction is an exact max followed by a tie filter.
    """
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise GraphError(f"exhaustive labeled mode supports 1 <= n <= {MAX_EXHAUSTIVE_N}; "
                         "use verify_stream with an external catalogue for larger n")
    if k < 1:
        raise GraphError("k must be >= 1")
    total = 1 << (n * (n - 1) // 2)
    nshards = max(1, min(64, total >> SHARD_BITS))
    bounds = [total * i // nshards for i in range(nshards + 1)]
    tasks = [(n, k, bounds[i], bounds[i + 1]) for i in range(nshards)]
    if jobs > 1 and nshards > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_shard, tasks))
    else:
        parts = [_scan_shard(t) for t in tasks]
    max_q = max(p[2] for p in parts)
    free = sum(p[1] for p in parts)
    winners = [Graph.from_edge_mask(n, m) for p in parts for m, q in p[3] if q >= max_q - TIE_TOL]
    return _finish(n, k, total, free, max_q, winners, "exhaustive-labeled")


# ---------------------------------------------------------------- stream


def verify_stream(lines: Iterable[str], k: int, tol: float = 1e-10) -> VerificationReport:
    """Same report over exactly the graphs in a graph6 stream (one order)."""
    n = None
    total = free = 0
    best = -math.inf
    cands: list[tuple[Graph, float]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line == ">>graph6<<":
            continue
        try:
            G = parse_graph6(line)
        except ParseError as exc:
            raise ParseError(str(exc), exc.offset, lineno) from None
        if n is None:
            n = G.n
        elif G.n != n:
            raise ParseError(f"mixed orders: expected {n}, got {G.n}", line=lineno)
        total += 1
        if 2 * k + 1 <= n and has_cycle(G, 2 * k + 1) is not None:
            continue
        free += 1
        q = q_index(G, tol).q if G.n else 0.0
        if q > best:
            best = q
            cands = [(H, qh) for H, qh in cands if qh >= best - TIE_TOL]
        if q >= best - TIE_TOL:
            cands.append((G, q))
    if n is None:
        raise ParseError("empty graph6 stream")
    return _finish(n, k, total, free, best, [G for G, _ in cands], "stream")


# ---------------------------------------------------------------- local search

MOVES = ("add", "remove", "swap")


@dataclass
class SearchConfig:
    n: int
    k: int
    iterations: int
    restarts: int = 1
    seed: int = 0
    moves: tuple[str, ...] = MOVES
    start: str = "mixed"  # "snk", "random", or "mixed" (restart 0 from S_{n,k})
    keep_history: bool = False

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.iterations < 0 or self.restarts < 1:
            raise ValueError("need n >= 1, k >= 1, iterations >= 0, restarts >= 1")
        if not self.moves or any(m not in MOVES for m in self.moves):
            raise ValueError(f"moves must be a nonempty subset of {MOVES}")
        if self.start not in ("snk", "random", "mixed"):
            raise ValueError("start must be snk, random or mixed")
        if self.start != "random" and self.k > self.n:
            raise ValueError("S_{n,k} start needs k <= n")


@dataclass
class RestartResult:
    start: str
    trace: list[float]  # q of the current graph after each iteration
    best_q: float
    best: str  # graph6 of the best graph (labeled as found)
    proposals: int
    free_proposals: int
    history: list[str] = field(default_factory=list)


@dataclass
class SearchResult:
    report: VerificationReport
    restarts: list[RestartResult]
    findings: list[str]
    snk_q: float | None


def _q_fast(G: Graph) -> float:
    if G.m == 0:
        return 0.0
    return q_dense(G) if G.n <= 64 else q_index(G).q


def _random_bipartite(n: int, rng: np.random.Generator) -> Graph:
    side = rng.integers(0, 2, size=n)
    edges = [(i, j) for j in range(n) for i in range(j)
             if side[i] != side[j] and rng.random() < 0.5]
    G = empty_graph(n)
    for u, v in edges:
        G = G.add_edge(u, v)
    return G


def _random_pair(G: Graph, rng, want_edge: bool):
    n = G.n
    total = n * (n - 1) // 2
    count = G.m if want_edge else total - G.m
    if count == 0:
        return None
    target = int(rng.integers(0, count))
    for i in range(n):
        row = G.rows[i] >> (i + 1)
        span = n - i - 1
        here = row.bit_count() if want_edge else span - row.bit_count()
        if target < here:
            for off in range(span):
                if bool((row >> off) & 1) == want_edge:
                    if target == 0:
                        return i, i + 1 + off
                    target -= 1
        target -= here
    return None


def _run_restart(args) -> RestartResult:
    cfg, r = args
    rng = np.random.default_rng([cfg.seed, r])
    use_snk = cfg.start == "snk" or (cfg.start == "mixed" and r == 0)
    G = snk(cfg.n, cfg.k) if use_snk else _random_bipartite(cfg.n, rng)
    ell = 2 * cfg.k + 1
    q = _q_fast(G)
    best_q, best = q, G
    trace = [q]
    history = [write_graph6(G)] if cfg.keep_history else []
    proposals = free = 0
    for _ in range(cfg.iterations):
        move = cfg.moves[int(rng.integers(0, len(cfg.moves)))]
        H = G
        added = None
        if move in ("remove", "swap"):
            e = _random_pair(G, rng, True)
            if e is None:
                trace.append(q)
                continue
            H = H.remove_edge(*e)
        if move in ("add", "swap"):
            e = _random_pair(H, rng, False)
            if e is None:
                trace.append(q)
                continue
            added = e
        proposals += 1
        # a C_ell appears only through the new edge uv: a u-v path on ell vertices
        if added is not None:
            if has_uv_path(H, added[0], added[1], ell) is not None:
                trace.append(q)
                continue
            H = H.add_edge(*added)
        free += 1
        q_new = _q_fast(H)
        if q_new >= q:
            G, q = H, q_new
            if cfg.keep_history:
                history.append(write_graph6(G))
            if q > best_q:
                best_q, best = q, G
        trace.append(q)
    return RestartResult("snk" if use_snk else "random", trace, best_q, write_graph6(best),
                         proposals, free, history)


def local_search(cfg: SearchConfig, jobs: int = 1) -> SearchResult:
    """Seeded hill climbing over C_{2k+1}-free graphs of order n.

    Moves that create a C_{2k+1} are rejected by an exact detector; a move is
    accepted when it does not decrease q. Restart r draws from the seed
    sequence (seed, r), so results do not depend on ``jobs``.
    """
    tasks = [(cfg, r) for r in range(cfg.restarts)]
    if jobs > 1 and cfg.restarts > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_restart, tasks))
    else:
        results = [_run_restart(t) for t in tasks]
    max_q = max(res.best_q for res in results)
    winners = [parse_graph6(res.best) for res in results if res.best_q >= max_q - TIE_TOL]
    report = _finish(cfg.n, cfg.k, sum(res.proposals for res in results),
                     sum(res.free_proposals for res in results), max_q, winners, "search",
                     cfg.seed)
    snk_q = snk_q_closed_form(cfg.n, cfg.k) if cfg.k <= cfg.n else None
    findings = []
    if snk_q is not None:
        findings = sorted({res.best for res in results if res.best_q > snk_q + SLACK})
    return SearchResult(report, results, findings, snk_q)


def snk_neighborhood(n: int, k: int) -> list[tuple[str, tuple, float]]:
    """Every single add / remove / swap neighbor of S_{n,k} that stays
    C_{2k+1}-free, with its Q-index."""
    G = snk(n, k)
    ell = 2 * k + 1
    edges = G.edges()
    non_edges = [p for p in pair_list(n) if not G.has_edge(*p)]
    out = []
    for e in edges:
        H = G.remove_edge(*e)
        out.append(("remove", e, _q_fast(H)))
        for f in non_edges:
            if has_uv_path(H, f[0], f[1], ell) is None:
                out.append(("swap", (e, f), _q_fast(H.add_edge(*f))))
    for f in non_edges:
        if has_uv_path(G, f[0], f[1], ell) is None:
            out.append(("add", f, _q_fast(G.add_edge(*f))))
    return out


# ---------------------------------------------------------------- harnesses


def clique_tail_graph(k: int, n: int, t: int) -> Graph:
    """K_1 joined to S_{n-1-t,k-1} plus a disjoint K_t; vertex 0 dominates."""
    return join(complete_graph(1), disjoint_union(snk(n - 1 - t, k - 1), complete_graph(t)))


def clique_tail_harness(k: int, n: int, t: int, tol: float = 1e-10) -> dict:
    if k < 3 or n < 110 * k * k or not 1 <= t <= k * k + k - 3:
        raise GraphError("need k >= 3, n >= 110k^2 and 1 <= t <= k^2+k-3")
    G = clique_tail_graph(k, n, t)
    res = q_index(G, tol)
    q_s = snk_q_closed_form(n, k)
    x = res.vector
    xw = float(x[0])
    xt = float(x[n - 1])  # any K_t vertex
    xw_bound = (n - 1) / ((res.q - n + 1) ** 2 + n - 1)
    return {
        "harness": "clique-tail", "k": k, "n": n, "t": t,
        "q": res.q, "q_snk": q_s, "margin": q_s - res.q, "holds": res.q + SLACK < q_s,
        "iterations": res.iterations, "residual": res.residual,
        "xw_sq": xw * xw, "xw_sq_bound": xw_bound, "xw_ok": xw * xw <= xw_bound + SLACK,
        "x_clique": xt, "x_clique_identity": xw / (res.q - 2 * t + 1),
    }


def star_union_graph(k: int, parts: list[int]) -> Graph:
    body = empty_graph(0)
    for p in parts:
        body = disjoint_union(body, snk(p, k - 1))
    return join(complete_graph(1), body)


def _merge_gain(k: int, parts: list[int], G: Graph, x: np.ndarray) -> float:
    """x^T Q(G') x - x^T Q(G) x for merging the first two parts into one S_{n1+n2,k-1}."""
    n1, n2 = parts[0], parts[1]
    u0, v0 = 1, 1 + n1
    if x[u0] < x[v0]:
        u0, v0 = v0, u0
        n1, n2 = n2, n1
    us = range(u0, u0 + k - 1)
    vs = range(v0, v0 + k - 1)
    W = range(v0 + k - 1, v0 + n2)
    H = G
    for v in vs:
        for u in W:
            H = H.remove_edge(v, u)
        for v2 in vs:
            if v < v2:
                H = H.remove_edge(v, v2)
    for u in us:
        for w in list(W) + list(vs):
            H = H.add_edge(u, w)
    return float(x @ q_matrix(H) @ x - x @ q_matrix(G) @ x)


def star_union_harness(k: int, parts: list[int], tol: float = 1e-10) -> dict:
    if k < 3 or len(parts) < 2 or any(p < k for p in parts):
        raise GraphError("need k >= 3, at least two parts, each part size >= k")
    G = star_union_graph(k, parts)
    res = q_index(G, tol)
    n = G.n
    q_s = snk_q_closed_form(n, k)
    out = {"harness": "star-union", "k": k, "parts": list(parts), "n": n, "q": res.q,
           "q_snk": q_s, "margin": q_s - res.q, "holds": res.q + SLACK < q_s}
    if len(parts) == 2:
        out["merge_gain"] = _merge_gain(k, parts, G, res.vector)
    return out


def cycle_range_harness(G: Graph, k: int, tol: float = 1e-10) -> dict:
    """If q(G) >= n + 2k - 2, every cycle length 3..2k+2 must occur."""
    n = G.n
    q = q_index(G, tol).q
    threshold = n + 2 * k - 2
    asserted = n > 6 * k * k
    out = {"harness": "cycle-range", "n": n, "k": k, "q": q, "threshold": threshold,
           "asserted": asserted}
    if q < threshold - SLACK:
        out.update(status="vacuous", missing=[])
        return out
    want = set(range(3, 2 * k + 3))
    have = cycle_spectrum(G, min(2 * k + 2, n))
    missing = sorted(want - have)
    if not missing:
        out.update(status="pass", missing=[])
    else:
        out.update(status="FINDING" if asserted else "report-only", missing=missing)
    return out
