"""Closed-form Q-index and extremal edge bounds, and a per-graph audit report."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .graph import Graph, GraphError, degree_stats, iter_bits
from .spectra import DEFAULT_TOL, q_index, snk_q_closed_form

SLACK = 1e-8

PASS, FAIL, NA = "pass", "fail", "n/a"


def merris_bound(G: Graph) -> float | None:
    """max over non-isolated u of d(u) + (sum of neighbor degrees) / d(u).

    Isolated vertices are skipped; returns None when every vertex is isolated.
    """
    degs = G.degrees()
    best = None
    for u, row in enumerate(G.rows):
        d = degs[u]
        if d == 0:
            continue
        val = d + sum(degs[v] for v in iter_bits(row)) / d
        if best is None or val > best:
            best = val
    return best


def das_bound(G: Graph) -> float:
    if G.n < 2:
        raise GraphError("das bound needs n >= 2")
    return 2 * G.m / (G.n - 1) + G.n - 2


def eg_path_max_edges(n: int, p: int) -> int:
    """Most edges in an n-vertex graph with no path on p vertices."""
    if p < 2:
        raise ValueError("p must be >= 2")
    return (p - 2) * n // 2


def eg_cycle_max_edges(n: int, c: int) -> int:
    """Most edges in an n-vertex graph whose longest cycle has length <= c."""
    if c < 2:
        raise ValueError("c must be >= 2")
    return c * (n - 1) // 2


def snk_lb(n: int, k: int) -> float:
    if n + 2 * k - 3 <= 0:
        raise ValueError("need n + 2k - 3 > 0")
    return n + 2 * k - 2 - 2 * k * (k - 1) / (n + 2 * k - 3)


def min_edges_required(n: int, k: int) -> int:
    """Edge count forced on any graph with q(G) >= q(S_{n,k}) for large n."""
    return k * n - k * k + 1


@dataclass
class BoundReport:
    n: int
    e: int
    k: int
    min_degree: int
    max_degree: int
    q: float
    merris: float | None
    merris_flag: str
    das: float
    snk_q: float | None
    snk_lb: float | None
    min_edges: int
    eg_path_limit: dict[int, int] = field(default_factory=dict)
    eg_cycle_c: int = 0
    eg_cycle_limit: int = 0
    relations: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> BoundReport:
        d = dict(d)
        d["eg_path_limit"] = {int(p): v for p, v in d["eg_path_limit"].items()}
        return cls(**d)


def derive_relations(r: BoundReport) -> dict[str, str]:
    """Pass/fail relations recomputed from the stored statistics alone."""
    rel = {}
    rel["q_le_merris"] = NA if r.merris is None else (PASS if r.q <= r.merris + SLACK else FAIL)
    rel["q_le_das"] = PASS if r.q <= r.das + SLACK else FAIL
    if r.snk_q is None or r.q < r.snk_q - SLACK:
        rel["min_edges_if_q_ge_snk"] = NA
    else:
        rel["min_edges_if_q_ge_snk"] = PASS if r.e >= r.min_edges else FAIL
    if r.snk_lb is None or r.k < 2 or r.n <= 5 * r.k * r.k:
        rel["snk_lb_chain"] = NA
    else:
        ok = r.n + 2 * r.k - 3 < r.snk_lb + SLACK and r.snk_lb < r.snk_q + SLACK
        rel["snk_lb_chain"] = PASS if ok else FAIL
    return rel


def check_bounds(G: Graph, k: int, tol: float = DEFAULT_TOL) -> BoundReport:
    if G.n < 2:
        raise GraphError("bounds report needs n >= 2")
    degs, dmin, dmax = degree_stats(G)
    merris = merris_bound(G)
    if merris is None:
        flag = "undefined:all-isolated"
    elif dmin == 0:
        flag = "isolated-skipped"
    else:
        flag = "ok"
    snk_q = snk_q_closed_form(G.n, k) if 1 <= k <= G.n else None
    lb = snk_lb(G.n, k) if G.n + 2 * k - 3 > 0 else None
    report = BoundReport(
        n=G.n, e=G.m, k=k, min_degree=dmin, max_degree=dmax,
        q=q_index(G, tol).q, merris=merris, merris_flag=flag, das=das_bound(G),
        snk_q=snk_q, snk_lb=lb, min_edges=min_edges_required(G.n, k),
        eg_path_limit={p: eg_path_max_edges(G.n, p) for p in range(2, 2 * k + 3)},
        eg_cycle_c=max(2, 2 * k), eg_cycle_limit=eg_cycle_max_edges(G.n, max(2, 2 * k)),
    )
    report.relations = derive_relations(report)
    return report
