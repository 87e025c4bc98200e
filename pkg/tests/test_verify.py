import pytest

from oracles import brute_canonical, edge_set, naive_scan
from qextremal.canon import canonical_graph6
from qextremal.constructions import complete_graph, cycle_graph, snk
from qextremal.detectors import has_cycle
from qextremal.formats import ParseError, parse_graph6, write_graph6
from qextremal.graph import GraphError, build_from_edges
from qextremal.spectra import q_dense, snk_q_closed_form
from qextremal.verify import (SLACK, SearchConfig, VerificationReport, clique_tail_graph,
                              clique_tail_harness, star_union_graph, star_union_harness, local_search,
                              snk_neighborhood, cycle_range_harness, verify_exhaustive,
                              verify_stream)


def _classes(report):
    out = set()
    for s in report.ties:
        G = parse_graph6(s)
        out.add(brute_canonical(G.n, sorted(edge_set(G))))
    return out


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 6) for k in (1, 2)])
def test_exhaustive_matches_naive_scan(n, k):
    rep = verify_exhaustive(n, k)
    total, free, max_q, classes = naive_scan(n, k)
    assert rep.total_graphs == total and rep.free_graphs == free
    assert rep.max_q == pytest.approx(max_q, abs=1e-9)
    assert _classes(rep) == classes
    assert rep.free_graphs <= rep.total_graphs


def test_exhaustive_known_cases():
    rep = verify_exhaustive(4, 2)
    assert rep.maximizer == "C~" and rep.max_q == pytest.approx(6.0)
    assert not rep.maximizer_is_snk
    rep = verify_exhaustive(5, 2)
    assert rep.max_q == pytest.approx(snk_q_closed_form(5, 2))
    assert len(rep.ties) == 2 and canonical_graph6(snk(5, 2)) in rep.ties
    assert not rep.maximizer_is_snk
    rep = verify_exhaustive(6, 2)
    assert rep.maximizer_is_snk and rep.ties == [canonical_graph6(snk(6, 2))]
    assert rep.max_q == pytest.approx(snk_q_closed_form(6, 2), abs=1e-9)


def test_exhaustive_jobs_deterministic():
    assert verify_exhaustive(6, 2, jobs=1) == verify_exhaustive(6, 2, jobs=3)


def test_exhaustive_rejects_large_order():
    with pytest.raises(GraphError):
        verify_exhaustive(8, 2)
    with pytest.raises(GraphError):
        verify_exhaustive(5, 0)


def test_stream_three_graphs():
    lines = [write_graph6(complete_graph(5)), write_graph6(snk(5, 2)), write_graph6(cycle_graph(5))]
    rep = verify_stream(lines, 2)
    # K_5 and C_5 both contain C_5
    assert rep.total_graphs == 3 and rep.free_graphs == 1
    assert rep.ties == [canonical_graph6(snk(5, 2))] and rep.maximizer_is_snk
    rep1 = verify_stream(lines, 1)
    assert rep1.free_graphs == 1 and rep1.ties == [canonical_graph6(cycle_graph(5))]


def test_stream_errors():
    with pytest.raises(ParseError) as info:
        verify_stream(["C~", "C~", "C"], 1)
    assert info.value.line == 3
    with pytest.raises(ParseError):
        verify_stream(["C~", "D??"], 1)
    with pytest.raises(ParseError):
        verify_stream(["", ">>graph6<<"], 1)


def test_report_roundtrip():
    rep = verify_exhaustive(5, 2)
    assert VerificationReport.from_dict(rep.to_dict()) == rep


# ---------------------------------------------------------------- local search

def test_search_zero_iterations_returns_start():
    res = local_search(SearchConfig(n=12, k=2, iterations=0, start="snk"))
    assert res.restarts[0].best_q == pytest.approx(snk_q_closed_form(12, 2))
    assert res.report.maximizer_is_snk and not res.findings


def test_search_deterministic_and_monotone():
    cfg = SearchConfig(n=10, k=2, iterations=400, restarts=3, seed=7, keep_history=True)
    a, b = local_search(cfg), local_search(cfg, jobs=2)
    assert a.report == b.report
    assert [r.trace for r in a.restarts] == [r.trace for r in b.restarts]
    for r in a.restarts:
        assert all(x <= y for x, y in zip(r.trace, r.trace[1:]))
        assert len(r.trace) == cfg.iterations + 1
        for g6 in r.history:
            assert has_cycle(parse_graph6(g6), 5) is None


def test_search_random_start_stays_free():
    res = local_search(SearchConfig(n=9, k=1, iterations=300, seed=3, start="random"))
    best = parse_graph6(res.restarts[0].best)
    assert has_cycle(best, 3) is None
    assert res.restarts[0].best_q == pytest.approx(q_dense(best))


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(n=5, k=1, iterations=-1)
    with pytest.raises(ValueError):
        SearchConfig(n=5, k=1, iterations=1, moves=("flip",))


def test_snk_neighborhood_is_local_max():
    nbrs = snk_neighborhood(20, 3)
    q_s = snk_q_closed_form(20, 3)
    assert nbrs and all(q <= q_s + 1e-8 for _, _, q in nbrs)
    # S_{n,k} is edge-maximal C_{2k+1}-free
    assert not any(kind == "add" for kind, _, _ in nbrs)


# ---------------------------------------------------------------- harnesses

def test_clique_tail_instance():
    rec = clique_tail_harness(3, 990, 5)
    assert rec["holds"] and rec["margin"] > 1
    assert rec["xw_ok"]
    assert rec["x_clique"] == pytest.approx(rec["x_clique_identity"], rel=1e-6)


@pytest.mark.parametrize("t", [1, 9])
def test_clique_tail_endpoints(t):
    assert clique_tail_harness(3, 990, t)["holds"]


def test_clique_tail_graph_shape():
    G = clique_tail_graph(3, 40, 4)
    assert G.n == 40 and G.degree(0) == 39
    assert G.m == 39 + snk(35, 2).m + 6


def test_clique_tail_domain():
    with pytest.raises(GraphError):
        clique_tail_harness(2, 990, 1)
    with pytest.raises(GraphError):
        clique_tail_harness(3, 100, 1)
    with pytest.raises(GraphError):
        clique_tail_harness(3, 990, 10)


@pytest.mark.parametrize("k,parts", [(3, [10, 10]), (4, [12, 7]), (3, [8, 8, 8])])
def test_star_union_instances(k, parts):
    rec = star_union_harness(k, parts)
    assert rec["holds"]
    assert rec["n"] == 1 + sum(parts)
    if len(parts) == 2:
        assert rec["merge_gain"] > 0


def test_star_union_graph_free():
    G = star_union_graph(3, [8, 8])
    assert has_cycle(G, 7) is None


def test_cycle_range_complete_graph_passes():
    rec = cycle_range_harness(complete_graph(25), 2)
    assert rec["asserted"] and rec["status"] == "pass"


@pytest.mark.parametrize("G", [snk(30, 2), cycle_graph(9)])
def test_cycle_range_vacuous(G):
    assert cycle_range_harness(G, 2)["status"] == "vacuous"


def test_cycle_range_report_only_below_range():
    # the star K_{1,4} has q = n exactly and no cycles at all; n <= 6k^2
    rec = cycle_range_harness(snk(5, 1), 1)
    assert not rec["asserted"]
    assert rec["status"] == "report-only" and rec["missing"] == [3, 4]


def test_slack_is_small():
    assert 0 < SLACK < 1e-6


def test_stream_matches_per_graph_recomputation():
    from qextremal.graph import disjoint_union, empty_graph
    from qextremal.spectra import q_index
    # C_7 padded with an isolated vertex so the stream has one order
    graphs = [snk(8, 2), disjoint_union(cycle_graph(7), empty_graph(1)), empty_graph(8)]
    rep = verify_stream([write_graph6(G) for G in graphs], 2)
    assert rep.max_q == pytest.approx(max(q_index(G).q for G in graphs), abs=1e-10)
    assert rep.maximizer_is_snk and rep.free_graphs == 3


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (6, 1), (7, 3)])
def test_exhaustive_max_at_least_snk(n, k):
    assert verify_exhaustive(n, k).max_q >= snk_q_closed_form(n, k) - 1e-8
