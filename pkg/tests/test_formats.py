import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qextremal.constructions import FAMILIES, FamilySpec, complete_graph, construct, snk
from qextremal.formats import (ParseError, _n_bytes, iter_graph6, parse_edge_list, parse_graph6,
                               read_graphs, read_report, write_edge_list, write_graph6,
                               write_report)
from qextremal.graph import GraphError, empty_graph
from qextremal.bounds import BoundReport, check_bounds
from qextremal.verify import VerificationReport
from test_graph import graphs


@pytest.mark.parametrize("text,n,m", [("C~", 4, 6), ("D??", 5, 0), ("A_", 2, 1), ("A?", 2, 0),
                                      ("@", 1, 0), ("?", 0, 0)])
def test_known_strings(text, n, m):
    G = parse_graph6(text)
    assert (G.n, G.m) == (n, m)
    assert write_graph6(G) == text


def test_k4_and_empty5():
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6("D??") == empty_graph(5)


def test_pair_order_is_column_major():
    # first bit is (0,1), second (0,2), third (1,2)
    assert parse_graph6("Bo").edges() == [(0, 1), (0, 2)]
    assert parse_graph6("BW").edges() == [(0, 2), (1, 2)]
    assert parse_graph6("B_").edges() == [(0, 1)]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=20))
def test_roundtrip(G):
    s = write_graph6(G)
    assert all(63 <= ord(c) <= 126 for c in s)
    assert parse_graph6(s) == G
    assert parse_edge_list(write_edge_list(G)) == G


def test_families_roundtrip_up_to_200():
    for family in FAMILIES:
        for n in (1, 5, 63, 64, 200):
            kw = {}
            if family in ("snk", "snk_plus"):
                kw = {"k": 2}
                if n < 4:
                    continue
            if family == "cycle" and n < 3:
                continue
            if family == "ltk":
                if n < 3:
                    continue
                kw = {"k": 2, "t": (n - 1) // 2}
                if (n - 1) % 2:
                    continue
            G = construct(FamilySpec(family, n=n, **kw))
            s = write_graph6(G)
            assert all(63 <= ord(c) <= 126 for c in s)
            assert parse_graph6(s) == G


def test_long_order_form():
    G = snk(100, 3)
    s = write_graph6(G)
    assert s[0] == "~" and parse_graph6(s) == G
    assert write_graph6(empty_graph(63))[:4] == "~??~"


def test_header_and_crlf():
    assert parse_graph6(">>graph6<<C~\r\n") == complete_graph(4)
    gs = list(iter_graph6([">>graph6<<", "C~\r\n", "", "A_"]))
    assert [G.n for G in gs] == [4, 2]


@pytest.mark.parametrize("text,offset", [
    ("C~ ", 2),        # illegal byte (space)
    ("C", 1),          # truncated bit vector
    ("C~?", 2),        # trailing garbage
    ("A`", 1),         # nonzero padding
    ("~?", 2),         # truncated long order
    ("", 0),
])
def test_errors_report_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_errors_report_line_number():
    with pytest.raises(ParseError) as info:
        list(iter_graph6(["C~", "A_", "D?"]))
    assert info.value.line == 3
    assert "line 3" in str(info.value)


def test_edge_list_parsing():
    G = parse_edge_list("# comment\n4 3\n0 1\n1 2\n\n2 3\n")
    assert G.edges() == [(0, 1), (1, 2), (2, 3)]
    assert write_edge_list(G) == "4 3\n0 1\n1 2\n2 3\n"


@pytest.mark.parametrize("text,line", [("3 2\n0 1\n", 1), ("3 1\n0 5\n", 2),
                                       ("3 1\n0 x\n", 2), ("3 1\n1 1\n", 2)])
def test_edge_list_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_read_graphs_autodetect():
    assert read_graphs("3 1\n0 1\n")[0].m == 1
    assert [G.n for G in read_graphs("C~\nA_\n")] == [4, 2]
    with pytest.raises(ValueError):
        read_graphs("C~", "xml")


def test_oversized_order_rejected():
    with pytest.raises(ParseError):
        parse_graph6("~~" + "?" * 6)


def test_report_roundtrip_json_and_csv():
    reps = [check_bounds(snk(12, 2), 2), check_bounds(complete_graph(6), 2)]
    for fmt in ("json-lines", "csv"):
        back = read_report(write_report(reps, fmt), fmt)
        assert [BoundReport.from_dict(d) for d in back] == reps
    v = VerificationReport(4, 2, 64, 64, 6.0, "C~", False, ["C~"], "exhaustive-labeled")
    for fmt in ("json-lines", "csv"):
        (d,) = read_report(write_report(v, fmt), fmt)
        assert VerificationReport.from_dict(d) == v


def test_report_float_exact_in_csv():
    rec = {"q": 0.1 + 0.2, "name": "x"}
    (d,) = read_report(write_report([rec], "csv"), "csv")
    assert d["q"] == 0.1 + 0.2


@given(st.integers(0, 258047))
@settings(max_examples=30)
def test_order_field_roundtrip(n):
    head = _n_bytes(n)
    assert len(head) == (1 if n <= 62 else 4)
    nbytes = (n * (n - 1) // 2 + 5) // 6
    if nbytes <= 5000:
        assert parse_graph6(head + "?" * nbytes).n == n


def test_order_above_limit():
    with pytest.raises(GraphError):
        _n_bytes(258048)
