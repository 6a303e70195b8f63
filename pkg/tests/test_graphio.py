import json

import pytest
from hypothesis import given

from conftest import graphs as graphs_st
from pbei.fixtures import NAMED
from pbei.graph import Graph
from pbei.graphio import (
    GraphFormatError,
    format_edge_list,
    graph_from_json,
    graph_to_json,
    load_graph,
    parse_edge_list,
    parse_inline_edges,
)


def test_parse_with_comments():
    g = parse_edge_list("# triangle\n3 3\n1 2\n\n2 3  # closing\n1 3\n")
    assert g == Graph(3, [(1, 2), (2, 3), (1, 3)])


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("3 2\n1 2\n", 3, 1),
        ("3 1\n1 x\n", 2, 3),
        ("3 1\n1 4\n", 2, 3),
        ("3 1\n2 2\n", 2, 1),
        ("3 2\n1 2\n2 1\n", 3, 1),
        ("3\n", 1, 1),
        ("3 1\n1 2\n2 3\n", 3, 1),
    ],
)
def test_errors_carry_location(text, line, column):
    with pytest.raises(GraphFormatError) as err:
        parse_edge_list(text)
    assert (err.value.line, err.value.column) == (line, column)


@given(graphs_st(min_n=0, max_n=7))
def test_round_trips(g):
    assert parse_edge_list(format_edge_list(g)) == g
    assert graph_from_json(graph_to_json(g)) == g


def test_json_errors():
    with pytest.raises(GraphFormatError) as err:
        graph_from_json('{"n": 3,\n "edges": [[1, 2],]}')
    assert err.value.line == 2
    with pytest.raises(GraphFormatError):
        graph_from_json({"n": 2, "edges": [[1, 2, 3]]})
    with pytest.raises(GraphFormatError):
        graph_from_json({"n": 2, "edges": [[1, 1]]})


def test_inline_edges():
    assert parse_inline_edges("1-2, 2-3") == Graph(3, [(1, 2), (2, 3)])
    with pytest.raises(GraphFormatError) as err:
        parse_inline_edges("1-2,2-2")
    with pytest.raises(GraphFormatError) as err:
        parse_inline_edges("1-2,3")
    assert err.value.column == 2


def test_shipped_graph_files(tmp_path):
    import pathlib

    root = pathlib.Path(__file__).resolve().parents[1] / "graphs"
    for name, g in NAMED.items():
        assert load_graph(str(root / f"{name}.edges")) == g
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"n": 2, "edges": [[1, 2]]}))
    assert load_graph(str(p)) == Graph(2, [(1, 2)])
