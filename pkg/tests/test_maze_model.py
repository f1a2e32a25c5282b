"""Maze text format: parsing, serialization, validation, geometry queries."""

import math

import pytest

from linemaze._directions import EAST, NORTH, SOUTH, WEST
from linemaze.errors import MazeSyntaxError, MazeValidationError
from linemaze.maze_model import (MazeEdge, MazeNode, Point2D,
                                 bundled_maze_text, make_maze, node_degree,
                                 parse_maze, serialize_maze)

from conftest import build_maze


BUNDLED = ["fig1", "fig2", "corridor", "plus"]


# ---------------------------------------------------------------- parsing

@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_mazes_parse_and_roundtrip(name):
    text = bundled_maze_text(name)
    maze = parse_maze(text)
    again = parse_maze(serialize_maze(maze))
    assert again == maze


def test_bundled_name_with_and_without_suffix():
    assert bundled_maze_text("fig1") == bundled_maze_text("fig1.maze")


def test_unknown_bundled_maze():
    with pytest.raises(MazeValidationError, match="no bundled maze named"):
        bundled_maze_text("nosuch")


def test_comments_and_blank_lines_ignored():
    maze = parse_maze(
        "# a comment\n"
        "\n"
        "node S 0 0   # trailing comment\n"
        "node F 0 10\n"
        "edge S F\n"
        "start S\n"
        "end F\n")
    assert [n.id for n in maze.nodes] == ["S", "F"]
    assert maze.start == "S" and maze.end == "F"


@pytest.mark.parametrize("bad_line,lineno,msg", [
    ("node S 0", 1, "node record needs"),
    ("node S x 0", 1, "bad coordinate"),
    ("edge S", 1, "edge record needs"),
    ("start", 1, "start record needs"),
    ("end", 1, "end record needs"),
    ("wall S F", 1, "unknown record type"),
])
def test_syntax_errors_carry_line_numbers(bad_line, lineno, msg):
    with pytest.raises(MazeSyntaxError, match=msg) as ei:
        parse_maze(bad_line + "\n")
    assert ei.value.line == lineno
    assert "line 1:" in str(ei.value)


def test_syntax_error_line_number_counts_all_lines():
    text = "# header\nnode S 0 0\nnode F 0 10\nedge S F\nstart S\nend F\nbogus\n"
    with pytest.raises(MazeSyntaxError) as ei:
        parse_maze(text)
    assert ei.value.line == 7


@pytest.mark.parametrize("dup", ["start", "end"])
def test_duplicate_start_end_records(dup):
    text = ("node S 0 0\nnode F 0 10\nedge S F\nstart S\nend F\n"
            + "%s S\n" % dup)
    with pytest.raises(MazeSyntaxError, match="duplicate %s record" % dup):
        parse_maze(text)


@pytest.mark.parametrize("missing,msg", [
    ("start", "missing start record"),
    ("end", "missing end record"),
])
def test_missing_start_end(missing, msg):
    lines = ["node S 0 0", "node F 0 10", "edge S F", "start S", "end F"]
    lines = [l for l in lines if not l.startswith(missing)]
    with pytest.raises(MazeValidationError, match=msg):
        parse_maze("\n".join(lines) + "\n")


def test_serialize_uses_repr_coordinates():
    maze = build_maze([("S", 0.5, 0), ("F", 0.5, 10.25)], [("S", "F")], "S", "F")
    text = serialize_maze(maze)
    assert "node S 0.5 0.0" in text
    assert "node F 0.5 10.25" in text
    assert text.endswith("end F\n")
    assert parse_maze(text) == maze


# ------------------------------------------------------------- validation

def test_duplicate_node_id():
    with pytest.raises(MazeValidationError, match="duplicate node id 'S'"):
        build_maze([("S", 0, 0), ("S", 0, 10)], [], "S", "S")


def test_whitespace_node_id():
    with pytest.raises(MazeValidationError, match="empty or contains whitespace"):
        make_maze([MazeNode("a b", Point2D(0.0, 0.0))], [], "a b", "a b")


def test_non_finite_coordinates():
    with pytest.raises(MazeValidationError, match="non-finite"):
        make_maze([MazeNode("S", Point2D(float("nan"), 0.0)),
                   MazeNode("F", Point2D(0.0, 10.0))],
                  [MazeEdge("S", "F")], "S", "F")


def test_shared_coordinates():
    with pytest.raises(MazeValidationError, match="share coordinates"):
        build_maze([("S", 0, 0), ("F", 0, 0)], [("S", "F")], "S", "F")


def test_edge_unknown_node():
    with pytest.raises(MazeValidationError, match="references an unknown node"):
        build_maze([("S", 0, 0), ("F", 0, 10)], [("S", "Q")], "S", "F")


def test_self_loop():
    with pytest.raises(MazeValidationError, match="self-loop"):
        build_maze([("S", 0, 0), ("F", 0, 10)], [("S", "S"), ("S", "F")],
                   "S", "F")


def test_duplicate_edge_either_orientation():
    with pytest.raises(MazeValidationError, match="duplicate edge"):
        build_maze([("S", 0, 0), ("F", 0, 10)], [("S", "F"), ("F", "S")],
                   "S", "F")


def test_diagonal_edge():
    with pytest.raises(MazeValidationError, match="not axis-aligned"):
        build_maze([("S", 0, 0), ("F", 3, 10)], [("S", "F")], "S", "F")


def test_unknown_start_and_end():
    with pytest.raises(MazeValidationError, match="start refers to unknown"):
        build_maze([("S", 0, 0), ("F", 0, 10)], [("S", "F")], "Q", "F")
    with pytest.raises(MazeValidationError, match="end refers to unknown"):
        build_maze([("S", 0, 0), ("F", 0, 10)], [("S", "F")], "S", "Q")


def test_isolated_node():
    with pytest.raises(MazeValidationError, match="is isolated"):
        build_maze([("S", 0, 0), ("F", 0, 10), ("L", 5, 5)], [("S", "F")],
                   "S", "F")


def test_degree_cap():
    nodes = [("C", 0, 0), ("N", 0, 5), ("S", 0, -5), ("E", 5, 0), ("W", -5, 0),
             ("N2", 0, 10)]
    edges = [("C", "N"), ("C", "S"), ("C", "E"), ("C", "W"), ("C", "N2")]
    with pytest.raises(MazeValidationError, match="degree 5 > 4"):
        build_maze(nodes, edges, "S", "N")


def test_collinear_degree2_node_rejected():
    with pytest.raises(MazeValidationError, match="collinear"):
        build_maze([("S", 0, 0), ("M", 0, 5), ("F", 0, 10)],
                   [("S", "M"), ("M", "F")], "S", "F")


def test_degree2_turn_accepted():
    maze = build_maze([("S", 0, 0), ("M", 0, 5), ("F", 6, 5)],
                      [("S", "M"), ("M", "F")], "S", "F")
    assert maze.degree("M") == 2


def test_unrepresented_crossing_rejected():
    # Vertical S-F passes through horizontal A-B's midpoint with no node.
    with pytest.raises(MazeValidationError, match="cross at"):
        build_maze(
            [("S", 0, -10), ("F", 0, 10), ("A", -5, 0), ("B", 5, 0),
             ("T", 5, 10)],
            [("S", "F"), ("A", "B"), ("B", "T"), ("T", "F")],
            "S", "F")


def test_crossing_at_junction_node_accepted():
    # Same picture but with a degree-4 node at the intersection.
    maze = build_maze(
        [("S", 0, -10), ("X", 0, 0), ("F", 0, 10), ("A", -5, 0), ("B", 5, 0)],
        [("S", "X"), ("X", "F"), ("X", "A"), ("X", "B")],
        "S", "F")
    assert maze.degree("X") == 4


def test_lane_passing_a_node_needs_collinear_corridor():
    # Horizontal edge A-B passes exactly through node M, which has only a
    # vertical corridor: the contact is not representable.
    with pytest.raises(MazeValidationError, match="cross at"):
        build_maze(
            [("A", -5, 0), ("B", 5, 0), ("M", 0, 0), ("T", 0, 10),
             ("TA", -5, 10)],
            [("A", "B"), ("M", "T"), ("T", "TA"), ("TA", "A")],
            "A", "B")


def test_overlapping_parallel_lanes_accepted(fig2):
    # fig2 has two northbound lanes at E; collinear overlap is legal.
    assert fig2.degree("E") == 3


def test_disconnected():
    with pytest.raises(MazeValidationError, match="not connected"):
        build_maze([("S", 0, 0), ("F", 0, 10), ("A", 20, 0), ("B", 20, 10)],
                   [("S", "F"), ("A", "B")], "S", "F")


def test_start_equals_end_allowed():
    maze = build_maze([("A", 0, 0), ("B", 0, 10)], [("A", "B")], "A", "A")
    assert maze.start == maze.end == "A"


# --------------------------------------------------------------- queries

def test_unknown_node_query(fig1):
    with pytest.raises(MazeValidationError, match="unknown node id"):
        fig1.position("nope")


def test_degrees_fig2(fig2):
    assert {n.id: fig2.degree(n.id) for n in fig2.nodes} == {
        "S": 1, "A": 4, "E": 3, "D": 3, "G": 1, "C": 2, "B": 1, "F": 1}
    assert node_degree(fig2, "A") == 4


def test_edge_queries(fig1):
    (edge,) = [e for e in fig1.edges if {e.a, e.b} == {"S", "A"}]
    assert fig1.edge_length(edge) == 10.0
    assert fig1.edge_other(edge, "S") == "A"
    assert fig1.edge_other(edge, "A") == "S"
    assert fig1.edge_direction(edge, "S") == NORTH
    assert fig1.edge_direction(edge, "A") == SOUTH


def test_exits_canonical_order_fig2(fig2):
    # At E: two northbound lanes sorted nearest-first, then the west exit.
    exits = [(d, other, ln) for d, _, other, ln in fig2.exits("E")]
    assert exits == [(NORTH, "D", 3.0), (NORTH, "F", 8.0), (WEST, "A", 14.0)]


def test_exits_direction_order(plus):
    exits = [(d, other) for d, _, other, _ in plus.exits("C")]
    assert exits == [(EAST, "E"), (NORTH, "N"), (WEST, "W"), (SOUTH, "S")]


def test_edge_lengths_positive_everywhere(fig1, fig2, corridor, plus):
    for maze in (fig1, fig2, corridor, plus):
        for e in maze.edges:
            assert maze.edge_length(e) > 0
            assert math.isfinite(maze.edge_length(e))
