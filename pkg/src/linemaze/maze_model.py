"""Ground-truth line mazes: axis-aligned planar graphs with start/end marks.

A maze is a set of named nodes (dead ends, turns, junctions) joined by
axis-aligned edges. Collinear edges may overlap geometrically: they model
separate physical lanes of tape laid along the same corridor, and edge
identity keeps them apart. Perpendicular edges may only meet at a node
they share; any other crossing or touch must be modeled as a junction.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from importlib import resources

from ._directions import direction_between
from .errors import MazeSyntaxError, MazeValidationError

MAX_DEGREE = 4


@dataclass(frozen=True)
class Point2D:
    x: float
    y: float


@dataclass(frozen=True)
class MazeNode:
    id: str
    position: Point2D


@dataclass(frozen=True)
class MazeEdge:
    a: str
    b: str

    def key(self):
        return frozenset((self.a, self.b))


@dataclass(frozen=True)
class MazeSpec:
    nodes: tuple
    edges: tuple
    start: str
    end: str

    @cached_property
    def _by_id(self):
        return {n.id: n for n in self.nodes}

    @cached_property
    def _incident(self):
        inc = {n.id: [] for n in self.nodes}
        for e in self.edges:
            inc[e.a].append(e)
            inc[e.b].append(e)
        return inc

    def node(self, node_id):
        try:
            return self._by_id[node_id]
        except KeyError:
            raise MazeValidationError("unknown node id %r" % node_id) from None

    def position(self, node_id):
        return self.node(node_id).position

    def degree(self, node_id):
        return len(self._incident[self.node(node_id).id])

    def incident_edges(self, node_id):
        return list(self._incident[self.node(node_id).id])

    def edge_length(self, edge):
        pa = self.position(edge.a)
        pb = self.position(edge.b)
        return math.hypot(pb.x - pa.x, pb.y - pa.y)

    def edge_other(self, edge, node_id):
        return edge.b if edge.a == node_id else edge.a

    def edge_direction(self, edge, from_id):
        """Absolute direction of travel along `edge` leaving `from_id`."""
        to_id = self.edge_other(edge, from_id)
        pa = self.position(from_id)
        pb = self.position(to_id)
        return direction_between(pa.x, pa.y, pb.x, pb.y)

    def exits(self, node_id):
        """Canonically ordered exits: (direction, edge, neighbor id, length).

        Sorted by direction code, then edge length, then neighbor
        coordinate, so that exits overlapping in direction (parallel
        lanes) are listed nearest node first.
        """
        out = []
        for e in self._incident[self.node(node_id).id]:
            other = self.edge_other(e, node_id)
            pos = self.position(other)
            out.append((self.edge_direction(e, node_id), e, other, self.edge_length(e), (pos.x, pos.y)))
        out.sort(key=lambda t: (t[0], t[3], t[4]))
        return [(d, e, o, ln) for d, e, o, ln, _ in out]


def _validate(nodes, edges, start, end):
    seen = set()
    for n in nodes:
        if not n.id or any(c.isspace() for c in n.id):
            raise MazeValidationError("node id %r is empty or contains whitespace" % n.id)
        if n.id in seen:
            raise MazeValidationError("duplicate node id %r" % n.id)
        seen.add(n.id)
        if not (math.isfinite(n.position.x) and math.isfinite(n.position.y)):
            raise MazeValidationError("node %r has non-finite coordinates" % n.id)

    coords = {}
    for n in nodes:
        key = (n.position.x, n.position.y)
        if key in coords:
            raise MazeValidationError(
                "nodes %r and %r share coordinates %r" % (coords[key], n.id, key))
        coords[key] = n.id

    by_id = {n.id: n for n in nodes}
    edge_keys = set()
    for e in edges:
        if e.a not in by_id or e.b not in by_id:
            raise MazeValidationError("edge %s-%s references an unknown node" % (e.a, e.b))
        if e.a == e.b:
            raise MazeValidationError("edge %s-%s is a self-loop" % (e.a, e.b))
        key = e.key()
        if key in edge_keys:
            raise MazeValidationError("duplicate edge %s-%s" % (e.a, e.b))
        edge_keys.add(key)
        pa, pb = by_id[e.a].position, by_id[e.b].position
        if pa.x != pb.x and pa.y != pb.y:
            raise MazeValidationError("edge %s-%s not axis-aligned" % (e.a, e.b))

    if start not in by_id:
        raise MazeValidationError("start refers to unknown node %r" % start)
    if end not in by_id:
        raise MazeValidationError("end refers to unknown node %r" % end)

    degree = {n.id: 0 for n in nodes}
    for e in edges:
        degree[e.a] += 1
        degree[e.b] += 1
    for n in nodes:
        if degree[n.id] == 0:
            raise MazeValidationError("node %r is isolated" % n.id)
        if degree[n.id] > MAX_DEGREE:
            raise MazeValidationError(
                "node %r has degree %d > %d" % (n.id, degree[n.id], MAX_DEGREE))

    # Degree-2 nodes must be turns: their two edges perpendicular.
    incident = {n.id: [] for n in nodes}
    for e in edges:
        incident[e.a].append(e)
        incident[e.b].append(e)
    for n in nodes:
        if degree[n.id] != 2:
            continue
        axes = []
        for e in incident[n.id]:
            other = by_id[e.b if e.a == n.id else e.a].position
            axes.append("h" if other.y == n.position.y else "v")
        if axes[0] == axes[1]:
            raise MazeValidationError(
                "degree-2 node %r is collinear (not a turn)" % n.id)

    _check_crossings(by_id, edges)

    # Connectivity.
    if nodes:
        stack = [nodes[0].id]
        reached = {nodes[0].id}
        while stack:
            cur = stack.pop()
            for e in incident[cur]:
                other = e.b if e.a == cur else e.a
                if other not in reached:
                    reached.add(other)
                    stack.append(other)
        if len(reached) != len(nodes):
            raise MazeValidationError("maze is not connected")


def _check_crossings(by_id, edges):
    """Reject perpendicular contacts that the graph does not represent.

    Collinear overlap is always allowed: overlapping edges model parallel
    lanes along one corridor. A perpendicular intersection is allowed only
    at a node's coordinate, and an edge that merely passes that node (the
    node is not one of its endpoints) is a lane, legitimate only when the
    node really lies on a corridor of that axis, i.e. has an incident edge
    collinear with the passing edge.
    """
    coords = {(n.position.x, n.position.y): n.id for n in by_id.values()}
    axes_at = {n.id: set() for n in by_id.values()}
    for e in edges:
        pa, pb = by_id[e.a].position, by_id[e.b].position
        axis = "h" if pa.y == pb.y else "v"
        axes_at[e.a].add(axis)
        axes_at[e.b].add(axis)

    segs = []
    for e in edges:
        pa, pb = by_id[e.a].position, by_id[e.b].position
        segs.append((e, pa.y == pb.y, pa, pb))
    for i in range(len(segs)):
        ei, hi, a1, b1 = segs[i]
        for j in range(i + 1, len(segs)):
            ej, hj, a2, b2 = segs[j]
            if hi == hj:
                continue
            if hi:
                h_e, (hx1, hx2), hy = ei, sorted((a1.x, b1.x)), a1.y
                v_e, (vy1, vy2), vx = ej, sorted((a2.y, b2.y)), a2.x
            else:
                h_e, (hx1, hx2), hy = ej, sorted((a2.x, b2.x)), a2.y
                v_e, (vy1, vy2), vx = ei, sorted((a1.y, b1.y)), a1.x
            if not (hx1 <= vx <= hx2 and vy1 <= hy <= vy2):
                continue
            node_here = coords.get((vx, hy))
            ok = node_here is not None
            if ok:
                for edge, axis in ((h_e, "h"), (v_e, "v")):
                    if node_here in (edge.a, edge.b):
                        continue
                    if axis not in axes_at[node_here]:
                        ok = False
            if not ok:
                raise MazeValidationError(
                    "edges %s-%s and %s-%s cross at (%g, %g); crossings must be a junction node"
                    % (h_e.a, h_e.b, v_e.a, v_e.b, vx, hy))


def make_maze(nodes, edges, start, end):
    """Build and validate a MazeSpec from node/edge sequences."""
    nodes = tuple(nodes)
    edges = tuple(edges)
    _validate(nodes, edges, start, end)
    return MazeSpec(nodes, edges, start, end)


def parse_maze(text):
    """Parse the line-oriented maze format into a validated MazeSpec.

    Records: `node <id> <x> <y>`, `edge <a> <b>`, `start <id>`, `end <id>`.
    `#` starts a comment; blank lines are ignored.
    """
    nodes = []
    edges = []
    start = None
    end = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "node":
            if len(tokens) != 4:
                raise MazeSyntaxError(lineno, "node record needs: node <id> <x> <y>")
            try:
                x, y = float(tokens[2]), float(tokens[3])
            except ValueError:
                raise MazeSyntaxError(lineno, "bad coordinate in %r" % line) from None
            nodes.append(MazeNode(tokens[1], Point2D(x, y)))
        elif kind == "edge":
            if len(tokens) != 3:
                raise MazeSyntaxError(lineno, "edge record needs: edge <a> <b>")
            edges.append(MazeEdge(tokens[1], tokens[2]))
        elif kind == "start":
            if len(tokens) != 2:
                raise MazeSyntaxError(lineno, "start record needs: start <id>")
            if start is not None:
                raise MazeSyntaxError(lineno, "duplicate start record")
            start = tokens[1]
        elif kind == "end":
            if len(tokens) != 2:
                raise MazeSyntaxError(lineno, "end record needs: end <id>")
            if end is not None:
                raise MazeSyntaxError(lineno, "duplicate end record")
            end = tokens[1]
        else:
            raise MazeSyntaxError(lineno, "unknown record type %r" % kind)
    if start is None:
        raise MazeValidationError("missing start record")
    if end is None:
        raise MazeValidationError("missing end record")
    return make_maze(nodes, edges, start, end)


def serialize_maze(maze):
    """Render a MazeSpec back to the text format; parse round-trips exactly."""
    lines = []
    for n in maze.nodes:
        lines.append("node %s %r %r" % (n.id, n.position.x, n.position.y))
    for e in maze.edges:
        lines.append("edge %s %s" % (e.a, e.b))
    lines.append("start %s" % maze.start)
    lines.append("end %s" % maze.end)
    return "\n".join(lines) + "\n"


def node_degree(maze, node_id):
    """Number of edges incident to the node."""
    return maze.degree(node_id)


def bundled_maze_text(name):
    """Text of a maze shipped with the package (e.g. 'fig2.maze')."""
    if not name.endswith(".maze"):
        name += ".maze"
    ref = resources.files("linemaze").joinpath("data", name)
    if not ref.is_file():
        raise MazeValidationError("no bundled maze named %r" % name)
    return ref.read_text(encoding="utf-8")
