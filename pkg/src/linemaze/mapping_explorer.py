"""Mapping explorer: discover a whole line maze and its coordinates.

The robot starts at an arbitrary node it calls point "0" at coordinate
(0, 0), heading north, and maintains four parallel records: the visit log
(every point name in arrival order), each point's type (number of branches
minus one), an explored counter, and a coordinate per point. Distances come
from an odometry source (ground truth, raw encoders, or one of two encoder
corrections), so a coordinate is the previous point's coordinate advanced
along the heading axis by the measured distance.

On every arrival the measured coordinate is matched against the known points
within a tolerance: a hit means a revisit (the stored coordinate is reused,
never averaged), a miss mints a new name. A point is fully explored once
every one of its branches has been walked; whenever the current point is
finished, the robot runs a shortest-path search over the partial graph it
already knows and drives to the nearest unfinished point, logging every
intermediate arrival on the way. Exploration ends when no unfinished point
remains.

Two exits of a node may leave in the same compass direction (side-by-side
lanes); the robot tells them apart by their order across the line (nearest
reachable point first) and walks them as distinct branches.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ._directions import DELTA, NORTH
from .errors import ExplorationError, InconsistencyError
from .maze_model import MazeSpec, Point2D
from .motion_sim import MotionParams, simulate_segment
from .odometry import (ODOMETRY_MODES, CalibConstants, calibration_from_motion,
                       estimate_length)

__all__ = [
    "OdometrySource",
    "ExplorationState",
    "explore_map",
    "match_point",
    "next_target",
    "known_adjacency",
    "trace_lines",
]

# A slot identifies one branch of a point: (direction code, lane index).
# Lane indices count same-direction exits in their across-the-line order.
Slot = Tuple[int, int]

_MODE_ALIASES = {
    "raw-encoder": "raw",
    "corrected-basic": "basic",
    "corrected-arc": "arc",
}


@dataclass(frozen=True)
class OdometrySource:
    """Distance-measurement mode used for a whole exploration."""

    mode: str = "ideal"

    def __post_init__(self) -> None:
        mode = _MODE_ALIASES.get(self.mode, self.mode)
        object.__setattr__(self, "mode", mode)
        if mode not in ODOMETRY_MODES:
            raise ValueError("odometry mode must be one of %r, got %r"
                             % (ODOMETRY_MODES, self.mode))


@dataclass
class ExplorationState:
    """The mapping robot's knowledge, updated arrival by arrival.

    point: names in visit order; point[0] is the start, named "0", at (0,0).
    type_of: per-name branch count minus one.
    explored: per-name count of distinct branches walked (floored at 1).
    coordinate: per-name position in the robot frame (start at origin).
    total_points: number of distinct names.
    direction: current heading code (starts north).
    trace: one row per arrival — (name, type, explored-at-arrival, x, y).
    """

    point: List[str] = field(default_factory=list)
    type_of: Dict[str, int] = field(default_factory=dict)
    explored: Dict[str, int] = field(default_factory=dict)
    coordinate: Dict[str, Point2D] = field(default_factory=dict)
    total_points: int = 0
    direction: int = NORTH
    trace: List[Tuple[str, int, int, float, float]] = field(default_factory=list)


def known_adjacency(state: ExplorationState) -> Dict[str, Set[str]]:
    """Adjacency among named points, read off consecutive visit-log pairs."""
    adj: Dict[str, Set[str]] = {name: set() for name in state.type_of}
    for a, b in zip(state.point, state.point[1:]):
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _under_explored(state: ExplorationState,
                    adj: Dict[str, Set[str]]) -> Set[str]:
    # A point with type t has t+1 branches; fewer known neighbors than that
    # means an unwalked branch remains. The raw neighbor count (not the
    # floored explored counter) makes a never-departed start show up too.
    return {name for name, t in state.type_of.items()
            if len(adj[name]) < t + 1}


def match_point(coord: Point2D, state: ExplorationState,
                tol: float) -> Optional[str]:
    """Name of the unique known point within Chebyshev ``tol`` of ``coord``.

    None when nothing matches; an error when two known points both match,
    since then the tolerance is too coarse for the maze's geometry.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive, got %r" % (tol,))
    hits = [name for name, c in state.coordinate.items()
            if max(abs(coord.x - c.x), abs(coord.y - c.y)) <= tol]
    if not hits:
        return None
    if len(hits) > 1:
        raise ExplorationError(
            "measured coordinate (%g, %g) matches points %s within tolerance "
            "%g; tolerance too large for this maze's point spacing"
            % (coord.x, coord.y, ", ".join(sorted(hits)), tol))
    return hits[0]


def next_target(state: ExplorationState) -> Optional[str]:
    """Nearest point (by known-graph path length) still missing a branch.

    Distances run from the robot's current point (the last visit-log entry)
    over the already-walked edges, weighted by coordinate distance. Ties
    pick the lexicographically smallest name. None means exploration done.
    """
    adj = known_adjacency(state)
    under = _under_explored(state, adj)
    if not under:
        return None
    cur = state.point[-1]
    if cur in under:
        return cur
    dist: Dict[str, float] = {cur: 0.0}
    heap: List[Tuple[float, str]] = [(0.0, cur)]
    seen: Set[str] = set()
    while heap:
        d, name = heapq.heappop(heap)
        if name in seen:
            continue
        seen.add(name)
        a = state.coordinate[name]
        for nb in adj[name]:
            b = state.coordinate[nb]
            nd = d + math.hypot(b.x - a.x, b.y - a.y)
            if nb not in dist or nd < dist[nb]:
                dist[nb] = nd
                heapq.heappush(heap, (nd, nb))
    best: Optional[Tuple[float, str]] = None
    for name in under:
        if name in dist:
            cand = (dist[name], name)
            if best is None or cand < best:
                best = cand
    return None if best is None else best[1]


def _slots_at(maze: MazeSpec, node: str):
    """Canonical branch list of a true node: (slot, edge, other, length)."""
    out = []
    lanes: Dict[int, int] = {}
    for direction, edge, other, length in maze.exits(node):
        lane = lanes.get(direction, 0)
        lanes[direction] = lane + 1
        out.append(((direction, lane), edge, other, length))
    return out


def _arrival_slot(maze: MazeSpec, node: str, edge) -> Slot:
    for slot, e, _other, _length in _slots_at(maze, node):
        if e is edge or e == edge:
            return slot
    raise InconsistencyError("edge %r-%r does not reach node %r"
                             % (edge.a, edge.b, node))


def explore_map(maze: MazeSpec, params: Optional[MotionParams] = None,
                cal: Optional[CalibConstants] = None,
                src: "OdometrySource | str" = "ideal",
                tol: Optional[float] = None) -> ExplorationState:
    """Explore ``maze`` fully and return the resulting state.

    params/cal default to the stock robot and its derived calibration; src
    picks the odometry mode; tol is the coordinate-match tolerance in cm
    (default: 3% of the longest segment measured so far, floored at 1 cm).

    Raises ExplorationError when the odometry is too noisy for the maze
    (a revisited point lands outside tolerance, a measured coordinate
    becomes ambiguous, or the traversal budget of 4 per edge runs out).
    """
    if params is None:
        params = MotionParams()
    mode = src.mode if isinstance(src, OdometrySource) else OdometrySource(src).mode
    if cal is None and mode in ("basic", "arc"):
        cal = calibration_from_motion(params)
    if tol is not None and not tol > 0.0:
        raise ValueError("tol must be positive, got %r" % (tol,))

    budget = 4 * len(maze.edges)
    rng = random.Random(params.seed)

    state = ExplorationState()
    start_name = "0"
    state.point.append(start_name)
    state.type_of[start_name] = maze.degree(maze.start) - 1
    state.explored[start_name] = 1
    state.coordinate[start_name] = Point2D(0.0, 0.0)
    state.total_points = 1
    state.trace.append((start_name, state.type_of[start_name], 1, 0.0, 0.0))

    true_node = maze.start
    truth_of: Dict[str, str] = {start_name: maze.start}
    name_of_truth: Dict[str, str] = {maze.start: start_name}
    walked: Dict[str, Set[Slot]] = {start_name: set()}
    route: Dict[Tuple[str, str], Slot] = {}
    adj: Dict[str, Set[str]] = {start_name: set()}
    longest = 0.0
    traversals = 0

    def measure(true_length: float) -> float:
        seed_i = rng.randrange(2 ** 31)
        if mode == "ideal":
            return true_length
        log = simulate_segment(true_length, params, seed=seed_i)
        return estimate_length(log, cal, mode)

    def walk(slot: Slot) -> None:
        """Traverse one branch of the current point and log the arrival."""
        nonlocal true_node, longest, traversals
        traversals += 1
        if traversals > budget:
            raise ExplorationError(
                "exploration exceeded its budget of %d traversals; odometry "
                "errors are likely re-opening finished points" % budget)
        cur = state.point[-1]
        for cand, edge, other, length in _slots_at(maze, true_node):
            if cand == slot:
                break
        else:
            raise InconsistencyError(
                "no branch %r at point %r" % (slot, cur))
        direction = slot[0]
        measured = measure(length)
        longest = max(longest, measured)
        eff_tol = tol if tol is not None else max(1.0, 0.03 * longest)
        dx, dy = DELTA[direction]
        prev = state.coordinate[cur]
        guess = Point2D(prev.x + dx * measured, prev.y + dy * measured)

        name = match_point(guess, state, eff_tol)
        if name is None:
            if other in name_of_truth:
                raise ExplorationError(
                    "odometry drift: arrived back at point %r but the "
                    "measured coordinate (%g, %g) missed its stored "
                    "coordinate by more than the tolerance %g"
                    % (name_of_truth[other], guess.x, guess.y, eff_tol))
            name = str(state.total_points)
            state.total_points += 1
            state.type_of[name] = maze.degree(other) - 1
            state.coordinate[name] = guess
            truth_of[name] = other
            name_of_truth[other] = name
            walked[name] = set()
            adj[name] = set()
        elif truth_of[name] != other:
            raise ExplorationError(
                "odometry drift: arrival at a new point was confused with "
                "known point %r at (%g, %g); tolerance %g too large for the "
                "accumulated error"
                % (name, state.coordinate[name].x, state.coordinate[name].y,
                   eff_tol))

        walked[cur].add(slot)
        walked[name].add(_arrival_slot(maze, other, edge))
        adj[cur].add(name)
        adj[name].add(cur)
        route[(cur, name)] = slot
        route[(name, cur)] = _arrival_slot(maze, other, edge)
        state.explored[cur] = max(1, len(adj[cur]))
        state.explored[name] = max(1, len(adj[name]))
        state.point.append(name)
        state.direction = direction
        true_node = other
        c = state.coordinate[name]
        state.trace.append((name, state.type_of[name], state.explored[name],
                            c.x, c.y))

    while True:
        cur = state.point[-1]
        pending = [slot for slot, _e, _o, _l in _slots_at(maze, true_node)
                   if slot not in walked[cur]]
        if pending:
            # Branch preference: east, north, west, south; among lanes of
            # one direction, the nearest-reaching branch first.
            walk(min(pending))
            continue
        target = next_target(state)
        if target is None:
            break
        path = _known_path(state, adj, cur, target)
        for nxt in path[1:]:
            walk(route[(state.point[-1], nxt)])
    return state


def _known_path(state: ExplorationState, adj: Dict[str, Set[str]],
                s: str, t: str) -> List[str]:
    """Shortest already-walked route s→t (coordinate-distance weights)."""
    heap: List[Tuple[float, Tuple[str, ...]]] = [(0.0, (s,))]
    best: Dict[str, float] = {s: 0.0}
    seen: Set[str] = set()
    while heap:
        d, path = heapq.heappop(heap)
        name = path[-1]
        if name == t:
            return list(path)
        if name in seen:
            continue
        seen.add(name)
        a = state.coordinate[name]
        for nb in adj[name]:
            if nb in seen:
                continue
            b = state.coordinate[nb]
            nd = d + math.hypot(b.x - a.x, b.y - a.y)
            if nb not in best or nd < best[nb]:
                best[nb] = nd
                heapq.heappush(heap, (nd, path + (nb,)))
    raise InconsistencyError(
        "no walked route from %r to %r; the visit log is not connected"
        % (s, t))


def trace_lines(state: ExplorationState) -> List[str]:
    """Exploration trace, one line per arrival: name type explored x y."""
    return ["%s %d %d %g %g" % row for row in state.trace]
