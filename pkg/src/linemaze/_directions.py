"""Direction arithmetic shared by the explorers.

Absolute direction codes: 1 = east, 2 = north, 3 = west, 4 = south.
Relative direction codes (with respect to the robot's heading):
1 = right, 2 = front, 3 = left, 4 = back.

Both cycles increment counterclockwise, which makes conversion between
them a mod-4 shift.
"""

EAST, NORTH, WEST, SOUTH = 1, 2, 3, 4
RIGHT, FRONT, LEFT, BACK = 1, 2, 3, 4

# Unit steps per absolute direction, in cm of (x, y).
DELTA = {EAST: (1.0, 0.0), NORTH: (0.0, 1.0), WEST: (-1.0, 0.0), SOUTH: (0.0, -1.0)}

ABS_NAMES = {EAST: "east", NORTH: "north", WEST: "west", SOUTH: "south"}
REL_NAMES = {RIGHT: "right", FRONT: "front", LEFT: "left", BACK: "back"}


def wrap4(n):
    """Map any integer onto the 1..4 cycle."""
    return (n - 1) % 4 + 1


def reverse(direction):
    """Absolute direction pointing the opposite way."""
    return wrap4(direction + 2)


def relative_of(absolute, heading):
    """Relative code of an absolute direction seen from a heading."""
    return wrap4(absolute - heading + 2)


def absolute_of(rel, heading):
    """Absolute direction reached by turning `rel` from a heading."""
    return wrap4(heading + rel - 2)


def direction_between(ax, ay, bx, by):
    """Absolute direction of the axis-aligned step from (ax, ay) to (bx, by).

    Ties are broken by the dominant axis so that near-axis-aligned steps
    (noisy coordinates) still resolve; exact diagonals raise ValueError.
    """
    dx = bx - ax
    dy = by - ay
    if dx == 0.0 and dy == 0.0:
        raise ValueError("zero-length step has no direction")
    if abs(dx) >= abs(dy):
        if abs(dx) == abs(dy):
            raise ValueError("diagonal step has no axis direction")
        return EAST if dx > 0 else WEST
    return NORTH if dy > 0 else SOUTH
