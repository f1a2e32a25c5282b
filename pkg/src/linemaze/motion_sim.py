"""Forward simulation of a differential-drive line follower on a straight segment.

The robot tracks a taped line with a bang-bang controller: it drives in
straight-ish arcs (one wheel slightly faster, so the heading drifts) and,
whenever it strays a lateral distance ``h`` from the line while diverging,
snaps its heading back toward the line with a pivot turn. Wheel encoders
accumulate the per-wheel path length, including the extra wheel travel spent
inside pivot turns. The integration loop lives in a compiled kernel with a
pure-Python twin (selected at import, override with ``LINEMAZE_PURE=1``).
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import MotionDivergenceError

__all__ = [
    "JITTER_LO",
    "JITTER_HI",
    "KERNEL_BACKEND",
    "MotionParams",
    "EncoderLog",
    "simulate_segment",
    "simulate_free_arc",
    "radius_from_ratio",
]

# Start-of-segment heading jitter: |alpha0| is drawn uniformly from
# [JITTER_LO * alpha, JITTER_HI * alpha], with a random sign.
JITTER_LO = 0.9
JITTER_HI = 1.0


def _load_kernel():
    if os.environ.get("LINEMAZE_PURE"):
        from . import _kernel_py

        return _kernel_py, "pure"
    try:
        from . import _kernel  # type: ignore[attr-defined]

        return _kernel, "compiled"
    except ImportError:
        from . import _kernel_py

        return _kernel_py, "pure"


_KERNEL, KERNEL_BACKEND = _load_kernel()


@dataclass(frozen=True)
class MotionParams:
    """Physical parameters of the simulated robot.

    Distances are in centimetres, angles in radians.

    h: lateral deviation from the line that triggers a corrective pivot.
    alpha: nominal magnitude of the heading error right after a junction
        departure (the actual value gets per-segment jitter and sign).
    theta: heading magnitude the robot aims back at the line after a pivot.
    speed_ratio: right/left wheel speed ratio (1.0 = perfectly straight).
    wheel_base: distance between the two wheels.
    pivot_arc_left/right: wheel distance spent turning during one pivot.
    pivot_lin_left/right: wheel distance spent rolling straight during one
        pivot (entry/exit creep).
    inner_rot_const: extra distance charged to the inner wheel of a pivot.
    step: integration step along the robot path.
    seed: seeds the per-segment heading jitter.
    """

    h: float = 0.1
    alpha: float = math.radians(10.0)
    theta: float = math.radians(10.0)
    speed_ratio: float = 1.02
    wheel_base: float = 10.0
    pivot_arc_left: float = 0.006
    pivot_lin_left: float = 0.002
    pivot_arc_right: float = 0.006
    pivot_lin_right: float = 0.002
    inner_rot_const: float = 0.002
    step: float = 0.01
    seed: int = 0

    def __post_init__(self) -> None:
        if not (self.h > 0.0 and math.isfinite(self.h)):
            raise ValueError("h must be positive and finite")
        if not (0.0 <= self.alpha < math.pi / 2):
            raise ValueError("alpha must lie in [0, pi/2)")
        if not (0.0 < self.theta < math.pi / 2):
            raise ValueError("theta must lie in (0, pi/2)")
        if not (self.speed_ratio > 0.0 and math.isfinite(self.speed_ratio)):
            raise ValueError("speed_ratio must be positive and finite")
        if not (self.wheel_base > 0.0 and math.isfinite(self.wheel_base)):
            raise ValueError("wheel_base must be positive and finite")
        for name in ("pivot_arc_left", "pivot_lin_left", "pivot_arc_right",
                     "pivot_lin_right", "inner_rot_const"):
            if getattr(self, name) < 0.0:
                raise ValueError("%s must be non-negative" % name)
        if not (self.step > 0.0 and math.isfinite(self.step)):
            raise ValueError("step must be positive and finite")

    @property
    def kappa(self) -> float:
        """Curvature (rad/cm) of the midpoint path from the wheel mismatch."""
        rho = self.speed_ratio
        if rho == 1.0:
            return 0.0
        return 2.0 * (rho - 1.0) / (self.wheel_base * (rho + 1.0))

    def wheel_factors(self) -> Tuple[float, float]:
        """Per-wheel path-length factors (fl, fr) relative to midpoint travel."""
        half = self.kappa * self.wheel_base / 2.0
        return 1.0 - half, 1.0 + half


@dataclass(frozen=True)
class EncoderLog:
    """Encoder readout and ground truth for one traversed segment.

    wl_total/wr_total: accumulated left/right wheel distances.
    n_right/n_left: number of right/left pivot turns executed.
    true_length: actual segment length (ground truth, not robot knowledge).
    trajectory: polyline of the robot midpoint in segment-local coordinates
        (x along the line from the start node, y lateral); vertices are the
        start point, every pivot location, and the end point. None when the
        simulation does not produce one.
    """

    wl_total: float
    wr_total: float
    n_right: int
    n_left: int
    true_length: float
    trajectory: Optional[Tuple[Tuple[float, float], ...]] = field(default=None)

    @property
    def turn_count(self) -> int:
        return self.n_right + self.n_left


def radius_from_ratio(speed_ratio: float, wheel_base: float) -> float:
    """Turning radius of the *left wheel* path implied by the speed ratio.

    Positive for a right-faster robot (counter-clockwise drift), negative for
    a left-faster one, ``math.inf`` when the ratio is exactly 1.
    """
    if speed_ratio == 1.0:
        return math.inf
    return wheel_base / (speed_ratio - 1.0)


def simulate_segment(length: float, params: MotionParams,
                     seed: Optional[int] = None) -> EncoderLog:
    """Drive one straight taped segment of ``length`` and log the encoders.

    ``seed`` overrides ``params.seed`` for the heading jitter draw.

    Raises MotionDivergenceError if the controller fails to make progress
    (the heading collapses onto +-90 degrees or the step budget runs out).
    """
    if not (length > 0.0 and math.isfinite(length)):
        raise ValueError("length must be positive and finite")
    rng = random.Random(params.seed if seed is None else seed)
    if params.alpha > 0.0:
        magnitude = params.alpha * rng.uniform(JITTER_LO, JITTER_HI)
        alpha0 = magnitude if rng.random() < 0.5 else -magnitude
    else:
        alpha0 = 0.0

    fl, fr = params.wheel_factors()
    k = params.inner_rot_const
    # Pivot charges: the turn itself plus straight creep, with the extra
    # rotation cost charged to the inner wheel of the turn.
    rp_l = params.pivot_arc_left + params.pivot_lin_left
    rp_r = params.pivot_arc_right + params.pivot_lin_right + k
    lp_l = params.pivot_arc_left + params.pivot_lin_left + k
    lp_r = params.pivot_arc_right + params.pivot_lin_right
    max_steps = int(40.0 * length / params.step) + 10000

    wl, wr, n_right, n_left, pivots, y_final, ok = _KERNEL.simulate_core(
        length, params.h, alpha0, params.theta, params.kappa, fl, fr,
        rp_l, rp_r, lp_l, lp_r, params.step, max_steps)
    if not ok:
        raise MotionDivergenceError(
            "line follower failed to traverse a %g cm segment "
            "(heading diverged or step budget exhausted)" % length)

    trajectory = ((0.0, 0.0),) + tuple(pivots) + ((length, y_final),)
    return EncoderLog(wl_total=wl, wr_total=wr, n_right=n_right,
                      n_left=n_left, true_length=length, trajectory=trajectory)


def simulate_free_arc(distance: float, params: MotionParams) -> EncoderLog:
    """Drive ``distance`` with no line to follow (dead reckoning).

    Without corrective pivots the robot follows the constant-curvature arc
    set by its wheel-speed mismatch; encoder totals are exact.
    """
    if not (distance > 0.0 and math.isfinite(distance)):
        raise ValueError("distance must be positive and finite")
    fl, fr = params.wheel_factors()
    return EncoderLog(wl_total=distance * fl, wr_total=distance * fr,
                      n_right=0, n_left=0, true_length=distance,
                      trajectory=None)
