"""Forward motion model: line following, encoder totals, pivots, free arcs."""

import math
import statistics

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linemaze.errors import MotionDivergenceError
from linemaze.motion_sim import (EncoderLog, MotionParams, radius_from_ratio,
                                 simulate_free_arc, simulate_segment)


def polyline_length(points):
    return sum(math.hypot(b[0] - a[0], b[1] - a[1])
               for a, b in zip(points, points[1:]))


# ------------------------------------------------------------ exact cases

def test_perfect_robot_rolls_exactly_the_segment():
    p = MotionParams(alpha=0.0, speed_ratio=1.0)
    log = simulate_segment(10.0, p)
    assert log.wl_total == 10.0
    assert log.wr_total == 10.0
    assert log.turn_count == 0
    assert log.trajectory == ((0.0, 0.0), (10.0, 0.0))
    assert log.true_length == 10.0


def test_kernel_wheel_accounting_without_pivot_charges():
    # With pivot charges zeroed the wheel totals are exactly the per-wheel
    # factors times the midpoint path, so their ratio equals fr/fl.
    p = MotionParams(alpha=0.0, speed_ratio=2.5,
                     pivot_arc_left=0.0, pivot_lin_left=0.0,
                     pivot_arc_right=0.0, pivot_lin_right=0.0,
                     inner_rot_const=0.0)
    fl, fr = p.wheel_factors()
    log = simulate_segment(10.0, p)
    assert log.turn_count > 0
    assert log.wr_total / log.wl_total == pytest.approx(fr / fl, rel=1e-12)


def test_radius_from_ratio():
    assert radius_from_ratio(1.1, 10.0) == pytest.approx(100.0, rel=1e-12)
    assert radius_from_ratio(1.2, 12.0) == pytest.approx(60.0, rel=1e-12)
    assert radius_from_ratio(1.0, 10.0) == math.inf
    # Left-faster robots curve the other way: signed, negative radius.
    assert radius_from_ratio(0.9, 10.0) == pytest.approx(-100.0, rel=1e-12)


def test_kappa_and_wheel_factors():
    p = MotionParams()
    rho = p.speed_ratio
    assert p.kappa == pytest.approx(
        2.0 * (rho - 1.0) / (p.wheel_base * (rho + 1.0)), rel=1e-15)
    fl, fr = p.wheel_factors()
    assert fr / fl == pytest.approx(rho, rel=1e-12)
    assert fl + fr == pytest.approx(2.0, rel=1e-15)
    assert MotionParams(speed_ratio=1.0).kappa == 0.0


# ------------------------------------------------------ noisy wheel totals

def test_wheel_readout_overestimates_at_defaults():
    p = MotionParams()
    log = simulate_segment(10.0, p, seed=0)
    assert 10.1 <= log.wl_total <= 10.4
    assert 10.1 <= log.wr_total <= 10.4

    wls = [simulate_segment(10.0, p, seed=s).wl_total for s in range(100)]
    assert 10.1 <= statistics.median(wls) <= 10.4
    # Every draw overestimates: zigzag plus pivot charges only add length.
    assert all(w > 10.0 for w in wls)


def test_wheel_readout_overestimates_with_matched_wheels():
    p = MotionParams(speed_ratio=1.0)
    for s in range(100):
        log = simulate_segment(10.0, p, seed=s)
        assert log.wl_total > 10.0
        assert log.wr_total > 10.0


def test_zigzag_path_length_matches_sawtooth_model():
    # Matched wheels and a thin line band: the midpoint path is a sawtooth
    # of straight legs tilted by the pivot exit angle, so the polyline is
    # length/cos(theta) long.
    p = MotionParams(h=0.02, alpha=math.radians(10.0), theta=math.radians(10.0),
                     speed_ratio=1.0)
    log = simulate_segment(10.0, p, seed=0)
    expected = 10.0 / math.cos(math.radians(10.0))
    assert polyline_length(log.trajectory) == pytest.approx(expected, rel=1e-2)
    assert log.turn_count > 30


def test_endpoint_lands_on_the_stop_marker():
    p = MotionParams()
    for s in range(50):
        log = simulate_segment(14.0, p, seed=s)
        x_end, y_end = log.trajectory[-1]
        assert x_end == 14.0
        assert abs(y_end) <= p.h + p.step


def test_trajectory_shape():
    p = MotionParams()
    log = simulate_segment(10.0, p, seed=3)
    assert log.trajectory[0] == (0.0, 0.0)
    assert log.trajectory[-1][0] == 10.0
    assert len(log.trajectory) == log.turn_count + 2
    # Pivot points sit on the band edges.
    for x, y in log.trajectory[1:-1]:
        assert 0.0 < x < 10.0
        assert abs(y) == pytest.approx(p.h, abs=p.step)


def test_all_turns_on_one_side_when_only_drift_bends_the_path():
    # No initial tilt, strong wheel mismatch: the robot always drifts the
    # same way, so every pivot is a right turn.
    p = MotionParams(alpha=0.0, speed_ratio=2.5)
    log = simulate_segment(10.0, p)
    assert log.n_left == 0
    assert log.n_right > 0
    assert log.turn_count == abs(log.n_right - log.n_left)


def test_determinism_and_seed_defaulting():
    p = MotionParams(seed=7)
    a = simulate_segment(10.0, p)
    b = simulate_segment(10.0, p)
    c = simulate_segment(10.0, p, seed=7)
    assert a == b == c
    d = simulate_segment(10.0, p, seed=8)
    assert d != a


def test_ideal_mode_ignores_seed():
    p = MotionParams(alpha=0.0, speed_ratio=1.0)
    assert simulate_segment(10.0, p, seed=1) == simulate_segment(10.0, p, seed=2)


# ---------------------------------------------------------------- free arc

def test_free_arc_exact_ratio():
    p = MotionParams(speed_ratio=1.3)
    log = simulate_free_arc(25.0, p)
    assert log.wr_total / log.wl_total == pytest.approx(1.3, rel=1e-12)
    assert log.trajectory is None
    assert log.turn_count == 0
    assert log.true_length == 25.0


def test_free_arc_matched_wheels():
    p = MotionParams(speed_ratio=1.0)
    log = simulate_free_arc(25.0, p)
    assert log.wl_total == 25.0
    assert log.wr_total == 25.0


# ------------------------------------------------------------------ errors

def test_divergence_when_band_is_wider_than_the_drift_radius():
    # The band never recaptures the robot: the wheel mismatch curls the
    # heading past 90 degrees long before any pivot can fire.
    p = MotionParams(h=200.0, alpha=0.0, speed_ratio=1.1)
    with pytest.raises(MotionDivergenceError, match="failed to traverse"):
        simulate_segment(200.0, p)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_bad_length_rejected(bad):
    with pytest.raises(ValueError, match="length must be positive"):
        simulate_segment(bad, MotionParams())


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_bad_free_arc_distance_rejected(bad):
    with pytest.raises(ValueError, match="distance must be positive"):
        simulate_free_arc(bad, MotionParams())


@pytest.mark.parametrize("kwargs,msg", [
    (dict(h=0.0), "h must be positive"),
    (dict(h=math.inf), "h must be positive"),
    (dict(alpha=-0.1), "alpha must lie"),
    (dict(alpha=math.pi / 2), "alpha must lie"),
    (dict(theta=0.0), "theta must lie"),
    (dict(theta=math.pi / 2), "theta must lie"),
    (dict(speed_ratio=0.0), "speed_ratio must be positive"),
    (dict(wheel_base=0.0), "wheel_base must be positive"),
    (dict(pivot_arc_left=-0.1), "pivot_arc_left must be non-negative"),
    (dict(pivot_lin_right=-0.1), "pivot_lin_right must be non-negative"),
    (dict(inner_rot_const=-0.1), "inner_rot_const must be non-negative"),
    (dict(step=0.0), "step must be positive"),
])
def test_bad_params_rejected(kwargs, msg):
    with pytest.raises(ValueError, match=msg):
        MotionParams(**kwargs)


# ------------------------------------------------------------- properties

@settings(max_examples=60, deadline=None)
@given(length=st.floats(min_value=0.5, max_value=30.0,
                        allow_nan=False, allow_infinity=False),
       seed=st.integers(min_value=0, max_value=2**31 - 1))
def test_segment_simulation_invariants(length, seed):
    p = MotionParams()
    log = simulate_segment(length, p, seed=seed)
    assert isinstance(log, EncoderLog)
    assert log.wl_total > 0.0 and log.wr_total > 0.0
    assert log.n_right >= 0 and log.n_left >= 0
    assert log.trajectory[0] == (0.0, 0.0)
    assert log.trajectory[-1][0] == length
    assert abs(log.trajectory[-1][1]) <= p.h + p.step
    assert log == simulate_segment(length, p, seed=seed)
