# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integration kernel for the line-follower forward model.

Twin of `_kernel_py.py`: same loop, same arithmetic, same order. The build
disables FP contraction so results stay bit-identical to the pure backend.
"""

from libc.math cimport cos, sin

BACKEND = "compiled"


def simulate_core(double length, double h, double alpha0, double theta,
                  double kappa, double fl, double fr,
                  double rp_l, double rp_r, double lp_l, double lp_r,
                  double step, long max_steps):
    cdef double x = 0.0
    cdef double y = 0.0
    cdef double phi = alpha0
    cdef double wl = 0.0
    cdef double wr = 0.0
    cdef long n_right = 0
    cdef long n_left = 0
    cdef long steps = 0
    cdef double c, remaining, d
    pivots = []
    while x < length:
        if steps >= max_steps:
            return wl, wr, n_right, n_left, pivots, y, False
        steps += 1
        c = cos(phi)
        if c <= 1e-12:
            return wl, wr, n_right, n_left, pivots, y, False
        remaining = length - x
        if step * c >= remaining:
            d = remaining / c
            x = length
            y += d * sin(phi)
            wl += d * fl
            wr += d * fr
            break
        d = step
        x += d * c
        y += d * sin(phi)
        wl += d * fl
        wr += d * fr
        phi += kappa * d
        if y >= h and phi > 0.0:
            phi = -theta
            wl += rp_l
            wr += rp_r
            n_right += 1
            pivots.append((x, y))
        elif y <= -h and phi < 0.0:
            phi = theta
            wl += lp_l
            wr += lp_r
            n_left += 1
            pivots.append((x, y))
    return wl, wr, n_right, n_left, pivots, y, True
