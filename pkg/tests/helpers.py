"""Small assertion helpers shared across test modules."""

import numpy as np


def assert_polygon_close(control, expected, tol):
    __tracebackhide__ = True
    control = np.asarray(control, dtype=float)
    expected = np.asarray(expected, dtype=float)
    assert control.shape == expected.shape, (
        f"polygon has shape {control.shape}, expected {expected.shape}")
    worst = np.max(np.abs(control - expected))
    assert worst <= tol, (
        f"polygon deviates by {worst:.3e} (tolerance {tol:.0e})\n"
        f"got:\n{np.round(control, 4)}\nexpected:\n{np.asarray(expected)}")


def assert_point_close(point, expected, tol):
    __tracebackhide__ = True
    point = np.asarray(point, dtype=float)
    expected = np.asarray(expected, dtype=float)
    worst = np.max(np.abs(point - expected))
    assert worst <= tol, (
        f"point {np.round(point, 6)} deviates from {expected} "
        f"by {worst:.3e} (tolerance {tol:.0e})")
