"""Real-root finding for low-degree polynomials with guaranteed bracketing.

Roots of p are isolated by the critical points of p (found recursively from
p'), which split the Cauchy bound interval into monotonic pieces.  Each piece
holds at most one root, refined by Newton steps clipped to the bracket with
bisection as fallback.  This stays exact about root count for the modest
degrees produced here and never silently drops a real root the way generic
eigenvalue methods can when roots nearly collide.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial

PolyLike = Union[Polynomial, Sequence[float]]

# Leading coefficients below this fraction of the largest one are treated as
# degree-drop noise rather than genuine terms.
LEADING_TRIM_REL = 1e-12

ROOT_REFINE_TOL = 1e-12
ROOT_DEDUPE_TOL = 1e-9


class ZeroPolynomialError(ValueError):
    """Raised when asked for the roots of the identically zero polynomial."""


def coefficients(p: PolyLike) -> np.ndarray:
    """Ascending-degree coefficient array of ``p`` as floats."""
    if isinstance(p, Polynomial):
        return np.asarray(p.coef, dtype=float)
    coef = np.asarray(p, dtype=float)
    if coef.ndim != 1 or coef.size == 0:
        raise ValueError("coefficients must form a nonempty 1-d sequence")
    return coef


def _trimmed_monic(coef: np.ndarray) -> np.ndarray:
    if not np.all(np.isfinite(coef)):
        raise ValueError("polynomial coefficients must be finite")
    top = np.max(np.abs(coef))
    if top == 0.0:
        raise ZeroPolynomialError("zero polynomial has every value as a root")
    keep = coef.size
    while keep > 1 and abs(coef[keep - 1]) <= LEADING_TRIM_REL * top:
        keep -= 1
    coef = coef[:keep]
    return coef / coef[-1]


def _value_noise(coef: np.ndarray, x: float) -> float:
    # Running error bound for Horner evaluation, padded for the upstream
    # rounding already baked into the coefficients.
    mag = 0.0
    for c in coef[::-1]:
        mag = mag * abs(x) + abs(c)
    return 64.0 * coef.size * np.finfo(float).eps * mag


def _refine(coef: np.ndarray, dcoef: np.ndarray, lo: float, hi: float,
            f_lo: float) -> float:
    x = 0.5 * (lo + hi)
    for _ in range(200):
        fx = _horner(coef, x)
        if fx == 0.0:
            return x
        if (fx > 0.0) == (f_lo > 0.0):
            lo = x
        else:
            hi = x
        if hi - lo <= max(ROOT_REFINE_TOL, 4.0 * np.finfo(float).eps * abs(x)):
            break
        dx = _horner(dcoef, x)
        step = x - fx / dx if dx != 0.0 else lo - 1.0
        x = step if lo < step < hi else 0.5 * (lo + hi)
    return 0.5 * (lo + hi)


def _horner(coef: np.ndarray, x: float) -> float:
    acc = 0.0
    for c in coef[::-1]:
        acc = acc * x + c
    return acc


def _roots_monic(coef: np.ndarray) -> list[float]:
    degree = coef.size - 1
    if degree == 0:
        return []
    if degree == 1:
        return [-coef[0]]

    dcoef = coef[1:] * np.arange(1, coef.size)
    critical = _roots_monic(dcoef / dcoef[-1])

    bound = 1.0 + float(np.max(np.abs(coef[:-1])))
    points = [-bound] + sorted(x for x in critical if -bound < x < bound)
    points.append(bound)

    roots = []
    for x in points[1:-1]:
        # Tangential (even multiplicity) roots show up as near-zero values
        # at critical points and produce no sign change.
        if abs(_horner(coef, x)) <= _value_noise(coef, x):
            roots.append(x)
    for lo, hi in zip(points, points[1:]):
        f_lo = _horner(coef, lo)
        f_hi = _horner(coef, hi)
        if f_lo == 0.0 or f_hi == 0.0:
            continue  # critical-point test above already caught it
        if (f_lo > 0.0) != (f_hi > 0.0):
            roots.append(_refine(coef, dcoef, lo, hi, f_lo))
    return sorted(roots)


def real_roots(p: PolyLike, exclusions: Iterable[float] = (),
               exclusion_radius: float = 0.0) -> list[float]:
    """All real roots of ``p``, ascending, deduplicated within 1e-9.

    ``exclusions`` removes roots within ``exclusion_radius`` of the given
    values (used to keep knot poles out of candidate parameter lists).
    Raises ZeroPolynomialError for the identically zero polynomial.
    """
    coef = _trimmed_monic(coefficients(p))
    raw = _roots_monic(coef)

    roots: list[float] = []
    for x in raw:
        if roots and x - roots[-1] <= ROOT_DEDUPE_TOL:
            continue
        roots.append(x)
    banned = [float(e) for e in exclusions]
    return [x for x in roots
            if all(abs(x - e) > exclusion_radius for e in banned)]
