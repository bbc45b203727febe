"""Independent developability checks.

Everything here judges a ruled patch purely by sampling curve positions and
derivatives; none of it reads strip parameters or the polygon recursion, so
these routines can serve as oracles for the constructive code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bspline import BSplineCurve
from .strip import RuledPatch, cell_planarity_residual

# Rulings shorter than this fraction of the patch scale are collapsed points
# (apex of a triangular patch); the tangent-plane test is 0/0 there.
COLLAPSED_RULING_REL = 1e-9

NORM_FLOOR_REL = 1e-12

# Samples sit this fraction of a piece inward from its ends, so one-sided
# derivative jumps at inner knots never decide the verdict.
KNOT_SAMPLE_OFFSET_REL = 1e-9


class DevelopabilityResult(NamedTuple):
    max_residual: float
    argmax_u: float


@dataclass(frozen=True)
class DevelopabilityScan:
    """Full sampling record behind a developability verdict."""

    max_residual: float
    argmax_u: float
    samples: int
    skipped: int

    @property
    def result(self) -> DevelopabilityResult:
        return DevelopabilityResult(self.max_residual, self.argmax_u)


def _patch_scale(patch: RuledPatch) -> float:
    mags = [np.max(np.linalg.norm(curve.control, axis=1))
            for curve in (patch.base, patch.opposite)]
    return max(1.0, *mags)


def developability_scan(patch: RuledPatch,
                        samples_per_piece: int = 100) -> DevelopabilityScan:
    """Sample the normalized tangent-plane determinant over every piece.

    At each parameter the residual is |det(c', d', d−c)| divided by the
    product of the three factor norms; a ruled surface is developable exactly
    when the plane spanned by the ruling and either tangent contains the
    other tangent, which makes the determinant vanish.
    """
    if samples_per_piece < 2:
        raise ValueError("samples_per_piece must be at least 2")
    base, opp = patch.base, patch.opposite
    scale = _patch_scale(patch)
    floor = NORM_FLOOR_REL * scale

    worst = 0.0
    arg = patch.domain[0]
    taken = 0
    skipped = 0
    for piece in range(base.pieces):
        lo, hi = base.knots.piece_interval(piece)
        off = KNOT_SAMPLE_OFFSET_REL * (hi - lo)
        for u in np.linspace(lo + off, hi - off, samples_per_piece):
            ruling = opp.evaluate(u) - base.evaluate(u)
            r_len = np.linalg.norm(ruling)
            if r_len < COLLAPSED_RULING_REL * scale:
                skipped += 1
                continue
            cv = base.derivative_at(u)
            dv = opp.derivative_at(u)
            det = np.linalg.det(np.column_stack((cv, dv, ruling)))
            denom = (max(np.linalg.norm(cv), floor)
                     * max(np.linalg.norm(dv), floor)
                     * max(r_len, floor))
            taken += 1
            residual = abs(det) / denom
            if residual > worst:
                worst = residual
                arg = float(u)
    return DevelopabilityScan(worst, arg, taken, skipped)


def developability_residual(patch: RuledPatch,
                            samples_per_piece: int = 100
                            ) -> DevelopabilityResult:
    """Worst sampled residual and the parameter where it occurs."""
    return developability_scan(patch, samples_per_piece).result


def curves_pointwise_equal(p: BSplineCurve, q: BSplineCurve,
                           samples: int = 200) -> float:
    """Max Euclidean distance between two curves over uniform samples.

    The curves may have different degrees and knots but must share a domain;
    this is the oracle for point-set-preserving operations."""
    if samples < 2:
        raise ValueError("samples must be at least 2")
    (pa, pb), (qa, qb) = p.domain, q.domain
    span = max(pb - pa, qb - qa)
    if abs(pa - qa) > 1e-9 * span or abs(pb - qb) > 1e-9 * span:
        raise ValueError(
            "curves are parameterized over different domains: "
            f"[{pa}, {pb}] vs [{qa}, {qb}]")
    worst = 0.0
    for u in np.linspace(pa, pb, samples):
        # Clamp against sub-ulp domain mismatch at the far endpoint.
        qu = q.evaluate(min(max(u, qa), qb))
        worst = max(worst, float(np.linalg.norm(p.evaluate(u) - qu)))
    return worst


def planarity_report(strip: RuledPatch) -> list[float]:
    """Planarity residual of every control net cell, in order."""
    c = strip.base.control
    d = strip.opposite.control
    return [cell_planarity_residual((c[i], c[i + 1], d[i], d[i + 1]))
            for i in range(len(c) - 1)]
