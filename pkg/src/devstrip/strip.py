"""Ruled patches and the constant-parameter family of developable strips.

A strip couples two curves c(u), d(u) over one knot vector through two
constants (lambda_star, m_star) satisfying, for every net cell i,

    (u_{i+n} - lambda_star) c_i + (lambda_star - u_i) c_{i+1}
  = (u_{i+n} - m_star)     d_i + (m_star - u_i)      d_{i+1},

which forces every cell of the net to be planar and the swept ruled
surface to be developable.
"""

from __future__ import annotations

import numpy as np

from .bspline import BSplineCurve, as_point3

# Strips are rejected when the control relation defect exceeds this.
CONTROL_RELATION_TOL = 1e-9
CELL_PLANARITY_TOL = 1e-9
# m_star closer than this fraction of the domain to a knot is a pole.
POLE_GUARD_REL = 1e-6


class RuledPatch:
    """Two curves over one knot vector, linked by straight rulings."""

    __slots__ = ("_base", "_opposite")

    def __init__(self, base: BSplineCurve, opposite: BSplineCurve):
        if base.knots != opposite.knots:
            raise ValueError("boundary curves must share one knot vector")
        self._base = base
        self._opposite = opposite

    @property
    def base(self) -> BSplineCurve:
        return self._base

    @property
    def opposite(self) -> BSplineCurve:
        return self._opposite

    @property
    def knots(self):
        return self._base.knots

    @property
    def domain(self) -> tuple[float, float]:
        return self._base.domain

    def ruled_eval(self, u: float, v: float) -> np.ndarray:
        """Point b(u, v) = (1 - v) c(u) + v d(u).

        v outside [0, 1] extends the patch along the ruling lines.
        """
        v = float(v)
        return (1.0 - v) * self._base.evaluate(u) + v * self._opposite.evaluate(u)

    def ruling_at(self, u: float) -> np.ndarray:
        """Director vector d(u) - c(u) of the ruling at u."""
        return self._opposite.evaluate(u) - self._base.evaluate(u)


class DevelopableStrip(RuledPatch):
    """A ruled patch whose net satisfies the constant-parameter relation.

    The constructor validates the relation and cell planarity eagerly,
    naming the worst cell, since the solvers downstream rely on it.
    """

    __slots__ = ("_lambda_star", "_m_star")

    def __init__(
        self,
        base: BSplineCurve,
        opposite: BSplineCurve,
        lambda_star: float,
        m_star: float,
    ):
        super().__init__(base, opposite)
        self._lambda_star = float(lambda_star)
        self._m_star = float(m_star)
        residuals = control_relation_residuals(base, opposite, lambda_star, m_star)
        worst = int(np.argmax(residuals))
        if residuals[worst] > CONTROL_RELATION_TOL:
            raise ValueError(
                f"control relation fails at cell {worst}: residual "
                f"{residuals[worst]:.3e} above {CONTROL_RELATION_TOL:.0e}"
            )
        planar = [
            cell_planarity_residual(
                (base.control[i], base.control[i + 1],
                 opposite.control[i], opposite.control[i + 1])
            )
            for i in range(len(base.control) - 1)
        ]
        worst = int(np.argmax(planar))
        if planar[worst] > CELL_PLANARITY_TOL:
            raise ValueError(
                f"net cell {worst} is not planar: residual {planar[worst]:.3e}"
            )

    @property
    def lambda_star(self) -> float:
        return self._lambda_star

    @property
    def m_star(self) -> float:
        return self._m_star

    def __repr__(self) -> str:
        return (
            f"DevelopableStrip(degree={self.base.degree}, "
            f"pieces={self.base.pieces}, lambda_star={self._lambda_star}, "
            f"m_star={self._m_star})"
        )


def propagate_polygon(
    c: BSplineCurve, d0, lambda_star: float, m_star: float
) -> BSplineCurve:
    """Opposite polygon from the forward recursion of the control relation.

    Solving the cell relation for d_{i+1}:

        d_{i+1} = ((u_{i+n} - lambda_star) c_i + (lambda_star - u_i) c_{i+1}
                   + (m_star - u_{i+n}) d_i) / (m_star - u_i)

    m_star must stay away from the knots u_0..u_{L-1} appearing in the
    denominators.
    """
    u = c.knots
    n = c.degree
    control = c.control
    count = len(control)
    a, b = c.domain
    guard = POLE_GUARD_REL * (b - a)
    lam = float(lambda_star)
    m = float(m_star)
    for i in range(count - 1):
        if abs(m - u[i]) <= guard:
            raise ValueError(
                f"m_star = {m} is within the pole guard of knot {i} = {u[i]}"
            )
    d = np.empty_like(control)
    d[0] = as_point3(d0)
    for i in range(count - 1):
        numerator = (
            (u[i + n] - lam) * control[i]
            + (lam - u[i]) * control[i + 1]
            + (m - u[i + n]) * d[i]
        )
        d[i + 1] = numerator / (m - u[i])
    return BSplineCurve(u, d)


def control_relation_residuals(
    base: BSplineCurve, opposite: BSplineCurve, lambda_star: float, m_star: float
) -> np.ndarray:
    """Per-cell normalized defect of the control relation.

    The defect of cell i is divided by the largest of the four term norms
    (floored at 1e-12 of the polygon scale), so the result is unit-free.
    """
    if base.knots != opposite.knots:
        raise ValueError("boundary curves must share one knot vector")
    u = base.knots
    n = base.degree
    c = base.control
    d = opposite.control
    lam = float(lambda_star)
    m = float(m_star)
    scale = max(
        1.0,
        float(np.max(np.linalg.norm(c, axis=1))),
        float(np.max(np.linalg.norm(d, axis=1))),
    )
    floor = 1e-12 * scale
    residuals = np.empty(len(c) - 1)
    for i in range(len(c) - 1):
        terms = (
            (u[i + n] - lam) * c[i],
            (lam - u[i]) * c[i + 1],
            -(u[i + n] - m) * d[i],
            -(m - u[i]) * d[i + 1],
        )
        defect = np.linalg.norm(terms[0] + terms[1] + terms[2] + terms[3])
        denom = max(max(np.linalg.norm(t) for t in terms), floor)
        residuals[i] = defect / denom
    return residuals


def verify_control_relation(strip: DevelopableStrip) -> float:
    """Max normalized defect of the control relation over all cells."""
    residuals = control_relation_residuals(
        strip.base, strip.opposite, strip.lambda_star, strip.m_star
    )
    return float(np.max(residuals))


def cell_planarity_residual(cell) -> float:
    """Dimensionless coplanarity defect of one net cell.

    The cell is the point quadruple (c_i, c_{i+1}, d_i, d_{i+1}).  Returns
    |det(c_{i+1} - c_i, d_i - c_i, d_{i+1} - c_i)| divided by the product
    of the three argument norms (each floored at 1e-12 of the cell scale);
    zero exactly when the four points are coplanar.
    """
    ci, cj, di, dj = (as_point3(p) for p in cell)
    e1 = cj - ci
    e2 = di - ci
    e3 = dj - ci
    det = float(np.linalg.det(np.column_stack((e1, e2, e3))))
    scale = max(1.0, max(np.linalg.norm(p) for p in (ci, cj, di, dj)))
    floor = 1e-12 * scale
    denom = 1.0
    for e in (e1, e2, e3):
        denom *= max(float(np.linalg.norm(e)), floor)
    return abs(det) / denom
