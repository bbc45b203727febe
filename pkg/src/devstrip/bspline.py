"""B-spline curves in polar (blossom) form.

Knot lists follow the polar-form indexing convention: a curve of degree
``n`` with control points ``c_0..c_L`` carries knots ``u_0..u_K`` with
``K = L + n - 1``, so that every control point is a blossom value of
consecutive knots, ``c_i = c[u_i, ..., u_{i+n-1}]``.  The curve is
parametrised exactly on ``[u_{n-1}, u_L]``.  Constructors also accept the
padded convention with one extra knot at each end (common in NURBS
libraries); the two extreme knots never enter a blossom window and are
dropped.

Everything in this module is a pure function of immutable values: curves
and knot vectors never mutate, and all operations return new objects.
"""

from __future__ import annotations

import bisect
from typing import Callable, Sequence

import numpy as np

# Knots closer than this fraction of the domain length are one knot.
KNOT_EQ_REL = 1e-12

# A point-valued multiaffine form: called with the argument tuple and a
# parameter value that identifies the piece the form is evaluated on.
BlossomForm = Callable[[Sequence[float], float], np.ndarray]


def as_point3(value) -> np.ndarray:
    """Coerce to a float64 array of shape (3,), requiring finite entries."""
    p = np.asarray(value, dtype=float)
    if p.shape != (3,):
        raise ValueError(f"expected a 3-component point, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ValueError(f"point has non-finite components: {p}")
    return p


def as_points(values) -> np.ndarray:
    """Coerce to a float64 array of shape (m, 3) of finite points."""
    pts = np.asarray(values, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValueError(f"expected an (m, 3) array of points, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("control points contain non-finite components")
    return pts


class KnotVector(Sequence):
    """Nondecreasing knot list with degree and piece bookkeeping.

    Validity requires: nondecreasing entries, a positive-length domain,
    no knot multiplicity above the degree, and nondegenerate first and
    last domain spans (otherwise boundary control points would have no
    influence on the curve).
    """

    __slots__ = ("_knots", "_degree", "_tol", "_spans", "_starts")

    def __init__(self, knots: Sequence[float], degree: int):
        if not isinstance(degree, int) or degree < 1:
            raise ValueError(f"degree must be a positive integer, got {degree!r}")
        values = tuple(float(u) for u in knots)
        if len(values) < 2 * degree:
            raise ValueError(
                f"need at least {2 * degree} knots for degree {degree}, got {len(values)}"
            )
        if not all(np.isfinite(values)):
            raise ValueError("knots contain non-finite values")
        for i in range(len(values) - 1):
            if values[i] > values[i + 1]:
                raise ValueError(
                    f"knots must be nondecreasing: knot {i + 1} = {values[i + 1]} "
                    f"is below knot {i} = {values[i]}"
                )
        n = degree
        last = len(values) - n  # index L: domain is [u_{n-1}, u_L]
        span_of_domain = values[last] - values[n - 1]
        if not span_of_domain > 0.0:
            raise ValueError("domain interval has zero length")
        tol = KNOT_EQ_REL * span_of_domain

        # multiplicity above the degree would disconnect the curve
        run_start = 0
        for i in range(1, len(values) + 1):
            if i == len(values) or values[i] - values[run_start] > tol:
                if i - run_start > n:
                    raise ValueError(
                        f"knot value {values[run_start]} has multiplicity "
                        f"{i - run_start}, above the degree {n}"
                    )
                run_start = i

        if values[n] - values[n - 1] <= tol:
            raise ValueError("first domain span is degenerate")
        if values[last] - values[last - 1] <= tol:
            raise ValueError("last domain span is degenerate")

        spans = tuple(
            j for j in range(n - 1, last) if values[j + 1] - values[j] > tol
        )
        self._knots = values
        self._degree = n
        self._tol = tol
        self._spans = spans
        self._starts = [values[j] for j in spans]

    # -- sequence protocol over the raw knot values --------------------

    def __len__(self) -> int:
        return len(self._knots)

    def __getitem__(self, i):
        return self._knots[i]

    def __iter__(self):
        return iter(self._knots)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KnotVector):
            return NotImplemented
        return self._degree == other._degree and self._knots == other._knots

    def __hash__(self) -> int:
        return hash((self._degree, self._knots))

    def __repr__(self) -> str:
        return f"KnotVector({list(self._knots)}, degree={self._degree})"

    # -- bookkeeping ----------------------------------------------------

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def pieces(self) -> int:
        """Number of nondegenerate spans inside the domain."""
        return len(self._spans)

    @property
    def control_count(self) -> int:
        return len(self._knots) - self._degree + 1

    @property
    def domain(self) -> tuple[float, float]:
        n = self._degree
        return self._knots[n - 1], self._knots[len(self._knots) - n]

    @property
    def knot_tolerance(self) -> float:
        return self._tol

    def piece_interval(self, piece: int) -> tuple[float, float]:
        j = self._span_index(piece)
        return self._knots[j], self._knots[j + 1]

    def piece_for(self, u: float) -> int:
        """Piece ordinal containing u; right-continuous at inner knots."""
        a, b = self.domain
        if not a <= u <= b:
            raise ValueError(f"parameter {u} outside the domain [{a}, {b}]")
        return max(bisect.bisect_right(self._starts, u) - 1, 0)

    def multiplicity(self, value: float) -> int:
        return sum(1 for u in self._knots if abs(u - value) <= self._tol)

    def inner_values(self) -> tuple[float, ...]:
        """Distinct knot values inside the domain, ascending."""
        n = self._degree
        last = len(self._knots) - n
        distinct: list[float] = []
        for u in self._knots[n - 1 : last + 1]:
            if not distinct or u - distinct[-1] > self._tol:
                distinct.append(u)
        return tuple(distinct)

    def _span_index(self, piece: int) -> int:
        if not 0 <= piece < len(self._spans):
            raise ValueError(
                f"piece index {piece} out of range for {len(self._spans)} pieces"
            )
        return self._spans[piece]

    # -- refinement -----------------------------------------------------

    def insert(self, u_new: float) -> "KnotVector":
        """Knot list with one copy of u_new added (strictly inside the domain)."""
        a, b = self.domain
        u_new = float(u_new)
        if not (a + self._tol < u_new < b - self._tol):
            raise ValueError(f"inserted knot {u_new} is not strictly inside [{a}, {b}]")
        if self.multiplicity(u_new) >= self._degree:
            raise ValueError(
                f"inserting {u_new} would raise its multiplicity above the degree"
            )
        new = list(self._knots)
        bisect.insort(new, u_new)
        return KnotVector(new, self._degree)

    def elevated(self) -> "KnotVector":
        """Knot list for the degree-elevated curve.

        Every distinct knot value inside the domain gains one copy;
        auxiliary knots outside the domain are untouched.
        """
        new = list(self._knots)
        for value in self.inner_values():
            bisect.insort(new, value)
        return KnotVector(new, self._degree + 1)


class BSplineCurve:
    """Degree-n spline curve in 3-space over a shared KnotVector."""

    __slots__ = ("_knots", "_control")

    def __init__(self, knots, control, degree: int | None = None):
        pts = as_points(control)
        if isinstance(knots, KnotVector):
            if degree is not None and degree != knots.degree:
                raise ValueError(
                    f"degree {degree} conflicts with the knot vector's {knots.degree}"
                )
            kv = knots
            if kv.control_count != len(pts):
                raise ValueError(
                    f"knot vector implies {kv.control_count} control points, "
                    f"got {len(pts)}"
                )
        else:
            if degree is None:
                raise ValueError("degree is required when knots is a plain sequence")
            values = list(knots)
            if len(values) == len(pts) + degree - 1:
                kv = KnotVector(values, degree)
            elif len(values) == len(pts) + degree + 1:
                # padded convention: the extreme knots enter no blossom window
                kv = KnotVector(values[1:-1], degree)
            else:
                raise ValueError(
                    f"{len(values)} knots do not match {len(pts)} control points "
                    f"of degree {degree}: expected {len(pts) + degree - 1} "
                    f"(or {len(pts) + degree + 1} padded)"
                )
        pts = pts.copy()
        pts.flags.writeable = False
        self._knots = kv
        self._control = pts

    @property
    def knots(self) -> KnotVector:
        return self._knots

    @property
    def control(self) -> np.ndarray:
        return self._control

    @property
    def degree(self) -> int:
        return self._knots.degree

    @property
    def pieces(self) -> int:
        return self._knots.pieces

    @property
    def domain(self) -> tuple[float, float]:
        return self._knots.domain

    def __repr__(self) -> str:
        return (
            f"BSplineCurve(degree={self.degree}, pieces={self.pieces}, "
            f"control_points={len(self._control)})"
        )

    # -- evaluation -------------------------------------------------------

    def blossom_eval(self, piece: int, args: Sequence[float]) -> np.ndarray:
        """Polar form c[v_1..v_n] of the polynomial piece.

        The recursion pulls one argument in per stage, replacing the knot
        window of the selected piece; arguments need not lie inside the
        piece (the polar form is a polynomial in each slot).
        """
        n = self.degree
        values = [float(v) for v in args]
        if len(values) != n:
            raise ValueError(f"blossom of a degree-{n} curve takes {n} arguments")
        span = self._knots._span_index(piece)
        return self._blossom_on_span(span, values)

    def _blossom_on_span(self, span: int, values: list[float]) -> np.ndarray:
        n = self.degree
        u = self._knots
        pts = self._control[span - n + 1 : span + 2].astype(float)
        for r in range(1, n + 1):
            v = values[r - 1]
            for i in range(n, r - 1, -1):
                g = span - n + 1 + i  # global control index of pts[i]
                lo = u[g - 1]
                hi = u[g + n - r]
                w = (v - lo) / (hi - lo)
                pts[i] = (1.0 - w) * pts[i - 1] + w * pts[i]
        return pts[n]

    def evaluate(self, u: float) -> np.ndarray:
        """Curve point c(u); the diagonal of the blossom."""
        piece = self._knots.piece_for(u)
        return self.blossom_eval(piece, [u] * self.degree)

    def derivative_at(self, u: float) -> np.ndarray:
        """Velocity c'(u), one-sided on the piece containing u."""
        n = self.degree
        piece = self._knots.piece_for(u)
        t0, t1 = self._knots.piece_interval(piece)
        head = [float(u)] * (n - 1)
        upper = self.blossom_eval(piece, head + [t1])
        lower = self.blossom_eval(piece, head + [t0])
        return n * (upper - lower) / (t1 - t0)

    # -- polar forms for re-expressing the curve over other knot lists ----

    def polar_form(self) -> BlossomForm:
        """The curve's own blossom as a (args, u_ref) callable."""

        def form(args: Sequence[float], u_ref: float) -> np.ndarray:
            piece = self._knots.piece_for(u_ref)
            return self.blossom_eval(piece, args)

        return form

    def elevated_polar_form(self) -> BlossomForm:
        """Blossom of the same point set viewed as a degree n+1 curve.

        The (n+1)-ary form is the symmetrised average of the n-ary one
        over all ways of dropping one argument.
        """
        n = self.degree

        def form(args: Sequence[float], u_ref: float) -> np.ndarray:
            values = [float(v) for v in args]
            if len(values) != n + 1:
                raise ValueError(f"elevated form takes {n + 1} arguments")
            piece = self._knots.piece_for(u_ref)
            total = np.zeros(3)
            for k in range(n + 1):
                total += self.blossom_eval(piece, values[:k] + values[k + 1 :])
            return total / (n + 1)

        return form

    # -- refinement ---------------------------------------------------------

    def insert_knot(self, u_new: float) -> "BSplineCurve":
        """Same point set with one more knot and one more control point."""
        new_knots = self._knots.insert(u_new)
        return BSplineCurve(new_knots, control_from_blossom(self.polar_form(), new_knots))

    def elevate_degree(self) -> "BSplineCurve":
        """Same point set as a curve of degree n+1.

        Every distinct inner knot value gains one copy in the knot list.
        """
        new_knots = self._knots.elevated()
        return BSplineCurve(
            new_knots, control_from_blossom(self.elevated_polar_form(), new_knots)
        )


def control_from_blossom(form: BlossomForm, knots: KnotVector) -> np.ndarray:
    """Control polygon of the curve whose blossom is `form` over `knots`.

    Vertex i is the form at the knot window u_i..u_{i+m-1} (m the degree
    of `knots`), evaluated on a nondegenerate span J with i-1 <= J <= i+m-1
    so that the window is valid for that piece's polar form.  Any valid
    candidate gives the same value; the middle one is used.
    """
    m = knots.degree
    pts = np.empty((knots.control_count, 3))
    for i in range(knots.control_count):
        window = knots[i : i + m]
        candidates = [j for j in knots._spans if i - 1 <= j <= i + m - 1]
        if not candidates:
            raise RuntimeError(f"no valid piece for knot window {i} (malformed knots)")
        j = candidates[len(candidates) // 2]
        u_ref = 0.5 * (knots[j] + knots[j + 1])
        pts[i] = as_point3(form(window, u_ref))
    return pts
