"""Sampling-based checks used as oracles for the constructive code."""

import numpy as np
import pytest

from devstrip import (
    BSplineCurve,
    DevelopabilityResult,
    RuledPatch,
    curves_pointwise_equal,
    developability_residual,
    developability_scan,
    planarity_report,
    solve_problem1,
    solve_problem2,
    solve_problem3,
)

import reference as ref
from helpers import assert_point_close


class TestDevelopabilityScan:

    def test_quad_strip_is_developable(self, quad_strip):
        scan = developability_scan(quad_strip)
        assert scan.max_residual <= 1e-12
        assert scan.samples == 100
        assert scan.skipped == 0
        assert scan.result == DevelopabilityResult(scan.max_residual,
                                                   scan.argmax_u)

    def test_result_tuple_unpacks(self, quad_strip):
        worst, arg = developability_residual(quad_strip, samples_per_piece=7)
        assert worst <= 1e-12
        assert 0.0 <= arg <= 1.0

    def test_sample_count_covers_every_piece(self, cubic_curve):
        sol = solve_problem1(cubic_curve, ref.CUBIC_V, ref.CUBIC_W,
                             d0=ref.CUBIC_D0)
        scan = developability_scan(sol.strip, samples_per_piece=40)
        assert scan.samples == 40 * cubic_curve.pieces
        assert scan.max_residual <= 1e-8

    def test_perturbed_strip_is_flagged(self, quad_strip):
        d = np.array(quad_strip.opposite.control)
        d[1] += (0.0, 0.0, 0.1)
        bent = RuledPatch(quad_strip.base,
                          BSplineCurve(quad_strip.knots, d))
        worst, arg = developability_residual(bent)
        assert worst > 1e-3
        assert quad_strip.domain[0] < arg < quad_strip.domain[1]

    def test_argmax_points_at_the_worst_parameter(self, quad_strip):
        d = np.array(quad_strip.opposite.control)
        d[1] += (0.0, 0.0, 0.05)
        bent = RuledPatch(quad_strip.base,
                          BSplineCurve(quad_strip.knots, d))
        worst, arg = developability_residual(bent, samples_per_piece=400)
        c = bent.base
        dd = bent.opposite
        ruling = dd.evaluate(arg) - c.evaluate(arg)
        det = abs(np.linalg.det(np.column_stack(
            (c.derivative_at(arg), dd.derivative_at(arg), ruling))))
        recomputed = det / (np.linalg.norm(c.derivative_at(arg))
                            * np.linalg.norm(dd.derivative_at(arg))
                            * np.linalg.norm(ruling))
        assert recomputed == pytest.approx(worst, rel=1e-12)

    def test_too_few_samples_rejected(self, quad_strip):
        with pytest.raises(ValueError, match="at least 2"):
            developability_scan(quad_strip, samples_per_piece=1)

    def test_apex_samples_are_skipped_not_failed(self, cubic_curve):
        sol = solve_problem3(cubic_curve, ref.TRI_DL, ref.TRI_APEX_VELOCITY)
        patch = RuledPatch(sol.final_c, sol.final_d)
        scan = developability_scan(patch, samples_per_piece=50)
        assert scan.skipped >= 1
        assert scan.samples + scan.skipped == 50 * sol.final_c.pieces
        assert scan.max_residual <= 1e-8

    def test_zero_width_strip_skips_everything(self, cubic_curve):
        collapsed = RuledPatch(cubic_curve, cubic_curve)
        scan = developability_scan(collapsed, samples_per_piece=10)
        assert scan.samples == 0
        assert scan.skipped == 10 * cubic_curve.pieces
        assert scan.max_residual == 0.0


class TestCurvesPointwiseEqual:

    def test_insertion_preserves_the_point_set(self, cubic_curve):
        refined = cubic_curve.insert_knot(0.5).insert_knot(0.12)
        assert curves_pointwise_equal(cubic_curve, refined) <= 1e-12

    def test_elevation_preserves_the_point_set(self, cubic_curve):
        raised = cubic_curve.elevate_degree()
        assert curves_pointwise_equal(cubic_curve, raised) <= 1e-12

    def test_distinct_curves_measure_apart(self, cubic_curve):
        moved = np.array(cubic_curve.control)
        moved[3] += (0.0, 0.5, 0.0)
        other = BSplineCurve(cubic_curve.knots, moved)
        assert curves_pointwise_equal(cubic_curve, other) > 1e-2

    def test_rescaled_boundary_matches_the_blend(self, cubic_curve):
        # the degree-raised opposite boundary must trace the same points as
        # the direct blend (1-f(u)) c(u) + f(u) d(u)
        sol = solve_problem2(cubic_curve, ref.CORNER_D0, ref.CORNER_DL)
        inner = sol.report.problem1.strip
        f = sol.report.scaling
        worst = 0.0
        for u in np.linspace(0.0, 1.0, 160):
            blend = inner.ruled_eval(u, f(u))
            worst = max(worst, float(np.linalg.norm(
                sol.elevated_d.evaluate(u) - blend)))
        scale = max(1.0, float(np.max(np.abs(sol.elevated_d.control))))
        assert worst <= 1e-9 * scale

    def test_mismatched_domains_rejected(self, cubic_curve):
        stretched = BSplineCurve(
            tuple(2.0 * u for u in ref.CUBIC_KNOTS), ref.CUBIC_CONTROL, 3)
        with pytest.raises(ValueError, match="different domains"):
            curves_pointwise_equal(cubic_curve, stretched)

    def test_too_few_samples_rejected(self, cubic_curve):
        with pytest.raises(ValueError, match="at least 2"):
            curves_pointwise_equal(cubic_curve, cubic_curve, samples=1)


class TestPlanarityReport:

    def test_quad_strip_cells(self, quad_strip):
        report = planarity_report(quad_strip)
        assert len(report) == 2
        assert max(report) <= 1e-15

    def test_single_cell_strip(self):
        c = BSplineCurve((0.0, 1.0), ((0.0, 0.0, 0.0), (1.0, 0.0, 0.0)), 1)
        d = BSplineCurve((0.0, 1.0), ((0.0, 1.0, 0.0), (1.0, 1.0, 1.0)), 1)
        report = planarity_report(RuledPatch(c, d))
        assert len(report) == 1
        assert report[0] > 1e-3  # genuinely twisted cell

    def test_picks_out_the_bent_cell(self, quad_strip):
        d = np.array(quad_strip.opposite.control)
        d[2] += (0.0, 0.0, 0.2)
        bent = RuledPatch(quad_strip.base,
                          BSplineCurve(quad_strip.knots, d))
        report = planarity_report(bent)
        assert report[1] > 1e-3
        assert report[0] <= 1e-15
