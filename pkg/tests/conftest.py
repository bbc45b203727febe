import pytest

from devstrip import BSplineCurve, DevelopableStrip, propagate_polygon

import reference as ref


@pytest.fixture
def quad_curve() -> BSplineCurve:
    return BSplineCurve(ref.QUAD_KNOTS, ref.QUAD_CONTROL, ref.QUAD_DEGREE)


@pytest.fixture
def quad_strip(quad_curve) -> DevelopableStrip:
    opposite = propagate_polygon(quad_curve, ref.QUAD_D0,
                                 ref.QUAD_LAMBDA, ref.QUAD_M)
    return DevelopableStrip(quad_curve, opposite, ref.QUAD_LAMBDA, ref.QUAD_M)


@pytest.fixture
def cubic_curve() -> BSplineCurve:
    return BSplineCurve(ref.CUBIC_KNOTS, ref.CUBIC_CONTROL, ref.CUBIC_DEGREE)
