"""Root finder: exact factorizations, multiple roots, random recovery."""

import numpy as np
import pytest
from numpy.polynomial import Polynomial

from devstrip import ZeroPolynomialError, real_roots
from devstrip.polyroots import coefficients

import reference as ref


def test_accepts_polynomial_and_ascending_sequence():
    p = Polynomial.fromroots([1.0, 2.0])
    assert real_roots(p) == pytest.approx([1.0, 2.0], abs=1e-10)
    assert real_roots(p.coef) == pytest.approx([1.0, 2.0], abs=1e-10)


def test_coefficients_round_trip():
    assert coefficients(Polynomial([3.0, 0.0, 1.0])).tolist() == [3.0, 0.0, 1.0]
    assert coefficients([3, 0, 1]).tolist() == [3.0, 0.0, 1.0]
    with pytest.raises(ValueError):
        coefficients([])


def test_simple_cubic_factorization():
    roots = real_roots(Polynomial.fromroots([1.0, 2.0, 3.0]))
    assert roots == pytest.approx([1.0, 2.0, 3.0], abs=1e-10)


def test_no_real_roots():
    assert real_roots([1.0, 0.0, 1.0]) == []          # x^2 + 1
    assert real_roots([5.0]) == []                     # nonzero constant


def test_linear_is_exact():
    assert real_roots([-3.0, 2.0]) == pytest.approx([1.5], abs=0.0)


def test_double_root_is_found_once():
    p = Polynomial.fromroots([2.0, 2.0])
    assert real_roots(p) == pytest.approx([2.0], abs=1e-7)


def test_triple_root():
    p = Polynomial.fromroots([1.0, 1.0, 1.0])
    roots = real_roots(p)
    assert roots == pytest.approx([1.0], abs=1e-5)


def test_mixed_multiplicities():
    p = Polynomial.fromroots([-3.0, 1.0, 1.0])
    assert real_roots(p) == pytest.approx([-3.0, 1.0], abs=1e-7)


def test_tangential_root_next_to_a_crossing():
    # (x - 1)^2 (x^2 + 1) crosses nowhere but touches at 1
    p = Polynomial.fromroots([1.0, 1.0]) * Polynomial([1.0, 0.0, 1.0])
    assert real_roots(p) == pytest.approx([1.0], abs=1e-7)


def test_coplanarity_quartic_regression():
    p = list(reversed(ref.CUBIC_QUARTIC))   # stored descending
    roots = real_roots(p)
    assert len(roots) == 2
    assert roots == pytest.approx([-7.9083, 0.3734], abs=5e-4)
    for x in roots:
        assert abs(np.polyval(ref.CUBIC_QUARTIC, x)) < 1e-8 * max(
            abs(c) for c in ref.CUBIC_QUARTIC)


def test_zero_polynomial_raises():
    with pytest.raises(ZeroPolynomialError):
        real_roots([0.0, 0.0, 0.0])


def test_non_finite_coefficients_raise():
    with pytest.raises(ValueError, match="finite"):
        real_roots([1.0, float("nan")])


def test_scaling_invariance():
    base = Polynomial.fromroots([-1.5, 0.25, 4.0])
    scaled = 1e8 * base
    assert real_roots(scaled) == pytest.approx(real_roots(base), abs=1e-10)


def test_leading_noise_is_trimmed():
    # a stray tiny quartic term must not spawn a huge spurious root
    coef = list(Polynomial.fromroots([1.0, 2.0, 3.0]).coef) + [1e-15]
    assert real_roots(coef) == pytest.approx([1.0, 2.0, 3.0], abs=1e-9)


def test_nearby_roots_deduplicate():
    p = Polynomial.fromroots([1.0, 1.0 + 1e-12])
    assert len(real_roots(p)) == 1


def test_exclusions_drop_roots_near_banned_values():
    p = Polynomial.fromroots([0.0, 0.5, 2.0])
    roots = real_roots(p, exclusions=(0.0, 0.5), exclusion_radius=1e-6)
    assert roots == pytest.approx([2.0], abs=1e-10)


def test_exclusion_radius_zero_keeps_inexact_roots():
    p = Polynomial.fromroots([0.5, 2.0])
    assert len(real_roots(p, exclusions=(0.5,), exclusion_radius=0.0)) >= 1


def test_random_simple_roots_recovered():
    rng = np.random.default_rng(20260819)
    for _ in range(50):
        count = int(rng.integers(1, 6))
        while True:
            roots = np.sort(rng.uniform(-5.0, 5.0, size=count))
            if count == 1 or np.min(np.diff(roots)) > 0.05:
                break
        found = real_roots(Polynomial.fromroots(roots))
        assert found == pytest.approx(list(roots), abs=1e-6)
