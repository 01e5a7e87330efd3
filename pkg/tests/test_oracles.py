import math

import pytest

from npythag import DomainError, area_fixed_leg, side_lengths, vertex_angle
from npythag.oracles import (
    angle_from_sides,
    finite_difference,
    heron_area,
    law_of_cosines_residual,
    mp_area_fixed_leg,
    mp_vertex_angle,
    sides_angle,
)


def test_heron_classics():
    assert heron_area((3, 4, 5)) == pytest.approx(6.0, rel=1e-15)
    assert heron_area((1, 1, math.sqrt(2))) == pytest.approx(0.5, rel=1e-15)
    assert heron_area((1, 2, 3)) == 0.0


def test_heron_cross_path():
    s = side_lengths(1, 1.5, -2)
    assert heron_area(s) == pytest.approx(area_fixed_leg(1, 1.5, -2).area, rel=1e-12)
    # the four-digit sides of the worked example land within rounding
    assert heron_area((1, 1.5, 0.8321)) == pytest.approx(0.39196699950152034715, rel=1e-4)


def test_heron_slack():
    assert heron_area((1, 2, 3 + 1e-12)) == 0.0
    with pytest.raises(DomainError):
        heron_area((1, 2, 3.1))
    with pytest.raises(DomainError):
        heron_area((-1, 2, 2))


def test_heron_needle_triangle():
    # Kahan's example: naive Heron loses most digits here
    a, b, c = 100000.0, 99999.99979, 0.00029
    assert heron_area((a, b, c)) == pytest.approx(10.0, rel=1e-6)


def test_angle_from_sides():
    assert angle_from_sides(3, 4, 5) == pytest.approx(math.pi / 2, rel=1e-15)
    assert angle_from_sides(1, 1, 1) == pytest.approx(math.pi / 3, rel=1e-15)
    assert angle_from_sides(1, 2, 3) == pytest.approx(math.pi)
    assert angle_from_sides(1, 2, 1) == 0.0
    with pytest.raises(DomainError):
        angle_from_sides(1, 2, 4)


@pytest.mark.parametrize("g,n", [(1.5, -2.0), (1.3, 2.7), (3.0, 7.0), (1.0, -5.0)])
def test_sides_angle_agrees(g, n):
    assert sides_angle(g, n) == pytest.approx(vertex_angle(g, n).theta, abs=1e-12)


def test_law_of_cosines_residual():
    assert law_of_cosines_residual(1, 1.3, 2.7) <= 1e-10
    assert law_of_cosines_residual(2.5, 1.5, -2) <= 1e-10
    with pytest.raises(DomainError):
        law_of_cosines_residual(1, 1.5, -0.5)


def test_finite_difference():
    assert finite_difference(math.sin, 0.3) == pytest.approx(math.cos(0.3), rel=1e-9)
    assert finite_difference(lambda x: x**3, 2.0, h=1e-4) == pytest.approx(12.0, rel=1e-7)
    with pytest.raises(DomainError):
        finite_difference(lambda x: math.inf, 1.0)


@pytest.mark.parametrize("g,n", [(1.5, -2.0), (1.5, 3.0), (4.0, 1.5)])
def test_high_precision_agreement(g, n):
    assert float(mp_area_fixed_leg(1, g, n)) == pytest.approx(area_fixed_leg(1, g, n).area, rel=1e-13)
    assert float(mp_vertex_angle(g, n)) == pytest.approx(vertex_angle(g, n).theta, abs=1e-13)
