import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from numlore import geometry
from numlore.geometry import DegenerateTriangleError, Triangle


@pytest.mark.parametrize(
    "sides, aa, bb",
    [
        ((3, 4, 5), Fraction(16, 5), Fraction(9, 5)),
        ((1, 1, 1), Fraction(1), Fraction(1)),
        ((5, 6, 7), Fraction(36, 7), Fraction(25, 7)),
    ],
)
def test_segments(sides, aa, bb):
    assert geometry.thabit_segments(Triangle(*sides)) == (aa, bb)


@pytest.mark.parametrize("sides, value", [((3, 4, 5), 25), ((1, 1, 1), 2), ((5, 6, 7), 61)])
def test_identity_examples(sides, value):
    r = geometry.verify_generalized_pythagoras(Triangle(*sides))
    assert r.lhs == r.rhs == value and r.holds


@pytest.mark.parametrize("sides", [(1, 2, 3), (0, 1, 1), (-1, 2, 2), (1, 1, 5)])
def test_degenerate_rejected(sides):
    with pytest.raises(DegenerateTriangleError):
        Triangle(*sides)


_side = st.fractions(min_value=Fraction(1, 50), max_value=500, max_denominator=50)


def _triangle_or_none(a, b, c):
    try:
        return Triangle(a, b, c)
    except DegenerateTriangleError:
        return None


@given(_side, _side, _side)
def test_identity_exact_on_random_triangles(a, b, c):
    t = _triangle_or_none(a, b, c)
    if t is not None:
        assert geometry.verify_generalized_pythagoras(t).holds


def test_identity_10000_random():
    rng = random.Random(3)
    done = 0
    while done < 10000:
        t = _triangle_or_none(*(Fraction(rng.randint(1, 999), rng.randint(1, 99)) for _ in range(3)))
        if t is None:
            continue
        assert geometry.verify_generalized_pythagoras(t).holds
        done += 1


def test_acute_segments_overlap():
    # AA' + BB' = (a^2 + b^2)/c exceeds c exactly when the angle at C is acute
    t = Triangle(5, 6, 7)
    aa, bb = geometry.thabit_segments(t)
    assert aa + bb > t.c
    assert geometry.verify_generalized_pythagoras(t).holds


def test_obtuse_segments_fall_short():
    t = Triangle(3, 4, 6)
    aa, bb = geometry.thabit_segments(t)
    assert aa + bb < t.c
    assert geometry.verify_generalized_pythagoras(t).holds
    feet = geometry.construct_feet(t)
    assert feet.A_prime[0] > feet.B_prime[0]


@pytest.mark.parametrize("sides", [(3, 4, 5), (5, 12, 13), (8, 15, 17), (Fraction(3, 2), 2, Fraction(5, 2))])
def test_right_angle_feet_coincide(sides):
    t = Triangle(*sides)
    aa, bb = geometry.thabit_segments(t)
    assert aa + bb == t.c
    feet = geometry.construct_feet(t)
    assert math.isclose(feet.A_prime[0], feet.B_prime[0], abs_tol=1e-12)
    # both are the foot of the altitude from C
    assert math.isclose(feet.B_prime[0], feet.C[0], abs_tol=1e-12)


def test_equilateral_feet_at_endpoints():
    feet = geometry.construct_feet(Triangle(1, 1, 1))
    assert math.isclose(feet.A_prime[0], 0.0, abs_tol=1e-12)  # at B
    assert math.isclose(feet.B_prime[0], 1.0, abs_tol=1e-12)  # at A


def test_feet_5_6_7():
    feet = geometry.construct_feet(Triangle(5, 6, 7))
    assert math.isclose(feet.bb, 25 / 7, rel_tol=1e-9)
    assert math.isclose(feet.aa, 36 / 7, rel_tol=1e-9)


def _angles(t):
    a, b, c = map(float, (t.a, t.b, t.c))
    return (
        math.acos((b * b + c * c - a * a) / (2 * b * c)),
        math.acos((a * a + c * c - b * b) / (2 * a * c)),
        math.acos((a * a + b * b - c * c) / (2 * a * b)),
    )


def _angle_at(p, vertex, q):
    v1 = (p[0] - vertex[0], p[1] - vertex[1])
    v2 = (q[0] - vertex[0], q[1] - vertex[1])
    return math.acos((v1[0] * v2[0] + v1[1] * v2[1]) / (math.hypot(*v1) * math.hypot(*v2)))


def test_construction_well_conditioned():
    rng = random.Random(9)
    done = 0
    while done < 1000:
        t = _triangle_or_none(*(Fraction(rng.randint(1, 999), rng.randint(1, 99)) for _ in range(3)))
        if t is None or min(_angles(t)) < math.radians(5):
            continue
        feet = geometry.construct_feet(t)
        aa, bb = geometry.thabit_segments(t)
        c = float(t.c)
        assert abs(feet.aa - float(aa)) / c < 1e-9
        assert abs(feet.bb - float(bb)) / c < 1e-9
        # the angle condition itself, measured independently
        gamma = _angles(t)[2]
        if abs(feet.B_prime[0]) > 1e-9 * c:
            assert math.isclose(_angle_at((0.0, 0.0), feet.B_prime, feet.C), gamma, abs_tol=1e-7)
        if abs(feet.A_prime[0] - c) > 1e-9 * c:
            assert math.isclose(_angle_at(feet.A, feet.A_prime, feet.C), gamma, abs_tol=1e-7)
        done += 1
