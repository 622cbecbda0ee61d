import itertools
import math
import random
from fractions import Fraction

import pytest

from toricgate.toric_geometry import (Chart, Cone, Fan, LaurentSupport,
                                      NonSimplicialCone, NotFullDimensional,
                                      Polytope, cone_contains, dual_cone,
                                      fan_to_text, is_simplicial,
                                      is_strongly_convex, moment_polytope,
                                      orthant_cone, polytope_to_text,
                                      primitive_vector, product_p1_charts,
                                      product_p1_fan, support_in_cone)


def _det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _random_full_dim_cone(rng, d, bound):
    while True:
        gens = tuple(tuple(rng.randint(-bound, bound) for _ in range(d))
                     for _ in range(d))
        det = _det2(*gens) if d == 2 else _det3(*gens)
        if det != 0:
            return Cone(d, gens)


# --- construction ---------------------------------------------------------

def test_cone_prunes_zero_and_duplicates():
    c = Cone(2, ((0, 0), (1, 0), (1, 0), (0, 1)))
    assert c.generators == ((1, 0), (0, 1))


def test_cone_rejects_non_integers():
    with pytest.raises(ValueError):
        Cone(2, ((1.0, 0), (0, 1)))
    with pytest.raises(ValueError):
        Cone(2, ((1, 0, 0),))


def test_zero_cone():
    zero = Cone(3, ())
    assert zero.generators == ()
    assert is_simplicial(zero)
    assert is_strongly_convex(zero)
    assert cone_contains(zero, (0, 0, 0))
    assert not cone_contains(zero, (1, 0, 0))
    with pytest.raises(NotFullDimensional):
        dual_cone(zero)


def test_primitive_vector():
    assert primitive_vector((2, -4)) == (1, -2)
    assert primitive_vector((0, 6)) == (0, 1)
    assert primitive_vector((Fraction(1, 2), Fraction(0))) == (1, 0)
    assert primitive_vector((-3,)) == (-1,)
    with pytest.raises(ValueError):
        primitive_vector((0, 0))


# --- membership -----------------------------------------------------------

def test_contains_first_orthant():
    c = orthant_cone((1, 1))
    assert cone_contains(c, (3, 5))
    assert cone_contains(c, (0, 0))
    assert not cone_contains(c, (-1, 2))


def test_contains_skew_cone():
    c = Cone(2, ((1, 0), (1, 2)))
    assert not cone_contains(c, (0, -1))
    assert cone_contains(c, (2, 2))  # = 1*(1,0) + 1*(1,2)
    assert cone_contains(c, (1, 1))  # fractional coefficients


def test_contains_lower_dimensional_cone():
    c = Cone(3, ((1, 0, 0), (0, 1, 0)))
    assert cone_contains(c, (2, 3, 0))
    assert not cone_contains(c, (2, 3, 1))  # off the span
    assert not cone_contains(c, (-1, 0, 0))


def test_contains_requires_simplicial():
    c = Cone(2, ((1, 0), (-1, 0)))
    with pytest.raises(NonSimplicialCone):
        cone_contains(c, (1, 0))
    with pytest.raises(NonSimplicialCone):
        cone_contains(Cone(2, ((1, 0), (0, 1), (1, 1))), (1, 1))


def test_contains_dimension_mismatch():
    with pytest.raises(ValueError):
        cone_contains(orthant_cone((1, 1)), (1, 2, 3))


# --- predicates -----------------------------------------------------------

def test_is_simplicial_examples():
    assert is_simplicial(orthant_cone((1, 1, 1)))
    assert not is_simplicial(Cone(2, ((1, 0), (0, 1), (1, 1))))
    assert not is_simplicial(Cone(2, ((2, 4), (1, 2))))  # rank 1, two generators


def test_is_strongly_convex_examples():
    for d in (1, 2, 3, 4):
        assert is_strongly_convex(orthant_cone((1,) * d))
    assert not is_strongly_convex(Cone(2, ((1, 0), (-1, 0))))
    assert is_strongly_convex(Cone(2, ((1, 0), (1, 2))))


def test_strongly_convex_matches_angular_check_2d():
    # independent 2D pairs span less than a half-plane exactly when the
    # angle between them is < pi, i.e. they are not opposite rays
    rng = random.Random(1)
    for _ in range(40):
        a = (rng.randint(-5, 5), rng.randint(-5, 5))
        b = (rng.randint(-5, 5), rng.randint(-5, 5))
        if a == (0, 0) or b == (0, 0):
            continue
        cone = Cone(2, (a, b))
        angle = abs(math.atan2(_det2(a, b),
                               a[0] * b[0] + a[1] * b[1]))
        opens_less_than_half_plane = angle < math.pi - 1e-12 and _det2(a, b) != 0
        if len(cone.generators) < 2:
            continue  # duplicates collapse; skip
        assert is_strongly_convex(cone) == opens_less_than_half_plane


# --- duality --------------------------------------------------------------

def test_dual_of_first_orthant():
    c = orthant_cone((1, 1))
    assert dual_cone(c).primitive_generators == c.primitive_generators


def test_dual_skew_example():
    c = Cone(2, ((1, 0), (1, 2)))
    assert dual_cone(c).primitive_generators == frozenset({(0, 1), (2, -1)})


def test_dual_membership_by_inner_products():
    # box-enumeration oracle: u is in the dual iff <u, v> >= 0 for both generators
    c = Cone(2, ((1, 0), (1, 2)))
    d = dual_cone(c)
    for x in range(-5, 6):
        for y in range(-5, 6):
            by_products = all(x * g[0] + y * g[1] >= 0 for g in c.generators)
            assert cone_contains(d, (x, y)) == by_products


def test_dual_requires_simplicial_and_full_dimensional():
    with pytest.raises(NonSimplicialCone):
        dual_cone(Cone(2, ((1, 0), (0, 1), (1, 1))))
    with pytest.raises(NotFullDimensional):
        dual_cone(Cone(3, ((1, 0, 0), (0, 1, 0))))


def test_biduality_unimodular_orthant_images():
    # images of the first orthant under determinant +-1 integer maps
    mats = [((1, 0), (0, 1)), ((1, 1), (0, 1)), ((2, 1), (1, 1)),
            ((0, 1), (-1, 0)), ((3, 2), (1, 1))]
    for m in mats:
        cone = Cone(2, m)
        assert dual_cone(dual_cone(cone)).primitive_generators \
            == cone.primitive_generators


def test_biduality_and_membership_random():
    rng = random.Random(42)
    for d in (2, 3):
        for _ in range(20):
            cone = _random_full_dim_cone(rng, d, 4)
            dual = dual_cone(cone)
            assert dual_cone(dual).primitive_generators == cone.primitive_generators
            for point in itertools.product(range(-3, 4), repeat=d):
                by_products = all(
                    sum(p * g for p, g in zip(point, gen)) >= 0
                    for gen in cone.generators)
                assert cone_contains(dual, point) == by_products


# --- Laurent supports -----------------------------------------------------

def test_support_in_cone():
    orthant = orthant_cone((1, 1))
    assert support_in_cone(LaurentSupport(2, ((0, 0),)), orthant)
    assert support_in_cone(LaurentSupport(2, ((2, 1), (0, 3))), orthant)
    assert not support_in_cone(LaurentSupport(2, ((1, 0), (-1, 0))), orthant)
    assert support_in_cone(LaurentSupport(2, ()), orthant)  # zero polynomial


def test_support_dimension_mismatch():
    with pytest.raises(ValueError):
        support_in_cone(LaurentSupport(3, ((1, 1, 1),)), orthant_cone((1, 1)))


# --- charts, fan, moment polytope -----------------------------------------

def test_chart_count():
    for n in range(1, 9):
        assert len(product_p1_charts(n)) == 2 ** n


def test_chart_labels_n1():
    assert [c.label() for c in product_p1_charts(1)] == ["(z1)", "(z1^-1)"]


def test_chart_listing_n2():
    labels = [c.label() for c in product_p1_charts(2)]
    assert labels == ["(z1, z2)", "(z1^-1, z2)", "(z1, z2^-1)", "(z1^-1, z2^-1)"]


def test_chart_listing_n3():
    signs = [c.signs for c in product_p1_charts(3)]
    assert signs == [
        (1, 1, 1),
        (-1, 1, 1), (1, -1, 1), (1, 1, -1),
        (-1, -1, 1), (-1, 1, -1), (1, -1, -1),
        (-1, -1, -1),
    ]


def test_chart_validation():
    with pytest.raises(ValueError):
        Chart(())
    with pytest.raises(ValueError):
        Chart((1, 0))
    with pytest.raises(ValueError):
        product_p1_charts(0)
    with pytest.raises(ValueError):
        product_p1_charts(17)


def test_fan_structure():
    for n in (1, 2, 3):
        fan = product_p1_fan(n)
        assert len(fan.rays) == 2 * n
        assert len(fan.maximal_cones) == 2 ** n
        charts = product_p1_charts(n)
        for chart, cone in zip(charts, fan.maximal_cones, strict=True):
            assert cone.generators == orthant_cone(chart.signs).generators


def test_fan_quadrants_n2():
    fan = product_p1_fan(2)
    expected = [
        {(1, 0), (0, 1)}, {(-1, 0), (0, 1)},
        {(1, 0), (0, -1)}, {(-1, 0), (0, -1)},
    ]
    got = [set(c.generators) for c in fan.maximal_cones]
    assert got == expected


def test_fan_cones_pass_predicates():
    for n in (1, 2, 3, 4, 5, 6):
        for cone in product_p1_fan(n).maximal_cones:
            assert is_simplicial(cone)
            assert is_strongly_convex(cone)


def test_orthants_self_dual():
    for n in (1, 2, 3, 4, 5, 6):
        for cone in product_p1_fan(n).maximal_cones:
            assert dual_cone(cone).primitive_generators == cone.primitive_generators


def test_fan_validation():
    ray_pair = ((1, 0), (-1, 0), (0, 1), (0, -1))
    with pytest.raises(ValueError):
        Fan(2, ray_pair, (Cone(2, ((1, 0), (-1, 0))),))  # dependent generators
    with pytest.raises(ValueError):
        Fan(2, ray_pair, (Cone(2, ((1, 0), (1, 1))),))  # (1,1) is not a ray
    with pytest.raises(ValueError):
        Fan(2, ray_pair,
            (Cone(2, ((1, 0), (0, 1))), Cone(2, ((0, 1), (1, 0)))))  # duplicate


def test_moment_polytope():
    square = moment_polytope(2)
    assert square.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    cube = moment_polytope(3)
    assert len(cube.vertices) == 8
    assert all(set(v) <= {0, 1} for v in cube.vertices)
    assert len(moment_polytope(4).vertices) == 16


def test_polytope_validation():
    with pytest.raises(ValueError):
        Polytope(2, ())
    p = Polytope(2, ((0, 0), (0, 0), (1, 1)))
    assert p.vertices == ((0, 0), (1, 1))


# --- serialization --------------------------------------------------------

def test_fan_to_text_n2():
    assert fan_to_text(product_p1_fan(2)) == (
        "dim=2\n"
        "ray 1 0\nray 0 1\nray -1 0\nray 0 -1\n"
        "cone 0 1\ncone 2 1\ncone 0 3\ncone 2 3\n")


def test_polytope_to_text_n2():
    assert polytope_to_text(moment_polytope(2)) == (
        "dim=2\nvertex 0 0\nvertex 0 1\nvertex 1 0\nvertex 1 1\n")
