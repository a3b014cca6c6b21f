import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from newtonjump import NotConvenientError, Support, build_diagram, gamma_minus_metrics, newton_number, parse_germ
from newtonjump.geometry import in_gamma_minus, in_gamma_plus, minimal_points

from conftest import convenient_supports


def hull_six_volume(support):
    """6V from scipy: the box minus the convex hull of upward-clipped support boxes."""
    D = max(max(p) for p in support.points) + 1
    corners = [
        tuple(D if bit else c for bit, c in zip(bits, p))
        for p in support.points
        for bits in itertools.product((0, 1), repeat=3)
    ]
    return 6 * (D ** 3 - ConvexHull(np.array(corners, dtype=float)).volume)


def hull_twice_area(points2):
    if not points2:
        return 0.0
    D = max(max(p) for p in points2) + 1
    corners = [
        tuple(D if bit else c for bit, c in zip(bits, p))
        for p in points2
        for bits in itertools.product((0, 1), repeat=2)
    ]
    return 2 * (D ** 2 - ConvexHull(np.array(corners, dtype=float)).volume)


def hull_compact_normals(support):
    D = max(max(p) for p in support.points) + 1
    corners = {
        tuple(D if bit else c for bit, c in zip(bits, p))
        for p in support.points
        for bits in itertools.product((0, 1), repeat=3)
    }
    hull = ConvexHull(np.array(sorted(corners), dtype=float))
    normals = set()
    for eq in hull.equations:
        inward = -eq[:3]
        if (inward > 1e-9).all():
            normals.add(tuple(np.round(inward / inward.min(), 6)))
    return normals


def test_one_triangle_diagram():
    d = build_diagram(parse_germ("x^11 + y^6 + z^5"))
    assert len(d.facets) == 1
    f = d.facets[0]
    assert f.normal == (30, 55, 66) and f.offset == 330
    assert set(f.vertices) == {(11, 0, 0), (0, 6, 0), (0, 0, 5)}
    assert d.axis_intercepts == (11, 6, 5)
    assert len(d.edges) == 3


def test_point_inside_face_is_not_a_vertex():
    d = build_diagram(Support.of((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)))
    assert len(d.facets) == 1
    assert d.facets[0].normal == (1, 1, 1)
    assert (1, 1, 1) not in d.facets[0].vertices
    assert (1, 1, 1) not in d.vertices


def test_three_facets_through_center():
    s = Support.of((4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 1, 1))
    d = build_diagram(s)
    assert len(d.facets) == 3
    assert all((1, 1, 1) in f.vertices for f in d.facets)
    assert {f.normal for f in d.facets} == {(2, 1, 1), (1, 2, 1), (1, 1, 2)}
    # independent oracle: scipy hull facets with positive inward normals
    scaled = {tuple(np.round(np.array(f.normal) / min(f.normal), 6)) for f in d.facets}
    assert scaled == hull_compact_normals(s)


def test_facet_cyclic_order_and_orientation():
    d = build_diagram(Support.of((3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (1, 2, 0), (0, 1, 2), (1, 0, 2)))
    for f in d.facets:
        v = np.array(f.vertices)
        assert tuple(v[0]) == min(f.vertices)
        for i in range(1, len(v) - 1):
            assert np.dot(np.cross(v[i] - v[0], v[i + 1] - v[0]), f.normal) > 0


def test_non_convenient_compact_faces():
    d = build_diagram(Support.of((2, 0, 0), (0, 2, 0)))
    assert d.facets == ()
    assert d.edges == (((0, 2, 0), (2, 0, 0)),)
    d = build_diagram(Support.of((1, 1, 1)))
    assert d.vertices == ((1, 1, 1),) and d.edges == ()
    d = build_diagram(Support.of((3, 0, 0), (0, 3, 0), (1, 1, 1)))
    assert len(d.facets) == 1 and set(d.facets[0].vertices) == {(3, 0, 0), (0, 3, 0), (1, 1, 1)}


@pytest.mark.parametrize(
    "support, V, P, W",
    [
        (Support.of((11, 0, 0), (0, 6, 0), (0, 0, 5)), Fraction(55), (33, Fraction(55, 2), 15), (11, 6, 5)),
        (Support.of((2, 0, 0), (0, 2, 0), (0, 0, 2)), Fraction(4, 3), (2, 2, 2), (2, 2, 2)),
        (Support.of((11, 0, 0), (0, 6, 0), (0, 0, 5), (1, 3, 2)), Fraction(109, 2), (33, Fraction(55, 2), 15), (11, 6, 5)),
    ],
)
def test_metrics_examples(support, V, P, W):
    m = gamma_minus_metrics(build_diagram(support))
    assert m.V == V
    assert m.P == P
    assert m.W == W
    assert 6 * m.V == pytest.approx(hull_six_volume(support))


@pytest.mark.parametrize(
    "points, nu",
    [
        ({(11, 0, 0), (0, 6, 0), (0, 0, 5)}, 200),
        ({(2, 0, 0), (0, 2, 0), (0, 0, 2)}, 1),
        ({(11, 0, 0), (0, 6, 0), (0, 0, 5), (1, 3, 2)}, 197),
        ({(1, 0, 0), (0, 5, 0), (0, 0, 7)}, 0),
    ],
)
def test_newton_number_examples(points, nu):
    assert newton_number(Support(3, frozenset(points))) == nu


@pytest.mark.parametrize(
    "text, mu",
    [
        ("x^2 + y^3", 2),  # A2
        ("x^3 + y^4", 6),  # E6
        ("x^3 + y^5", 8),  # E8
        ("x^4 + y^4 + x^2*y^2", 9),  # X9
        ("x^4 + y^6 + x^2*y^3", 15),  # W(1,0)
        ("x^5 + y^5 + x*y", 1),  # Morse
        ("x^7 + y^2", 6),  # A6
    ],
)
def test_plane_curves_known_milnor_numbers(text, mu):
    assert newton_number(parse_germ(text, dimension=2)) == mu


def test_plane_metrics():
    d = build_diagram(parse_germ("x^4 + x*y^2 + y^5", dimension=2))
    m = gamma_minus_metrics(d)
    assert [f.vertices for f in d.facets] == [((0, 5), (1, 2)), ((1, 2), (4, 0))]
    assert 2 * m.V == 5 + 8
    assert m.newton_number() == 13 - 9 + 1


def test_not_convenient_raises():
    with pytest.raises(NotConvenientError):
        newton_number(Support.of((2, 0, 0), (0, 2, 0)))
    with pytest.raises(NotConvenientError):
        gamma_minus_metrics(build_diagram(Support.of((1, 1, 1))))


def test_closed_form_small():
    for p, q, r in itertools.product(range(2, 9), repeat=3):
        assert newton_number(Support.of((p, 0, 0), (0, q, 0), (0, 0, r))) == (p - 1) * (q - 1) * (r - 1)


def test_minimal_points():
    assert minimal_points([(2, 0, 0), (3, 1, 0), (0, 1, 1), (0, 1, 2)]) == [(0, 1, 1), (2, 0, 0)]


@settings(max_examples=150, deadline=None)
@given(convenient_supports())
def test_metrics_match_hull_oracle(s):
    d = build_diagram(s)
    m = gamma_minus_metrics(d)
    assert (6 * m.V).denominator == 1
    assert all((2 * p).denominator == 1 for p in m.P)
    assert m.V > 0 and all(p > 0 for p in m.P)
    assert float(6 * m.V) == pytest.approx(hull_six_volume(s), abs=1e-6)
    planes = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
    for area, (i, j, k) in zip(m.P, planes):
        pts = [(p[i], p[j]) for p in s.points if p[k] == 0]
        assert float(2 * area) == pytest.approx(hull_twice_area(pts), abs=1e-6)
    assert m.newton_number() == newton_number(s) >= 0


@settings(max_examples=150, deadline=None)
@given(convenient_supports())
def test_facets_are_supporting_and_positive(s):
    d = build_diagram(s)
    for f in d.facets:
        assert all(c > 0 for c in f.normal)
        assert all(f.value(p) >= f.offset for p in s.points)
        assert all(f.value(v) == f.offset for v in f.vertices)
    assert d.vertices == tuple(sorted({v for f in d.facets for v in f.vertices}))


@settings(max_examples=100, deadline=None)
@given(convenient_supports(), st.data())
def test_region_star_shaped(s, data):
    d = build_diagram(s)
    box = d.axis_intercepts
    den = data.draw(st.integers(1, 7))
    q = tuple(Fraction(data.draw(st.integers(0, w * den)), den) for w in box)
    if not any(f.value(q) < f.offset for f in d.facets):
        return
    for k in range(8):
        t = Fraction(k, 8)
        point = tuple(t * c for c in q)
        assert not in_gamma_plus(point, d)


@settings(max_examples=100, deadline=None)
@given(convenient_supports(), st.tuples(*[st.integers(0, 14)] * 3).filter(any))
def test_monotonicity(s, t):
    before = newton_number(s)
    after = newton_number(s.with_point(t))
    assert after <= before
    d = build_diagram(s)
    if in_gamma_plus(t, d):
        assert after == before
        grown = build_diagram(s.with_point(t))
        assert grown.facets == d.facets
        assert gamma_minus_metrics(grown) == gamma_minus_metrics(d)


@settings(max_examples=50, deadline=None)
@given(convenient_supports(dimension=2, box=15), st.tuples(st.integers(0, 16), st.integers(0, 16)).filter(any))
def test_plane_monotonicity(s, t):
    assert newton_number(s.with_point(t)) <= newton_number(s)


def test_membership_predicates():
    d = build_diagram(Support.of((11, 0, 0), (0, 6, 0), (0, 0, 5)))
    assert in_gamma_minus((1, 3, 2), d) and not in_gamma_plus((1, 3, 2), d)
    assert in_gamma_minus((11, 0, 0), d) and in_gamma_plus((11, 0, 0), d)
    assert not in_gamma_minus((11, 1, 0), d)
    assert not in_gamma_minus((-1, 0, 0), d)
