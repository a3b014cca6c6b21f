"""Newton polyhedron, diagram, the region under it, and the Newton number.

Everything is exact: integer determinants for doubled areas and six-fold
volumes, ``Fraction`` only at the reporting boundary.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidInputError, NotConvenientError
from .parser import Support, axis_intercept


@dataclass(frozen=True)
class Facet:
    """Compact top-dimensional face of the Newton polyhedron.

    ``normal`` is primitive with positive entries and points into the
    polyhedron; every support point ``p`` has ``normal . p >= offset``.
    """

    vertices: tuple
    normal: tuple
    offset: int

    def value(self, point):
        return _dot(self.normal, point)


@dataclass(frozen=True)
class NewtonDiagram:
    dimension: int
    facets: tuple
    edges: tuple
    vertices: tuple
    axis_intercepts: tuple  # None where the support misses an axis

    @property
    def is_convenient(self):
        return all(w is not None for w in self.axis_intercepts)


@dataclass(frozen=True)
class GammaMinusMetrics:
    """Volume, coordinate-plane areas and axis lengths of the region under the diagram.

    In dimension 2 ``V`` is the area of the region and ``P`` is empty.
    """

    dimension: int
    V: Fraction
    P: tuple
    W: tuple

    @property
    def P1(self):
        return self.P[0]

    @property
    def P2(self):
        return self.P[1]

    @property
    def P3(self):
        return self.P[2]

    @property
    def W1(self):
        return self.W[0]

    @property
    def W2(self):
        return self.W[1]

    @property
    def W3(self):
        return self.W[2]

    def newton_number(self):
        if self.dimension == 2:
            value = 2 * self.V - sum(self.W) + 1
        else:
            value = 6 * self.V - 2 * sum(self.P) + sum(self.W) - 1
        assert value.denominator == 1
        return int(value)


# -- small exact vector helpers ------------------------------------------------

def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _det3(a, b, c):
    return _dot(a, _cross(b, c))


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def minimal_points(points):
    """Points not componentwise >= some other point; they generate the same polyhedron."""
    keep = []
    for p in sorted(set(points)):
        # a dominating point is lexicographically smaller, so already seen
        if not any(all(a <= b for a, b in zip(q, p)) for q in keep):
            keep.append(p)
    return keep


# -- dimension 2 -----------------------------------------------------------------

def newton_polygon(points2):
    """Vertices of the compact edges of a planar Newton polygon, ordered by x."""
    chain = []
    for p in minimal_points(points2):
        while len(chain) >= 2 and _turn(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return chain


def _twice_area_below(chain):
    # chain runs from the y-axis to the x-axis; fan from the origin
    return sum(a[1] * b[0] - a[0] * b[1] for a, b in zip(chain, chain[1:]))


def _facets2(points):
    chain = newton_polygon(points)
    out = []
    for a, b in zip(chain, chain[1:]):
        n = (a[1] - b[1], b[0] - a[0])
        g = gcd(*n)
        n = (n[0] // g, n[1] // g)
        out.append(((a, b), n, _dot(n, a)))
    return out


# -- dimension 3 -----------------------------------------------------------------

def _face_polygon(face_points, normal):
    """Convex hull of coplanar points in cyclic order, oriented along ``normal``."""
    k = max(range(3), key=lambda i: normal[i])
    keep = [i for i in range(3) if i != k]
    proj = {tuple(p[i] for i in keep): p for p in face_points}
    pts2 = sorted(proj)
    if len(pts2) <= 2:
        return [proj[q] for q in pts2]
    lower, upper = [], []
    for q in pts2:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    for q in reversed(pts2):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    hull = [proj[q] for q in lower[:-1] + upper[:-1]]
    if _dot(_cross(_sub(hull[1], hull[0]), _sub(hull[2], hull[0])), normal) < 0:
        hull.reverse()
    start = hull.index(min(hull))
    return hull[start:] + hull[:start]


def _facets3(points):
    """All compact facets of the Newton polyhedron of ``points`` (minimal points)."""
    seen = {}
    m = len(points)
    for i in range(m):
        a = points[i]
        for j in range(i + 1, m):
            u = _sub(points[j], a)
            for k in range(j + 1, m):
                n = _cross(u, _sub(points[k], a))
                if n[0] < 0 and n[1] < 0 and n[2] < 0:
                    n = (-n[0], -n[1], -n[2])
                elif not (n[0] > 0 and n[1] > 0 and n[2] > 0):
                    continue
                g = gcd(*n)
                n = (n[0] // g, n[1] // g, n[2] // g)
                if n in seen:
                    continue
                c = _dot(n, a)
                seen[n] = c if all(_dot(n, p) >= c for p in points) else None
    out = []
    for n, c in seen.items():
        if c is None:
            continue
        face = [p for p in points if _dot(n, p) == c]
        out.append((tuple(_face_polygon(face, n)), n, c))
    return out


def _six_volume_below(facets):
    total = 0
    for verts, _, _ in facets:
        v0 = verts[0]
        for a, b in zip(verts[1:], verts[2:]):
            total += abs(_det3(v0, a, b))
    return total


_PLANES = ((0, 1), (0, 2), (1, 2))  # OXY, OXZ, OYZ


def _plane_points(points, plane):
    dropped = ({0, 1, 2} - set(plane)).pop()
    return [(p[plane[0]], p[plane[1]]) for p in points if p[dropped] == 0]


def _facets(points, dimension):
    return _facets2(points) if dimension == 2 else _facets3(points)


# -- public API -------------------------------------------------------------------

def _augment_far_axes(points, dimension):
    """Add far-away axis points so a non-convenient support becomes convenient.

    Faces avoiding the added points are exactly the compact faces of the
    original polyhedron, provided the points are far enough out. Facet
    normals are cross products of differences with entries at most
    ``2 D^2``, so a summed normal of a compact face has ratio of entries
    below ``#facets * 6 D^2``; ``far`` exceeds ``D`` times that bound.
    """
    D = max(max(p) for p in points)
    m = len(points)
    far = 6 * (m ** 3 + 3) * D ** 3 * dimension + 1
    added = []
    for axis in range(dimension):
        if axis_intercept(points, axis) is None:
            e = tuple(far if i == axis else 0 for i in range(dimension))
            added.append(e)
    return added


def build_diagram(support):
    """Compact faces of the Newton polyhedron of ``support``."""
    if not isinstance(support, Support):
        raise InvalidInputError("build_diagram expects a Support")
    dim = support.dimension
    pts = minimal_points(support.points)
    added = _augment_far_axes(pts, dim)
    raw = _facets(minimal_points(pts + added), dim)
    extra = set(added)
    edges = set()
    vertices = set()
    facets = []
    for verts, n, c in raw:
        ring = list(verts)
        pairs = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))] if dim == 3 else [tuple(ring)]
        for a, b in pairs:
            if a not in extra and b not in extra:
                edges.add((min(a, b), max(a, b)))
        vertices.update(v for v in ring if v not in extra)
        if not extra.intersection(ring):
            facets.append(Facet(tuple(verts), n, c))
    if not raw:
        # fewer than `dim` affinely independent minimal points: at most one point
        vertices.update(pts)
    facets.sort(key=lambda f: (f.vertices, f.normal))
    return NewtonDiagram(
        dimension=dim,
        facets=tuple(facets),
        edges=tuple(sorted(edges)),
        vertices=tuple(sorted(vertices)),
        axis_intercepts=tuple(axis_intercept(support.points, k) for k in range(dim)),
    )


def _require_convenient(diagram):
    if not diagram.is_convenient:
        missing = [("OX", "OY", "OZ")[k] for k, w in enumerate(diagram.axis_intercepts) if w is None]
        raise NotConvenientError(f"support is not convenient: no point on axis {', '.join(missing)}")


def gamma_minus_metrics(diagram):
    """V, P1..P3, W1..W3 of the region between the diagram and the coordinate planes.

    Plane areas come from the diagram vertices lying in each coordinate
    plane: those are the vertices of the plane-restricted Newton polygon.
    """
    _require_convenient(diagram)
    W = tuple(diagram.axis_intercepts)
    raw = [(f.vertices, f.normal, f.offset) for f in diagram.facets]
    if diagram.dimension == 2:
        chain = [f.vertices[0] for f in diagram.facets] + [diagram.facets[-1].vertices[1]]
        chain.sort(key=lambda p: p[0])
        return GammaMinusMetrics(2, Fraction(_twice_area_below(chain), 2), (), W)
    if not raw:
        raise NotConvenientError("diagram has no compact facet")
    P = tuple(
        Fraction(_twice_area_below(newton_polygon(_plane_points(diagram.vertices, plane))), 2)
        for plane in _PLANES
    )
    return GammaMinusMetrics(3, Fraction(_six_volume_below(raw), 6), P, W)


def newton_number_of_points(points, dimension):
    """Newton number from raw points, without building dataclasses (hot path)."""
    pts = minimal_points(points)
    W = [axis_intercept(pts, k) for k in range(dimension)]
    if any(w is None for w in W):
        raise NotConvenientError("support is not convenient")
    if dimension == 2:
        return _twice_area_below(newton_polygon(pts)) - W[0] - W[1] + 1
    six_v = _six_volume_below(_facets3(pts))
    two_p = sum(_twice_area_below(newton_polygon(_plane_points(pts, pl))) for pl in _PLANES)
    return six_v - two_p + sum(W) - 1


def newton_number(support):
    """Kouchnirenko's Newton number of a convenient support."""
    return newton_number_of_points(support.points, support.dimension)


def in_gamma_minus(point, diagram):
    """Closed-region membership: nonnegative and weakly below some facet."""
    if any(c < 0 for c in point):
        return False
    return any(_dot(f.normal, point) <= f.offset for f in diagram.facets)


def in_gamma_plus(point, diagram):
    """Membership in the Newton polyhedron of a convenient support."""
    if any(c < 0 for c in point):
        return False
    return all(_dot(f.normal, point) >= f.offset for f in diagram.facets)


def diagram_to_dict(diagram, metrics=None):
    out = {
        "dimension": diagram.dimension,
        "vertices": [list(v) for v in diagram.vertices],
        "edges": [[list(a), list(b)] for a, b in diagram.edges],
        "facets": [
            {"vertices": [list(v) for v in f.vertices], "normal": list(f.normal), "offset": f.offset}
            for f in diagram.facets
        ],
        "axis_intercepts": list(diagram.axis_intercepts),
    }
    if metrics is not None:
        m = {"V": str(metrics.V)}
        for i, p in enumerate(metrics.P, 1):
            m[f"P{i}"] = str(p)
        for i, w in enumerate(metrics.W, 1):
            m[f"W{i}"] = w
        out["metrics"] = m
    return out
