"""Static renderings: SVG of a planar Newton polygon, OBJ mesh of the 3D region under the diagram."""
from __future__ import annotations

from .geometry import _PLANES, _plane_points, newton_polygon
from .parser import format_monomial


def render_svg(support, diagram, scale=40, margin=30):
    if diagram.dimension != 2:
        raise ValueError("SVG rendering is for 2-variable germs")
    chain = newton_polygon(list(support.points))
    xmax = max(max(p[0] for p in support.points), 1)
    ymax = max(max(p[1] for p in support.points), 1)
    width = xmax * scale + 2 * margin
    height = ymax * scale + 2 * margin

    def xy(p):
        return margin + p[0] * scale, height - margin - p[1] * scale

    region = [(0, 0)] + chain[::-1] if chain else []
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="#999" stroke-width="0.5">',
    ]
    for i in range(xmax + 1):
        (x0, y0), (x1, y1) = xy((i, 0)), xy((i, ymax))
        lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    for j in range(ymax + 1):
        (x0, y0), (x1, y1) = xy((0, j)), xy((xmax, j))
        lines.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    lines.append("</g>")
    if region:
        pts = " ".join("{},{}".format(*xy(p)) for p in region)
        lines.append(f'<polygon class="gamma-minus" points="{pts}" fill="#cde" stroke="none"/>')
        path = " ".join("{},{}".format(*xy(p)) for p in chain)
        lines.append(f'<polyline class="diagram" points="{path}" fill="none" stroke="#036" stroke-width="2"/>')
    for p in support.sorted_points():
        cx, cy = xy(p)
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="#c30"><title>{format_monomial(p)}</title></circle>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_obj(diagram):
    """Triangulated boundary of the region under a convenient 3D diagram."""
    if diagram.dimension != 3:
        raise ValueError("OBJ rendering is for 3-variable germs")
    index = {}
    verts = []

    def vid(p):
        if p not in index:
            index[p] = len(verts) + 1
            verts.append(p)
        return index[p]

    faces = []
    for f in diagram.facets:
        ring = [vid(v) for v in f.vertices]
        faces.extend((ring[0], a, b) for a, b in zip(ring[1:], ring[2:]))
    origin = vid((0, 0, 0))
    for plane in _PLANES:
        chain = newton_polygon(_plane_points(diagram.vertices, plane))
        lifted = []
        for u, v in chain:
            p = [0, 0, 0]
            p[plane[0]], p[plane[1]] = u, v
            lifted.append(vid(tuple(p)))
        faces.extend((origin, a, b) for a, b in zip(lifted, lifted[1:]))
    out = ["# region under the Newton diagram"]
    out += [f"v {x} {y} {z}" for x, y, z in verts]
    out += [f"f {a} {b} {c}" for a, b, c in faces]
    return "\n".join(out) + "\n"
