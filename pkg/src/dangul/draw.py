"""Deterministic SVG drawings for debugging.

Maps use a Tutte barycentric layout: the vertices of the outer face sit on a
circle and every other vertex is the average of its neighbours.  Mobiles are
trees, so they get a layered layout by BFS depth instead.
"""
import math

import numpy as np

SIZE = 400
MARGIN = 30


def tutte_layout(m, outer_face=None):
    if outer_face is None:
        outer_face = m.root_face if m.root_face is not None else 0
    outer = []
    for h in m.faces[outer_face]:
        v = m.vertex_of[h]
        if v not in outer:
            outer.append(v)
    n = m.n_vertices
    pos = np.zeros((n, 2))
    k = len(outer)
    for i, v in enumerate(outer):
        angle = 2 * math.pi * i / k + math.pi / 2
        pos[v] = (math.cos(angle), math.sin(angle))
    inner = [v for v in range(n) if v not in outer]
    if inner:
        index = {v: i for i, v in enumerate(inner)}
        lap = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for v in inner:
            i = index[v]
            for h in m.vertices[v]:
                u = m.vertex_of[m.alpha[h]]
                if u == v:
                    continue
                lap[i, i] += 1
                if u in index:
                    lap[i, index[u]] -= 1
                else:
                    rhs[i] += pos[u]
        solved = np.linalg.lstsq(lap, rhs, rcond=None)[0]
        for v in inner:
            pos[v] = solved[index[v]]
    return pos


def _scale(pos):
    lo = pos.min(axis=0)
    span = np.maximum(pos.max(axis=0) - lo, 1e-9)
    return MARGIN + (pos - lo) / span * (SIZE - 2 * MARGIN)


def _svg(lines, circles):
    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d">' % (SIZE, SIZE)]
    for (x1, y1), (x2, y2), extra in lines:
        out.append('<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" stroke="black"%s/>'
                   % (x1, y1, x2, y2, extra))
    for (x, y), fill in circles:
        out.append('<circle cx="%.2f" cy="%.2f" r="5" stroke="black" fill="%s"/>' % (x, y, fill))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def map_svg(m, ingoing=None):
    """SVG of a map; with directions, ingoing half-edges are drawn thicker."""
    pos = _scale(tutte_layout(m))
    lines = []
    for h, a in m.edges():
        p, q = pos[m.vertex_of[h]], pos[m.vertex_of[a]]
        mid = (p + q) / 2
        for end, half in ((p, h), (q, a)):
            width = 3 if ingoing is not None and ingoing[half] else 1
            lines.append((end, mid, ' stroke-width="%d"' % width))
    circles = [(pos[v], "white") for v in range(m.n_vertices)]
    return _svg(lines, circles)


def mobile_svg(t):
    depth = {0: 0}
    order = [0]
    for v in order:
        for h in t.vertices[v]:
            a = t.alpha[h]
            if a >= 0:
                u = t.vertex_of[a]
                if u not in depth:
                    depth[u] = depth[v] + 1
                    order.append(u)
    layers = {}
    for v in order:
        layers.setdefault(depth[v], []).append(v)
    pos = np.zeros((len(t.vertices), 2))
    for dep, vs in layers.items():
        for i, v in enumerate(vs):
            pos[v] = ((i + 1) / (len(vs) + 1), dep)
    pos = _scale(pos)
    lines = []
    for h, a in t.edges():
        lines.append((pos[t.vertex_of[h]], pos[t.vertex_of[a]], ""))
    for h in t.buds:
        p = pos[t.vertex_of[h]]
        lines.append((p, p + np.array([0.0, -12.0]), ' stroke-dasharray="2,2"'))
    circles = [(pos[v], "black" if t.is_black(v) else "white") for v in range(len(t.vertices))]
    return _svg(lines, circles)
