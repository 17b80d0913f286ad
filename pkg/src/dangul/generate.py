"""Exhaustive generation of rooted planar maps with prescribed face degrees.

Maps are grown from the root polygon by a deterministic exploration: the
first free side of the first open hole is either glued to a new polygon or
to another free side of the same hole (which splits the hole in two, keeping
the surface a sphere).  The exploration order is fixed by the map, so every
rooted map is produced exactly once; canonical codes are still checked.
"""
from .map_core import PlanarMap, RootSpec, canonical_code, girth, INFINITE


class _UnionFind:
    def __init__(self):
        self.parent = []
        self.log = []

    def add(self):
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            self.log.append(None)
            return
        if a < b:
            a, b = b, a
        self.parent[a] = b
        self.log.append(a)

    def undo(self):
        a = self.log.pop()
        if a is not None:
            self.parent[a] = a


def gluings(root_degree, d, max_faces, min_girth=None, exact_faces=None):
    """Yield (phi, alpha) for every rooted gluing.

    Face 0 has degree root_degree and holds half-edges 0..root_degree-1; the
    other faces have degree d.  max_faces bounds the total number of faces.
    With min_girth set, branches whose final girth is certainly smaller are
    cut (the final girth is still checked by the caller).
    """
    phi = []
    alpha = []
    origin = []
    uf = _UnionFind()
    done_edges = []

    def new_face(k):
        start = len(phi)
        corners = [uf.add() for _ in range(k)]
        for i in range(k):
            phi.append(start + (i + 1) % k)
            alpha.append(-1)
            origin.append(corners[i])
        return list(range(start, start + k))

    def drop_face(k):
        for _ in range(k):
            phi.pop()
            alpha.pop()
            origin.pop()
            uf.parent.pop()

    def head(h):
        return origin[phi[h]]

    def glue(a, b):
        alpha[a], alpha[b] = b, a
        uf.union(origin[a], head(b))
        uf.union(head(a), origin[b])
        done_edges.append(a)

    def unglue(a, b):
        alpha[a] = alpha[b] = -1
        uf.undo()
        uf.undo()
        done_edges.pop()

    def too_short(holes):
        if min_girth is None:
            return False
        adj = {}
        for h in done_edges:
            u, v = uf.find(origin[h]), uf.find(head(h))
            if u == v:
                return True
            adj.setdefault(u, []).append((v, h))
            adj.setdefault(v, []).append((u, h))
        probes = [(h, True) for h in done_edges]
        probes += [(h, False) for hole in holes for h in hole]
        for h, is_done in probes:
            u, v = uf.find(origin[h]), uf.find(head(h))
            if u == v:
                return True
            if min_girth <= 2 and not is_done:
                continue
            # bounded BFS from u to v avoiding edge h
            limit = min_girth - 2
            dist = {u: 0}
            frontier = [u]
            depth = 0
            while frontier and depth < limit:
                depth += 1
                nxt = []
                for x in frontier:
                    for y, e in adj.get(x, ()):
                        if e != h and y not in dist:
                            if y == v:
                                return True
                            dist[y] = depth
                            nxt.append(y)
                frontier = nxt
        return False

    root_sides = new_face(root_degree)
    counter = [1]

    def rec(holes):
        holes = [hole for hole in holes if hole]
        if not holes:
            if exact_faces is None or counter[0] == exact_faces:
                yield list(phi), list(alpha)
            return
        hole, rest = holes[0], holes[1:]
        e = hole[0]
        # glue a new polygon on side e
        if counter[0] < max_faces:
            sides = new_face(d)
            counter[0] += 1
            glue(e, sides[0])
            new_hole = sides[:0:-1] + hole[1:]
            if not too_short([new_hole] + rest):
                yield from rec([new_hole] + rest)
            unglue(e, sides[0])
            counter[0] -= 1
            drop_face(d)
        # glue e to another free side of the same hole
        for j in range(1, len(hole)):
            g = hole[j]
            glue(e, g)
            split = [hole[1:j], hole[j + 1:]]
            if not too_short(split + rest):
                yield from rec(split + rest)
            unglue(e, g)

    # the hole sees the root sides in reverse phi order
    yield from rec([root_sides[:1] + root_sides[:0:-1]])


def generate_maps(root_degree, d, max_faces, min_girth=None, exact_faces=None):
    """Corner-rooted maps (root corner in face 0) with face 0 of degree root_degree.

    The root anchor is alpha(0), so the root corner sits in face 0.  Maps are
    deduplicated by canonical code (a duplicate would be a generator bug).
    """
    seen = set()
    out = []
    for phi, alpha in gluings(root_degree, d, max_faces, min_girth, exact_faces):
        sigma = [phi[alpha[h]] for h in range(len(phi))]
        m = PlanarMap(alpha, sigma, RootSpec("corner", alpha[0]), marked_face=0)
        if min_girth is not None:
            g = girth(m)
            if g is not INFINITE and g < min_girth:
                continue
        code = canonical_code(m)
        if code in seen:
            raise AssertionError("generator produced a duplicate rooted map")
        seen.add(code)
        out.append(m)
    return out


def generate_d_angulations(d, max_faces, min_girth=None):
    """All corner-rooted d-angulations with at most max_faces faces."""
    return generate_maps(d, d, max_faces, min_girth)
