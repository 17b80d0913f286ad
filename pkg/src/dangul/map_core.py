"""Rotation-system planar maps.

A map on n_half half-edges is a pair (alpha, sigma): alpha pairs the two
halves of each edge, sigma sends a half-edge to the next one counterclockwise
around its vertex.  Faces are the orbits of phi = sigma o alpha; the face in
the phi-orbit of h lies on the right of h (h read away from its vertex).  The
corner between h and sigma(h) therefore lies in the face of alpha(h).
"""
from collections import deque
from enum import Enum


class MapError(ValueError):
    pass


class NotInvolution(MapError):
    pass


class NotPermutation(MapError):
    pass


class Disconnected(MapError):
    pass


class NonPlanar(MapError):
    pass


class Girth(Enum):
    INFINITE = "infinite"


INFINITE = Girth.INFINITE

ROOT_KINDS = ("corner", "face", "vertex")


class RootSpec:
    __slots__ = ("kind", "anchor")

    def __init__(self, kind, anchor):
        if kind not in ROOT_KINDS:
            raise MapError("unknown root kind %r" % (kind,))
        self.kind = kind
        self.anchor = int(anchor)

    def __eq__(self, other):
        return isinstance(other, RootSpec) and (self.kind, self.anchor) == (other.kind, other.anchor)

    def __hash__(self):
        return hash((self.kind, self.anchor))

    def __repr__(self):
        return "RootSpec(%r, %d)" % (self.kind, self.anchor)


def _orbits(perm):
    n = len(perm)
    seen = [False] * n
    label = [0] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        h = start
        while not seen[h]:
            seen[h] = True
            label[h] = len(cycles)
            cyc.append(h)
            h = perm[h]
        cycles.append(tuple(cyc))
    return cycles, label


def check_permutation(perm, n):
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotPermutation("not a permutation of 0..%d" % (n - 1))


class PlanarMap:
    """Validated planar map; immutable after construction."""

    def __init__(self, alpha, sigma, root=None, marked_face=None, marked_vertex=None):
        alpha = tuple(int(a) for a in alpha)
        sigma = tuple(int(s) for s in sigma)
        n = len(alpha)
        if len(sigma) != n:
            raise MapError("alpha and sigma have different lengths")
        if n == 0 or n % 2:
            raise MapError("need a positive even number of half-edges")
        for h, a in enumerate(alpha):
            if not 0 <= a < n or a == h or alpha[a] != h:
                raise NotInvolution("alpha is not a fixed-point-free involution at %d" % h)
        check_permutation(sigma, n)
        self.n_half = n
        self.alpha = alpha
        self.sigma = sigma
        self.sigma_inv = tuple(sorted(range(n), key=sigma.__getitem__))
        self.phi = tuple(sigma[alpha[h]] for h in range(n))
        self.vertices, self.vertex_of = _orbits(sigma)
        self.faces, self.face_of = _orbits(self.phi)
        self._check_connected()
        V, E, F = len(self.vertices), n // 2, len(self.faces)
        if V - E + F != 2:
            raise NonPlanar("Euler characteristic %d != 2" % (V - E + F))
        if root is not None and not isinstance(root, RootSpec):
            root = RootSpec(*root)
        if root is not None and not 0 <= root.anchor < n:
            raise MapError("root anchor out of range")
        for mark in (marked_face, marked_vertex):
            if mark is not None and not 0 <= mark < n:
                raise MapError("mark out of range")
        self.root = root
        self.marked_face = marked_face
        self.marked_vertex = marked_vertex

    def _check_connected(self):
        n = self.n_half
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            h = stack.pop()
            for g in (self.alpha[h], self.sigma[h]):
                if not seen[g]:
                    seen[g] = True
                    count += 1
                    stack.append(g)
        if count != n:
            raise Disconnected("alpha and sigma do not act transitively")

    # basic counts ---------------------------------------------------------

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return self.n_half // 2

    @property
    def n_faces(self):
        return len(self.faces)

    def edges(self):
        """Edges as pairs (h, alpha(h)) with h < alpha(h)."""
        return [(h, a) for h, a in enumerate(self.alpha) if h < a]

    def edge_id(self, h):
        return min(h, self.alpha[h])

    def endpoints(self, h):
        return self.vertex_of[h], self.vertex_of[self.alpha[h]]

    def vertex_degree(self, v):
        return len(self.vertices[v])

    def face_degree(self, f):
        return len(self.faces[f])

    def face_vertices(self, f):
        return [self.vertex_of[h] for h in self.faces[f]]

    def corner_face(self, h):
        """Face containing the corner between h and sigma(h)."""
        return self.face_of[self.alpha[h]]

    def left_face(self, h):
        return self.face_of[self.alpha[h]]

    def right_face(self, h):
        return self.face_of[h]

    # rooting --------------------------------------------------------------

    def with_root(self, kind, anchor):
        return PlanarMap(self.alpha, self.sigma, RootSpec(kind, anchor),
                         self.marked_face, self.marked_vertex)

    def with_marks(self, marked_face=None, marked_vertex=None):
        return PlanarMap(self.alpha, self.sigma, self.root, marked_face, marked_vertex)

    @property
    def root_face(self):
        if self.root is None or self.root.kind == "vertex":
            return None
        if self.root.kind == "face":
            return self.face_of[self.root.anchor]
        return self.corner_face(self.root.anchor)

    @property
    def root_vertex(self):
        if self.root is None or self.root.kind == "face":
            return None
        return self.vertex_of[self.root.anchor]

    def face_rooted(self):
        """Forget the root corner, keep the root face."""
        f = self.root_face
        if f is None:
            raise MapError("map has no root face")
        return self.with_root("face", self.faces[f][0])

    def outer_vertices(self):
        f = self.root_face
        return sorted(set(self.face_vertices(f)))

    def outer_edges(self):
        f = self.root_face
        return sorted({self.edge_id(h) for h in self.faces[f]})

    def relabel(self, perm):
        """Rename half-edge h to perm[h]."""
        n = self.n_half
        check_permutation(perm, n)
        alpha = [0] * n
        sigma = [0] * n
        for h in range(n):
            alpha[perm[h]] = perm[self.alpha[h]]
            sigma[perm[h]] = perm[self.sigma[h]]
        root = None if self.root is None else RootSpec(self.root.kind, perm[self.root.anchor])
        mf = None if self.marked_face is None else perm[self.marked_face]
        mv = None if self.marked_vertex is None else perm[self.marked_vertex]
        return PlanarMap(alpha, sigma, root, mf, mv)

    def __eq__(self, other):
        return (isinstance(other, PlanarMap) and self.alpha == other.alpha
                and self.sigma == other.sigma and self.root == other.root
                and self.marked_face == other.marked_face
                and self.marked_vertex == other.marked_vertex)

    def __hash__(self):
        return hash((self.alpha, self.sigma))

    def __repr__(self):
        return "PlanarMap(V=%d, E=%d, F=%d, root=%r)" % (
            self.n_vertices, self.n_edges, self.n_faces, self.root)

    def to_dict(self):
        out = {"n_half": self.n_half, "alpha": list(self.alpha), "sigma": list(self.sigma)}
        if self.root is not None:
            out["root"] = {"kind": self.root.kind, "anchor": self.root.anchor}
        if self.marked_face is not None:
            out["marked_face"] = self.marked_face
        if self.marked_vertex is not None:
            out["marked_vertex"] = self.marked_vertex
        return out

    @classmethod
    def from_dict(cls, data):
        if len(data["alpha"]) != data["n_half"]:
            raise MapError("n_half does not match the arrays")
        root = data.get("root")
        if root is not None:
            root = RootSpec(root["kind"], root["anchor"])
        return cls(data["alpha"], data["sigma"], root,
                   data.get("marked_face"), data.get("marked_vertex"))


def build_map(alpha, sigma, root=None):
    return PlanarMap(alpha, sigma, root)


def faces(m):
    return [list(f) for f in m.faces]


def is_d_angulation(m, d):
    return all(len(f) == d for f in m.faces)


def is_simple_face(m, f):
    vs = m.face_vertices(f)
    return len(set(vs)) == len(vs)


def is_p_gonal_d_angulation(m, p, d, boundary=None):
    """Marked face (default: m.marked_face) of degree p with a simple contour, others of degree d."""
    if boundary is None:
        if m.marked_face is None:
            raise MapError("no marked face")
        boundary = m.face_of[m.marked_face]
    if m.face_degree(boundary) != p or not is_simple_face(m, boundary):
        return False
    return all(len(f) == d for i, f in enumerate(m.faces) if i != boundary)


def girth(m):
    """Length of a shortest cycle, INFINITE for trees."""
    adj = [[] for _ in range(m.n_vertices)]
    best = None
    seen_pairs = set()
    for h, a in m.edges():
        u, v = m.vertex_of[h], m.vertex_of[a]
        if u == v:
            return 1
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            best = 2
        seen_pairs.add(key)
        adj[u].append((v, h))
        adj[v].append((u, h))
    if best is not None:
        return best
    # simple graph: shortest cycle through edge uv is 1 + dist(u, v) without uv
    for h, a in m.edges():
        u, v = m.vertex_of[h], m.vertex_of[a]
        dist = {u: 0}
        q = deque([u])
        while q and v not in dist:
            x = q.popleft()
            for y, e in adj[x]:
                if e != h and y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        if v in dist:
            c = dist[v] + 1
            if best is None or c < best:
                best = c
    return INFINITE if best is None else best


def canonical_code(m, anchor=None):
    """Root-preserving isomorphism code: BFS relabeling from the anchor.

    Returns bytes; two maps with the same code at their anchors are isomorphic
    by a map sending anchor to anchor.
    """
    if anchor is None:
        if m.root is None:
            raise MapError("canonical code needs a root")
        anchor = m.root.anchor
    return _code(m.alpha, m.sigma, anchor)


def canonical_labels(alpha, sigma, anchor):
    """BFS first-visit numbering of half-edges starting at anchor."""
    label = {anchor: 0}
    order = [anchor]
    i = 0
    while i < len(order):
        h = order[i]
        i += 1
        for g in (sigma[h], alpha[h]):
            if g >= 0 and g not in label:
                label[g] = len(order)
                order.append(g)
    return label, order


def _code(alpha, sigma, anchor):
    label, order = canonical_labels(alpha, sigma, anchor)
    out = [len(order)]
    for h in order:
        a = alpha[h]
        out.append(label[sigma[h]])
        out.append(label[a] if a >= 0 else len(order))
    return encode_ints(out)


def encode_ints(values):
    return b"".join(v.to_bytes(4, "big", signed=True) for v in values)


def canonical_relabel(m, anchor=None):
    """Map relabeled so that the anchor becomes 0 and ids follow the BFS order."""
    if anchor is None:
        anchor = m.root.anchor
    label, order = canonical_labels(m.alpha, m.sigma, anchor)
    return m.relabel([label[h] for h in range(m.n_half)])


def rooted_code(m):
    """Code of a face- or vertex-rooted map: least code over its possible anchors."""
    if m.root is None:
        raise MapError("map is not rooted")
    if m.root.kind == "corner":
        return canonical_code(m)
    if m.root.kind == "face":
        f = m.face_of[m.root.anchor]
        # corners of the face are sigma(h)-preceding corners of alpha of its half-edges
        anchors = [m.alpha[h] for h in m.faces[f]]
    else:
        anchors = list(m.vertices[m.vertex_of[m.root.anchor]])
    return min(canonical_code(m, a) for a in anchors)


def face_degree_bound_sides(m, p, d):
    """Both sides of (d-2)(E-p) <= d(V-p) + p - d.

    Holds for a map with one face of degree p and all other faces of degree >= d,
    with equality exactly when those faces all have degree d.
    """
    E, V = m.n_edges, m.n_vertices
    return (d - 2) * (E - p), d * (V - p) + p - d


# small constructors used by tests and examples ------------------------------

def polygon(k):
    """A single k-cycle, face-rooted at the face on the right of half-edge 0."""
    # half-edges 2i (at vertex i, toward i+1) and 2i+1 (at vertex i+1, toward i)
    alpha = [0] * (2 * k)
    sigma = [0] * (2 * k)
    for i in range(k):
        alpha[2 * i], alpha[2 * i + 1] = 2 * i + 1, 2 * i
    for i in range(k):
        out_h = 2 * i
        in_h = 2 * ((i - 1) % k) + 1
        sigma[out_h] = in_h
        sigma[in_h] = out_h
    return PlanarMap(alpha, sigma, RootSpec("face", 0))


def from_faces(face_list, root=None):
    """Build a map from faces given as cyclic lists of edge labels.

    Each edge label appears twice overall (once per side).  A face (a, b, c)
    lists its sides in the order of phi.  Used only for hand-written fixtures.
    """
    n = sum(len(f) for f in face_list)
    ids = {}
    phi = [0] * n
    alpha = [-1] * n
    k = 0
    for f in face_list:
        start = k
        for i, lab in enumerate(f):
            phi[k] = start + (i + 1) % len(f)
            ids.setdefault(lab, []).append(k)
            k += 1
    for lab, hs in ids.items():
        if len(hs) != 2:
            raise MapError("edge %r must appear exactly twice" % (lab,))
        alpha[hs[0]], alpha[hs[1]] = hs[1], hs[0]
    # phi = sigma o alpha  =>  sigma = phi o alpha
    sigma = [phi[alpha[h]] for h in range(n)]
    if root is not None and not isinstance(root, RootSpec):
        root = RootSpec(*root)
    return PlanarMap(alpha, sigma, root)


def from_gluing(phi, alpha, root=None):
    sigma = [phi[alpha[h]] for h in range(len(phi))]
    return PlanarMap(alpha, sigma, root)
