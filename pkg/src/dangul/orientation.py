"""Weighted biorientations of planar maps.

Every half-edge carries a direction (ingoing toward its vertex, or outgoing)
and an integer weight.  An edge with i ingoing halves is i-way.  Ordinary
orientations are the N-biorientations with weight 1 on every edge.
"""
from collections import deque

from .map_core import PlanarMap, RootSpec, MapError, canonical_labels, encode_ints


class Infeasible(ValueError):
    pass


class WeightedBiorientation:
    __slots__ = ("map", "ingoing", "weight")

    def __init__(self, m, ingoing, weight=None):
        if len(ingoing) != m.n_half:
            raise MapError("direction array has the wrong length")
        self.map = m
        self.ingoing = tuple(bool(x) for x in ingoing)
        if weight is None:
            weight = [1 if x else 0 for x in self.ingoing]
        if len(weight) != m.n_half:
            raise MapError("weight array has the wrong length")
        self.weight = tuple(int(w) for w in weight)

    @classmethod
    def from_weights(cls, m, weight):
        """Consistent biorientation: ingoing exactly where the weight is positive."""
        return cls(m, [w > 0 for w in weight], weight)

    def __eq__(self, other):
        return (isinstance(other, WeightedBiorientation) and self.map == other.map
                and self.ingoing == other.ingoing and self.weight == other.weight)

    def __hash__(self):
        return hash((self.map, self.ingoing, self.weight))

    def __repr__(self):
        return "WeightedBiorientation(%r)" % (self.map,)

    def with_map(self, m):
        return WeightedBiorientation(m, self.ingoing, self.weight)

    def relabel(self, perm):
        n = self.map.n_half
        ing = [False] * n
        w = [0] * n
        for h in range(n):
            ing[perm[h]] = self.ingoing[h]
            w[perm[h]] = self.weight[h]
        return WeightedBiorientation(self.map.relabel(perm), ing, w)

    def reversed(self):
        """Every edge reversed: each half-edge takes the direction and weight of its partner."""
        a = self.map.alpha
        return WeightedBiorientation(self.map, [self.ingoing[a[h]] for h in range(len(a))],
                                     [self.weight[a[h]] for h in range(len(a))])

    def is_consistent(self):
        return all((w > 0) if i else (w <= 0) for i, w in zip(self.ingoing, self.weight))

    def is_N(self):
        return all((w > 0) if i else (w == 0) for i, w in zip(self.ingoing, self.weight))

    def is_ordinary(self):
        return self.is_N() and all(edge_kind(self, h) == 1 and self.weight[h] + self.weight[a] == 1
                                   for h, a in self.map.edges())

    def to_dict(self):
        out = self.map.to_dict()
        out["dir"] = ["in" if x else "out" for x in self.ingoing]
        out["weight"] = list(self.weight)
        return out

    @classmethod
    def from_dict(cls, data):
        m = PlanarMap.from_dict(data)
        ing = []
        for x in data["dir"]:
            if x not in ("in", "out"):
                raise MapError("direction must be 'in' or 'out'")
            ing.append(x == "in")
        return cls(m, ing, data.get("weight"))


def ordinary(m, ingoing):
    return WeightedBiorientation(m, ingoing)


# local parameters ----------------------------------------------------------

def edge_kind(b, h):
    """0, 1 or 2: number of ingoing halves of the edge containing h."""
    return int(b.ingoing[h]) + int(b.ingoing[b.map.alpha[h]])


def edge_weight(b, h):
    return b.weight[h] + b.weight[b.map.alpha[h]]


def vertex_weight(b, v):
    return sum(b.weight[h] for h in b.map.vertices[v] if b.ingoing[h])


def indegree(b, v):
    return sum(1 for h in b.map.vertices[v] if b.ingoing[h])


def outdegree(b, v):
    return sum(1 for h in b.map.vertices[v] if not b.ingoing[h])


def face_weight(b, f):
    # the face in the phi-orbit of h is the one on the right of h
    return sum(b.weight[h] for h in b.map.faces[f] if not b.ingoing[h])


def clockwise_degree(b, f):
    return sum(1 for h in b.map.faces[f] if not b.ingoing[h])


# alpha/beta constraints and flow feasibility ---------------------------------

class ConstraintSpec:
    """Target vertex weights (per vertex index) and edge weights (per edge id = smaller half-edge)."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha, beta):
        self.alpha = dict(alpha)
        self.beta = dict(beta)
        if any(x < 0 for x in self.alpha.values()) or any(x < 0 for x in self.beta.values()):
            raise ValueError("weights must be nonnegative")


def _max_flow(n, arcs, s, t):
    """Integer max-flow by shortest augmenting paths. arcs: list of (u, v, cap).

    Returns (value, flow per arc).
    """
    head, cap, nxt = [], [], []
    first = [-1] * n
    for u, v, c in arcs:
        for a, b, cc in ((u, v, c), (v, u, 0)):
            head.append(b)
            cap.append(cc)
            nxt.append(first[a])
            first[a] = len(head) - 1
    total = 0
    while True:
        prev = [-1] * n
        prev[s] = -2
        q = deque([s])
        while q and prev[t] == -1:
            u = q.popleft()
            e = first[u]
            while e != -1:
                if cap[e] > 0 and prev[head[e]] == -1:
                    prev[head[e]] = e
                    q.append(head[e])
                e = nxt[e]
        if prev[t] == -1:
            break
        push = None
        v = t
        while v != s:
            e = prev[v]
            push = cap[e] if push is None else min(push, cap[e])
            v = head[e ^ 1]
        v = t
        while v != s:
            e = prev[v]
            cap[e] -= push
            cap[e ^ 1] += push
            v = head[e ^ 1]
        total += push
    return total, [cap[2 * i + 1] for i in range(len(arcs))]


def _flow_solution(m, spec):
    edges = m.edges()
    V = m.n_vertices
    if sum(spec.alpha.get(v, 0) for v in range(V)) != sum(spec.beta.get(h, 0) for h, _ in edges):
        return None
    # nodes: 0 source, 1 sink, 2.. edges, then vertices
    src, snk = 0, 1
    arcs = []
    half_arcs = []
    for i, (h, a) in enumerate(edges):
        be = spec.beta.get(h, 0)
        arcs.append((src, 2 + i, be))
        u, v = m.vertex_of[h], m.vertex_of[a]
        half_arcs.append((len(arcs), h))
        arcs.append((2 + i, 2 + len(edges) + u, be))
        half_arcs.append((len(arcs), a))
        arcs.append((2 + i, 2 + len(edges) + v, be))
    for v in range(V):
        arcs.append((2 + len(edges) + v, snk, spec.alpha.get(v, 0)))
    value, flow = _max_flow(2 + len(edges) + V, arcs, src, snk)
    if value != sum(spec.beta.get(h, 0) for h, _ in edges):
        return None
    weight = [0] * m.n_half
    for idx, h in half_arcs:
        weight[h] = flow[idx]
    return weight


def feasible(m, spec):
    """True iff an alpha/beta-orientation exists (max-flow saturates every edge)."""
    return _flow_solution(m, spec) is not None


def construct(m, spec):
    """Some alpha/beta-orientation of m; raises Infeasible if none exists."""
    weight = _flow_solution(m, spec)
    if weight is None:
        raise Infeasible("no orientation with these vertex and edge weights")
    return WeightedBiorientation.from_weights(m, weight)


def subset_condition_oracle(m, spec):
    """Brute force over all vertex subsets: sum condition and the induced-edge inequality."""
    V = m.n_vertices
    edges = [(m.vertex_of[h], m.vertex_of[a], spec.beta.get(h, 0)) for h, a in m.edges()]
    if sum(spec.alpha.get(v, 0) for v in range(V)) != sum(e[2] for e in edges):
        return False
    for mask in range(1, 1 << V):
        lhs = sum(spec.alpha.get(v, 0) for v in range(V) if mask >> v & 1)
        rhs = sum(be for u, v, be in edges if mask >> u & 1 and mask >> v & 1)
        if lhs < rhs:
            return False
    return True


# circuits, minimality, accessibility -----------------------------------------

def usable(b, h):
    """Can the edge of h be traversed starting from the vertex of h?"""
    return b.weight[b.map.alpha[h]] > 0 if b.is_consistent() else b.ingoing[b.map.alpha[h]]


def _usable_array(b):
    a = b.map.alpha
    return [b.ingoing[a[h]] for h in range(len(a))]


def reachable_vertices(b, v):
    m = b.map
    ok = _usable_array(b)
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for h in m.vertices[u]:
            if ok[h]:
                w = m.vertex_of[m.alpha[h]]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen


def is_accessible(b, v=None):
    if v is None:
        v = b.map.root_vertex
    return len(reachable_vertices(b, v)) == b.map.n_vertices


def _root_face(b):
    f = b.map.root_face
    if f is None:
        raise MapError("biorientation must be face- or corner-rooted")
    return f


def _dual_reach(b, f0):
    """Faces reachable from f0 crossing edges not usable (in that crossing direction) by a circuit.

    Crossing the edge of h from the face on the right of h to the face on its
    left is blocked iff the edge can be traversed along h.
    """
    m = b.map
    ok = _usable_array(b)
    seen = {f0}
    stack = [f0]
    while stack:
        f = stack.pop()
        for h in m.faces[f]:
            # h has f on its right; crossing to the left face is blocked if h is usable
            if not ok[h]:
                g = m.face_of[m.alpha[h]]
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
    return seen


def is_minimal(b, f0=None):
    """No circuit with the root face on its right."""
    if f0 is None:
        f0 = _root_face(b)
    return len(_dual_reach(b, f0)) == b.map.n_faces


def circuit_left_region(m, circuit):
    """Faces on the left of a simple cycle given by its traversed half-edges."""
    on_cycle = set(circuit) | {m.alpha[h] for h in circuit}
    start = {m.face_of[m.alpha[h]] for h in circuit}
    seen = set(start)
    stack = list(start)
    while stack:
        f = stack.pop()
        for h in m.faces[f]:
            if h in on_cycle:
                continue
            g = m.face_of[m.alpha[h]]
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return seen


def is_ccw_circuit(m, circuit, f0):
    return f0 not in circuit_left_region(m, circuit)


def simple_circuits(b, allowed=None):
    """All simple directed cycles, each as a tuple of traversed half-edges.

    Each cycle is reported once (from its least vertex).  Exponential; meant
    for small instances and as an oracle.
    """
    m = b.map
    ok = _usable_array(b)
    out = []
    for s in range(m.n_vertices):
        path = []
        on_path = {s}

        def dfs(u):
            for h in m.vertices[u]:
                if not ok[h] or (allowed is not None and h not in allowed):
                    continue
                w = m.vertex_of[m.alpha[h]]
                if m.edge_id(h) in {m.edge_id(g) for g in path}:
                    continue
                if w == s:
                    out.append(tuple(path + [h]))
                elif w > s and w not in on_path:
                    on_path.add(w)
                    path.append(h)
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    return out


def find_ccw_circuit(b, f0=None):
    """Some circuit with the root face on its right, or None."""
    if f0 is None:
        f0 = _root_face(b)
    m = b.map
    reach = _dual_reach(b, f0)
    if len(reach) == m.n_faces:
        return None
    # arcs along the boundary of the unreachable region, with it on the left
    boundary = set()
    ok = _usable_array(b)
    for h in range(m.n_half):
        if ok[h] and m.face_of[h] in reach and m.face_of[m.alpha[h]] not in reach:
            boundary.add(h)
    for c in simple_circuits(b, boundary):
        if is_ccw_circuit(m, c, f0):
            return c
    for c in simple_circuits(b):
        if is_ccw_circuit(m, c, f0):
            return c
    raise AssertionError("unreachable faces but no counterclockwise circuit")


def reverse_circuit(b, circuit):
    """Push one unit of weight backwards along the circuit (one parallel copy reversed)."""
    a = b.map.alpha
    w = list(b.weight)
    for h in circuit:
        w[a[h]] -= 1
        w[h] += 1
    return WeightedBiorientation.from_weights(b.map, w)


def minimize(b, f0=None):
    """The unique minimal orientation with the same vertex and edge weights."""
    if f0 is None:
        f0 = _root_face(b)
    if not b.is_N():
        raise ValueError("minimize expects an N-biorientation")
    while True:
        c = find_ccw_circuit(b, f0)
        if c is None:
            return b
        b = reverse_circuit(b, c)


# classes ----------------------------------------------------------------------

def is_admissible(b):
    m = b.map
    f0 = _root_face(b)
    contour = m.faces[f0]
    vs = [m.vertex_of[h] for h in contour]
    if len(set(vs)) != len(vs):
        return False
    for v in set(vs):
        if indegree(b, v) != 1:
            return False
    for h in contour:
        a = m.alpha[h]
        if edge_kind(b, h) != 1:
            return False
        i, o = (h, a) if b.ingoing[h] else (a, h)
        if b.weight[i] != 1 or b.weight[o] != 0:
            return False
    return True


def is_clockwise_minimal(b):
    m = b.map
    f0 = _root_face(b)
    if not is_minimal(b, f0):
        return False
    for h in m.faces[f0]:
        k = edge_kind(b, h)
        if k == 2:
            continue
        if k != 1:
            return False
        out = h if not b.ingoing[h] else m.alpha[h]
        if m.face_of[out] == f0:
            return False
    return True


def in_class_B(b):
    if not is_clockwise_minimal(b):
        return False
    v = m_outer_vertex(b)
    return is_accessible(b, v)


def m_outer_vertex(b):
    m = b.map
    return m.vertex_of[m.faces[_root_face(b)][0]]


def in_class_B_tilde(b):
    return in_class_B(b) and is_admissible(b)


def in_class_B0(b):
    """Source-biorientation minimal for a face at the root vertex."""
    m = b.map
    v0 = m.root_vertex
    if v0 is None:
        return False
    if any(b.ingoing[h] for h in m.vertices[v0]):
        return False
    if not is_accessible(b, v0):
        return False
    f = m.corner_face(m.vertices[v0][0])
    return is_minimal(b, f)


def class_of(b):
    """Subset of {'O', 'O~', 'B', 'B~', 'B~0'} the biorientation belongs to."""
    out = set()
    m = b.map
    if m.root is not None and m.root.kind == "vertex":
        if in_class_B0(b):
            out.add("B~0")
        return out
    if in_class_B(b):
        out.add("B")
        adm = is_admissible(b)
        if adm:
            out.add("B~")
        if b.is_ordinary():
            out.add("O")
            if adm:
                out.add("O~")
    return out


# duality ------------------------------------------------------------------------

def dual_map(m):
    """Dual map: half-edge h becomes the dual half-edge at the vertex of the face right of h."""
    n = m.n_half
    phi_inv = [0] * n
    for h in range(n):
        phi_inv[m.phi[h]] = h
    root = None
    if m.root is not None:
        if m.root.kind == "face":
            root = RootSpec("vertex", m.root.anchor)
        elif m.root.kind == "vertex":
            root = RootSpec("face", m.alpha[m.root.anchor])
        else:
            raise MapError("duality is defined here for face- or vertex-rooted maps")
    return PlanarMap(m.alpha, phi_inv, root)


def dual(o):
    """Dual orientation: the dual edge goes from the left face to the right face."""
    if not o.is_ordinary():
        raise ValueError("duality is defined for ordinary orientations")
    m = dual_map(o.map)
    return WeightedBiorientation(m, [not x for x in o.ingoing])


def undual(o):
    """Inverse of dual: dual followed by reversing every edge."""
    # dual twice gives every edge reversed, with h renamed alpha(h)
    d = dual(o)
    return d.relabel(list(d.map.alpha)).reversed()


def orientation_code(b, anchor=None):
    """Isomorphism code over map, directions and weights.

    Without an anchor, face- and vertex-rooted biorientations take the least
    code over the anchors of their root.
    """
    m = b.map
    if anchor is None:
        if m.root is None:
            raise MapError("orientation code needs a root")
        if m.root.kind == "corner":
            anchors = [m.root.anchor]
        elif m.root.kind == "face":
            anchors = [m.alpha[h] for h in m.faces[m.face_of[m.root.anchor]]]
        else:
            anchors = list(m.vertices[m.vertex_of[m.root.anchor]])
        return min(orientation_code(b, a) for a in anchors)
    label, order = canonical_labels(m.alpha, m.sigma, anchor)
    out = [len(order)]
    for h in order:
        out += [label[m.sigma[h]], label[m.alpha[h]], int(b.ingoing[h]), b.weight[h]]
    return encode_ints(out)
