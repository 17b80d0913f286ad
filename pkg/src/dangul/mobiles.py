"""Mobiles: plane trees with black and white vertices, buds and half-edge weights.

A mobile is stored as a rotation system like a map, except that alpha is
partial: a bud is a half-edge h with alpha[h] == -1.  sigma turns
counterclockwise around each vertex.  Weights live on half-edges (buds carry 0).
"""
from functools import lru_cache

from .map_core import _orbits, check_permutation, encode_ints

BLACK, WHITE = "black", "white"


class MobileError(ValueError):
    pass


class Mobile:
    __slots__ = ("n_half", "alpha", "sigma", "weight", "root", "vertices", "vertex_of",
                 "half_black")

    def __init__(self, alpha, sigma, colors, weight=None, root=None):
        """colors: one entry per sigma-orbit, orbits numbered by least half-edge."""
        alpha = tuple(int(a) for a in alpha)
        sigma = tuple(int(s) for s in sigma)
        n = len(alpha)
        if len(sigma) != n or n == 0:
            raise MobileError("need matching nonempty alpha and sigma")
        for h, a in enumerate(alpha):
            if a == -1:
                continue
            if not 0 <= a < n or a == h or alpha[a] != h:
                raise MobileError("alpha is not a partial involution at %d" % h)
        check_permutation(sigma, n)
        self.n_half = n
        self.alpha = alpha
        self.sigma = sigma
        self.vertices, self.vertex_of = _orbits(sigma)
        if len(colors) != len(self.vertices):
            raise MobileError("one color per vertex expected")
        for c in colors:
            if c not in (BLACK, WHITE):
                raise MobileError("colors are 'black' or 'white'")
        self.half_black = tuple(colors[self.vertex_of[h]] == BLACK for h in range(n))
        if weight is None:
            weight = [0] * n
        if len(weight) != n:
            raise MobileError("weight array has the wrong length")
        self.weight = tuple(int(w) for w in weight)
        self.root = root
        for h in range(n):
            if alpha[h] == -1 and not self.half_black[h]:
                raise MobileError("buds must sit at black vertices")
        self._check_tree()

    def _check_tree(self):
        seen = {0}
        stack = [0]
        while stack:
            h = stack.pop()
            for g in (self.alpha[h], self.sigma[h]):
                if g >= 0 and g not in seen:
                    seen.add(g)
                    stack.append(g)
        if len(seen) != self.n_half:
            raise MobileError("mobile is not connected")
        if len(self.vertices) != self.n_edges + 1:
            raise MobileError("mobile is not a tree")

    # basic counts ----------------------------------------------------------

    @property
    def colors(self):
        return [BLACK if self.half_black[vs[0]] else WHITE for vs in self.vertices]

    def is_black(self, v):
        return self.half_black[self.vertices[v][0]]

    def is_bud(self, h):
        return self.alpha[h] == -1

    @property
    def buds(self):
        return [h for h in range(self.n_half) if self.alpha[h] == -1]

    @property
    def n_edges(self):
        return sum(1 for a in self.alpha if a >= 0) // 2

    def edges(self):
        return [(h, a) for h, a in enumerate(self.alpha) if a > h]

    def black_vertices(self):
        return [v for v in range(len(self.vertices)) if self.is_black(v)]

    def white_vertices(self):
        return [v for v in range(len(self.vertices)) if not self.is_black(v)]

    def degree(self, v):
        return len(self.vertices[v])

    def indegree(self, v):
        return sum(1 for h in self.vertices[v] if self.alpha[h] >= 0)

    def vertex_weight(self, v):
        return sum(self.weight[h] for h in self.vertices[v] if self.alpha[h] >= 0)

    def edge_weight(self, h):
        return self.weight[h] + self.weight[self.alpha[h]]

    def edge_colors(self, h):
        return self.half_black[h], self.half_black[self.alpha[h]]

    # structure ---------------------------------------------------------------

    def with_root(self, anchor):
        return Mobile(self.alpha, self.sigma, self.colors, self.weight, anchor)

    def relabel(self, perm):
        n = self.n_half
        check_permutation(perm, n)
        alpha = [0] * n
        sigma = [0] * n
        weight = [0] * n
        black = [False] * n
        for h in range(n):
            alpha[perm[h]] = -1 if self.alpha[h] == -1 else perm[self.alpha[h]]
            sigma[perm[h]] = perm[self.sigma[h]]
            weight[perm[h]] = self.weight[h]
            black[perm[h]] = self.half_black[h]
        vertices, _ = _orbits(sigma)
        colors = [BLACK if black[vs[0]] else WHITE for vs in vertices]
        root = None if self.root is None else perm[self.root]
        return Mobile(alpha, sigma, colors, weight, root)

    def halved(self):
        if any(w % 2 for w in self.weight):
            raise MobileError("odd weight present")
        return Mobile(self.alpha, self.sigma, self.colors, [w // 2 for w in self.weight],
                      self.root)

    def __eq__(self, other):
        return (isinstance(other, Mobile) and self.alpha == other.alpha
                and self.sigma == other.sigma and self.half_black == other.half_black
                and self.weight == other.weight and self.root == other.root)

    def __hash__(self):
        return hash((self.alpha, self.sigma, self.weight))

    def __repr__(self):
        nb = len(self.black_vertices())
        return "Mobile(black=%d, white=%d, buds=%d)" % (
            nb, len(self.vertices) - nb, len(self.buds))

    def to_dict(self):
        out = {
            "vertices": [{"color": c, "rotation": list(vs)}
                         for c, vs in zip(self.colors, self.vertices)],
            "alpha": [None if a == -1 else a for a in self.alpha],
            "weight": list(self.weight),
        }
        if self.root is not None:
            out["root"] = self.root
        return out

    @classmethod
    def from_dict(cls, data):
        alpha = [-1 if a is None else a for a in data["alpha"]]
        n = len(alpha)
        sigma = [None] * n
        color_of = [None] * n
        for vert in data["vertices"]:
            rot = vert["rotation"]
            for i, h in enumerate(rot):
                sigma[h] = rot[(i + 1) % len(rot)]
                color_of[h] = vert["color"]
        if any(s is None for s in sigma):
            raise MobileError("every half-edge must appear in a rotation")
        vertices, _ = _orbits(sigma)
        return cls(alpha, sigma, [color_of[vs[0]] for vs in vertices],
                   data.get("weight"), data.get("root"))


# parameters and predicates ---------------------------------------------------------

def excess(m):
    """Black-white edges plus twice the white-white edges minus the buds."""
    total = 0
    for h, a in m.edges():
        bh, ba = m.edge_colors(h)
        total += (not bh) + (not ba)
    return total - len(m.buds)


def is_N_mobile(m):
    for h in range(m.n_half):
        if m.alpha[h] == -1:
            continue
        w = m.weight[h]
        if m.half_black[h]:
            if w != 0:
                return False
        elif w <= 0:
            return False
    return True


def is_d_branching(m, d):
    if not is_N_mobile(m):
        return False
    for v in range(len(m.vertices)):
        if m.is_black(v):
            if m.degree(v) != d:
                return False
        elif m.vertex_weight(v) != d:
            return False
    return all(m.edge_weight(h) == d - 2 for h, _ in m.edges())


def special_candidates(m, p):
    return [v for v in m.black_vertices()
            if m.degree(v) == p and all(m.alpha[h] >= 0 for h in m.vertices[v])]


def is_pd_branching(m, p, d, special=None):
    """Some black vertex (or the given one) can play the special vertex."""
    if not is_N_mobile(m):
        return False
    if any(m.edge_weight(h) != d - 2 for h, _ in m.edges()):
        return False
    cands = special_candidates(m, p) if special is None else [special]
    for s in cands:
        if m.degree(s) != p or any(m.alpha[h] < 0 for h in m.vertices[s]):
            continue
        if any(m.degree(v) != d for v in m.black_vertices() if v != s):
            continue
        nbrs = [m.vertex_of[m.alpha[h]] for h in m.vertices[s]]
        if len(set(nbrs)) != len(nbrs):
            continue
        others = [v for v in m.white_vertices() if v not in nbrs]
        if any(m.vertex_weight(v) != d for v in others):
            continue
        if sum(m.vertex_weight(v) for v in nbrs) == p * d - p - d:
            return True
    return False


def is_b_dibranching(m, b):
    if not is_N_mobile(m):
        return False
    for v in range(len(m.vertices)):
        if m.is_black(v):
            if m.degree(v) != 2 * b:
                return False
        elif m.vertex_weight(v) != b:
            return False
    return all(m.edge_weight(h) == b - 1 for h, _ in m.edges())


def mobile_code(m, anchor=None):
    """Root-preserving isomorphism code over rotation, colors and weights."""
    if anchor is None:
        if m.root is None:
            raise MobileError("canonical code needs a root")
        anchor = m.root
    label = {anchor: 0}
    order = [anchor]
    i = 0
    while i < len(order):
        h = order[i]
        i += 1
        for g in (m.sigma[h], m.alpha[h]):
            if g >= 0 and g not in label:
                label[g] = len(order)
                order.append(g)
    out = [len(order)]
    for h in order:
        a = m.alpha[h]
        out += [label[m.sigma[h]], label[a] if a >= 0 else -1,
                int(m.half_black[h]), m.weight[h]]
    return encode_ints(out)


canonical_code = mobile_code


# planted mobiles -------------------------------------------------------------------
#
# Terms of the planted grammar:
#   ("b", slots)            black vertex; slots lists its d-1 other half-edges
#                           ccw after the parent edge, each None (bud) or a white term
#   ("w", up, children)     white vertex whose parent half-edge has weight up;
#                           children lists (j, term) ccw after the parent edge,
#                           the edge toward the child carries weight j at this end


def term_blacks(t):
    if t[0] == "b":
        return 1 + sum(term_blacks(s) for s in t[1] if s is not None)
    return sum(term_blacks(c) for _, c in t[2])


def _compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _distribute(k, n, options):
    """Ordered k-tuples of items with total cost n; options(size) lists items of that size."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for x in options(first):
            for rest in _distribute(k - 1, n - first, options):
                yield (x,) + rest


@lru_cache(maxsize=None)
def planted_terms(d, i, n):
    """All terms of class W_i with n non-marked black vertices."""
    if not 0 <= i <= d - 2:
        return ()
    if i == d - 2:
        if n < 1:
            return ()

        def slot_options(size):
            return ((None,) if size == 0 else ()) + planted_terms(d, 0, size)

        return tuple(("b", slots) for slots in
                     _distribute(d - 1, n - 1, slot_options))
    if n < 1:
        # every planted class has zero constant term
        return ()
    return tuple(("w", d - 2 - i, children)
                 for children in _children_terms(d, i + 2, n))


def _children_terms(d, total, n):
    """Ordered child lists (j, term) with sum of j equal to total and n black vertices."""
    out = []
    for comp in _compositions(total):
        for parts in _split(d, comp, n):
            out.append(parts)
    return out


def _split(d, comp, n):
    if not comp:
        if n == 0:
            yield ()
        return
    j = comp[0]
    # every later sibling needs at least one black vertex
    for size in range(1, n - len(comp) + 2):
        for t in planted_terms(d, j, size):
            for rest in _split(d, comp[1:], n - size):
                yield ((j, t),) + rest


def planted_count(d, i, n):
    return len(planted_terms(d, i, n))


class PlantedMobile:
    """A mobile with a marked leaf; the leaf weight is the class index."""

    __slots__ = ("mobile", "leaf", "index")

    def __init__(self, mobile, leaf, index):
        self.mobile = mobile
        self.leaf = leaf
        self.index = index

    def __repr__(self):
        return "PlantedMobile(W_%d, %r)" % (self.index, self.mobile)


class _Builder:
    def __init__(self, d):
        self.d = d
        self.rot = []       # rotation per vertex
        self.color = []
        self.alpha = []
        self.weight = []

    def vertex(self, color):
        self.rot.append([])
        self.color.append(color)
        return len(self.rot) - 1

    def half(self, v, w, partner=-1):
        h = len(self.alpha)
        self.alpha.append(partner)
        self.weight.append(w)
        self.rot[v].append(h)
        return h

    def link(self, h, g):
        self.alpha[h] = g
        self.alpha[g] = h

    def grow(self, t, up_half):
        """Attach the vertex of term t below the half-edge up_half (already placed)."""
        if t[0] == "b":
            v = self.vertex(BLACK)
            self.link(up_half, self.half(v, 0))
            for s in t[1]:
                if s is None:
                    self.half(v, 0)
                else:
                    h = self.half(v, 0)
                    self.grow(s, h)
            return v
        _, up, children = t
        v = self.vertex(WHITE)
        self.link(up_half, self.half(v, up))
        for j, c in children:
            h = self.half(v, j)
            self.grow(c, h)
        return v

    def mobile(self, root=None):
        n = len(self.alpha)
        sigma = [0] * n
        for rot in self.rot:
            for k, h in enumerate(rot):
                sigma[h] = rot[(k + 1) % len(rot)]
        vertices, vertex_of = _orbits(sigma)
        # map orbit order back to the builder's vertices
        owner = {}
        for v, rot in enumerate(self.rot):
            for h in rot:
                owner[h] = v
        colors = [self.color[owner[vs[0]]] for vs in vertices]
        return Mobile(self.alpha, sigma, colors, self.weight, root)


def planted_mobile(d, i, t):
    """Mobile of a W_i term, with its marked leaf made explicit."""
    b = _Builder(d)
    if i == 0:
        leaf = b.vertex(BLACK)
        h = b.half(leaf, 0)
    else:
        leaf = b.vertex(WHITE)
        h = b.half(leaf, i)
    b.grow(t, h)
    mob = b.mobile(root=h)
    return PlantedMobile(mob, mob.vertex_of[h], i)


def enumerate_planted(d, i, n_black):
    """(count, list of PlantedMobile) of class W_i with n_black non-marked black vertices."""
    terms = planted_terms(d, i, n_black)
    return len(terms), [planted_mobile(d, i, t) for t in terms]


def budrooted_mobile(d, t):
    """Bud-rooted d-branching mobile from a W_{d-2} term: the marked leaf becomes the root bud."""
    b = _Builder(d)
    v = b.vertex(BLACK)
    root = b.half(v, 0)
    for s in t[1]:
        h = b.half(v, 0)
        if s is not None:
            b.grow(s, h)
    return b.mobile(root=root)


def enumerate_d_branching_budrooted(d, n_black):
    if n_black < 1:
        raise ValueError("n_black must be positive")
    return [budrooted_mobile(d, t) for t in planted_terms(d, d - 2, n_black)]


def white_neighbor_options(d, extra, n):
    """Child lists of a neighbor of the special vertex: classes summing to extra."""
    return _children_terms(d, extra, n)


def enumerate_pd_branching_marked(p, d, n_black):
    """(p,d)-branching mobiles rooted at a half-edge of the special vertex.

    n_black counts the non-special black vertices.
    """
    if p < d:
        raise ValueError("need p >= d")
    out = []
    for extras in _weak_compositions(p - d, p):
        for sizes in _weak_compositions(n_black, p):
            lists = [white_neighbor_options(d, e, s) for e, s in zip(extras, sizes)]
            for choice in _product(lists):
                b = _Builder(d)
                s = b.vertex(BLACK)
                root = None
                for children in choice:
                    h = b.half(s, 0)
                    if root is None:
                        root = h
                    b.grow(("w", d - 2, children), h)
                out.append(b.mobile(root=root))
    return out


def _weak_compositions(total, k):
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, k - 1):
            yield (first,) + rest


def _product(lists):
    if not lists:
        yield ()
        return
    for x in lists[0]:
        for rest in _product(lists[1:]):
            yield (x,) + rest
