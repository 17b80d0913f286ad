"""Master bijections between weighted biorientations and weighted mobiles.

The direct maps apply a local rule to every edge.  Each half-edge x of the
biorientation contributes an item placed at the black vertex of the face
containing the corner between x and sigma(x); ingoing half-edges also give a
white half-edge at their vertex:

    x ingoing,  partner outgoing   black-white edge
    x outgoing, partner ingoing    bud
    x outgoing, partner outgoing   black-black edge (paired with the partner's item)
    x ingoing,  partner ingoing    bud, and a white-white edge between the vertices

The inverses close the mobile (buds are matched to stems around the tree),
then take the dual.  Weighted mobiles are first made properly bicolored by
the reduction ``lam`` and the orientation side is undone by ``mu_inverse``.
"""
from .map_core import PlanarMap, RootSpec, canonical_labels
from .mobiles import Mobile, BLACK, WHITE, excess, mobile_code
from .orientation import (WeightedBiorientation, in_class_B, in_class_B_tilde,
                          in_class_B0, undual, vertex_weight, indegree,
                          face_weight, clockwise_degree, edge_kind)


class NotInClassB(ValueError):
    pass


class NotInClassBTilde(ValueError):
    pass


class NotInClassB0(ValueError):
    pass


class WrongExcess(ValueError):
    pass


class ClosureError(ValueError):
    pass


# direct local transformation ----------------------------------------------------

class Transformed:
    """A mobile built by the local rule, with the item of every half-edge.

    black_item[x] and white_item[x] are the mobile half-edges created from
    half-edge x (white_item only for ingoing x); entries are None when the
    item was deleted with its vertex.  black_vertex[f] / white_vertex[v] give
    the mobile vertex standing for face f / vertex v.
    """

    def __init__(self, mobile, black_item, white_item, black_vertex, white_vertex):
        self.mobile = mobile
        self.black_item = black_item
        self.white_item = white_item
        self.black_vertex = black_vertex
        self.white_vertex = white_vertex


def _local_items(b):
    m = b.map
    a, ing, w = m.alpha, b.ingoing, b.weight
    partner = {}
    weight = {}
    for x in range(m.n_half):
        y = a[x]
        if ing[x] and not ing[y]:
            partner[("W", x)], partner[("B", x)] = ("B", x), ("W", x)
            weight[("W", x)], weight[("B", x)] = w[x], w[y]
        elif not ing[x] and ing[y]:
            partner[("B", x)] = None
            weight[("B", x)] = 0
        elif not ing[x]:
            partner[("B", x)] = ("B", y)
            weight[("B", x)] = w[y]
        else:
            partner[("B", x)] = None
            weight[("B", x)] = 0
            partner[("W", x)] = ("W", y)
            weight[("W", x)] = w[x]
    blacks = {f: [("B", a[g]) for g in reversed(orbit)] for f, orbit in enumerate(m.faces)}
    whites = {v: [("W", x) for x in orbit if ing[x]] for v, orbit in enumerate(m.vertices)}
    return partner, weight, blacks, whites


def _assemble(partner, weight, blacks, whites):
    ids = {}
    rotations = []
    colors = []
    black_vertex, white_vertex = {}, {}
    for table, color, out in ((blacks, BLACK, black_vertex), (whites, WHITE, white_vertex)):
        for key in sorted(table):
            rot = table[key]
            if not rot:
                continue
            out[key] = len(rotations)
            for item in rot:
                ids[item] = len(ids)
            rotations.append([ids[item] for item in rot])
            colors.append(color)
    n = len(ids)
    alpha = [-1] * n
    sigma = [0] * n
    wt = [0] * n
    for item, i in ids.items():
        p = partner[item]
        alpha[i] = -1 if p is None else ids[p]
        wt[i] = weight[item]
    for rot in rotations:
        for j, h in enumerate(rot):
            sigma[h] = rot[(j + 1) % len(rot)]
    mob = Mobile(alpha, sigma, colors, wt)
    return mob, ids, black_vertex, white_vertex


def _transform(b, drop_faces=(), drop_vertices=()):
    partner, weight, blacks, whites = _local_items(b)
    dropped = set()
    for f in drop_faces:
        dropped.update(blacks.pop(f))
    for v in drop_vertices:
        dropped.update(whites.pop(v))
    for item in dropped:
        p = partner[item]
        if p is not None and p not in dropped:
            raise ClosureError("deleted vertex is joined to a kept vertex")
    for v in [v for v, rot in whites.items() if not rot]:
        del whites[v]
    mob, ids, bv, wv = _assemble(partner, weight, blacks, whites)
    n = b.map.n_half
    black_item = [ids.get(("B", x)) for x in range(n)]
    white_item = [ids.get(("W", x)) for x in range(n)]
    return Transformed(mob, black_item, white_item, bv, wv)


def _returned(b, f0):
    """The outer edges reversed (direction and weights swapped)."""
    m = b.map
    ing, w = list(b.ingoing), list(b.weight)
    for g in m.faces[f0]:
        y = m.alpha[g]
        ing[g], ing[y] = b.ingoing[y], b.ingoing[g]
        w[g], w[y] = b.weight[y], b.weight[g]
    return WeightedBiorientation(m, ing, w)


def _check_parameters(b, t, skip_vertices=()):
    """Correspondence of vertex, face and edge parameters under the local rule."""
    m, mob = b.map, t.mobile
    for v, mv in t.white_vertex.items():
        if v in skip_vertices:
            continue
        assert mob.degree(mv) == indegree(b, v)
        assert mob.vertex_weight(mv) == vertex_weight(b, v)
    for f, mv in t.black_vertex.items():
        assert mob.degree(mv) == m.face_degree(f)
        assert mob.indegree(mv) == clockwise_degree(b, f)
        assert mob.vertex_weight(mv) == face_weight(b, f)
    for x in range(m.n_half):
        k = edge_kind(b, x)
        bi, wi = t.black_item[x], t.white_item[x]
        if k == 0 and bi is not None:
            assert mob.edge_colors(bi) == (True, True)
        elif k == 2 and wi is not None:
            assert mob.edge_colors(wi) == (False, False)


def phi_plus(b, check=True, track=False):
    """Mobile of a biorientation in class B (clockwise-minimal, accessible)."""
    if check and not in_class_B(b):
        raise NotInClassB("biorientation is not in class B")
    f0 = b.map.root_face
    t = _transform(b, drop_faces=[f0])
    delta = excess(t.mobile)
    if delta != b.map.face_degree(f0):
        raise WrongExcess("excess %d differs from the outer degree" % delta)
    if check:
        _check_parameters(b, t)
    return t if track else t.mobile


def phi_minus(b, check=True, track=False):
    """Mobile of an admissible biorientation in class B~.

    The outer edges are returned first; the black vertex of the outer face, the
    outer vertices and the edges between them are then deleted.
    """
    if check and not in_class_B_tilde(b):
        raise NotInClassBTilde("biorientation is not in class B~")
    m = b.map
    f0 = m.root_face
    outer = sorted({m.vertex_of[g] for g in m.faces[f0]})
    t = _transform(_returned(b, f0), drop_faces=[f0], drop_vertices=outer)
    delta = excess(t.mobile)
    if delta != -m.face_degree(f0):
        raise WrongExcess("excess %d differs from minus the outer degree" % delta)
    if check:
        _check_parameters(_returned(b, f0), t, skip_vertices=outer)
    return t if track else t.mobile


def phi_zero(b, check=True, track=False):
    """Mobile of a vertex-rooted source biorientation in class B~0."""
    if check and not in_class_B0(b):
        raise NotInClassB0("biorientation is not in class B~0")
    t = _transform(b)
    v0 = b.map.root_vertex
    if v0 in t.white_vertex or len(t.white_vertex) != b.map.n_vertices - 1:
        raise ClosureError("only the root vertex may lose its white vertex")
    delta = excess(t.mobile)
    if delta != 0:
        raise WrongExcess("excess %d is not zero" % delta)
    if check:
        _check_parameters(b, t)
    return t if track else t.mobile


def exposed_buds_of(t, b):
    """Buds of phi_minus(b) created from the outer edges, keyed by outer half-edge."""
    m = b.map
    return {g: t.black_item[g] for g in m.faces[m.root_face]}


# reductions to properly bicolored mobiles and ordinary orientations ---------------

def _dense_map(rotations, partner, ingoing, root_kind=None, root_key=None):
    """PlanarMap plus directions from rotations given as lists of hashable keys."""
    ids = {}
    for rot in rotations:
        for key in rot:
            ids[key] = len(ids)
    n = len(ids)
    alpha = [0] * n
    sigma = [0] * n
    for rot in rotations:
        for j, key in enumerate(rot):
            sigma[ids[key]] = ids[rot[(j + 1) % len(rot)]]
    for key, i in ids.items():
        alpha[i] = ids[partner[key]]
    root = None if root_kind is None else RootSpec(root_kind, ids[root_key])
    m = PlanarMap(alpha, sigma, root)
    ing = [False] * n
    for key, i in ids.items():
        ing[i] = ingoing[key]
    return WeightedBiorientation(m, ing), ids


def mu(b):
    """Ordinary orientation of a biorientation with marked series vertices and 2-gons.

    A 0-way edge gets a new degree-2 vertex with both halves ingoing; a 2-way
    edge is doubled into a 2-gon whose contour is a clockwise circuit.
    Returns (orientation, marked vertex half-edges, marked face half-edges).
    """
    m = b.map
    a, ing = m.alpha, b.ingoing
    partner, direction = {}, {}
    extra = {}
    series, gons = [], []
    for x in range(m.n_half):
        y = a[x]
        if ing[x] != ing[y]:
            partner[x], direction[x] = y, ing[x]
        elif not ing[x]:
            partner[x], partner[("u", x)] = ("u", x), x
            direction[x], direction[("u", x)] = False, True
            if x < y:
                series.append(("u", x))
        else:
            # x keeps pointing in; the new half z after x points out
            z = ("z", x)
            extra[x] = z
            partner[x], partner[("z", y)] = ("z", y), x
            direction[x], direction[z] = True, False
            if x < y:
                gons.append(z)
    rotations = []
    for orbit in m.vertices:
        rot = []
        for x in orbit:
            rot.append(x)
            if x in extra:
                rot.append(extra[x])
        rotations.append(rot)
    for key in series:
        x = key[1]
        rotations.append([key, ("u", a[x])])
    root_kind = root_key = None
    if m.root is not None:
        root_kind, root_key = m.root.kind, m.root.anchor
    o, ids = _dense_map(rotations, partner, direction, root_kind, root_key)
    om = o.map
    marked_vertices = [ids[k] for k in series]
    marked_faces = [ids[k] for k in gons]
    for h in marked_faces:
        assert om.face_degree(om.face_of[h]) == 2
    return o, marked_vertices, marked_faces


def mu_inverse(o, marked_vertices, marked_faces):
    """Undo mu: merge each marked vertex into a 0-way edge, each marked 2-gon into a 2-way edge.

    Returns the biorientation (weight 1 on ingoing halves) and a dict from the
    kept half-edges of o to their new ids.
    """
    m = o.map
    a = m.alpha
    removed = set()
    partner = {}
    for h in marked_vertices:
        y1, y2 = m.vertices[m.vertex_of[h]]
        assert o.ingoing[y1] and o.ingoing[y2]
        removed.update((y1, y2))
        partner[a[y1]], partner[a[y2]] = a[y2], a[y1]
    for h in marked_faces:
        g1, g2 = m.faces[m.face_of[h]]
        assert not o.ingoing[g1] and not o.ingoing[g2]
        removed.update((g1, g2))
        partner[a[g1]], partner[a[g2]] = a[g2], a[g1]
    for h in range(m.n_half):
        if h not in removed and h not in partner:
            partner[h] = a[h]
    rotations = []
    for orbit in m.vertices:
        rot = [h for h in orbit if h not in removed]
        if rot:
            rotations.append(rot)
    root_kind = root_key = None
    if m.root is not None:
        root_kind, root_key = m.root.kind, m.root.anchor
        if root_key in removed:
            if root_kind == "face":
                orbit = m.faces[m.face_of[root_key]]
            else:
                raise ClosureError("root anchor sits on a marked vertex")
            root_key = next(h for h in orbit if h not in removed)
    res, ids = _dense_map(rotations, partner, {h: o.ingoing[h] for h in partner},
                          root_kind, root_key)
    return res, ids


def lam(t):
    """Properly bicolored mobile: a white vertex inside each black-black edge, a black
    vertex inside each white-white edge.

    The two halves of a black-black edge each become a bud followed (ccw) by an
    edge to the new white vertex.  Weights are dropped.  Returns (mobile, ids of
    the original half-edges, one half-edge per new white, one per new black).
    """
    rotations, colors = [], []
    partner = {}
    new_white, new_black = [], []
    for v, orbit in enumerate(t.vertices):
        rot = []
        for h in orbit:
            a = t.alpha[h]
            if a == -1:
                rot.append(h)
                partner[h] = None
            elif t.half_black[h] == t.half_black[a]:
                rot += [("bud", h), h] if t.half_black[h] else [h]
                if t.half_black[h]:
                    partner[("bud", h)] = None
                partner[h], partner[("mid", h)] = ("mid", h), h
                if h < a:
                    (new_white if t.half_black[h] else new_black).append(("mid", h))
            else:
                rot.append(h)
                partner[h] = a
        rotations.append(rot)
        colors.append(BLACK if t.is_black(v) else WHITE)
    for key in new_white + new_black:
        h = key[1]
        rotations.append([key, ("mid", t.alpha[h])])
        colors.append(WHITE if key in new_white else BLACK)
    mob, ids = _dense_mobile(rotations, colors, partner)
    return mob, ids, [ids[k] for k in new_white], [ids[k] for k in new_black]


def _dense_mobile(rotations, colors, partner, weight=None, root_key=None):
    ids = {}
    for rot in rotations:
        for key in rot:
            ids[key] = len(ids)
    n = len(ids)
    alpha = [-1] * n
    sigma = [0] * n
    wt = [0] * n
    for rot in rotations:
        for j, key in enumerate(rot):
            sigma[ids[key]] = ids[rot[(j + 1) % len(rot)]]
    for key, i in ids.items():
        p = partner[key]
        alpha[i] = -1 if p is None else ids[p]
        if weight is not None:
            wt[i] = weight.get(key, 0)
    root = None if root_key is None else ids[root_key]
    return Mobile(alpha, sigma, colors, wt, root), ids


def lam_inverse(t0, new_white, new_black):
    """Undo lam (weights are not recovered)."""
    a = t0.alpha
    removed = set()
    partner = {}
    for h in new_white:
        y1, y2 = t0.vertices[t0.vertex_of[h]]
        for y in (y1, y2):
            x = a[y]
            removed.add(y)
            bud = _prev(t0, x)
            if a[bud] != -1:
                raise ClosureError("black-black insertion lost its bud")
            removed.add(bud)
        partner[a[y1]], partner[a[y2]] = a[y2], a[y1]
    for h in new_black:
        y1, y2 = t0.vertices[t0.vertex_of[h]]
        removed.update((y1, y2))
        partner[a[y1]], partner[a[y2]] = a[y2], a[y1]
    rotations, colors = [], []
    for v, orbit in enumerate(t0.vertices):
        rot = [h for h in orbit if h not in removed]
        if rot:
            rotations.append(rot)
            colors.append(t0.colors[v])
    for rot in rotations:
        for h in rot:
            partner.setdefault(h, None if a[h] == -1 else a[h])
    mob, _ = _dense_mobile(rotations, colors, partner)
    return mob


def _prev(t, h):
    orbit = t.vertices[t.vertex_of[h]]
    return orbit[orbit.index(h) - 1]


def unrooted_code(t, weights=True):
    """Isomorphism code of an unrooted mobile: least code over all anchors."""
    if not weights:
        t = Mobile(t.alpha, t.sigma, t.colors, None)
    return min(mobile_code(t, h) for h in range(t.n_half))


# closure ------------------------------------------------------------------------

BUD, STEM = "bud", "stem"


class PartialClosure:
    """Blossomed mobile with its buds matched to stems.

    A stem is added in the corner following each edge (ccw) at every black
    vertex.  Walking around the tree with the edges on the left, each bud is
    matched to the next free stem; the leftover items are ``dangling``.
    Stems are keyed ("s", h) where h is the black half-edge they follow.
    """

    def __init__(self, t):
        for h, a in t.edges():
            if t.half_black[h] == t.half_black[a]:
                raise ClosureError("closure needs a properly bicolored mobile")
        self.mobile = t
        rot = {}
        for v, orbit in enumerate(t.vertices):
            r = []
            for h in orbit:
                r.append(h)
                if t.is_black(v) and t.alpha[h] >= 0:
                    r.append(("s", h))
            rot[v] = r
        self.rotation = rot
        self.vertex_of = {key: v for v, r in rot.items() for key in r}
        nxt = {}
        for r in rot.values():
            for j, key in enumerate(r):
                nxt[key] = r[(j + 1) % len(r)]
        self.next_ccw = nxt
        walk = []
        key = rot[0][0]
        for _ in range(len(self.vertex_of)):
            walk.append(key)
            key = nxt[t.alpha[key]] if self.kind(key) is None else nxt[key]
        assert key == walk[0] and len(set(walk)) == len(walk)
        self.walk = walk
        self.position = {key: i for i, key in enumerate(walk)}
        self._match()

    @property
    def stems(self):
        return [key for key in self.walk if self.kind(key) == STEM]

    @property
    def matching(self):
        return {b: s for b, s in self.match.items() if self.kind(b) == BUD}

    def kind(self, key):
        if isinstance(key, tuple):
            return STEM
        return BUD if self.mobile.alpha[key] == -1 else None

    def _match(self):
        stack, free_stems = [], []
        match = {}
        for key in self.walk:
            k = self.kind(key)
            if k == BUD:
                stack.append(key)
            elif k == STEM:
                if stack:
                    b = stack.pop()
                    match[b], match[key] = key, b
                else:
                    free_stems.append(key)
        # wrap around: the last open buds take the first free stems
        while stack and free_stems:
            b, s = stack.pop(), free_stems.pop(0)
            match[b], match[s] = s, b
        self.match = match
        self.dangling = free_stems or stack
        self.excess = len(free_stems) - len(stack)

    @property
    def dangling_in_walk_order(self):
        return sorted(self.dangling, key=self.position.__getitem__)

    def exposed_corners(self):
        """Walk positions s whose corner (just before walk[s]) lies in the outer face."""
        n = len(self.walk)
        covered = [False] * n
        for key, other in self.match.items():
            if self.kind(key) != BUD:
                continue
            i, j = self.position[key], self.position[other]
            s = (i + 1) % n
            while True:
                covered[s] = True
                if s == j:
                    break
                s = (s + 1) % n
        return [s for s in range(n) if not covered[s]]

    def exposed_white_corners(self):
        t = self.mobile
        return [s for s in self.exposed_corners()
                if not t.is_black(self.vertex_of[self.walk[s]])]

    def exposed_black_corners(self):
        t = self.mobile
        return [s for s in self.exposed_corners()
                if t.is_black(self.vertex_of[self.walk[s]])]

    # closed maps ---------------------------------------------------------------

    def _closed(self, extra_root, root_edges_ingoing_at_item, remove=None):
        t = self.mobile
        rotations, owner = [], {}
        partner = dict(self.match)
        direction = {}
        for v in t.black_vertices():
            r = [key for key in self.rotation[v] if self.kind(key) is not None and key != remove]
            if r:
                rotations.append(r)
                for key in r:
                    owner[key] = v
        for key in partner:
            direction[key] = self.kind(key) == STEM
        if extra_root:
            # seen from the outer face, the dangling items appear in reverse order
            items = self.dangling_in_walk_order[::-1]
            root_rot = []
            for i, key in enumerate(items):
                r = ("r", i)
                root_rot.append(r)
                partner[r], partner[key] = key, r
                direction[r] = False
                direction[key] = root_edges_ingoing_at_item
            rotations.append(root_rot)
        return rotations, partner, direction, owner

    def _white_faces(self, x, ids):
        """X-face containing each white vertex of the mobile."""
        m = x.map
        t = self.mobile
        out = {}
        for v in t.black_vertices():
            for key in self.rotation[v]:
                if self.kind(key) != STEM or key not in ids:
                    continue
                h = key[1]
                y = m.sigma_inv[ids[key]]
                out[t.vertex_of[t.alpha[h]]] = m.face_of[m.alpha[y]]
        return out

    def positive_closure(self):
        if self.excess <= 0:
            raise WrongExcess("positive closure needs positive excess")
        rot, partner, direction, _ = self._closed(True, True)
        x, ids = _dense_map(rot, partner, direction, "vertex", ("r", 0))
        return x, ids

    def negative_closure(self):
        if self.excess >= 0:
            raise WrongExcess("negative closure needs negative excess")
        rot, partner, direction, _ = self._closed(True, True)
        x, ids = _dense_map(rot, partner, direction, "vertex", ("r", 0))
        return x, ids

    def rooted_closure(self):
        """Corner-rooted orientation; the dangling stem marks the root corner.

        Returns None when the closure is the vertex map (no edges).
        """
        if self.excess != 1:
            raise WrongExcess("rooted closure needs excess 1")
        s = self.dangling[0]
        v = self.vertex_of[s]
        r = [key for key in self.rotation[v] if self.kind(key) is not None]
        if len(r) == 1:
            if len(self.mobile.black_vertices()) == 1:
                return None, {}
            raise ClosureError("dangling stem alone at its vertex")
        anchor = r[r.index(s) - 1]
        rot, partner, direction, _ = self._closed(False, True, remove=s)
        x, ids = _dense_map(rot, partner, direction, "corner", anchor)
        return x, ids

    def zero_closure(self):
        """Face-rooted orientation; the root face is the one holding no white vertex."""
        if self.excess != 0:
            raise WrongExcess("zero closure needs excess 0")
        rot, partner, direction, _ = self._closed(False, True)
        x, ids = _dense_map(rot, partner, direction)
        used = set(self._white_faces(x, ids).values())
        free = [f for f in range(x.map.n_faces) if f not in used]
        if len(free) != 1:
            raise ClosureError("expected exactly one face without a white vertex")
        m = x.map.with_root("face", x.map.faces[free[0]][0])
        return x.with_map(m), ids


def partial_closure(t):
    """Partial closure; mobiles with monochromatic edges are first passed through lam."""
    if any(t.half_black[h] == t.half_black[a] for h, a in t.edges()):
        t = lam(t)[0]
    return PartialClosure(t)


def _closure_of(t):
    """Partial closure of lam(t), with the map from lam(t) vertices back to t vertices."""
    t0, ids, _, _ = lam(t)
    back = {}
    for h in range(t.n_half):
        back[t0.vertex_of[ids[h]]] = t.vertex_of[h]
    inverse_ids = {i: h for h, i in ids.items() if isinstance(h, int)}
    return PartialClosure(t0), back, inverse_ids


def exposed_buds(t):
    """Buds of t left unmatched by the closure (the exposed buds when excess < 0)."""
    pc, _, inverse_ids = _closure_of(t)
    if pc.excess >= 0:
        return []
    return sorted(inverse_ids[h] for h in pc.dangling)


def theta(t):
    """Each dangling bud of the partial closure becomes an edge to a new white leaf."""
    leaves = exposed_buds(t)
    if excess(t) >= 0:
        raise WrongExcess("theta applies to negative excess")
    rotations, colors, partner, weight = [], [], {}, {}
    for v, orbit in enumerate(t.vertices):
        rotations.append(list(orbit))
        colors.append(t.colors[v])
        for h in orbit:
            partner[h] = None if t.alpha[h] == -1 else t.alpha[h]
            weight[h] = t.weight[h]
    for h in leaves:
        partner[h], partner[("leaf", h)] = ("leaf", h), h
        weight[("leaf", h)] = 1
        rotations.append([("leaf", h)])
        colors.append(WHITE)
    mob, _ = _dense_mobile(rotations, colors, partner, weight)
    return mob


def theta_inverse(t):
    """Edges to exposed white leaves become buds."""
    pc, back, _ = _closure_of(t)
    exposed = {back.get(pc.mobile.vertex_of[pc.walk[s]]) for s in pc.exposed_white_corners()}
    if None in exposed:
        raise ClosureError("an inserted white vertex is exposed")
    removed = set()
    for v in exposed:
        if t.degree(v) != 1:
            raise ClosureError("exposed white vertex is not a leaf")
        removed.add(t.vertices[v][0])
    rotations, colors, partner, weight = [], [], {}, {}
    for v, orbit in enumerate(t.vertices):
        if v in exposed:
            continue
        rotations.append(list(orbit))
        colors.append(t.colors[v])
        for h in orbit:
            a = t.alpha[h]
            partner[h] = None if a == -1 or a in removed else a
            weight[h] = 0 if a in removed else t.weight[h]
    mob, _ = _dense_mobile(rotations, colors, partner, weight)
    return mob


# openings -------------------------------------------------------------------------

def _opening(x, root_corner=None, drop_vertex=None, drop_face=None):
    """Partial opening of an ordinary orientation.

    Vertices become black; each face gets a white vertex.  Every ingoing
    half-edge h is replaced by an edge from the corner before it (clockwise
    after h) to the white vertex of that face; outgoing half-edges become buds.
    A root corner counts as one more ingoing half-edge.
    """
    m = x.map
    ing = x.ingoing
    rotations, colors, partner = [], [], {}
    for v, orbit in enumerate(m.vertices):
        if v == drop_vertex:
            if any(ing[h] for h in orbit) or root_corner in orbit:
                raise ClosureError("deleted vertex carries an edge of the mobile")
            continue
        rot = []
        for h in orbit:
            if ing[h]:
                rot.append(("e", h))
                partner[("e", h)], partner[("w", h)] = ("w", h), ("e", h)
            else:
                rot.append(h)
                partner[h] = None
            if h == root_corner:
                rot.append(("e", "root"))
                partner[("e", "root")], partner[("w", "root")] = ("w", "root"), ("e", "root")
        rotations.append(rot)
        colors.append(BLACK)
    for f, orbit in enumerate(m.faces):
        rot = []
        for g in reversed(orbit):
            if m.alpha[g] == root_corner:
                rot.append(("w", "root"))
            h = m.phi[g]
            if ing[h]:
                rot.append(("w", h))
        if f == drop_face:
            if rot:
                raise ClosureError("deleted face carries an edge of the mobile")
            continue
        if rot:
            rotations.append(rot)
            colors.append(WHITE)
    mob, _ = _dense_mobile(rotations, colors, partner)
    return mob


def positive_opening(x):
    """Inverse of the positive closure (vertex-rooted orientation)."""
    return _opening(x, drop_vertex=x.map.root_vertex)


def negative_opening(x):
    """Inverse of the negative closure."""
    return theta_inverse(positive_opening(x))


def zero_opening(x):
    """Inverse of the zero closure (face-rooted orientation)."""
    return _opening(x, drop_face=x.map.root_face)


def rooted_opening(x):
    """Inverse of the rooted closure (corner-rooted orientation)."""
    return _opening(x, root_corner=x.map.root.anchor)


# inverse master bijections -------------------------------------------------------

def _plain(t):
    return Mobile(t.alpha, t.sigma, t.colors, None, t.root)


def mobile_isomorphism(src, dst):
    """Half-edge map src -> dst of an isomorphism of the underlying plain mobiles.

    The root of dst (or half-edge 0) is used as anchor; None if not isomorphic.
    """
    if src.n_half != dst.n_half:
        return None
    ps, pd = _plain(src), _plain(dst)
    target_anchor = 0 if dst.root is None else dst.root
    target = mobile_code(pd, target_anchor)
    for a in range(src.n_half):
        if mobile_code(ps, a) == target:
            ls, _ = canonical_labels(ps.alpha, ps.sigma, a)
            _, od = canonical_labels(pd.alpha, pd.sigma, target_anchor)
            return {h: od[ls[h]] for h in range(src.n_half)}
    return None


def _closed_orientation(t, kind):
    """Plain biorientation whose image under the master bijection is t (weights aside)."""
    t0, _, new_white, new_black = lam(t)
    pc = PartialClosure(t0)
    if kind == "plus":
        x, xid = pc.positive_closure()
    elif kind == "minus":
        x, xid = pc.negative_closure()
    else:
        x, xid = pc.zero_closure()
    o0 = undual(x)
    white_face = pc._white_faces(x, xid)
    marked_vertices = []
    for h in new_white:
        f = white_face[t0.vertex_of[h]]
        marked_vertices.append(x.map.alpha[x.map.faces[f][0]])
    marked_faces = []
    for h in new_black:
        v = t0.vertex_of[h]
        key = next(k for k in pc.rotation[v] if pc.kind(k) is not None)
        marked_faces.append(xid[key])
    plain, _ = mu_inverse(o0, marked_vertices, marked_faces)
    return plain


def _weights_from(b, tr, t, iso):
    m = b.map
    w = list(b.weight)
    for x in range(m.n_half):
        if b.ingoing[x]:
            item = tr.white_item[x]
        else:
            item = tr.black_item[m.alpha[x]]
        if item is not None:
            w[x] = t.weight[iso[item]]
    return WeightedBiorientation(m, b.ingoing, w)


def _inverse(t, kind, check):
    plain = _closed_orientation(t, kind)
    forward = {"plus": phi_plus, "minus": phi_minus, "zero": phi_zero}[kind]
    tr = forward(plain, check=False, track=True)
    iso = mobile_isomorphism(tr.mobile, t)
    if iso is None:
        raise ClosureError("closure does not reproduce the mobile")
    if kind == "minus":
        f0 = plain.map.root_face
        res = _returned(_weights_from(_returned(plain, f0), tr, t, iso), f0)
    else:
        res = _weights_from(plain, tr, t, iso)
    if check:
        back = forward(res, check=True)
        if unrooted_code(back) != unrooted_code(t):
            raise ClosureError("inverse does not round-trip")
    return res, tr, iso


def phi_plus_inverse(t, check=True):
    if excess(t) <= 0:
        raise WrongExcess("positive excess expected")
    return _inverse(t, "plus", check)[0]


def phi_minus_inverse(t, check=True):
    if excess(t) >= 0:
        raise WrongExcess("negative excess expected")
    return _inverse(t, "minus", check)[0]


def phi_zero_inverse(t, check=True):
    if excess(t) != 0:
        raise WrongExcess("excess zero expected")
    return _inverse(t, "zero", check)[0]


def corner_of_exposed_bud(b, g):
    """Root-corner anchor for the exposed bud made from outer half-edge g."""
    m = b.map
    phi_inv = m.phi.index(g)
    return m.alpha[phi_inv]


def phi_minus_inverse_rooted(t, check=True):
    """Biorientation and corner-rooted map for a mobile rooted at an exposed bud."""
    if t.root is None or t.alpha[t.root] != -1:
        raise ClosureError("mobile must be rooted at a bud")
    res, tr, iso = _inverse(t, "minus", check)
    m = res.map
    for g in m.faces[m.root_face]:
        if iso[tr.black_item[g]] == t.root:
            return res, m.with_root("corner", corner_of_exposed_bud(res, g))
    raise ClosureError("root bud is not exposed")


def mark_exposed_bud(b, corner_anchor):
    """Mobile of a corner-rooted admissible biorientation, rooted at the matching exposed bud."""
    m = b.map
    face_map = m.with_root("face", m.faces[m.corner_face(corner_anchor)][0])
    fb = b.with_map(face_map)
    tr = phi_minus(fb, track=True)
    g = m.sigma[corner_anchor]
    return tr.mobile.with_root(tr.black_item[g])


def mark_correspondences(t):
    """Pairings for a mobile of negative excess.

    gamma sends each exposed bud to a root-corner anchor of the biorientation
    O = phi_minus_inverse(t); gamma_prime sends each other bud to the white
    half-edge of the edge its matched stem follows.  Returns (O, gamma, gamma_prime).
    """
    res, tr, iso = _inverse(t, "minus", True)
    m = res.map
    gamma = {}
    for g in m.faces[m.root_face]:
        gamma[iso[tr.black_item[g]]] = corner_of_exposed_bud(res, g)
    t0, ids, _, _ = lam(t)
    back = {i: h for h, i in ids.items() if isinstance(h, int)}
    pc = PartialClosure(t0)
    gamma_prime = {}
    for bud, stem in pc.matching.items():
        white_half = t0.alpha[stem[1]]
        if bud in back and white_half in back:
            gamma_prime[back[bud]] = back[white_half]
    assert set(gamma).isdisjoint(gamma_prime)
    assert len(gamma) + len(gamma_prime) == len(t.buds)
    return res, gamma, gamma_prime
