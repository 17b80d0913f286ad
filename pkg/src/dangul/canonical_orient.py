"""Canonical orientations of d-angulations of girth d, with and without a boundary.

A face-rooted d-angulation gets the d/(d-2)-orientation: inner vertices of
weight d, inner edges of weight d-2, and the root face a clockwise circuit of
weight-(0,1) edges.  A p-annular d-angulation (root face distinct from a
marked boundary face of degree p) gets the pseudo version, where every edge has
weight d-2 and the boundary face is a clockwise circuit.

Annular maps carry their boundary as `marked_face` (a half-edge with the
boundary face on its right) and, when marked, a boundary vertex as
`marked_vertex`.  Marked vertices are always stored by their corner in the
boundary face, see `boundary_corner`.
"""
from .map_core import PlanarMap, RootSpec, MapError, is_d_angulation, is_p_gonal_d_angulation
from .map_core import canonical_labels, _code, encode_ints
from .orientation import (ConstraintSpec, WeightedBiorientation, construct, feasible,
                          minimize, is_minimal, in_class_B, circuit_left_region)


class NotADAngulation(ValueError):
    pass


class NotAnnular(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


# d/(d-2)-orientations ---------------------------------------------------------

def ddm_spec(m, d):
    """Vertex and edge weights of a d/(d-2)-orientation of a rooted map."""
    outer_v = set(m.outer_vertices())
    outer_e = set(m.outer_edges())
    alpha = {v: (1 if v in outer_v else d) for v in range(m.n_vertices)}
    beta = {h: (1 if h in outer_e else d - 2) for h, _ in m.edges()}
    return ConstraintSpec(alpha, beta)


def ddm_orient(m, d):
    """Minimal d/(d-2)-orientation of a face- or corner-rooted d-angulation, or None."""
    if d < 3:
        raise ValueError("d must be at least 3")
    if not is_d_angulation(m, d):
        raise NotADAngulation("not every face has degree %d" % d)
    if m.root_face is None:
        raise MapError("the map needs a root face")
    spec = ddm_spec(m, d)
    if not feasible(m, spec):
        return None
    return minimize(construct(m, spec))


def even_weight_check(obj, include_outer=False):
    """True iff every half-edge weight is even.

    For a rooted biorientation the root-face contour is skipped unless
    include_outer is set: those edges carry weight 1 by definition.
    """
    weights = obj.weight
    if isinstance(obj, WeightedBiorientation) and not include_outer:
        m = obj.map
        f0 = m.root_face
        if f0 is not None:
            skip = set(m.faces[f0]) | {m.alpha[h] for h in m.faces[f0]}
            weights = [w for h, w in enumerate(weights) if h not in skip]
    return all(w % 2 == 0 for w in weights)


# annular maps -----------------------------------------------------------------

def boundary_face(m):
    if m.marked_face is None:
        raise NotAnnular("no boundary face marked")
    return m.face_of[m.marked_face]


def boundary_corner(m, v):
    """The half-edge at v whose following corner lies in the boundary face."""
    fb = boundary_face(m)
    for h in m.vertices[v]:
        if m.face_of[m.alpha[h]] == fb:
            return h
    raise NotAnnular("vertex %d is not on the boundary" % v)


def check_annular(m, p, d):
    if m.root_face is None:
        raise NotAnnular("the map needs a root face")
    fb = boundary_face(m)
    if not is_p_gonal_d_angulation(m, p, d, fb):
        raise NotAnnular("not a %d-gonal %d-angulation" % (p, d))
    if m.root_face == fb:
        raise NotAnnular("root face and boundary face coincide")


def contract_face(m, f):
    """Contract the contour of face f into a single vertex.

    Returns (contracted map, list new id -> old id).  The contracted map is
    None when nothing is left (m is a single cycle).
    """
    alpha = m.alpha
    gone = set()
    sigma = list(m.sigma)
    parent = list(range(m.n_vertices))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for g in m.faces[f]:
        h, a = g, alpha[g]
        u, v = find(m.vertex_of[h]), find(m.vertex_of[a])
        if u != v:
            # contraction: the rotation of v is spliced in where h was
            jump = {h: sigma[a], a: sigma[h]}
            parent[u] = v
        else:
            jump = {h: sigma[h], a: sigma[a]}
        gone.update((h, a))
        for x in range(m.n_half):
            if x in gone:
                continue
            y = sigma[x]
            while y in jump:
                y = jump[y]
            sigma[x] = y
    keep = [h for h in range(m.n_half) if h not in gone]
    if not keep:
        return None, []
    new = {h: i for i, h in enumerate(keep)}
    hat = PlanarMap([new[alpha[h]] for h in keep], [new[sigma[h]] for h in keep])
    return hat, keep


def pseudo_ddm_orient(m, p, d):
    """Minimal pseudo d/(d-2)-orientation of a p-annular d-angulation, or None.

    Minimality is decided on the map where the boundary face is contracted to
    a vertex (of weight p-d), then the boundary circuit is put back clockwise.
    """
    check_annular(m, p, d)
    fb = boundary_face(m)
    f0 = m.root_face
    weight = [0] * m.n_half
    for g in m.faces[fb]:
        # g has the boundary face on its right: it is the tail half
        weight[m.alpha[g]] = d - 2
    hat, keep = contract_face(m, fb)
    if hat is not None:
        old_to_new = {h: i for i, h in enumerate(keep)}
        bverts = set(m.face_vertices(fb))
        vb = next(hat.vertex_of[i] for i, h in enumerate(keep) if m.vertex_of[h] in bverts)
        alpha = {v: (p - d if v == vb else d) for v in range(hat.n_vertices)}
        beta = {h: d - 2 for h, _ in hat.edges()}
        spec = ConstraintSpec(alpha, beta)
        if not feasible(hat, spec):
            return None
        anchor = next(h for h in m.faces[f0] if h in old_to_new)
        hat = hat.with_root("face", old_to_new[anchor])
        small = minimize(construct(hat, spec))
        for i, h in enumerate(keep):
            weight[h] = small.weight[i]
    b = WeightedBiorientation.from_weights(m, weight)
    assert is_minimal(b), "pulled-back orientation is not minimal"
    return b


def boundary_weight_sum(b):
    m = b.map
    fb = boundary_face(m)
    return sum(b.weight[h] for v in set(m.face_vertices(fb)) for h in m.vertices[v]
               if b.ingoing[h])


# separating cycles -------------------------------------------------------------

def simple_cycles_of_length(m, k):
    """Simple cycles with k edges, each once, as tuples of traversed half-edges."""
    out = []
    for s in range(m.n_vertices):
        path = []
        on_path = {s}

        def dfs(u):
            for h in m.vertices[u]:
                w = m.vertex_of[m.alpha[h]]
                if w == s:
                    # close the cycle; skip the mirror traversal and 2-cycles over one edge
                    if len(path) + 1 == k and (k > 2 or m.alpha[h] != path[0]):
                        if k <= 2 or m.vertex_of[m.alpha[path[0]]] < m.vertex_of[h]:
                            out.append(tuple(path + [h]))
                    continue
                if len(path) + 1 < k and w > s and w not in on_path:
                    on_path.add(w)
                    path.append(h)
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    return out


def pseudo_separating_sides(m, d):
    """For each pseudo-separating d-cycle: (cycle, set of faces on the boundary side)."""
    fb = boundary_face(m)
    f0 = m.root_face
    out = []
    for c in simple_cycles_of_length(m, d):
        left = circuit_left_region(m, c)
        right = set(range(m.n_faces)) - left
        for side in (left, right):
            if fb in side and f0 not in side:
                out.append((c, frozenset(side)))
    return out


def has_separating_cycle(m, d):
    f0 = m.root_face
    contour = {m.edge_id(h) for h in m.faces[f0]}
    for c, _ in pseudo_separating_sides(m, d):
        if {m.edge_id(h) for h in c} != contour:
            return True
    return False


def is_non_separated(m, d, p=None, check=True):
    """Decided by the class of the minimal pseudo orientation; checked against cycle search."""
    if p is None:
        p = m.face_degree(boundary_face(m))
    b = pseudo_ddm_orient(m, p, d)
    if b is None:
        raise ValueError("the map does not have girth %d" % d)
    result = in_class_B(b)
    if check:
        assert result == (not has_separating_cycle(m, d)), "the two criteria disagree"
    return result


# decomposition and gluing ---------------------------------------------------------

def _cut(m, region):
    """Keep the faces in region, merging everything else into a single new face.

    Returns (map, old -> new dict, a new half-edge with the new face on its right).
    """
    keep = [h for h in range(m.n_half)
            if m.face_of[h] in region or m.face_of[m.alpha[h]] in region]
    new = {h: i for i, h in enumerate(keep)}
    sigma = []
    for h in keep:
        y = m.sigma[h]
        while y not in new:
            y = m.sigma[y]
        sigma.append(new[y])
    cut = PlanarMap([new[m.alpha[h]] for h in keep], sigma)
    outside = next(new[h] for h in keep if m.face_of[h] not in region)
    return cut, new, outside


def comarked_vertex(a):
    """Outer vertex first reached by the canonical labelling from the marked corner."""
    anchor = boundary_corner(a, a.vertex_of[a.marked_vertex])
    outer = set(a.face_vertices(a.root_face))
    _, order = canonical_labels(a.alpha, a.sigma, anchor)
    return next(a.vertex_of[h] for h in order if a.vertex_of[h] in outer)


def marked_annular(m, root_anchor, boundary_anchor, vertex):
    """Face-rooted annular map with its boundary and marked vertex normalised."""
    out = PlanarMap(m.alpha, m.sigma, RootSpec("face", root_anchor), boundary_anchor)
    return out.with_marks(boundary_anchor, boundary_corner(out, vertex))


def decompose(m, d):
    """Split a marked p-annular d-angulation of girth d along its minimal pseudo-separating d-cycle.

    Returns (non-separated part containing the boundary, d-annular part
    containing the root face), both marked.
    """
    if m.marked_vertex is None:
        raise NotAnnular("a boundary vertex must be marked")
    fb = boundary_face(m)
    f0 = m.root_face
    sides = pseudo_separating_sides(m, d)
    if not sides:
        raise ValueError("no pseudo-separating cycle of length %d" % d)
    cycle, region = min(sides, key=lambda cs: len(cs[1]))
    assert all(region <= r for _, r in sides), "pseudo-separating cycles are not nested"
    mv = m.vertex_of[m.marked_vertex]

    inner, new, outside = _cut(m, region)
    v = inner.vertex_of[new[boundary_corner(m, mv)]]
    first = marked_annular(inner, outside, new[m.faces[fb][0]], v)

    co = comarked_vertex(first)
    # the co-marked vertex lies on the cycle; find it in the other piece
    old_co = next(h for h, i in new.items() if first.vertex_of[i] == co)
    rest = set(range(m.n_faces)) - region
    outer, new2, outside2 = _cut(m, rest)
    second = marked_annular(outer, new2[m.faces[f0][0]], outside2,
                            outer.vertex_of[_at_vertex(m, new2, m.vertex_of[old_co])])
    return first, second


def _at_vertex(m, new, v):
    return next(new[h] for h in m.vertices[v] if h in new)


def glue(a, b):
    """Inverse of decompose: identify the root contour of a with the boundary of b."""
    fa, fbb = a.root_face, boundary_face(b)
    k = len(a.faces[fa])
    if len(b.faces[fbb]) != k:
        raise DegreeMismatch("root face of degree %d, boundary of degree %d"
                             % (k, len(b.faces[fbb])))
    co = comarked_vertex(a)
    mark = b.vertex_of[b.marked_vertex]
    ga = list(a.faces[fa])
    s = next(i for i, g in enumerate(ga) if a.vertex_of[g] == co)
    ga = ga[s:] + ga[:s]
    kb = list(b.faces[fbb])
    s = next(i for i, g in enumerate(kb) if b.vertex_of[b.alpha[g]] == mark)
    kb = kb[s:] + kb[:s]
    off = a.n_half
    removed_a, removed_b = set(ga), set(kb)
    keep = [h for h in range(a.n_half) if h not in removed_a]
    keep += [off + h for h in range(b.n_half) if h not in removed_b]
    new = {h: i for i, h in enumerate(keep)}

    def phi_of(h):
        return a.phi[h] if h < off else off + b.phi[h - off]

    def alpha_of(h):
        return a.alpha[h] if h < off else off + b.alpha[h - off]

    partner = {}
    for t in range(k):
        x, y = a.alpha[ga[t]], off + b.alpha[kb[-t % k]]
        partner[x], partner[y] = y, x
    phi = [new[phi_of(h)] for h in keep]
    alpha = [new[partner[h]] if h in partner else new[alpha_of(h)] for h in keep]
    sigma = [phi[alpha[i]] for i in range(len(keep))]
    glued = PlanarMap(alpha, sigma)
    root_anchor = new[off + b.faces[b.root_face][0]]
    bnd = new[a.marked_face]
    va = a.vertex_of[a.marked_vertex]
    at_mark = next(h for h in a.vertices[va] if h in new)
    return marked_annular(glued, root_anchor, bnd, glued.vertex_of[new[at_mark]])


def marked_code(m):
    """Isomorphism code of a marked annular map (root face, boundary and marked vertex)."""
    anchor = boundary_corner(m, m.vertex_of[m.marked_vertex])
    label, _ = canonical_labels(m.alpha, m.sigma, anchor)
    root_label = min(label[h] for h in m.faces[m.root_face])
    return _code(m.alpha, m.sigma, anchor) + encode_ints([root_label])
