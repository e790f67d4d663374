"""One toric modification step and the recursive resolution driver.

Each face normal P = (a, b) gets canonical chart coordinates
x = u^a v^{a'}, y = u^b v^{b'} with a b' - a' b = 1 and 0 <= a' < a
(a' = 0, b' = 1 when a = 1).  The germ at a nonzero face root rho is the
exact pullback, divided by the full u-power, translated by rho; recursion
stops at multiplicity-1 roots and at exact w^A-unit germs.  Dynamic
evaluation splits are caught by the cluster frame that adjoined the
ambiguous tower level, which reruns its subtree once per branch.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import MaxDepthExceeded, NotVanishing
from .exact import (
    DEFAULT_MAX_TOWER_DEGREE,
    TRIVIAL_TOWER,
    SplitRequest,
    adjoin_root,
    divexact,
    invert_scalar,
    rational_roots,
    squarefree_decompose,
)
from .graph import Bamboo, ClusterSummary, FaceVertex, ResolutionGraph, compute_multiplicities
from .newton import certify_support, newton_faces, unimodular_complete

DEFAULT_MAX_DEPTH = 24


@dataclass(frozen=True)
class ChartMap:
    """Exponent matrix ((a, a'), (b, b')) of the monomial substitution."""

    a: int
    ap: int
    b: int
    bp: int


def chart_map(p):
    """Canonical chart for a primitive weight vector: a b' - a' b = 1, 0 <= a' < a."""
    if p.a == 1:
        return ChartMap(1, 0, p.b, 1)
    ap = (-pow(p.b, -1, p.a)) % p.a
    bp = (1 + ap * p.b) // p.a
    cm = ChartMap(p.a, ap, p.b, bp)
    assert cm.a * cm.bp - cm.ap * cm.b == 1
    return cm


@dataclass(frozen=True)
class Germ:
    """A local germ in chart coordinates with its carried exceptional multiplicity."""

    poly: object          # BiPoly, vanishing at the origin, u does not divide it
    tower: object
    m_pred: int = 0


def pullback_divided(poly, face):
    """u^{-ell} * (poly o chart) for the face's chart; exact by construction."""
    cm = chart_map(face.normal)
    g = poly.monomial_map(cm.a, cm.ap, cm.b, cm.bp)
    return g.divide_u_power(face.m)


def local_germ_at_root(germ, face, root):
    """The germ one floor deeper at a nonzero root of the face polynomial."""
    gdiv = pullback_divided(germ.poly, face)
    if len(root.tower.levels) > len(germ.tower.levels):
        gdiv = gdiv.lift(root.tower)
        tower = root.tower
    else:
        tower = germ.tower
    h = gdiv.translate_v(root)
    return Germ(h, tower, face.normal.a * germ.m_pred + face.m)


@dataclass(frozen=True)
class ResolveConfig:
    max_tower_degree: int = DEFAULT_MAX_TOWER_DEGREE
    max_depth: int = DEFAULT_MAX_DEPTH
    use_rational_roots: bool = True


def _order_of(upoly):
    return min(upoly.c)


def _shear_second_variable(poly):
    """Remove v-divisibility: v -> v + u^s with s = 1 + ord_u(h(u,0)),
    h = poly with its maximal v-power removed.  Returns (poly', shear or None)."""
    k = poly.min_v()
    if k == 0:
        return poly, None
    s = 1 + min(eu for (eu, ev) in poly.c if ev == k)
    return poly.subst_v_plus_u_power(s), ("y", s)


def _shear_first_variable(poly):
    k = poly.min_u()
    if k == 0:
        return poly, None
    s = 1 + min(ev for (eu, ev) in poly.c if eu == k)
    return poly.subst_u_plus_v_power(s), ("x", s)


def _preprocess(poly):
    """Shear away axis components (second variable first, then the first)."""
    shears = []
    for _ in range(4):
        poly, sh = _shear_second_variable(poly)
        if sh:
            shears.append(sh)
        poly, sh = _shear_first_variable(poly)
        if sh:
            shears.append(sh)
        if poly.min_u() == 0 and poly.min_v() == 0:
            return poly, tuple(shears)
    raise AssertionError("shear preprocessing failed to terminate")


def _relabel_tree(desc, old_prefix, new_prefix):
    """Rewrite provisional bamboo path ids below a cluster after reindexing."""
    out = {}
    n = len(old_prefix)
    for key, bamboo in desc.items():
        assert key[:n] == old_prefix
        nk = new_prefix + key[n:]
        bamboo.bid = nk
        bamboo.parent = (nk[:-1], nk[-1][0], nk[-1][1])
        for fv in bamboo.faces:
            fv.clusters = tuple(
                cl if cl.child_id is None
                else replace(cl, child_id=new_prefix + cl.child_id[n:])
                for cl in fv.clusters
            )
        out[nk] = bamboo
    return out


def _process_cluster(gdiv, parent_tower, defining, a_mult, m_face, bid, face_idx,
                     floor, cfg, next_prov):
    """Resolve one root packet; returns a list of (ClusterSummary, desc_dict).

    A SplitRequest at the level this packet adjoined shatters the packet and
    reruns each branch; splits at lower levels propagate to the owner frame.
    """
    delta = defining.degree()
    level = None
    try:
        if delta == 1:
            tower = parent_tower
            root = -defining.constant()
            gt = gdiv
        else:
            tower, root = adjoin_root(parent_tower, defining, cfg.max_tower_degree)
            level = len(tower.levels)
            gt = gdiv.lift(tower)
        h = gt.translate_v(root)
        certify_support(h)
        worder = min(ev for (eu, ev) in h.c if eu == 0)
        assert worder == a_mult, "cluster multiplicity disagrees with germ order"
        if a_mult == 1 or h.min_v() == a_mult:
            summary = ClusterSummary(defining, parent_tower, delta, a_mult, True)
            return [(summary, {})]
        hp, shear = _shear_second_variable(h)
        assert hp.min_u() == 0
        prov = next_prov()
        child_bid = bid + ((face_idx, prov),)
        child, desc = _build_bamboo(
            hp, tower, m_face, child_bid, floor + 1,
            (shear,) if shear else (), cfg, parent=(bid, face_idx, prov))
        q1_mult = child.q_left_ray.a * m_face + child.q1_order
        summary = ClusterSummary(defining, parent_tower, delta, a_mult, False,
                                 child_id=child_bid, child_q1_mult=q1_mult)
        all_desc = {child_bid: child}
        all_desc.update(desc)
        return [(summary, all_desc)]
    except SplitRequest as sr:
        if level is None or sr.level != level:
            raise
        g = sr.factor
        hh = divexact(defining, g)
        out = []
        for part in (g, hh):
            out.extend(_process_cluster(gdiv, parent_tower, part, a_mult, m_face,
                                        bid, face_idx, floor, cfg, next_prov))
        return out


def _build_bamboo(poly, tower, m_pred, bid, floor, shears, cfg, parent):
    """One toric modification: faces, clusters, recursion below each root."""
    if floor > cfg.max_depth:
        raise MaxDepthExceeded(f"resolution exceeded {cfg.max_depth} floors")
    faces_geo = newton_faces(poly)
    fan = unimodular_complete([f.normal for f in faces_geo])
    q_left_ray, q_right_ray = fan[0], fan[-1]
    support = sorted(poly.c)
    q1_order = min(q_left_ray.a * a + q_left_ray.b * b for a, b in support)
    q_right_order = min(q_right_ray.a * a + q_right_ray.b * b for a, b in support)

    face_vertices = []
    bamboos_acc = {}
    counter = [0]

    def next_prov():
        counter[0] += 1
        return -counter[0]  # negative provisional indices, rewritten below

    for i, fgeo in enumerate(faces_geo, start=1):
        gdiv = pullback_divided(poly, fgeo)
        fv0 = gdiv.eval_u0()
        d0 = _order_of(fv0)
        ft = type(fv0)(fv0.tower, {e - d0: c for e, c in fv0.c.items()})
        worklist = []
        for gk, k in squarefree_decompose(ft):
            if not tower.levels and cfg.use_rational_roots:
                roots, cof = rational_roots(gk)
                for r, mult in roots:
                    assert mult == 1
                    lin = type(gk).from_fractions(tower, [(1, 1), (0, -r)])
                    worklist.append((lin, k))
                if cof.degree() >= 1:
                    worklist.append((cof, k))
            else:
                worklist.append((gk, k))
        m_face = fgeo.normal.a * m_pred + fgeo.m
        processed = []
        for defining, a_mult in worklist:
            processed.extend(_process_cluster(
                gdiv, tower, defining, a_mult, m_face, bid, i, floor, cfg, next_prov))
        clusters = []
        for j, (cl, desc) in enumerate(processed, start=1):
            if cl.child_id is not None:
                new_child = bid + ((i, j),)
                desc = _relabel_tree(desc, cl.child_id, new_child)
                cl = replace(cl, child_id=new_child)
            clusters.append(cl)
            bamboos_acc.update(desc)
        fv = FaceVertex(
            a=fgeo.normal.a, b=fgeo.normal.b, local_order=fgeo.m,
            clusters=tuple(clusters), face_function=fgeo.face_function,
            eu=0, ev=0)
        face_vertices.append(fv)

    # monomial exponents of the displayed face-function formulas; checked
    # against the actual geometric face functions
    for i, fv in enumerate(face_vertices, start=1):
        e_local = sum(ft.b * ft.a_total for ft in face_vertices[:i - 1])
        fv.eu = m_pred + e_local
        fv.ev = sum(ft.a * ft.a_total for ft in face_vertices[i:])
        assert fv.face_function.min_u() == e_local
        assert fv.face_function.min_v() == fv.ev

    bamboo = Bamboo(
        bid=bid, floor=floor, m_pred=m_pred, faces=face_vertices,
        fan=tuple(fan), q_left_ray=q_left_ray, q_right_ray=q_right_ray,
        q_right_order=q_right_order, q1_order=q1_order,
        shears=tuple(shears), parent=parent)
    return bamboo, bamboos_acc


def _single_monomial(poly):
    if len(poly.c) != 1:
        return None
    (eu, ev), = poly.c.keys()
    return eu, ev


def resolve(f, max_tower_degree=DEFAULT_MAX_TOWER_DEGREE, max_depth=DEFAULT_MAX_DEPTH,
            use_rational_roots=True):
    """Full resolution of a plane curve germ over Q into its simplified graph."""
    if f.is_zero():
        raise NotVanishing("the zero polynomial has no Milnor data")
    if (0, 0) in f.c:
        raise NotVanishing("polynomial does not vanish at the origin")
    cfg = ResolveConfig(max_tower_degree, max_depth, use_rational_roots)
    mono = _single_monomial(f)
    if mono is not None:
        eu, ev = mono
        if ev == 0:
            return ResolutionGraph({}, f, (), monomial=("x", eu))
        if eu == 0:
            return ResolutionGraph({}, f, (), monomial=("y", ev))
    poly, shears = _preprocess(f)
    root, desc = _build_bamboo(poly, TRIVIAL_TOWER, 0, (), 1, (), cfg, parent=None)
    bamboos = {(): root}
    bamboos.update(desc)
    graph = ResolutionGraph(bamboos, f, shears)
    return compute_multiplicities(graph)
