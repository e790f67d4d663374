"""The extended simplified resolution graph: data model, multiplicities,
gcd edge data, and serialization.

Only the simplified graph is materialized: one bamboo per toric modification,
holding its ordered face vertices with root clusters; the full graph's
degree-2 chain vertices carry zero Euler characteristic and affect no output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd


@dataclass(frozen=True)
class ClusterSummary:
    """One conjugacy packet of face roots.

    `defining` is the monic defining polynomial of the packet over `tower`
    (degree = conjugacy degree `delta`); `root_repr` is the representative
    root used by the recursion.  `a_mult` is the common branch multiplicity A.
    """

    defining: object          # UPoly over `tower`
    tower: object
    delta: int
    a_mult: int
    terminal: bool
    child_id: tuple | None = None
    child_q1_mult: int | None = None  # m(E(Q_{B',1})) of the successor bamboo

    def defining_str(self):
        return self.defining.render("z")

    def tower_str(self):
        return "; ".join(f"{name}: {q.render(name)}" for name, q in self.tower.levels) or "Q"


@dataclass
class FaceVertex:
    """One vertex E(P) of a bamboo with its root clusters."""

    a: int
    b: int
    local_order: int          # ell of the bamboo germ at this face (direct pullback order)
    clusters: tuple           # ClusterSummary, deterministic order
    face_function: object     # BiPoly, exact including scalar prefactors
    eu: int                   # u-exponent of the displayed face-function formula
    ev: int                   # v-exponent
    m: int | None = None      # filled by compute_multiplicities

    @property
    def r(self):
        return sum(c.delta for c in self.clusters)

    @property
    def a_total(self):
        return sum(c.delta * c.a_mult for c in self.clusters)


@dataclass
class Bamboo:
    bid: tuple                # path of (face_index, cluster_index); () for the first floor
    floor: int
    m_pred: int               # m(P[B]); 0 on the first floor
    faces: list               # FaceVertex, ordered left to right
    fan: tuple                # interior rays of the completed fan (WeightVector)
    q_left_ray: object
    q_right_ray: object
    q_right_order: int        # ell of the bamboo germ at the right end ray
    q1_order: int             # ell of the bamboo germ at the first fan ray
    shears: tuple = ()
    parent: tuple | None = None   # (parent bid, face index, cluster index)
    q_left_m: int | None = None   # first floor only
    q_right_m: int | None = None

    @property
    def sum_aA(self):
        return sum(f.a * f.a_total for f in self.faces)

    @property
    def sum_bA(self):
        return sum(f.b * f.a_total for f in self.faces)

    def label(self):
        if not self.bid:
            return "B1"
        return "B1." + ".".join(f"{i}.{j}" for i, j in self.bid)


@dataclass
class ResolutionGraph:
    """G_s as a forest of bamboos rooted at the first-floor bamboo.

    `monomial` is set for the pure-power fast path f = c*x^A or c*y^A, in
    which case there are no bamboos and the motivic fiber is [mu_A].
    """

    bamboos: dict             # bid -> Bamboo, insertion order = deterministic DFS
    input_poly: object
    shears: tuple = ()        # shears applied to the input before floor 1
    monomial: tuple | None = None   # ("x"|"y", A)

    def floor_one(self):
        return self.bamboos[()]

    def ordered(self):
        return [self.bamboos[k] for k in sorted(self.bamboos.keys())]


def compute_multiplicities(g):
    """Fill every m(.) by the floor recursions and cross-check pullback orders.

    m(P_i) = a_i m(P[B]) + a_i sum_{t<=i} b_t A_t + b_i sum_{t>i} a_t A_t,
    m(Q_right) = m(P[B]) + sum b_t A_t, and on the first floor
    m(Q_left) = sum a_t A_t.  Each value is checked against the direct order
    of the pulled-back germ recorded by the toric driver.
    """
    if g.monomial is not None:
        return g
    for bid in sorted(g.bamboos.keys(), key=lambda k: (len(k), k)):
        b = g.bamboos[bid]
        if b.parent is not None:
            pbid, fi, _ = b.parent
            parent_face = g.bamboos[pbid].faces[fi - 1]
            assert parent_face.m is not None
            assert b.m_pred == parent_face.m, "carried multiplicity disagrees with parent"
        else:
            assert b.m_pred == 0
        faces = b.faces
        for i, fv in enumerate(faces, start=1):
            rec = (fv.a * b.m_pred
                   + fv.a * sum(ft.b * ft.a_total for ft in faces[:i])
                   + fv.b * sum(ft.a * ft.a_total for ft in faces[i:]))
            direct = fv.a * b.m_pred + fv.local_order
            assert rec == direct, f"multiplicity recursion vs pullback order: {rec} != {direct}"
            fv.m = rec
        b.q_right_m = b.m_pred + b.sum_bA
        assert b.q_right_m == b.m_pred + b.q_right_order
        if b.floor == 1:
            b.q_left_m = b.sum_aA
    return g


def gcd_edge_data(g):
    """Edge gcd records: cluster edges to successor bamboos (with the
    arithmetic identity check) and connection edges of deeper bamboos."""
    records = []
    if g.monomial is not None:
        return records
    for b in g.ordered():
        if b.parent is not None:
            records.append({
                "kind": "connection",
                "bamboo": b.label(),
                "gcd": gcd(b.m_pred, b.sum_aA),
            })
        for i, fv in enumerate(b.faces, start=1):
            for j, cl in enumerate(fv.clusters, start=1):
                if cl.terminal:
                    continue
                g1 = gcd(fv.m, cl.a_mult)
                g2 = gcd(fv.m, cl.child_q1_mult)
                assert g1 == g2, f"gcd identity fails on {b.label()} face {i} cluster {j}"
                records.append({
                    "kind": "cluster",
                    "bamboo": b.label(),
                    "face": i,
                    "cluster": j,
                    "gcd": g1,
                    "child_q1_mult": cl.child_q1_mult,
                })
    return records


def degree_check(g):
    """Vertex-degree bookkeeping: every face vertex has degree r + 2 in G_s,
    counting two horizontal/connection neighbors plus its r cluster points."""
    if g.monomial is not None:
        return True
    for b in g.ordered():
        for i, fv in enumerate(b.faces, start=1):
            left = 1  # Q^left (floor one) or the connection to the predecessor
            right = 1  # next face vertex or Q^right
            attachments = sum(c.delta for c in fv.clusters)
            if left + right + attachments != fv.r + 2:
                return False
    return True


# ---------------------------------------------------------------------------
# serialization


def _cluster_json(cl):
    coeffs = []
    d = cl.defining.degree()
    for e in range(d + 1):
        s = cl.defining.c.get(e)
        coeffs.append(s.render() if s is not None else "0")
    return {
        "defining_coeffs": coeffs,
        "tower": cl.tower_str(),
        "delta": cl.delta,
        "A": cl.a_mult,
        "terminal": cl.terminal,
        "child": None if cl.child_id is None else "B1." + ".".join(
            f"{i}.{j}" for i, j in cl.child_id),
    }


def graph_to_dict(g):
    if g.monomial is not None:
        axis, power = g.monomial
        return {"monomial": {"axis": axis, "power": power}, "bamboos": []}
    out = []
    for b in g.ordered():
        out.append({
            "id": b.label(),
            "floor": b.floor,
            "m_pred": b.m_pred,
            "q_left_m": b.q_left_m,
            "q_right_m": b.q_right_m,
            "sum_aA": b.sum_aA,
            "sum_bA": b.sum_bA,
            "fan": [[r.a, r.b] for r in b.fan],
            "shears": [list(s) for s in b.shears],
            "vertices": [{
                "a": fv.a,
                "b": fv.b,
                "m": fv.m,
                "r": fv.r,
                "eu": fv.eu,
                "ev": fv.ev,
                "face_function": fv.face_function.render("u", "v"),
                "clusters": [_cluster_json(c) for c in fv.clusters],
            } for fv in b.faces],
        })
    return {"monomial": None, "bamboos": out}


def _dot_lines(g):
    lines = ["graph Gs {"]
    nodes = []
    edges = []
    if g.monomial is not None:
        axis, power = g.monomial
        nodes.append(f'  "{axis}^{power} m={power}";')
    else:
        for b in g.ordered():
            lab = b.label()
            prev = None
            if b.floor == 1:
                prev = f"{lab} Qleft m={b.q_left_m}"
                nodes.append(f'  "{prev}";')
            else:
                pbid, fi, _ = b.parent
                pb = g.bamboos[pbid]
                prev = f"{pb.label()} P=({pb.faces[fi-1].a},{pb.faces[fi-1].b}) m={pb.faces[fi-1].m} r={pb.faces[fi-1].r}"
            for i, fv in enumerate(b.faces, start=1):
                me = f"{lab} P=({fv.a},{fv.b}) m={fv.m} r={fv.r}"
                nodes.append(f'  "{me}";')
                edges.append(f'  "{prev}" -- "{me}";')
                prev = me
            qr = f"{lab} Qright m={b.q_right_m}"
            nodes.append(f'  "{qr}";')
            edges.append(f'  "{prev}" -- "{qr}";')
    seen = set()
    for n in nodes:
        if n not in seen:
            seen.add(n)
            lines.append(n)
    lines.extend(edges)
    lines.append("}")
    return lines


def serialize(g, fmt="json"):
    """Deterministic text form of the annotated graph ('json' or 'dot')."""
    if fmt == "json":
        return json.dumps(graph_to_dict(g), sort_keys=True, separators=(",", ":")) + "\n"
    if fmt == "dot":
        return "\n".join(_dot_lines(g)) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
