from curvemilnor.exact import TRIVIAL_TOWER, BiPoly
from curvemilnor.graph import degree_check, gcd_edge_data, serialize
from curvemilnor.toric import resolve


def poly(tr):
    return BiPoly.from_fractions(TRIVIAL_TOWER, tr)


CUSP = poly([(0, 2, 1), (3, 0, 1)])
ACC2 = poly([(0, 4, 1), (3, 2, -2), (5, 1, -1), (6, 0, 1)])
ACC3 = poly([(0, 4, 1), (3, 2, -2), (6, 0, 1), (7, 0, 1)])
ACC4 = poly([(0, 3, 1), (1, 2, 1), (3, 1, 1), (4, 0, 1)])  # (y+x)(y^2+x^3)


def test_multiplicities_cusp():
    b = resolve(CUSP).floor_one()
    assert (b.q_left_m, b.faces[0].m, b.q_right_m) == (2, 6, 3)


def test_multiplicities_acc2_floor2():
    g = resolve(ACC2)
    b2 = g.ordered()[1]
    assert b2.faces[0].m == 2 * 12 + 2 * 1 * 1
    assert b2.q_right_m == 12 + 1


def test_multiplicities_two_faces():
    b = resolve(ACC4).floor_one()
    assert [fv.m for fv in b.faces] == [3, 8]
    assert (b.q_left_m, b.q_right_m) == (3, 4)


def test_gcd_edge_data_records():
    recs = gcd_edge_data(resolve(ACC3))
    kinds = {(r["kind"], r["gcd"]) for r in recs}
    assert ("connection", 2) in kinds   # gcd(m(P[B2]) = 12, sum aA = 2)
    assert ("cluster", 2) in kinds      # gcd(m(P1) = 12, A = 2), checked vs child q1

    assert gcd_edge_data(resolve(CUSP)) == []

    recs = gcd_edge_data(resolve(ACC2))
    conn = [r for r in recs if r["kind"] == "connection"]
    assert len(conn) == 1 and conn[0]["gcd"] == 2


def test_serialize_dot_cusp():
    text = serialize(resolve(CUSP), "dot")
    nodes = [ln for ln in text.splitlines() if ln.strip().startswith('"') and "--" not in ln]
    edges = [ln for ln in text.splitlines() if "--" in ln]
    assert len(nodes) == 3 and len(edges) == 2
    assert any("P=(2,3) m=6 r=1" in n for n in nodes)


def test_serialize_dot_two_floors():
    text = serialize(resolve(ACC2), "dot")
    nodes = [ln for ln in text.splitlines() if ln.strip().startswith('"') and "--" not in ln]
    edges = [ln for ln in text.splitlines() if "--" in ln]
    assert len(nodes) == 5 and len(edges) == 4


def test_serialize_deterministic():
    a = serialize(resolve(ACC3), "json")
    b = serialize(resolve(ACC3), "json")
    assert a == b
    assert serialize(resolve(ACC3), "dot") == serialize(resolve(ACC3), "dot")


def test_degree_bookkeeping():
    for f in (CUSP, ACC2, ACC3, ACC4):
        assert degree_check(resolve(f))
