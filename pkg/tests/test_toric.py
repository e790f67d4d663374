from fractions import Fraction

import pytest

from curvemilnor.errors import MaxDepthExceeded
from curvemilnor.exact import TRIVIAL_TOWER, BiPoly, TowerScalar
from curvemilnor.newton import WeightVector, newton_faces
from curvemilnor.toric import Germ, chart_map, local_germ_at_root, pullback_divided, resolve


def poly(tr):
    return BiPoly.from_fractions(TRIVIAL_TOWER, tr)


CUSP = poly([(0, 2, 1), (3, 0, 1)])
ACC2 = poly([(0, 4, 1), (3, 2, -2), (5, 1, -1), (6, 0, 1)])   # y^4 - 2x^3y^2 - x^5y + x^6
ACC3 = poly([(0, 4, 1), (3, 2, -2), (6, 0, 1), (7, 0, 1)])    # (y^2-x^3)^2 + x^7


def test_chart_map_examples():
    assert chart_map(WeightVector(2, 3)) == chart_map(WeightVector(2, 3))
    cm = chart_map(WeightVector(2, 3))
    assert (cm.a, cm.ap, cm.b, cm.bp) == (2, 1, 3, 2)
    cm = chart_map(WeightVector(1, 4))
    assert (cm.a, cm.ap, cm.b, cm.bp) == (1, 0, 4, 1)
    cm = chart_map(WeightVector(2, 1))
    assert (cm.a, cm.ap, cm.b, cm.bp) == (2, 1, 1, 1)


def test_cusp_face_germ():
    face = newton_faces(CUSP)[0]
    gdiv = pullback_divided(CUSP, face)
    # u^{-6} f(u^2 v, u^3 v^2) = v^3 (v + 1)
    assert gdiv == poly([(0, 3, 1), (0, 4, 1)])
    rho = TowerScalar.from_fraction(TRIVIAL_TOWER, -1)
    germ = local_germ_at_root(Germ(CUSP, TRIVIAL_TOWER, 0), face, rho)
    assert germ.m_pred == 6
    # nonzero root is simple: w-order 1 at u = 0
    assert min(ev for (eu, ev) in germ.poly.c if eu == 0) == 1


def test_acc2_translated_germ_exact():
    face = newton_faces(ACC2)[0]
    rho = TowerScalar.from_fraction(TRIVIAL_TOWER, 1)
    germ = local_germ_at_root(Germ(ACC2, TRIVIAL_TOWER, 0), face, rho)
    # (1+w)^6 w^2 - u (1+w)^7, expanded exactly
    w = poly([(0, 1, 1)])
    u = poly([(1, 0, 1)])
    one = poly([(0, 0, 1)])
    expected = ((one + w) ** 6) * (w ** 2) - u * ((one + w) ** 7)
    assert germ.poly == expected
    assert germ.m_pred == 12


def test_acc3_translated_germ_exact():
    face = newton_faces(ACC3)[0]
    rho = TowerScalar.from_fraction(TRIVIAL_TOWER, 1)
    germ = local_germ_at_root(Germ(ACC3, TRIVIAL_TOWER, 0), face, rho)
    w = poly([(0, 1, 1)])
    u = poly([(1, 0, 1)])
    one = poly([(0, 0, 1)])
    expected = ((one + w) ** 6) * (w ** 2) + (u ** 2) * ((one + w) ** 7)
    assert germ.poly == expected


def test_resolve_cusp_shape():
    g = resolve(CUSP)
    assert list(g.bamboos) == [()]
    b = g.floor_one()
    assert (b.q_left_m, b.faces[0].m, b.q_right_m) == (2, 6, 3)
    (cl,) = b.faces[0].clusters
    assert (cl.delta, cl.a_mult, cl.terminal) == (1, 1, True)
    assert cl.defining_str() == "z + 1"  # root -1


def test_resolve_acc2_two_floors():
    g = resolve(ACC2)
    assert len(g.bamboos) == 2
    b1, b2 = g.ordered()
    assert b1.faces[0].m == 12 and b1.faces[0].clusters[0].a_mult == 2
    assert (b2.faces[0].a, b2.faces[0].b) == (2, 1)
    assert b2.faces[0].m == 26 and b2.q_right_m == 13
    assert b2.faces[0].clusters[0].terminal


def test_resolve_acc3_tower_cluster():
    g = resolve(ACC3)
    b1, b2 = g.ordered()
    assert (b2.faces[0].a, b2.faces[0].b) == (1, 1)
    assert b2.faces[0].face_function == poly([(2, 0, 1), (0, 2, 1)])  # u^2 + v^2
    (cl,) = b2.faces[0].clusters
    assert (cl.delta, cl.a_mult, cl.terminal) == (2, 1, True)
    assert cl.defining_str() == "z^2 + 1"
    assert b2.faces[0].r == 2
    assert b2.faces[0].m == 14 and b2.q_right_m == 14


def test_resolve_monomial_fast_paths():
    assert resolve(poly([(5, 0, 1)])).monomial == ("x", 5)
    assert resolve(poly([(0, 3, 2)])).monomial == ("y", 3)


def test_resolve_mixed_monomial_two_shears():
    g = resolve(poly([(1, 1, 1)]))  # x*y
    assert g.monomial is None
    assert [s[0] for s in g.shears] == ["y", "x"]
    b = g.floor_one()
    assert len(b.faces) == 2
    assert {fv.m for fv in b.faces} == {3}
    assert (b.q_left_m, b.q_right_m) == (3, 3)


def test_resolve_axis_component_shear():
    # y * (y^2 + x^3): one shear in y, then an ordinary two-face resolution
    f = poly([(0, 3, 1), (3, 1, 1)])
    g = resolve(f)
    assert g.shears and g.shears[0][0] == "y"
    assert g.monomial is None


def test_non_reduced_smooth_branch_terminates():
    # (y - x)^2 (y - 2x): root 1 has A = 2 but the germ is w^2 * unit
    f = poly([(0, 3, 1), (1, 2, -4), (2, 1, 5), (3, 0, -2)])
    g = resolve(f)
    b = g.floor_one()
    packs = {(c.defining_str(), c.delta, c.a_mult, c.terminal) for c in b.faces[0].clusters}
    assert packs == {("z - 1", 1, 2, True), ("z - 2", 1, 1, True)}


def test_max_depth_guard():
    with pytest.raises(MaxDepthExceeded):
        resolve(ACC2, max_depth=1)


def test_exactness_u_division_everywhere():
    # every germ stays polynomial: pullback_divided raises if division inexact
    for f in (CUSP, ACC2, ACC3, poly([(0, 3, 1), (1, 2, 1), (3, 1, 1), (4, 0, 1)])):
        resolve(f)  # internal asserts verify order bookkeeping


def test_forced_split_refines_cluster():
    # g1 = (y-x)^2 - x^3, g2 = (y-2x)^2 - x^5: shared contact-1 packet splits
    # when the deeper Newton support distinguishes the two branches.
    x = poly([(1, 0, 1)])
    y = poly([(0, 1, 1)])
    g1 = (y - x) ** 2 - x ** 3
    g2 = (y - x.scale(TowerScalar.from_fraction(TRIVIAL_TOWER, 2))) ** 2 - x ** 5
    f = g1 * g2
    fast = resolve(f, use_rational_roots=True)
    slow = resolve(f, use_rational_roots=False)
    # fast path: rational roots 1 and 2 give two separate packets up front
    b_fast = fast.floor_one()
    assert len(b_fast.faces[0].clusters) == 2
    # without the fast path the packet z^2-3z+2 must split dynamically
    b_slow = slow.floor_one()
    assert len(b_slow.faces[0].clusters) == 2
    assert {c.defining_str() for c in b_slow.faces[0].clusters} == {"z - 1", "z - 2"}
    # identical bamboo shapes per conjugate representative
    def shape(g):
        out = []
        for b in g.ordered():
            out.append((len(b.bid), b.m_pred,
                        tuple((fv.a, fv.b, fv.m, fv.r,
                               tuple((c.delta, c.a_mult, c.terminal) for c in fv.clusters))
                              for fv in b.faces)))
        return sorted(out)
    assert shape(fast) == shape(slow)
