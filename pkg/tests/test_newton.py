import random
from fractions import Fraction

import pytest

from curvemilnor.exact import TRIVIAL_TOWER, BiPoly
from curvemilnor.newton import (
    WeightVector,
    cone_decomposition,
    det,
    newton_faces,
    unimodular_complete,
)
from curvemilnor.errors import NotVanishing


def poly(triples):
    return BiPoly.from_fractions(TRIVIAL_TOWER, triples)


CUSP = poly([(0, 2, 1), (3, 0, 1)])  # y^2 + x^3


def test_cusp_single_face():
    faces = newton_faces(CUSP)
    assert len(faces) == 1
    f = faces[0]
    assert f.normal == WeightVector(2, 3)
    assert f.m == 6
    assert f.face_function == CUSP


def test_squared_cusp_face_with_point_above():
    f = poly([(0, 4, 1), (3, 2, -2), (5, 1, -1), (6, 0, 1)])
    faces = newton_faces(f)
    assert len(faces) == 1
    face = faces[0]
    assert face.normal == WeightVector(2, 3)
    assert face.m == 12
    # (5,1) lies strictly above the face line
    assert face.normal.pair((5, 1)) > 12
    assert face.face_function == poly([(0, 4, 1), (3, 2, -2), (6, 0, 1)])


def test_two_face_polygon():
    f = poly([(0, 3, 1), (1, 2, 1), (3, 1, 1), (4, 0, 1)])
    faces = newton_faces(f)
    assert [fc.normal for fc in faces] == [WeightVector(1, 1), WeightVector(2, 3)]
    assert faces[0].face_function == poly([(0, 3, 1), (1, 2, 1)])
    assert faces[1].face_function == poly([(1, 2, 1), (4, 0, 1)])
    assert det(faces[0].normal, faces[1].normal) == 1


def test_not_vanishing():
    with pytest.raises(NotVanishing):
        newton_faces(poly([(0, 0, 1), (1, 0, 1)]))


def brute_hull_faces(support):
    """Oracle: a pair of support points spans a face iff some positive
    primitive weight is minimized exactly on the segment through them."""
    lines = set()
    for p1 in support:
        for p2 in support:
            if p1 >= p2:
                continue
            da, db = p1[1] - p2[1], p2[0] - p1[0]
            if da <= 0 or db <= 0:
                continue
            from math import gcd

            g = gcd(da, db)
            a, b = da // g, db // g
            m = a * p1[0] + b * p1[1]
            if all(a * q[0] + b * q[1] >= m for q in support):
                lines.add((a, b, m))
    return lines


def test_hull_vs_brute_force_oracle():
    rng = random.Random(7)
    for _ in range(40):
        pts = {(0, rng.randint(1, 6)), (rng.randint(1, 6), 0)}
        for _ in range(rng.randint(0, 6)):
            pts.add((rng.randint(0, 6), rng.randint(0, 6)))
        pts.discard((0, 0))
        f = poly([(a, b, 1) for a, b in pts])
        faces = newton_faces(f)
        expected = brute_hull_faces(sorted(pts))
        got = {(fc.normal.a, fc.normal.b, fc.m) for fc in faces}
        assert got == expected


def test_unimodular_complete_cusp():
    chain = unimodular_complete([WeightVector(2, 3)])
    assert chain == [WeightVector(1, 1), WeightVector(2, 3), WeightVector(1, 2)]


def test_unimodular_complete_11_minimal():
    chain = unimodular_complete([WeightVector(1, 1)], force_end_separation=False)
    assert chain == [WeightVector(1, 1)]


def test_unimodular_complete_right_end_rule():
    chain = unimodular_complete([WeightVector(1, 2)])
    assert chain[-1] == WeightVector(1, 3)
    assert chain[0] != WeightVector(1, 2)


def test_unimodular_complete_properties():
    rng = random.Random(11)
    for _ in range(30):
        rays = set()
        while len(rays) < rng.randint(1, 3):
            from math import gcd

            a, b = rng.randint(1, 9), rng.randint(1, 9)
            if gcd(a, b) == 1:
                rays.add((a, b))
        rays = [WeightVector(a, b) for a, b in rays]
        rays.sort(key=lambda r: Fraction(r.b, r.a))  # decreasing steepness a/b
        chain = unimodular_complete(rays)
        for r in rays:
            assert r in chain
        full = [WeightVector(1, 1)] if False else chain
        prev = (1, 0)
        for r in full:
            assert prev[0] * r.b - r.a * prev[1] == 1
            prev = (r.a, r.b)
        assert prev[0] * 1 - 0 * prev[1] == 1  # against (0,1)


def test_cone_classification_cusp_examples():
    cones = cone_decomposition(newton_faces(CUSP))
    kind, ell = cones.classify((2, 3))
    assert kind == ("face", 1) and ell == 6
    kind, ell = cones.classify((1, 1))
    assert kind == ("vertex", 0) and ell == 2
    # (3,2) lies between (1,0) and the face normal: left end cone, ell = 4
    kind, ell = cones.classify((3, 2))
    assert kind == ("vertex", 0) and ell == 4


def test_ell_matches_direct_minimum_randomized():
    rng = random.Random(3)
    polys = [
        CUSP,
        poly([(0, 3, 1), (1, 2, 1), (3, 1, 1), (4, 0, 1)]),
        poly([(0, 4, 1), (3, 2, -2), (6, 0, 1), (7, 0, 1)]),
    ]
    for f in polys:
        cones = cone_decomposition(newton_faces(f))
        support = sorted(f.c)
        for _ in range(1000):
            p, q = rng.randint(1, 60), rng.randint(1, 60)
            direct = min(p * a + q * b for a, b in support)
            assert cones.ell((p, q)) == direct
