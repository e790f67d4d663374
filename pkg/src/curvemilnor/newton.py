"""Newton polygon geometry: faces, fan completion, cone decomposition.

Conventions: a weight vector P = (a, b) pairs with a monomial u^alpha v^beta
as a*alpha + b*beta, so each compact face with primitive normal (a, b) carries
a quasi-homogeneous face function of the shape
c * u^E v^F * prod_j (v^a + xi_j u^b)^{A_j}.  Faces are ordered from the
(1,0) side to the (0,1) side, so det(P_i, P_{i+1}) >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotVanishing
from .exact import BiPoly, invert_scalar


@dataclass(frozen=True, order=True)
class WeightVector:
    a: int
    b: int

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0 or gcd(self.a, self.b) != 1:
            raise ValueError(f"weight vector ({self.a},{self.b}) is not primitive positive")

    def pair(self, point):
        return self.a * point[0] + self.b * point[1]

    def __repr__(self):
        return f"({self.a},{self.b})"


def det(p, q):
    """det((a1,b1),(a2,b2)) = a1*b2 - a2*b1; positive when p is steeper than q."""
    return p.a * q.b - q.a * p.b


@dataclass(frozen=True)
class Face:
    normal: WeightVector
    left: tuple          # endpoint with the smaller u-exponent
    right: tuple
    face_function: BiPoly
    m: int               # weighted degree of the face under its own normal


def certify_support(f):
    """Invertibility-test every coefficient; zero divisors raise SplitRequest.

    Stored coefficients are nonzero normal forms, but over a product ring a
    nonzero normal form may still vanish on one branch; geometry decisions
    must not proceed until the branch ambiguity is split away.
    """
    for key in sorted(f.c):
        invert_scalar(f.c[key])


def newton_faces(f):
    """Ordered compact faces of the Newton polygon of f.

    Requires f(0,0) = 0 and support touching both axes (no pure-axis factor;
    the resolution driver enforces that by shear preprocessing).
    """
    if f.is_zero():
        raise ValueError("Newton polygon of zero")
    if (0, 0) in f.c:
        raise NotVanishing("polynomial does not vanish at the origin")
    certify_support(f)
    support = sorted(f.c)
    axis_v = [p for p in support if p[0] == 0]
    axis_u = [p for p in support if p[1] == 0]
    if not axis_v or not axis_u:
        raise ValueError("support must touch both axes (apply shear preprocessing)")
    # lower hull from the v-axis endpoint to the u-axis endpoint
    pts = sorted(support)
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (p[1] - y1) - (p[0] - x1) * (y2 - y1)
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    # trim the chain at the u-axis endpoint
    vertices = []
    for p in hull:
        vertices.append(p)
        if p[1] == 0:
            break
    faces = []
    for (x1, y1), (x2, y2) in zip(vertices, vertices[1:]):
        da, db = y1 - y2, x2 - x1
        g = gcd(da, db)
        normal = WeightVector(da // g, db // g)
        m = normal.pair((x1, y1))
        mono = {k: v for k, v in f.c.items() if normal.pair(k) == m}
        faces.append(Face(normal, (x1, y1), (x2, y2), BiPoly(f.tower, mono), m))
    for f1, f2 in zip(faces, faces[1:]):
        assert det(f1.normal, f2.normal) >= 1
    return faces


def _insert_chain(v, w):
    """Rays strictly between v and w making all consecutive determinants 1."""
    out = []
    while det(v, w) > 1:
        # particular solution of det(v, u) = v.a*u2 - u1*v.b = 1
        g, x, y = _ext_gcd(v.a, v.b)
        # v.a * u2 - v.b * u1 = 1 with u = (u1, u2) = (-y, x) since a*x + b*y = 1
        u1, u2 = -y, x
        d0 = u1 * w.b - w.a * u2
        dvw = det(v, w)
        # shift by t*v so that det(u, w) = d0 + t*dvw lands in [1, dvw]
        t = -((d0 - 1) // dvw)
        u = WeightVector(u1 + t * v.a, u2 + t * v.b)
        assert det(v, u) == 1 and 1 <= det(u, w) < dvw
        out.append(u)
        v = u
    return out


def _ext_gcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def unimodular_complete(rays, force_end_separation=True):
    """Minimal regular refinement of [(1,0), rays..., (0,1)], interior part.

    With `force_end_separation` the first and last interior rays are forced to
    differ from the first and last input rays (inserting (a+1,1) on the left
    and (1,b+1) on the right when the input is already axis-adjacent), so the
    bamboo always has distinct Q^left / Q^right end vertices.
    """
    axis_l = _Axis(1, 0)
    axis_r = _Axis(0, 1)
    chain = [axis_l] + list(rays) + [axis_r]
    out = []
    for v, w in zip(chain, chain[1:]):
        out.extend(_insert_chain(v, w))
        if w is not axis_r:
            out.append(w)
    if force_end_separation and rays:
        first, last = rays[0], rays[-1]
        if out[0] == first:
            out.insert(0, WeightVector(first.a + 1, 1))
        if out[-1] == last:
            out.append(WeightVector(1, last.b + 1))
    for v, w in zip([axis_l] + out + [axis_r], out + [axis_r]):
        assert det(v, w) == 1
    return out


class _Axis:
    """Axis pseudo-rays (1,0) and (0,1) used only inside fan completion."""

    def __init__(self, a, b):
        self.a = a
        self.b = b

    def __eq__(self, other):
        return isinstance(other, (_Axis, WeightVector)) and (self.a, self.b) == (other.a, other.b)


@dataclass(frozen=True)
class ConeDecomposition:
    """Open-cone classification of positive weights for one polygon.

    Cones: ('face', i) for the ray through face i's normal (1-based), and
    ('vertex', i) for the open cone between face i and face i+1, with i = 0
    the left end cone toward (1,0) and i = m the right end cone toward (0,1).
    """

    faces: tuple

    def vertex_point(self, i):
        """Lattice point of vertex P_{i,i+1}; i = 0 is the far left endpoint."""
        if i == 0:
            return self.faces[0].left
        return self.faces[i - 1].right

    def classify(self, omega):
        """((kind, index), ell(omega)) for a positive integer weight omega."""
        p, q = omega
        if p <= 0 or q <= 0:
            raise ValueError("weights must be positive")
        for i, face in enumerate(self.faces, start=1):
            n = face.normal
            d = n.b * p - n.a * q  # det(omega, normal): positive iff omega steeper
            if d == 0:
                return ("face", i), p * face.left[0] + q * face.left[1]
            if d > 0:
                pt = self.vertex_point(i - 1)
                return ("vertex", i - 1), p * pt[0] + q * pt[1]
        m = len(self.faces)
        pt = self.vertex_point(m)
        return ("vertex", m), p * pt[0] + q * pt[1]

    def ell(self, omega):
        return self.classify(omega)[1]

    def gamma_function(self, omega):
        """The face function of the minimizing face/vertex selected by omega."""
        kind, val = self.classify(omega)
        if kind[0] == "face":
            return kind, val, self.faces[kind[1] - 1].face_function
        pt = self.vertex_point(kind[1])
        face = self.faces[max(kind[1] - 1, 0)]
        coeff = face.face_function.c[pt]
        return kind, val, BiPoly(face.face_function.tower, {pt: coeff})


def cone_decomposition(faces):
    return ConeDecomposition(tuple(faces))
