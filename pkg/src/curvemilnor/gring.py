"""Formal elements of the equivariant Grothendieck ring and the assemblies
of the motivic Milnor fiber from the resolution graph.

A MotClass is an integer-linear combination of L-power-weighted generators
One, Mu(n), Monomial(eu, ev) and face classes (affine or torus ambient).
Only the Z[L, L^{-1}]-module structure plus the normalization rewrites are
implemented; no assembly needs general products of generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, order=True)
class GenOne:
    def render(self):
        return "1"


@dataclass(frozen=True, order=True)
class GenMu:
    n: int

    def render(self):
        return f"mu_{self.n}"


@dataclass(frozen=True, order=True)
class GenMonomial:
    """The torus class {u^eu v^ev = 1} (any nonzero scalar on the right
    gives the same class; rewritten by normalize to (L-1) mu_gcd)."""

    eu: int
    ev: int

    def render(self):
        return f"[u^{self.eu} v^{self.ev} = 1]"


@dataclass(frozen=True, order=True)
class GenFace:
    """The fiber of a face function: u^eu v^ev prod (v^a + xi_j u^b)^{A_j} = 1.

    `affine` distinguishes the ambient (A^2 for the main-theorem classes,
    the torus for the per-bamboo closed forms).  `clusters` holds one entry
    (defining polynomial, tower, A, delta) per conjugacy packet; `m` is the
    weighted degree, which also fixes the mu_m action (xi^a u, xi^b v).
    """

    affine: bool
    a: int
    b: int
    eu: int
    ev: int
    m: int
    clusters: tuple  # ((defining_str, tower_str, A, delta), ...)

    @property
    def r(self):
        return sum(delta for (_, _, _, delta) in self.clusters)

    @property
    def a_total(self):
        return sum(a * delta for (_, _, a, delta) in self.clusters)

    def render(self):
        amb = "A^2" if self.affine else "T^2"
        prod = " ".join(
            f"(v^{self.a}+xi u^{self.b})^{A}[{defi}; deg {delta}]"
            for (defi, _, A, delta) in self.clusters
        )
        mono = ""
        if self.eu:
            mono += f"u^{self.eu} "
        if self.ev:
            mono += f"v^{self.ev} "
        return f"[{mono}{prod} = 1 in {amb}; m={self.m}]"


_RANK = {GenOne: 0, GenMu: 1, GenMonomial: 2, GenFace: 3}


def _gen_key(gen):
    return (_RANK[type(gen)],) + (
        () if isinstance(gen, GenOne) else
        (gen.n,) if isinstance(gen, GenMu) else
        (gen.eu, gen.ev) if isinstance(gen, GenMonomial) else
        (gen.affine, gen.a, gen.b, gen.eu, gen.ev, gen.m, gen.clusters)
    )


class MotClass:
    """Immutable formal sum of (coefficient, L-exponent, generator) terms."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        for coeff, lexp, gen in terms:
            if coeff:
                key = (lexp, gen)
                acc[key] = acc.get(key, 0) + coeff
        self.terms = tuple(
            (c, lexp, gen)
            for (lexp, gen), c in sorted(acc.items(), key=lambda kv: (_gen_key(kv[0][1]), kv[0][0]))
            if c
        )

    @staticmethod
    def zero():
        return MotClass()

    @staticmethod
    def of(gen, coeff=1, lexp=0):
        return MotClass([(coeff, lexp, gen)])

    def __add__(self, other):
        return MotClass(self.terms + other.terms)

    def __sub__(self, other):
        return MotClass(self.terms + tuple((-c, e, g) for c, e, g in other.terms))

    def __neg__(self):
        return MotClass(tuple((-c, e, g) for c, e, g in self.terms))

    def scale(self, k):
        return MotClass(tuple((k * c, e, g) for c, e, g in self.terms))

    def mul_L(self, e=1):
        return MotClass(tuple((c, le + e, g) for c, le, g in self.terms))

    def mul_L_minus_1(self):
        return self.mul_L() - self

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MotClass) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for c, e, g in self.terms:
            lpart = "" if e == 0 else (" L" if e == 1 else f" L^{e}")
            head = f"{c:+d}"
            parts.append(f"{head}{lpart} {g.render()}")
        return " ".join(parts)

    def __repr__(self):
        return f"MotClass({self.render()})"

    def to_json(self):
        out = []
        for c, e, g in self.terms:
            rec = {"coeff": c, "L": e, "kind": type(g).__name__[3:].lower()}
            if isinstance(g, GenMu):
                rec["n"] = g.n
            elif isinstance(g, GenMonomial):
                rec["eu"], rec["ev"] = g.eu, g.ev
            elif isinstance(g, GenFace):
                rec.update({
                    "affine": g.affine, "a": g.a, "b": g.b, "eu": g.eu,
                    "ev": g.ev, "m": g.m,
                    "clusters": [
                        {"defining": d, "tower": t, "A": A, "delta": delta}
                        for d, t, A, delta in g.clusters
                    ],
                })
            out.append(rec)
        return out


def _mu(n):
    return GenMu(n) if n >= 2 else GenOne()


def _cluster_keys(fv):
    return tuple(
        (c.defining_str(), c.tower_str(), c.a_mult, c.delta) for c in fv.clusters
    )


def _face_gen(bamboo, i, affine):
    fv = bamboo.faces[i - 1]
    assert fv.m == fv.a * fv.eu + fv.b * fv.ev + fv.a * fv.b * fv.a_total
    return GenFace(affine, fv.a, fv.b, fv.eu, fv.ev, fv.m, _cluster_keys(fv))


def _vertex_gen(bamboo, i):
    """The monomial class of the vertex P_{i,i+1}, 1 <= i < m_B."""
    faces = bamboo.faces
    eu = bamboo.m_pred + sum(f.b * f.a_total for f in faces[:i])
    ev = sum(f.a * f.a_total for f in faces[i:])
    return GenMonomial(eu, ev)


def _cluster_mu_terms(bamboo):
    """-(L-1) sum over geometric roots of [mu_A]."""
    out = MotClass.zero()
    for fv in bamboo.faces:
        for cl in fv.clusters:
            out = out - MotClass.of(_mu(cl.a_mult), cl.delta).mul_L_minus_1()
    return out


def assemble_main1(graph):
    """The main combinatorial expression of the motivic Milnor fiber:
    sum over bamboos of (affine face classes - vertex classes
    - (L-1) sum [mu_A]); pure powers short-circuit to [mu_A]."""
    if graph.monomial is not None:
        return MotClass.of(_mu(graph.monomial[1]))
    total = MotClass.zero()
    for b in graph.ordered():
        for i in range(1, len(b.faces) + 1):
            total = total + MotClass.of(_face_gen(b, i, affine=True))
        for i in range(1, len(b.faces)):
            total = total - MotClass.of(_vertex_gen(b, i))
        total = total + _cluster_mu_terms(b)
    return total


def assemble_prop33(bamboo):
    """Per-bamboo closed form with torus face classes and end mu-terms."""
    total = MotClass.zero()
    m_b = len(bamboo.faces)
    for i in range(1, m_b + 1):
        total = total + MotClass.of(_face_gen(bamboo, i, affine=False))
    for i in range(1, m_b):
        total = total - MotClass.of(_vertex_gen(bamboo, i))
    total = total + _cluster_mu_terms(bamboo)
    if bamboo.floor == 1:
        total = total + MotClass.of(_mu(bamboo.q_left_m)) + MotClass.of(_mu(bamboo.q_right_m))
    else:
        g = gcd(bamboo.m_pred, bamboo.sum_aA)
        total = total - MotClass.of(_mu(g)).mul_L_minus_1()
        total = total + MotClass.of(_mu(bamboo.q_right_m))
    return total


def assemble_prop32(graph):
    """Sum of the per-bamboo closed forms plus the connection-edge terms."""
    if graph.monomial is not None:
        return MotClass.of(_mu(graph.monomial[1]))
    total = MotClass.zero()
    for b in graph.ordered():
        total = total + assemble_prop33(b)
        if b.floor > 1:
            g = gcd(b.m_pred, b.sum_aA)
            total = total + MotClass.of(_mu(g)).mul_L_minus_1()
    return total


def decompose_affine(gen):
    """[affine face class] = [torus part] + axis mu-classes.

    The u = 0 axis contributes exactly when the u-monomial exponent vanishes
    (first face of the first floor), giving mu of the pure v-degree there;
    symmetrically for v = 0 on the last face.
    """
    if not (isinstance(gen, GenFace) and gen.affine):
        raise ValueError("decompose_affine expects an affine face generator")
    torus = GenFace(False, gen.a, gen.b, gen.eu, gen.ev, gen.m, gen.clusters)
    out = MotClass.of(torus)
    if gen.eu == 0:
        out = out + MotClass.of(_mu(gen.ev + gen.a * gen.a_total))
    if gen.ev == 0:
        out = out + MotClass.of(_mu(gen.eu + gen.b * gen.a_total))
    return out


def decompose_all_affine(c):
    """Replace every affine face generator via decompose_affine."""
    total = MotClass.zero()
    for coeff, lexp, gen in c.terms:
        if isinstance(gen, GenFace) and gen.affine:
            total = total + decompose_affine(gen).scale(coeff).mul_L(lexp)
        else:
            total = total + MotClass.of(gen, coeff, lexp)
    return total


def normalize(c):
    """Canonical form: monomial classes become (L-1) mu_gcd, mu_1 becomes 1,
    like terms merge under the canonical generator order."""
    total = MotClass.zero()
    for coeff, lexp, gen in c.terms:
        if isinstance(gen, GenMonomial):
            g = gcd(gen.eu, gen.ev)
            total = total + MotClass.of(_mu(g), coeff, lexp).mul_L_minus_1()
        elif isinstance(gen, GenMu) and gen.n == 1:
            total = total + MotClass.of(GenOne(), coeff, lexp)
        else:
            total = total + MotClass.of(gen, coeff, lexp)
    return total
