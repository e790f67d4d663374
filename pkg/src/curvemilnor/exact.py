"""Exact scalars and polynomials over the rationals and algebraic towers.

Everything here is immutable after construction and exact: coefficients are
`fractions.Fraction`, extensions are triangular towers Q[z1]/(q1) [z2]/(q2) ...
handled by dynamic evaluation (the D5 principle).  A tower modulus is monic
and square-free but not necessarily irreducible; whenever a computation meets
a zero divisor the tower splits into sibling towers whose moduli multiply to
the parent's, and the computation continues in each branch separately.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import TowerDegreeExceeded

Rational = Fraction

DEFAULT_MAX_TOWER_DEGREE = 64


class SplitRequest(Exception):
    """Internal signal: a zero divisor was met at tower level `level` (1-based).

    `factor` is a monic proper divisor of that level's modulus; the handler is
    whichever computation owns the level.
    """

    def __init__(self, level, factor):
        super().__init__(f"zero divisor at tower level {level}")
        self.level = level
        self.factor = factor


# ---------------------------------------------------------------------------
# towers


class Tower:
    """A triangular extension of Q: ordered levels (name, monic modulus).

    The modulus of level k is a UPoly over the prefix tower of the first k-1
    levels.  The trivial tower (no levels) is Q itself.
    """

    __slots__ = ("levels", "_tails", "_key")

    def __init__(self, levels=()):
        self.levels = tuple(levels)
        self._tails = None
        self._key = None

    def __len__(self):
        return len(self.levels)

    def degree(self):
        d = 1
        for _, q in self.levels:
            d *= q.degree()
        return d

    def prefix(self, k):
        return Tower(self.levels[:k])

    def names(self):
        return tuple(name for name, _ in self.levels)

    def key(self):
        if self._key is None:
            self._key = tuple(
                (name, tuple(sorted((e, tuple(sorted(c.c.items()))) for e, c in q.c.items())))
                for name, q in self.levels
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, Tower) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if not self.levels:
            return "Tower(Q)"
        parts = [f"{name}: {q.render(name)}" for name, q in self.levels]
        return "Tower(Q; " + "; ".join(parts) + ")"

    def tails(self):
        """Per level: the rewrite z_k^{d_k} -> tail_k as a flat exponent dict."""
        if self._tails is None:
            tails = []
            total = len(self.levels)
            for k, (_, q) in enumerate(self.levels):
                d = q.degree()
                tail = {}
                for e, coeff in q.c.items():
                    if e == d:
                        continue
                    for pexps, val in coeff.c.items():
                        key = pexps + (e,) + (0,) * (total - k - 1)
                        tail[key] = tail.get(key, Fraction(0)) - val
                tails.append({k2: v for k2, v in tail.items() if v})
            self._tails = tails
        return self._tails


TRIVIAL_TOWER = Tower()


def _reduce_coeffs(tower, raw):
    """Normal form of a raw exponent dict modulo every tower modulus."""
    levels = tower.levels
    if not levels:
        v = raw.get((), Fraction(0))
        return {(): v} if v else {}
    degs = [q.degree() for _, q in levels]
    tails = tower.tails()
    work = {k: v for k, v in raw.items() if v}
    for k in range(len(levels) - 1, -1, -1):
        d = degs[k]
        while True:
            over = [key for key in work if key[k] >= d]
            if not over:
                break
            for key in over:
                coeff = work.pop(key)
                base = list(key)
                base[k] -= d
                for texps, tval in tails[k].items():
                    nk = tuple(b + t for b, t in zip(base, texps))
                    nv = work.get(nk, Fraction(0)) + coeff * tval
                    if nv:
                        work[nk] = nv
                    else:
                        work.pop(nk, None)
    return work


class TowerScalar:
    """An element of a tower in reduced multivariate normal form."""

    __slots__ = ("tower", "c")

    def __init__(self, tower, coeffs, reduce=True):
        self.tower = tower
        self.c = _reduce_coeffs(tower, coeffs) if reduce else {k: v for k, v in coeffs.items() if v}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_fraction(tower, value):
        value = Fraction(value)
        n = len(tower.levels)
        return TowerScalar(tower, {(0,) * n: value} if value else {}, reduce=False)

    @staticmethod
    def generator(tower, index):
        """The generator of level `index` (1-based) as an element of `tower`."""
        n = len(tower.levels)
        exps = tuple(1 if i == index - 1 else 0 for i in range(n))
        return TowerScalar(tower, {exps: Fraction(1)})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.c

    def is_fraction(self):
        return all(all(e == 0 for e in k) for k in self.c)

    def as_fraction(self):
        if not self.c:
            return Fraction(0)
        (exps, val), = self.c.items()
        if any(exps):
            raise ValueError("scalar is not rational")
        return val

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.c)
        for k, v in other.c.items():
            nv = out.get(k, Fraction(0)) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return TowerScalar(self.tower, out, reduce=False)

    def __neg__(self):
        return TowerScalar(self.tower, {k: -v for k, v in self.c.items()}, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                nk = tuple(a + b for a, b in zip(k1, k2))
                out[nk] = out.get(nk, Fraction(0)) + v1 * v2
        return TowerScalar(self.tower, out)

    def __pow__(self, n):
        result = TowerScalar.from_fraction(self.tower, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, TowerScalar):
            if other.tower is not self.tower and other.tower != self.tower:
                raise ValueError("tower mismatch")
            return other
        return TowerScalar.from_fraction(self.tower, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TowerScalar.from_fraction(self.tower, other)
        return isinstance(other, TowerScalar) and self.tower == other.tower and self.c == other.c

    def __hash__(self):
        return hash((self.tower.key(), tuple(sorted(self.c.items()))))

    def project(self, child_tower):
        """Image of this scalar in a sibling tower after a split."""
        return TowerScalar(child_tower, self.c)

    # -- rendering ---------------------------------------------------------

    def render(self):
        if not self.c:
            return "0"
        names = self.tower.names()
        parts = []
        for exps in sorted(self.c, reverse=True):
            val = self.c[exps]
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(exps) if e
            )
            if mono:
                if val == 1:
                    term = mono
                elif val == -1:
                    term = f"-{mono}"
                else:
                    term = f"{val}*{mono}"
            else:
                term = str(val)
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"TowerScalar({self.render()})"


# ---------------------------------------------------------------------------
# univariate polynomials over a tower


class UPoly:
    """Sparse univariate polynomial with TowerScalar coefficients."""

    __slots__ = ("tower", "c")

    def __init__(self, tower, coeffs):
        self.tower = tower
        self.c = {e: v for e, v in coeffs.items() if not v.is_zero()}

    @staticmethod
    def from_fractions(tower, pairs):
        return UPoly(tower, {e: TowerScalar.from_fraction(tower, v) for e, v in pairs})

    @staticmethod
    def zero(tower):
        return UPoly(tower, {})

    @staticmethod
    def one(tower):
        return UPoly.from_fractions(tower, [(0, 1)])

    def is_zero(self):
        return not self.c

    def degree(self):
        return max(self.c) if self.c else -1

    def lc(self):
        return self.c[self.degree()]

    def constant(self):
        return self.c.get(0, TowerScalar.from_fraction(self.tower, 0))

    def __add__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            nv = out[e] + v if e in out else v
            if nv.is_zero():
                out.pop(e, None)
            else:
                out[e] = nv
        return UPoly(self.tower, out)

    def __neg__(self):
        return UPoly(self.tower, {e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                out[e] = out[e] + v1 * v2 if e in out else v1 * v2
        return UPoly(self.tower, {e: v for e, v in out.items() if not v.is_zero()})

    def scale(self, s):
        return UPoly(self.tower, {e: v * s for e, v in self.c.items()})

    def shift_exp(self, k):
        return UPoly(self.tower, {e + k: v for e, v in self.c.items()})

    def derivative(self):
        return UPoly(self.tower, {e - 1: v * e for e, v in self.c.items() if e})

    def evaluate(self, s):
        """Evaluate at a scalar of this tower or of an extension of it."""
        acc = TowerScalar.from_fraction(s.tower, 0)
        for e, v in self.c.items():
            if len(s.tower.levels) != len(self.tower.levels):
                v = lift_scalar(v, s.tower)
            acc = acc + v * (s ** e)
        return acc

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.tower == other.tower and self.c == other.c

    def __hash__(self):
        return hash((self.tower.key(), tuple(sorted((e, hash(v)) for e, v in self.c.items()))))

    def render(self, var="z"):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            cs = self.c[e].render()
            composite = (" + " in cs) or (" - " in cs)
            if e == 0:
                parts.append(f"({cs})" if composite else cs)
                continue
            ve = var if e == 1 else f"{var}^{e}"
            if cs == "1":
                parts.append(ve)
            elif cs == "-1":
                parts.append(f"-{ve}")
            elif composite:
                parts.append(f"({cs})*{ve}")
            else:
                parts.append(f"{cs}*{ve}")
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"UPoly({self.render()})"


def _divmod_monic(a, b):
    """(quotient, remainder) of a by monic b; exact coefficient arithmetic."""
    db = b.degree()
    if db < 0:
        raise ZeroDivisionError("division by zero polynomial")
    rem = dict(a.c)
    quo = {}
    # plain descending elimination; rem keys change as we go
    while rem:
        da = max(rem)
        if da < db:
            break
        lead = rem[da]
        k = da - db
        quo[k] = quo.get(k, TowerScalar.from_fraction(a.tower, 0)) + lead
        for e, v in b.c.items():
            ne = e + k
            nv = rem.get(ne, TowerScalar.from_fraction(a.tower, 0)) - lead * v
            if nv.is_zero():
                rem.pop(ne, None)
            else:
                rem[ne] = nv
    return UPoly(a.tower, quo), UPoly(a.tower, rem)


def divexact(a, b):
    """a / b for monic-or-unit-leading b, asserting zero remainder."""
    binv = invert_scalar(b.lc())
    bm = b.scale(binv)
    q, r = _divmod_monic(a, bm)
    if not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q.scale(binv)


# ---------------------------------------------------------------------------
# inversion, zero tests, splitting


def invert_scalar(s):
    """Inverse of s in its tower.

    Raises ZeroDivisionError when s is the zero element and SplitRequest when
    s (or an intermediate leading coefficient) is a proper zero divisor.
    """
    if s.is_zero():
        raise ZeroDivisionError("inverting zero")
    tower = s.tower
    k = len(tower.levels)
    if k == 0:
        return TowerScalar.from_fraction(tower, 1 / s.as_fraction())
    prefix = tower.prefix(k - 1)
    b = _as_top_poly(s, prefix)
    q = tower.levels[-1][1]
    r0, r1 = q, b
    t0, t1 = UPoly.zero(prefix), UPoly.one(prefix)
    while not r1.is_zero():
        lcinv = invert_scalar(r1.lc())
        r1m, t1m = r1.scale(lcinv), t1.scale(lcinv)
        qq, r2 = _divmod_monic(r0, r1m)
        t2 = t0 - qq * t1m
        r0, t0 = r1m, t1m
        r1, t1 = r2, t2
    if r0.degree() == 0:
        # r0 is monic constant 1; t0 * s == 1 mod q
        _, t0r = _divmod_monic(t0, q)
        return _from_top_poly(t0r, tower)
    raise SplitRequest(k, r0)


def _as_top_poly(s, prefix):
    """View a scalar as a UPoly in the top generator over the prefix tower."""
    coeffs = {}
    for exps, val in s.c.items():
        e = exps[-1]
        coeffs.setdefault(e, {})[exps[:-1]] = val
    return UPoly(prefix, {e: TowerScalar(prefix, c, reduce=False) for e, c in coeffs.items()})

def _from_top_poly(p, tower):
    out = {}
    for e, coeff in p.c.items():
        for pexps, val in coeff.c.items():
            out[pexps + (e,)] = val
    return TowerScalar(tower, out)


class Zero:
    def __repr__(self):
        return "Zero"


class NonZero:
    def __init__(self, inverse):
        self.inverse = inverse

    def __repr__(self):
        return "NonZero"


class Split:
    def __init__(self, branches):
        self.branches = branches  # list of (Tower, projected TowerScalar)

    def __repr__(self):
        return f"Split({len(self.branches)} branches)"


def split_tower(tower, level, factor):
    """Split `tower` at `level` (1-based) along monic factor | modulus.

    Returns [(child_tower, project)] with project mapping scalars of the
    parent into the child; the two child moduli multiply to the parent's.
    """
    name, q = tower.levels[level - 1]
    g = factor
    h, r = _divmod_monic(q, g)
    if not r.is_zero():
        raise ArithmeticError("split factor does not divide the modulus")
    children = []
    for fm in (g, h):
        base = Tower(tower.levels[: level - 1] + ((name, fm),))
        for nm, mod in tower.levels[level:]:
            prefix = base
            newmod = UPoly(prefix, {
                e: TowerScalar(prefix, coeff.c) for e, coeff in mod.c.items()
            })
            base = Tower(base.levels + ((nm, newmod),))
        children.append(base)

    def make_proj(child):
        return lambda s: s.project(child)

    return [(child, make_proj(child)) for child in children]


def zero_test_split(s):
    """Decide whether s is zero, invertible, or forces a tower split."""
    if s.is_zero():
        return Zero()
    try:
        return NonZero(invert_scalar(s))
    except SplitRequest as sr:
        branches = split_tower(s.tower, sr.level, sr.factor)
        return Split([(t, proj(s)) for t, proj in branches])


# ---------------------------------------------------------------------------
# gcd, square-free decomposition, rational roots


def upoly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm; raises SplitRequest on zero divisors."""
    r0, r1 = a, b
    while not r1.is_zero():
        lcinv = invert_scalar(r1.lc())
        r1m = r1.scale(lcinv)
        _, r2 = _divmod_monic(r0, r1m)
        r0, r1 = r1m, r2
    if r0.is_zero():
        return r0
    return r0.scale(invert_scalar(r0.lc()))


def squarefree_decompose(g):
    """Yun decomposition g = unit * prod G_k^k with monic square-free G_k.

    Returns the list [(G_k, k)] for the layers of positive degree; the unit is
    the leading coefficient of g.  SplitRequest propagates from zero tests.
    """
    if g.is_zero():
        raise ValueError("square-free decomposition of zero")
    gm = g.scale(invert_scalar(g.lc()))
    if gm.degree() == 0:
        return []
    d = gm.derivative()
    a0 = upoly_gcd(gm, d)
    b = divexact(gm, a0)
    c = divexact(d, a0)
    out = []
    k = 1
    while b.degree() > 0:
        dd = c - b.derivative()
        a = upoly_gcd(b, dd)
        if a.degree() > 0:
            out.append((a, k))
        b = divexact(b, a)
        c = divexact(dd, a)
        k += 1
    return out


def _int_divisors(n):
    n = abs(n)
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)


def rational_roots(g):
    """All rational roots of g (over the trivial tower) with multiplicities.

    Returns (roots, cofactor) where roots is a sorted list of (Fraction, mult)
    and cofactor is the rootless remaining factor.
    """
    if len(g.tower.levels) != 0:
        raise ValueError("rational_roots requires rational coefficients")
    if g.is_zero():
        raise ValueError("rational_roots of zero")
    roots = []
    work = g
    # root at zero
    v0 = min(work.c) if work.c else 0
    if v0 > 0:
        roots.append((Fraction(0), v0))
        work = UPoly(work.tower, {e - v0: c for e, c in work.c.items()})
    if work.degree() == 0:
        return roots, work
    denlcm = 1
    for coeff in work.c.values():
        f = coeff.as_fraction()
        denlcm = denlcm * f.denominator // int_gcd(denlcm, f.denominator)
    ints = {e: int(c.as_fraction() * denlcm) for e, c in work.c.items()}
    a0 = ints.get(min(ints), 0)
    ad = ints[max(ints)]
    candidates = set()
    for p in _int_divisors(a0):
        for q in _int_divisors(ad):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for r in sorted(candidates):
        s = TowerScalar.from_fraction(work.tower, r)
        if not work.evaluate(s).is_zero():
            continue
        mult = 0
        lin = UPoly.from_fractions(work.tower, [(1, 1), (0, -r)])
        while True:
            q, rem = _divmod_monic(work, lin)
            if not rem.is_zero():
                break
            work = q
            mult += 1
        roots.append((r, mult))
    roots.sort(key=lambda t: t[0])
    return roots, work


def adjoin_root(tower, q, max_degree=DEFAULT_MAX_TOWER_DEGREE):
    """Extend `tower` by a root of monic square-free q (degree >= 2).

    Degree-1 q short-circuits without extension.  Returns (tower', root).
    """
    qm = q.scale(invert_scalar(q.lc()))
    d = qm.degree()
    if d < 1:
        raise ValueError("cannot adjoin a root of a constant")
    if d == 1:
        return tower, -qm.constant()
    if tower.degree() * d > max_degree:
        raise TowerDegreeExceeded(
            f"tower degree {tower.degree()} * {d} exceeds bound {max_degree}")
    name = f"z{len(tower.levels) + 1}"
    new = Tower(tower.levels + ((name, qm),))
    gen = TowerScalar.generator(new, len(new.levels))
    return new, gen


def lift_scalar(s, bigger):
    """Re-interpret a scalar of a prefix tower inside an extension `bigger`."""
    n = len(bigger.levels) - len(s.tower.levels)
    if n < 0:
        raise ValueError("not an extension")
    return TowerScalar(bigger, {exps + (0,) * n: v for exps, v in s.c.items()}, reduce=False)


def lift_upoly(p, bigger):
    return UPoly(bigger, {e: lift_scalar(v, bigger) for e, v in p.c.items()})


# ---------------------------------------------------------------------------
# bivariate polynomials


class BiPoly:
    """Sparse bivariate polynomial over a tower; keys are (u_exp, v_exp)."""

    __slots__ = ("tower", "c")

    def __init__(self, tower, coeffs):
        self.tower = tower
        self.c = {k: v for k, v in coeffs.items() if not v.is_zero()}

    @staticmethod
    def from_fractions(tower, triples):
        """triples: iterable of (u_exp, v_exp, value)."""
        out = {}
        for eu, ev, val in triples:
            key = (eu, ev)
            cur = out.get(key, Fraction(0)) + Fraction(val)
            out[key] = cur
        return BiPoly(tower, {
            k: TowerScalar.from_fraction(tower, v) for k, v in out.items() if v
        })

    @staticmethod
    def zero(tower):
        return BiPoly(tower, {})

    def is_zero(self):
        return not self.c

    def support(self):
        return set(self.c)

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            nv = out[k] + v if k in out else v
            if nv.is_zero():
                out.pop(k, None)
            else:
                out[k] = nv
        return BiPoly(self.tower, out)

    def __neg__(self):
        return BiPoly(self.tower, {k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for (a1, b1), v1 in self.c.items():
            for (a2, b2), v2 in other.c.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out[k] + v1 * v2 if k in out else v1 * v2
        return BiPoly(self.tower, {k: v for k, v in out.items() if not v.is_zero()})

    def __pow__(self, n):
        result = BiPoly.from_fractions(self.tower, [(0, 0, 1)])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, s):
        return BiPoly(self.tower, {k: v * s for k, v in self.c.items()})

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.tower == other.tower and self.c == other.c

    def min_u(self):
        return min(k[0] for k in self.c)

    def min_v(self):
        return min(k[1] for k in self.c)

    def monomial_map(self, a, ap, b, bp):
        """Substitute u -> u^a v^ap, v -> u^b v^bp (exponent-linear, exact)."""
        return BiPoly(self.tower, {
            (a * eu + b * ev, ap * eu + bp * ev): val
            for (eu, ev), val in self.c.items()
        })

    def divide_u_power(self, m):
        if any(eu < m for (eu, _) in self.c):
            raise ArithmeticError("u-power division not exact")
        return BiPoly(self.tower, {(eu - m, ev): v for (eu, ev), v in self.c.items()})

    def eval_u0(self):
        """The univariate polynomial f(0, v)."""
        return UPoly(self.tower, {ev: v for (eu, ev), v in self.c.items() if eu == 0})

    def translate_v(self, rho):
        """f(u, v + rho) by exact binomial expansion."""
        out = {}
        powers = {0: TowerScalar.from_fraction(self.tower, 1)}

        def rho_pow(k):
            if k not in powers:
                powers[k] = rho_pow(k - 1) * rho
            return powers[k]

        for (eu, ev), val in self.c.items():
            binom = 1
            for i in range(ev + 1):
                term = val * rho_pow(ev - i) * binom
                key = (eu, i)
                out[key] = out[key] + term if key in out else term
                binom = binom * (ev - i) // (i + 1)
        return BiPoly(self.tower, out)

    def subst_v_plus_u_power(self, s):
        """f(u, v + u^s): shear re-establishing a nonzero-root normal form."""
        out = {}
        for (eu, ev), val in self.c.items():
            binom = 1
            for i in range(ev + 1):
                key = (eu + s * (ev - i), i)
                term = val * binom
                out[key] = out[key] + term if key in out else term
                binom = binom * (ev - i) // (i + 1)
        return BiPoly(self.tower, out)

    def subst_u_plus_v_power(self, s):
        out = {}
        for (eu, ev), val in self.c.items():
            binom = 1
            for i in range(eu + 1):
                key = (i, ev + s * (eu - i))
                term = val * binom
                out[key] = out[key] + term if key in out else term
                binom = binom * (eu - i) // (i + 1)
        return BiPoly(self.tower, out)

    def swap_vars(self):
        return BiPoly(self.tower, {(ev, eu): v for (eu, ev), v in self.c.items()})

    def project(self, child_tower):
        return BiPoly(child_tower, {k: v.project(child_tower) for k, v in self.c.items()})

    def lift(self, bigger):
        return BiPoly(bigger, {k: lift_scalar(v, bigger) for k, v in self.c.items()})

    def total_degree(self):
        return max(eu + ev for eu, ev in self.c) if self.c else -1

    def render(self, u="x", v="y"):
        if not self.c:
            return "0"
        parts = []
        for (eu, ev) in sorted(self.c, key=lambda k: (-(k[0] + k[1]), -k[0])):
            cs = self.c[(eu, ev)].render()
            composite = (" + " in cs) or (" - " in cs)
            mono = "*".join(
                ([] if not eu else [u if eu == 1 else f"{u}^{eu}"])
                + ([] if not ev else [v if ev == 1 else f"{v}^{ev}"])
            )
            if not mono:
                parts.append(f"({cs})" if composite else cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            elif composite:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"BiPoly({self.render()})"
