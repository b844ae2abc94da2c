"""Monomial-ideal arithmetic over a fixed affine semigroup.

Ideals are S-stable up-sets held by their minimal generators.  Every derived
ideal (colon, intersection, closure, Frobenius candidate) is first modelled as
an abstract up-set exposing two exact oracles

    member(v)                  -- point membership
    line_first(v0, axis, step) -- least t >= 0 with v0 + t*step*g_axis inside

and then materialized by ``extract_min_gens``.  Along any line parallel to an
extreme ray, membership in an up-set is monotone, so the up-set restricted to
the line is a final segment described by one integer.  Minimal generators are
exactly the points that start their column and their row, which turns
extraction into a bounded sweep of line-first queries.
"""

from __future__ import annotations

import itertools
import threading

from .errors import (
    DimensionMismatchError,
    NotMPrimaryError,
    RingMismatchError,
    UncertifiedError,
)
from .lattice import ExponentVector, vadd, vdot, vscale, vsub


def antichain_reduce(ring, vectors):
    """Minimal elements of the up-set generated by ``vectors`` (S-divisibility)."""
    vecs = sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(v), v))
    kept = []
    for v in vecs:
        dominated = False
        for u in kept:
            d = vsub(v, u)
            if all(c >= 0 for c in d) and ring.member(d):
                dominated = True
                break
        if not dominated:
            kept.append(v)
    return tuple(ExponentVector(v) for v in sorted(kept))


# ---------------------------------------------------------------------------
# abstract up-sets

class _IdealUp:
    """Up-set generated by explicit monomial generators."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = [tuple(g) for g in gens]
        self._eng = ring._engine if ring.kind == "grid2" else None

    def member(self, v):
        eng = self._eng
        if eng is not None:
            x, y = v
            for ux, uy in self.gens:
                dx = x - ux
                dy = y - uy
                if dx >= 0 and dy >= 0 and eng.member((dx, dy)):
                    return True
            return False
        for u in self.gens:
            d = vsub(v, u)
            if all(c >= 0 for c in d) and self.ring.member(d):
                return True
        return False

    def line_first(self, v0, axis, step=1):
        eng = self._eng
        best = None
        if eng is not None:
            x, y = v0
            for ux, uy in self.gens:
                t = eng.first_shift((x - ux, y - uy), axis, step)
                if t is not None and (best is None or t < best):
                    if t == 0:
                        return 0
                    best = t
            return best
        for u in self.gens:
            t = self.ring._first_shift(vsub(v0, u), axis, step)
            if t is not None and (best is None or t < best):
                best = t
        return best

    def seed(self):
        return self.gens[0]


class _ColonUp:
    """(I : f) = {s in S : s + f in I}; the S-restriction is essential."""

    def __init__(self, ideal_up, f):
        self.ring = ideal_up.ring
        self.base = ideal_up
        self.f = tuple(f)

    def member(self, v):
        if any(c < 0 for c in v) or not self.ring.member(v):
            return False
        return self.base.member(vadd(v, self.f))

    def line_first(self, v0, axis, step=1):
        ts = self.ring._first_shift(v0, axis, step)
        if ts is None:
            return None
        ti = self.base.line_first(vadd(v0, self.f), axis, step)
        if ti is None:
            return None
        return max(ts, ti)

    def seed(self):
        return self.base.seed()


class _MeetUp:
    """Intersection of up-sets."""

    def __init__(self, parts):
        self.parts = list(parts)
        self.ring = self.parts[0].ring

    def member(self, v):
        return all(p.member(v) for p in self.parts)

    def line_first(self, v0, axis, step=1):
        worst = 0
        for p in self.parts:
            t = p.line_first(v0, axis, step)
            if t is None:
                return None
            worst = max(worst, t)
        return worst

    def seed(self):
        s = self.parts[0].seed()
        for p in self.parts[1:]:
            s = vadd(s, p.seed())
        return s


class _PolyUp:
    """Lattice points of S inside a scaled rational polyhedron."""

    def __init__(self, ring, polyhedron, scale, seed_point):
        self.ring = ring
        self.poly = polyhedron
        self.nscale = scale
        self._seed = tuple(seed_point)

    def member(self, v):
        if any(c < 0 for c in v):
            return False
        return self.poly.contains(v, self.nscale) and self.ring.member(v)

    def line_first(self, v0, axis, step=1):
        g = self.ring._axis_generator(axis)
        lo = 0
        for n, h in self.poly.halfspaces:
            coeff = step * vdot(n, g)
            val = vdot(n, v0)
            need = self.nscale * h
            if coeff == 0:
                if val < need:
                    return None
            else:
                lo = max(lo, -((val - need) // coeff))
        t = self.ring._first_shift(vadd(v0, vscale(lo * step, g)), axis, step)
        return None if t is None else lo + t

    def seed(self):
        return self._seed


class _FrobUp:
    """Points s with c + q*s inside the q-th Frobenius power, for every listed q."""

    def __init__(self, ring, base_gens, scaled, c):
        # scaled: list of (q, _IdealUp of the q-th bracket power)
        self.ring = ring
        self.base_gens = [tuple(g) for g in base_gens]
        self.scaled = scaled
        self.c = tuple(c)

    def member(self, v):
        if any(c < 0 for c in v) or not self.ring.member(v):
            return False
        return all(up.member(vadd(self.c, vscale(q, v))) for q, up in self.scaled)

    def line_first(self, v0, axis, step=1):
        worst = self.ring._first_shift(v0, axis, step)
        if worst is None:
            return None
        for q, up in self.scaled:
            t = up.line_first(vadd(self.c, vscale(q, v0)), axis, q * step)
            if t is None:
                return None
            worst = max(worst, t)
        return worst

    def seed(self):
        # any generator u of I satisfies c + q*u in I^[q] for every q
        return min(self.base_gens)


# ---------------------------------------------------------------------------
# extraction and complements

def extract_min_gens(ring, upset):
    """Exact minimal generators of an up-set of S."""
    kind = ring.kind
    if kind == "grid2":
        cands = _extract_grid2(ring, upset)
    elif kind == "num1":
        cands = _extract_num1(ring, upset)
    else:
        cands = _extract_free3(ring, upset)
    out = []
    for v in sorted(set(cands)):
        minimal = True
        for g in ring.generators:
            if upset.member(vsub(v, g)):
                minimal = False
                break
        if minimal:
            out.append(ExponentVector(v))
    return tuple(sorted(out))


def _extract_grid2(ring, upset):
    eng = ring._engine
    seed = tuple(upset.seed())
    wit = eng._witnesses()
    wvec = {}
    for key, (b1, b2) in wit.items():
        wvec[key] = vadd(eng.box[key], vadd(vscale(b1, eng.g1), vscale(b2, eng.g2)))
    skey, _, _ = eng._decompose(seed)
    cands = []
    for key in sorted(eng.box):
        dk = ((key[0] - skey[0]) % eng.D1, (key[1] - skey[1]) % eng.D2)
        seed_k = vadd(seed, wvec[dk])
        _, s1, s2 = eng._decompose(seed_k)
        r = eng.box[key]

        def vert(mu):
            return upset.line_first(vadd(r, vscale(mu, eng.g1)), 1, 1)

        def horiz(nu):
            return upset.line_first(vadd(r, vscale(nu, eng.g2)), 0, 1)

        mu_star = None
        for mu in range(s1 + 1):
            if vert(mu) is not None:
                mu_star = mu
                break
        if mu_star is None:
            raise UncertifiedError("up-set column scan failed to certify a seed column")
        nu_star = None
        for nu in range(s2 + 1):
            if horiz(nu) is not None:
                nu_star = nu
                break
        mu_max = horiz(nu_star)
        for mu in range(mu_star, mu_max + 1):
            t = vert(mu)
            cands.append(vadd(r, vadd(vscale(mu, eng.g1), vscale(t, eng.g2))))
    return cands


def _extract_num1(ring, upset):
    eng = ring._engine
    seed = tuple(upset.seed())[0]
    t0 = None
    for x in range(0, seed + 1, eng.step):
        if upset.member((x,)):
            t0 = x
            break
    if t0 is None:
        raise UncertifiedError("up-set scan failed to reach its seed")
    window = t0 + eng.conductor + eng.amin
    return [(x,) for x in range(t0, window + 1, eng.step) if upset.member((x,))]


def _extract_free3(ring, upset):
    bounds = []
    for axis in range(3):
        e = tuple(1 if i == axis else 0 for i in range(3))
        k = 0
        while not upset.member(vscale(k, e)):
            k += 1
            if k > 4096:
                raise UncertifiedError("axis scan exceeded certified range (not m-primary?)")
        bounds.append(k)
    cands = []
    for v in itertools.product(*(range(b + 1) for b in bounds)):
        if upset.member(v):
            cands.append(v)
    return cands


def _complement_grid2(ring, up, ray_powers):
    eng = ring._engine
    k1, k2 = ray_powers
    points = []
    for key in sorted(eng.box):
        r = eng.box[key]
        b1, b2 = eng._witnesses()[key]
        cap1, cap2 = k1 + b1, k2 + b2
        for mu in range(cap1):
            v0 = vadd(r, vscale(mu, eng.g1))
            ts = ring._first_shift(v0, 1, 1)
            if ts is None:
                continue
            ti = up.line_first(v0, 1, 1)
            if ti is None or ti > ts + k2:
                raise UncertifiedError("complement line bound violated (internal)")
            for t in range(ts, ti):
                points.append(vadd(v0, vscale(t, eng.g2)))
        for nu in range(cap2):
            v0 = vadd(r, vscale(nu, eng.g2))
            ss = ring._first_shift(v0, 0, 1)
            if ss is None:
                continue
            si = up.line_first(v0, 0, 1)
            if si is None:
                raise UncertifiedError("complement row bound violated (internal)")
            for s in range(max(ss, cap1), si):
                points.append(vadd(v0, vscale(s, eng.g1)))
    return sorted(set(points))


class MonomialIdeal:
    """An S-stable up-set of exponents, held by minimal generators."""

    def __init__(self, ring, generators, _reduced=False):
        self.ring = ring
        gens = [ExponentVector(g) for g in generators]
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in gens:
            if g.dim != ring.dim:
                raise DimensionMismatchError("generator %r has wrong length" % (tuple(g),))
            if any(g) and not ring.member(g):
                raise ValueError("generator %r is not in the semigroup" % (tuple(g),))
        if _reduced:
            self.min_generators = tuple(sorted(gens))
        else:
            self.min_generators = antichain_reduce(ring, gens)
        self._up = _IdealUp(ring, self.min_generators)
        self._lock = threading.RLock()
        self._cache = {}

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ring == other.ring
                and self.min_generators == other.min_generators)

    def __hash__(self):
        return hash((self.ring, self.min_generators))

    def __repr__(self):
        return "MonomialIdeal(%r)" % (sorted(map(tuple, self.min_generators)),)

    @property
    def is_unit(self):
        return self.min_generators == (ExponentVector((0,) * self.ring.dim),)

    def member(self, v):
        v = tuple(int(c) for c in v)
        if len(v) != self.ring.dim:
            raise DimensionMismatchError("vector %r has wrong length" % (v,))
        return self._up.member(v)

    def contains_ideal(self, other):
        self._check_ring(other)
        return all(self._up.member(g) for g in other.min_generators)

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("ideals live over different semigroup rings")

    # -- finiteness certificate and complement

    def _ray_powers(self):
        """Per extreme direction, least k with k*g_axis in the ideal (None if none)."""
        with self._lock:
            if "ray_powers" not in self._cache:
                naxes = 1 if self.ring.kind == "num1" else self.ring.dim
                origin = (0,) * self.ring.dim
                if self.ring.kind == "free3":
                    ks = []
                    for axis in range(3):
                        e = tuple(1 if i == axis else 0 for i in range(3))
                        k, found = 0, None
                        while k <= 4096:
                            if self._up.member(vscale(k, e)):
                                found = k
                                break
                            k += 1
                        ks.append(found)
                else:
                    ks = [self._up.line_first(origin, axis, 1) for axis in range(naxes)]
                self._cache["ray_powers"] = tuple(ks)
            return self._cache["ray_powers"]

    @property
    def is_m_primary(self):
        return all(k is not None for k in self._ray_powers())

    def complement(self):
        """The certified finite set of S-points outside the ideal."""
        with self._lock:
            if "complement" not in self._cache:
                if not self.is_m_primary:
                    raise NotMPrimaryError(
                        "ideal %r does not positively span the cone" % (self,))
                ring_memo = self.ring._cache.setdefault("complements", {})
                hit = ring_memo.get(self.min_generators)
                if hit is not None:
                    self._cache["complement"] = hit
                    return hit
                kind = self.ring.kind
                if kind == "grid2":
                    pts = _complement_grid2(self.ring, self._up, self._ray_powers())
                elif kind == "num1":
                    eng = self.ring._engine
                    top = min(sum(g) for g in self.min_generators) + eng.conductor
                    pts = [(x,) for x in range(0, top + 1, eng.step)
                           if eng.member((x,)) and not self._up.member((x,))]
                else:
                    ks = self._ray_powers()
                    pts = [v for v in itertools.product(*(range(k) for k in ks))
                           if not self._up.member(v)]
                out = tuple(ExponentVector(p) for p in sorted(pts))
                ring_memo[self.min_generators] = out
                self._cache["complement"] = out
            return self._cache["complement"]

    @property
    def complement_witness(self):
        """The certified complement when the ideal is m-primary, else None."""
        if not self.is_m_primary:
            return None
        return self.complement()

    def colength(self):
        """Exact length of R/I (number of standard monomials)."""
        return len(self.complement())


# ---------------------------------------------------------------------------
# arithmetic

def ideal_sum(a, b):
    a._check_ring(b)
    return MonomialIdeal(a.ring, list(a.min_generators) + list(b.min_generators))


def ideal_product(a, b):
    a._check_ring(b)
    gens = [vadd(u, v) for u in a.min_generators for v in b.min_generators]
    return MonomialIdeal(a.ring, gens)


def ideal_power(a, n):
    if n < 1:
        raise ValueError("power must be >= 1")
    with a._lock:
        powers = a._cache.setdefault("powers", {1: a})
        top = max(powers)
        while top < n:
            powers[top + 1] = ideal_product(powers[top], a)
            top += 1
        return powers[n]


def ideal_colon(a, f):
    """(I : x^f) as a monomial ideal; f must lie in S."""
    f = ExponentVector(f)
    if not a.ring.member(f):
        raise ValueError("colon element %r is not in the semigroup" % (tuple(f),))
    up = _ColonUp(a._up, f)
    return MonomialIdeal(a.ring, extract_min_gens(a.ring, up), _reduced=True)


def ideal_colon_ideal(a, b):
    a._check_ring(b)
    up = _MeetUp([_ColonUp(a._up, f) for f in b.min_generators])
    return MonomialIdeal(a.ring, extract_min_gens(a.ring, up), _reduced=True)


def ideal_intersection(ideals):
    ideals = list(ideals)
    first = ideals[0]
    for other in ideals[1:]:
        first._check_ring(other)
    if len(ideals) == 1:
        return ideals[0]
    up = _MeetUp([i._up for i in ideals])
    return MonomialIdeal(first.ring, extract_min_gens(first.ring, up), _reduced=True)


def maximal_ideal(ring):
    return MonomialIdeal(ring, ring.minimal_generators(), _reduced=True)


# ---------------------------------------------------------------------------
# parameter ideals

class ParameterIdeal:
    """An m-primary ideal generated by dim-many ordered monomials.

    The generator order is user-visible state: splits Q(alpha) exponentiate
    the i-th listed generator by alpha_i.
    """

    def __init__(self, ring, ordered_generators):
        gens = [ExponentVector(g) for g in ordered_generators]
        if len(gens) != ring.dim:
            raise NotMPrimaryError(
                "a parameter ideal needs exactly %d generators, got %d"
                % (ring.dim, len(gens)))
        if len(set(gens)) != len(gens):
            raise NotMPrimaryError("parameter ideal generators must be distinct")
        self.ring = ring
        self.ordered_generators = tuple(gens)
        self.base = MonomialIdeal(ring, gens)
        if len(self.base.min_generators) != ring.dim or not self.base.is_m_primary:
            raise NotMPrimaryError(
                "generators %r do not positively span the cone"
                % ([tuple(g) for g in gens],))

    def __eq__(self, other):
        return (isinstance(other, ParameterIdeal) and self.ring == other.ring
                and self.ordered_generators == other.ordered_generators)

    def __hash__(self):
        return hash((self.ring, self.ordered_generators))

    def __repr__(self):
        return "ParameterIdeal(%r)" % (list(map(tuple, self.ordered_generators)),)

    def split(self, alpha):
        """The parameter ideal (u1^a1, ..., ud^ad) for a composition alpha."""
        if len(alpha) != len(self.ordered_generators):
            raise DimensionMismatchError("split %r has wrong length" % (alpha,))
        if any(a < 1 for a in alpha):
            raise ValueError("split exponents must be >= 1")
        return ParameterIdeal(
            self.ring,
            [g.scaled(a) for g, a in zip(self.ordered_generators, alpha)])

    def colength(self):
        return self.base.colength()


def is_parameter_ideal(ideal):
    if isinstance(ideal, ParameterIdeal):
        return True
    return (len(ideal.min_generators) == ideal.ring.dim) and ideal.is_m_primary


def nu_m_mod_q(q):
    """Minimal generators of m surviving in m/(Q + m^2)."""
    ring = q.ring
    m = maximal_ideal(ring)
    qm2 = ideal_sum(q.base if isinstance(q, ParameterIdeal) else q, ideal_power(m, 2))
    return sum(1 for g in ring.minimal_generators() if not qm2.member(g))
