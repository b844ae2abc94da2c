"""Closure operations on monomial ideals: integral, limit, split-intersection,
Frobenius bracket powers and tight-closure candidates.

Integral closures come from Newton polyhedra.  Limit closures are stabilized
colon chains.  The big-CM closure of a power is never computed directly (no
such algebra is constructed); it is bracketed between the split intersection
below and the integral closure above, and in characteristic p additionally by
the Frobenius candidate.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

from .errors import NotMPrimaryError, NotStabilizedError, UnsupportedRingError
from .ideals import (
    MonomialIdeal,
    ParameterIdeal,
    _FrobUp,
    _IdealUp,
    _MeetUp,
    _PolyUp,
    extract_min_gens,
    ideal_colon,
    ideal_power,
)
from .lattice import ExponentVector, vadd, vdot, vscale

LIMIT_T_CAP = 16
LIMIT_WINDOW = 2


# ---------------------------------------------------------------------------
# integral closure

def integral_closure(ideal):
    """Lattice points of the Newton polyhedron of the generators, inside S."""
    ring = ideal.ring
    poly = ring.newton_polyhedron([tuple(g) for g in ideal.min_generators])
    up = _PolyUp(ring, poly, 1, tuple(ideal.min_generators[0]))
    if ring.kind == "free3":
        gens = _closure_free3(ring, up, ideal)
    else:
        gens = extract_min_gens(ring, up)
    return MonomialIdeal(ring, gens, _reduced=True)


def integral_closure_power(ideal, n):
    """The integral closure of the n-th power, via the n-scaled polyhedron."""
    if n < 1:
        raise ValueError("power must be >= 1")
    ring = ideal.ring
    poly = ring.newton_polyhedron([tuple(g) for g in ideal.min_generators])
    seed = tuple(ideal.min_generators[0].scaled(n))
    up = _PolyUp(ring, poly, n, seed)
    if ring.kind == "free3":
        gens = _closure_free3(ring, up, ideal_power(ideal, n))
    else:
        gens = extract_min_gens(ring, up)
    return MonomialIdeal(ring, gens, _reduced=True)


def _closure_free3(ring, up, inner):
    """Free-Z^3 extraction: closure generators live inside the power's pure-power box."""
    ks = inner._ray_powers()
    if any(k is None for k in ks):
        raise NotMPrimaryError("closure extraction in dimension 3 needs an m-primary ideal")
    cands = [v for v in itertools.product(*(range(k + 1) for k in ks)) if up.member(v)]
    out = []
    for v in sorted(cands):
        if not any(up.member(tuple(a - b for a, b in zip(v, g))) for g in ring.generators):
            out.append(v)
    return tuple(ExponentVector(v) for v in out)


# ---------------------------------------------------------------------------
# limit closure

@dataclass(frozen=True)
class LimitClosureCertificate:
    """A stabilized colon chain: the closure, where it stabilized, and the
    window of extra chain indices checked equal."""

    ideal: MonomialIdeal
    stabilized_t: int
    window: int


def _limit_chain_member(q, t):
    """The t-th colon (u1^(t+1), ..., ud^(t+1)) : (u1...ud)^t as an ideal."""
    ring = q.ring
    gens = [g.scaled(t + 1) for g in q.ordered_generators]
    if t == 0:
        return MonomialIdeal(ring, gens)
    prod = (0,) * ring.dim
    for g in q.ordered_generators:
        prod = vadd(prod, g)
    return ideal_colon(MonomialIdeal(ring, gens), vscale(t, prod))


def limit_closure(q, t_cap=LIMIT_T_CAP, window=LIMIT_WINDOW):
    """Union of the colon chain, certified by an equality window."""
    if not isinstance(q, ParameterIdeal):
        raise NotMPrimaryError("limit closure is defined for parameter ideals")
    prev = _limit_chain_member(q, 0)
    stable_at = 0
    run = 0
    t = 1
    while t <= t_cap + window:
        cur = _limit_chain_member(q, t)
        if cur == prev:
            run += 1
            if run >= window:
                return LimitClosureCertificate(ideal=prev, stabilized_t=stable_at,
                                               window=window)
        else:
            if t > t_cap:
                break
            prev = cur
            stable_at = t
            run = 0
        t += 1
    raise NotStabilizedError(
        "limit-closure colon chain did not stabilize by t = %d" % t_cap)


# ---------------------------------------------------------------------------
# split intersections

@dataclass(frozen=True)
class ParameterSplit:
    """A composition alpha of a total, indexing the split (u1^a1, ..., ud^ad)."""

    alpha: tuple
    total: int

    def __post_init__(self):
        if any(a < 1 for a in self.alpha):
            raise ValueError("split entries must be >= 1")
        if sum(self.alpha) != self.total:
            raise ValueError("split entries must sum to the declared total")


def compositions(total, parts):
    """All compositions of ``total`` into ``parts`` positive entries, lex order."""
    if parts == 1:
        return [(total,)] if total >= 1 else []
    out = []
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def parameter_splits(total, parts):
    return [ParameterSplit(alpha=a, total=total) for a in compositions(total, parts)]


def lim_intersection(q, total, t_cap=LIMIT_T_CAP, window=LIMIT_WINDOW):
    """Intersection of limit closures of all splits with |alpha| = total.

    Contains Q^total; contained in the integral closure of Q^(total - d + 1).
    """
    ring = q.ring
    d = ring.dim
    if total < d:
        raise ValueError("split total must be at least the ring dimension")
    parts = []
    for split in parameter_splits(total, d):
        cert = _limit_closure_cached(q, split.alpha, t_cap, window)
        parts.append(cert.ideal)
    if len(parts) == 1:
        return parts[0]
    if ring.kind == "free3":
        gens = parts[0].min_generators
        cur = parts[0]
        for other in parts[1:]:
            lcms = [tuple(max(a, b) for a, b in zip(u, v))
                    for u in cur.min_generators for v in other.min_generators]
            cur = MonomialIdeal(ring, lcms)
        return cur
    up = _MeetUp([p._up for p in parts])
    return MonomialIdeal(ring, extract_min_gens(ring, up), _reduced=True)


_LIM_CACHE_LOCK = threading.Lock()


def _limit_closure_cached(q, alpha, t_cap, window):
    with _LIM_CACHE_LOCK:
        cache = q.__dict__.setdefault("_split_limit_cache", {})
        key = (alpha, t_cap, window)
        if key not in cache:
            cache[key] = limit_closure(q.split(alpha), t_cap, window)
        return cache[key]


# ---------------------------------------------------------------------------
# characteristic p

def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def inversion_frees(ring, c):
    """True iff inverting the monomial of c turns k[S] into a regular ring.

    Interior elements always qualify; an element on an extreme ray qualifies
    iff every grid line parallel to that ray meets S (no gap rays parallel to
    it), which makes the localized semigroup a group times a free part.
    """
    c = tuple(c)
    if not ring.member(c):
        return False
    if ring.kind == "free3":
        return True
    if ring.kind == "num1":
        return True
    eng = ring._engine
    l1 = vdot(eng.lam1, c)
    l2 = vdot(eng.lam2, c)
    if l1 > 0 and l2 > 0:
        return True
    axis = 0 if l2 == 0 else 1
    # lines parallel to the c-ray must all meet S; beyond the witness bound
    # they do automatically, so the finitely many near lines decide
    for key in sorted(eng.box):
        b = eng._witnesses()[key]
        bound = b[1] if axis == 0 else b[0]
        for fixed in range(bound):
            if eng.grid_first(key, axis, fixed) is None:
                return False
    return True


def default_test_element(ring):
    """Lexicographically smallest generator whose inversion frees the semigroup."""
    for g in sorted(ring.generators):
        if inversion_frees(ring, g):
            return g
    raise UnsupportedRingError("no generator inverts to a regular localization")


class FrobeniusContext:
    """Characteristic-p context: prime p, Frobenius depth, and a test element."""

    def __init__(self, ring, p, e_max=4, test_element=None, test_power=1):
        if not _is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        if e_max < 2:
            raise ValueError("e_max must be >= 2")
        if not 1 <= test_power <= 3:
            raise ValueError("test_power must be between 1 and 3")
        self.ring = ring
        self.p = int(p)
        self.e_max = int(e_max)
        base = ExponentVector(test_element) if test_element is not None \
            else default_test_element(ring)
        if not inversion_frees(ring, base):
            raise UnsupportedRingError(
                "test element %r does not free the semigroup" % (tuple(base),))
        self.test_element = base.scaled(test_power)

    def powers(self, e_top=None):
        e_top = self.e_max if e_top is None else e_top
        return [self.p ** e for e in range(0, e_top + 1)]


def frobenius_power(ideal, q):
    """The bracket power I^[q]: generators scaled by q."""
    if q < 1:
        raise ValueError("Frobenius power index must be >= 1")
    return MonomialIdeal(ideal.ring, [g.scaled(q) for g in ideal.min_generators])


@dataclass(frozen=True)
class TightStatus:
    e_max: int
    stable: bool  # candidate unchanged between e_max - 1 and e_max


def _tight_candidate_at(ideal, ctx, e_top):
    ring = ideal.ring
    c = tuple(ctx.test_element)
    scaled = [(q, _IdealUp(ring, [g.scaled(q) for g in ideal.min_generators]))
              for q in ctx.powers(e_top)]
    up = _FrobUp(ring, [tuple(g) for g in ideal.min_generators], scaled, c)
    if ring.kind == "free3":
        # the candidate's generators sit inside its pure-power box
        ks = []
        for axis in range(3):
            e = tuple(1 if i == axis else 0 for i in range(3))
            k = 0
            while not up.member(vscale(k, e)):
                k += 1
            ks.append(k)
        cands = [v for v in itertools.product(*(range(k + 1) for k in ks))
                 if up.member(v)]
        gens = []
        for v in sorted(cands):
            if not any(up.member(tuple(a - b for a, b in zip(v, g)))
                       for g in ring.generators):
                gens.append(ExponentVector(v))
        return MonomialIdeal(ring, tuple(gens), _reduced=True)
    return MonomialIdeal(ring, extract_min_gens(ring, up), _reduced=True)


def tight_closure_candidate(ideal, ctx):
    """Monomials s with c + q*s in I^[q] for every q = p^e, e <= e_max.

    With a genuine test element this is a superset of the tight closure,
    shrinking as e_max grows; the certified lower bound for parameter-ideal
    powers is the split intersection.  The status records whether one more
    Frobenius step still changed the result.
    """
    if not ideal.is_m_primary:
        raise NotMPrimaryError("tight-closure candidates need an m-primary ideal")
    prev = _tight_candidate_at(ideal, ctx, ctx.e_max - 1)
    cur = _tight_candidate_at(ideal, ctx, ctx.e_max)
    return cur, TightStatus(e_max=ctx.e_max, stable=(prev == cur))
