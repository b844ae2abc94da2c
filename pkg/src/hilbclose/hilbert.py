"""Length sequences of power filtrations and exact binomial-basis coefficient fits.

Lengths are colengths ell(R/F_{n+1}) for n = 0..n_max.  A fit detects a
constant trailing window of d-th forward differences and then solves exactly
(rational arithmetic) for integers (e_0, ..., e_d) in the alternating binomial
basis

    ell(R/F_{n+1}) = e_0 C(n+d, d) - e_1 C(n+d-1, d-1) + ... + (-1)^d e_d.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .closures import (
    FrobeniusContext,
    _tight_candidate_at,
    integral_closure_power,
    lim_intersection,
)
from .errors import (
    NonIntegralCoefficientError,
    NotMPrimaryError,
    NotStabilizedError,
    UncertifiedError,
    UnsupportedRingError,
)
from .ideals import ParameterIdeal, ideal_power

DEFAULT_N_MAX = 10
RETRY_N_MAX = 14
DEFAULT_WINDOW = 3


class FiltrationKind(enum.Enum):
    ORDINARY = "ordinary"
    INTEGRAL = "integral"
    LIM_INTERSECT = "lim_intersect"
    TIGHT_CANDIDATE = "tight_candidate"


class Filtration:
    """A power filtration n -> ideal; member(k) plays the role of the k-th power."""

    def __init__(self, kind, base, frobenius=None):
        self.kind = kind
        if isinstance(base, ParameterIdeal):
            self.parameter = base
            self.ideal = base.base
        else:
            self.parameter = None
            self.ideal = base
        self.ring = self.ideal.ring
        self.frobenius = frobenius
        if kind is FiltrationKind.LIM_INTERSECT and self.parameter is None:
            raise NotMPrimaryError("the split-intersection filtration needs a parameter ideal")
        if kind is FiltrationKind.TIGHT_CANDIDATE and frobenius is None:
            raise ValueError("the tight-candidate filtration needs a Frobenius context")
        self._members = {}

    def member(self, k):
        if k < 1:
            raise ValueError("filtration index must be >= 1")
        if k not in self._members:
            if self.kind is FiltrationKind.ORDINARY:
                out = ideal_power(self.ideal, k)
            elif self.kind is FiltrationKind.INTEGRAL:
                out = integral_closure_power(self.ideal, k)
            elif self.kind is FiltrationKind.LIM_INTERSECT:
                # slot k brackets the k-th power's big-CM closure
                out = lim_intersection(self.parameter, k + self.ring.dim - 1)
            else:
                # each slot gets a fresh Frobenius scan at the context's e_max
                out = _tight_candidate_at(ideal_power(self.ideal, k), self.frobenius,
                                          self.frobenius.e_max)
            self._members[k] = out
        return self._members[k]


def length_sequence(filtration, n_max):
    """Exact lengths ell(R/F_{n+1}) for n = 0..n_max."""
    ring = filtration.ring
    if n_max < ring.dim + 3:
        raise ValueError("n_max must be at least dim + 3")
    if not filtration.ideal.is_m_primary:
        raise NotMPrimaryError("length sequences need an m-primary base ideal")
    out = [filtration.member(n + 1).colength() for n in range(n_max + 1)]
    if filtration.kind is not FiltrationKind.LIM_INTERSECT:
        # theorem-backed monotonicity; the split intersection is only recorded
        for i in range(n_max):
            if out[i] > out[i + 1]:
                raise UncertifiedError(
                    "non-monotone %s lengths at n=%d: %r (internal bug)"
                    % (filtration.kind.value, i, out))
    return out


def _forward_diffs(seq, order):
    cur = list(seq)
    for _ in range(order):
        cur = [b - a for a, b in zip(cur, cur[1:])]
    return cur


def _solve_exact(rows, rhs):
    """Gaussian elimination over Fraction; returns the solution vector."""
    n = len(rows)
    mat = [[Fraction(c) for c in row] + [Fraction(v)] for row, v in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            raise NotStabilizedError("degenerate fit system")
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = mat[col][col]
        mat[col] = [c / inv for c in mat[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
    return [mat[r][n] for r in range(n)]


def _binomial_value(coeffs, n, d):
    return sum((-1) ** i * coeffs[i] * comb(n + d - i, d - i) for i in range(d + 1))


def fit_polynomial(lengths, d, window=DEFAULT_WINDOW):
    """Exact (e_0, ..., e_d) and the earliest index the polynomial matches from.

    Raises NotStabilizedError when the d-th differences have no constant
    trailing window, NonIntegralCoefficientError when the exact solve is
    fractional (an upstream computation bug).
    """
    lengths = list(lengths)
    if len(lengths) < d + 1 + window:
        raise ValueError("need at least d + 1 + window length values")
    diffs = _forward_diffs(lengths, d)
    tail = diffs[-window:]
    if any(t != tail[0] for t in tail):
        raise NotStabilizedError("no constant window of degree-%d differences" % d)
    idx = list(range(len(lengths) - (d + 1), len(lengths)))
    rows = [[(-1) ** i * comb(n + d - i, d - i) for i in range(d + 1)] for n in idx]
    sol = _solve_exact(rows, [lengths[n] for n in idx])
    coeffs = []
    for c in sol:
        if c.denominator != 1:
            raise NonIntegralCoefficientError("fit produced non-integer coefficient %s" % c)
        coeffs.append(int(c))
    coeffs = tuple(coeffs)
    n0 = len(lengths)
    for n in range(len(lengths) - 1, -1, -1):
        if _binomial_value(coeffs, n, d) == lengths[n]:
            n0 = n
        else:
            break
    if n0 > len(lengths) - 1 - window:
        raise NotStabilizedError("trailing window matches no single polynomial")
    return coeffs, n0


@dataclass(frozen=True)
class HilbertReport:
    kind: FiltrationKind
    n_max: int
    lengths: tuple
    coefficients: tuple | None
    stabilization_index: int | None
    status: str  # "ok" or an error code

    @property
    def e1(self):
        return None if self.coefficients is None else self.coefficients[1]

    @property
    def e0(self):
        return None if self.coefficients is None else self.coefficients[0]


def fit_filtration(filtration, n_max=DEFAULT_N_MAX, window=DEFAULT_WINDOW,
                   retry_n_max=RETRY_N_MAX):
    """Length sequence plus fit, with one adaptive extension before giving up."""
    try:
        lengths = length_sequence(filtration, n_max)
    except NotStabilizedError:
        # a member's colon chain hit the t-cap; report, never guess
        return HilbertReport(filtration.kind, n_max, (), None, None, "NOT_STABILIZED")
    try:
        coeffs, n0 = fit_polynomial(lengths, filtration.ring.dim, window)
    except NotStabilizedError:
        if n_max >= retry_n_max:
            return HilbertReport(filtration.kind, n_max, tuple(lengths), None, None,
                                 "NOT_STABILIZED")
        lengths = length_sequence(filtration, retry_n_max)
        try:
            coeffs, n0 = fit_polynomial(lengths, filtration.ring.dim, window)
            n_max = retry_n_max
        except NotStabilizedError:
            return HilbertReport(filtration.kind, retry_n_max, tuple(lengths), None,
                                 None, "NOT_STABILIZED")
    if coeffs[0] < 1:
        raise UncertifiedError("fitted multiplicity %d < 1 (internal bug)" % coeffs[0])
    return HilbertReport(filtration.kind, n_max, tuple(lengths), coeffs, n0, "ok")


def multiplicity_volume(ideal):
    """d! times the volume cut out below the Newton polyhedron (free rings, d <= 2)."""
    ring = ideal.ring
    if not ring.is_free:
        raise UnsupportedRingError("multiplicity volumes are computed for free rings only")
    if not ideal.is_m_primary:
        raise NotMPrimaryError("multiplicity needs an m-primary ideal")
    if ring.dim == 1:
        return min(g[0] for g in ideal.min_generators)
    if ring.dim != 2:
        raise UnsupportedRingError("multiplicity volume supports free dimensions 1 and 2")
    pts = [tuple(g) for g in ideal.min_generators]
    poly = ring.newton_polyhedron(pts)

    def is_vertex(p):
        others = [q for q in pts if q != p]
        if not others:
            return True
        other_poly = ring.newton_polyhedron(others)
        return not other_poly.contains(p)

    chain = sorted(p for p in pts if is_vertex(p))
    area = Fraction(0)
    for (x1, y1), (x2, y2) in zip(chain, chain[1:]):
        area += Fraction((x2 - x1) * (y1 + y2), 2)
    vol = 2 * area
    if vol.denominator != 1:
        raise NonIntegralCoefficientError("volume doubled to a non-integer: %s" % vol)
    return int(vol)


@dataclass(frozen=True)
class ClaimRow:
    n: int
    length: int
    bound: int

    @property
    def ok(self):
        return self.length <= self.bound


@dataclass(frozen=True)
class CoefficientBundle:
    """Fits for all filtrations of one parameter ideal, plus the brackets."""

    ring: object
    parameter: ParameterIdeal
    n_max: int
    reports: dict
    claim_rows: tuple
    characteristic: int | None = None
    e_max: int | None = None

    def report(self, kind):
        return self.reports.get(kind)

    @property
    def e0(self):
        rep = self.reports[FiltrationKind.ORDINARY]
        return rep.e0

    @property
    def e1_ordinary(self):
        return self.reports[FiltrationKind.ORDINARY].e1

    @property
    def e1_integral(self):
        return self.reports[FiltrationKind.INTEGRAL].e1

    @property
    def e1_lim(self):
        rep = self.reports.get(FiltrationKind.LIM_INTERSECT)
        return None if rep is None else rep.e1

    @property
    def e1_tight(self):
        rep = self.reports.get(FiltrationKind.TIGHT_CANDIDATE)
        return None if rep is None else rep.e1

    @property
    def bcm_bracket(self):
        """[lower, upper] bracket for the first big-CM coefficient."""
        if self.e1_lim is None or self.e1_integral is None:
            return None
        return (self.e1_lim, self.e1_integral)

    @property
    def tight_bracket(self):
        if self.e1_lim is None or self.e1_tight is None:
            return None
        return (self.e1_lim, self.e1_tight)

    @property
    def e0_agreement(self):
        vals = {rep.e0 for rep in self.reports.values() if rep.e0 is not None}
        return len(vals) == 1


def coefficient_report(ring, q, n_max=DEFAULT_N_MAX, characteristic=None, e_max=4,
                       window=DEFAULT_WINDOW):
    """Fit every applicable filtration of a parameter ideal and assemble brackets."""
    if not isinstance(q, ParameterIdeal):
        q = ParameterIdeal(ring, [tuple(g) for g in q.min_generators])
    reports = {}
    reports[FiltrationKind.ORDINARY] = fit_filtration(
        Filtration(FiltrationKind.ORDINARY, q), n_max, window)
    reports[FiltrationKind.INTEGRAL] = fit_filtration(
        Filtration(FiltrationKind.INTEGRAL, q), n_max, window)
    lim_filt = Filtration(FiltrationKind.LIM_INTERSECT, q)
    reports[FiltrationKind.LIM_INTERSECT] = fit_filtration(lim_filt, n_max, window)
    ctx = None
    if characteristic is not None:
        ctx = FrobeniusContext(ring, characteristic, e_max=e_max)
        reports[FiltrationKind.TIGHT_CANDIDATE] = fit_filtration(
            Filtration(FiltrationKind.TIGHT_CANDIDATE, q, frobenius=ctx), n_max, window)
    e0 = reports[FiltrationKind.ORDINARY].e0
    claim_rows = []
    if e0 is not None:
        lim_lengths = reports[FiltrationKind.LIM_INTERSECT].lengths
        d = ring.dim
        for n, ell in enumerate(lim_lengths):
            claim_rows.append(ClaimRow(n=n, length=ell, bound=comb(n + d, d) * e0))
    return CoefficientBundle(
        ring=ring, parameter=q, n_max=n_max, reports=reports,
        claim_rows=tuple(claim_rows), characteristic=characteristic,
        e_max=None if ctx is None else ctx.e_max)
