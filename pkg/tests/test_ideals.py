import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import REMARK_GENS, brute_complement, brute_ideal_member
from hilbclose.errors import NotMPrimaryError, RingMismatchError
from hilbclose.ideals import (
    MonomialIdeal,
    ParameterIdeal,
    ideal_colon,
    ideal_colon_ideal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_parameter_ideal,
    maximal_ideal,
    nu_m_mod_q,
)
from hilbclose.lattice import AffineSemigroup


def gens_of(ideal):
    return [tuple(g) for g in ideal.min_generators]


class TestConstruction:
    def test_reduces_to_antichain(self, free2):
        ideal = MonomialIdeal(free2, [(1, 0), (2, 0), (1, 1)])
        assert gens_of(ideal) == [(1, 0)]

    def test_generator_outside_ring_rejected(self, remark_ring):
        with pytest.raises(ValueError):
            MonomialIdeal(remark_ring, [(0, 1)])

    def test_antichain_under_s_divisibility(self, remark_ring):
        # (0,5) - (0,2) = (0,3) in S, so (0,5) is redundant
        ideal = MonomialIdeal(remark_ring, [(0, 2), (0, 5)])
        assert gens_of(ideal) == [(0, 2)]

    def test_keeps_s_incomparable(self, remark_ring):
        # (0,3) - (0,2) = (0,1) is not in S: both survive
        ideal = MonomialIdeal(remark_ring, [(0, 2), (0, 3)])
        assert gens_of(ideal) == [(0, 2), (0, 3)]


class TestMembershipAndUpset:
    def test_upset_closure_random(self, remark_ring):
        rng = random.Random(3)
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        members = [v for v in itertools.product(range(8), repeat=2) if q.member(v)]
        svals = [v for v in itertools.product(range(8), repeat=2) if remark_ring.member(v)]
        for _ in range(60):
            v = rng.choice(members)
            s = rng.choice(svals)
            assert q.member((v[0] + s[0], v[1] + s[1]))

    def test_matches_bruteforce(self, remark_ring):
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        for v in itertools.product(range(10), repeat=2):
            assert q.member(v) == brute_ideal_member(REMARK_GENS, [(1, 0), (0, 2)], v), v


class TestProductPower:
    def test_remark_square(self, remark_ring):
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        assert gens_of(ideal_power(q, 2)) == [(0, 4), (1, 2), (2, 0)]

    def test_power_one_identity(self, remark_ring):
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        assert ideal_power(q, 1) is q

    def test_free_square(self, free2):
        q = MonomialIdeal(free2, [(2, 0), (0, 3)])
        assert gens_of(ideal_power(q, 2)) == [(0, 6), (2, 3), (4, 0)]

    def test_product_associative_powers(self, remark_ring):
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                lhs = ideal_product(ideal_power(q, a), ideal_power(q, b))
                assert lhs == ideal_power(q, a + b), (a, b)

    @settings(max_examples=25, deadline=None)
    @given(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                   min_size=1, max_size=3).filter(lambda s: (0, 0) not in s))
    def test_product_powers_fuzzed_free(self, gens):
        ring = AffineSemigroup(2, [(1, 0), (0, 1)])
        ideal = MonomialIdeal(ring, list(gens))
        for a in (1, 2):
            for b in (1, 2):
                assert ideal_product(ideal_power(ideal, a), ideal_power(ideal, b)) == \
                    ideal_power(ideal, a + b)

    def test_ring_mismatch(self, remark_ring, free2):
        a = MonomialIdeal(remark_ring, [(1, 0)])
        b = MonomialIdeal(free2, [(1, 0)])
        with pytest.raises(RingMismatchError):
            ideal_product(a, b)

    def test_sum(self, remark_ring):
        a = MonomialIdeal(remark_ring, [(2, 0)])
        b = MonomialIdeal(remark_ring, [(0, 2)])
        assert gens_of(ideal_sum(a, b)) == [(0, 2), (2, 0)]


class TestColon:
    def test_remark_colon_example(self, remark_ring):
        ideal = MonomialIdeal(remark_ring, [(2, 0), (0, 4)])
        colon = ideal_colon(ideal, (1, 2))
        assert colon.complement() == ((0, 0),)
        assert colon.member((1, 1)) and colon.member((0, 3))
        assert colon == maximal_ideal(remark_ring)

    def test_principal_colon_dim1(self):
        ring = AffineSemigroup(1, [(1,)])
        ideal = MonomialIdeal(ring, [(2,)])
        assert gens_of(ideal_colon(ideal, (1,))) == [(1,)]

    def test_free_staircase_colon(self, free2):
        ideal = MonomialIdeal(free2, [(2, 0), (0, 2)])
        assert gens_of(ideal_colon(ideal, (1, 1))) == [(0, 1), (1, 0)]

    def test_colon_adjunction_exhaustive(self, remark_ring):
        ideal = MonomialIdeal(remark_ring, [(2, 0), (0, 4)])
        f = (1, 2)
        colon = ideal_colon(ideal, f)
        for v in itertools.product(range(9), repeat=2):
            if remark_ring.member(v):
                assert colon.member(v) == ideal.member((v[0] + f[0], v[1] + f[1])), v

    def test_colon_by_ideal(self, free2):
        ideal = MonomialIdeal(free2, [(3, 0), (0, 3)])
        j = MonomialIdeal(free2, [(1, 0), (0, 1)])
        # (I : m) = intersection of the two single colons
        expected = ideal_intersection(
            [ideal_colon(ideal, (1, 0)), ideal_colon(ideal, (0, 1))])
        assert ideal_colon_ideal(ideal, j) == expected

    def test_colon_free3(self, free3):
        ideal = MonomialIdeal(free3, [(2, 0, 0), (0, 2, 0), (0, 0, 2)])
        colon = ideal_colon(ideal, (1, 1, 0))
        assert gens_of(colon) == [(0, 0, 2), (0, 1, 0), (1, 0, 0)]


class TestColength:
    def test_remark_parameter(self, remark_ring):
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        assert q.colength() == 3
        assert [tuple(p) for p in q.complement()] == [(0, 0), (0, 3), (1, 1)]

    def test_free_maximal(self, free2):
        assert MonomialIdeal(free2, [(1, 0), (0, 1)]).colength() == 1

    def test_remark_square_colength(self, remark_ring):
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        q2 = ideal_power(q, 2)
        expected = brute_complement(REMARK_GENS, gens_of(q2), 14)
        assert q2.colength() == len(expected) == 8
        assert [tuple(p) for p in q2.complement()] == expected

    def test_cm_ring_colengths(self, cm_ring):
        q = MonomialIdeal(cm_ring, [(2, 0), (0, 1)])
        assert q.colength() == 2
        assert [tuple(p) for p in q.complement()] == [(0, 0), (3, 0)]
        assert ideal_power(q, 2).colength() == 6

    def test_complement_matches_bruteforce_deep(self, cm_ring):
        gens = [(2, 0), (3, 0), (0, 1)]
        q3 = ideal_power(MonomialIdeal(cm_ring, [(2, 0), (0, 1)]), 3)
        expected = brute_complement(gens, gens_of(q3), 16)
        assert sorted(map(tuple, q3.complement())) == expected

    def test_not_m_primary(self, free2):
        ideal = MonomialIdeal(free2, [(0, 1)])
        assert not ideal.is_m_primary
        assert ideal.complement_witness is None
        with pytest.raises(NotMPrimaryError):
            ideal.colength()

    def test_complement_witness_present(self, remark_ring):
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        assert q.complement_witness == ((0, 0), (0, 3), (1, 1))

    def test_colength_monotone(self, remark_ring):
        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        lengths = [ideal_power(q, n).colength() for n in range(1, 6)]
        assert lengths == sorted(lengths)
        assert lengths == [(n + 1) * (n + 3) for n in range(0, 5)]

    def test_dim1_colength(self):
        ring = AffineSemigroup(1, [(2,), (3,)])
        ideal = MonomialIdeal(ring, [(4,)])
        # complement: S-points below the up-set of 4: {0, 2, 3, 5}
        assert ideal.colength() == 4

    def test_free3_colength(self, free3):
        ideal = MonomialIdeal(free3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)])
        assert ideal.colength() == 7

    @settings(max_examples=25, deadline=None)
    @given(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                   min_size=2, max_size=4).filter(
        lambda s: any(v[1] == 0 and v[0] > 0 for v in s)
        and any(v[0] == 0 and v[1] > 0 for v in s)))
    def test_colength_antitone_in_containment(self, gens):
        # I contained in J forces colength(I) >= colength(J)
        ring = AffineSemigroup(2, [(1, 0), (0, 1)])
        smaller = MonomialIdeal(ring, list(gens))
        larger = ideal_sum(smaller, MonomialIdeal(ring, [(1, 1)]))
        assert larger.contains_ideal(smaller)
        assert smaller.colength() >= larger.colength()

    def test_concurrent_reads(self, remark_ring):
        import threading

        q = MonomialIdeal(remark_ring, [(1, 0), (0, 2)])
        results = []

        def worker():
            out = []
            for n in (1, 2, 3):
                out.append(ideal_power(q, n).colength())
            out.append(remark_ring.member((5, 7)))
            results.append(out)

        threads = [threading.Thread(target=worker) for _ in range(6)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r == results[0] for r in results)
        assert results[0][:3] == [3, 8, 15]


class TestExtractionOracle:
    """Cross-check extraction sweeps against a box brute force.

    The oracle enumerates members in a generous box and keeps the points all
    of whose predecessors leave the up-set; every minimal generator of the
    tested up-sets is small enough to land inside the box.
    """

    @staticmethod
    def brute_min_gens(ring, member, box):
        out = []
        for v in itertools.product(range(box + 1), repeat=2):
            if not member(v):
                continue
            if all(not member((v[0] - g[0], v[1] - g[1])) for g in ring.generators):
                out.append(v)
        return out

    def test_colon_extraction(self, remark_ring, cm_ring):
        cases = [
            (remark_ring, [(3, 0), (1, 2), (0, 6)], (1, 1)),
            (remark_ring, [(2, 3), (0, 5)], (0, 2)),
            (cm_ring, [(4, 0), (2, 2), (0, 3)], (2, 1)),
            (cm_ring, [(6, 1), (0, 4)], (3, 0)),
        ]
        for ring, gens, f in cases:
            ideal = MonomialIdeal(ring, gens)
            colon = ideal_colon(ideal, f)
            member = colon.member
            expected = self.brute_min_gens(ring, member, 14)
            assert sorted(map(tuple, colon.min_generators)) == expected, (gens, f)

    def test_intersection_extraction(self, remark_ring, cm_ring):
        for ring in (remark_ring, cm_ring):
            a = MonomialIdeal(ring, [(3, 0), (0, 2)])
            b = MonomialIdeal(ring, [(2, 1), (0, 4)])
            met = ideal_intersection([a, b])
            member = lambda v: a.member(v) and b.member(v)
            expected = self.brute_min_gens(ring, member, 14)
            assert sorted(map(tuple, met.min_generators)) == expected, ring

    def test_closure_extraction(self, remark_ring, cm_ring):
        from hilbclose.closures import integral_closure

        for ring, gens in ((remark_ring, [(2, 1), (0, 4)]), (cm_ring, [(5, 0), (2, 2), (0, 3)])):
            ideal = MonomialIdeal(ring, gens)
            closed = integral_closure(ideal)
            poly = ring.newton_polyhedron(gens)
            member = lambda v: all(c >= 0 for c in v) and ring.member(v) and poly.contains(v)
            expected = self.brute_min_gens(ring, member, 14)
            assert sorted(map(tuple, closed.min_generators)) == expected, gens


class TestParameterIdeal:
    def test_remark_parameter(self, remark_ring):
        q = ParameterIdeal(remark_ring, [(1, 0), (0, 2)])
        assert is_parameter_ideal(q)
        assert q.colength() == 3

    def test_order_preserved(self, remark_ring):
        q = ParameterIdeal(remark_ring, [(0, 2), (1, 0)])
        assert [tuple(g) for g in q.ordered_generators] == [(0, 2), (1, 0)]
        assert gens_of(q.base) == [(0, 2), (1, 0)]

    def test_split(self, remark_ring):
        q = ParameterIdeal(remark_ring, [(1, 0), (0, 2)])
        qa = q.split((2, 1))
        assert [tuple(g) for g in qa.ordered_generators] == [(2, 0), (0, 2)]

    def test_wrong_count(self, remark_ring):
        with pytest.raises(NotMPrimaryError):
            ParameterIdeal(remark_ring, [(1, 0)])

    def test_not_spanning(self, free2):
        with pytest.raises(NotMPrimaryError):
            ParameterIdeal(free2, [(0, 1), (0, 2)])

    def test_is_parameter_on_plain_ideal(self, remark_ring):
        assert is_parameter_ideal(MonomialIdeal(remark_ring, [(1, 0), (0, 2)]))
        assert not is_parameter_ideal(maximal_ideal(remark_ring))


class TestNu:
    def test_remark(self, remark_ring):
        q = ParameterIdeal(remark_ring, [(1, 0), (0, 2)])
        assert nu_m_mod_q(q) == 2

    def test_free_maximal(self, free2):
        q = ParameterIdeal(free2, [(1, 0), (0, 1)])
        assert nu_m_mod_q(q) == 0

    def test_cm_ring(self, cm_ring):
        q = ParameterIdeal(cm_ring, [(2, 0), (0, 1)])
        # (3,0) is the only irreducible outside Q + m^2
        assert nu_m_mod_q(q) == 1
