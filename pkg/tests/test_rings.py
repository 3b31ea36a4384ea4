"""Ring generation and the base predicates (disjunctive, closed base, Wallman)."""

import random

import pytest

from gtslab.enumeration import (
    TOPOLOGY_COUNTS,
    carrier_of_size,
    enumerate_complete_rings_sorted,
    oracle_enumerate_complete_rings,
)
from gtslab.rings import (
    BOUNDED_RATIONAL,
    C0_RATIONAL,
    COBOUNDED_CLOSED,
    RATIONAL_CLOSED,
    FiniteRing,
    LineRing,
    disjunctive_witness,
    generate_ring,
    is_closed_base,
    is_complete,
    is_complete_closed_base,
    is_disjunctive,
    is_wallman_base,
    screen_disjoint_members,
    separate_disjoint_closed,
    unit_window,
)
from gtslab.sampling import random_closed_set, random_rational
from gtslab.sets import FiniteCarrier, IntervalSet, ivs


def brute_force_ring_closure(carrier, generators, make_complete):
    """Independent oracle: saturate by repeatedly adding every pairwise union
    and intersection until nothing changes."""
    members = {g.bits for g in generators}
    if make_complete:
        members |= {0, carrier.full_bits}
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for b in list(members):
                for c in (a | b, a & b):
                    if c not in members:
                        members.add(c)
                        changed = True
    return frozenset(members)


# -- generate_ring -----------------------------------------------------------


def test_generate_ring_two_singletons():
    c = FiniteCarrier(("a", "b", "c"))
    gens = [c.subset(["a"]), c.subset(["b"])]
    ring = generate_ring(c, gens, make_complete=True)
    assert ring.members == brute_force_ring_closure(c, gens, True)
    expected = {0, 0b001, 0b010, 0b011, 0b111}
    assert ring.members == frozenset(expected)


def test_generate_ring_empty_generators():
    c = FiniteCarrier(("a", "b"))
    ring = generate_ring(c, [], make_complete=True)
    assert ring.members == frozenset({0, 0b11})


def test_generate_ring_incomplete():
    c = FiniteCarrier(("a", "b"))
    ring = generate_ring(c, [c.full()], make_complete=False)
    assert ring.members == frozenset({0b11})


def test_generate_ring_matches_oracle_on_random_seeds(rng):
    c = carrier_of_size(4)
    subsets = list(c.all_subsets())
    for _ in range(25):
        gens = rng.sample(subsets, rng.randint(0, 4))
        flag = rng.random() < 0.5
        assert generate_ring(c, gens, flag).members == brute_force_ring_closure(c, gens, flag)


def test_generate_ring_minimality(rng):
    """Nothing in the output is removable: dropping a non-generator element
    breaks union/intersection closure."""
    c = carrier_of_size(3)
    subsets = list(c.all_subsets())
    for _ in range(20):
        gens = rng.sample(subsets, rng.randint(1, 3))
        ring = generate_ring(c, gens, make_complete=True)
        protected = {g.bits for g in gens} | {0, c.full_bits}
        for extra in ring.members - protected:
            smaller = FiniteRing(c, ring.members - {extra})
            assert not smaller.is_union_intersection_closed()


# -- completeness ------------------------------------------------------------


def test_is_complete_examples():
    c = FiniteCarrier(("a", "b"))
    assert is_complete(FiniteRing(c, frozenset({0, 0b11})))
    assert not is_complete(BOUNDED_RATIONAL)
    assert is_complete(RATIONAL_CLOSED)
    assert is_complete(C0_RATIONAL)
    assert is_complete(COBOUNDED_CLOSED)


# -- line ring membership ----------------------------------------------------


def test_rational_closed_membership():
    assert RATIONAL_CLOSED.contains(ivs((None, 0, False, True), (1, 2, True, True)))
    assert not RATIONAL_CLOSED.contains(ivs((0, 1)))
    assert RATIONAL_CLOSED.contains(IntervalSet.empty())
    assert RATIONAL_CLOSED.contains(IntervalSet.full())


def test_c0_membership():
    assert C0_RATIONAL.contains(ivs((0, 1, True, True)))
    assert C0_RATIONAL.contains(ivs((None, 0, False, True), (1, None, True, False)))
    assert not C0_RATIONAL.contains(ivs((0, None, True, False)))
    assert C0_RATIONAL.contains(IntervalSet.full())


def test_bounded_membership():
    assert BOUNDED_RATIONAL.contains(ivs((0, 1, True, True)))
    assert not BOUNDED_RATIONAL.contains(IntervalSet.full())
    assert BOUNDED_RATIONAL.contains(IntervalSet.empty())


def test_cobounded_membership():
    assert COBOUNDED_CLOSED.contains(ivs((None, 0, False, True), (1, None, True, False)))
    assert not COBOUNDED_CLOSED.contains(ivs((0, 1, True, True)))
    assert COBOUNDED_CLOSED.contains(IntervalSet.full())
    assert COBOUNDED_CLOSED.contains(IntervalSet.empty())


def test_windowed_ring():
    ring = LineRing("rational-closed", unit_window())
    assert ring.contains(ivs((0, "1/2", True, True)))
    assert not ring.contains(ivs((0, 2, True, True)))
    assert ring.kc_contains(ivs((0, 1, True, True)))
    # relatively open sets: trace of an open set on the window
    assert ring.open_contains(ivs((0, "1/2", True, False)))
    assert not ring.open_contains(ivs(("1/4", "1/2", True, False)))


# -- disjunctive -------------------------------------------------------------


def test_powerset_is_disjunctive():
    c = FiniteCarrier(("a", "b"))
    ring = FiniteRing(c, frozenset(range(4)))
    assert is_disjunctive(ring) is True


def test_indiscrete_ring_is_not_disjunctive():
    c = FiniteCarrier(("a", "b"))
    verdict = is_disjunctive(FiniteRing(c, frozenset({0, 0b11})))
    assert not verdict
    a, x = verdict.items
    assert a.component_count() == 1 and not a.contains_point(x)


def test_rational_closed_disjunctive_with_sampled_witnesses(rng):
    assert is_disjunctive(RATIONAL_CLOSED) is True
    for _ in range(100):
        a = random_closed_set(rng)
        x = random_rational(rng)
        if a.contains_point(x):
            continue
        c = disjunctive_witness(RATIONAL_CLOSED, a, x)
        assert RATIONAL_CLOSED.contains(c)
        assert c.contains_point(x) and (c & a).is_empty()


def test_cobounded_not_disjunctive():
    assert not is_disjunctive(COBOUNDED_CLOSED)


# -- closed base -------------------------------------------------------------


def test_closed_base_examples():
    c = FiniteCarrier(("a", "b"))
    assert is_closed_base(FiniteRing(c, frozenset(range(4))))
    assert is_closed_base(FiniteRing(c, frozenset({0, 0b01, 0b11})))
    assert is_closed_base(RATIONAL_CLOSED)
    assert not is_closed_base(FiniteRing(c, frozenset({0b11})))
    assert is_complete_closed_base(RATIONAL_CLOSED)
    assert not is_complete_closed_base(BOUNDED_RATIONAL)


# -- Wallman base ------------------------------------------------------------


def test_wallman_base_counterexample_on_two_atoms():
    c = FiniteCarrier(("a", "b"))
    verdict = is_wallman_base(FiniteRing(c, frozenset({0, 0b01, 0b11})))
    assert not verdict
    assert verdict.clause == "point-separation"
    a, x = verdict.items
    assert str(a) == "{a}" and x == "b"


def test_wallman_base_line_tags():
    assert is_wallman_base(RATIONAL_CLOSED) is True
    assert is_wallman_base(C0_RATIONAL) is True
    assert not is_wallman_base(BOUNDED_RATIONAL)
    assert not is_wallman_base(COBOUNDED_CLOSED)


def test_screening_witnesses_on_sampled_disjoint_pairs(rng):
    hits = 0
    while hits < 60:
        a = random_closed_set(rng)
        b = random_closed_set(rng)
        if a.is_empty() or b.is_empty() or not (a & b).is_empty():
            continue
        hits += 1
        c1, c2 = screen_disjoint_members(RATIONAL_CLOSED, a, b)
        assert (c1 | c2).is_full()
        assert (a & c1).is_empty() and (b & c2).is_empty()


def test_separation_constructive_example():
    w1, w2 = separate_disjoint_closed(
        ivs((None, 0, False, True)), ivs((1, None, True, False))
    )
    assert (w1 & w2).is_empty()
    assert ivs((None, 0, False, True)).is_subset_of(w1)
    assert ivs((1, None, True, False)).is_subset_of(w2)
    assert w1.is_open() and w2.is_open()


def test_implication_chain_on_small_carriers():
    """Wallman base => complete closed base => closed base, exhaustively."""
    for n in (1, 2, 3):
        for ring in enumerate_complete_rings_sorted(n):
            if is_wallman_base(ring) is True:
                assert is_complete_closed_base(ring)
            if is_complete_closed_base(ring):
                assert is_closed_base(ring)


# -- enumeration counts ------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ring_counts_match_topology_counts(n):
    rings = enumerate_complete_rings_sorted(n)
    assert len(rings) == TOPOLOGY_COUNTS[n]
    assert len({r.members for r in rings}) == len(rings)


@pytest.mark.parametrize("n", [1, 2])
def test_enumeration_against_independent_oracle(n):
    rings = {r.members for r in enumerate_complete_rings_sorted(n)}
    oracle = set(oracle_enumerate_complete_rings(n))
    assert rings == oracle


def test_enumeration_oracle_n3_count():
    # the oracle scans all 2^8 families of subsets of a 3-atom carrier
    assert len(oracle_enumerate_complete_rings(3)) == TOPOLOGY_COUNTS[3]
