"""Axiom checking, generation, smallification, subspaces, separation, compactness."""

import pytest

from gtslab.enumeration import carrier_of_size, enumerate_complete_rings_sorted
from gtslab.errors import (
    BackendUnsupported,
    LineTopologizeSymbolicOnly,
    NotACover,
    NotAdmissible,
)
from gtslab.gts import (
    AffineChain,
    ExplicitFamily,
    FiniteGts,
    TopologyDescriptor,
    Violation,
    c0_line,
    check_axioms,
    compact_flags,
    compactness,
    expanding_chain,
    generate_gts,
    induced_gts,
    is_small,
    is_strict_subset,
    partial_topologize,
    rational_interval,
    rational_line,
    rational_line_top,
    separate_closed,
    separation_predicates,
    smallify,
    subspace,
    topologize,
)
from gtslab.rings import FiniteRing
from gtslab.sets import FiniteCarrier, IntervalSet, ivs


def two_atoms():
    return FiniteCarrier(("a", "b"))


def essfin_families(opens):
    """All subfamilies of the given opens (essential finiteness is automatic)."""
    ops = sorted(opens)
    return [
        frozenset(o for i, o in enumerate(ops) if pick >> i & 1)
        for pick in range(1 << len(ops))
    ]


# -- check_axioms -------------------------------------------------------------


def test_smallification_of_a_ring_is_a_gts():
    c = two_atoms()
    opens = {0, 0b01, 0b11}
    got = check_axioms(c, essfin_families(opens))
    assert isinstance(got, FiniteGts)
    assert got.opens == frozenset(opens)


def test_missing_union_closure_is_a_g1_violation():
    c = two_atoms()
    got = check_axioms(c, [frozenset({0b01}), frozenset({0b10})])
    assert isinstance(got, Violation)
    assert got.rule == "G1"


def test_discrete_candidate_passes():
    c = two_atoms()
    got = check_axioms(c, essfin_families(range(4)))
    assert isinstance(got, FiniteGts)
    assert got.is_discrete()


def test_incomplete_family_collection_is_a_g2_violation():
    c = two_atoms()
    fams = essfin_families({0, 0b01, 0b11})
    fams.remove(frozenset({0b01, 0b11}))
    got = check_axioms(c, fams)
    assert isinstance(got, Violation)
    assert got.rule in ("G2", "G8", "G4")


# -- generate_gts -------------------------------------------------------------


def test_generate_from_empty_seed_is_indiscrete():
    c = two_atoms()
    g = generate_gts(c, [])
    assert g.opens == frozenset({0, 0b11})


def test_generate_from_singletons_is_discrete():
    c = two_atoms()
    g = generate_gts(c, [[c.subset(["a"]), c.subset(["b"])]])
    assert g.is_discrete()


def test_generate_from_one_family_of_opens_keeps_the_opens():
    c = carrier_of_size(3)
    opens = [c.empty(), c.subset(["a"]), c.subset(["a", "b"]), c.full()]
    g = generate_gts(c, [opens])
    assert g.opens == frozenset({0, 0b001, 0b011, 0b111})


def test_generated_gts_always_passes_the_axiom_check(rng):
    c = carrier_of_size(3)
    subsets = list(c.all_subsets())
    for _ in range(15):
        seed = [rng.sample(subsets, rng.randint(0, 3)) for _ in range(rng.randint(0, 2))]
        g = generate_gts(c, seed)
        verdict = check_axioms(c, [frozenset(f) for f in g.all_families()])
        assert isinstance(verdict, FiniteGts)
        assert verdict.opens == g.opens


# -- smallify / is_small ------------------------------------------------------


def test_finite_gts_is_small_and_smallify_is_identity():
    g = induced_gts(FiniteRing(two_atoms(), frozenset({0, 0b11})))
    assert smallify(g) == g
    assert is_small(g) is True


def test_rational_line_is_small():
    assert is_small(rational_line()) is True


def test_all_families_line_is_not_small():
    verdict = is_small(rational_line_top())
    assert not verdict
    (chain,) = verdict.items
    assert isinstance(chain, AffineChain)


def test_smallify_drops_the_extra_families():
    assert smallify(rational_line_top()) == rational_line()


# -- topologize ---------------------------------------------------------------


def test_topologize_finite_is_identity():
    ring = FiniteRing(two_atoms(), frozenset({0, 0b01, 0b11}))
    g = induced_gts(ring)
    assert g.opens == frozenset({0b11, 0b10, 0})
    assert topologize(g) == g
    assert partial_topologize(g) == g


def test_topologize_line_is_symbolic():
    t = topologize(rational_line())
    assert isinstance(t, TopologyDescriptor)
    assert t.is_open(ivs((0, 1)))
    assert not t.is_open(ivs((0, 1, True, False)))
    with pytest.raises(LineTopologizeSymbolicOnly):
        topologize(rational_line(), explicit=True)
    with pytest.raises(BackendUnsupported):
        partial_topologize(rational_line())


# -- subspaces ----------------------------------------------------------------


def test_whole_space_is_a_strict_subspace():
    g = induced_gts(FiniteRing(two_atoms(), frozenset({0, 0b01, 0b11})))
    assert subspace(g, g.carrier.full()) == FiniteGts(FiniteCarrier(("a", "b")), g.opens)
    assert is_strict_subset(g, g.carrier.full())


def test_interval_subspace_of_the_line_is_strict():
    g = rational_line()
    window = ivs((0, 1, True, True))
    sub = subspace(g, window)
    assert sub == rational_interval()
    assert is_strict_subset(g, window)


def test_every_finite_subspace_is_strict(rng):
    for ring in enumerate_complete_rings_sorted(3):
        g = induced_gts(ring)
        y = rng.choice(list(g.carrier.all_subsets()))
        if y.is_empty():
            continue
        assert is_strict_subset(g, y)
        tr = subspace(g, y, "trace")
        gen = subspace(g, y, "generated")
        assert tr.opens == gen.opens


# -- separation ---------------------------------------------------------------


def test_sierpinski_like_space_is_not_weakly_normal():
    ring = FiniteRing(two_atoms(), frozenset({0, 0b01, 0b11}))  # closed sets
    g = induced_gts(ring)
    rep = separation_predicates(g)
    assert not rep.weakly_normal
    a1, a2 = rep.weakly_normal.items
    assert {str(a1), str(a2)} == {"{a}", "{b}"}


def test_discrete_space_is_weakly_normal():
    g = generate_gts(two_atoms(), [[two_atoms().subset(["a"]), two_atoms().subset(["b"])]])
    rep = separation_predicates(g)
    assert rep.weakly_t1 and rep.weakly_hausdorff and rep.weakly_normal is True


def test_line_separation_of_two_rays():
    w1, w2 = separate_closed(
        rational_line(), ivs((None, 0, False, True)), ivs((1, None, True, False))
    )
    assert w1 == ivs((None, "1/2"))
    assert w2 == ivs(("1/2", None))


def test_c0_line_is_weakly_normal_and_separations_stay_in_model(rng):
    g = c0_line()
    rep = separation_predicates(g)
    assert rep.weakly_normal is True
    w1, w2 = separate_closed(g, ivs((0, 1, True, True)), ivs((None, -1, False, True), (2, None, True, False)))
    assert g.is_open(w1) and g.is_open(w2)
    assert (w1 & w2).is_empty()


# -- compactness --------------------------------------------------------------


def test_explicit_cover_of_unit_interval():
    target = ivs((0, 1, True, True))
    cover = ExplicitFamily((ivs(("-1/10", "3/5")), ivs(("2/5", "11/10"))))
    got = compactness(rational_line(), target, cover, "absolute")
    assert set(got.members) == set(cover.members)


def test_chain_has_no_finite_subcover_under_absolute_adverb():
    got = compactness(rational_line(), IntervalSet.full(), expanding_chain(), "absolute")
    assert not got
    assert "no single chain member" in str(got)


def test_chain_is_not_admissible_on_the_small_line():
    with pytest.raises(NotAdmissible):
        compactness(rational_line(), IntervalSet.full(), expanding_chain(), "admissible")


def test_chain_is_admissible_on_the_all_families_line():
    got = compactness(rational_line_top(), IntervalSet.full(), expanding_chain(), "admissible")
    assert not got


def test_chain_subcover_for_bounded_target():
    got = compactness(rational_line(), ivs((-2, 2, True, True)), expanding_chain(), "absolute")
    assert got
    assert got.members[0] == ivs((-3, 3))


def test_not_a_cover_is_reported():
    with pytest.raises(NotACover):
        compactness(
            rational_line(), ivs((0, 5, True, True)), ExplicitFamily((ivs((0, 1)),)), "absolute"
        )


def test_compactness_flags():
    assert compact_flags(rational_line()).admissible
    assert not compact_flags(rational_line()).absolute
    assert not compact_flags(rational_line_top()).admissible
    flags = compact_flags(rational_interval())
    assert flags.topological and flags.absolute and flags.admissible
    g = generate_gts(two_atoms(), [])
    assert compact_flags(g) == compact_flags(g).__class__(True, True, True, "finite carrier")


def test_greedy_subcover_on_messy_cover():
    target = ivs((0, 4, True, True))
    cover = ExplicitFamily(
        (ivs((-1, 1)), ivs(("1/2", "5/2")), ivs((2, 3)), ivs(("9/4", "9/2")), ivs((10, 11)))
    )
    got = compactness(rational_line(), target, cover, "absolute")
    union = IntervalSet.empty()
    for m in got.members:
        union = union | m
    assert target.is_subset_of(union)
    assert len(got.members) <= 4
