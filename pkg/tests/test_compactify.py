"""Extension operator, additivity verdicts, one-point bundles, comparison."""

import pytest

from gtslab.compactify import (
    TotalSet,
    additivity_tests,
    alexandroff_strict,
    bounded_intervals_bundle,
    c0_base,
    compare,
    ex_operator,
    finite_compactifications,
    lemma_7_10_witness,
    one_point_topological_bundle,
    wallman_bundle,
    wallman_strict_compactification,
)
from gtslab.enumeration import enumerate_complete_rings_sorted
from gtslab.errors import (
    NotOpen,
    NoWitness,
    PreconditionUnmet,
    TopologicallyCompactInput,
)
from gtslab.gts import (
    AffineChain,
    FiniteGts,
    bounded_opens_line,
    c0_line,
    induced_gts,
    rational_interval,
    rational_line,
    rational_line_top,
)
from gtslab.rings import C0_RATIONAL, is_wallman_base
from gtslab.sets import IntervalSet, ivs
from gtslab.wallman import wallman_space


# -- the extension operator ----------------------------------------------------


def test_ex_keeps_bounded_opens_away_from_infinity():
    hat = alexandroff_strict(rational_line())
    got = ex_operator(hat, ivs((0, 1)))
    assert got == TotalSet(ivs((0, 1)), frozenset())


def test_ex_of_a_cobounded_open_reaches_infinity():
    hat = alexandroff_strict(rational_line())
    u = IntervalSet.full() - ivs((0, 1, True, True))
    assert ex_operator(hat, u) == TotalSet(u, frozenset({"inf"}))


def test_ex_of_the_whole_base_is_the_total_carrier():
    hat = alexandroff_strict(rational_line())
    got = ex_operator(hat, IntervalSet.full())
    assert got.rest == frozenset({"inf"}) and got.trace.is_full()


def test_ex_rejects_non_open_arguments():
    hat = alexandroff_strict(rational_line())
    with pytest.raises(NotOpen):
        ex_operator(hat, ivs((0, 1, True, True)))


def test_ex_is_monotone_and_trace_preserving(rng):
    from gtslab.sampling import random_open_set

    hat = alexandroff_strict(rational_line())
    for _ in range(40):
        u, v = random_open_set(rng), random_open_set(rng)
        eu, ev = hat.ex(u), hat.ex(v)
        assert eu.trace == u
        if u.is_subset_of(v):
            assert eu.rest <= ev.rest


# -- additivity ------------------------------------------------------------------


def test_alexandroff_on_the_rational_line_is_not_finitely_additive():
    hat = alexandroff_strict(rational_line())
    report = additivity_tests(hat)
    assert not report.finitely_additive
    u, v = report.finitely_additive.items
    assert {str(u), str(v)} == {"(-inf,0)", "(0,inf)"}
    # the witness in action: the union of the extensions misses infinity
    assert hat.ex(u).rest | hat.ex(v).rest == frozenset()
    assert hat.ex(u | v).rest == frozenset({"inf"})


def test_alexandroff_over_the_c0_line_is_finitely_additive():
    hat = alexandroff_strict(c0_line())
    report = additivity_tests(hat)
    assert report.finitely_additive is True
    assert report.admissibly_additive is True


def test_wallman_bundle_of_the_rational_line_is_admissibly_additive():
    w = wallman_bundle(rational_line())
    assert set(w.remainder) == {"-inf", "+inf"}
    report = additivity_tests(w)
    assert report.finitely_additive is True and report.admissibly_additive is True


def test_all_families_line_loses_admissible_additivity_to_the_chain():
    w = wallman_bundle(rational_line_top())
    report = additivity_tests(w)
    assert report.finitely_additive is True
    assert not report.admissibly_additive
    (chain,) = report.admissibly_additive.items
    assert isinstance(chain, AffineChain)


def test_wallman_strict_compactification_verdicts():
    assert wallman_strict_compactification(rational_line())
    assert wallman_strict_compactification(c0_line())
    got = wallman_strict_compactification(rational_line_top())
    assert not got
    assert "admissibly additive" in str(got)


def test_finite_weakly_normal_space_has_its_wallman_compactification():
    g = induced_gts(enumerate_complete_rings_sorted(2)[-1])  # the discrete one
    assert g.is_discrete()
    bundle = wallman_strict_compactification(g)
    assert bundle.remainder == ()


# -- layers and certificates -------------------------------------------------------


def test_alexandroff_native_layer_is_the_strongest_layer():
    hat = alexandroff_strict(rational_line())
    assert hat.native_equals_strongest_layer()
    assert hat.weakly_hausdorff()


def test_topological_one_point_bundle_generates_a_poorer_topology():
    base = bounded_opens_line()
    bundle = one_point_topological_bundle(base)
    witness = TotalSet(IntervalSet.full() - ivs((0, 1, True, True)), frozenset({"inf"}))
    assert bundle.tau_contains(witness)
    assert not bundle.op_s_contains(witness)
    assert not bundle.native_equals_strongest_layer()
    # in the strongest layer the added point only ever sits inside the whole
    # space, so that layer's generated topology cannot separate it
    full = TotalSet(IntervalSet.full(), frozenset({"inf"}))
    assert bundle.op_s_contains(full)
    assert not bundle.escapes("inf", IntervalSet.point(0), shapes="open")


def test_alexandroff_rejects_compact_inputs():
    with pytest.raises(TopologicallyCompactInput):
        alexandroff_strict(rational_interval())
    g = induced_gts(enumerate_complete_rings_sorted(1)[0])
    with pytest.raises(TopologicallyCompactInput):
        alexandroff_strict(g)


def test_certificates_of_the_shipped_bundles():
    for bundle in (
        alexandroff_strict(rational_line()),
        alexandroff_strict(c0_line()),
        wallman_bundle(rational_line()),
        bounded_intervals_bundle(c0_line()),
    ):
        cert = bundle.certify()
        assert cert.dense_image and cert.strict_embedding


# -- the wallmanian layer on finite bundles (cross-check of the equivalence) -------


def test_cov_w_is_a_generalized_topology_iff_additive_on_finite_bundles():
    for ring in enumerate_complete_rings_sorted(2):
        g = induced_gts(ring)
        for extra in (0, 1):
            for bundle in finite_compactifications(g, extra):
                report = bundle.additivity()
                verdict = bundle.cov_w_is_generalized_topology()
                assert (report.admissibly_additive is True) == isinstance(verdict, FiniteGts)


def test_finite_compactification_enumeration_validates():
    g = induced_gts(enumerate_complete_rings_sorted(1)[0])
    bundles = list(finite_compactifications(g, 1))
    assert bundles  # the one-point space does extend
    for b in bundles:
        assert b.certify().dense_image


# -- local compactness witnesses -----------------------------------------------------


def test_collar_inside_a_unit_interval():
    u, c = lemma_7_10_witness(rational_line(), ivs((0, 1)), "1/2")
    assert u == ivs(("1/4", "3/4"))
    assert c == ivs(("1/4", "3/4", True, True))


def test_collar_inside_the_whole_line():
    u, c = lemma_7_10_witness(rational_line(), IntervalSet.full(), 0)
    assert u == ivs((-1, 1))
    assert c == ivs((-1, 1, True, True))


def test_collar_picks_the_right_component():
    u, c = lemma_7_10_witness(rational_line(), ivs((0, 1), (2, 3)), "5/2")
    assert u.is_subset_of(ivs((2, 3)))
    assert c.is_subset_of(ivs((2, 3)))


def test_no_collar_when_compact_closed_sets_are_scarce():
    with pytest.raises(NoWitness):
        lemma_7_10_witness(bounded_opens_line(), ivs((0, 1)), "1/2")


# -- the one-free-point Wallman base ---------------------------------------------------


def test_c0_base_of_the_rational_line():
    ring = c0_base(rational_line())
    assert ring == C0_RATIONAL
    assert is_wallman_base(ring) is True
    assert len(wallman_space(ring).points) == 1
    assert ring.contains(ivs((0, 1, True, True)))
    assert not ring.contains(ivs((0, None, True, False)))


def test_c0_base_requires_local_compactness():
    with pytest.raises(PreconditionUnmet):
        c0_base(bounded_opens_line())


# -- comparison --------------------------------------------------------------------


def test_bundle_is_equivalent_to_itself():
    hat = alexandroff_strict(rational_line())
    assert compare(hat, hat).relation == "equivalent"


def test_alexandroff_strictly_exceeds_the_bounded_intervals_bundle():
    hat = alexandroff_strict(c0_line())
    y = bounded_intervals_bundle(c0_line())
    verdict = compare(y, hat)
    assert verdict.relation == "A-below-B"
    # the witness of non-equivalence: the bare line is open upstairs only
    assert verdict.witness == TotalSet(IntervalSet.full(), frozenset())


def test_remainder_size_mismatch_is_incomparable():
    hat = alexandroff_strict(rational_line())
    w = wallman_bundle(rational_line())
    assert compare(hat, w).relation == "incomparable"
