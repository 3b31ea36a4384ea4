"""Strict compactifications: total-space layers, the Ex operator, additivity.

A bundle carries a base space, finitely many remainder atoms, and the data
of a topological compactification of the base's topologization.  Finite
bundles store the total topology explicitly.  Line bundles exploit an
invariant of all shipped constructions: whether a remainder atom may (or
must) belong to an open total set depends only on the *signature* of the
complement of its trace, the pair (unbounded below?, unbounded above?).
Signatures compose under union and intersection (both components are AND/OR
of the operands'), so the extension operator, closures, additivity and
bundle comparison all reduce to finite signature tables plus exact interval
arithmetic on traces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Optional

from .errors import (
    BackendUnsupported,
    NotOpen,
    NotWeaklyNormal,
    NoWitness,
    PreconditionUnmet,
    SearchSpaceTooLarge,
    TopologicallyCompactInput,
)
from .gts import (
    FiniteGts,
    LineGts,
    check_axioms,
    expanding_chain,
    separation_predicates,
)
from .rings import C0_RATIONAL, Counterexample, LineRing
from .sets import FiniteCarrier, FiniteSet, IntervalSet, interval, ivs
from .wallman import wallman_space

__all__ = [
    "TotalSet",
    "FiniteBundle",
    "LineBundle",
    "AdditivityReport",
    "BundleCertificate",
    "CompareVerdict",
    "NotApplicable",
    "alexandroff_strict",
    "wallman_bundle",
    "wallman_strict_compactification",
    "one_point_topological_bundle",
    "bounded_intervals_bundle",
    "ex_operator",
    "strongest_layer",
    "additivity_tests",
    "lemma_7_10_witness",
    "c0_base",
    "compare",
    "finite_compactifications",
]

Sig = tuple  # (unbounded below?, unbounded above?) of a trace complement

_ALL_SIGS = ((False, False), (False, True), (True, False), (True, True))


def _sig(s: IntervalSet) -> Sig:
    return (s.unbounded_below(), s.unbounded_above())


def _sig_ge(a: Sig, b: Sig) -> bool:
    return (a[0] or not b[0]) and (a[1] or not b[1])


@dataclass(frozen=True)
class TotalSet:
    """A subset of a bundle's total carrier: a trace plus remainder atoms."""

    trace: object
    rest: frozenset

    def __str__(self):
        if not self.rest:
            return str(self.trace)
        return "%s + {%s}" % (self.trace, ", ".join(sorted(self.rest)))


@dataclass(frozen=True)
class AdditivityReport:
    finitely_additive: object  # True | Counterexample (pair of opens)
    admissibly_additive: object  # True | Counterexample (family)

    def __str__(self):
        return "finitely=%s admissibly=%s" % (
            bool(self.finitely_additive),
            bool(self.admissibly_additive),
        )


@dataclass(frozen=True)
class BundleCertificate:
    dense_image: bool
    strict_embedding: bool
    compact_note: str


@dataclass(frozen=True)
class NotApplicable:
    reason: str
    witness: object = None

    def __bool__(self):
        return False

    def __str__(self):
        return "not applicable: %s" % self.reason


# ---------------------------------------------------------------------------
# finite bundles


@dataclass(frozen=True)
class FiniteBundle:
    """A topological compactification of a finite space, fully explicit."""

    base: FiniteGts
    carrier: FiniteCarrier  # base atoms followed by the remainder atoms
    remainder: tuple
    tau: frozenset  # total topology as bit masks over the extended carrier
    kind: str = "finite"

    def __post_init__(self):
        full = self.carrier.full_bits
        if 0 not in self.tau or full not in self.tau:
            raise PreconditionUnmet("total topology must contain {} and the carrier")
        for a in self.tau:
            for b in self.tau:
                if a | b not in self.tau or a & b not in self.tau:
                    raise PreconditionUnmet("total topology is not a topology")
        traces = {t & self.x_mask() for t in self.tau}
        if traces != set(self.base.opens):
            raise PreconditionUnmet("subspace topology differs from the base topologization")
        if self.closure_bits(self.x_mask()) != full:
            raise PreconditionUnmet("the base is not dense in the total space")

    def x_mask(self) -> int:
        return (1 << self.base.carrier.size) - 1

    def lift(self, s: FiniteSet) -> int:
        assert s.carrier == self.base.carrier
        return s.bits

    def closure_bits(self, bits: int) -> int:
        full = self.carrier.full_bits
        out = full
        for t in self.tau:
            c = full & ~t
            if bits & ~c == 0:
                out &= c
        return out

    def ex_bits(self, u: FiniteSet) -> int:
        if not self.base.is_open(u):
            raise NotOpen("%s is not open in the base" % (u,))
        complement = self.x_mask() & ~u.bits
        return self.carrier.full_bits & ~self.closure_bits(complement)

    def ex(self, u: FiniteSet) -> TotalSet:
        bits = self.ex_bits(u)
        return TotalSet(
            FiniteSet(self.base.carrier, bits & self.x_mask()),
            frozenset(
                a for i, a in enumerate(self.carrier.atoms) if bits >> i & 1 and a in self.remainder
            ),
        )

    def op_s_bits(self) -> frozenset:
        return frozenset(t for t in self.tau if (t & self.x_mask()) in self.base.opens)

    def op_w_bits(self) -> frozenset:
        return frozenset(self.ex_bits(u) for u in self.base.open_sets())

    def op_bits(self, layer: str) -> frozenset:
        if layer in ("native", "s"):
            return self.op_s_bits()
        if layer == "w":
            return self.op_w_bits()
        raise ValueError(layer)

    def as_gts(self, layer: str) -> FiniteGts:
        return FiniteGts(self.carrier, self.op_bits(layer))

    def additivity(self) -> AdditivityReport:
        opens = self.base.open_sets()
        op_w = self.op_w_bits()
        for u in opens:
            for v in opens:
                if self.ex_bits(u) | self.ex_bits(v) not in op_w:
                    pair = Counterexample(
                        "finite-additivity",
                        "the union of two extensions is no extension",
                        (u, v),
                    )
                    return AdditivityReport(pair, pair)
        # on a finite carrier every admissible family reduces to a finite
        # union, so pairwise additivity settles the admissible case too
        return AdditivityReport(True, True)

    def cov_w_is_generalized_topology(self):
        """Check the wallmanian families against the closure rules directly."""
        op_w = sorted(self.op_w_bits())
        fams = [
            frozenset(o for i, o in enumerate(op_w) if pick >> i & 1)
            for pick in range(1 << len(op_w))
        ]
        return check_axioms(self.carrier, fams)

    def certify(self) -> BundleCertificate:
        ok_embed = all(
            any(t & self.x_mask() == u for t in self.op_s_bits())
            for u in self.base.opens
        )
        return BundleCertificate(True, ok_embed, "finite total carrier")

    def remainder_open(self) -> bool:
        return self.x_mask() in self.tau

    def __str__(self):
        return "bundle[%s; remainder={%s}]" % (self.kind, ", ".join(self.remainder))


# ---------------------------------------------------------------------------
# line bundles


@dataclass(frozen=True)
class LineBundle:
    """A compactification of a line model, decided through signature tables.

    ``atom_sigs`` lists, per remainder atom, the trace-complement signatures
    at which the total topology has a basic neighbourhood of that atom.
    ``mode`` is ``downset`` when an open total set may drop the atom (the
    strongest-layer shape) and ``forced`` when membership of the atom is
    determined by the trace (the wallmanian-layer shape).  ``trace_pred``
    tells whether native members carry base-open or merely weakly open
    traces.
    """

    base: LineGts
    atom_sigs: tuple  # ((atom, frozenset of sigs), ...)
    mode: str
    kind: str
    trace_pred: str = "open"

    def __post_init__(self):
        if self.mode not in ("downset", "forced"):
            raise ValueError(self.mode)
        if self.trace_pred not in ("open", "weak"):
            raise ValueError(self.trace_pred)
        if self.base.ring.window is not None:
            raise TopologicallyCompactInput("windowed models are already compact")

    @property
    def remainder(self) -> tuple:
        return tuple(a for a, _ in self.atom_sigs)

    def sigs_of(self, atom: str) -> frozenset:
        for a, sigs in self.atom_sigs:
            if a == atom:
                return sigs
        raise KeyError(atom)

    # -- the closure/escape core

    def _shrinkable(self, s: Sig, t: IntervalSet, shapes: str) -> bool:
        """Is there an open trace with complement signature s avoiding the
        closed set t?  ``shapes`` says whether the trace must be base-open
        (the bundle's own generated topology) or merely weakly open (the
        natural topology of a topological compactification)."""
        if t == self.base.carrier_set():
            return False
        if not _sig_ge(s, _sig(t)):
            return False
        tag = self.base.ring.tag if shapes == "open" else "rational-closed"
        if s == (True, True):
            return True  # a small interval inside the open complement
        if s == (False, False):
            if tag == "cobounded-closed":
                return t.is_empty()  # only the full line is a cobounded open here
            return t.is_bounded()
        # one-sided rays exist only in the full rational model
        return tag == "rational-closed"

    def escapes(self, atom: str, t: IntervalSet, shapes: Optional[str] = None) -> bool:
        """Does the atom stay outside the total-space closure of t?"""
        shapes = shapes or self.trace_pred
        return any(self._shrinkable(s, t, shapes) for s in self.sigs_of(atom))

    def closure_atoms(self, t: IntervalSet) -> frozenset:
        if t.is_empty():
            return frozenset()
        return frozenset(a for a, _ in self.atom_sigs if not self.escapes(a, t))

    def closure(self, t: IntervalSet) -> TotalSet:
        """Total-space closure of a closed trace set."""
        return TotalSet(self.base.closure(t), self.closure_atoms(self.base.closure(t)))

    # -- layers

    def ex(self, u: IntervalSet) -> TotalSet:
        if not self.base.is_open(u):
            raise NotOpen("%s is not open in the base" % (u,))
        t = self.base.carrier_set() - u
        return TotalSet(u, frozenset(a for a, _ in self.atom_sigs if self.escapes(a, t)))

    def op_contains(self, v: TotalSet) -> bool:
        w = v.trace
        if self.trace_pred == "open":
            if not self.base.is_open(w):
                return False
        elif not self.base.is_weakly_open(w):
            return False
        t = self.base.carrier_set() - w
        if self.mode == "forced":
            return v.rest == frozenset(a for a, _ in self.atom_sigs if self.escapes(a, t))
        return all(self.escapes(a, t) for a in v.rest)

    def tau_contains(self, v: TotalSet) -> bool:
        """Membership in the total topology (weakly open traces allowed)."""
        w = v.trace
        if not self.base.is_weakly_open(w):
            return False
        t = self.base.carrier_set() - w
        return all(self.escapes(a, t) for a in v.rest)

    def op_s_contains(self, v: TotalSet) -> bool:
        """The strongest-layer membership: total-open with base-open trace."""
        return self.base.is_open(v.trace) and self.tau_contains(v)

    def op_w_contains(self, v: TotalSet) -> bool:
        if not self.base.is_open(v.trace):
            return False
        return v == self.ex(v.trace)

    def contains(self, layer: str, v: TotalSet) -> bool:
        if layer == "native":
            return self.op_contains(v)
        if layer == "s":
            return self.op_s_contains(v)
        if layer == "w":
            return self.op_w_contains(v)
        raise ValueError(layer)

    def native_equals_strongest_layer(self) -> bool:
        for w, _ in _probe_traces(self.base):
            for s in _subsets(self.remainder):
                if self.op_contains(TotalSet(w, s)) != self.op_s_contains(TotalSet(w, s)):
                    return False
        return True

    # -- verdicts

    def additivity(self) -> AdditivityReport:
        fin: object = True
        sigs = _realizable_closed_sigs(self.base)
        for s1 in sigs:
            for s2 in sigs:
                left = self._ex_atoms_of_sig(s1) | self._ex_atoms_of_sig(s2)
                meet = (s1[0] and s2[0], s1[1] and s2[1])
                if meet not in sigs:
                    continue
                if left != self._ex_atoms_of_sig(meet):
                    u = _canonical_open(self.base, s1)
                    v = _canonical_open(self.base, s2)
                    fin = Counterexample(
                        "finite-additivity",
                        "the union of two extensions is no extension",
                        (u, v),
                    )
                    break
            if fin is not True:
                break
        if fin is not True:
            return AdditivityReport(fin, fin)
        if self.base.all_families:
            chain = expanding_chain()
            full_atoms = self.ex(self.base.carrier_set()).rest
            member_atoms = self.ex(chain.member(1)).rest
            if full_atoms != member_atoms:
                adm = Counterexample(
                    "admissible-additivity",
                    "extending the union of the chain picks up remainder points "
                    "that no member extension reaches",
                    (chain,),
                )
                return AdditivityReport(True, adm)
        # small base: admissible families are essentially finite, so finite
        # additivity together with monotonicity settles them
        return AdditivityReport(True, True)

    def _ex_atoms_of_sig(self, s: Sig) -> frozenset:
        t = _canonical_closed(self.base, s)
        return frozenset(a for a, _ in self.atom_sigs if self.escapes(a, t))

    def certify(self) -> BundleCertificate:
        dense = all(
            not self.op_contains(TotalSet(IntervalSet.empty(), frozenset({a})))
            for a, _ in self.atom_sigs
        )
        lift = all(
            any(
                self.op_contains(TotalSet(w, s))
                for s in _subsets(self.remainder)
            )
            for w, is_open in _probe_traces(self.base)
            if is_open
        )
        return BundleCertificate(dense, lift, "maximal-filter argument for the shipped ring tags")

    def weakly_hausdorff(self) -> bool:
        """Is the total topologization Hausdorff (base points are always
        separated; atoms need escapes from points and from each other)?"""
        point = IntervalSet.point(Fraction(0))
        for a, _ in self.atom_sigs:
            if not self.escapes(a, point):
                return False
        ray_pairs = [
            (ivs((None, 0)), ivs((0, None))),
            (ivs((0, None)), ivs((None, 0))),
        ]
        for a1, _ in self.atom_sigs:
            for a2, _ in self.atom_sigs:
                if a1 >= a2:
                    continue
                ok = False
                for w1, w2 in ray_pairs:
                    if self.tau_contains(TotalSet(w1, frozenset({a1}))) and self.tau_contains(
                        TotalSet(w2, frozenset({a2}))
                    ):
                        ok = True
                        break
                if not ok:
                    return False
        return True

    def __str__(self):
        return "bundle[%s; remainder={%s}]" % (self.kind, ", ".join(self.remainder))


def _subsets(atoms: tuple) -> list:
    out = []
    for pick in range(1 << len(atoms)):
        out.append(frozenset(a for i, a in enumerate(atoms) if pick >> i & 1))
    return out


def _probe_traces(base: LineGts) -> list:
    """Canonical traces covering every (signature, openness) combination."""
    candidates = [
        IntervalSet.empty(),
        base.carrier_set(),
        ivs((0, 1)),
        base.carrier_set() - ivs((0, 1, True, True)),
        ivs((None, 0)),
        ivs((0, None)),
    ]
    probes = []
    for w in candidates:
        if base.is_weakly_open(w):
            probes.append((w, base.is_open(w)))
    return probes


def _realizable_closed_sigs(base: LineGts) -> list:
    return [s for s in _ALL_SIGS if _canonical_closed(base, s) is not None]


def _canonical_closed(base: LineGts, s: Sig) -> Optional[IntervalSet]:
    """A closed ring member with the given signature, when one exists."""
    options = {
        (False, False): [ivs((0, 1, True, True)), IntervalSet.empty()],
        (False, True): [ivs((0, None, True, False))],
        (True, False): [ivs((None, 0, False, True))],
        (True, True): [
            ivs((None, 0, False, True), (1, None, True, False)),
            base.carrier_set(),
        ],
    }
    for t in options[s]:
        if base.ring.contains(t) and _sig(t) == s:
            return t
    return None


def _canonical_open(base: LineGts, s: Sig) -> IntervalSet:
    """A base-open set whose complement carries the given signature."""
    options = {
        (False, False): [base.carrier_set() - ivs((0, 1, True, True)), base.carrier_set()],
        (False, True): [ivs((None, 0))],
        (True, False): [ivs((0, None))],
        (True, True): [ivs((0, 1)), IntervalSet.empty()],
    }
    for w in options[s]:
        if base.is_open(w) and _sig(base.carrier_set() - w) == s:
            return w
    raise NoWitness("no base-open set realizes signature %r" % (s,))


# ---------------------------------------------------------------------------
# constructions


def _require_noncompact_line(g) -> LineGts:
    if isinstance(g, FiniteGts):
        raise TopologicallyCompactInput("finite spaces are topologically compact")
    if g.ring.window is not None:
        raise TopologicallyCompactInput("bounded closed carriers are topologically compact")
    return g


def alexandroff_strict(g) -> LineBundle:
    """One added point whose neighbourhoods complement the compact closed sets."""
    base = _require_noncompact_line(g)
    return LineBundle(
        base,
        (("inf", frozenset({(False, False)})),),
        "downset",
        "alexandroff",
    )


def one_point_topological_bundle(g) -> LineBundle:
    """The one-point topological compactification of the base topologization,
    with weakly open traces; its strongest layer can be strictly poorer."""
    base = _require_noncompact_line(g)
    return LineBundle(
        base,
        (("inf", frozenset({(False, False)})),),
        "downset",
        "one-point-topological",
        trace_pred="weak",
    )


def bounded_intervals_bundle(g) -> LineBundle:
    """One-point strict compactification whose opens are generated by bounded
    open intervals and the complements of their closures; the full line is
    *not* open here, unlike in the Alexandroff bundle over the same base."""
    base = _require_noncompact_line(g)
    if base.ring.tag != "c0-rational":
        raise PreconditionUnmet(
            "the bounded-intervals compactification lives over the line whose "
            "opens are the bounded and cobounded sets"
        )
    return LineBundle(
        base,
        (("inf", frozenset({(False, False)})),),
        "forced",
        "bounded-intervals",
    )


def wallman_bundle(g):
    """The ultrafilter-space compactification with its wallmanian layer."""
    if isinstance(g, FiniteGts):
        return FiniteBundle(g, g.carrier, (), g.opens, "wallman")
    base = _require_noncompact_line(g)
    space = wallman_space(base.ring)
    atom_sigs = []
    for p in space.points:
        if p.kind == "plus-inf":
            atom_sigs.append(("+inf", frozenset({(False, False), (True, False)})))
        elif p.kind == "minus-inf":
            atom_sigs.append(("-inf", frozenset({(False, False), (False, True)})))
        elif p.kind == "free-point":
            atom_sigs.append(("w", frozenset({(False, False)})))
        else:
            raise BackendUnsupported("unclassified ultrafilter point %s" % (p,))
    return LineBundle(base, tuple(sorted(atom_sigs)), "forced", "wallman")


def wallman_strict_compactification(g):
    """The wallmanian layer as a strict compactification, when its extension
    operator is admissibly additive; otherwise the witness family."""
    rep = separation_predicates(g)
    if rep.weakly_normal is not True:
        raise NotWeaklyNormal(str(rep.weakly_normal))
    bundle = wallman_bundle(g)
    report = bundle.additivity()
    if report.admissibly_additive is True:
        return bundle
    return NotApplicable(
        "the extension operator is not admissibly additive",
        report.admissibly_additive,
    )


def ex_operator(bundle, u) -> TotalSet:
    return bundle.ex(u)


def strongest_layer(bundle):
    """Membership predicates of the strongest associated layer."""
    if isinstance(bundle, FiniteBundle):
        op = bundle.op_s_bits()
        return lambda bits: bits in op
    return bundle.op_s_contains


def additivity_tests(bundle) -> AdditivityReport:
    return bundle.additivity()


# ---------------------------------------------------------------------------
# local compactness witnesses and the one-point Wallman base


def lemma_7_10_witness(g: LineGts, v: IntervalSet, x) -> tuple:
    """Open u and compact closed c with x in u, u inside c, c inside v."""
    x = x if isinstance(x, Fraction) else Fraction(x)
    if not g.is_open(v):
        raise NotOpen("%s is not open" % (v,))
    if not v.contains_point(x):
        raise NoWitness("the point is outside the open set")
    comp = None
    for c in v.components:
        if c.contains(x):
            comp = c
            break
    assert comp is not None
    lo, lo_closed = comp.lo, comp.lo_closed
    hi, hi_closed = comp.hi, comp.hi_closed
    a = lo if lo is not None and lo_closed and lo == x else None
    if a is None:
        a = x - 1 if lo is None else (lo + x) / 2
        a_closed = False
    else:
        a_closed = True
    b = hi if hi is not None and hi_closed and hi == x else None
    if b is None:
        b = x + 1 if hi is None else (hi + x) / 2
        b_closed = False
    else:
        b_closed = True
    if a == b:
        u = IntervalSet.point(a)
        c_set = u
    else:
        u = IntervalSet((interval(a, b, a_closed, b_closed),))
        c_set = u.closure() & g.carrier_set()
    if not (g.is_open(u) and g.kc_contains(c_set) and c_set.is_subset_of(v)):
        raise NoWitness("no compact closed collar fits inside %s around %s" % (v, x))
    if not (u.contains_point(x) and u.is_subset_of(c_set)):
        raise NoWitness("collar construction failed")
    return u, c_set


def c0_base(g: LineGts) -> LineRing:
    """Compact members plus the members whose closed complements are all
    compact; a Wallman base whose ultrafilter space gains one free point."""
    base = _require_noncompact_line(g)
    rep = separation_predicates(base)
    if rep.weakly_normal is not True:
        raise PreconditionUnmet("the space must be weakly normal")
    try:
        lemma_7_10_witness(base, _canonical_open(base, (True, True)), Fraction(1, 2))
    except NoWitness:
        raise PreconditionUnmet("the topologization must be locally compact") from None
    return C0_RATIONAL


# ---------------------------------------------------------------------------
# comparison of strict compactifications


@dataclass(frozen=True)
class CompareVerdict:
    relation: str  # equivalent | A-below-B | B-below-A | incomparable
    mapping: Optional[tuple]
    witness: object = None

    def __str__(self):
        return self.relation


def compare(bundle_a, bundle_b, layer_a: str = "native", layer_b: str = "native",
            max_remainder: int = 6) -> CompareVerdict:
    """Search remainder bijections fixing the base pointwise; A-below-B means
    the identity-on-base mediator turns B into the bigger compactification."""
    ra, rb = bundle_a.remainder, bundle_b.remainder
    if len(ra) != len(rb):
        return CompareVerdict("incomparable", None, "remainder sizes differ")
    if len(ra) > max_remainder:
        raise SearchSpaceTooLarge("remainder larger than the configured bound")
    finite_a = isinstance(bundle_a, FiniteBundle)
    finite_b = isinstance(bundle_b, FiniteBundle)
    if finite_a != finite_b:
        raise BackendUnsupported("cannot compare bundles across backends")
    if not finite_a and bundle_a.base != bundle_b.base:
        raise PreconditionUnmet("line bundles must share their base space")
    best = None
    for perm in permutations(rb):
        mapping = tuple(zip(ra, perm))
        ab, wit_ab = _included(bundle_a, layer_a, bundle_b, layer_b, dict(mapping))
        ba, wit_ba = _included(bundle_b, layer_b, bundle_a, layer_a, {v: k for k, v in mapping})
        if ab and ba:
            return CompareVerdict("equivalent", mapping)
        if ab:
            best = CompareVerdict("A-below-B", mapping, wit_ba)
        elif ba and (best is None or best.relation == "incomparable"):
            best = CompareVerdict("B-below-A", mapping, wit_ab)
        elif best is None:
            best = CompareVerdict("incomparable", None, wit_ab or wit_ba)
    return best if best is not None else CompareVerdict("incomparable", None)


def _included(src, src_layer, dst, dst_layer, atom_map) -> tuple:
    """Are all src-layer opens (relabelled) opens of dst's layer?"""
    if isinstance(src, FiniteBundle):
        src_ops = src.op_bits(src_layer)
        dst_ops = dst.op_bits(dst_layer)
        relabel = _finite_relabel(src, dst, atom_map)
        for bits in sorted(src_ops):
            if relabel(bits) not in dst_ops:
                return False, FiniteSet(src.carrier, bits)
        return True, None
    for w, _open in _probe_traces(src.base):
        for s in _subsets(src.remainder):
            v = TotalSet(w, s)
            if src.contains(src_layer, v):
                mapped = TotalSet(w, frozenset(atom_map[a] for a in s))
                if not dst.contains(dst_layer, mapped):
                    return False, v
    return True, None


def _finite_relabel(src: FiniteBundle, dst: FiniteBundle, atom_map):
    idx = {}
    for i, a in enumerate(src.carrier.atoms):
        target = atom_map.get(a, a)
        idx[i] = dst.carrier.index(target)

    def relabel(bits: int) -> int:
        out = 0
        for i in range(src.carrier.size):
            if bits >> i & 1:
                out |= 1 << idx[i]
        return out

    return relabel


# ---------------------------------------------------------------------------
# finite compactification supply for the suites


def finite_compactifications(g: FiniteGts, extra: int) -> Iterator[FiniteBundle]:
    """All topological compactifications of a finite space with the given
    number of added points (subspace condition plus density)."""
    names = tuple("r%d" % i for i in range(extra))
    carrier = FiniteCarrier(g.carrier.atoms + names)
    full = carrier.full_bits
    middle = list(range(1, full))
    for pick in range(1 << len(middle)):
        tau = frozenset({0, full} | {m for i, m in enumerate(middle) if pick >> i & 1})
        ok = True
        for a in tau:
            for b in tau:
                if a | b not in tau or a & b not in tau:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        x_mask = (1 << g.carrier.size) - 1
        if {t & x_mask for t in tau} != set(g.opens):
            continue
        closure_x = full
        for t in tau:
            c = full & ~t
            if x_mask & ~c == 0:
                closure_x &= c
        if closure_x != full:
            continue
        yield FiniteBundle(g, carrier, names, tau)
