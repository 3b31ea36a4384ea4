"""Filters and ultrafilters in rings; the ultrafilter (Wallman) space.

Finite rings are handled by enumeration: the ultrafilters are exactly the
principal filters at the minimal nonempty members.  The line tags are
handled lattice-first: the representable points are the fixed ultrafilters
at rationals plus the symbolic end points, and every question about the
closed base {[A]} is answered through the identities [A] n [B] = [A n B],
[A] u [B] = [A u B], [A] = {} iff A = {}, never by enumerating points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import EmptyRing, NotInRing, NotMaximal, PreconditionUnmet
from .gts import FiniteGts, induced_gts
from .rings import FiniteRing, LineRing
from .sets import FiniteCarrier, FiniteSet, IntervalSet

__all__ = [
    "FilterInRing",
    "NotAFilterReport",
    "WallmanPoint",
    "TraceClass",
    "WallmanSpace",
    "enumerate_ultrafilters",
    "brute_force_ultrafilters",
    "maximal_completion",
    "wallman_space",
    "trace_class",
    "w_embedding",
    "embedding_report",
]


# ---------------------------------------------------------------------------
# filters


@dataclass(frozen=True)
class FilterInRing:
    """A filter given by finitely many generators, or symbolically by an end.

    ``kind``: ``principal`` (generated by the finite intersection of the
    generators), ``end-above``/``end-below`` (all members unbounded in that
    direction; line rings only), ``noncompact`` (all non-compact members;
    only a filter when no two non-compact members are disjoint).
    """

    ring: Union[FiniteRing, LineRing]
    generators: tuple = ()
    kind: str = "principal"

    def __post_init__(self):
        if self.kind not in ("principal", "end-above", "end-below", "noncompact"):
            raise ValueError("unknown filter kind %r" % (self.kind,))
        if self.kind != "principal" and isinstance(self.ring, FiniteRing):
            raise PreconditionUnmet("symbolic filter kinds live on line rings")
        if self.kind == "noncompact" and self.ring.tag != "c0-rational":
            raise PreconditionUnmet(
                "the non-compact members form a filter only when no two of them are disjoint"
            )
        for g in self.generators:
            if not self.ring.contains(g):
                raise NotInRing("generator %s is not a ring member" % (g,))
        if self.kind == "principal" and not self._stem_nonempty():
            raise PreconditionUnmet("generators have an empty intersection")
        if self.kind == "end-above" and not self.stem().unbounded_above():
            raise PreconditionUnmet("end filter needs a stem unbounded above")
        if self.kind == "end-below" and not self.stem().unbounded_below():
            raise PreconditionUnmet("end filter needs a stem unbounded below")

    def stem(self):
        """Intersection of the generators (the filter's minimum when principal)."""
        if isinstance(self.ring, FiniteRing):
            bits = self.ring.carrier.full_bits
            for g in self.generators:
                bits &= g.bits
            return FiniteSet(self.ring.carrier, bits)
        out = self.ring.carrier_set()
        for g in self.generators:
            out = out & g
        return out

    def _stem_nonempty(self) -> bool:
        s = self.stem()
        return not s.is_empty()

    def contains(self, a) -> bool:
        if not self.ring.contains(a):
            return False
        stem = self.stem()
        if self.kind == "principal":
            return stem.is_subset_of(a)
        if self.kind == "end-above":
            return _tail_inside(stem, a, above=True)
        if self.kind == "end-below":
            return _tail_inside(stem, a, above=False)
        # noncompact: every member that is not topologically compact
        return not self.ring.kc_contains(a) and not a.is_empty()

    def members_finite(self) -> list[FiniteSet]:
        assert isinstance(self.ring, FiniteRing)
        stem = self.stem()
        return [s for s in self.ring.member_sets() if stem.is_subset_of(s)]

    def __str__(self):
        if self.kind == "principal":
            return "filter<%s>" % (self.stem(),)
        return "filter<%s>" % self.kind


def _tail_inside(stem: IntervalSet, a: IntervalSet, above: bool) -> bool:
    """Does a contain stem truncated beyond some rational bound?"""
    left = stem - a
    return left.is_empty() or (not left.unbounded_above() if above else not left.unbounded_below())


def end_filter(ring: LineRing, above: bool) -> FilterInRing:
    return FilterInRing(ring, (), "end-above" if above else "end-below")


@dataclass(frozen=True)
class NotAFilterReport:
    """The completion formula produced a family that is not stable under
    intersection; the two witnesses meet every member of the input filter
    but their intersection does not."""

    a1: object
    a2: object

    def __bool__(self):
        return False

    def __str__(self):
        return "not a filter: %s, %s meet everything but %s does not" % (
            self.a1,
            self.a2,
            "their intersection",
        )


def maximal_completion(f: FilterInRing):
    """All sets meeting every member of the filter; a maximal filter when the
    result is intersection-stable, otherwise a report with a violating pair."""
    ring = f.ring
    if isinstance(ring, FiniteRing):
        stem = f.stem()
        meets = sorted(b for b in ring.members if b & stem.bits)
        pool = set(meets)
        for a1 in meets:
            for a2 in meets:
                if a1 & a2 not in pool:
                    return NotAFilterReport(
                        FiniteSet(ring.carrier, a1), FiniteSet(ring.carrier, a2)
                    )
        # intersection-stable, so the full intersection is the new minimum
        new_stem = ring.carrier.full_bits
        for b in meets:
            new_stem &= b
        return FilterInRing(ring, (FiniteSet(ring.carrier, new_stem),))
    return _line_maximal_completion(f)


def _line_maximal_completion(f: FilterInRing):
    ring = f.ring
    if f.kind in ("end-above", "end-below"):
        # the completion adds nothing: the end filter is already maximal
        # (two sets unbounded the same way share an unbounded tail)
        return f
    if f.kind == "noncompact":
        return f
    stem = f.stem()
    if stem.is_empty():
        raise PreconditionUnmet("not a filter: empty stem")
    if stem.component_count() == 1 and stem.components[0].is_point():
        return FilterInRing(ring, (stem,))
    # two distinct points of the stem witness the instability
    pts = stem.sample_points()
    picks = []
    for q in pts:
        if stem.contains_point(q) and len(picks) < 2 and q not in picks:
            picks.append(q)
    if len(picks) < 2:
        seen = stem.components[0]
        lo = seen.lo if seen.lo is not None else seen.hi - 1
        hi = seen.hi if seen.hi is not None else seen.lo + 1
        picks = [lo, (lo + hi) / 2 if lo != hi else hi]
    a1 = IntervalSet.point(picks[0])
    a2 = IntervalSet.point(picks[1])
    if ring.contains(a1) and ring.contains(a2):
        return NotAFilterReport(a1, a2)
    raise PreconditionUnmet("no point witnesses available in this ring tag")


# ---------------------------------------------------------------------------
# ultrafilter points


@dataclass(frozen=True)
class WallmanPoint:
    """A maximal filter, named by its shape instead of listing its members."""

    kind: str  # principal | fixed | plus-inf | minus-inf | free-point
    at: object = None  # minimal member (finite) or rational (fixed)

    def contains(self, ring, a) -> bool:
        if not ring.contains(a):
            return False
        if self.kind == "principal":
            return self.at.is_subset_of(a)
        if self.kind == "fixed":
            return a.contains_point(self.at)
        if self.kind == "plus-inf":
            return a.unbounded_above()
        if self.kind == "minus-inf":
            return a.unbounded_below()
        if self.kind == "free-point":
            return not a.is_bounded()
        raise ValueError(self.kind)

    def __str__(self):
        if self.kind == "principal":
            return "point@%s" % (self.at,)
        if self.kind == "fixed":
            return "point@%s" % (self.at,)
        return self.kind


def enumerate_ultrafilters(ring: FiniteRing) -> list[WallmanPoint]:
    """One point per minimal nonempty ring member."""
    nonempty = sorted(b for b in ring.members if b)
    if not nonempty:
        raise EmptyRing("the ring has no nonempty member")
    mins = [
        b for b in nonempty if not any(o != b and o & ~b == 0 for o in nonempty)
    ]
    return [WallmanPoint("principal", FiniteSet(ring.carrier, b)) for b in mins]


def brute_force_ultrafilters(ring: FiniteRing) -> list[frozenset[int]]:
    """Independent oracle: scan all subfamilies for maximal proper filters."""
    pool = sorted(b for b in ring.members if b)
    filters = []
    for pick in range(1, 1 << len(pool)):
        fam = frozenset(b for i, b in enumerate(pool) if pick >> i & 1)
        if not _is_filter_family(ring, fam):
            continue
        filters.append(fam)
    return [f for f in filters if not any(g != f and f < g for g in filters)]


def _is_filter_family(ring: FiniteRing, fam: frozenset[int]) -> bool:
    if not fam or 0 in fam:
        return False
    for a in fam:
        for b in fam:
            if a & b not in fam:
                return False
        for c in ring.members:
            if c and a & ~c == 0 and c not in fam:
                return False  # not upward closed
    return True


# ---------------------------------------------------------------------------
# trace classes [A]


@dataclass(frozen=True)
class TraceClass:
    """The closed set [A] = {ultrafilters containing A} of the Wallman space."""

    ring: Union[FiniteRing, LineRing]
    a: object

    def __post_init__(self):
        if not self.ring.contains(self.a):
            raise NotInRing("%s is not a ring member" % (self.a,))

    def __and__(self, other: "TraceClass") -> "TraceClass":
        return TraceClass(self.ring, self.a & other.a)

    def __or__(self, other: "TraceClass") -> "TraceClass":
        return TraceClass(self.ring, self.a | other.a)

    def is_empty(self) -> bool:
        return self.a.is_empty()

    def holds_point(self, p: WallmanPoint) -> bool:
        return p.contains(self.ring, self.a)

    def point_bits(self, points: list[WallmanPoint]) -> frozenset[int]:
        return frozenset(i for i, p in enumerate(points) if self.holds_point(p))

    def __str__(self):
        return "[%s]" % (self.a,)


def trace_class(ring, a) -> TraceClass:
    return TraceClass(ring, a)


# ---------------------------------------------------------------------------
# the Wallman space


@dataclass(frozen=True)
class WallmanSpace:
    ring: Union[FiniteRing, LineRing]
    points: tuple  # WallmanPoint, the representable points
    gts: Optional[FiniteGts]  # explicit small space (finite backend only)
    point_atoms: tuple  # atom names aligned with points (finite backend)
    classification: str
    compact_certificate: str

    def trace(self, a) -> TraceClass:
        return TraceClass(self.ring, a)

    def trace_bits(self, a) -> frozenset[int]:
        return TraceClass(self.ring, a).point_bits(list(self.points))

    def closed_base_sets(self) -> list[FiniteSet]:
        assert self.gts is not None
        carrier = self.gts.carrier
        out = []
        for b in sorted(self.ring.members):
            bits = 0
            for i, p in enumerate(self.points):
                if p.contains(self.ring, FiniteSet(self.ring.carrier, b)):
                    bits |= 1 << i
            out.append(FiniteSet(carrier, bits))
        return out

    def is_finite(self) -> bool:
        return self.gts is not None


def wallman_space(ring) -> WallmanSpace:
    if isinstance(ring, FiniteRing):
        points = enumerate_ultrafilters(ring)
        atoms = tuple("p%d" % i for i in range(len(points)))
        carrier = FiniteCarrier(atoms)
        closed_bits = set()
        for b in sorted(ring.members):
            member = FiniteSet(ring.carrier, b)
            bits = 0
            for i, p in enumerate(points):
                if p.contains(ring, member):
                    bits |= 1 << i
            closed_bits.add(bits)
        space_ring = FiniteRing(carrier, frozenset(closed_bits | {0, carrier.full_bits}))
        return WallmanSpace(
            ring,
            tuple(points),
            induced_gts(space_ring),
            atoms,
            "one point per minimal nonempty member",
            "finite: every filter is principal and extends to a minimal member",
        )
    if ring.window is not None:
        return WallmanSpace(
            ring,
            (),
            None,
            (),
            "all points fixed (bounded closed carrier)",
            "bounded closed carrier: every filter has a fixed cluster point",
        )
    if ring.tag == "rational-closed":
        pts = (WallmanPoint("minus-inf"), WallmanPoint("plus-inf"))
        return WallmanSpace(
            ring,
            pts,
            None,
            (),
            "fixed points at rationals, two free ends, unrepresented cut points; "
            "the topologization is the two-point extended line",
            "principal filters complete toward fixed or cut points; end filters are maximal",
        )
    if ring.tag == "c0-rational":
        pts = (WallmanPoint("free-point"),)
        return WallmanSpace(
            ring,
            pts,
            None,
            (),
            "fixed points at rationals plus a single free point "
            "(the non-compact members); one-point extension of the line",
            "filters missing every compact member sit inside the non-compact-member filter",
        )
    raise PreconditionUnmet("no Wallman classification certificate for tag %r" % (ring.tag,))


# ---------------------------------------------------------------------------
# the canonical embedding


def w_embedding(ring, x) -> WallmanPoint:
    """The fixed ultrafilter at a carrier point."""
    if isinstance(ring, FiniteRing):
        i = ring.carrier.index(x) if isinstance(x, str) else x
        xbit = 1 << i
        stem = ring.carrier.full_bits
        for b in ring.members:
            if b & xbit:
                stem &= b
        if not stem & xbit:
            raise NotMaximal("no ring member holds the point")
        nonempty = [b for b in ring.members if b]
        if any(o != stem and o & ~stem == 0 for o in nonempty):
            raise NotMaximal("the fixed family at %r is not maximal" % (x,))
        return WallmanPoint("principal", FiniteSet(ring.carrier, stem))
    q = x if isinstance(x, Fraction) else Fraction(x)
    if not ring.contains(IntervalSet.point(q)):
        raise NotMaximal("the fixed family at %s is not maximal in tag %s" % (q, ring.tag))
    return WallmanPoint("fixed", q)


@dataclass(frozen=True)
class EmbeddingReport:
    injective: bool
    collisions: tuple
    not_maximal: tuple
    dense_image: bool


def embedding_report(ring: FiniteRing) -> EmbeddingReport:
    carrier = ring.carrier
    seen: dict[int, str] = {}
    collisions = []
    failures = []
    embedded = {}
    for atom in carrier.atoms:
        try:
            p = w_embedding(ring, atom)
        except NotMaximal:
            failures.append(atom)
            continue
        embedded[atom] = p
        key = p.at.bits
        if key in seen:
            collisions.append((seen[key], atom))
        else:
            seen[key] = atom
    space = wallman_space(ring)
    image_bits = 0
    for i, p in enumerate(space.points):
        if any(q == p for q in embedded.values()):
            image_bits |= 1 << i
    image = FiniteSet(space.gts.carrier, image_bits)
    dense = space.gts.closure(image).is_full()
    return EmbeddingReport(not collisions, tuple(collisions), tuple(failures), dense)
