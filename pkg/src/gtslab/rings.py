"""Rings of subsets and their base predicates.

A ring here is a family of subsets closed under finite unions and finite
intersections.  Finite carriers get explicit member sets; the line carrier
ships three closed-form tags decided by membership predicates:

* ``rational-closed``   -- finite unions of closed intervals, rays and points
  with rational endpoints, plus the empty set and the full line (optionally
  restricted to a closed rational window such as the unit interval);
* ``c0-rational``       -- the rational-closed members that are bounded or
  unbounded in both directions;
* ``bounded-rational``  -- the bounded rational-closed members (no full line);
* ``cobounded-closed``  -- complements of bounded open sets plus {}, line
  (the closed sets of the line whose opens are the bounded open sets).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import UndecidableForBackend
from .sets import LINE, FiniteCarrier, FiniteSet, Interval, IntervalSet, interval

__all__ = [
    "Counterexample",
    "FiniteRing",
    "LineRing",
    "RATIONAL_CLOSED",
    "C0_RATIONAL",
    "BOUNDED_RATIONAL",
    "COBOUNDED_CLOSED",
    "unit_window",
    "generate_ring",
    "is_complete",
    "is_disjunctive",
    "is_closed_base",
    "is_complete_closed_base",
    "is_wallman_base",
    "separate_disjoint_closed",
]


@dataclass(frozen=True)
class Counterexample:
    """A falsifying witness; truth-tests as False so predicates read naturally."""

    clause: str
    detail: str
    items: tuple = ()

    def __bool__(self) -> bool:
        return False

    def __str__(self):
        parts = ", ".join(str(i) for i in self.items)
        return "counterexample[%s] %s (%s)" % (self.clause, self.detail, parts)


# ---------------------------------------------------------------------------
# finite rings


@dataclass(frozen=True)
class FiniteRing:
    carrier: FiniteCarrier
    members: frozenset[int]

    def __post_init__(self):
        full = self.carrier.full_bits
        for a in self.members:
            if not 0 <= a <= full:
                raise ValueError("member out of carrier range")

    def contains(self, s: FiniteSet) -> bool:
        return s.carrier == self.carrier and s.bits in self.members

    def member_sets(self) -> list[FiniteSet]:
        return [FiniteSet(self.carrier, b) for b in sorted(self.members)]

    def is_union_intersection_closed(self) -> bool:
        ms = self.members
        return all(a | b in ms and a & b in ms for a in ms for b in ms)

    def __str__(self):
        return "{%s}" % ", ".join(str(s) for s in self.member_sets())


def generate_ring(
    carrier: FiniteCarrier, generators: Iterable[FiniteSet], make_complete: bool = True
) -> FiniteRing:
    """Least family containing the generators closed under pairwise union and
    intersection; with ``make_complete`` the empty set and the carrier join in."""
    current = {g.bits for g in generators}
    if make_complete:
        current |= {0, carrier.full_bits}
    while True:
        fresh = set()
        ms = list(current)
        for i, a in enumerate(ms):
            for b in ms[i:]:
                u, n = a | b, a & b
                if u not in current:
                    fresh.add(u)
                if n not in current:
                    fresh.add(n)
        if not fresh:
            return FiniteRing(carrier, frozenset(current))
        current |= fresh


# ---------------------------------------------------------------------------
# line rings


@dataclass(frozen=True)
class LineRing:
    tag: str
    window: Optional[IntervalSet] = None  # closed rational window, e.g. the unit interval

    def __post_init__(self):
        if self.tag not in _LINE_TAGS:
            raise UndecidableForBackend("no decision procedures for tag %r" % (self.tag,))
        if self.window is not None and not self.window.is_closed():
            raise ValueError("window must be a closed interval set")

    @property
    def carrier(self):
        return LINE

    def carrier_set(self) -> IntervalSet:
        return self.window if self.window is not None else IntervalSet.full()

    def complement(self, s: IntervalSet) -> IntervalSet:
        return self.carrier_set() - s

    def contains(self, s: IntervalSet) -> bool:
        w = self.carrier_set()
        if not s.is_subset_of(w):
            return False
        if self.tag == "rational-closed":
            return _relatively_closed(s, w)
        if self.tag == "c0-rational":
            return _relatively_closed(s, w) and (
                s.is_bounded() or (s.unbounded_below() and s.unbounded_above())
            )
        if self.tag == "bounded-rational":
            return _relatively_closed(s, w) and s.is_bounded()
        if self.tag == "cobounded-closed":
            if s.is_empty() or s == w:
                return True
            return _relatively_closed(s, w) and (w - s).is_bounded()
        raise UndecidableForBackend(self.tag)

    def open_contains(self, s: IntervalSet) -> bool:
        """Is s the complement (within the window) of a ring member?"""
        return s.is_subset_of(self.carrier_set()) and self.contains(self.complement(s))

    def kc_contains(self, s: IntervalSet) -> bool:
        """Topologically compact ring members: closed plus bounded in this model."""
        return self.contains(s) and s.is_bounded()

    def __str__(self):
        if self.window is None:
            return self.tag
        return "%s[%s]" % (self.tag, self.window)


_LINE_TAGS = ("rational-closed", "c0-rational", "bounded-rational", "cobounded-closed")

RATIONAL_CLOSED = LineRing("rational-closed")
C0_RATIONAL = LineRing("c0-rational")
BOUNDED_RATIONAL = LineRing("bounded-rational")
COBOUNDED_CLOSED = LineRing("cobounded-closed")


def unit_window() -> IntervalSet:
    return IntervalSet((interval(0, 1, True, True),))


def _relatively_closed(s: IntervalSet, w: IntervalSet) -> bool:
    """Closed in the subspace topology of the window."""
    return (s.closure() & w) == s


# ---------------------------------------------------------------------------
# predicates


def is_complete(ring) -> bool:
    """Does the ring contain the empty set and the whole carrier?"""
    if isinstance(ring, FiniteRing):
        return 0 in ring.members and ring.carrier.full_bits in ring.members
    return ring.contains(IntervalSet.empty()) and ring.contains(ring.carrier_set())


def _finite_closed_sets(ring: FiniteRing) -> set[int]:
    """Closed sets of the topology generated by complements of ring members.

    Complements of an intersection/union-closed family are union/intersection
    closed, so the generated topology adds nothing beyond the mandatory empty
    set and carrier.
    """
    return set(ring.members) | {0, ring.carrier.full_bits}


def is_disjunctive(ring):
    """Can every point be engulfed by a ring member avoiding any disjoint
    member or foreign point?  Returns True or a counterexample pair."""
    if isinstance(ring, FiniteRing):
        carrier = ring.carrier
        full = carrier.full_bits
        singletons = [1 << i for i in range(carrier.size)]
        for a in sorted(set(ring.members) | set(singletons)):
            outside = full & ~a
            for i in range(carrier.size):
                if not outside >> i & 1:
                    continue
                x = 1 << i
                if not any(c & x and c & a == 0 for c in ring.members):
                    return Counterexample(
                        "separation",
                        "no member holds the point and avoids the set",
                        (FiniteSet(carrier, a), carrier.atoms[i]),
                    )
        return True
    return _line_disjunctive(ring)


def _line_disjunctive(ring: LineRing):
    if ring.tag in ("rational-closed", "c0-rational", "bounded-rational"):
        # witness: the degenerate point {x} is a member of all three tags
        return True
    # cobounded-closed has no bounded nonempty members, so no member can sit
    # inside the bounded complement of another member
    w = ring.carrier_set()
    a = w - IntervalSet((interval(0, 1),))
    return Counterexample(
        "separation",
        "every member holding the point is unbounded and meets the set",
        (a, Fraction(1, 2)),
    )


def disjunctive_witness(ring: LineRing, a: IntervalSet, x: Fraction) -> IntervalSet:
    """A ring member C with x in C inside the complement of a."""
    c = IntervalSet.point(x)
    if ring.contains(c) and (c & a).is_empty():
        return c
    raise UndecidableForBackend("no separation witness for tag %r" % (ring.tag,))


def is_closed_base(ring) -> bool:
    """Is the ring a closed base for the topology its complements generate?

    Every union/intersection-closed family is, since each closed set of that
    topology below the carrier is an intersection of members and any member
    already witnesses the separation; the check is kept explicit on finite
    carriers and structural on the line tags.
    """
    if isinstance(ring, FiniteRing):
        carrier = ring.carrier
        closed = _finite_closed_sets(ring)
        for a in closed:
            if a == carrier.full_bits:
                continue
            for i in range(carrier.size):
                if a >> i & 1:
                    continue
                x = 1 << i
                if not any(a & ~c == 0 and not c & x for c in ring.members):
                    return False
        return True
    if ring.tag in ("rational-closed", "c0-rational", "cobounded-closed"):
        # a closed set and an outside point always admit an enclosing member:
        # widen the set by the complement of a small ball around the point
        return True
    # bounded-rational: closed unbounded sets cannot be enclosed by a member
    return False


def is_complete_closed_base(ring) -> bool:
    return bool(is_closed_base(ring)) and is_complete(ring)


def is_wallman_base(ring):
    """Closed base + ring + point separation + screening of disjoint members.

    Returns True or a counterexample naming the violated clause.
    """
    if isinstance(ring, FiniteRing):
        return _finite_wallman(ring)
    return _line_wallman(ring)


def _finite_wallman(ring: FiniteRing):
    carrier = ring.carrier
    full = carrier.full_bits
    if not is_closed_base(ring):
        return Counterexample("closed-base", "not a closed base of its topology", ())
    closed = _finite_closed_sets(ring)
    singletons = {1 << i for i in range(carrier.size)}
    for a in sorted(closed | singletons):
        for i in range(carrier.size):
            if a >> i & 1:
                continue
            x = 1 << i
            if not any(c & x and c & a == 0 for c in ring.members):
                return Counterexample(
                    "point-separation",
                    "no member holds the point inside the set's complement",
                    (FiniteSet(carrier, a), carrier.atoms[i]),
                )
    ms = sorted(ring.members)
    for a1 in ms:
        for a2 in ms:
            if a1 & a2:
                continue
            if not any(
                c1 | c2 == full and a1 & c1 == 0 and a2 & c2 == 0
                for c1 in ms
                for c2 in ms
            ):
                return Counterexample(
                    "screening",
                    "no two members cover the carrier while avoiding the pair",
                    (FiniteSet(carrier, a1), FiniteSet(carrier, a2)),
                )
    return True


def _line_wallman(ring: LineRing):
    if ring.tag == "rational-closed":
        return True  # gap-midpoint screening, see screen_disjoint_members
    if ring.tag == "c0-rational":
        return True  # disjoint members cannot both be unbounded in both directions
    if ring.tag == "bounded-rational":
        return Counterexample(
            "screening",
            "two bounded members can never cover the line",
            (IntervalSet.point(0), IntervalSet.point(1)),
        )
    # cobounded-closed: fails point separation inside a bounded hole
    w = ring.carrier_set()
    return Counterexample(
        "point-separation",
        "no unbounded member fits inside a bounded hole",
        (w - IntervalSet((interval(0, 1),)), Fraction(1, 2)),
    )


# ---------------------------------------------------------------------------
# constructive separation on the line


def _pad_components(
    s: IntervalSet, other: IntervalSet, w: IntervalSet
) -> IntervalSet:
    """Open neighbourhood of s inside w: each component is stretched halfway
    toward the nearest component of the other set (by one unit when there is
    no neighbour on that side), staying relatively open in the window."""
    pads = []
    for c in s.components:
        lo, hi = c.lo, c.hi
        if lo is not None:
            lo = _stretch(lo, other, w, down=True)
        if hi is not None:
            hi = _stretch(hi, other, w, down=False)
        pads.append(Interval(lo, hi, False, False))
    out = IntervalSet.from_raw(pads) & w
    # re-open relative to the window so edges of a closed window stay inside
    return _relative_interior(out, w)


def _stretch(q: Fraction, other: IntervalSet, w: IntervalSet, down: bool):
    limit = None
    for c in other.components:
        if down:
            edge = c.hi
            if edge is not None and edge <= q and (limit is None or edge > limit):
                limit = edge
        else:
            edge = c.lo
            if edge is not None and edge >= q and (limit is None or edge < limit):
                limit = edge
    if limit is None:
        return q - 1 if down else q + 1
    if limit == q:
        return q
    return (q + limit) / 2


def _relative_interior(s: IntervalSet, w: IntervalSet) -> IntervalSet:
    """Largest relatively open subset of w inside s."""
    if w.is_full():
        return s.interior()
    inside = s & w
    hull = inside | (IntervalSet.full() - w)
    return hull.interior() & w


def separate_disjoint_closed(
    a: IntervalSet, b: IntervalSet, window: Optional[IntervalSet] = None
) -> tuple[IntervalSet, IntervalSet]:
    """Disjoint relatively open neighbourhoods of two disjoint closed sets."""
    w = window if window is not None else IntervalSet.full()
    if not (a & b).is_empty():
        raise ValueError("inputs are not disjoint")
    if a.is_empty():
        return IntervalSet.empty(), _relative_interior(w, w)
    if b.is_empty():
        return _relative_interior(w, w), IntervalSet.empty()
    w1 = _pad_components(a, b, w)
    w2 = _pad_components(b, a, w)
    # both sides stretch exactly halfway into each gap, so the pads meet at
    # excluded midpoints and never overlap
    assert (w1 & w2).is_empty(), "pads overlapped"
    assert a.is_subset_of(w1) and b.is_subset_of(w2)
    return w1, w2


def screen_disjoint_members(
    ring: LineRing, a1: IntervalSet, a2: IntervalSet
) -> tuple[IntervalSet, IntervalSet]:
    """Members C1, C2 with C1 u C2 = carrier, C1 missing a1 and C2 missing a2."""
    w1, w2 = separate_disjoint_closed(a1, a2, ring.window)
    w = ring.carrier_set()
    c1, c2 = w - w1, w - w2
    assert ring.contains(c1) and ring.contains(c2), "screening left the ring"
    assert (c1 | c2) == w and (a1 & c1).is_empty() and (a2 & c2).is_empty()
    return c1, c2
