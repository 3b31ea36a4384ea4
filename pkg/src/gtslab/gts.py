"""Generalized topologies on the two carriers.

A generalized topology is a collection of admissible open families subject
to closure rules G0-G8:

* G0  the open sets are exactly the union of the admissible families;
* G1  the empty set and the carrier are open; opens are closed under finite
      unions and intersections;
* G2  every essentially finite family of opens is admissible;
* G3  the union of an admissible family is open;
* G4  a subfamily of an admissible family with open union is admissible;
* G5  a coarsening of an admissible family (same union, members enlarged
      within the opens) is admissible;
* G6  replacing each member of an admissible family by an admissible cover
      of it yields an admissible family;
* G7  a subset of the union of an admissible family whose traces on all
      members are open is open;
* G8  the trace of an admissible family on an open set is admissible.

On a finite carrier every family of opens is essentially finite, so G2
forces the admissible families to be *all* families of opens; a finite
space is therefore determined by its lattice of opens, and G7 adds nothing
once G1 holds (the glued set is a finite union of its open traces).  The
line backends keep the admissible families implicit: either the essentially
finite families of opens (small spaces) or all families of opens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import (
    BackendUnsupported,
    BoundExceeded,
    LineTopologizeSymbolicOnly,
    NotACover,
    NotAdmissible,
    PreconditionUnmet,
)
from .rings import (
    C0_RATIONAL,
    COBOUNDED_CLOSED,
    RATIONAL_CLOSED,
    Counterexample,
    FiniteRing,
    LineRing,
    _relative_interior,
    is_complete,
    separate_disjoint_closed,
    unit_window,
)
from .sets import LINE, FiniteCarrier, FiniteSet, IntervalSet, interval

__all__ = [
    "Violation",
    "FiniteGts",
    "LineGts",
    "ExplicitFamily",
    "AffineChain",
    "expanding_chain",
    "FiniteSubcover",
    "NoFiniteSubcoverCertificate",
    "check_axioms",
    "generate_gts",
    "induced_gts",
    "smallify",
    "is_small",
    "topologize",
    "partial_topologize",
    "subspace",
    "is_strict_subset",
    "separation_predicates",
    "separate_closed",
    "compactness",
    "compact_flags",
    "rational_line",
    "rational_line_top",
    "c0_line",
    "bounded_opens_line",
    "rational_interval",
    "rational_interval_top",
    "MODELS",
]


@dataclass(frozen=True)
class Violation:
    """A failed closure rule together with the offending witness."""

    rule: str
    detail: str
    witness: tuple = ()

    def __bool__(self):
        return False

    def __str__(self):
        return "violation[%s] %s" % (self.rule, self.detail)


# ---------------------------------------------------------------------------
# families of sets


@dataclass(frozen=True)
class ExplicitFamily:
    members: tuple

    def union(self):
        out = None
        for m in self.members:
            out = m if out is None else out | m
        return out

    def is_essentially_finite(self) -> bool:
        return True

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class AffineChain:
    """Strictly monotone chain of open intervals (lo0 - lo_step*n, hi0 + hi_step*n)."""

    lo0: Fraction
    lo_step: Fraction
    hi0: Fraction
    hi_step: Fraction
    n_start: int = 1

    def __post_init__(self):
        if self.lo_step < 0 or self.hi_step < 0 or (self.lo_step == 0 and self.hi_step == 0):
            raise ValueError("chain must strictly increase")

    def member(self, n: int) -> IntervalSet:
        lo = self.lo0 - self.lo_step * n
        hi = self.hi0 + self.hi_step * n
        return IntervalSet((interval(lo, hi),))

    def union(self) -> IntervalSet:
        lo = None if self.lo_step > 0 else self.lo0 - self.lo_step * self.n_start
        hi = None if self.hi_step > 0 else self.hi0 + self.hi_step * self.n_start
        return IntervalSet((interval(lo, hi),))

    def is_essentially_finite(self) -> bool:
        # a strictly increasing chain never attains its union at a finite stage
        return False

    def index_containing(self, target: IntervalSet) -> Optional[int]:
        """Smallest chain index whose member contains the target, if any."""
        if target.is_empty():
            return self.n_start
        if not target.is_subset_of(self.union()) or not target.is_bounded():
            return None  # every chain member is a bounded interval
        lo_t = target.components[0].lo
        hi_t = target.components[-1].hi
        n = self.n_start
        if self.lo_step > 0:
            n = max(n, _ceil_div(self.lo0 - lo_t, self.lo_step) + 1)
        if self.hi_step > 0:
            n = max(n, _ceil_div(hi_t - self.hi0, self.hi_step) + 1)
        for candidate in (n, n + 1):
            if target.is_subset_of(self.member(candidate)):
                while candidate > self.n_start and target.is_subset_of(self.member(candidate - 1)):
                    candidate -= 1
                return candidate
        return None

    def __str__(self):
        return "chain n>=%d: (%s - %s n, %s + %s n)" % (
            self.n_start,
            self.lo0,
            self.lo_step,
            self.hi0,
            self.hi_step,
        )


def _ceil_div(num: Fraction, den: Fraction) -> int:
    q = num / den
    return -((-q.numerator) // q.denominator)


def expanding_chain() -> AffineChain:
    """The canonical witness chain of intervals (-n, n)."""
    return AffineChain(Fraction(0), Fraction(1), Fraction(0), Fraction(1))


Family = Union[ExplicitFamily, AffineChain]


def _family_members(fam: Family, probe_count: int = 4):
    if isinstance(fam, ExplicitFamily):
        return list(fam.members)
    return [fam.member(fam.n_start + i) for i in range(probe_count)]


# ---------------------------------------------------------------------------
# the two space backends


@dataclass(frozen=True)
class FiniteGts:
    """A generalized topology on an enumerated carrier.

    The admissible families are all families of opens (see module notes),
    so the space is carried entirely by its lattice of opens.
    """

    carrier: FiniteCarrier
    opens: frozenset[int]

    def __post_init__(self):
        full = self.carrier.full_bits
        if 0 not in self.opens or full not in self.opens:
            raise ValueError("opens must contain the empty set and the carrier")

    def is_open(self, s: FiniteSet) -> bool:
        return s.carrier == self.carrier and s.bits in self.opens

    def is_weakly_open(self, s: FiniteSet) -> bool:
        # the generated topology adds no new opens on a finite carrier
        return self.is_open(s)

    def is_closed(self, s: FiniteSet) -> bool:
        return (self.carrier.full_bits & ~s.bits) in self.opens

    def open_sets(self) -> list[FiniteSet]:
        return [FiniteSet(self.carrier, b) for b in sorted(self.opens)]

    def closed_bits(self) -> frozenset[int]:
        full = self.carrier.full_bits
        return frozenset(full & ~b for b in self.opens)

    def cl_ring(self) -> FiniteRing:
        return FiniteRing(self.carrier, self.closed_bits())

    def closure(self, s: FiniteSet) -> FiniteSet:
        out = self.carrier.full_bits
        for c in self.closed_bits():
            if s.bits & ~c == 0:
                out &= c
        return FiniteSet(self.carrier, out)

    def is_admissible(self, fam: Family) -> bool:
        if isinstance(fam, AffineChain):
            return False
        return all(self.is_open(m) for m in fam)

    def is_topological(self) -> bool:
        return True

    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << self.carrier.size

    def all_families(self) -> list[frozenset[int]]:
        """Materialized admissible families; exponential, small carriers only."""
        ops = sorted(self.opens)
        if len(ops) > 14:
            raise BoundExceeded("too many opens to materialize the families")
        out = []
        for pick in range(1 << len(ops)):
            out.append(frozenset(o for i, o in enumerate(ops) if pick >> i & 1))
        return out

    def __str__(self):
        return "gts[%s; opens=%s]" % (
            ",".join(self.carrier.atoms),
            "{%s}" % ", ".join(str(s) for s in self.open_sets()),
        )


@dataclass(frozen=True)
class LineGts:
    """A line model: closed sets given by a ring tag, admissible families
    either the essentially finite open families (small) or all of them."""

    ring: LineRing
    all_families: bool = False

    @property
    def carrier(self):
        return LINE

    def carrier_set(self) -> IntervalSet:
        return self.ring.carrier_set()

    def is_open(self, s: IntervalSet) -> bool:
        return self.ring.open_contains(s)

    def is_weakly_open(self, s: IntervalSet) -> bool:
        """Open in the generated (natural, trace) topology; exact on rational data."""
        w = self.carrier_set()
        return s.is_subset_of(w) and _relative_interior(s, w) == s

    def is_closed(self, s: IntervalSet) -> bool:
        return self.ring.contains(s)

    def closure(self, s: IntervalSet) -> IntervalSet:
        return s.closure() & self.carrier_set()

    def is_admissible(self, fam: Family) -> bool:
        members = _family_members(fam)
        if not all(self.is_open(m) for m in members):
            return False
        if self.all_families:
            return True
        return fam.is_essentially_finite()

    def is_topological(self) -> bool:
        return False

    def kc_contains(self, s: IntervalSet) -> bool:
        return self.ring.kc_contains(s)

    def __str__(self):
        mode = "all-families" if self.all_families else "small"
        return "line-gts[%s; %s]" % (self.ring, mode)


Gts = Union[FiniteGts, LineGts]


# ---------------------------------------------------------------------------
# axioms and generation


def check_axioms(carrier: FiniteCarrier, families: Iterable[frozenset[int]]):
    """Validate an explicit finite candidate; returns a FiniteGts or a Violation."""
    cov = [frozenset(f) for f in families]
    op = set()
    for f in cov:
        op |= f
    full = carrier.full_bits
    as_set = lambda b: FiniteSet(carrier, b)

    # G1: empty/carrier present, finite unions and intersections stay open
    for a in sorted(op):
        for b in sorted(op):
            if a | b not in op:
                return Violation("G1", "opens not closed under union", (as_set(a), as_set(b)))
            if a & b not in op:
                return Violation("G1", "opens not closed under intersection", (as_set(a), as_set(b)))
    if 0 not in op:
        return Violation("G1", "empty set is not open", ())
    if full not in op:
        return Violation("G1", "carrier is not open", ())

    cov_set = set(cov)
    for fam in cov:
        u = 0
        for m in fam:
            u |= m
        if u not in op:
            return Violation("G3", "union of an admissible family is not open", (fam,))
        for w in sorted(op):
            trace = frozenset(m & w for m in fam)
            if trace not in cov_set:
                return Violation(
                    "G8", "trace of an admissible family on an open set is missing", (fam, as_set(w))
                )

    # G2 subsumes G4-G7 on a finite carrier: every family of opens must be admissible
    ops = sorted(op)
    if len(ops) > 16:
        raise BoundExceeded("axiom check limited to 16 opens")
    for pick in range(1 << len(ops)):
        fam = frozenset(o for i, o in enumerate(ops) if pick >> i & 1)
        if fam not in cov_set:
            return Violation(
                "G2",
                "an essentially finite family of opens is not admissible",
                (tuple(as_set(m) for m in sorted(fam)),),
            )
    return FiniteGts(carrier, frozenset(op))


def _ring_close(carrier: FiniteCarrier, bits: set[int]) -> frozenset[int]:
    current = set(bits) | {0, carrier.full_bits}
    while True:
        fresh = set()
        ms = list(current)
        for i, a in enumerate(ms):
            for b in ms[i:]:
                for c in (a | b, a & b):
                    if c not in current:
                        fresh.add(c)
        if not fresh:
            return frozenset(current)
        current |= fresh


def generate_gts(carrier: FiniteCarrier, seed: Iterable[Iterable[FiniteSet]]) -> FiniteGts:
    """Least generalized topology containing the seed families.

    The fixpoint alternates closing the opens under finite unions and
    intersections with re-admitting every family of opens; on a finite
    carrier the gluing rule is absorbed by union closure (a glued set is the
    finite union of its open traces), so the opens stabilize after the ring
    closure and the admissible families are all families of opens.
    """
    bits = set()
    for fam in seed:
        for m in fam:
            bits.add(m.bits)
    return FiniteGts(carrier, _ring_close(carrier, bits))


def induced_gts(ring: FiniteRing) -> FiniteGts:
    """The small space of a complete ring: opens are the member complements."""
    if not is_complete(ring):
        raise PreconditionUnmet("induced spaces need a complete ring")
    full = ring.carrier.full_bits
    return FiniteGts(ring.carrier, frozenset(full & ~m for m in ring.members))


def smallify(g: Gts) -> Gts:
    if isinstance(g, FiniteGts):
        return g  # every family of opens is already essentially finite
    return LineGts(g.ring, all_families=False)


def is_small(g: Gts):
    if isinstance(g, FiniteGts):
        return True
    if not g.all_families:
        return True
    if g.ring.window is None:
        return Counterexample(
            "essential-finiteness",
            "the expanding interval chain is admissible but has no finite subfamily with the same union",
            (expanding_chain(),),
        )
    return Counterexample(
        "essential-finiteness",
        "the backend admits every family of opens, beyond the essentially finite ones",
        (),
    )


@dataclass(frozen=True)
class TopologyDescriptor:
    """Symbolic topologization of a line model (the natural/trace topology)."""

    ring: LineRing

    def is_open(self, s: IntervalSet) -> bool:
        g = LineGts(self.ring)
        return g.is_weakly_open(s)

    def __str__(self):
        w = self.ring.window
        return "natural topology" if w is None else "natural topology on %s" % (w,)


def topologize(g: Gts, explicit: bool = False):
    if isinstance(g, FiniteGts):
        return g  # finite spaces are their own topologizations
    if explicit:
        raise LineTopologizeSymbolicOnly("line opens cannot be enumerated explicitly")
    return TopologyDescriptor(g.ring)


def partial_topologize(g: Gts) -> Gts:
    if isinstance(g, FiniteGts):
        return g  # fixed point: opens already form the generated topology
    raise BackendUnsupported("partial topologization is explicit on finite carriers only")


# ---------------------------------------------------------------------------
# subspaces


def subspace(g: Gts, y, mode: str = "trace") -> Gts:
    if mode not in ("trace", "generated"):
        raise ValueError("mode must be 'trace' or 'generated'")
    if isinstance(g, FiniteGts):
        names = y.members()
        sub_carrier = FiniteCarrier(names)
        traced = set()
        for b in g.opens:
            traced.add(_project_bits(g.carrier, b & y.bits, names))
        if mode == "generated":
            traced = _ring_close(sub_carrier, traced)
        return FiniteGts(sub_carrier, frozenset(traced))
    if mode == "generated":
        raise BackendUnsupported("generated subspaces are finite-backend only")
    if not y.is_closed() or not y.is_bounded():
        if y == g.carrier_set():
            return g
        raise BackendUnsupported("line subspaces must be bounded closed interval sets")
    return LineGts(LineRing("rational-closed", y), all_families=g.all_families)


def _project_bits(carrier: FiniteCarrier, bits: int, names: tuple[str, ...]) -> int:
    out = 0
    for j, name in enumerate(names):
        if bits >> carrier.index(name) & 1:
            out |= 1 << j
    return out


def is_strict_subset(g: Gts, y) -> bool:
    """Do the traced families already form a generalized topology on y?"""
    if isinstance(g, FiniteGts):
        # traces of opens are union/intersection closed, so generation is idle
        trace = subspace(g, y, "trace")
        gen = subspace(g, y, "generated")
        return trace.opens == gen.opens
    if y == g.carrier_set():
        return True
    if y.is_closed():
        # lifting trace families memberwise (pad included endpoints outward)
        # reproduces every essentially finite trace family, so the trace
        # collection is already generated
        return True
    raise BackendUnsupported("strictness is decided for closed interval subspaces only")


# ---------------------------------------------------------------------------
# separation


@dataclass(frozen=True)
class SeparationReport:
    weakly_t1: bool
    weakly_hausdorff: bool
    weakly_normal: Union[bool, Counterexample]

    def __str__(self):
        return "T1=%s hausdorff=%s normal=%s" % (
            self.weakly_t1,
            self.weakly_hausdorff,
            bool(self.weakly_normal),
        )


def _finite_disjoint_open_pair(g: FiniteGts, a1: int, a2: int):
    for w1 in sorted(g.opens):
        if a1 & ~w1:
            continue
        for w2 in sorted(g.opens):
            if a2 & ~w2 or w1 & w2:
                continue
            return w1, w2
    return None


def separation_predicates(g: Gts) -> SeparationReport:
    if isinstance(g, FiniteGts):
        carrier = g.carrier
        closed = g.closed_bits()
        t1 = all((1 << i) in closed for i in range(carrier.size))
        hausdorff = True
        for i in range(carrier.size):
            for j in range(i + 1, carrier.size):
                if _finite_disjoint_open_pair(g, 1 << i, 1 << j) is None:
                    hausdorff = False
        normal: Union[bool, Counterexample] = True
        singles = [1 << i for i in range(carrier.size)]
        pool = sorted(set(closed) | set(singles))
        for a1 in pool:
            for a2 in pool:
                if a1 & a2:
                    continue
                if _finite_disjoint_open_pair(g, a1, a2) is None:
                    normal = Counterexample(
                        "weak-normality",
                        "no disjoint open pair around the two sets",
                        (FiniteSet(carrier, a1), FiniteSet(carrier, a2)),
                    )
                    break
            if not normal:
                break
        return SeparationReport(t1, hausdorff, normal)
    # line models: the generated topology is the natural (trace) topology,
    # which is T1 and Hausdorff; weak normality depends on the opens
    if g.ring.tag == "cobounded-closed":
        witness = Counterexample(
            "weak-normality",
            "an unbounded closed member only fits inside the full line",
            (IntervalSet.point(0), g.carrier_set() - IntervalSet((interval(-1, 1),))),
        )
        return SeparationReport(True, True, witness)
    return SeparationReport(True, True, True)


def separate_closed(g: Gts, a, b):
    """Disjoint opens around two disjoint sets, each a singleton or closed."""
    if isinstance(g, FiniteGts):
        pair = _finite_disjoint_open_pair(g, a.bits, b.bits)
        if pair is None:
            return Counterexample("weak-normality", "no separating opens", (a, b))
        return FiniteSet(g.carrier, pair[0]), FiniteSet(g.carrier, pair[1])
    w1, w2 = separate_disjoint_closed(a, b, g.ring.window)
    if not (g.is_open(w1) and g.is_open(w2)):
        return Counterexample("weak-normality", "pads left the model opens", (a, b))
    return w1, w2


# ---------------------------------------------------------------------------
# compactness


@dataclass(frozen=True)
class FiniteSubcover:
    members: tuple

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NoFiniteSubcoverCertificate:
    reason: str

    def __bool__(self):
        return False

    def __str__(self):
        return "no finite subcover: %s" % self.reason


def compactness(g: Gts, target, cover: Family, adverb: str):
    """Finite subcover extraction under the three cover disciplines.

    ``topological`` admits weakly open members, ``absolute`` open members,
    ``admissible`` requires the cover to be an admissible family.
    """
    if adverb not in ("topological", "absolute", "admissible"):
        raise ValueError("unknown adverb %r" % (adverb,))
    members = _family_members(cover)
    if adverb == "admissible":
        if not g.is_admissible(cover):
            raise NotAdmissible("the cover is not an admissible family here")
    else:
        ok = g.is_weakly_open if adverb == "topological" else g.is_open
        for m in members:
            if not ok(m):
                raise NotACover("cover member is not %s open" % adverb)
    if isinstance(cover, AffineChain):
        if not target.is_subset_of(cover.union()):
            raise NotACover("chain does not cover the target")
        n = cover.index_containing(target)
        if n is None:
            return NoFiniteSubcoverCertificate(
                "no single chain member contains the target; the members increase strictly"
            )
        return FiniteSubcover((cover.member(n),))
    union = cover.union()
    if union is None or not target.is_subset_of(union):
        raise NotACover("family does not cover the target")
    return _extract_subcover(target, members)


def _extract_subcover(target, members):
    if isinstance(target, FiniteSet):
        # exhaustive search for a smallest subcover
        for size in range(len(members) + 1):
            got = _finite_subcover_of_size(target, members, size)
            if got is not None:
                return FiniteSubcover(tuple(got))
        raise NotACover("unreachable")
    # greedy: always keep a member that strictly shrinks the leftover; the
    # pool keeps covering the leftover, so this terminates on true covers
    chosen = []
    remaining = target
    pool = list(members)
    while not remaining.is_empty():
        best = best_left = None
        for m in pool:
            left = remaining - m
            if left == remaining:
                continue
            key = (left.component_count(), str(left))
            if best is None or key < (best_left.component_count(), str(best_left)):
                best, best_left = m, left
        if best is None:
            raise NotACover("greedy selection stalled; family does not cover the target")
        chosen.append(best)
        pool.remove(best)
        remaining = best_left
    return FiniteSubcover(tuple(chosen))


def _finite_subcover_of_size(target: FiniteSet, members, size):
    from itertools import combinations

    for combo in combinations(members, size):
        u = 0
        for m in combo:
            u |= m.bits
        if target.bits & ~u == 0:
            return combo
    return None


@dataclass(frozen=True)
class CompactnessFlags:
    topological: bool
    absolute: bool
    admissible: bool
    note: str


def compact_flags(g: Gts) -> CompactnessFlags:
    if isinstance(g, FiniteGts):
        return CompactnessFlags(True, True, True, "finite carrier")
    if g.ring.window is not None:
        return CompactnessFlags(
            True, True, True, "bounded closed carrier window (Heine-Borel on rational data)"
        )
    if g.all_families:
        return CompactnessFlags(
            False, False, False, "the expanding chain is admissible and has no finite subcover"
        )
    return CompactnessFlags(
        False,
        False,
        True,
        "admissible covers are essentially finite; the expanding chain defeats the other adverbs",
    )


# ---------------------------------------------------------------------------
# the shipped line models


def rational_line() -> LineGts:
    """The line whose opens are finite unions of rational open intervals."""
    return LineGts(RATIONAL_CLOSED)


def rational_line_top() -> LineGts:
    """Same opens, but every family of opens is admissible."""
    return LineGts(RATIONAL_CLOSED, all_families=True)


def c0_line() -> LineGts:
    """Opens are the bounded and the cobounded rational open sets."""
    return LineGts(C0_RATIONAL)


def bounded_opens_line() -> LineGts:
    """Opens are the bounded rational open sets plus the full line."""
    return LineGts(COBOUNDED_CLOSED)


def rational_interval() -> LineGts:
    """The unit interval with relatively open rational interval sets."""
    return LineGts(LineRing("rational-closed", unit_window()))


def rational_interval_top() -> LineGts:
    """The unit interval model with every family of opens admissible."""
    return LineGts(LineRing("rational-closed", unit_window()), all_families=True)


MODELS = {
    "rational-line": rational_line,
    "rational-line-top": rational_line_top,
    "c0-line": c0_line,
    "bounded-opens-line": bounded_opens_line,
    "rational-interval": rational_interval,
    "rational-interval-top": rational_interval_top,
}
