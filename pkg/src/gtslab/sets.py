"""Exact subset values over the two carriers.

Finite carriers hold enumerated atoms and represent subsets as bit masks.
The line carrier represents subsets as normalized finite unions of intervals
with endpoints in Q u {-inf, +inf}; all arithmetic is exact (``Fraction``),
no floating point is used anywhere.  Structural equality of normalized
values coincides with set equality, which makes every predicate decidable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import CarrierMismatch, MalformedInterval, NonRationalProbe, ParseError

__all__ = [
    "FiniteCarrier",
    "LINE",
    "LineCarrier",
    "FiniteSet",
    "Interval",
    "IntervalSet",
    "interval",
    "ivs",
    "parse_interval_set",
    "point_between",
]


# ---------------------------------------------------------------------------
# carriers


@dataclass(frozen=True)
class FiniteCarrier:
    """An enumerated carrier; atom names are pairwise distinct."""

    atoms: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("duplicate atom names: %r" % (self.atoms,))

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def full_bits(self) -> int:
        return (1 << self.size) - 1

    def index(self, atom: str) -> int:
        try:
            return self.atoms.index(atom)
        except ValueError:
            raise NonRationalProbe("atom %r is not in the carrier" % (atom,)) from None

    def subset(self, names: Iterable[str]) -> "FiniteSet":
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return FiniteSet(self, bits)

    def empty(self) -> "FiniteSet":
        return FiniteSet(self, 0)

    def full(self) -> "FiniteSet":
        return FiniteSet(self, self.full_bits)

    def all_subsets(self) -> Iterator["FiniteSet"]:
        for bits in range(1 << self.size):
            yield FiniteSet(self, bits)

    def __repr__(self):
        return "FiniteCarrier(%s)" % ", ".join(self.atoms)


@dataclass(frozen=True)
class LineCarrier:
    """The rational-structured real line carrier."""

    def __repr__(self):
        return "LINE"


LINE = LineCarrier()


# ---------------------------------------------------------------------------
# finite subsets as bit masks


@dataclass(frozen=True)
class FiniteSet:
    carrier: FiniteCarrier
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.carrier.full_bits:
            raise ValueError("bits out of range for carrier")

    def _check(self, other: "FiniteSet") -> None:
        if not isinstance(other, FiniteSet) or other.carrier != self.carrier:
            raise CarrierMismatch("finite-set operands come from different carriers")

    def __or__(self, other):
        self._check(other)
        return FiniteSet(self.carrier, self.bits | other.bits)

    def __and__(self, other):
        self._check(other)
        return FiniteSet(self.carrier, self.bits & other.bits)

    def __sub__(self, other):
        self._check(other)
        return FiniteSet(self.carrier, self.bits & ~other.bits)

    def __xor__(self, other):
        self._check(other)
        return FiniteSet(self.carrier, self.bits ^ other.bits)

    def __invert__(self):
        return FiniteSet(self.carrier, self.carrier.full_bits & ~self.bits)

    def is_empty(self) -> bool:
        return self.bits == 0

    def is_full(self) -> bool:
        return self.bits == self.carrier.full_bits

    def is_bounded(self) -> bool:
        return True

    def component_count(self) -> int:
        # atoms carry no adjacency, so every member is its own component
        return self.bits.bit_count()

    def is_subset_of(self, other: "FiniteSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def contains_point(self, atom: str) -> bool:
        return bool(self.bits >> self.carrier.index(atom) & 1)

    def members(self) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.carrier.atoms) if self.bits >> i & 1)

    def __iter__(self):
        return iter(self.members())

    def __contains__(self, atom) -> bool:
        return self.contains_point(atom)

    def __str__(self):
        return "{%s}" % ", ".join(self.members())

    __repr__ = __str__


# ---------------------------------------------------------------------------
# intervals

_INF = None  # endpoint marker inside Interval fields; never a member of the line


@dataclass(frozen=True)
class Interval:
    """One component: lo/hi in Q, or None for -inf/+inf respectively."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_closed: bool
    hi_closed: bool

    def validate(self) -> None:
        if self.lo is None and self.lo_closed:
            raise MalformedInterval("-inf cannot be an included endpoint")
        if self.hi is None and self.hi_closed:
            raise MalformedInterval("+inf cannot be an included endpoint")
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise MalformedInterval("lower endpoint exceeds upper endpoint")
            if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
                raise MalformedInterval("degenerate interval must be closed on both sides")

    def is_point(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    def contains(self, q: Fraction) -> bool:
        if self.lo is not None and (q < self.lo or (q == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (q > self.hi or (q == self.hi and not self.hi_closed)):
            return False
        return True

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        if _lo_lt(self, other):
            lo, lo_closed = other.lo, other.lo_closed
        elif _lo_lt(other, self):
            lo, lo_closed = self.lo, self.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if _hi_lt(self, other):
            hi, hi_closed = self.hi, self.hi_closed
        elif _hi_lt(other, self):
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        if lo is not None and hi is not None:
            if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
                return None
        return Interval(lo, hi, lo_closed, hi_closed)

    def __str__(self):
        if self.is_point():
            return "{%s}" % _fmt(self.lo)
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return "%s%s,%s%s" % (left, _fmt_lo(self.lo), _fmt_hi(self.hi), right)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _fmt_lo(q):
    return "-inf" if q is None else _fmt(q)


def _fmt_hi(q):
    return "inf" if q is None else _fmt(q)


def _lo_lt(a: Interval, b: Interval) -> bool:
    """Does a's lower endpoint sit strictly left of b's (as a boundary)?"""
    if a.lo is None:
        return b.lo is not None
    if b.lo is None:
        return False
    if a.lo != b.lo:
        return a.lo < b.lo
    return a.lo_closed and not b.lo_closed


def _hi_lt(a: Interval, b: Interval) -> bool:
    if b.hi is None:
        return a.hi is not None
    if a.hi is None:
        return False
    if a.hi != b.hi:
        return a.hi < b.hi
    return b.hi_closed and not a.hi_closed


def _mergeable(a: Interval, b: Interval) -> bool:
    """a precedes b (by lower endpoint); can they fuse into one component?"""
    if a.hi is None:
        return True
    if b.lo is None:
        return True
    if a.hi > b.lo:
        return True
    if a.hi == b.lo:
        return a.hi_closed or b.lo_closed
    return False


# ---------------------------------------------------------------------------
# interval sets


@dataclass(frozen=True)
class IntervalSet:
    """Normalized finite union of pairwise disjoint, non-adjacent intervals."""

    components: tuple[Interval, ...]

    @staticmethod
    def from_raw(raw: Iterable[Interval]) -> "IntervalSet":
        """Normalize a raw interval list; set-equal inputs produce identical values."""
        items = list(raw)
        for it in items:
            it.validate()
        items.sort(key=_sort_key)
        merged: list[Interval] = []
        for it in items:
            if merged and _mergeable(merged[-1], it):
                merged[-1] = _fuse(merged[-1], it)
            else:
                merged.append(it)
        return IntervalSet(tuple(merged))

    @staticmethod
    def empty() -> "IntervalSet":
        return IntervalSet(())

    @staticmethod
    def full() -> "IntervalSet":
        return IntervalSet((Interval(None, None, False, False),))

    @staticmethod
    def point(q) -> "IntervalSet":
        q = _rat(q)
        return IntervalSet((Interval(q, q, True, True),))

    # -- predicates

    def is_empty(self) -> bool:
        return not self.components

    def is_full(self) -> bool:
        return len(self.components) == 1 and self.components[0] == Interval(None, None, False, False)

    def is_bounded(self) -> bool:
        return self.is_empty() or (self.components[0].lo is not None and self.components[-1].hi is not None)

    def unbounded_below(self) -> bool:
        return bool(self.components) and self.components[0].lo is None

    def unbounded_above(self) -> bool:
        return bool(self.components) and self.components[-1].hi is None

    def component_count(self) -> int:
        return len(self.components)

    def contains_point(self, q) -> bool:
        q = _rat(q)
        return any(c.contains(q) for c in self.components)

    def is_subset_of(self, other: "IntervalSet") -> bool:
        return (self - other).is_empty()

    # -- boolean algebra

    def __invert__(self) -> "IntervalSet":
        out: list[Interval] = []
        prev_hi: Optional[Fraction] = None  # running left boundary of the gap
        prev_closed = False
        first = True
        for c in self.components:
            if first and c.lo is None:
                prev_hi, prev_closed = c.hi, c.hi_closed
                first = False
                continue
            lo = None if first else prev_hi
            lo_closed = False if first else not prev_closed
            gap = Interval(lo, c.lo, lo_closed, not c.lo_closed)
            if _nonempty(gap):
                out.append(gap)
            prev_hi, prev_closed = c.hi, c.hi_closed
            first = False
        if first:
            return IntervalSet.full()
        if prev_hi is not None:
            out.append(Interval(prev_hi, None, not prev_closed, False))
        return IntervalSet(tuple(out))

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a in self.components:
            for b in other.components:
                c = a.intersect(b)
                if c is not None:
                    out.append(c)
        return IntervalSet.from_raw(out)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet.from_raw(self.components + other.components)

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        return self & ~other

    def __xor__(self, other: "IntervalSet") -> "IntervalSet":
        return (self - other) | (other - self)

    # -- topology of the natural line, exact on rational data

    def closure(self) -> "IntervalSet":
        return IntervalSet.from_raw(
            Interval(c.lo, c.hi, c.lo is not None, c.hi is not None) for c in self.components
        )

    def interior(self) -> "IntervalSet":
        out = []
        for c in self.components:
            if c.is_point():
                continue
            out.append(Interval(c.lo, c.hi, False, False))
        return IntervalSet.from_raw(out)

    def is_open(self) -> bool:
        return all(not c.lo_closed and not c.hi_closed for c in self.components)

    def is_closed(self) -> bool:
        return all(
            (c.lo is None or c.lo_closed) and (c.hi is None or c.hi_closed) for c in self.components
        )

    def sample_points(self) -> list[Fraction]:
        """One interior rational per component plus every finite endpoint."""
        pts: list[Fraction] = []
        for c in self.components:
            if c.lo is not None:
                pts.append(c.lo)
            if c.hi is not None:
                pts.append(c.hi)
            pts.append(_inner_point(c))
        seen = set()
        uniq = []
        for p in pts:
            if p not in seen:
                seen.add(p)
                uniq.append(p)
        return uniq

    def __str__(self):
        if not self.components:
            return "{}"
        return " u ".join(str(c) for c in self.components)

    __repr__ = __str__


def _sort_key(it: Interval):
    if it.lo is None:
        return (0, Fraction(0), 0)
    return (1, it.lo, 0 if it.lo_closed else 1)


def _fuse(a: Interval, b: Interval) -> Interval:
    lo, lo_closed = a.lo, a.lo_closed
    if a.lo is not None and b.lo is not None and a.lo == b.lo:
        lo_closed = a.lo_closed or b.lo_closed
    if _hi_lt(a, b):
        return Interval(lo, b.hi, lo_closed, b.hi_closed)
    if _hi_lt(b, a):
        return Interval(lo, a.hi, lo_closed, a.hi_closed)
    return Interval(lo, a.hi, lo_closed, a.hi_closed or b.hi_closed)


def _nonempty(it: Interval) -> bool:
    if it.lo is None or it.hi is None:
        return True
    if it.lo > it.hi:
        return False
    if it.lo == it.hi:
        return it.lo_closed and it.hi_closed
    return True


def _inner_point(c: Interval) -> Fraction:
    if c.lo is None and c.hi is None:
        return Fraction(0)
    if c.lo is None:
        return c.hi - 1
    if c.hi is None:
        return c.lo + 1
    return (c.lo + c.hi) / 2


def _rat(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        try:
            return Fraction(q)
        except (ValueError, ZeroDivisionError):
            raise NonRationalProbe("cannot read %r as a rational" % (q,)) from None
    raise NonRationalProbe("probe %r is not rational" % (q,))


def point_between(a: Fraction, b: Fraction) -> Fraction:
    """A rational strictly between a and b (a < b)."""
    assert a < b
    return (a + b) / 2


# ---------------------------------------------------------------------------
# construction and literal syntax


def interval(lo, hi, lo_closed=False, hi_closed=False) -> Interval:
    it = Interval(None if lo is None else _rat(lo), None if hi is None else _rat(hi), lo_closed, hi_closed)
    it.validate()
    return it


def ivs(*specs) -> IntervalSet:
    """Build an interval set from (lo, hi[, lo_closed, hi_closed]) tuples or Intervals."""
    raw = []
    for s in specs:
        if isinstance(s, Interval):
            raw.append(s)
        else:
            raw.append(interval(*s))
    return IntervalSet.from_raw(raw)


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<point>\{\s*(?P<pv>-?\d+(?:/\d+)?)\s*\})
      | (?P<empty>\{\s*\})
      | (?P<iv>(?P<l>[\[(])\s*(?P<lo>-inf|[+-]?\d+(?:/\d+)?)\s*,\s*(?P<hi>\+?inf|[+-]?\d+(?:/\d+)?)\s*(?P<r>[\])]))
    )\s*""",
    re.VERBOSE,
)


def parse_interval_set(text: str) -> IntervalSet:
    """Parse the literal syntax, e.g. ``(-inf,0] u [1,2) u {3}``."""
    parts = [p.strip() for p in text.strip().split(" u ")] if text.strip() else []
    if text.strip() and not parts:
        raise ParseError("empty interval literal")
    raw: list[Interval] = []
    for part in parts:
        m = _TOKEN.fullmatch(part)
        if not m:
            raise ParseError("bad interval component %r" % (part,))
        if m.group("empty"):
            continue
        if m.group("point"):
            q = Fraction(m.group("pv"))
            raw.append(Interval(q, q, True, True))
            continue
        lo_txt, hi_txt = m.group("lo"), m.group("hi")
        lo = None if lo_txt == "-inf" else Fraction(lo_txt)
        hi = None if hi_txt in ("inf", "+inf") else Fraction(hi_txt)
        it = Interval(lo, hi, m.group("l") == "[", m.group("r") == "]")
        it.validate()
        raw.append(it)
    if not raw and text.strip() != "{}":
        if text.strip():
            raise ParseError("bad interval literal %r" % (text,))
    return IntervalSet.from_raw(raw)
