"""Seeded random generators for sampled line-backend checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .sets import Interval, IntervalSet

__all__ = [
    "random_rational",
    "random_interval_set",
    "random_closed_set",
    "random_open_set",
    "random_probes",
]


def random_rational(rng: random.Random, span: int = 12, denom: int = 6) -> Fraction:
    return Fraction(rng.randint(-span * denom, span * denom), denom)


def random_interval_set(
    rng: random.Random,
    max_components: int = 3,
    allow_rays: bool = True,
    closed: bool | None = None,
) -> IntervalSet:
    """A normalized interval set with small rational endpoints."""
    k = rng.randint(0, max_components)
    raw = []
    for _ in range(k):
        a, b = sorted((random_rational(rng), random_rational(rng)))
        style = rng.randrange(6)
        if closed is True:
            lc = hc = True
        elif closed is False:
            lc = hc = False
        else:
            lc, hc = rng.random() < 0.5, rng.random() < 0.5
        if style == 0 and a != b:
            raw.append(Interval(a, b, lc, hc if (a != b or (lc and hc)) else True))
        elif style == 1:
            raw.append(Interval(a, a, True, True))  # point
        elif style == 2 and allow_rays:
            raw.append(Interval(None, b, False, True if closed else hc))
        elif style == 3 and allow_rays:
            raw.append(Interval(a, None, True if closed else lc, False))
        else:
            if a == b:
                raw.append(Interval(a, a, True, True))
            else:
                raw.append(Interval(a, b, lc or a == b, hc or a == b))
    fixed = []
    for it in raw:
        lo_closed = it.lo_closed and it.lo is not None
        hi_closed = it.hi_closed and it.hi is not None
        if it.lo is not None and it.lo == it.hi:
            lo_closed = hi_closed = True
        fixed.append(Interval(it.lo, it.hi, lo_closed, hi_closed))
    return IntervalSet.from_raw(fixed)


def random_closed_set(rng: random.Random, max_components: int = 3, allow_rays: bool = True) -> IntervalSet:
    return random_interval_set(rng, max_components, allow_rays, closed=True)


def random_open_set(rng: random.Random, max_components: int = 3, allow_rays: bool = True) -> IntervalSet:
    s = random_interval_set(rng, max_components, allow_rays)
    return s.interior()


def random_probes(rng: random.Random, *sets_: IntervalSet, count: int = 100) -> list[Fraction]:
    """Probe points: every finite endpoint, endpoint +/- half-gaps, and random
    rationals, at least ``count`` in total."""
    pts: set[Fraction] = set()
    for s in sets_:
        for c in s.components:
            for e in (c.lo, c.hi):
                if e is not None:
                    pts.update((e, e - Fraction(1, 2), e + Fraction(1, 2)))
    while len(pts) < count:
        pts.add(random_rational(rng, span=16, denom=8))
    return sorted(pts)
