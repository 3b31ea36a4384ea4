"""Exhaustive instance supply for the theorem suites.

Complete rings of subsets on a small carrier are exactly the closed-set
lattices of topologies on its atoms, so the enumeration count must match the
number of topologies (1, 4, 29, 355 for 1..4 atoms).  A deliberately dumb
second enumerator over every subfamily of the powerset serves as the
independent oracle.
"""

from __future__ import annotations

from typing import Iterator

from .errors import BoundExceeded
from .rings import FiniteRing
from .sets import FiniteCarrier

__all__ = [
    "carrier_of_size",
    "enumerate_complete_rings",
    "oracle_enumerate_complete_rings",
    "TOPOLOGY_COUNTS",
]

MAX_ATOMS = 4

# number of topologies on n labelled points, n = 0..4
TOPOLOGY_COUNTS = (1, 1, 4, 29, 355)

_ATOM_NAMES = "abcdefgh"


def carrier_of_size(n: int) -> FiniteCarrier:
    return FiniteCarrier(tuple(_ATOM_NAMES[:n]))


def _closed_under_ops(members: frozenset[int]) -> bool:
    ms = list(members)
    for i, a in enumerate(ms):
        for b in ms[i + 1 :]:
            if a | b not in members or a & b not in members:
                return False
    return True


def enumerate_complete_rings(n: int) -> Iterator[FiniteRing]:
    """All complete rings of subsets on n atoms, in canonical order.

    Walks the subsets of the proper nonempty subsets and keeps the families
    that are union/intersection closed once the empty set and the carrier
    are adjoined.
    """
    if n > MAX_ATOMS:
        raise BoundExceeded("ring enumeration is limited to %d atoms" % MAX_ATOMS)
    carrier = carrier_of_size(n)
    full = carrier.full_bits
    middle = [m for m in range(1, full)]
    for pick in range(1 << len(middle)):
        members = frozenset(
            {0, full} | {m for i, m in enumerate(middle) if pick >> i & 1}
        )
        if _closed_under_ops(members):
            yield FiniteRing(carrier, members)


def oracle_enumerate_complete_rings(n: int) -> list[frozenset[int]]:
    """Independent oracle: scan every family of subsets and filter by the
    definition (contains the empty set and the carrier, closed under pairwise
    union and intersection)."""
    if n > MAX_ATOMS:
        raise BoundExceeded("oracle enumeration is limited to %d atoms" % MAX_ATOMS)
    carrier = carrier_of_size(n)
    full = carrier.full_bits
    subsets = list(range(full + 1))
    found = []
    for pick in range(1 << len(subsets)):
        members = frozenset(s for i, s in enumerate(subsets) if pick >> i & 1)
        if 0 not in members or full not in members:
            continue
        if _closed_under_ops(members):
            found.append(members)
    return found


def canonical_ring_key(ring: FiniteRing) -> tuple:
    return (len(ring.members), tuple(sorted(ring.members)))


def enumerate_complete_rings_sorted(n: int) -> list[FiniteRing]:
    return sorted(enumerate_complete_rings(n), key=canonical_ring_key)
