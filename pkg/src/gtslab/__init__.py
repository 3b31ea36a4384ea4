"""Exact workbench for generalized topological spaces on finite carriers and
the rational-endpoint line: rings of sets, ultrafilter (Wallman) spaces,
strict compactifications, products, and the continuity hierarchy."""

from .sets import (
    LINE,
    FiniteCarrier,
    FiniteSet,
    Interval,
    IntervalSet,
    interval,
    ivs,
    parse_interval_set,
)
from .rings import (
    BOUNDED_RATIONAL,
    C0_RATIONAL,
    COBOUNDED_CLOSED,
    RATIONAL_CLOSED,
    Counterexample,
    FiniteRing,
    LineRing,
    generate_ring,
    is_complete,
    is_disjunctive,
    is_wallman_base,
)

__all__ = [
    "LINE",
    "FiniteCarrier",
    "FiniteSet",
    "Interval",
    "IntervalSet",
    "interval",
    "ivs",
    "parse_interval_set",
    "BOUNDED_RATIONAL",
    "C0_RATIONAL",
    "COBOUNDED_CLOSED",
    "RATIONAL_CLOSED",
    "Counterexample",
    "FiniteRing",
    "LineRing",
    "generate_ring",
    "is_complete",
    "is_disjunctive",
    "is_wallman_base",
]
