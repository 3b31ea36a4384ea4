"""Shared exception types."""


class GtslabError(Exception):
    """Base class for all library errors."""


class MalformedInterval(GtslabError):
    """An interval literal that denotes no valid set (lower > upper, inclusive infinity, ...)."""


class CarrierMismatch(GtslabError):
    """Two values from different carriers were combined."""


class NonRationalProbe(GtslabError):
    """A membership probe that is not a rational number (or not a carrier atom)."""


class ParseError(GtslabError):
    """A document or literal failed to parse."""


class EmptyRing(GtslabError):
    """The ring has no nonempty member, so its ultrafilter space is empty."""


class NotInRing(GtslabError):
    """A set was used where a ring member was required."""


class NotMaximal(GtslabError):
    """The fixed filter at a point is not maximal in its ring."""


class UndecidableForBackend(GtslabError):
    """A closed-form ring tag lacks the decision procedure for this predicate."""


class NotOpen(GtslabError):
    """An open set was required."""


class NotACover(GtslabError):
    """The family does not cover the target set."""


class NotAdmissible(GtslabError):
    """The family is not an admissible covering of the space."""


class LineTopologizeSymbolicOnly(GtslabError):
    """Explicit open-set enumeration was requested on the line backend."""


class BackendUnsupported(GtslabError):
    """The operation is not defined for this combination of backends."""


class BoundExceeded(GtslabError):
    """An enumeration or carrier size bound was exceeded."""


class CarrierBoundExceeded(BoundExceeded):
    """A product carrier grew past the configured limit."""


class SearchSpaceTooLarge(GtslabError):
    """A comparison search space is larger than the configured bound."""


class NotWeaklyNormal(GtslabError):
    """The space fails the weak normality requirement."""


class WallmanNotCompactCertified(GtslabError):
    """No compactness certificate is available for the ultrafilter space."""


class TopologicallyCompactInput(GtslabError):
    """A one-point compactification of an already compact space was requested."""


class NoWitness(GtslabError):
    """A constructive witness search failed on inputs that were expected to admit one."""


class PreconditionUnmet(GtslabError):
    """An operation's stated precondition does not hold for the inputs."""


class NotALatticeIso(GtslabError):
    """The supplied map is not a lattice isomorphism."""


class PartitionInvalid(GtslabError):
    """The open partition handed to the finite-remainder construction is invalid."""


class BaseNotIntersectionStable(GtslabError):
    """The closed base is not stable under finite intersections."""


class UnknownSuite(GtslabError):
    """No theorem suite is registered under this id."""


class BadModelTag(GtslabError):
    """Unknown unit-interval model tag."""
