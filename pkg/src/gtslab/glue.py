"""Prescribed-remainder compactifications via the closed-set quotient lattice.

Two closed sets are identified when their symmetric difference contains no
topologically non-compact closed ring member.  On the shipped line models
the classes are keyed by the signature pair (unbounded below?, unbounded
above?), the lattice operations act componentwise, and a lattice
isomorphism from the closed sets of a finite compact space K glues K onto
the line as the remainder of a strict compactification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .compactify import (
    LineBundle,
    TotalSet,
    _canonical_open,
    _realizable_closed_sigs,
    _sig,
    _sig_ge,
    lemma_7_10_witness,
)
from .errors import (
    NotALatticeIso,
    NoWitness,
    PartitionInvalid,
    PreconditionUnmet,
)
from .gts import FiniteGts, LineGts, generate_gts, separation_predicates
from .sets import FiniteCarrier, IntervalSet

__all__ = [
    "QuotientLattice",
    "sim",
    "quotient_lattice",
    "GlueResult",
    "glue",
    "is_psi_correlated",
    "finite_remainder",
]


# ---------------------------------------------------------------------------
# the quotient lattice


@dataclass(frozen=True)
class QuotientLattice:
    """Classes of closed sets modulo compact symmetric difference."""

    keys: tuple  # sorted class keys; signature pairs on the line, one key on finite carriers
    source: str

    def meet(self, k1, k2):
        if k1 == "all" or k2 == "all":
            return "all"
        return (k1[0] and k2[0], k1[1] and k2[1])

    def join(self, k1, k2):
        if k1 == "all" or k2 == "all":
            return "all"
        return (k1[0] or k2[0], k1[1] or k2[1])

    @property
    def bottom(self):
        return self.keys[0]

    @property
    def top(self):
        return self.keys[-1]

    def class_count(self) -> int:
        return len(self.keys)

    def ultrafilters(self) -> list:
        """Maximal proper filters, by exhaustive search over key subsets."""
        keys = list(self.keys)
        filters = []
        for pick in range(1, 1 << len(keys)):
            fam = frozenset(k for i, k in enumerate(keys) if pick >> i & 1)
            if len(fam) == len(keys):
                continue  # not proper
            if not all(self.meet(a, b) in fam for a in fam for b in fam):
                continue
            if not all(b in fam for a in fam for b in keys if self._le(a, b)):
                continue
            filters.append(fam)
        return [f for f in filters if not any(g != f and f < g for g in filters)]

    def _le(self, a, b) -> bool:
        return self.meet(a, b) == a


def sim(g, a, b) -> bool:
    """Symmetric difference free of non-compact closed ring members."""
    if isinstance(g, FiniteGts):
        if not (g.is_closed(a) and g.is_closed(b)):
            raise PreconditionUnmet("both sets must be closed")
        return True
    ring = g.ring
    if not (ring.contains(a) and ring.contains(b)):
        raise PreconditionUnmet("both sets must be closed ring members")
    diff = a ^ b
    for s in _realizable_closed_sigs(g):
        if s == (False, False):
            continue
        if _sig_ge(_sig(diff), s):
            return False  # the difference swallows an unbounded closed member
    return True


def quotient_lattice(g) -> QuotientLattice:
    if isinstance(g, FiniteGts):
        return QuotientLattice(("all",), "finite: every closed set is compact")
    keys = tuple(sorted(_realizable_closed_sigs(g)))
    return QuotientLattice(keys, "line: classes keyed by complement-reaching rays")


def class_of(g, a):
    if isinstance(g, FiniteGts):
        return "all"
    if not g.ring.contains(a):
        raise PreconditionUnmet("%s is not a closed ring member" % (a,))
    return _sig(a)


# ---------------------------------------------------------------------------
# the glue construction


@dataclass(frozen=True)
class GlueResult:
    alpha_s: LineBundle
    alpha_w: LineBundle
    psi: tuple  # ((closed-set bits of K, class key), ...)
    psi_correlated: bool
    base_open_in_s_not_w: bool
    k_strict_subspace: bool
    weakly_hausdorff: bool


def _check_lattice_iso(k: FiniteGts, psi: dict, lattice: QuotientLattice) -> None:
    closed = sorted(k.closed_bits())
    if set(psi) != set(closed):
        raise NotALatticeIso("the map is not defined exactly on the closed sets")
    if len(set(psi.values())) != len(psi) or set(psi.values()) != set(lattice.keys):
        raise NotALatticeIso(
            "not a bijection onto the %d quotient classes" % lattice.class_count()
        )
    for a in closed:
        for b in closed:
            if psi[a & b] != lattice.meet(psi[a], psi[b]):
                raise NotALatticeIso("meet is not preserved")
            if psi[a | b] != lattice.join(psi[a], psi[b]):
                raise NotALatticeIso("join is not preserved")


def glue(x: LineGts, k: FiniteGts, psi: dict) -> GlueResult:
    """Attach the finite compact space k to the line model x along a lattice
    isomorphism psi from k's closed sets onto the quotient classes.

    psi maps closed-set bit masks of k to class keys.  Returns the two
    layered compactifications: the strongest one and the wallmanian one.
    """
    rep = separation_predicates(x)
    if rep.weakly_normal is not True:
        raise PreconditionUnmet("the base must be weakly normal")
    if x.ring.window is not None:
        raise PreconditionUnmet("the base must be topologically non-compact")
    try:
        lemma_7_10_witness(x, _canonical_open(x, (True, True)), Fraction(1, 2))
    except NoWitness:
        raise PreconditionUnmet("the base must be locally compact") from None
    k_rep = separation_predicates(k)
    if not k_rep.weakly_hausdorff:
        raise PreconditionUnmet("the remainder space must be weakly Hausdorff")
    if k.carrier.size == 0:
        raise PreconditionUnmet("the remainder space must be non-void")
    lattice = quotient_lattice(x)
    _check_lattice_iso(k, psi, lattice)

    inverse = {key: bits for bits, key in psi.items()}
    atom_sigs = []
    for i, atom in enumerate(k.carrier.atoms):
        sigs = frozenset(
            key for key in lattice.keys if not inverse[key] >> i & 1
        )
        atom_sigs.append((atom, sigs))
    atom_sigs = tuple(sorted(atom_sigs))
    alpha_s = LineBundle(x, atom_sigs, "downset", "glue-strongest")
    alpha_w = LineBundle(x, atom_sigs, "forced", "glue-wallmanian")

    whole = TotalSet(x.carrier_set(), frozenset())
    in_s = alpha_s.op_contains(whole)
    in_w = alpha_w.op_contains(whole)
    k_strict = all(
        alpha_s.op_contains(TotalSet(x.carrier_set(), s))
        for s in _atom_subsets(k.carrier.atoms)
    )
    return GlueResult(
        alpha_s,
        alpha_w,
        tuple(sorted(psi.items())),
        is_psi_correlated(x, k, psi),
        in_s and not in_w,
        k_strict,
        alpha_s.weakly_hausdorff(),
    )


def _atom_subsets(atoms):
    return [
        frozenset(a for i, a in enumerate(atoms) if pick >> i & 1)
        for pick in range(1 << len(atoms))
    ]


def is_psi_correlated(x: LineGts, k: FiniteGts, psi: dict) -> bool:
    """Do the admissible families of k arise exactly as the psi-companions of
    the admissible families of x?  On these backends this reduces to the open
    sets of k being exactly the complements of the psi-preimages of the
    closed-complement classes."""
    lattice = quotient_lattice(x)
    inverse = {key: bits for bits, key in psi.items()}
    full = k.carrier.full_bits
    reachable = {full & ~inverse[key] for key in lattice.keys}
    return reachable == set(k.opens)


# ---------------------------------------------------------------------------
# finite remainders from open partitions


def finite_remainder(x: LineGts, partition, c: IntervalSet) -> GlueResult:
    """Glue one point per open partition piece onto the line model.

    The pieces must be pairwise disjoint opens whose complement c is compact
    closed while every piece stays non-compact after adjoining c, and no
    closed piece-trace may split into two disjoint non-compact closed sets.
    """
    pieces = list(partition)
    union = IntervalSet.empty()
    for i, u in enumerate(pieces):
        if not x.is_open(u):
            raise PartitionInvalid("piece %d is not open" % i)
        for j, v in enumerate(pieces[:i]):
            if not (u & v).is_empty():
                raise PartitionInvalid("pieces %d and %d overlap" % (j, i))
        union = union | u
    if c != x.carrier_set() - union:
        raise PartitionInvalid("the compact core must be the complement of the pieces")
    if not x.kc_contains(c):
        raise PartitionInvalid("the core is not compact closed")
    envelopes = []
    for i, u in enumerate(pieces):
        e = x.carrier_set() - _others_union(pieces, i)  # the closed set u | c
        if x.kc_contains(e):
            raise PartitionInvalid("piece %d stays compact with the core attached" % i)
        envelopes.append(e)
    if x.ring.tag == "rational-closed":
        for i, e in enumerate(envelopes):
            if _sig(e) == (True, True):
                raise PartitionInvalid(
                    "piece %d admits two disjoint non-compact closed sets "
                    "(one toward each end)" % i
                )
    # psi per the partition: a class belongs to the image of a point set
    # exactly when its members stay non-compact on the matching envelopes
    n = len(pieces)
    carrier = FiniteCarrier(tuple("p%d" % i for i in range(n)))
    k = generate_gts(carrier, [[carrier.subset([a]) for a in carrier.atoms]])
    lattice = quotient_lattice(x)
    psi = {}
    for bits in range(1 << n):
        key = (False, False)
        for i in range(n):
            if bits >> i & 1:
                key = (key[0] or _sig(envelopes[i])[0], key[1] or _sig(envelopes[i])[1])
        psi[bits] = key
    if len(set(psi.values())) != len(psi):
        raise NotALatticeIso(
            "the partition does not split the %d quotient classes" % lattice.class_count()
        )
    return glue(x, k, psi)


def _others_union(pieces, i) -> IntervalSet:
    out = IntervalSet.empty()
    for j, u in enumerate(pieces):
        if j != i:
            out = out | u
    return out


# ---------------------------------------------------------------------------
# canonical gluings


def discrete_space(n: int) -> FiniteGts:
    carrier = FiniteCarrier(tuple("p%d" % i for i in range(n)))
    return generate_gts(carrier, [[carrier.subset([a]) for a in carrier.atoms]])


def canonical_glue(x: LineGts) -> GlueResult:
    """Glue the discrete space matching the quotient lattice's atom count,
    sending each new point to one minimal nonbottom class."""
    lattice = quotient_lattice(x)
    bottom = lattice.bottom
    atoms = [
        k
        for k in lattice.keys
        if k != bottom and not any(
            o not in (bottom, k) and lattice.meet(o, k) == o for o in lattice.keys
        )
    ]
    k = discrete_space(len(atoms))
    psi = {}
    for bits in range(1 << len(atoms)):
        key = bottom
        for i, ak in enumerate(atoms):
            if bits >> i & 1:
                key = lattice.join(key, ak)
        psi[bits] = key
    return glue(x, k, psi)
