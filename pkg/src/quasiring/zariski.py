"""The zero-set topology of a function ring.

Closed sets are the common vanishing loci V(S).  With the value algebra free
of zero divisors every V(f) is clopen and the family is a genuine topology;
with zero divisors present the construction is refused, carrying the witness
pair that breaks it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import zero_divisors
from .errors import ZeroDivisorHypothesis
from .funcspace import FunctionRing
from .sets import SeqSet, sort_family
from .topology import (
    ExplicitSpace,
    SequenceSpace,
    clopen_base_topology,
    compare_topologies,
)

MATERIALIZE_CAP = 2 ** 16


@dataclass(frozen=True)
class ZariskiTopology:
    space: object
    closed_family: tuple | None        # sorted; None when only the predicate fits
    opens: frozenset | None
    union_closed: bool
    union_witness: tuple | None = None

    def is_closed(self, s) -> bool:
        if self.closed_family is not None:
            return frozenset(s) in set(self.closed_family)
        raise ValueError("family not materialized")

    def as_space(self) -> ExplicitSpace:
        if self.opens is None:
            raise ValueError("family not materialized")
        return ExplicitSpace(self.space.point_count, self.opens)


class SymbolicZariski:
    """Sequence-backend zero-set topology, as a membership predicate.

    Every V(f) is a finite subset of N or a cofinite set containing ∞;
    intersections of such sets stay in that family, which is exactly the
    closed family of the sequence space itself.
    """

    def __init__(self):
        self.space = SequenceSpace()

    def is_closed(self, s: SeqSet) -> bool:
        return self.space.is_closed(s)


def _require_no_zero_divisors(ring: FunctionRing):
    bad = zero_divisors(ring.algebra)
    if bad:
        raise ZeroDivisorHypothesis(
            "zero-set topology needs a zero-divisor-free value algebra; "
            f"witness {bad[0][0]}·{bad[0][1]} = 0", witness=bad[0])


def zariski_closed_family(ring: FunctionRing) -> ZariskiTopology:
    """All intersections of the single-function zero sets V(f).

    Union closure is checked and reported (it holds under the zero-divisor
    hypothesis: V(f) ∪ V(g) = V(f·g)).
    """
    _require_no_zero_divisors(ring)
    space = ring.space
    basic = {ring.zero_set(f) for f in ring.elements}
    closed = set(basic)
    closed.add(space.full)  # V of the empty set
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in basic:
                c = a & b
                if c not in closed:
                    if len(closed) >= MATERIALIZE_CAP:
                        return ZariskiTopology(space, None, None, True)
                    closed.add(c)
                    new.append(c)
        frontier = new
    union_closed, witness = True, None
    for a in closed:
        for b in closed:
            if a | b not in closed:
                union_closed, witness = False, (a, b)
                break
        if not union_closed:
            break
    opens = frozenset(space.full - c for c in closed)
    return ZariskiTopology(space, tuple(sort_family(closed)), opens,
                           union_closed, witness)


def symbolic_zariski() -> SymbolicZariski:
    return SymbolicZariski()


def compare_T1_TZ_T(ring: FunctionRing):
    """(T1 vs TZ, TZ vs T, T1 vs T) for ring = C((Z,T), Y)."""
    _require_no_zero_divisors(ring)
    space = ring.space
    t1 = clopen_base_topology(space)
    tz = zariski_closed_family(ring).as_space()
    return (compare_topologies(t1, tz),
            compare_topologies(tz, space),
            compare_topologies(t1, space))
