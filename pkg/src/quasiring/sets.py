"""Set representations for the two space backends.

Explicit spaces use plain frozensets of small ints (O(1) membership, cheap
hashing).  The convergent-sequence space needs sets over the infinite carrier
N ∪ {∞}; those are restricted to the finite/cofinite algebra, which is closed
under complement, union and intersection and contains every set the sequence
backend ever produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class _Infinity:
    """Sentinel for the limit point of the sequence space."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()


def sort_family(family: Iterable[frozenset]) -> list[frozenset]:
    """Deterministic order for set families: by cardinality, then pointwise."""
    return sorted(family, key=lambda s: (len(s), sorted(s)))


def family_repr(family: Iterable[frozenset]) -> str:
    return "{" + ", ".join("{" + " ".join(map(str, sorted(s))) + "}"
                           for s in sort_family(family)) + "}"


@dataclass(frozen=True)
class SeqSet:
    """A subset of N ∪ {∞} in the finite/cofinite algebra.

    ``finite`` lists points of N; with ``cofinal`` set the N-part is the
    complement of ``finite`` instead.  ``infinity`` records whether ∞ belongs
    to the set.  All four combinations are meaningful, e.g. {∞} is
    ``SeqSet(frozenset(), False, True)``.
    """

    finite: frozenset
    cofinal: bool = False
    infinity: bool = False

    @staticmethod
    def of(points: Iterable[int], infinity: bool = False) -> "SeqSet":
        return SeqSet(frozenset(points), False, infinity)

    @staticmethod
    def cofinite(excluded: Iterable[int], infinity: bool = True) -> "SeqSet":
        return SeqSet(frozenset(excluded), True, infinity)

    @staticmethod
    def empty() -> "SeqSet":
        return SeqSet(frozenset())

    @staticmethod
    def full() -> "SeqSet":
        return SeqSet(frozenset(), True, True)

    def contains(self, point) -> bool:
        if point is INF:
            return self.infinity
        in_finite = point in self.finite
        return not in_finite if self.cofinal else in_finite

    def complement(self) -> "SeqSet":
        return SeqSet(self.finite, not self.cofinal, not self.infinity)

    def is_empty(self) -> bool:
        return not self.cofinal and not self.finite and not self.infinity

    def union(self, other: "SeqSet") -> "SeqSet":
        a, b = self, other
        if a.cofinal and b.cofinal:
            nat = SeqSet(a.finite & b.finite, True)
        elif a.cofinal:
            nat = SeqSet(a.finite - b.finite, True)
        elif b.cofinal:
            nat = SeqSet(b.finite - a.finite, True)
        else:
            nat = SeqSet(a.finite | b.finite, False)
        return SeqSet(nat.finite, nat.cofinal, a.infinity or b.infinity)

    def intersection(self, other: "SeqSet") -> "SeqSet":
        return self.complement().union(other.complement()).complement()

    def issubset(self, other: "SeqSet") -> bool:
        return self.intersection(other) == self

    def __repr__(self):
        nat = "N\\" + repr(set(self.finite) or {}) if self.cofinal else repr(set(self.finite) or {})
        return f"SeqSet({nat}{' + inf' if self.infinity else ''})"
