"""Finite algebraic structures given by operation tables.

A carrier {0..m-1} with a multiplication table, a distinguished null element
(absorbing on a chosen side), an optional unit, and an optional addition table
with the null element as identity.  The carrier always wears the discrete
topology: a finite totally separated space has no other choice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BadTable, NonAssociativeNilpotentQuery

TWO_SIDED = "two-sided"
LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class StructureFlags:
    associative: bool
    commutative: bool
    additive_associative: bool
    additive_commutative: bool
    distributive: bool
    has_unit: bool
    char_two: bool
    zero_divisor_free: bool


@dataclass(frozen=True)
class AlgebraTable:
    carrier_size: int
    mul: tuple                      # m x m tuple of tuples
    zero: int = 0
    zero_side: str = TWO_SIDED
    unit: int | None = None
    unit_side: str = TWO_SIDED
    add: tuple | None = None
    name: str = ""

    def __post_init__(self):
        m = self.carrier_size
        if m < 2:
            raise BadTable("carrier must have at least two elements")
        _check_table(self.mul, m, "mul")
        if self.add is not None:
            _check_table(self.add, m, "add")
        z = self.zero
        if self.zero_side in (LEFT, TWO_SIDED):
            if any(self.mul[z][a] != z for a in range(m)):
                raise BadTable("declared zero is not left-absorbing")
        if self.zero_side in (RIGHT, TWO_SIDED):
            if any(self.mul[a][z] != z for a in range(m)):
                raise BadTable("declared zero is not right-absorbing")
        if self.unit is not None:
            e = self.unit
            if self.unit_side in (LEFT, TWO_SIDED):
                if any(self.mul[e][a] != a for a in range(m)):
                    raise BadTable("declared unit fails its left law")
            if self.unit_side in (RIGHT, TWO_SIDED):
                if any(self.mul[a][e] != a for a in range(m)):
                    raise BadTable("declared unit fails its right law")
        if self.add is not None:
            if any(self.add[z][a] != a or self.add[a][z] != a for a in range(m)):
                raise BadTable("additive identity must be the zero element")

    @property
    def elements(self) -> range:
        return range(self.carrier_size)

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def plus(self, a: int, b: int) -> int:
        if self.add is None:
            raise BadTable("algebra has no addition table")
        return self.add[a][b]

    def __repr__(self):
        tag = self.name or f"table{self.carrier_size}"
        return f"AlgebraTable({tag})"


def _check_table(table, m, what):
    if len(table) != m or any(len(row) != m for row in table):
        raise BadTable(f"{what} table must be {m}x{m}")
    for row in table:
        for v in row:
            if not (0 <= v < m):
                raise BadTable(f"{what} table entry {v} out of range")


def make_table(mul, zero=0, zero_side=TWO_SIDED, unit=None, unit_side=TWO_SIDED,
               add=None, name="") -> AlgebraTable:
    mul = tuple(tuple(row) for row in mul)
    add = tuple(tuple(row) for row in add) if add is not None else None
    return AlgebraTable(len(mul), mul, zero, zero_side, unit, unit_side, add, name)


def make_zmod(n: int) -> AlgebraTable:
    """Integers mod n with both operations."""
    if n < 2:
        raise ValueError("n must be >= 2")
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return AlgebraTable(n, mul, 0, TWO_SIDED, 1, TWO_SIDED, add, name=f"zmod{n}")


def zero_divisors(y: AlgebraTable) -> list[tuple[int, int]]:
    """All pairs (a, b), both nonzero, with a·b = 0; sorted."""
    z = y.zero
    return sorted((a, b)
                  for a in y.elements if a != z
                  for b in y.elements if b != z and y.times(a, b) == z)


def associativity_witness(y: AlgebraTable, table=None):
    table = table if table is not None else y.mul
    for a, b, c in itertools.product(range(y.carrier_size), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            return (a, b, c)
    return None


def commutativity_witness(y: AlgebraTable, table=None):
    table = table if table is not None else y.mul
    for a, b in itertools.combinations(range(y.carrier_size), 2):
        if table[a][b] != table[b][a]:
            return (a, b)
    return None


def structure_flags(y: AlgebraTable) -> StructureFlags:
    """Re-derive every hypothesis flag by exhaustive table scan."""
    m = y.carrier_size
    distributive = True
    if y.add is not None:
        for a, b, c in itertools.product(range(m), repeat=3):
            if (y.times(a, y.plus(b, c)) != y.plus(y.times(a, b), y.times(a, c))
                    or y.times(y.plus(b, c), a) != y.plus(y.times(b, a), y.times(c, a))):
                distributive = False
                break
    char_two = (y.add is not None and y.unit is not None
                and y.add[y.unit][y.unit] == y.zero)
    return StructureFlags(
        associative=associativity_witness(y) is None,
        commutative=commutativity_witness(y) is None,
        additive_associative=(y.add is not None
                              and associativity_witness(y, y.add) is None),
        additive_commutative=(y.add is not None
                              and commutativity_witness(y, y.add) is None),
        distributive=y.add is not None and distributive,
        has_unit=y.unit is not None,
        char_two=char_two,
        zero_divisor_free=not zero_divisors(y),
    )


def idempotents_nilpotents(y: AlgebraTable) -> tuple[list[int], list[int]]:
    """Idempotent elements, and nilpotents (power bound = carrier size).

    The nilpotent scan iterates a·a·..·a left to right and so requires an
    associative table.
    """
    idem = [a for a in y.elements if y.times(a, a) == a]
    if associativity_witness(y) is not None:
        raise NonAssociativeNilpotentQuery(
            "nilpotency is only defined for associative multiplication")
    nil = []
    for a in y.elements:
        p = a
        for _ in range(y.carrier_size):
            if p == y.zero:
                nil.append(a)
                break
            p = y.times(p, a)
    return idem, nil
