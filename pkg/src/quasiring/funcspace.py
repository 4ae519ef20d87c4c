"""Rings of continuous functions C(Z, Y) over an explicit finite space.

With Y discrete, a function is continuous iff it is constant on every
quasi-component of Z, and on a finite space every quasi-component is clopen,
so the continuous functions are exactly the value assignments per
quasi-component.  Elements are therefore stored as tuples of Y-indices, one
per quasi-component, in the deterministic class order of the quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import AlgebraTable, make_zmod, structure_flags
from .errors import (
    BudgetExceeded,
    InfiniteBackend,
    MissingAddition,
    MissingUnit,
    NotClopen,
    ZeroValue,
)
from .topology import (
    ExplicitSpace,
    SequenceSpace,
    Space,
    quasi_component_partition,
    quotient_space,
)

DEFAULT_ENUM_BUDGET = 2 ** 20

FnElement = tuple  # Y-index per quasi-component, in class order


class FunctionRing:
    """C(Z, Y) for an explicit space Z and a table algebra Y."""

    def __init__(self, space: ExplicitSpace, algebra: AlgebraTable,
                 budget: int = DEFAULT_ENUM_BUDGET):
        if isinstance(space, SequenceSpace):
            raise InfiniteBackend(
                "the sequence backend is symbolic; see quasiring.sequence")
        self.space = space
        self.algebra = algebra
        self.classes = quasi_component_partition(space)
        self.class_of = {}
        for i, c in enumerate(self.classes):
            for p in c:
                self.class_of[p] = i
        count = algebra.carrier_size ** len(self.classes)
        if count > budget:
            raise BudgetExceeded(
                f"{count} functions exceed the enumeration budget {budget}")
        self.elements: tuple = tuple(
            itertools.product(algebra.elements, repeat=len(self.classes)))
        self.flags = structure_flags(algebra)
        self.theta: FnElement = (algebra.zero,) * len(self.classes)
        self.identity: FnElement | None = (
            (algebra.unit,) * len(self.classes) if algebra.unit is not None else None)
        self._index = {f: i for i, f in enumerate(self.elements)}
        self._zero_sets = {}

    # -- element arithmetic -------------------------------------------------

    def mul(self, f: FnElement, g: FnElement) -> FnElement:
        t = self.algebra.mul
        return tuple(t[a][b] for a, b in zip(f, g))

    def add(self, f: FnElement, g: FnElement) -> FnElement:
        if self.algebra.add is None:
            raise MissingAddition("algebra has no addition table")
        t = self.algebra.add
        return tuple(t[a][b] for a, b in zip(f, g))

    def value_at(self, f: FnElement, point: int) -> int:
        return f[self.class_of[point]]

    def contains(self, f) -> bool:
        return f in self._index

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    # -- geometry -----------------------------------------------------------

    def zero_set(self, f: FnElement, value: int | None = None) -> frozenset:
        """f^{-1}(b) as a set of raw points; b defaults to the algebra zero."""
        b = self.algebra.zero if value is None else value
        cached = self._zero_sets.get((f, b))
        if cached is None:
            cached = frozenset(p for p in self.space.points
                               if f[self.class_of[p]] == b)
            self._zero_sets[(f, b)] = cached
        return cached

    def chi(self, u, a: int | None = None) -> FnElement:
        """Characteristic function: zero on the clopen set u, value a off it."""
        u = frozenset(u)
        if not self.space.is_clopen(u):
            raise NotClopen(f"{sorted(u)} is not clopen")
        if a is None:
            if self.algebra.unit is None:
                raise MissingUnit("default off-value needs a unit")
            a = self.algebra.unit
        if a == self.algebra.zero:
            raise ZeroValue("off-value 0 would collapse to the zero function")
        z = self.algebra.zero
        return tuple(z if c <= u else a for c in self.classes)

    def __repr__(self):
        return (f"FunctionRing({self.space.point_count}pt space, "
                f"{self.algebra!r}, {len(self.elements)} elements)")


def enumerate_functions(space: ExplicitSpace, algebra: AlgebraTable,
                        budget: int = DEFAULT_ENUM_BUDGET) -> FunctionRing:
    return FunctionRing(space, algebra, budget)


def is_continuous(space: ExplicitSpace, algebra: AlgebraTable, values) -> bool:
    """Whether a raw point -> Y-index map is continuous (Y discrete)."""
    values = tuple(values)
    for b in algebra.elements:
        pre = frozenset(p for p in space.points if values[p] == b)
        if not space.is_open(pre):
            return False
    return True


def pointwise(ring: FunctionRing, op: str, f: FnElement, g: FnElement) -> FnElement:
    if op == "mul":
        return ring.mul(f, g)
    if op == "add":
        return ring.add(f, g)
    raise ValueError(f"unknown pointwise operation {op!r}")


def characteristic_fn(ring: FunctionRing, u, a: int | None = None) -> FnElement:
    return ring.chi(u, a)


def zero_set_V(ring: FunctionRing, fns, value: int | None = None) -> frozenset:
    """Common vanishing locus of a set of functions; V(∅) is the whole space."""
    out = ring.space.full
    for f in fns:
        out &= ring.zero_set(f, value)
    return out


def vanishing_elements(ring: FunctionRing, u, value: int | None = None,
                       within=None) -> frozenset:
    """All functions (of `within`, default the whole ring) equal to b on u."""
    u = frozenset(u)
    b = ring.algebra.zero if value is None else value
    pool = ring.elements if within is None else within
    classes = sorted({ring.class_of[p] for p in u})
    return frozenset(f for f in pool if all(f[c] == b for c in classes))


def equiv_class(ring: FunctionRing, fns, x: int) -> frozenset:
    """Points indistinguishable from x by every function in fns."""
    return frozenset(y for y in ring.space.points
                     if all(ring.value_at(f, y) == ring.value_at(f, x)
                            for f in fns))


@dataclass(frozen=True)
class Transport:
    """Inverse isomorphisms between C(X, Y) and C(Π, Y).

    Both rings index elements by quasi-component, so the maps reconcile the
    class orders of the two sides; composing them is the identity.
    """

    source: FunctionRing        # C(X, Y)
    target: FunctionRing        # C(Π, Y)
    class_map: tuple            # source class index -> target class index

    def G(self, f: FnElement) -> FnElement:
        out = [None] * len(self.target.classes)
        for i, j in enumerate(self.class_map):
            out[j] = f[i]
        return tuple(out)

    def H(self, fhat: FnElement) -> FnElement:
        return tuple(fhat[j] for j in self.class_map)


def transport(ring: FunctionRing) -> Transport:
    """Build the C(X,Y) <-> C(Π,Y) transport for ring = C(X, Y)."""
    q = quotient_space(ring.space)
    pi = q.as_space()
    target = FunctionRing(pi, ring.algebra)
    class_map = []
    for c in ring.classes:
        i = q.class_index(min(c))
        # Π is totally separated: its classes are singleton class indices
        class_map.append(next(k for k, tc in enumerate(target.classes) if i in tc))
    return Transport(ring, target, tuple(class_map))


def embed_J(chi_ring: FunctionRing, target: FunctionRing) -> dict:
    """Value-pattern embedding of C(Z, Z_2) into C(Z, Y); multiplicative.

    Maps 0 to the target zero and 1 to the target unit, coordinatewise.
    """
    if target.algebra.unit is None:
        raise MissingUnit("embedding needs a unit in the target algebra")
    if chi_ring.algebra.carrier_size != 2 or chi_ring.algebra.unit is None:
        raise ValueError("source must be the two-element ring with 0 and 1")
    lut = {chi_ring.algebra.zero: target.algebra.zero,
           chi_ring.algebra.unit: target.algebra.unit}
    return {f: tuple(lut[v] for v in f) for f in chi_ring.elements}


def project_L(ring: FunctionRing) -> dict:
    """Pointwise nonzero-indicator into C(Z, Z_2); surjective.

    Multiplicativity holds exactly when Y is free of zero divisors; callers
    check the flag themselves.
    """
    z = ring.algebra.zero
    return {f: tuple(0 if v == z else 1 for v in f) for f in ring.elements}


def ring_over(space: ExplicitSpace, n: int, budget: int = DEFAULT_ENUM_BUDGET) -> FunctionRing:
    """Convenience: C(space, Z_n)."""
    return FunctionRing(space, make_zmod(n), budget)
