import pytest

from quasiring.algebra import make_zmod
from quasiring.errors import ZeroDivisorHypothesis
from quasiring.funcspace import FunctionRing
from quasiring.sets import INF, SeqSet
from quasiring.topology import discrete_space, disjoint_union, sierpinski_space
from quasiring.zariski import (
    compare_T1_TZ_T,
    symbolic_zariski,
    zariski_closed_family,
)


def test_discrete_zariski_is_discrete():
    ring = FunctionRing(discrete_space(2), make_zmod(3))
    zt = zariski_closed_family(ring)
    assert set(zt.closed_family) == {frozenset(), frozenset({0}),
                                     frozenset({1}), frozenset({0, 1})}
    assert zt.union_closed
    assert zt.as_space() == discrete_space(2)


def test_sierpinski_zariski_collapses():
    # constants only, so the zero sets are just the empty and full sets
    ring = FunctionRing(sierpinski_space(), make_zmod(2))
    zt = zariski_closed_family(ring)
    assert set(zt.closed_family) == {frozenset(), frozenset({0, 1})}


def test_zero_divisors_refused_with_witness():
    ring = FunctionRing(discrete_space(2), make_zmod(4))
    with pytest.raises(ZeroDivisorHypothesis) as err:
        zariski_closed_family(ring)
    assert err.value.witness == (2, 2)


def test_comparisons_t1_equals_tz():
    space = disjoint_union(sierpinski_space(), sierpinski_space())
    ring = FunctionRing(space, make_zmod(3))
    t1_tz, tz_t, t1_t = compare_T1_TZ_T(ring)
    assert t1_tz.verdict == "equal"
    # the clopen-base topology loses the one-sided opens of the original
    assert t1_t.verdict == "first-strictly-coarser"
    assert tz_t.verdict == "first-strictly-coarser"


def test_symbolic_zariski_closed_sets():
    sz = symbolic_zariski()
    assert sz.is_closed(SeqSet.of([1, 4]))
    assert sz.is_closed(SeqSet.cofinite([0], infinity=True))
    assert not sz.is_closed(SeqSet.cofinite([0], infinity=False))
    assert sz.is_closed(SeqSet(frozenset(), False, True))  # just {inf}
