import pytest

from quasiring.errors import NotClosedUnderIntersection, NotClosedUnderUnion
from quasiring.sets import INF, SeqSet
from quasiring.topology import (
    ExplicitSpace,
    SequenceSpace,
    clopen_base_topology,
    clopen_family,
    compare_topologies,
    discrete_space,
    disjoint_union,
    indiscrete_space,
    is_totally_separated,
    quasi_component,
    quasi_component_partition,
    quotient_space,
    sierpinski_space,
    validate_topology,
)
from quasiring.verify import InstanceSpec, random_instance


def test_discrete_space_all_sets_open():
    z = discrete_space(3)
    assert len(z.opens) == 8
    assert z.is_clopen({1})
    assert is_totally_separated(z)


def test_indiscrete_space_two_opens():
    z = indiscrete_space(4)
    assert z.opens == frozenset({frozenset(), z.full})
    assert quasi_component(z, 0) == z.full


def test_sierpinski_quasi_component_not_separated():
    z = sierpinski_space()
    assert z.is_open({0}) and not z.is_open({1})
    assert quasi_component(z, 0) == frozenset({0, 1})
    assert not is_totally_separated(z)


def test_validate_topology_auto_close():
    z = validate_topology(3, [{0}, {1}], auto_close=True)
    assert z.is_open({0, 1})
    assert z.is_open(frozenset())
    assert z.is_open({0, 1, 2})


def test_validate_topology_rejects_missing_union():
    with pytest.raises((NotClosedUnderUnion, NotClosedUnderIntersection)):
        validate_topology(3, [frozenset(), frozenset({0, 1, 2}),
                              frozenset({0}), frozenset({1})])


def test_disjoint_union_of_sierpinskis():
    z = disjoint_union(sierpinski_space(), sierpinski_space())
    assert z.point_count == 4
    parts = quasi_component_partition(z)
    assert parts == (frozenset({0, 1}), frozenset({2, 3}))
    assert z.is_clopen({0, 1})


def test_quotient_space_is_totally_separated():
    z = disjoint_union(sierpinski_space(), sierpinski_space())
    q = quotient_space(z)
    assert len(q.classes) == 2
    assert is_totally_separated(q.as_space())
    assert q.class_index(0) == q.class_index(1) != q.class_index(2)


def test_clopen_family_discrete():
    z = discrete_space(2)
    assert set(clopen_family(z)) == {frozenset(), frozenset({0}),
                                     frozenset({1}), frozenset({0, 1})}


def test_clopen_base_topology_coarser_than_original():
    z = sierpinski_space()
    t1 = clopen_base_topology(z)
    assert compare_topologies(t1, z).verdict == "first-strictly-coarser"
    assert compare_topologies(t1, t1).verdict == "equal"


def test_compare_topologies_incomparable():
    a = ExplicitSpace(2, frozenset({frozenset(), frozenset({0}),
                                    frozenset({0, 1})}))
    b = ExplicitSpace(2, frozenset({frozenset(), frozenset({1}),
                                    frozenset({0, 1})}))
    assert compare_topologies(a, b).verdict == "incomparable"


def test_sequence_space_membership():
    z = SequenceSpace()
    singleton_inf = SeqSet(frozenset(), False, True)
    assert z.is_closed(singleton_inf)
    assert not z.is_open(singleton_inf)
    assert z.is_clopen(SeqSet.of([3]))
    assert z.is_clopen(SeqSet.cofinite([3]))
    assert quasi_component(z, INF) == singleton_inf


def test_random_instance_deterministic():
    spec = InstanceSpec(seed=42, space_kind="explicit-random",
                        algebra_kind="table")
    s1, a1 = random_instance(spec)
    s2, a2 = random_instance(spec)
    assert s1 == s2
    assert a1 == a2


def test_random_instances_are_topologies():
    for k in range(100):
        spec = InstanceSpec(seed=k, space_kind="explicit-random")
        space, _ = random_instance(spec)
        # re-validating the opens must succeed without auto-closing
        validate_topology(space.point_count, space.opens)
