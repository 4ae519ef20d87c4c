import pytest

from quasiring.algebra import make_table, make_zmod
from quasiring.errors import UnknownChecker
from quasiring.topology import SequenceSpace, discrete_space, sierpinski_space
from quasiring.verify import (
    BUDGET_EXCEEDED,
    Context,
    EXPECTED_FAIL_NOTES,
    FAIL,
    GALOIS_SUITE,
    GREEN_SUITE,
    HYPOTHESIS_UNMET,
    INFINITE_CLAIMS,
    PASS,
    REGISTRY,
    SKIPPED_INFINITE,
    checker_ids,
    run_checker,
)
from quasiring.ideals import MULTIPLICATIVE, RING


def ctx(n=3, p=2, mode=RING, **kw):
    return Context(discrete_space(n), make_zmod(p), mode=mode, **kw)


def test_registry_contents():
    ids = checker_ids()
    assert "T5" in ids and "L8" in ids and "L59.1" in ids and "T34" in ids
    assert set(GALOIS_SUITE) <= set(REGISTRY)
    assert set(GREEN_SUITE) <= set(REGISTRY)
    assert "T26" not in GREEN_SUITE
    assert INFINITE_CLAIMS <= set(ids)


def test_unknown_checker():
    with pytest.raises(UnknownChecker):
        run_checker("T999", ctx())


def test_pass_verdict():
    r = run_checker("T34", ctx())
    assert r.verdict == PASS and r.witness is None


def test_expected_fail_with_witness():
    r = run_checker("T26", ctx(3, 2))
    assert r.verdict == FAIL
    assert r.witness is not None
    assert r.note == EXPECTED_FAIL_NOTES["T26"]


def test_hypothesis_unmet_without_addition():
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    c = Context(discrete_space(2), make_table(mul, zero=0, unit=1),
                mode=MULTIPLICATIVE)
    # L47 partitions primes by a sum decomposition: needs ring mode
    assert run_checker("L47", c).verdict == HYPOTHESIS_UNMET


def test_skipped_infinite():
    for cid in INFINITE_CLAIMS:
        assert run_checker(cid, ctx()).verdict == SKIPPED_INFINITE


def test_sequence_context():
    c = Context(SequenceSpace(), make_zmod(2))
    assert run_checker("T38", c).verdict == PASS
    assert run_checker("T34", c).verdict == HYPOTHESIS_UNMET


def test_budget_exceeded_on_large_ring():
    c = Context(discrete_space(5), make_zmod(3), mode=RING)
    assert run_checker("T34", c).verdict == BUDGET_EXCEEDED


def test_green_suite_on_fixed_instances():
    contexts = [
        ctx(1, 2), ctx(2, 3), ctx(3, 2),
        Context(discrete_space(2), make_zmod(4), mode=RING),
        Context(sierpinski_space(), make_zmod(3), mode=RING),
        Context(discrete_space(2), make_zmod(3), mode=MULTIPLICATIVE),
    ]
    bad = []
    for c in contexts:
        for cid in GREEN_SUITE:
            r = run_checker(cid, c)
            if r.verdict == FAIL:
                bad.append((cid, c.space, c.mode, r.witness))
    assert bad == []


def test_reports_serialize():
    r = run_checker("T26", ctx(3, 2))
    d = r.to_dict()
    assert d["verdict"] == FAIL
    assert isinstance(d["witness"], (list, dict))
