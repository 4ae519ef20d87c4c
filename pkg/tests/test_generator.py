import pytest

from quasiring.algebra import make_table, make_zmod
from quasiring.errors import MissingAddition, ZeroDivisorHypothesis
from quasiring.verify import generate_prescribed_ring


def test_three_primes_over_z2():
    ring, inv = generate_prescribed_ring(3, make_zmod(2))
    assert inv["proper_primes"] == 3
    assert inv["all_point_ideals"] and inv["all_min_max"]
    assert inv["prime_radical"] == frozenset({ring.theta})
    assert inv["verified"]


def test_single_prime_over_z5():
    ring, inv = generate_prescribed_ring(1, make_zmod(5))
    assert len(ring) == 5          # the ring is a copy of Z_5
    assert inv["proper_primes"] == 1
    assert inv["verified"]


def test_zero_divisors_refused():
    with pytest.raises(ZeroDivisorHypothesis) as err:
        generate_prescribed_ring(2, make_zmod(4))
    assert err.value.witness == (2, 2)


def test_multiplication_only_refused():
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    with pytest.raises(MissingAddition):
        generate_prescribed_ring(2, make_table(mul, zero=0, unit=1))


def test_nonpositive_count_rejected():
    with pytest.raises(ValueError):
        generate_prescribed_ring(0, make_zmod(2))
