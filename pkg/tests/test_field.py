import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecwalk.errors import CapExceeded, DivisionByZero, ModulusMismatch, NotPrime
from ecwalk.field import (
    FieldElement,
    PrimeModulus,
    fe_inv,
    fe_sqrt,
    is_prime,
    modular_arith,
    prime_factors,
    sqrt_mod,
)

F17 = PrimeModulus(17)


def test_add_examples():
    for v in range(17):
        assert modular_arith(F17(v), F17(0), "add") == F17(v)
    assert modular_arith(F17(9), F17(12), "add") == F17(4)
    assert modular_arith(F17(1), None, "neg") == F17(16)
    assert modular_arith(F17(1), F17(16), "add") == F17(0)
    assert modular_arith(F17(13), F17(13), "mul") == F17(16)
    assert modular_arith(F17(3), F17(5), "sub") == F17(15)


def test_canonical_residue():
    assert F17(-1).value == 16
    assert F17(17 * 5 + 3).value == 3
    assert F17(3) == F17(20)


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        modular_arith(F17(1), PrimeModulus(19)(1), "add")
    with pytest.raises(ModulusMismatch):
        F17(1) * PrimeModulus(19)(1)


def test_inverse_examples():
    assert fe_inv(F17(1)) == F17(1)
    assert fe_inv(F17(2)) == F17(9)
    with pytest.raises(DivisionByZero):
        fe_inv(F17(0))
    with pytest.raises(ZeroDivisionError):
        F17(5) / F17(0)


def test_sqrt_examples():
    assert fe_sqrt(F17(0)) == F17(0)
    assert fe_sqrt(F17(4)) == F17(2)
    assert fe_sqrt(PrimeModulus(5)(3)) is None


@pytest.mark.parametrize("p", [2, 3, 4, 1, 0, 15, 10007 * 3])
def test_bad_moduli(p):
    with pytest.raises(NotPrime):
        PrimeModulus(p)


def test_modulus_cap():
    with pytest.raises(CapExceeded):
        PrimeModulus(2**64 + 13)


def test_primality_against_sieve():
    limit = 5000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]


@pytest.mark.parametrize("n,expected", [(1, []), (9, [3]), (19, [19]), (360, [2, 3, 5]), (1001, [7, 11, 13])])
def test_prime_factors(n, expected):
    assert prime_factors(n) == expected


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from([17, 101, 10007]), st.integers(0, 10**6), st.integers(0, 10**6))
def test_field_laws(p, x, y):
    F = PrimeModulus(p)
    a, b = F(x), F(y)
    assert a + b == b + a
    assert a * b == b * a
    assert a + (-a) == F(0)
    assert (a + b).value == (x + y) % p
    assert (a * b).value == (x * y) % p
    if a.value:
        assert a * a.inverse() == F(1)


@pytest.mark.parametrize("p", [q for q in range(5, 102) if is_prime(q)])
def test_sqrt_matches_square_table(p):
    squares = {x * x % p for x in range(p)}
    F = PrimeModulus(p)
    present = set()
    for a in range(p):
        r = fe_sqrt(F(a))
        if r is not None:
            present.add(a)
            assert r * r == F(a)
            assert r.value <= p - r.value
    assert present == squares


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([10007, 65537, 1000003, 2**31 - 1]), st.integers(0, 2**40))
def test_sqrt_large_primes(p, x):
    # 65537 and 2^31 - 1 exercise long 2-power chains in Tonelli-Shanks
    a = x * x % p
    r = sqrt_mod(a, p)
    assert r is not None and r * r % p == a and r <= p - r


def test_int_coercion():
    x = F17(5)
    assert 3 * x == F17(15)
    assert x - 6 == F17(16)
    assert 1 - x == F17(13)
    assert isinstance(x + 1, FieldElement)
    assert x**-1 == fe_inv(x)
