import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from derangements.numtheory import (
    MR_DETERMINISTIC_BOUND, TABLE2_EXPECTED, classify_power_solution, divisor_case, factorize,
    gcd_qpow, is_fermat_prime, is_mersenne_prime, is_prime, nagell_check, ppd, prime_power,
    solve_prime_power_eq, table2_check, table2_sweep, table2_value,
)


# -- primality and factoring ---------------------------------------------------

def test_is_prime_matches_sympy_small():
    assert [n for n in range(2000) if is_prime(n)] == list(sympy.primerange(0, 2000))


@settings(max_examples=200)
@given(st.integers(2, 10**30))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_large_primes():
    assert is_prime(2**61 - 1)
    assert is_prime(2**89 - 1)
    assert not is_prime((2**61 - 1) * (2**31 - 1))
    assert MR_DETERMINISTIC_BOUND > 2**64


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10**18))
def test_factorize_round_trip(n):
    fac = factorize(n)
    assert math.prod(p**k for p, k in fac.factors.items()) == n
    assert all(is_prime(p) for p in fac.factors)
    assert fac.factors == sympy.factorint(n)


def test_factorize_examples():
    assert factorize(341).factors == {11: 1, 31: 1}
    assert factorize(2**127 - 1).factors == {2**127 - 1: 1}
    semi = (2**31 - 1) * 1000003
    assert factorize(semi).factors == {2**31 - 1: 1, 1000003: 1}


def test_mersenne_fermat():
    assert is_mersenne_prime(7) and is_mersenne_prime(31) and not is_mersenne_prime(15)
    assert is_fermat_prime(5) and is_fermat_prime(257) and not is_fermat_prime(9)
    assert [n for n in range(1, 300) if is_fermat_prime(n)] == [3, 5, 17, 257]
    assert [n for n in range(1, 300) if is_mersenne_prime(n)] == [3, 7, 31, 127]


def test_prime_power():
    assert prime_power(49) == (7, 2)
    assert prime_power(1) is None
    assert prime_power(12) is None


# -- gcd formulas ------------------------------------------------------------------

def test_gcd_examples():
    assert gcd_qpow(2, 6, 4) == 3
    assert gcd_qpow(3, 4, 2, -1, 1) == 10
    assert gcd_qpow(2, 3, 5, 1, 1) == 3


def test_gcd_all_cases_sweep():
    for q in range(2, 10):
        for n in range(1, 13):
            for m in range(1, 13):
                for sn in (1, -1):
                    for sm in (1, -1):
                        assert gcd_qpow(q, n, m, sn, sm) == math.gcd(q**n + sn, q**m + sm), \
                            (q, n, m, sn, sm)


@given(st.integers(2, 30), st.integers(1, 40), st.integers(1, 40),
       st.sampled_from([1, -1]), st.sampled_from([1, -1]))
def test_gcd_property(q, n, m, sn, sm):
    assert gcd_qpow(q, n, m, sn, sm) == math.gcd(q**n + sn, q**m + sm)


# -- r^m + 1 = s^n ----------------------------------------------------------------

def test_prime_power_equation_cases():
    assert classify_power_solution(2, 3, 3, 2) == "i"
    assert classify_power_solution(2, 17, 4, 1) == "ii"
    assert classify_power_solution(7, 2, 1, 3) == "iii"


def test_prime_power_equation_sweep():
    sols = solve_prime_power_eq(99, 20)
    assert all(s.case is not None for s in sols)
    got = {(s.r, s.s, s.m, s.n) for s in sols}
    # brute force over the same box
    primes = list(sympy.primerange(2, 100))
    brute = {(r, s, m, n) for r in primes for s in primes for m in range(1, 21)
             for n in range(1, 21) if r**m + 1 == s**n}
    assert got == brute
    assert (2, 3, 3, 2) in got and (7, 2, 1, 3) in got and (2, 17, 4, 1) in got


# -- primitive prime divisors ------------------------------------------------------

def test_ppd_examples():
    assert ppd(2, 6).largest_ppd is None
    assert ppd(7, 2).largest_ppd is None
    assert ppd(2, 4).largest_ppd == 5


PRIME_POWERS = [q for q in range(2, 33) if prime_power(q)]


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_zsigmondy(q):
    for e in range(2, 13):
        res = ppd(q, e)
        exceptional = (q, e) == (2, 6) or (e == 2 and is_mersenne_prime(q))
        assert (res.largest_ppd is None) == exceptional, (q, e)
        for r in res.all_ppds:
            assert (q**e - 1) % r == 0
            assert all((q**i - 1) % r for i in range(1, e))
            assert r % e == 1
            for n in range(1, 4 * e + 1):
                assert ((q**n - 1) % r == 0) == (n % e == 0)


def test_ppd_brute_force():
    for q in (3, 4, 5):
        for e in range(2, 9):
            brute = sorted(r for r in sympy.primefactors(q**e - 1)
                           if all((q**i - 1) % r for i in range(1, e)))
            assert ppd(q, e).all_ppds == brute


# -- divisor cases -------------------------------------------------------------------

def test_divisor_case_examples():
    c = divisor_case(3, 2, 1, 3, 1)
    assert "iii" in c.matching
    assert c.N == 10 * 28
    v = divisor_case(2, 3, -1, 6, -1)
    assert v.case == "v"
    assert "v" in divisor_case(2, 3, 1, 6, -1).matching
    ii = divisor_case(5, 2, 1, 4, -1)
    assert ii.case == "ii"


def test_divisor_case_witnesses():
    c = divisor_case(4, 3, 1, 5, 1)
    assert c.case == "i"
    r, s = c.witnesses
    assert r != s and c.N % r == 0 and c.N % s == 0
    assert 15 % r and 15 % s


def test_divisor_case_precondition():
    with pytest.raises(ValueError):
        divisor_case(3, 2, -1, 3, 1)
    with pytest.raises(ValueError):
        divisor_case(3, 3, 1, 2, 1)


def test_divisor_case_always_classified():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for a in range(2, 6):
            for b in range(a + 1, 8):
                for eps in (1, -1):
                    if (a, eps) == (2, -1):
                        continue
                    for delta in (1, -1):
                        assert divisor_case(q, a, eps, b, delta).case is not None, \
                            (q, a, eps, b, delta)


# -- Table 2 ---------------------------------------------------------------------------

def test_table2_examples():
    assert table2_value("q5-e/(6,q-e)", 1, 4) == 341
    assert not table2_check("q5-e/(6,q-e)", 1, 4)
    assert table2_check("q5-e/(6,q-e)", 1, 2)
    assert table2_value("q3-e/(4,q-e)", 1, 5) == 31


def test_table2_sweep_reproduces_exceptions():
    assert table2_sweep(50) == TABLE2_EXPECTED


def test_table2_sweep_against_sympy():
    qs = [q for q in range(2, 51) if prime_power(q)]
    for row in TABLE2_EXPECTED:
        for eps in (1, -1):
            for q in qs:
                n = table2_value(row, eps, q)
                assert table2_check(row, eps, q) == (len(sympy.factorint(n)) == 1)


# -- q^2 + q + 1 = d r^e ----------------------------------------------------------

def test_nagell_examples():
    r4 = nagell_check(4)
    assert (r4.d, r4.r, r4.e) == (3, 7, 1)
    r2 = nagell_check(2)
    assert (r2.r, r2.e) == (7, 1)
    big = nagell_check(313)
    assert (big.d, big.r, big.e) == (3, 181, 2)
    assert 313**2 + 313 + 1 == 3 * 181**2


def test_nagell_consistent_sweep():
    for q in range(2, 2000):
        if prime_power(q):
            res = nagell_check(q)
            assert res.consistent, q
            if res.r is not None:
                assert q * q + q + 1 == res.d * res.r**res.e
