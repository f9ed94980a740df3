"""Elementary number theory: factorization, primitive prime divisors, and the
prime-power identities used to classify the (q, r) parameters.

All routines use Python integers (arbitrary precision).
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from sympy import isprime as sympy_isprime

TRIAL_LIMIT = 10**6
FACTOR_BOUND = 1 << 128
# Miller-Rabin with the first 13 primes as witnesses is exact below this bound
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class PrimalityBoundError(ValueError):
    """Deterministic primality is not available for this input."""


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


_PRIMES: list[int] = []


def _primes() -> list[int]:
    if not _PRIMES:
        _PRIMES.extend(_small_primes(TRIAL_LIMIT))
    return _PRIMES


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= MR_DETERMINISTIC_BOUND:
        if n >= FACTOR_BOUND:
            raise PrimalityBoundError(f"{n} is beyond the primality bound 2^128")
        # BPSW: no counterexample is known, none exists below 2^64
        return sympy_isprime(n)
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    """A nontrivial factor of the composite ``n`` (Brent's variant, fixed restarts)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"rho failed to split {n}")


@dataclass
class Factorization:
    n: int
    factors: dict[int, int] = field(default_factory=dict)

    def primes(self) -> list[int]:
        return sorted(self.factors)

    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors.items())

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def to_json(self) -> dict:
        return {str(p): e for p, e in sorted(self.factors.items())}


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    if n >= FACTOR_BOUND:
        raise PrimalityBoundError(f"{n} exceeds the factorization bound 2^128")
    counts: Counter[int] = Counter()
    m = n
    for p in _primes():
        if p * p > m:
            break
        while m % p == 0:
            counts[p] += 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if is_prime(x):
            counts[x] += 1
            continue
        d = _rho(x)
        stack.extend((d, x // d))
    return Factorization(n, dict(sorted(counts.items())))


def prime_factors(n: int) -> list[int]:
    return factorize(n).primes() if n > 1 else []


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p**k, k >= 1, or None."""
    if n < 2:
        return None
    fac = factorize(n).factors
    if len(fac) != 1:
        return None
    (p, k), = fac.items()
    return p, k


def is_prime_power(n: int) -> bool:
    return prime_power(n) is not None


def is_power_of(n: int, r: int) -> bool:
    """True when n = r**k for some k >= 0."""
    if n < 1:
        return False
    while n % r == 0:
        n //= r
    return n == 1


def two_part(n: int) -> int:
    """Largest power of 2 dividing n."""
    return n & -n


def is_mersenne_prime(n: int) -> bool:
    return is_prime(n) and is_power_of(n + 1, 2)


def is_fermat_prime(n: int) -> bool:
    # 2 = 2^0 + 1 is conventionally not a Fermat prime
    return n > 2 and is_prime(n) and is_power_of(n - 1, 2)


# gcd identities ----------------------------------------------------------

def gcd_qpow(q: int, n: int, m: int, sign_n: int = -1, sign_m: int = -1) -> int:
    """Closed form of gcd(q^n + sign_n, q^m + sign_m).

    (-,-): q^(n,m) - 1.
    (-,+): q^(n,m) + 1 when 2*m_2 <= n_2, otherwise (2, q-1).
    (+,+): q^(n,m) + 1 when m_2 == n_2, otherwise (2, q-1).
    (+,-) is reduced to (-,+) by symmetry.
    """
    if q < 2 or n < 1 or m < 1 or sign_n not in (1, -1) or sign_m not in (1, -1):
        raise ValueError("need q >= 2, n, m >= 1 and signs +-1")
    g = math.gcd(n, m)
    if sign_n == -1 and sign_m == -1:
        return q**g - 1
    if sign_n == 1 and sign_m == -1:
        return gcd_qpow(q, m, n, -1, 1)
    if sign_n == -1:
        return q**g + 1 if 2 * two_part(m) <= two_part(n) else math.gcd(2, q - 1)
    return q**g + 1 if two_part(m) == two_part(n) else math.gcd(2, q - 1)


# the equation r^m + 1 = s^n ------------------------------------------------

@dataclass(frozen=True)
class PowerSolution:
    r: int
    s: int
    m: int
    n: int
    case: str | None

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "m": self.m, "n": self.n, "case": self.case}


def classify_power_solution(r: int, s: int, m: int, n: int) -> str | None:
    """Which of the three known families the solution of r^m + 1 = s^n belongs to."""
    if (r, s, m, n) == (2, 3, 3, 2):
        return "i"
    if r == 2 and n == 1 and is_power_of(m, 2) and s == 2**m + 1 and is_fermat_prime(s):
        return "ii"
    if s == 2 and m == 1 and is_prime(n) and r == 2**n - 1 and is_mersenne_prime(r):
        return "iii"
    return None


def solve_prime_power_eq(bound_base: int, bound_exp: int) -> list[PowerSolution]:
    """All (r, s, m, n) with r, s <= bound_base prime, m, n <= bound_exp, r^m + 1 = s^n."""
    primes = [p for p in _small_primes(max(bound_base, 2))]
    powers = {}
    for s in primes:
        for n in range(1, bound_exp + 1):
            powers[s**n] = (s, n)
    out = []
    for r in primes:
        for m in range(1, bound_exp + 1):
            hit = powers.get(r**m + 1)
            if hit:
                s, n = hit
                out.append(PowerSolution(r, s, m, n, classify_power_solution(r, s, m, n)))
    return out


# primitive prime divisors ------------------------------------------------

@dataclass
class PpdResult:
    q: int
    e: int
    all_ppds: list[int]

    @property
    def largest_ppd(self) -> int | None:
        return self.all_ppds[-1] if self.all_ppds else None

    def to_json(self) -> dict:
        return {"q": self.q, "e": self.e, "largest_ppd": self.largest_ppd,
                "all_ppds": self.all_ppds}


def multiplicative_order(a: int, r: int) -> int:
    if math.gcd(a, r) != 1:
        raise ValueError(f"{a} is not a unit mod {r}")
    order = r - 1 if is_prime(r) else math.lcm(*(p**(k - 1) * (p - 1) for p, k in factorize(r).factors.items()))
    for p in prime_factors(order):
        while order % p == 0 and pow(a, order // p, r) == 1:
            order //= p
    return order


def ppd(q: int, e: int) -> PpdResult:
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if e < 2:
        raise ValueError("ppd needs e >= 2")
    primes = [r for r in prime_factors(q**e - 1) if q % r and multiplicative_order(q % r, r) == e]
    return PpdResult(q, e, primes)


def largest_ppd(q: int, e: int) -> int | None:
    return ppd(q, e).largest_ppd


# divisor cases for N = (q^a + eps)(q^b + delta) ----------------------------

@dataclass
class DivisorCase:
    q: int
    a: int
    eps: int
    b: int
    delta: int
    N: int
    outside_primes: list[int]
    case: str | None
    matching: list[str]
    witnesses: tuple[int, int] | None

    def to_json(self) -> dict:
        return {"q": self.q, "a": self.a, "eps": self.eps, "b": self.b, "delta": self.delta,
                "N": self.N, "outside_primes": self.outside_primes, "case": self.case,
                "matching": self.matching,
                "witnesses": list(self.witnesses) if self.witnesses else None}


def divisor_case(q: int, a: int, eps: int, b: int, delta: int) -> DivisorCase:
    """Which clause of the two-factor divisor dichotomy applies.

    Clauses, in order:
      i    N has two distinct primes not dividing q^2 - 1
      ii   (a,eps)=(2,1), (b,delta)=(4,-1), q^2+1 = (2,q-1) r^e
      iii  (a,eps)=(2,1), (b,delta)=(3,1), q in {2, 3}
      iv   q=2, (a,eps)=(3,1), N has <= 2 prime divisors, one being 3
      v    q=2, a=3, (b,delta)=(6,-1)
    """
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if not (b > a >= 2) or eps not in (1, -1) or delta not in (1, -1):
        raise ValueError("need b > a >= 2 and signs +-1")
    if (a, eps) == (2, -1):
        raise ValueError("(a, eps) = (2, -1) is excluded")
    N = (q**a + eps) * (q**b + delta)
    small = q * q - 1
    outside = [r for r in prime_factors(N) if small % r]
    matching = []
    if len(outside) >= 2:
        matching.append("i")
    if (a, eps, b, delta) == (2, 1, 4, -1):
        m = (q * q + 1) // math.gcd(2, q - 1)
        if (q * q + 1) % math.gcd(2, q - 1) == 0 and is_prime_power(m):
            matching.append("ii")
    if (a, eps, b, delta) == (2, 1, 3, 1) and q in (2, 3):
        matching.append("iii")
    if q == 2 and (a, eps) == (3, 1):
        # counted on N = 9 (2^b + delta); on 2^b + delta alone b = 4, 8, 16 fall through
        ps = prime_factors(N)
        if len(ps) <= 2 and 3 in ps:
            matching.append("iv")
    if q == 2 and a == 3 and (b, delta) == (6, -1):
        matching.append("v")
    witnesses = (outside[-2], outside[-1]) if "i" in matching else None
    return DivisorCase(q, a, eps, b, delta, N, outside, matching[0] if matching else None,
                       matching, witnesses)


# prime-power values of the integers in the cyclotomic table ------------------

def _g(a, b):
    return math.gcd(a, b)


TABLE2_ROWS = {
    "q6-1/(7,q-e)": lambda q, e: ((q**6 - 1), _g(7, q - e)),
    "q6-1/(q-e)(6,q-e)": lambda q, e: ((q**6 - 1), (q - e) * _g(6, q - e)),
    "q5-e/(6,q-e)": lambda q, e: ((q**5 - e), _g(6, q - e)),
    "q4-1/(5,q-e)": lambda q, e: ((q**4 - 1), _g(5, q - e)),
    "q4-1/(q-e)(4,q-e)": lambda q, e: ((q**4 - 1), (q - e) * _g(4, q - e)),
    "q3-e/(4,q-e)": lambda q, e: ((q**3 - e), _g(4, q - e)),
    "(q3-1)(q+1)/(5,q-e)": lambda q, e: ((q**3 - 1) * (q + 1), _g(5, q - e)),
}

# reference exceptional (eps, q) column
TABLE2_EXPECTED = {
    "q6-1/(7,q-e)": [],
    "q6-1/(q-e)(6,q-e)": [(-1, 2)],
    "q5-e/(6,q-e)": [(1, 2), (1, 3), (1, 7), (-1, 2), (-1, 5)],
    "q4-1/(5,q-e)": [],
    "q4-1/(q-e)(4,q-e)": [(-1, 2), (-1, 3)],
    "q3-e/(4,q-e)": [(1, 2), (1, 3), (1, 5), (-1, 2), (-1, 3)],
    "(q3-1)(q+1)/(5,q-e)": [],
}


def table2_value(row: str, eps: int, q: int) -> int:
    if row not in TABLE2_ROWS:
        raise KeyError(f"unknown row {row!r}; expected one of {sorted(TABLE2_ROWS)}")
    num, den = TABLE2_ROWS[row](q, eps)
    if num % den:
        raise ValueError(f"row {row} is not integral at q={q}, eps={eps}")
    return num // den


def table2_check(row: str, eps: int, q: int) -> bool:
    return is_prime_power(table2_value(row, eps, q))


def table2_sweep(max_q: int = 50) -> dict[str, list[tuple[int, int]]]:
    qs = [q for q in range(2, max_q + 1) if is_prime_power(q)]
    out = {}
    for row in TABLE2_ROWS:
        # reference order: all eps=+ first, then eps=-
        out[row] = [(eps, q) for eps in (1, -1) for q in qs if table2_check(row, eps, q)]
    return out


# q^2 + q + 1 = d r^e -------------------------------------------------------

@dataclass
class NagellResult:
    q: int
    d: int
    r: int | None
    e: int | None
    f_is_3power: bool
    consistent: bool

    def to_json(self) -> dict:
        return {"q": self.q, "d": self.d, "r": self.r, "e": self.e,
                "f_is_3power": self.f_is_3power, "consistent": self.consistent}


def nagell_check(q: int) -> NagellResult:
    """Solve q^2 + q + 1 = (3, q-1) r^e and test the constraints on (q, e, f)."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    _, f = pp
    d = math.gcd(3, q - 1)
    rest = prime_power((q * q + q + 1) // d)
    r, e = rest if rest else (None, None)
    f_is_3power = is_power_of(f, 3)
    consistent = True
    if r is not None:
        if q % 3 != 1:
            consistent &= e == 1
        else:
            consistent &= e in (1, 2)
        consistent &= (q, r, e) == (4, 7, 1) or f_is_3power
    return NagellResult(q, d, r, e, f_is_3power, consistent)


def pi(n: int) -> set[int]:
    """Set of prime divisors of n."""
    return set(prime_factors(n))
