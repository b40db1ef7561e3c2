"""Prime sets and pi-numbers."""
from __future__ import annotations


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def pi_of(n):
    """The set of prime divisors of n (empty for n = 1)."""
    return frozenset(factorize(n))


def is_pi_number(n, primes):
    """True iff every prime divisor of n lies in ``primes``; 1 is a pi-number for every pi."""
    return pi_of(n) <= frozenset(primes)


def p_part(n, p):
    """Largest power of p dividing n."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def p_prime_part(n, p):
    return n // p_part(n, p)


def is_power_of(n, p):
    """True iff n is a power of p (including p**0 = 1)."""
    while n % p == 0:
        n //= p
    return n == 1


def log_p(n, p):
    """Exponent a with p**a == n; raises if n is not a power of p."""
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    if n != 1:
        raise ValueError(f"{n} is not a power of {p}")
    return a
