"""Exact integer and rational arithmetic substrate.

Everything downstream works with square classes: nonzero square-free
integers representing elements of Q*/Q*^2.  This module provides the
canonicalisation (`squarefree_rep`), p-adic valuations and prime support,
backed by exact integer factorization (trial division with a Miller-Rabin /
Pollard-Brent fallback for large cofactors).
"""

from __future__ import annotations

from fractions import Fraction

Rat = int | Fraction

_TRIAL_BOUND = 100_000

# Deterministic Miller-Rabin witnesses, exact for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DomainError(ValueError):
    """Raised when an operation's precondition is violated."""


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
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


def is_prime(n: int) -> bool:
    """Exact for n below the Miller-Rabin determinism bound; our inputs are desk-scale."""
    return _is_probable_prime(n)


def _pollard_brent(n: int) -> int:
    """Find a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    from math import gcd

    seed = 1
    while True:
        seed += 1
        y, c, m = seed % n, seed % n + 1, 128
        g = r = q = 1
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


_factor_cache: dict[int, dict[int, int]] = {}


def factorize(n: int, trial_bound: int = _TRIAL_BOUND) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero.

    Trial division up to the bound, then Miller-Rabin / Pollard-Brent for any
    remaining cofactor.
    """
    if n == 0:
        raise DomainError("cannot factor 0")
    n = abs(n)
    if n in _factor_cache:
        return dict(_factor_cache[n])
    out: dict[int, int] = {}
    m = n
    for p in (2, 3, 5):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    p = 7
    step = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= m and p <= trial_bound:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += step[i]
        i = (i + 1) % 8
    # Large cofactor: probabilistic path.
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    if n <= 10**9:
        _factor_cache[n] = dict(out)
    return out


def squarefree_rep(r: Rat) -> int:
    """The unique square-free integer s with r*s a nonzero rational square.

    Squares map to 1; the sign of r is preserved.
    """
    r = Fraction(r)
    if r == 0:
        raise DomainError("squarefree_rep of 0")
    n = r.numerator * r.denominator  # same square class as r
    sign = -1 if n < 0 else 1
    s = sign
    for p, e in factorize(n).items():
        if e % 2:
            s *= p
    return s


def padic_valuation(p: int, r: Rat) -> int:
    """Exponent of the prime p in r (negative for denominators)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    r = Fraction(r)
    if r == 0:
        raise DomainError("valuation of 0")
    v = 0
    n = abs(r.numerator)
    while n % p == 0:
        n //= p
        v += 1
    d = r.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def prime_support(items) -> set[int]:
    """Primes dividing any item, always including 2."""
    out = {2}
    for x in items:
        x = Fraction(x)
        if x == 0:
            continue
        out |= set(factorize(x.numerator * x.denominator))
    return out


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for odd prime p and a prime to p."""
    a %= p
    if a == 0:
        raise DomainError("legendre of 0")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1
