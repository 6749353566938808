"""Mersenne numbers, Mersenne factorials, and Mersenne binomials.

Mersenne numbers are indexed by every positive exponent, not only prime
ones: the n-th is 2**n - 1.  The Mersenne factorial n!_M is the product of
the first n of them (empty product 1), and the Mersenne binomial is the
factorial quotient n!_M / (r!_M * (n-r)!_M).  That quotient is always an
integer; it equals the Gaussian binomial coefficient evaluated at q = 2,
which this module also computes by an independent recurrence so the two
routes can check each other.
"""

from __future__ import annotations

import threading

from .errors import InvariantError
from .primes import is_prime


def mersenne(n: int) -> int:
    """The n-th Mersenne number 2**n - 1, for n >= 1."""
    if n < 1:
        raise ValueError(f"mersenne numbers are indexed from 1, got n={n}")
    return (1 << n) - 1


_factorial_lock = threading.Lock()
_factorial_cache = [1]


def mersenne_factorial(n: int) -> int:
    """Product of the first n Mersenne numbers; 1 for n = 0."""
    if n < 0:
        raise ValueError(f"mersenne_factorial needs n >= 0, got {n}")
    if n < len(_factorial_cache):
        return _factorial_cache[n]
    with _factorial_lock:
        # re-check under the lock; another thread may have extended the cache
        while len(_factorial_cache) <= n:
            k = len(_factorial_cache)
            _factorial_cache.append(_factorial_cache[-1] * ((1 << k) - 1))
    return _factorial_cache[n]


def mersenne_binomial(n: int, r: int) -> int:
    """Mersenne binomial coefficient, an exact factorial quotient.

    The division is checked: a nonzero remainder would mean the integrality
    theorem failed, which is a bug, so it raises InvariantError rather than
    returning a rounded value.
    """
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    quotient, remainder = divmod(
        mersenne_factorial(n), mersenne_factorial(r) * mersenne_factorial(n - r)
    )
    if remainder:
        raise InvariantError(f"mersenne_binomial({n}, {r}) is not an integer")
    return quotient


def gaussian_binomial_at_2(n: int, r: int) -> int:
    """Gaussian (q-)binomial coefficient at q = 2 via the Pascal recurrence.

    Deliberately shares no code with mersenne_binomial: the recurrence
    G(i, j) = G(i-1, j-1) + 2**j * G(i-1, j) builds the value from 1s only,
    so the two functions act as mutual cross-checks.
    """
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    row = [1]
    for i in range(1, n + 1):
        prev = row
        row = [1] * (i + 1)
        for j in range(1, i):
            row[j] = prev[j - 1] + (prev[j] << j)
    return row[r]


def digit_sum(m: int, p: int) -> int:
    """Sum of the base-p digits of m >= 0."""
    if p < 2:
        raise ValueError(f"digit_sum needs a base p >= 2, got {p}")
    if m < 0:
        raise ValueError(f"digit_sum needs m >= 0, got {m}")
    s = 0
    while m:
        s += m % p
        m //= p
    return s


def factorial_valuation(n: int, p: int) -> int:
    """p-adic valuation of n! for prime p, computed two ways.

    Both the floor sum over powers of p and the digit-sum closed form
    (n - digit_sum(n, p)) / (p - 1) are evaluated; disagreement raises.
    """
    if n < 0:
        raise ValueError(f"factorial_valuation needs n >= 0, got {n}")
    if not is_prime(p):
        raise ValueError(f"factorial_valuation needs a prime p, got {p}")
    floor_sum = 0
    q = p
    while q <= n:
        floor_sum += n // q
        q *= p
    closed, remainder = divmod(n - digit_sum(n, p), p - 1)
    if remainder or closed != floor_sum:
        raise InvariantError(
            f"factorial valuation mismatch at n={n}, p={p}: "
            f"floor sum {floor_sum}, digit form {(n - digit_sum(n, p))}/{p - 1}"
        )
    return floor_sum
