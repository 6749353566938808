"""Multiplicative orders of 2, Wieferich exponents, and Mersenne factorizations.

For an odd prime p, the order of 2 modulo p is the least n with p dividing
2**n - 1, and the Wieferich exponent is the exact power of p dividing that
first Mersenne multiple.  Those two numbers determine the p-adic valuation
of every Mersenne number:

    valuation_p(2**n - 1) = wieferich_exponent(p) + valuation_p(n)

when order(p) divides n, and 0 otherwise.  Complete factorizations of
Mersenne numbers are cross-checked against this law factor by factor.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundExceededError, InvariantError
from .primes import factorize, is_prime, primes_up_to, valuation

DEFAULT_FACTOR_BOUND = 64
FACTOR_BOUND_ENV = "MAGMAEXP_FACTOR_BOUND"
WIEFERICH_SEARCH_CAP = 10_000_000

# candidates 2*k*n + 1 are tried up to here before falling back to rho
_TRIAL_LIMIT = 50_000


def factor_bound() -> int:
    """Exponent bound for complete Mersenne factorizations.

    Defaults to DEFAULT_FACTOR_BOUND; the environment variable named by
    FACTOR_BOUND_ENV overrides it (read at call time, not import time).
    """
    raw = os.environ.get(FACTOR_BOUND_ENV)
    if raw is None:
        return DEFAULT_FACTOR_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{FACTOR_BOUND_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{FACTOR_BOUND_ENV} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class OrderRecord:
    """Order of 2 modulo an odd prime p, with its Wieferich exponent."""

    p: int
    order: int
    wieferich_exponent: int


@lru_cache(maxsize=None)
def order_record(p: int) -> OrderRecord:
    """Cached order data for an odd prime p; rejects 2 and composites."""
    if p == 2:
        raise ValueError("p = 2 divides no Mersenne number; no order exists")
    if p < 3 or not is_prime(p):
        raise ValueError(f"order_record needs an odd prime, got {p}")
    order = p - 1
    for q in factorize(p - 1):
        while order % q == 0 and pow(2, order // q, p) == 1:
            order //= q
    exponent = 1
    while pow(2, order, p ** (exponent + 1)) == 1:
        exponent += 1
    if (p - 1) % order or pow(2, order, p) != 1 or (1 << order) <= p:
        raise InvariantError(f"order computation broke its contract at p={p}")
    return OrderRecord(p, order, exponent)


def mersenne_order(p: int) -> int:
    """Least n >= 1 with p dividing 2**n - 1, for an odd prime p."""
    return order_record(p).order


def wieferich_exponent(p: int) -> int:
    """Exact power of p dividing 2**mersenne_order(p) - 1.

    Computed by modular exponentiation modulo growing powers of p; the
    Mersenne number itself is never materialized.
    """
    return order_record(p).wieferich_exponent


def mersenne_valuation(p: int, n: int) -> int:
    """p-adic valuation of 2**n - 1; returns 0 for p = 2 (Mersenne numbers are odd)."""
    if n < 1:
        raise ValueError(f"mersenne numbers are indexed from 1, got n={n}")
    if p == 2:
        return 0
    record = order_record(p)
    if n % record.order:
        return 0
    return record.wieferich_exponent + valuation(n, p)


def factor_mersenne(n: int, bound: int | None = None) -> dict[int, int]:
    """Complete prime factorization of 2**n - 1 as {prime: exponent}.

    Refuses exponents beyond the factoring bound (see factor_bound) so that
    runtimes stay predictable.  Every returned exponent is cross-checked
    against the order/Wieferich valuation law, and the product is checked to
    reassemble 2**n - 1 exactly.
    """
    if n < 1:
        raise ValueError(f"mersenne numbers are indexed from 1, got n={n}")
    limit = factor_bound() if bound is None else bound
    if n > limit:
        raise BoundExceededError(
            f"factoring bound exceeded: n={n} > {limit}; "
            f"raise the bound explicitly or via {FACTOR_BOUND_ENV}"
        )
    return dict(_factor_mersenne(n))


@lru_cache(maxsize=None)
def _factor_mersenne(n: int) -> tuple[tuple[int, int], ...]:
    m = (1 << n) - 1
    factors: dict[int, int] = {}

    def strip(p: int) -> None:
        nonlocal m
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factors[p] = factors.get(p, 0) + e

    # factors of 2**d - 1 divide 2**n - 1 for every divisor d of n
    for d in range(1, n):
        if n % d == 0:
            for p, _ in _factor_mersenne(d):
                strip(p)
    # remaining (primitive) prime factors are congruent to 1 mod 2n; trial
    # divide in ascending order, so composite candidates never fire
    step = 2 * n
    candidate = step + 1
    while candidate <= _TRIAL_LIMIT and candidate * candidate <= m:
        if m % candidate == 0:
            strip(candidate)
        candidate += step
    if m > 1:
        for p, e in factorize(m).items():
            factors[p] = factors.get(p, 0) + e
    product = 1
    for p, e in factors.items():
        record = order_record(p)
        if n % record.order or e != record.wieferich_exponent + valuation(n, p):
            raise InvariantError(
                f"exponent of {p} in 2**{n}-1 disagrees with the valuation law"
            )
        product *= p**e
    if product != (1 << n) - 1:
        raise InvariantError(f"factorization of 2**{n}-1 does not reassemble")
    return tuple(sorted(factors.items()))


def pi_m(x: int, bound: int | None = None) -> tuple[int, list[int]]:
    """Count and list the odd primes whose order of 2 is at most x - 1.

    These are exactly the primes dividing the Mersenne factorial (x-1)!_M.
    A second convention in circulation counts orders up to x instead; that
    variant is pi_m(x + 1) and the command line exposes both.
    """
    if x < 2:
        raise ValueError(f"pi_m needs x >= 2, got {x}")
    limit = factor_bound() if bound is None else bound
    if x - 1 > limit:
        raise BoundExceededError(
            f"factoring bound exceeded: pi_m({x}) needs exponents up to {x - 1} > {limit}"
        )
    support: set[int] = set()
    for i in range(1, x):
        support.update(p for p, _ in _factor_mersenne(i))
    primes = sorted(support)
    return len(primes), primes


def wieferich_search(limit: int, cap: int = WIEFERICH_SEARCH_CAP) -> list[int]:
    """Odd primes p <= limit whose Wieferich exponent is at least 2.

    Uses the classical criterion 2**(p-1) == 1 (mod p**2), which is
    equivalent: the order of 2 modulo p**2 is either order(p) or
    p * order(p), and only the former divides p - 1.
    """
    if limit < 0:
        raise ValueError(f"wieferich_search needs limit >= 0, got {limit}")
    if limit > cap:
        raise BoundExceededError(f"search limit {limit} exceeds the cap {cap}")
    return [p for p in primes_up_to(limit) if p != 2 and pow(2, p - 1, p * p) == 1]
