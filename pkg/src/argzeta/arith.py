"""Prime and multiplicative-arithmetic substrate.

Segmented sieving, the von Mangoldt function, enumeration of squarefree
products over a prime window, and the log-weighted prime sum used by the
Mertens-type sanity checks.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from .errors import CapacityError, PreconditionError

SIEVE_LIMIT_DEFAULT = 10**9
# Full subset enumeration of a k-prime window touches 2^k products.
FULL_ENUMERATION_GUARD = 40


def sieve_up_to(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (simple Eratosthenes)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


@dataclass(frozen=True)
class PrimeWindow:
    """The complete set of primes inside [p_lo, q_hi], ascending."""

    p_lo: float
    q_hi: float
    primes: Tuple[int, ...]

    def __post_init__(self):
        prev = 0
        for p in self.primes:
            if p <= prev:
                raise PreconditionError("prime window must be strictly increasing")
            if not (self.p_lo <= p <= self.q_hi):
                raise PreconditionError(f"prime {p} outside [{self.p_lo}, {self.q_hi}]")
            prev = p

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)


def primes_in_range(p_lo: float, q_hi: float, *, limit: int = SIEVE_LIMIT_DEFAULT) -> PrimeWindow:
    """Complete ascending list of primes in [p_lo, q_hi].

    Uses a segmented sieve over the window so that large q_hi does not
    require sieving from 2.
    """
    if p_lo < 0 or q_hi < p_lo:
        raise PreconditionError(f"bad prime window [{p_lo}, {q_hi}]")
    if q_hi > limit:
        raise CapacityError(f"sieve limit exceeded: {q_hi} > {limit}")
    lo = max(2, math.ceil(p_lo))
    hi = math.floor(q_hi)
    if hi < lo:
        return PrimeWindow(p_lo, q_hi, ())
    base = sieve_up_to(math.isqrt(hi))
    flags = np.ones(hi - lo + 1, dtype=bool)
    for p in base:
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start <= hi:
            flags[start - lo :: p] = False
    if lo <= 1:
        flags[: 2 - lo] = False
    primes = tuple(int(x) for x in (np.nonzero(flags)[0] + lo))
    primes = tuple(p for p in primes if p >= 2)
    return PrimeWindow(p_lo, q_hi, primes)


def von_mangoldt(n: int) -> float:
    """log p if n is a positive power of a prime p, else 0."""
    if n < 1:
        raise PreconditionError("von_mangoldt requires n >= 1")
    if n == 1:
        return 0.0
    m = n
    for p in range(2, math.isqrt(n) + 1):
        if m % p == 0:
            while m % p == 0:
                m //= p
            return math.log(p) if m == 1 else 0.0
    return math.log(n)  # n itself is prime


@dataclass(frozen=True)
class SupportElement:
    """A squarefree product of window primes together with its factor set."""

    n: int
    factors: Tuple[int, ...]

    def __post_init__(self):
        prod = 1
        for p in self.factors:
            prod *= p
        if prod != self.n:
            raise PreconditionError(f"factors {self.factors} do not multiply to {self.n}")


def squarefree_support(
    window: PrimeWindow, bound: Optional[int] = None
) -> Iterator[SupportElement]:
    """Squarefree products of subsets of the window primes, ascending.

    Yields n = 1 first (empty product).  With ``bound`` set, stops once all
    remaining products exceed it; with ``bound=None`` the full 2^k subset
    family is produced, guarded by FULL_ENUMERATION_GUARD.
    """
    primes = window.primes
    if bound is None and len(primes) > FULL_ENUMERATION_GUARD:
        raise CapacityError(
            f"full enumeration of 2^{len(primes)} subsets refused "
            f"(guard {FULL_ENUMERATION_GUARD})"
        )
    # Best-first expansion: each state is (product, factor tuple, next index).
    heap = [(1, (), 0)]
    while heap:
        n, factors, idx = heapq.heappop(heap)
        yield SupportElement(n, factors)
        for j in range(idx, len(primes)):
            m = n * primes[j]
            if bound is not None and m > bound:
                break  # primes ascend, so later j only grow
            heapq.heappush(heap, (m, factors + (primes[j],), j + 1))


def support_products(window: PrimeWindow, bound: Optional[int] = None) -> list:
    """Convenience list of (n, factors) pairs from squarefree_support."""
    return [(el.n, el.factors) for el in squarefree_support(window, bound)]


def prime_log_sum(window: PrimeWindow) -> float:
    """Sum of log(p)/p over the window primes (0 for an empty window)."""
    return math.fsum(math.log(p) / p for p in window.primes)
