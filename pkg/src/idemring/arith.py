"""Exact integer kernel: factorization, extended gcd and modular arithmetic.

Every public input is bounded to the unsigned 64-bit range.  Python integers
are unbounded, so products of two residues never overflow; the bound exists
so that the behaviour matches a fixed-width deployment and so that the
Miller-Rabin witness set below stays deterministic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

U64_MAX = (1 << 64) - 1

# Deterministic for every n < 3.3e24, which covers the whole 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 1 << 12


class DomainError(ValueError):
    """Raised when an argument lies outside the documented domain."""


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of ``n`` as sorted ``(prime, exponent)`` pairs."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [q for q, _ in self.factors]
        if primes != sorted(set(primes)):
            raise DomainError(f"primes not strictly increasing: {primes}")
        if any(a < 1 for _, a in self.factors):
            raise DomainError("every exponent must be >= 1")
        if math.prod(q**a for q, a in self.factors) != self.n:
            raise DomainError(f"factors do not multiply to {self.n}")

    @property
    def k(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def primes(self) -> list[int]:
        return [q for q, _ in self.factors]

    @property
    def prime_powers(self) -> list[int]:
        """The coprime building blocks ``q**a``, in prime order."""
        return [q**a for q, a in self.factors]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __str__(self) -> str:
        return "*".join(f"{q}^{a}" if a > 1 else str(q) for q, a in self.factors)


def _check_u64(name: str, value: int) -> None:
    if not 0 <= value <= U64_MAX:
        raise DomainError(f"{name}={value} is outside the unsigned 64-bit range")


def mulmod(a: int, b: int, n: int) -> int:
    """Return ``a*b mod n`` exactly for 64-bit operands."""
    _check_u64("n", n)
    if n == 0:
        raise DomainError("modulus must be positive")
    return (a * b) % n


def addmod(a: int, b: int, n: int) -> int:
    _check_u64("n", n)
    if n == 0:
        raise DomainError("modulus must be positive")
    return (a + b) % n


def submod(a: int, b: int, n: int) -> int:
    _check_u64("n", n)
    if n == 0:
        raise DomainError("modulus must be positive")
    return (a - b) % n


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid.

    Returns ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``.  The
    coefficients are signed.

    >>> ext_gcd(12, 18)
    (6, -1, 1)
    """
    g, _, x, y = ext_gcd_steps(a, b)
    return g, x, y


def ext_gcd_steps(a: int, b: int) -> tuple[int, int, int, int]:
    """Like :func:`ext_gcd` but also reports the number of division steps.

    Returns ``(g, steps, x, y)``.
    """
    if a < 0 or b < 0:
        raise DomainError("ext_gcd expects nonnegative arguments")
    if a == 0 and b == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    steps = 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
        steps += 1
    return old_r, steps, old_x, old_y


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the 64-bit range."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
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
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batch overshot; walk back one step at a time
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g


def _split_composite(n: int, out: dict[int, int], rng: random.Random) -> None:
    stack = [n]
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            out[v] = out.get(v, 0) + 1
            continue
        r = math.isqrt(v)
        if r * r == v:
            stack += [r, r]
            continue
        d = _pollard_brent(v, rng)
        stack += [d, v // d]


def _small_primes(limit: int) -> tuple[int, ...]:
    # 2, 3, then the 6k +/- 1 candidates, keeping those with no smaller factor
    found = [2, 3]
    d = 5
    while d <= limit:
        for c in (d, d + 2):
            if c <= limit and all(c % q for q in found if q * q <= c):
                found.append(c)
        d += 6
    return tuple(found)


_TRIAL_PRIMES = _small_primes(_TRIAL_LIMIT)


def factorize(n: int) -> Factorization:
    """Factor ``n`` (``2 <= n < 2**64``) into sorted prime powers.

    Trial division by the primes below 4096 (2, 3, then 6k +/- 1) removes
    small factors; a larger cofactor is either certified prime by
    Miller-Rabin or split with Pollard-Brent rho.  The rho walk is seeded from ``n`` so results, and timings, are
    reproducible.

    >>> factorize(13860).factors
    ((2, 2), (3, 2), (5, 1), (7, 1), (11, 1))
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected an integer, got {n!r}")
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    _check_u64("n", n)

    found: dict[int, int] = {}
    rest = n
    for d in _TRIAL_PRIMES:
        if d * d > rest:
            # no factor below sqrt(rest): what is left is prime
            if rest > 1:
                found[rest] = 1
            break
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            found[d] = e
    else:
        if rest > 1:
            _split_composite(rest, found, random.Random(n))
    return Factorization(n, tuple(sorted(found.items())))
