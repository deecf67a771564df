"""Coprime-split construction of the idempotents of Z_n.

Write ``n = p*m`` with ``gcd(p, m) == 1`` and ``p, m >= 2``, and let
``t = m mod p``.  There is exactly one ``r`` in ``[1, p-1]`` with
``p | r*t + 1``; it yields the pair of nontrivial idempotents
``r*m + 1`` (0 mod p, 1 mod m) and ``(p - r)*m`` (1 mod p, 0 mod m).  Running
over every subset of the prime-power factors of ``n`` gives all of them.

Three ways of finding ``r`` are provided and must always agree:

* :func:`find_r_bezout` reads it off the Bezout identity ``p*x + m*y = 1``;
* :func:`find_r_usearch` scans the quotient ``u = (r*t + 1)/p``, which is
  bounded by ``1 <= u <= t``;
* :func:`find_r_naive` scans ``r`` over ``[1, p-1]`` directly.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .arith import U64_MAX, DomainError, Factorization, ext_gcd_steps, factorize

METHODS = ("prop51", "prop52", "prop53")


class InvariantError(RuntimeError):
    """A mathematical guarantee failed to hold; this is a bug, not bad input."""


@dataclass(frozen=True)
class Split:
    """One representation ``n = p*m`` selected by a subset of factor indices.

    ``mask`` has bit ``i`` set when the ``i``-th prime power of ``n`` (primes
    ascending) belongs to ``p``.
    """

    n: int
    mask: int
    p: int
    m: int
    fac: Factorization = field(compare=False, repr=False)

    def __post_init__(self):
        if self.p < 2 or self.m < 2:
            raise DomainError(f"split needs p, m >= 2 (got p={self.p}, m={self.m})")
        if self.p * self.m != self.n:
            raise DomainError(f"{self.p}*{self.m} != {self.n}")
        if math.gcd(self.p, self.m) != 1:
            raise DomainError(f"gcd({self.p}, {self.m}) != 1")
        full = (1 << self.fac.k) - 1
        if self.mask in (0, full) or self.mask & ~full:
            raise DomainError(f"mask {self.mask:#b} is not a proper subset")

    @classmethod
    def from_mask(cls, fac: Factorization, mask: int) -> "Split":
        powers = fac.prime_powers
        p = math.prod(q for i, q in enumerate(powers) if mask >> i & 1)
        return cls(fac.n, mask, p, fac.n // p, fac)

    @property
    def h(self) -> int:
        """Number of prime-power factors on the ``p`` side."""
        return bin(self.mask).count("1")

    def complement(self) -> "Split":
        """The same factorization with the roles of ``p`` and ``m`` swapped."""
        full = (1 << self.fac.k) - 1
        return Split(self.n, full ^ self.mask, self.m, self.p, self.fac)

    def p_factors(self) -> list[tuple[int, int]]:
        return [f for i, f in enumerate(self.fac.factors) if self.mask >> i & 1]

    def m_factors(self) -> list[tuple[int, int]]:
        return [f for i, f in enumerate(self.fac.factors) if not self.mask >> i & 1]


def split_from_parts(
    p: int, m: int, p_factors: Iterable[tuple[int, int]] | None = None
) -> Split:
    """Build the :class:`Split` for ``n = p*m`` from its two coprime sides.

    ``p_factors`` may be given when the factorization of ``p`` is already
    known; only ``m`` is factored then.
    """
    if p < 2 or m < 2:
        raise DomainError(f"split needs p, m >= 2 (got p={p}, m={m})")
    if math.gcd(p, m) != 1:
        raise DomainError(f"gcd({p}, {m}) != 1")
    pf = list(p_factors) if p_factors is not None else list(factorize(p).factors)
    fac = Factorization(p * m, tuple(sorted(pf + list(factorize(m).factors))))
    in_p = {q for q, _ in pf}
    mask = sum(1 << i for i, (q, _) in enumerate(fac.factors) if q in in_p)
    return Split(fac.n, mask, p, m, fac)


@dataclass(frozen=True)
class SplitSolution:
    """Division data ``m = p*s + t``, the unique ``r``, ``u = (r*t+1)/p`` and
    the two idempotents produced by a split."""

    split: Split
    s: int
    t: int
    r: int
    u: int
    e_plus: int
    e_zero: int

    @property
    def n(self) -> int:
        return self.split.n

    @property
    def p(self) -> int:
        return self.split.p

    @property
    def m(self) -> int:
        return self.split.m


def _solution(split: Split, r: int) -> SplitSolution:
    p, m, n = split.p, split.m, split.n
    s, t = divmod(m, p)
    num = r * t + 1
    if not 1 <= r <= p - 1 or num % p:
        raise InvariantError(f"r={r} does not satisfy {p} | r*{t}+1")
    return SplitSolution(split, s, t, r, num // p, (r * m + 1) % n, (p - r) * m % n)


# ---------------------------------------------------------------------------
# r-finders.  Each returns (r, number of elementary steps taken).


def find_r_bezout(p: int, m: int) -> tuple[int, int]:
    """``r`` from the Bezout identity; the step count is Euclid's divisions."""
    g, steps, _, y = ext_gcd_steps(p, m)
    if g != 1:
        raise DomainError(f"gcd({p}, {m}) = {g}, split must be coprime")
    # p*x + m*y = 1  =>  m*(-y) = -1 (mod p)
    return -y % p, steps


def find_r_usearch(p: int, t: int) -> tuple[int, int]:
    """``r`` by scanning ``u = 1..t`` for an integral ``r = (p*u - 1)/t``."""
    for u in range(1, t + 1):
        num = p * u - 1
        if num % t == 0 and 1 <= num // t <= p - 1:
            return num // t, u
    raise InvariantError(f"no u in [1, {t}] works for p={p}")


def find_r_naive(p: int, t: int) -> tuple[int, int]:
    """``r`` by testing every candidate in ``[1, p-1]``."""
    for r in range(1, p):
        if (r * t + 1) % p == 0:
            return r, r
    raise InvariantError(f"no r in [1, {p - 1}] works for p={p}, t={t}")


def solve_split(split: Split) -> SplitSolution:
    r, _ = find_r_bezout(split.p, split.m)
    return _solution(split, r)


def solve_split_usearch(split: Split) -> SplitSolution:
    r, _ = find_r_usearch(split.p, split.m % split.p)
    return _solution(split, r)


def solve_split_naive(split: Split) -> SplitSolution:
    r, _ = find_r_naive(split.p, split.m % split.p)
    return _solution(split, r)


def mirror_solution(sol: SplitSolution) -> SplitSolution:
    """Transport a solution from ``(p, p*s + t)`` to ``(p, p*s + p - t)``.

    The mirrored split reuses ``r`` as ``p - r`` without searching again.
    """
    p, s, t, r = sol.p, sol.s, sol.t, sol.r
    m1 = p * s + p - t
    if m1 < 2 or math.gcd(p, m1) != 1:
        raise DomainError(f"mirror of (p={p}, m={sol.m}) leaves the coprime case")
    if p * m1 > U64_MAX:
        raise DomainError(f"mirror of (p={p}, m={sol.m}) leaves the 64-bit range")
    split1 = split_from_parts(p, m1, sol.split.p_factors())
    return _solution(split1, p - r)


# ---------------------------------------------------------------------------
# Small-prime fast paths: n = q*m with q in {2, 3, 5}.  Keyed by m mod q,
# each entry lists the two idempotents as (coefficient of m, plus one?).

_SMALL_PRIME_CASES: dict[int, dict[int, tuple[tuple[int, bool], tuple[int, bool]]]] = {
    2: {1: ((1, False), (1, True))},
    3: {
        2: ((1, True), (2, False)),
        1: ((1, False), (2, True)),
    },
    5: {
        1: ((1, False), (4, True)),
        2: ((3, False), (2, True)),
        3: ((2, False), (3, True)),
        4: ((4, False), (1, True)),
    },
}


def small_prime_idempotents(n: int, q: int) -> tuple[int, int] | None:
    """Closed-form idempotent pair for ``n = q*m``, ``q`` in {2, 3, 5}.

    Returns ``None`` when ``q`` does not split off as a coprime factor.

    >>> small_prime_idempotents(30, 3)
    (10, 21)
    """
    if q not in _SMALL_PRIME_CASES:
        raise DomainError(f"no closed form for q={q}; expected 2, 3 or 5")
    if n % q:
        return None
    m = n // q
    if m < 2 or m % q == 0:
        return None
    (c1, one1), (c2, one2) = _SMALL_PRIME_CASES[q][m % q]
    return tuple(sorted((c1 * m + one1, c2 * m + one2)))


# ---------------------------------------------------------------------------
# Families of splits.


def enumerate_splits(fac: Factorization, h: int) -> list[Split]:
    """All ``C(k, h)`` splits whose ``p`` side has ``h`` prime powers.

    Subsets come in lexicographic order of their index tuples, which is the
    row order of the worked tables.
    """
    k = fac.k
    if k < 2 or not 1 <= h <= k - 1:
        raise DomainError(f"h={h} must lie in [1, {k - 1}] (k={k})")
    return [
        Split.from_mask(fac, sum(1 << i for i in combo))
        for combo in combinations(range(k), h)
    ]


def all_splits(fac: Factorization) -> Iterator[Split]:
    for h in range(1, fac.k):
        yield from enumerate_splits(fac, h)


def h_plus(fac: Factorization, h: int) -> list[int]:
    """Sorted union of both idempotents over every split in family ``h``."""
    out = set()
    for split in enumerate_splits(fac, h):
        sol = solve_split(split)
        out.update((sol.e_plus, sol.e_zero))
    return sorted(out)


@dataclass(frozen=True)
class IdempotentSet:
    """Sorted, duplicate-free idempotent residues of Z_n."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        ms = self.members
        if any(a >= b for a, b in zip(ms, ms[1:])):
            raise InvariantError("members must be strictly increasing")
        if ms and not (0 <= ms[0] and ms[-1] < self.n):
            raise InvariantError(f"members must lie in [0, {self.n})")

    @classmethod
    def of(cls, n: int, residues: Iterable[int]) -> "IdempotentSet":
        return cls(n, tuple(sorted(set(residues))))

    def __contains__(self, e) -> bool:
        i = bisect_left(self.members, e)
        return i < len(self.members) and self.members[i] == e

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


@dataclass
class MethodReport:
    """Which splits a working method solved and which idempotent forms it kept.

    ``forms`` is ``("plus", "zero")`` for prop51, ``("plus",)`` for prop52
    and ``("zero",)`` for prop53.
    """

    fac: Factorization
    method: str
    forms: tuple[str, ...]
    blocks: list[tuple[int, list[SplitSolution]]]

    @property
    def solutions(self) -> list[SplitSolution]:
        return [sol for _, sols in self.blocks for sol in sols]

    def idempotents(self) -> IdempotentSet:
        found = [0, 1]
        for sol in self.solutions:
            if "plus" in self.forms:
                found.append(sol.e_plus)
            if "zero" in self.forms:
                found.append(sol.e_zero)
        return IdempotentSet.of(self.fac.n, found)


def method_report(fac: Factorization, method: str) -> MethodReport:
    """Run one of the three complete working methods and keep the trace.

    prop51 solves the families ``1..floor((k-1)/2)`` in full and keeps both
    idempotents of each split; for even ``k`` it adds the middle family
    restricted to subsets containing factor 0, so that no two kept splits
    are complements of each other.  prop52 and prop53 solve every family
    ``1..k-1`` but keep only ``r*m + 1`` or only ``(p - r)*m`` respectively.
    """
    k = fac.k
    if method == "prop51":
        blocks = [(h, enumerate_splits(fac, h)) for h in range(1, (k - 1) // 2 + 1)]
        if k % 2 == 0:
            middle = [s for s in enumerate_splits(fac, k // 2) if s.mask & 1]
            blocks.append((k // 2, middle))
        forms = ("plus", "zero")
    elif method in ("prop52", "prop53"):
        blocks = [(h, enumerate_splits(fac, h)) for h in range(1, k)]
        forms = ("plus",) if method == "prop52" else ("zero",)
    else:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    solved = [(h, [solve_split(s) for s in splits]) for h, splits in blocks]
    return MethodReport(fac, method, forms, solved)


def all_idempotents_prop51(fac: Factorization) -> IdempotentSet:
    return method_report(fac, "prop51").idempotents()


def all_idempotents_prop52(fac: Factorization) -> IdempotentSet:
    return method_report(fac, "prop52").idempotents()


def all_idempotents_prop53(fac: Factorization) -> IdempotentSet:
    return method_report(fac, "prop53").idempotents()
