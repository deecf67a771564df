"""Ground-truth idempotent generators that share no code with the engine.

``scan_idempotents`` applies the definition ``a*a == a (mod n)`` to every
residue.  ``crt_idempotents`` solves the ``2**k`` systems "1 modulo the
chosen prime powers, 0 modulo the rest" by Garner's incremental method,
using the interpreter's own modular inverse.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .arith import DomainError, Factorization

DEFAULT_SCAN_CEILING = 10**7
SCAN_CEILING_ENV = "IDEMRING_SCAN_CEILING"

_CHUNK = 1 << 20


class OracleMethod(enum.Enum):
    DEFINITION_SCAN = "scan"
    CRT_RECONSTRUCTION = "crt"


@dataclass(frozen=True)
class OracleResult:
    n: int
    members: tuple[int, ...]
    method: OracleMethod


def scan_ceiling() -> int:
    """The largest ``n`` the definition scan accepts.

    Read from ``IDEMRING_SCAN_CEILING`` when set.
    """
    raw = os.environ.get(SCAN_CEILING_ENV)
    if raw is None:
        return DEFAULT_SCAN_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{SCAN_CEILING_ENV}={raw!r} is not an integer") from None
    if value < 2:
        raise DomainError(f"{SCAN_CEILING_ENV} must be >= 2")
    return value


_BASE = np.arange(_CHUNK, dtype=np.uint64)


def _scan_chunk(n: int, lo: int, hi: int) -> list[int]:
    if n <= 1 << 32:
        # a < 2**32 so a*a fits in uint64
        a = _BASE[: hi - lo] + np.uint64(lo)
        hits = np.flatnonzero(a * a % np.uint64(n) == a)
        return (hits + lo).tolist()
    return [a for a in range(lo, hi) if a * a % n == a]


def scan_idempotents(n: int, ceiling: int | None = None, workers: int = 1) -> OracleResult:
    """All ``a`` in ``[0, n)`` with ``a*a == a (mod n)``, by exhaustive scan.

    The range is cut into fixed chunks; with ``workers > 1`` the chunks are
    scanned on a thread pool.  Output does not depend on ``workers``.
    """
    limit = scan_ceiling() if ceiling is None else ceiling
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if n > limit:
        raise DomainError(f"n={n} exceeds the scan ceiling {limit}")
    bounds = [(lo, min(lo + _CHUNK, n)) for lo in range(0, n, _CHUNK)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda b: _scan_chunk(n, *b), bounds))
    else:
        parts = [_scan_chunk(n, lo, hi) for lo, hi in bounds]
    members = tuple(a for part in parts for a in part)
    return OracleResult(n, members, OracleMethod.DEFINITION_SCAN)


def crt_idempotents(fac: Factorization) -> OracleResult:
    """Reconstruct one idempotent per subset of the prime-power factors."""
    moduli = fac.prime_powers
    prefix = [1]
    for q in moduli:
        prefix.append(prefix[-1] * q)
    inverses = [pow(prefix[i] % q, -1, q) for i, q in enumerate(moduli)]

    found = []
    for subset in range(1 << len(moduli)):
        x = 0
        for i, q in enumerate(moduli):
            target = subset >> i & 1
            c = (target - x % q) * inverses[i] % q
            x += c * prefix[i]
        found.append(x)
    return OracleResult(fac.n, tuple(sorted(found)), OracleMethod.CRT_RECONSTRUCTION)
