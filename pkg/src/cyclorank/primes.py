"""Prime generation in residue classes and splitting/ramification classification.

Primes are streamed by a segmented sieve so memory stays proportional to the
segment, not the limit.  Classification of a target prime N for an odd prime p
reduces to the single congruence N mod p^2: the prime above p ramifies in the
degree-p Kummer extension of the p-th cyclotomic field exactly when
N != 1 (mod p^2), and the p-th root of unity is a norm exactly when
N == 1 (mod p^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError

# Witness set is deterministic for all n < 3.3 * 10^24, far beyond the 2^62 cap.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_SIEVE_CAP = 1 << 30
_SEGMENT = 1 << 19


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit integers."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _base_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if mask[q]:
            mask[q * q :: q] = False
    return np.flatnonzero(mask).astype(np.int64)


def _sieve_range(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi) given base primes up to sqrt(hi-1)."""
    mask = np.ones(hi - lo, dtype=bool)
    if lo <= 1:
        mask[: min(2 - lo, hi - lo)] = False
    for q in base:
        q = int(q)
        if q * q >= hi:
            break
        start = max(q * q, ((lo + q - 1) // q) * q)
        if start < hi:
            mask[start - lo :: q] = False
    return lo + np.flatnonzero(mask)


def primes_in_range(
    lo: int, hi: int, modulus: int = 1, residues: Iterable[int] = (0,)
) -> Iterator[int]:
    """Yield primes N in [lo, hi) with N mod modulus in residues, ascending."""
    res = sorted({r % modulus for r in residues})
    if not res:
        raise DomainError("residue set must be nonempty")
    for r in res:
        if math.gcd(r, modulus) != 1 and modulus > 1:
            raise DomainError(f"residue {r} is not coprime to modulus {modulus}")
    lo = max(lo, 2)
    if hi <= lo:
        return
    base = _base_primes(math.isqrt(hi - 1) + 1)
    res_arr = np.asarray(res, dtype=np.int64)
    for seg_lo in range(lo, hi, _SEGMENT):
        seg_hi = min(seg_lo + _SEGMENT, hi)
        found = _sieve_range(seg_lo, seg_hi, base)
        if modulus > 1:
            found = found[np.isin(found % modulus, res_arr)]
        for n in found.tolist():
            yield n


def primes_in_class(
    limit: int,
    modulus: int,
    residues: Iterable[int],
    cap: int = DEFAULT_SIEVE_CAP,
) -> Iterator[int]:
    """All primes N <= limit with N mod modulus in residues, ascending.

    `cap` guards against accidental huge sweeps; pass a larger value to raise it.
    """
    if limit < 2:
        raise DomainError("limit must be at least 2")
    if limit > cap:
        raise DomainError(
            f"limit {limit} exceeds the sieve cap {cap}; pass cap= to raise it"
        )
    return primes_in_range(2, limit + 1, modulus, residues)


@dataclass(frozen=True)
class TargetClass:
    """Ramification/norm dichotomy of a target prime N for an odd prime p."""

    n: int
    p: int
    residue_mod_p2: int
    pi_ramified: bool
    zeta_is_norm: bool

    def __post_init__(self) -> None:
        assert self.pi_ramified != self.zeta_is_norm


def classify_target(n: int, p: int) -> TargetClass:
    """Classify prime N == 1 (mod p) by the congruence N mod p^2."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"p={p} must be an odd prime")
    if not is_prime(n):
        raise DomainError(f"N={n} is not prime")
    if n == p:
        raise DomainError("N must differ from p")
    if n % p != 1:
        raise DomainError(f"N must split completely: N={n} is not 1 mod p={p}")
    residue = n % (p * p)
    return TargetClass(
        n=n,
        p=p,
        residue_mod_p2=residue,
        pi_ramified=(residue != 1),
        zeta_is_norm=(residue == 1),
    )
