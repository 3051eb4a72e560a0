"""Modular arithmetic kernel and p-th-power residue machinery over F_N.

All character computations run through a ModulusContext: a prime modulus N
below 2^62 together with an odd prime p dividing N-1 and the cofactor
(N-1)/p.  The p-th-power residue character is chi(x) = x^((N-1)/p), valued in
the order-p subgroup of F_N^x; fixing a reference element f of order p turns
chi into an index in 0..p-1 that is additive under multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count

from .errors import DomainError
from .primes import is_prime

MODULUS_BITS = 62


@dataclass(frozen=True)
class ModulusContext:
    """Prime modulus N with an odd prime p | N-1 and the cofactor (N-1)/p.

    Immutable; safe to share across workers.  Python integers already give
    exact double-width products, so no extra reduction constants are stored;
    the 2^62 width cap is kept as an interface contract.
    """

    modulus: int
    p: int
    cofactor: int = field(init=False)

    def __post_init__(self) -> None:
        n, p = self.modulus, self.p
        if n >= 1 << MODULUS_BITS:
            raise DomainError(f"modulus {n} exceeds the 2^{MODULUS_BITS} bound")
        if p < 3 or p % 2 == 0 or not is_prime(p):
            raise DomainError(f"p={p} must be an odd prime")
        if not is_prime(n):
            raise DomainError(f"modulus {n} is not prime")
        if n == p or (n - 1) % p != 0:
            raise DomainError(f"modulus {n} is not 1 mod p={p}")
        object.__setattr__(self, "cofactor", (n - 1) // p)


@dataclass(frozen=True)
class PowerClass:
    """Discrete log of chi(x) to the reference order-p element.

    index == 0 exactly when x is a p-th power in F_N^x; indices add mod p
    under multiplication of arguments.  Indices are only comparable when
    taken against the same base element.
    """

    index: int
    base: int

    def __bool__(self) -> bool:  # truthy == nontrivial class
        return self.index != 0


def mod_pow(base: int, exp: int, ctx: ModulusContext) -> int:
    """base^exp mod N in O(log exp) multiplications."""
    if not 0 <= base < ctx.modulus:
        raise DomainError(f"base {base} out of range for modulus {ctx.modulus}")
    if exp < 0:
        raise DomainError("exponent must be non-negative")
    return pow(base, exp, ctx.modulus)


def find_order_p_element(ctx: ModulusContext) -> int:
    """First g^((N-1)/p) != 1 over g = 2, 3, 4, ...; deterministic per (N, p)."""
    n = ctx.modulus
    for g in count(2):
        f = pow(g, ctx.cofactor, n)
        if f != 1:
            return f
    raise AssertionError("unreachable")


def power_class(x: int, ctx: ModulusContext, f: int) -> PowerClass:
    """Index of chi(x) = x^((N-1)/p) relative to f, by linear scan over f^0..f^(p-1)."""
    n = ctx.modulus
    if x % n == 0:
        raise DomainError("character undefined at zero")
    chi = pow(x, ctx.cofactor, n)
    cur = 1
    for idx in range(ctx.p):
        if cur == chi:
            return PowerClass(idx, f)
        cur = cur * f % n
    raise DomainError(f"reference element {f} does not have order {ctx.p}")


def is_9th_power(x: int, ctx: ModulusContext) -> bool:
    """x^((N-1)/9) == 1.  The exponent is even for odd N, so signs never matter."""
    n = ctx.modulus
    if (n - 1) % 9 != 0:
        raise DomainError("9th power test requires N = 1 (mod 9)")
    if x % n == 0:
        raise DomainError("9th power test undefined at zero")
    return pow(x, (n - 1) // 9, n) == 1


def factorial_mod(m: int, ctx: ModulusContext) -> int:
    """m! mod N by direct accumulation; requires m < N."""
    n = ctx.modulus
    if not 0 <= m < n:
        raise DomainError(f"factorial argument {m} must lie in [0, N)")
    acc = 1
    for k in range(2, m + 1):
        acc = acc * k % n
    return acc
