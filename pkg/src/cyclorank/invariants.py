"""F_N-valued product invariants and the counts mu and alpha they induce.

Three product families are evaluated through the p-th-power residue character:

  * M      = prod_{k=1}^{(N-1)/2} k^k
  * M_i    = prod_{k=1}^{N-1} prod_{a=1}^{k-1} k^(a^i)   for odd i in 1..p-4
  * U_k    = prod_{j=1}^{p-1} (1 - f^j)^(j^k)            for 0 < k < p-1

Only the power class of M and M_i is needed, so their exponents are reduced
mod p at the character level; U_k additionally reports the residue itself.
mu counts the odd i with M_i not a p-th power; alpha counts the even i with
U_(p-1-i) a p-th power.  Both counts presume p regular, guarded by the list
of irregular primes below 100.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .modmath import ModulusContext, PowerClass, find_order_p_element, power_class

IRREGULAR_PRIMES_BELOW_100 = frozenset({37, 59, 67})
REGULARITY_GUARD_BOUND = 100


def is_vetted_regular(p: int) -> bool:
    return p < REGULARITY_GUARD_BOUND and p not in IRREGULAR_PRIMES_BELOW_100


def require_regular(p: int) -> None:
    if not is_vetted_regular(p):
        raise DomainError(
            f"p={p} fails the regularity guard: regular pairs require eigenspace data"
        )


def _char_index_table(ctx: ModulusContext, f: int, upto: int) -> list[int]:
    """ind[k] for 1 <= k <= upto, extended multiplicatively from primes.

    Smallest-prime-factor sieve so each prime pays one modular exponentiation
    and each composite a single table lookup.
    """
    spf = list(range(upto + 1))
    for q in range(2, math.isqrt(upto) + 1):
        if spf[q] == q:
            for j in range(q * q, upto + 1, q):
                if spf[j] == j:
                    spf[j] = q
    p = ctx.p
    ind = [0] * (upto + 1)
    for k in range(2, upto + 1):
        q = spf[k]
        if q == k:
            ind[k] = power_class(k, ctx, f).index
        else:
            ind[k] = (ind[q] + ind[k // q]) % p
    return ind


def m_class(ctx: ModulusContext, f: int | None = None) -> PowerClass:
    """Power class of M = prod_{k<=(N-1)/2} k^k."""
    if f is None:
        f = find_order_p_element(ctx)
    half = (ctx.modulus - 1) // 2
    ind = _char_index_table(ctx, f, half)
    p = ctx.p
    total = 0
    for k in range(2, half + 1):
        total += k * ind[k]
    return PowerClass(total % p, f)


def m_class_direct(ctx: ModulusContext, f: int | None = None) -> PowerClass:
    """Oracle path for m_class: evaluate the product in F_N, then classify."""
    if f is None:
        f = find_order_p_element(ctx)
    n = ctx.modulus
    acc = 1
    for k in range(2, (n - 1) // 2 + 1):
        acc = acc * pow(k, k, n) % n
    return power_class(acc, ctx, f)


def m_i_class(ctx: ModulusContext, i: int, f: int | None = None) -> PowerClass:
    """Power class of M_i via the running sum S_i(k-1) = sum_{a<k} a^i mod p."""
    p = ctx.p
    if i % 2 == 0 or not 1 <= i <= p - 4:
        raise DomainError(f"i={i} must be odd and within 1..{p - 4}")
    if f is None:
        f = find_order_p_element(ctx)
    n = ctx.modulus
    ind = _char_index_table(ctx, f, n - 1)
    powi = [pow(r, i, p) for r in range(p)]
    total = 0
    s = 0  # S_i(k-1) mod p
    for k in range(1, n):
        total += ind[k] * s
        s += powi[k % p]
        if s >= p:
            s -= p
    return PowerClass(total % p, f)


@dataclass(frozen=True)
class MuBound:
    """mu together with the induced class-rank bound p - 2 - 2*mu for Q(N^(1/p))."""

    mu: int
    cl_f_upper: int


def mu_count(ctx: ModulusContext, f: int | None = None) -> MuBound:
    """Count odd i in 1..p-4 with M_i not a p-th power (regular p only)."""
    require_regular(ctx.p)
    if f is None:
        f = find_order_p_element(ctx)
    mu = sum(
        1 for i in range(1, ctx.p - 3, 2) if m_i_class(ctx, i, f).index != 0
    )
    return MuBound(mu=mu, cl_f_upper=ctx.p - 2 - 2 * mu)


@dataclass(frozen=True)
class UnitProduct:
    """Residue and power class of prod_j (1 - f^j)^(j^k)."""

    value: int
    cls: PowerClass


def unit_product(ctx: ModulusContext, k: int, f: int | None = None) -> UnitProduct:
    """Evaluate U_k = prod_{j=1}^{p-1} (1 - f^j)^(j^k) in F_N."""
    p = ctx.p
    if not 0 < k < p - 1:
        raise DomainError(f"k={k} must lie strictly between 0 and p-1")
    if f is None:
        f = find_order_p_element(ctx)
    n = ctx.modulus
    acc = 1
    fj = 1
    for j in range(1, p):
        fj = fj * f % n
        base = (1 - fj) % n
        if base == 0:
            raise ArithmeticError(f"reference element {f} has order below {p}")
        acc = acc * pow(base, pow(j, k, n - 1), n) % n
    return UnitProduct(value=acc, cls=power_class(acc, ctx, f))


@dataclass(frozen=True)
class AlphaCount:
    """alpha plus the per-twist indicator behind it.

    power_flags[i] is True when U_(p-1-i) is a p-th power, i.e. when the
    twist-i cohomological contribution to the refined lower bound is 1.
    """

    alpha: int
    power_flags: dict[int, bool]


def alpha_count(ctx: ModulusContext, f: int | None = None) -> AlphaCount:
    """Count positive even i < p-1 with U_(p-1-i) a p-th power in F_N^x.

    Empty range for p = 3, so alpha is identically zero there.
    """
    if f is None:
        f = find_order_p_element(ctx)
    flags = {
        i: unit_product(ctx, ctx.p - 1 - i, f).cls.index == 0
        for i in range(2, ctx.p - 2, 2)
    }
    return AlphaCount(alpha=sum(flags.values()), power_flags=flags)


@dataclass(frozen=True)
class InvariantRecord:
    """Everything the product invariants say about one (N, p)."""

    n: int
    p: int
    f: int
    m_cls: PowerClass
    mi_classes: dict[int, PowerClass]
    mk_products: dict[int, UnitProduct]
    mu: int | None
    cl_f_upper: int | None
    alpha: int
    power_flags: dict[int, bool]

    def __post_init__(self) -> None:
        assert 0 <= self.alpha <= max(0, (self.p - 3) // 2)
        if 1 in self.mi_classes:
            assert (self.m_cls.index == 0) == (self.mi_classes[1].index == 0)


def invariant_record(n: int, p: int, f: int | None = None) -> InvariantRecord:
    """Assemble the full invariant set for one target prime.

    Includes the O(N) products, so this is for single-N queries, not scans.
    """
    ctx = ModulusContext(n, p)
    if f is None:
        f = find_order_p_element(ctx)
    mi = {i: m_i_class(ctx, i, f) for i in range(1, p - 3, 2)}
    mk = {k: unit_product(ctx, k, f) for k in range(1, p - 1)}
    if is_vetted_regular(p):
        mb = mu_count(ctx, f)
        mu, cl_f_upper = mb.mu, mb.cl_f_upper
    else:
        mu, cl_f_upper = None, None
    ac = alpha_count(ctx, f)
    return InvariantRecord(
        n=n,
        p=p,
        f=f,
        m_cls=m_class(ctx, f),
        mi_classes=mi,
        mk_products=mk,
        mu=mu,
        cl_f_upper=cl_f_upper,
        alpha=ac.alpha,
        power_flags=ac.power_flags,
    )
