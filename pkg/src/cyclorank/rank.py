"""Exact 3-rank by cross-checkable methods, and general-p rank bounds.

For p = 3 the rank of the degree-6 Galois closure's class group is exactly 1
or 2, decided by divisibility data of the representation 4N = A^2 + 27B^2:

  * cornacchia:  N != 1 (mod 9): rank 2 iff 3 | B;
                 N  = 1 (mod 9): rank 2 iff A is a 9th power mod N.
  * gerth:       2 - s from the cubic-symbol matrix (N != 1 (mod 9) only).
  * star:        rank 2 iff a generator is +-zeta_3^v 2^w (mod 9) (same range).
  * factorial:   rank 2 iff ((N-1)/3)! is a cubic residue (N = 1 (mod 9) only;
                 O(N), kept as an independent oracle).

For general regular p only bounds are reported: the coarse envelope
(p-1)/2 .. (p-1)(p-2) and the alpha-refined window
(p-1)/2 + alpha .. (p-1)(p-2) - (p-1)((p-1)/2 - 1 - alpha).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import eisenstein, invariants
from .errors import DomainError
from .modmath import ModulusContext, factorial_mod, find_order_p_element, is_9th_power
from .primes import TargetClass, classify_target, is_prime

RANK3_METHODS = ("cornacchia", "gerth", "star", "factorial")


def _rank3_cornacchia(n: int, rep: eisenstein.QuadRep) -> int:
    if n % 9 == 1:
        ctx = ModulusContext(n, 3)
        return 2 if is_9th_power(abs(rep.A) % n, ctx) else 1
    return 2 if rep.B % 3 == 0 else 1


def _rank3_factorial(n: int) -> int:
    ctx = ModulusContext(n, 3)
    fm = factorial_mod((n - 1) // 3, ctx)
    return 2 if pow(fm, ctx.cofactor, n) == 1 else 1


def rank3_methods(n: int, methods: tuple[str, ...] = RANK3_METHODS) -> dict[str, int]:
    """Run every requested method that is valid for N's class mod 9."""
    if n == 3 or not is_prime(n) or n % 3 != 1:
        raise DomainError(f"N={n} must be a prime that is 1 mod 3 and differs from 3")
    one_mod_9 = n % 9 == 1
    out: dict[str, int] = {}
    rep = None
    for method in methods:
        if method == "cornacchia":
            rep = rep or eisenstein.represent_4n(n)
            out[method] = _rank3_cornacchia(n, rep)
        elif method == "gerth" and not one_mod_9:
            out[method] = 2 - eisenstein.gerth_matrix(n).rank
        elif method == "star" and not one_mod_9:
            out[method] = 2 if eisenstein.star_condition(n) else 1
        elif method == "factorial" and one_mod_9:
            out[method] = _rank3_factorial(n)
    return out


def rank3(n: int, method: str = "cornacchia") -> int:
    """Exact 3-rank (1 or 2) of the class group of Q(zeta_3, N^(1/3))."""
    if method == "all":
        results = rank3_methods(n)
        if len(set(results.values())) != 1:
            raise AssertionError(f"rank criteria disagree at N={n}: {results}")
        return next(iter(results.values()))
    if method not in RANK3_METHODS:
        raise DomainError(f"unknown method {method!r}; pick from {RANK3_METHODS + ('all',)}")
    results = rank3_methods(n, (method,))
    if method not in results:
        raise DomainError(f"method {method!r} is not valid for N={n} (mod 9 class)")
    return results[method]


def odd_twist_count(p: int) -> int:
    """Number of odd j in 1..p-2 with j != 1 (mod p-1), i.e. (p-3)/2.

    These are the twists whose cohomological contribution to the lower bound
    is unconditionally 1 for regular p.
    """
    invariants.require_regular(p)
    return sum(1 for j in range(1, p - 1, 2) if j % (p - 1) != 1)


@dataclass(frozen=True)
class RankReport:
    """Per-(N, p) record of classification, exact rank or bounds, and witnesses.

    exact_rank3 is only ever set for p = 3; for larger p the criteria yield
    bounds, never exact values, and the field stays None.
    """

    n: int
    p: int
    target_class: TargetClass
    rep: eisenstein.QuadRep | None
    exact_rank3: int | None
    methods_agreed: bool | None
    alpha: int | None
    lower: int
    upper: int
    coarse_lower: int
    coarse_upper: int
    cl_f_upper: int | None = None

    def __post_init__(self) -> None:
        assert self.coarse_lower <= self.lower <= self.upper <= self.coarse_upper
        if self.p == 3:
            assert (self.lower, self.upper) == (1, 2)
            assert self.exact_rank3 in (1, 2)


def bounds(n: int, p: int, cl_k_rank: int = 0, include_cl_f: bool = False) -> RankReport:
    """Rank bounds for (N, p); exact value attached when p = 3.

    cl_k_rank = 0 asserts p regular (the guard rejects vetted-irregular and
    unvetted p); supplying cl_k_rank >= 1 switches the upper bound to
    p * cl_k_rank + (3/2)(p-1)^2, valid without regularity.  include_cl_f
    additionally computes the O(N) mu-based bound on the degree-p subfield.
    """
    if cl_k_rank < 0:
        raise DomainError("cl_k_rank must be non-negative")
    target = classify_target(n, p)
    regular = invariants.is_vetted_regular(p)
    if not regular and cl_k_rank == 0:
        raise DomainError(
            f"p={p} fails the regularity guard; supply cl_k_rank to get coarse bounds"
        )
    coarse_lower = (p - 1) // 2
    if cl_k_rank == 0:
        coarse_upper = (p - 1) * (p - 2)
    else:
        coarse_upper = p * cl_k_rank + 3 * (p - 1) * (p - 1) // 2

    alpha: int | None = None
    cl_f_upper: int | None = None
    if regular:
        ctx = ModulusContext(n, p)
        f = find_order_p_element(ctx)
        alpha = invariants.alpha_count(ctx, f).alpha
        lower = coarse_lower + alpha
        upper = (p - 1) * (p - 2) - (p - 1) * ((p - 1) // 2 - 1 - alpha)
        if cl_k_rank:
            upper = min(upper, coarse_upper)
        if include_cl_f:
            cl_f_upper = invariants.mu_count(ctx, f).cl_f_upper
    else:
        lower, upper = coarse_lower, coarse_upper

    rep = None
    exact = None
    agreed = None
    if p == 3:
        # Every cheap applicable method; the O(N) factorial path stays opt-in.
        results = rank3_methods(n, ("cornacchia", "gerth", "star"))
        agreed = len(set(results.values())) == 1
        exact = results["cornacchia"]
        rep = eisenstein.represent_4n(n)
    return RankReport(
        n=n,
        p=p,
        target_class=target,
        rep=rep,
        exact_rank3=exact,
        methods_agreed=agreed,
        alpha=alpha,
        lower=lower,
        upper=upper,
        coarse_lower=coarse_lower,
        coarse_upper=coarse_upper,
        cl_f_upper=cl_f_upper,
    )
