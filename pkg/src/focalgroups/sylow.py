"""Order factorization, Bezout coefficients and Sylow subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .errors import NotCoprime, NotPrime
from .groups import FiniteGroup, Subgroup, normalizer, subgroup_generated, trivial_subgroup

__all__ = [
    "OrderFactorization",
    "BezoutPair",
    "is_prime",
    "prime_divisors",
    "factor_order",
    "bezout",
    "sylow_subgroup",
    "p_elements",
    "is_p_power",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


@dataclass(frozen=True)
class OrderFactorization:
    """``n = p**a * m`` with ``p`` not dividing ``m``."""

    p: int
    a: int
    m: int
    n: int

    @property
    def p_part(self) -> int:
        return self.p**self.a


@dataclass(frozen=True)
class BezoutPair:
    lam: int
    mu: int


def factor_order(n: int, p: int) -> OrderFactorization:
    _require_prime(p)
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    a, m = 0, n
    while m % p == 0:
        m //= p
        a += 1
    return OrderFactorization(p, a, m, n)


def bezout(pa: int, m: int) -> BezoutPair:
    """Integers with ``1 == lam * pa + mu * m``."""
    if gcd(pa, m) != 1:
        raise NotCoprime(f"gcd({pa}, {m}) != 1")
    mu = pow(m, -1, pa) if pa > 1 else 0
    lam = (1 - mu * m) // pa
    return BezoutPair(lam, mu)


def p_elements(G: FiniteGroup, p: int) -> frozenset[int]:
    """Elements whose order is a power of ``p`` (the identity included)."""
    _require_prime(p)
    orders = G.element_orders()
    return frozenset(i for i, o in enumerate(orders.tolist()) if is_p_power(o, p))


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup, built by climbing normalizers.

    Starting from the cyclic group of the least nontrivial ``p``-element, the
    current ``p``-subgroup ``H`` is enlarged by the least ``p``-element of
    ``N_G(H) \\ H`` until ``|H| = p**a``.  Fully deterministic.
    """
    _require_prime(p)

    def compute():
        target = factor_order(G.order, p).p_part
        if target == 1:
            return trivial_subgroup(G)
        pel = np.zeros(G.order, dtype=bool)
        pel[list(p_elements(G, p))] = True
        H = trivial_subgroup(G)
        while H.order < target:
            N = normalizer(G, H)
            candidates = np.flatnonzero(N.mask & pel & ~H.mask)
            # N_G(H)/H has order divisible by p while H is not Sylow, so a
            # p-element of N_G(H) outside H exists
            y = int(candidates[0])
            H = subgroup_generated(G, list(H.generators) + [y])
        return H

    return G.memo(("sylow", p), compute)
