import itertools

import pytest
from hypothesis import given, strategies as st

from focalgroups.corpus import build_named, default_corpus, symmetric
from focalgroups.errors import NotCoprime, NotPrime
from focalgroups.groups import conjugate_subgroup, subgroup_generated
from focalgroups.sylow import bezout, factor_order, is_prime, p_elements, prime_divisors, sylow_subgroup


@pytest.mark.parametrize("n, p, a, m", [(24, 2, 3, 3), (24, 5, 0, 24), (6, 3, 1, 2), (1, 7, 0, 1), (168, 2, 3, 21)])
def test_factor_order(n, p, a, m):
    f = factor_order(n, p)
    assert (f.a, f.m, f.n) == (a, m, n)
    assert f.p_part * f.m == n and f.m % p != 0


def test_factor_order_needs_prime():
    with pytest.raises(NotPrime):
        factor_order(24, 4)


@pytest.mark.parametrize("pa, m", [(8, 3), (1, 5), (2, 3), (9, 8), (7, 24)])
def test_bezout(pa, m):
    pair = bezout(pa, m)
    assert pair.lam * pa + pair.mu * m == 1


def test_bezout_examples_exact():
    assert (bezout(1, 7).lam, bezout(1, 7).mu) == (1, 0)
    assert (bezout(8, 3).lam, bezout(8, 3).mu) == (-1, 3)
    assert (bezout(2, 3).lam, bezout(2, 3).mu) == (-1, 1)
    with pytest.raises(NotCoprime):
        bezout(4, 6)


@given(st.integers(1, 10_000), st.integers(1, 10_000))
def test_bezout_property(x, y):
    from math import gcd

    if gcd(x, y) == 1:
        pair = bezout(x, y)
        assert pair.lam * x + pair.mu * y == 1


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_divisors(168) == [2, 3, 7]
    assert prime_divisors(1) == []


def test_sylow_examples(S3, S4):
    P = sylow_subgroup(S4, 2)
    assert P.order == 8
    # oracle: order-8 subgroups found by brute force over pairs of generators
    found = set()
    for a, b in itertools.combinations(range(24), 2):
        H = subgroup_generated(S4, [a, b])
        if H.order == 8:
            found.add(H)
    assert len(found) == 3 and P in found
    P3 = sylow_subgroup(S3, 3)
    assert P3 == subgroup_generated(S3, [S3.index("(1 2 3)")])
    assert sylow_subgroup(S3, 5).is_trivial()


def test_p_elements(S3):
    assert p_elements(S3, 3) == frozenset(S3.indices("()", "(1 2 3)", "(1 3 2)"))
    assert p_elements(S3, 2) == frozenset(S3.indices("()", "(1 2)", "(1 3)", "(2 3)"))
    Q8 = build_named("Q8")
    assert p_elements(Q8, 2) == frozenset(range(8))


def _sylow_count(G, P):
    return len({conjugate_subgroup(G, P, g) for g in range(G.order)})


@pytest.mark.parametrize("desc", default_corpus(), ids=lambda d: d.name)
def test_sylow_sanity(desc):
    G = desc.build()
    for p in prime_divisors(G.order):
        f = factor_order(G.order, p)
        P = sylow_subgroup(G, p)
        assert P.order == f.p_part
        count = _sylow_count(G, P)
        assert count % p == 1 and f.m % count == 0


def test_sylow_deterministic():
    runs = [[tuple(sylow_subgroup(symmetric(5), p).indices) for p in (2, 3, 5)] for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]
