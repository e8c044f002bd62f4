import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from focalgroups import groups as groups_mod
from focalgroups.corpus import build_named, default_corpus
from focalgroups.errors import DegreeMismatch, ElementNotInGroup, NotNormal, OrderCapExceeded, TrivialGroup
from focalgroups.groups import (
    FiniteGroup,
    check_group_axioms,
    commutator_subgroup,
    conjugate_subgroup,
    derived_series,
    element_order,
    generate_group,
    intersect,
    is_abelian,
    is_nilpotent,
    is_normal,
    lower_central_series,
    minimal_normal_subgroups,
    normal_closure,
    power_set,
    product_set,
    quotient,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)
from focalgroups.perm import identity, parse_cycle_notation as cyc

from conftest import labels, perm_closure, perm_comm


def test_generate_examples():
    assert generate_group([], 3).order == 1
    assert generate_group([cyc("(1 2)", 3), cyc("(1 2 3)", 3)], 3, 100).order == 6
    assert generate_group([cyc("(1 2 3 4)", 4), cyc("(1 2)", 4)], 4, 100).order == 24


def test_generate_errors():
    with pytest.raises(OrderCapExceeded):
        generate_group([cyc("(1 2 3 4)", 4), cyc("(1 2)", 4)], 4, cap=23)
    with pytest.raises(DegreeMismatch):
        generate_group([cyc("(1 2)", 3)], 4)


def test_canonical_element_order(S4):
    assert list(S4.labels) == sorted(S4.labels)
    assert S4.identity == 0 and S4.labels[0] == identity(4)


def test_subgroup_generated_examples(S3, S4):
    assert subgroup_generated(S3, []).is_trivial()
    assert subgroup_generated(S3, [S3.index("(1 2 3)")]).order == 3
    V = subgroup_generated(S4, S4.indices("(1 2)(3 4)", "(1 3)(2 4)"))
    assert V.order == 4
    assert labels(S4, V) == perm_closure([cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)], 4)
    with pytest.raises(ElementNotInGroup):
        subgroup_generated(S3, [99])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 23), max_size=3))
def test_subgroup_generated_matches_naive_closure(seed):
    S4 = build_named("S4")
    H = subgroup_generated(S4, seed)
    assert labels(S4, H) == perm_closure([S4.labels[i] for i in seed], 4)
    assert S4.order % H.order == 0
    # generator list regenerates the same subgroup
    assert subgroup_generated(S4, H.generators) == H


def test_is_normal_examples(S3):
    A3 = subgroup_generated(S3, [S3.index("(1 2 3)")])
    assert is_normal(S3, A3)
    assert not is_normal(S3, subgroup_generated(S3, [S3.index("(1 2)")]))
    assert is_normal(S3, trivial_subgroup(S3))


def test_normal_closure_examples(S3, S4):
    V = normal_closure(S4, [S4.index("(1 2)(3 4)")])
    assert V.order == 4 and is_normal(S4, V)
    assert normal_closure(S3, [S3.index("(1 2)")]) == whole_group(S3)
    assert normal_closure(S3, []).is_trivial()


def brute_commutator(G, A, B):
    comms = {perm_comm(G.labels[a], G.labels[b]) for a in A for b in B}
    return perm_closure(comms, G.degree)


def test_commutator_subgroup_examples(S3, S4):
    G3 = whole_group(S3)
    assert commutator_subgroup(S3, G3, trivial_subgroup(S3)).is_trivial()
    C = commutator_subgroup(S3, G3, G3)
    assert C.order == 3 and labels(S3, C) == brute_commutator(S3, G3, G3)
    V = normal_closure(S4, [S4.index("(1 2)(3 4)")])
    C = commutator_subgroup(S4, V, whole_group(S4))
    assert C == V and labels(S4, C) == brute_commutator(S4, V, whole_group(S4))


def test_commutator_generator_path_agrees(monkeypatch):
    G = build_named("S5")
    whole = whole_group(G)
    brute = commutator_subgroup(G, whole, whole)
    monkeypatch.setattr(groups_mod, "_BRUTE_COMMUTATOR_LIMIT", 0)
    assert commutator_subgroup(G, whole, whole) == brute
    A4 = build_named("A4")
    V = minimal_normal_subgroups(A4)[0]
    assert commutator_subgroup(A4, V, whole_group(A4)) == V


def test_series_examples(S3, S4):
    C6 = build_named("C6")
    assert [H.order for H in derived_series(C6, 2)] == [6, 1, 1]
    assert [H.order for H in derived_series(S4, 3)] == [24, 12, 4, 1]
    assert [H.order for H in lower_central_series(S3, 3)] == [6, 3, 3]
    assert derived_series(S4, 0) == [whole_group(S4)]


def test_quotient_examples(S4):
    e = quotient(S4, trivial_subgroup(S4))
    assert e.target.order == 24
    V = normal_closure(S4, [S4.index("(1 2)(3 4)")])
    q = quotient(S4, V)
    assert q.target.order == 6
    assert not is_abelian(whole_group(q.target))
    assert quotient(S4, whole_group(S4)).target.order == 1
    with pytest.raises(NotNormal):
        quotient(S4, subgroup_generated(S4, [S4.index("(1 2)")]))


@pytest.mark.parametrize("desc", [d for d in default_corpus() if d.expected_order <= 200], ids=lambda d: d.name)
def test_quotient_is_homomorphism(desc):
    G = desc.build()
    if G.order == 1:
        return
    for N in minimal_normal_subgroups(G) + [derived_series(G, 1)[1]]:
        q = quotient(G, N)
        T = q.target
        assert T.order * N.order == G.order
        every = G.all_indices()
        prod = G.mul_arr(every[:, None], every[None, :])
        assert (q.bar[prod] == T.mul_arr(q.bar[every][:, None], q.bar[every][None, :])).all()
        # rep(x) == rep(y) iff x y^-1 in N
        x, y = np.meshgrid(every, every)
        same = q.rep[x] == q.rep[y]
        assert (same == N.mask[G.mul_arr(x, G.inv[y])]).all()
        assert (q.rep[q.rep] == q.rep).all() and (q.rep <= every).all()
        check_group_axioms(T)


def test_minimal_normal_examples(S3, S4):
    assert [N.order for N in minimal_normal_subgroups(S4)] == [4]
    assert [N.order for N in minimal_normal_subgroups(S3)] == [3]
    assert [N.order for N in minimal_normal_subgroups(build_named("C2xC2"))] == [2, 2, 2]
    with pytest.raises(TrivialGroup):
        minimal_normal_subgroups(build_named("C1"))


@pytest.mark.parametrize("desc", [d for d in default_corpus() if d.expected_order <= 200], ids=lambda d: d.name)
def test_minimal_normal_brute_recheck(desc):
    G = desc.build()
    mins = minimal_normal_subgroups(G)
    for N in mins:
        assert is_normal(G, N) and not N.is_trivial()
        # any nontrivial element already generates all of N normally
        for x in N:
            if x != G.identity:
                assert normal_closure(G, [x]) == N
    for M, N in itertools.combinations(mins, 2):
        assert not (M <= N) and not (N <= M)


def test_set_helpers(S3, S4):
    A3 = subgroup_generated(S3, [S3.index("(1 2 3)")])
    T = subgroup_generated(S3, [S3.index("(1 2)")])
    assert intersect(A3, T).is_trivial()
    assert power_set(S3, A3, 2) == A3.as_set()
    assert product_set(S3, A3, T) == frozenset(range(6))
    assert element_order(S4, S4.index("(1 2 3 4)")) == 4
    assert element_order(S4, S4.identity) == 1
    with pytest.raises(ElementNotInGroup):
        element_order(S4, 24)
    assert not is_nilpotent(whole_group(S3))
    for name in ("D4", "Q8", "C2xC2", "C6"):
        assert is_nilpotent(whole_group(build_named(name)))
    assert is_abelian(A3) and not is_abelian(whole_group(S3))
    g = S4.index("(1 2 3 4)")
    H = subgroup_generated(S4, [S4.index("(1 2)")])
    K = conjugate_subgroup(S4, H, g)
    assert labels(S4, K) == {identity(4), cyc("(2 3)", 4)}


def test_element_orders_match_permutation_orders(S4):
    assert [element_order(S4, i) for i in range(24)] == [p.order() for p in S4.labels]


@pytest.mark.parametrize("desc", default_corpus(), ids=lambda d: d.name)
def test_group_axioms(desc):
    check_group_axioms(desc.build())


def test_tableless_fallback_matches(monkeypatch):
    S4 = build_named("S4")
    monkeypatch.setattr(groups_mod, "TABLE_LIMIT", 10)
    G = generate_group([cyc("(1 2 3 4)", 4), cyc("(1 2)", 4)], 4)
    assert G.table is None
    every = G.all_indices()
    assert (G.mul_arr(every[:, None], every[None, :]) == S4.table).all()
    assert [H.order for H in derived_series(G, 3)] == [24, 12, 4, 1]
    check_group_axioms(G)


def test_table_backed_group():
    # Z/4 given by its addition table
    table = np.add.outer(np.arange(4), np.arange(4)) % 4
    G = FiniteGroup.from_table(["0", "1", "2", "3"], table, generators=[1])
    assert G.identity == 0 and list(G.inv) == [0, 3, 2, 1]
    assert element_order(G, 1) == 4
    assert subgroup_generated(G, [2]).order == 2
    check_group_axioms(G)
