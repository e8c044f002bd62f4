import itertools

import pytest

from focalgroups.corpus import build_named
from focalgroups.perm import Permutation, compose, inverse


@pytest.fixture(scope="session")
def S3():
    return build_named("S3")


@pytest.fixture(scope="session")
def S4():
    return build_named("S4")


@pytest.fixture(scope="session")
def A5():
    return build_named("A5")


# -- brute-force oracles on Permutation objects (no Cayley tables) -----------


def perm_closure(gens, degree):
    """Subgroup generated by ``gens``, by naive repeated multiplication."""
    ident = Permutation(tuple(range(1, degree + 1)))
    elems = {ident}
    changed = True
    while changed:
        changed = False
        for a, b in itertools.product(list(elems), list(gens) + list(elems)):
            c = compose(a, b)
            if c not in elems:
                elems.add(c)
                changed = True
    return elems


def perm_comm(a, b):
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def labels(G, sub):
    return {G.labels[i] for i in sub}


def brute_values(G, w):
    """Values of ``w`` over every argument tuple in ``G^leaves`` (vectorized tuple enumeration)."""
    import numpy as np

    from focalgroups.words import evaluate, leaf_count

    n = leaf_count(w)
    grids = np.meshgrid(*([np.arange(G.order)] * n), indexing="ij")
    return frozenset(np.unique(evaluate(w, G, tuple(grids))).tolist())


def perm_values(G, w):
    """Values of ``w`` by evaluating on Permutation objects, tuple by tuple."""
    from focalgroups.words import Leaf

    def ev(t, args):
        if isinstance(t, Leaf):
            return args[t.index - 1]
        return perm_comm(ev(t.left, args), ev(t.right, args))

    from focalgroups.words import leaf_count

    return {ev(w, args) for args in itertools.product(G.labels, repeat=leaf_count(w))}
