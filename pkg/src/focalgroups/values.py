"""Word values ``G_w``, power values ``G_{w^m}`` and verbal subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .groups import FiniteGroup, Subgroup, subgroup_generated
from .words import Leaf, Word, canonical, format_word

__all__ = [
    "ValueSet",
    "value_array",
    "value_set",
    "power_value_set",
    "verbal_subgroup",
    "verbal_product",
]


@dataclass(frozen=True)
class ValueSet:
    group: FiniteGroup
    word: Word
    elements: frozenset[int]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __repr__(self) -> str:
        return f"<ValueSet of {format_word(self.word)} in {self.group!r}: {len(self)} elements>"


def value_array(G: FiniteGroup, w: Word) -> np.ndarray:
    """Sorted index array of the values of ``w`` in ``G``.

    Indeterminates of an outer commutator word are all distinct, so the
    values of ``[u, v]`` are exactly the commutators ``[a, b]`` with ``a`` a
    ``u``-value and ``b`` a ``v``-value; the recursion never enumerates
    argument tuples.  Results are cached per group and canonical subword.
    """
    w = canonical(w)

    def compute():
        if isinstance(w, Leaf):
            return G.all_indices()
        left = value_array(G, w.left)
        right = value_array(G, w.right)
        return np.unique(G.comm_arr(left[:, None], right[None, :]))

    return G.memo(("values", w), compute)


def value_set(G: FiniteGroup, w: Word) -> ValueSet:
    return ValueSet(G, canonical(w), frozenset(value_array(G, w).tolist()))


def power_value_set(G: FiniteGroup, w: Word, m: int) -> frozenset[int]:
    """Values of the power word ``w^m``: ``{g^m : g in G_w}``."""
    if m < 1:
        raise ValueError(f"power must be positive, got {m}")
    return frozenset(G.pow_arr(value_array(G, w), m).tolist())


def verbal_subgroup(G: FiniteGroup, w: Word) -> Subgroup:
    w = canonical(w)
    return G.memo(("verbal", w), lambda: subgroup_generated(G, value_array(G, w)))


def verbal_product(G: FiniteGroup, ws: Sequence[Word]) -> Subgroup:
    """``w_1(G) w_2(G) ... w_k(G)``: a product of normal subgroups is their join."""
    if not ws:
        return subgroup_generated(G, ())
    seeds = [np.array(verbal_subgroup(G, w).generators, dtype=np.int64) for w in ws]
    return subgroup_generated(G, np.concatenate(seeds))
