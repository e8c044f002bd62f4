"""Fully enumerated finite groups, subgroups and quotients.

Every group element is addressed by its *index* ``0 <= i < |G|`` into the
group's canonical element list; set-level functions take and return indices.
Permutation-backed groups sort their elements lexicographically by image
tuple, so the identity is always index 0 there.  Table-backed groups (used
for quotients) keep the order they were constructed with.

Groups up to ``TABLE_LIMIT`` elements carry a full multiplication table;
larger permutation groups multiply on the fly from their image arrays.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import (
    DegreeMismatch,
    ElementNotInGroup,
    NotNormal,
    OrderCapExceeded,
    TrivialGroup,
)
from .perm import Permutation, format_cycles, parse_cycle_notation

__all__ = [
    "DEFAULT_CAP",
    "TABLE_LIMIT",
    "FiniteGroup",
    "Subgroup",
    "QuotientMap",
    "generate_group",
    "subgroup_generated",
    "trivial_subgroup",
    "whole_group",
    "join",
    "is_normal",
    "normal_closure",
    "normalizer",
    "commutator_subgroup",
    "derived_series",
    "lower_central_series",
    "quotient",
    "conjugacy_classes",
    "minimal_normal_subgroups",
    "intersect",
    "product_set",
    "power_set",
    "element_order",
    "is_abelian",
    "is_nilpotent",
    "conjugate_subgroup",
    "conjugate_set",
    "is_normal_set",
    "check_group_axioms",
]

DEFAULT_CAP = 20_000
TABLE_LIMIT = 5040
_KEY_DEGREE_LIMIT = 15  # degree**degree must fit in int64


def _as_index_array(x: Iterable[int] | np.ndarray | Subgroup) -> np.ndarray:
    if isinstance(x, Subgroup):
        return x.indices
    if isinstance(x, np.ndarray):
        return x.astype(np.int64, copy=False).ravel()
    return np.fromiter((int(i) for i in x), dtype=np.int64)


class FiniteGroup:
    """A finite group with all of its elements enumerated.

    Use :func:`generate_group` for permutation groups and
    :meth:`FiniteGroup.from_table` for abstract (table-backed) groups.
    """

    def __init__(
        self,
        labels: Sequence[Hashable],
        *,
        table: np.ndarray | None = None,
        images: np.ndarray | None = None,
        generators: Sequence[int] = (),
        name: str | None = None,
    ):
        self.labels = tuple(labels)
        self.order = len(self.labels)
        self.name = name
        self._images = images
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != self.order:
            raise ValueError("duplicate element labels")
        self._memo: dict[Any, Any] = {}
        self._lock = threading.RLock()

        if images is not None:
            self.degree: int | None = images.shape[1]
            if self.degree <= _KEY_DEGREE_LIMIT:
                d = self.degree
                self._weights = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
                self._keys = images.astype(np.int64) @ self._weights
            else:
                self._weights = None
            self.table = table if table is not None else self._build_table()
            self.identity = 0
            self.inv = self._lookup_rows(np.argsort(images, axis=1))
        else:
            if table is None:
                raise ValueError("table-backed groups need a multiplication table")
            self.degree = None
            self.table = np.asarray(table)
            diag = np.nonzero((self.table == np.arange(self.order)).all(axis=1))[0]
            if diag.size != 1:
                raise ValueError("multiplication table has no unique identity")
            self.identity = int(diag[0])
            rows, cols = np.nonzero(self.table == self.identity)
            self.inv = np.empty(self.order, dtype=np.int64)
            self.inv[rows] = cols
        self.inv = self.inv.astype(np.int64)
        self.generators = tuple(dict.fromkeys(int(g) for g in generators))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_permutations(
        cls,
        perms: Iterable[Permutation],
        generators: Iterable[Permutation] = (),
        name: str | None = None,
    ) -> FiniteGroup:
        """Wrap an already closed set of permutations."""
        perms = sorted(set(perms))
        images = np.array([p.images for p in perms], dtype=np.int16) - 1
        G = cls(perms, images=images, name=name)
        G.generators = tuple(dict.fromkeys(G.index(g) for g in generators))
        return G

    @classmethod
    def from_table(
        cls,
        labels: Sequence[Hashable],
        table: np.ndarray,
        generators: Sequence[int] = (),
        name: str | None = None,
    ) -> FiniteGroup:
        return cls(labels, table=np.asarray(table, dtype=np.int64), generators=generators, name=name)

    def _lookup_rows(self, rows: np.ndarray) -> np.ndarray:
        """Map (..., degree) arrays of 0-based images to element indices."""
        shape = rows.shape[:-1]
        flat = rows.reshape(-1, self.degree)
        if self._weights is not None:
            keys = flat.astype(np.int64) @ self._weights
            idx = np.searchsorted(self._keys, keys)
            idx = np.minimum(idx, self.order - 1)
            if not np.array_equal(self._keys[idx], keys):
                raise ElementNotInGroup("product left the enumerated element set")
        else:
            try:
                idx = np.array(
                    [self._index[Permutation(tuple(r + 1))] for r in flat.tolist()],
                    dtype=np.int64,
                )
            except KeyError as exc:
                raise ElementNotInGroup("product left the enumerated element set") from exc
        return idx.reshape(shape)

    def _build_table(self) -> np.ndarray | None:
        n = self.order
        if n > TABLE_LIMIT:
            return None
        imgs = self._images.astype(np.int64)
        table = np.empty((n, n), dtype=np.int32 if n > 32000 else np.int16)
        chunk = max(1, 200_000 // max(n, 1))
        for start in range(0, n, chunk):
            a = imgs[start:start + chunk]  # (c, d)
            # compose(a_i, b_j)[x] = b_j[a_i[x]]
            prod = imgs[:, a].transpose(1, 0, 2)  # (c, n, d)
            table[start:start + chunk] = self._lookup_rows(prod)
        return table

    # -- element access ----------------------------------------------------

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name or '?'} of order {self.order}>"

    @property
    def is_permutation_group(self) -> bool:
        return self._images is not None

    def label(self, i: int) -> Hashable:
        return self.labels[i]

    def index(self, x: Hashable | str) -> int:
        """Index of a label; permutation groups also accept cycle notation."""
        if isinstance(x, str) and self.degree is not None:
            x = parse_cycle_notation(x, self.degree)
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise ElementNotInGroup(f"{x!r} is not an element of {self!r}") from None

    def indices(self, *xs: Hashable | str) -> list[int]:
        return [self.index(x) for x in xs]

    def format(self, i: int) -> str:
        lab = self.labels[i]
        if isinstance(lab, Permutation):
            return format_cycles(lab)
        return str(lab)

    def check_index(self, i: int) -> int:
        i = int(i)
        if not 0 <= i < self.order:
            raise ElementNotInGroup(f"index {i} is not an element of {self!r}")
        return i

    # -- arithmetic ----------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_arr(np.int64(a), np.int64(b)))

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise (broadcast) product of index arrays."""
        if self.table is not None:
            return self.table[a, b].astype(np.int64)
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        ia = self._images[a].astype(np.int64)
        ib = self._images[b].astype(np.int64)
        return self._lookup_rows(np.take_along_axis(ib, ia, axis=-1))

    def pow_arr(self, a: np.ndarray, k: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if k < 0:
            a, k = self.inv[a], -k
        result = np.full(a.shape, self.identity, dtype=np.int64)
        base = a
        while k:
            if k & 1:
                result = self.mul_arr(result, base)
            k >>= 1
            if k:
                base = self.mul_arr(base, base)
        return result

    def pow(self, a: int, k: int) -> int:
        return int(self.pow_arr(np.int64(a), k))

    def comm_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """``[a, b] = a^-1 b^-1 a b`` elementwise with broadcasting."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        left = self.mul_arr(self.inv[a], self.inv[b])
        return self.mul_arr(self.mul_arr(left, a), b)

    def conj_arr(self, x: np.ndarray, g: np.ndarray) -> np.ndarray:
        """``x^g = g^-1 x g`` elementwise with broadcasting."""
        g = np.asarray(g, dtype=np.int64)
        return self.mul_arr(self.mul_arr(self.inv[g], x), g)

    def element_orders(self) -> np.ndarray:
        def compute():
            n = self.order
            every = np.arange(n, dtype=np.int64)
            orders = np.zeros(n, dtype=np.int64)
            cur = every.copy()
            k = 1
            while (orders == 0).any():
                hit = (cur == self.identity) & (orders == 0)
                orders[hit] = k
                cur = self.mul_arr(cur, every)
                k += 1
            return orders

        return self.memo("element_orders", compute)

    def all_indices(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def memo(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        """Per-group cache shared safely between threads."""
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)


class Subgroup:
    """A subgroup of ``parent`` held as a boolean membership mask.

    Two subgroups are equal when they have the same parent and the same
    elements, regardless of their generator lists.
    """

    __slots__ = ("parent", "mask", "_indices", "_generators")

    def __init__(self, parent: FiniteGroup, mask: np.ndarray, generators: Sequence[int] | None = None):
        self.parent = parent
        self.mask = mask
        self.mask.setflags(write=False)
        self._indices = None
        self._generators = None if generators is None else tuple(int(g) for g in generators)

    @property
    def indices(self) -> np.ndarray:
        if self._indices is None:
            self._indices = np.flatnonzero(self.mask).astype(np.int64)
        return self._indices

    @property
    def order(self) -> int:
        return int(self.indices.size)

    @property
    def generators(self) -> tuple[int, ...]:
        if self._generators is None:
            self._generators = subgroup_generated(self.parent, self.indices).generators
        return self._generators

    @property
    def elements(self) -> tuple:
        return tuple(self.parent.labels[i] for i in self.indices)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.indices.tolist())

    def __contains__(self, i) -> bool:
        try:
            return bool(self.mask[int(i)])
        except (IndexError, TypeError, ValueError):
            return False

    def is_trivial(self) -> bool:
        return self.order == 1

    def __le__(self, other: Subgroup) -> bool:
        return self.parent is other.parent and not (self.mask & ~other.mask).any()

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.order < other.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and np.array_equal(self.mask, other.mask)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask.tobytes()))

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in {self.parent!r}>"

    def as_set(self) -> frozenset[int]:
        return frozenset(self.indices.tolist())


@dataclass(frozen=True)
class QuotientMap:
    """The natural map ``G -> G/N``.

    ``rep[x]`` is the least element of the coset ``xN`` (a source index) and
    ``bar[x]`` is the index of that coset in ``target``.
    """

    source: FiniteGroup
    kernel: Subgroup
    target: FiniteGroup
    rep: np.ndarray
    bar: np.ndarray

    def image(self, xs: Iterable[int] | Subgroup) -> frozenset[int]:
        return frozenset(self.bar[_as_index_array(xs)].tolist())

    def image_subgroup(self, H: Subgroup) -> Subgroup:
        return subgroup_generated(self.target, self.bar[H.indices])

    def preimage(self, ys: Iterable[int]) -> frozenset[int]:
        wanted = np.zeros(self.target.order, dtype=bool)
        wanted[_as_index_array(ys)] = True
        return frozenset(np.flatnonzero(wanted[self.bar]).tolist())


# -- construction ---------------------------------------------------------


def generate_group(
    gens: Sequence[Permutation],
    degree: int,
    cap: int = DEFAULT_CAP,
    name: str | None = None,
) -> FiniteGroup:
    """Enumerate the permutation group generated by ``gens`` by breadth-first closure."""
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
    ident = tuple(range(degree))
    gen_imgs = [tuple(x - 1 for x in g.images) for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_imgs:
                y = tuple(g[i] for i in x)  # x then g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise OrderCapExceeded(f"group order exceeds cap {cap}")
        frontier = nxt
    perms = [Permutation(tuple(i + 1 for i in t)) for t in seen]
    return FiniteGroup.from_permutations(perms, generators=gens, name=name)


def _closure(G: FiniteGroup, gens: np.ndarray, start: np.ndarray | None = None) -> np.ndarray:
    """Mask of the subgroup generated by ``gens`` together with the subgroup ``start``."""
    mask = np.zeros(G.order, dtype=bool) if start is None else start.copy()
    mask[G.identity] = True
    gens = np.unique(gens)
    if gens.size == 0:
        return mask
    frontier = np.flatnonzero(mask)
    while frontier.size:
        prod = G.mul_arr(frontier[:, None], gens[None, :]).ravel()
        new = np.unique(prod[~mask[prod]])
        mask[new] = True
        frontier = new
    return mask


def subgroup_generated(G: FiniteGroup, seed: Iterable[int] | np.ndarray | Subgroup) -> Subgroup:
    """Smallest subgroup containing ``seed``.

    Generators are chosen greedily: seed elements are scanned in canonical
    order and kept only if they enlarge the subgroup built so far.
    """
    seed = np.unique(_as_index_array(seed))
    if seed.size and (seed.min() < 0 or seed.max() >= G.order):
        raise ElementNotInGroup(f"seed contains indices outside {G!r}")
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    kept: list[int] = []
    for s in seed.tolist():
        if not mask[s]:
            kept.append(s)
            mask = _closure(G, np.array(kept, dtype=np.int64), start=mask)
    return Subgroup(G, mask, kept)


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    return Subgroup(G, mask, ())


def whole_group(G: FiniteGroup) -> Subgroup:
    return G.memo("whole", lambda: Subgroup(G, np.ones(G.order, dtype=bool), G.generators))


def join(G: FiniteGroup, *subgroups: Subgroup) -> Subgroup:
    seeds = [np.array(H.generators, dtype=np.int64) for H in subgroups]
    return subgroup_generated(G, np.concatenate(seeds) if seeds else np.array([], dtype=np.int64))


# -- normal structure -------------------------------------------------------


def conjugate_set(G: FiniteGroup, xs: Iterable[int] | np.ndarray, g: int) -> frozenset[int]:
    return frozenset(G.conj_arr(_as_index_array(xs), np.int64(g)).tolist())


def is_normal_set(G: FiniteGroup, xs: Iterable[int] | np.ndarray) -> bool:
    """True when the set ``xs`` is closed under conjugation by ``G``."""
    xs = np.unique(_as_index_array(xs))
    mask = np.zeros(G.order, dtype=bool)
    mask[xs] = True
    gens = np.array(G.generators, dtype=np.int64)
    if xs.size == 0 or gens.size == 0:
        return True
    return bool(mask[G.conj_arr(xs[:, None], gens[None, :])].all())


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    gens = np.array(G.generators, dtype=np.int64)
    hs = np.array(H.generators, dtype=np.int64)
    if gens.size == 0 or hs.size == 0:
        return True
    return bool(H.mask[G.conj_arr(hs[:, None], gens[None, :])].all())


def normal_closure(G: FiniteGroup, seed: Iterable[int] | np.ndarray | Subgroup) -> Subgroup:
    H = subgroup_generated(G, seed)
    gens = np.array(G.generators, dtype=np.int64)
    if gens.size == 0:
        return H
    while True:
        hs = np.array(H.generators, dtype=np.int64)
        if hs.size == 0:
            return H
        conj = G.conj_arr(hs[:, None], gens[None, :]).ravel()
        outside = conj[~H.mask[conj]]
        if outside.size == 0:
            return H
        H = subgroup_generated(G, np.concatenate([hs, outside]))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    hs = np.array(H.generators, dtype=np.int64)
    every = G.all_indices()
    if hs.size == 0:
        return whole_group(G)
    conj = G.conj_arr(hs[None, :], every[:, None])  # (|G|, gens)
    members = H.mask[conj].all(axis=1)
    return Subgroup(G, members)


def conjugate_subgroup(G: FiniteGroup, H: Subgroup, g: int) -> Subgroup:
    g = G.check_index(g)
    mask = np.zeros(G.order, dtype=bool)
    mask[G.conj_arr(H.indices, np.int64(g))] = True
    gens = G.conj_arr(np.array(H.generators, dtype=np.int64), np.int64(g))
    return Subgroup(G, mask, gens.tolist())


_BRUTE_COMMUTATOR_LIMIT = 1_000_000


def commutator_subgroup(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    """``[A, B]``, generated by all commutators ``[a, b]``."""
    if A.order * B.order <= _BRUTE_COMMUTATOR_LIMIT:
        comms = G.comm_arr(A.indices[:, None], B.indices[None, :]).ravel()
        return subgroup_generated(G, np.unique(comms))
    # [A, B] is the normal closure in <A, B> of the generator commutators
    ga = np.array(A.generators, dtype=np.int64)
    gb = np.array(B.generators, dtype=np.int64)
    seed = np.unique(G.comm_arr(ga[:, None], gb[None, :]))
    H = subgroup_generated(G, seed)
    ambient = np.concatenate([ga, gb])
    while True:
        hs = np.array(H.generators, dtype=np.int64)
        if hs.size == 0:
            return H
        conj = G.conj_arr(hs[:, None], ambient[None, :]).ravel()
        outside = conj[~H.mask[conj]]
        if outside.size == 0:
            return H
        H = subgroup_generated(G, np.concatenate([hs, outside]))


def derived_series(G: FiniteGroup, k: int) -> list[Subgroup]:
    """``[G^(0), ..., G^(k)]``; once the series stabilizes the last term repeats."""
    series = [whole_group(G)]
    for _ in range(k):
        prev = series[-1]
        if len(series) > 1 and series[-2] == prev:
            series.append(prev)
        else:
            series.append(commutator_subgroup(G, prev, prev))
    return series


def lower_central_series(G: FiniteGroup, k: int) -> list[Subgroup]:
    """``[gamma_1(G), ..., gamma_k(G)]``; once the series stabilizes the last term repeats."""
    if k <= 0:
        return []
    whole = whole_group(G)
    series = [whole]
    for _ in range(k - 1):
        prev = series[-1]
        if len(series) > 1 and series[-2] == prev:
            series.append(prev)
        else:
            series.append(commutator_subgroup(G, prev, whole))
    return series


def quotient(G: FiniteGroup, N: Subgroup) -> QuotientMap:
    if not is_normal(G, N):
        raise NotNormal(f"{N!r} is not normal in {G!r}")
    n = G.order
    rep = np.full(n, -1, dtype=np.int64)
    bar = np.full(n, -1, dtype=np.int64)
    reps: list[int] = []
    for x in range(n):
        if rep[x] >= 0:
            continue
        coset = G.mul_arr(np.int64(x), N.indices)
        rep[coset] = x  # x is least since cosets are discovered in index order
        bar[coset] = len(reps)
        reps.append(x)
    reps_arr = np.array(reps, dtype=np.int64)
    table = bar[G.mul_arr(reps_arr[:, None], reps_arr[None, :])]
    target = FiniteGroup.from_table(
        [G.labels[r] for r in reps],
        table,
        generators=[int(bar[g]) for g in G.generators],
        name=f"{G.name or 'G'}/N",
    )
    return QuotientMap(G, N, target, rep, bar)


def conjugacy_classes(G: FiniteGroup) -> list[frozenset[int]]:
    def compute():
        assigned = np.zeros(G.order, dtype=bool)
        every = G.all_indices()
        classes = []
        for x in range(G.order):
            if assigned[x]:
                continue
            cls = np.unique(G.conj_arr(np.int64(x), every))
            assigned[cls] = True
            classes.append(frozenset(cls.tolist()))
        return classes

    return G.memo("classes", compute)


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    if G.order == 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroups")

    def compute():
        candidates: list[Subgroup] = []
        for cls in conjugacy_classes(G):
            x = min(cls)
            if x == G.identity:
                continue
            N = normal_closure(G, [x])
            if N not in candidates:
                candidates.append(N)
        minimal = [N for N in candidates if not any(M < N for M in candidates)]
        minimal.sort(key=lambda N: (N.order, N.indices.tolist()))
        return minimal

    return G.memo("minimal_normal", compute)


# -- set level helpers --------------------------------------------------------


def intersect(A: Subgroup, B: Subgroup) -> Subgroup:
    if A.parent is not B.parent:
        raise ValueError("subgroups of different groups")
    return Subgroup(A.parent, A.mask & B.mask)


def product_set(G: FiniteGroup, A, B) -> frozenset[int]:
    a = _as_index_array(A)
    b = _as_index_array(B)
    return frozenset(G.mul_arr(a[:, None], b[None, :]).ravel().tolist())


def power_set(G: FiniteGroup, S, m: int) -> frozenset[int]:
    """``{s^m : s in S}``."""
    return frozenset(G.pow_arr(_as_index_array(S), m).tolist())


def element_order(G: FiniteGroup, g: int) -> int:
    return int(G.element_orders()[G.check_index(g)])


def is_abelian(H: Subgroup | FiniteGroup) -> bool:
    if isinstance(H, FiniteGroup):
        H = whole_group(H)
    G = H.parent
    gens = np.array(H.generators, dtype=np.int64)
    if gens.size == 0:
        return True
    return bool((G.comm_arr(gens[:, None], gens[None, :]) == G.identity).all())


def is_nilpotent(H: Subgroup | FiniteGroup) -> bool:
    """Lower central series of ``H`` (computed inside the parent) reaches 1."""
    if isinstance(H, FiniteGroup):
        H = whole_group(H)
    G = H.parent
    cur = H
    while not cur.is_trivial():
        nxt = commutator_subgroup(G, cur, H)
        if nxt == cur:
            return False
        cur = nxt
    return True


def check_group_axioms(G: FiniteGroup, sample: int | None = 2000, seed: int = 0) -> None:
    """Assert closure, identity and inverses; sampled above ``sample`` elements."""
    n = G.order
    idx = G.all_indices()
    if sample is not None and n > sample:
        idx = np.random.default_rng(seed).choice(n, size=sample, replace=False)
    e = G.identity
    assert (G.mul_arr(idx, np.int64(e)) == idx).all(), "right identity"
    assert (G.mul_arr(np.int64(e), idx) == idx).all(), "left identity"
    assert (G.mul_arr(idx, G.inv[idx]) == e).all(), "inverses"
    prod = G.mul_arr(idx[:, None], idx[None, :])
    assert ((prod >= 0) & (prod < n)).all(), "closure"
    if G.is_permutation_group:
        for i in idx[:50].tolist():
            for j in idx[:50].tolist():
                assert G.labels[G.mul(i, j)] == G.labels[i] * G.labels[j], "product mismatch"
