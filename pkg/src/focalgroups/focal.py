"""Checks of the focal subgroup statement for outer commutator words.

For a finite group ``G`` of order ``p^a * m`` (``p`` not dividing ``m``), a
Sylow ``p``-subgroup ``P`` and an outer commutator word ``w``, the central
identity is::

    P ∩ w(G) == < P ∩ G_{w^m} >

i.e. the Sylow part of the verbal subgroup is generated by ``m``-th powers
of ``w``-values that land in ``P``.  Every verifier returns a
:class:`VerificationReport`; ``inapplicable`` marks a vacuous hypothesis and
is never counted as a pass.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import FocalError, HypothesisViolated, TheoremViolated, TrivialGroup
from .groups import (
    FiniteGroup,
    Subgroup,
    commutator_subgroup,
    conjugacy_classes,
    derived_series,
    intersect,
    is_abelian,
    is_nilpotent,
    is_normal,
    is_normal_set,
    minimal_normal_subgroups,
    product_set,
    quotient,
    subgroup_generated,
    whole_group,
)
from .sylow import bezout, factor_order, is_p_power, p_elements, prime_divisors, sylow_subgroup
from .values import ValueSet, power_value_set, value_array, value_set, verbal_product, verbal_subgroup
from .words import Comm, Leaf, Word, delta, format_word, height, proper_extensions_same_height

__all__ = [
    "HOLDS",
    "FAILS",
    "INAPPLICABLE",
    "ERROR",
    "VerificationReport",
    "verify_theorem_a",
    "extract_focal_generators",
    "check_question1",
    "verify_lemma_intersection",
    "verify_lemma_lift",
    "verify_lemma_min_normal",
    "verify_nilpotent_case",
    "verify_product_extensions",
    "verify_ore",
    "verify_remark_power",
    "run_suite",
    "summarize",
]

log = logging.getLogger(__name__)

HOLDS = "holds"
FAILS = "fails"
INAPPLICABLE = "inapplicable"
ERROR = "error"

_LINE_ORDER = ("|G|", "|P|", "|wG|", "|PcapwG|", "|genSide|")


@dataclass
class VerificationReport:
    statement: str
    group_desc: str
    word_text: str | None = None
    p: int | None = None
    numbers: dict[str, int] = field(default_factory=dict)
    verdict: str = HOLDS
    witnesses: tuple[int, ...] = ()
    witness_labels: tuple[str, ...] = ()
    error: str | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_line(self) -> str:
        """One-line machine format; the witness list is always the last field."""
        parts = [f"statement={self.statement}", f"group={self.group_desc}"]
        if self.word_text is not None:
            parts.append(f"word={self.word_text}")
        if self.p is not None:
            parts.append(f"p={self.p}")
        parts.append(f"verdict={self.verdict}")
        for key in _LINE_ORDER:
            if key in self.numbers:
                parts.append(f"{key}={self.numbers[key]}")
        for key in sorted(k for k in self.numbers if k not in _LINE_ORDER):
            parts.append(f"{key}={self.numbers[key]}")
        if self.error is not None:
            parts.append(f"error={self.error.replace(' ', '_')}")
        parts.append("witnesses=[" + ",".join(self.witness_labels) + "]")
        return " ".join(parts)


def _report(G: FiniteGroup, statement: str, *, w: Word | None = None, p: int | None = None,
            group_desc: str | None = None) -> VerificationReport:
    return VerificationReport(
        statement=statement,
        group_desc=group_desc or G.name or f"order{G.order}",
        word_text=None if w is None else format_word(w),
        p=p,
        numbers={"|G|": G.order},
    )


def _conclude(rep: VerificationReport, G: FiniteGroup, ok: bool, witnesses: Iterable[int] = ()) -> VerificationReport:
    ws = tuple(sorted(int(x) for x in witnesses))
    if not ok:
        if not ws:
            ws = (G.identity,)
        rep.verdict = FAILS
    rep.witnesses = ws
    rep.witness_labels = tuple(G.format(x) for x in ws)
    return rep


def _least(xs: Iterable[int]) -> list[int]:
    xs = list(xs)
    return [min(xs)] if xs else []


def _mask(G: FiniteGroup, xs: Iterable[int]) -> np.ndarray:
    m = np.zeros(G.order, dtype=bool)
    idx = np.fromiter((int(x) for x in xs), dtype=np.int64)
    m[idx] = True
    return m


def _sylow_data(G: FiniteGroup, p: int):
    fac = factor_order(G.order, p)
    return fac, sylow_subgroup(G, p)


# -- the main statement -------------------------------------------------------------


def _focal_sides(G: FiniteGroup, w: Word, p: int):
    fac, P = _sylow_data(G, p)
    W = verbal_subgroup(G, w)
    S = power_value_set(G, w, fac.m)
    gen_seed = sorted(x for x in S if x in P)
    gen_side = subgroup_generated(G, gen_seed)
    return fac, P, W, intersect(P, W), gen_seed, gen_side


def verify_theorem_a(G: FiniteGroup, w: Word, p: int, group_desc: str | None = None) -> VerificationReport:
    """Compare ``P ∩ w(G)`` with ``<P ∩ G_{w^m}>`` by direct computation."""
    fac, P, W, target, _, gen_side = _focal_sides(G, w, p)
    rep = _report(G, "theorem-a", w=w, p=p, group_desc=group_desc)
    rep.numbers.update({"p^a": fac.p_part, "m": fac.m, "|P|": P.order, "|wG|": W.order,
                        "|PcapwG|": target.order, "|genSide|": gen_side.order})
    if gen_side == target:
        return _conclude(rep, G, True, _irredundant(G, gen_side.generators))
    missing = np.flatnonzero(target.mask ^ gen_side.mask)
    return _conclude(rep, G, False, missing[:1].tolist())


def _irredundant(G: FiniteGroup, gens: Sequence[int]) -> list[int]:
    gens = list(gens)
    full = subgroup_generated(G, gens)
    i = 0
    while i < len(gens):
        rest = gens[:i] + gens[i + 1:]
        if subgroup_generated(G, rest) == full:
            gens = rest
        else:
            i += 1
    return gens


def extract_focal_generators(G: FiniteGroup, w: Word, p: int) -> list[int]:
    """An irredundant generating list of ``P ∩ w(G)`` drawn from ``P ∩ G_{w^m}``.

    Candidates are scanned in canonical order and kept when they enlarge the
    subgroup; a final pass drops any element made redundant by later ones.
    """
    _, _, _, target, _, gen_side = _focal_sides(G, w, p)
    if gen_side != target:
        raise TheoremViolated(f"<P ∩ G_(w^m)> != P ∩ w(G) for {format_word(w)} in {G!r}, p={p}")
    return _irredundant(G, gen_side.generators)


def check_question1(G: FiniteGroup, valueset, p: int, *, word_text: str | None = None,
                    group_desc: str | None = None) -> VerificationReport:
    """Is ``P ∩ <X>`` generated by ``P ∩ X`` for the normal set ``X``?"""
    if isinstance(valueset, ValueSet):
        valueset = valueset.elements
    X = sorted(int(x) for x in valueset)
    fac, P = _sylow_data(G, p)
    generated = subgroup_generated(G, [x for x in X if x in P])
    target = intersect(P, subgroup_generated(G, X))
    rep = _report(G, "question1", p=p, group_desc=group_desc)
    rep.word_text = word_text
    rep.numbers.update({"|P|": P.order, "|wG|": subgroup_generated(G, X).order,
                        "|PcapwG|": target.order, "|genSide|": generated.order, "#X": len(X)})
    if generated == target:
        return _conclude(rep, G, True, generated.generators)
    return _conclude(rep, G, False, _least(np.flatnonzero(target.mask & ~generated.mask).tolist()))


# -- lemmas -----------------------------------------------------------------------------


def _require_p_normal_set(G: FiniteGroup, X: Sequence[int], p: int) -> None:
    pel = p_elements(G, p)
    if any(x not in pel for x in X):
        raise HypothesisViolated("X must consist of p-elements")
    if not is_normal_set(G, X):
        raise HypothesisViolated("X must be a normal subset of G")


def verify_lemma_intersection(G: FiniteGroup, N: Subgroup, X: Iterable[int], p: int,
                              group_desc: str | None = None) -> VerificationReport:
    """``XN ∩ PN == (X ∩ P)N`` for a normal set ``X`` of ``p``-elements."""
    X = sorted(set(int(x) for x in X))
    if not is_normal(G, N):
        raise HypothesisViolated("N must be normal in G")
    _require_p_normal_set(G, X, p)
    _, P = _sylow_data(G, p)
    XN = product_set(G, X, N) if X else frozenset()
    PN = product_set(G, P, N)
    XP = [x for x in X if x in P]
    right = product_set(G, XP, N) if XP else frozenset()
    left = XN & PN
    rep = _report(G, "lemma-intersection", p=p, group_desc=group_desc)
    rep.numbers.update({"|P|": P.order, "|N|": N.order, "#X": len(X), "#XNcapPN": len(left)})
    return _conclude(rep, G, left == right, _least(left ^ right))


def verify_lemma_lift(G: FiniteGroup, N: Subgroup, L: Subgroup, X: Iterable[int], p: int,
                      group_desc: str | None = None, *, word_text: str | None = None) -> VerificationReport:
    """``P ∩ L == <P ∩ X, P ∩ N>`` given the same statement modulo ``N``.

    The hypothesis is checked in ``G/N``; if it is false the report is
    ``inapplicable``.
    """
    X = sorted(set(int(x) for x in X))
    if not (N <= L and is_normal(G, N) and is_normal(G, L)):
        raise HypothesisViolated("need normal subgroups N <= L")
    _require_p_normal_set(G, X, p)
    _, P = _sylow_data(G, p)
    q = quotient(G, N)
    Pbar = q.image_subgroup(P)
    Lbar = q.image_subgroup(L)
    Xbar = q.image(X) if X else frozenset()
    hyp_left = intersect(Pbar, Lbar)
    hyp_right = subgroup_generated(q.target, [x for x in Xbar if x in Pbar])
    rep = _report(G, "lemma-lift", p=p, group_desc=group_desc)
    rep.word_text = word_text
    rep.numbers.update({"|P|": P.order, "|N|": N.order, "|L|": L.order, "#X": len(X)})
    if hyp_left != hyp_right:
        rep.verdict = INAPPLICABLE
        return rep
    left = intersect(P, L)
    right = subgroup_generated(G, [x for x in X if x in P] + [x for x in N if x in P])
    rep.numbers.update({"|PcapL|": left.order, "|genSide|": right.order})
    return _conclude(rep, G, left == right, _least(np.flatnonzero(left.mask ^ right.mask).tolist()))


def verify_lemma_min_normal(G: FiniteGroup, i: int, group_desc: str | None = None) -> VerificationReport:
    """For each minimal normal ``N`` with no nontrivial ``delta_i``-values, ``[N, G^(i-1)] == 1``."""
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    if G.order == 1:
        raise TrivialGroup("lemma needs a nontrivial group")
    values = value_array(G, delta(i))
    previous = derived_series(G, i - 1)[i - 1]
    rep = _report(G, "lemma-min-normal", group_desc=group_desc)
    rep.numbers["i"] = i
    applicable = 0
    bad: list[int] = []
    for N in minimal_normal_subgroups(G):
        if np.count_nonzero(N.mask[values]) > 1:  # identity is always a value
            continue
        applicable += 1
        C = commutator_subgroup(G, N, previous)
        if not C.is_trivial():
            bad.extend(np.flatnonzero(C.mask).tolist())
    rep.numbers["applicable"] = applicable
    if applicable == 0:
        rep.verdict = INAPPLICABLE
        return rep
    return _conclude(rep, G, not bad, _least(x for x in bad if x != G.identity))


# -- nilpotent verbal subgroup ------------------------------------------------------


def verify_nilpotent_case(G: FiniteGroup, w: Word, p: int, group_desc: str | None = None) -> VerificationReport:
    """When ``w(G)`` is nilpotent, split it with Bezout as ``<G_u> x <G_v>``.

    Here ``u = w^(p^a)`` and ``v = w^m``; ``<G_v>`` must be the Sylow
    ``p``-subgroup ``P ∩ w(G)`` and ``<G_u>`` its ``p'``-complement.
    """
    fac, P = _sylow_data(G, p)
    W = verbal_subgroup(G, w)
    rep = _report(G, "nilpotent-case", w=w, p=p, group_desc=group_desc)
    rep.numbers.update({"|P|": P.order, "|wG|": W.order})
    if not is_nilpotent(W):
        rep.verdict = INAPPLICABLE
        return rep
    pair = bezout(fac.p_part, fac.m)
    rep.numbers.update({"lambda": pair.lam, "mu": pair.mu})
    gw = value_array(G, w)
    Gu = np.array(sorted(power_value_set(G, w, fac.p_part)), dtype=np.int64)
    Gv = np.array(sorted(power_value_set(G, w, fac.m)), dtype=np.int64)
    U = subgroup_generated(G, Gu)
    V = subgroup_generated(G, Gv)
    # g = (g^(p^a))^lambda (g^m)^mu for every w-value g
    rebuilt = G.mul_arr(G.pow_arr(G.pow_arr(gw, fac.p_part), pair.lam), G.pow_arr(G.pow_arr(gw, fac.m), pair.mu))
    bezout_ok = bool((rebuilt == gw).all())
    generates = subgroup_generated(G, np.concatenate([Gu, Gv])) == W
    orders_ok = gcd(U.order, p) == 1 and is_p_power(V.order, p)
    commute = bool((G.comm_arr(Gu[:, None], Gv[None, :]) == G.identity).all())
    direct = commute and intersect(U, V).is_trivial() and U.order * V.order == W.order
    target = intersect(P, W)
    sylow_ok = target == V
    rep.numbers.update({
        "|Gu|": U.order, "|genSide|": V.order, "|PcapwG|": target.order,
        "bezout": int(bezout_ok), "generation": int(generates), "orders": int(orders_ok),
        "direct": int(direct), "sylow": int(sylow_ok),
    })
    ok = bezout_ok and generates and orders_ok and direct and sylow_ok
    witnesses = [] if ok else _least(np.flatnonzero(target.mask ^ V.mask).tolist())
    return _conclude(rep, G, ok, witnesses if not ok else V.generators)


# -- extensions of the word -------------------------------------------------------------


def verify_product_extensions(G: FiniteGroup, w: Word, p: int | None = None,
                              group_desc: str | None = None) -> VerificationReport:
    """``[w(G), u(G)]`` or ``[w(G), v(G)]`` lies in the product of the ``phi(G)``.

    ``phi`` runs over the proper extensions of ``w = [u, v]`` of the same
    height.  With a prime ``p`` the series ``N_0 = 1``,
    ``N_i = phi_1(G) ... phi_i(G)`` is also checked: ``[w(G), w(G)] <= N_r``
    and every ``P ∩ N_i`` is generated by ``w^m``-values inside it.
    """
    rep = _report(G, "product-extensions", w=w, p=p, group_desc=group_desc)
    if isinstance(w, Leaf) or w == delta(height(w)):
        rep.verdict = INAPPLICABLE
        return rep
    assert isinstance(w, Comm)
    phis = proper_extensions_same_height(w)
    N = verbal_product(G, phis)
    W = verbal_subgroup(G, w)
    cu = commutator_subgroup(G, W, verbal_subgroup(G, w.left))
    cv = commutator_subgroup(G, W, verbal_subgroup(G, w.right))
    rep.numbers.update({"|wG|": W.order, "#Phi": len(phis), "|N|": N.order,
                        "|[wG,uG]|": cu.order, "|[wG,vG]|": cv.order})
    ok = cu <= N or cv <= N
    bad: list[int] = [] if ok else np.flatnonzero(cu.mask & ~N.mask).tolist()
    if p is not None:
        fac, P = _sylow_data(G, p)
        rep.numbers["|P|"] = P.order
        derived_ok = commutator_subgroup(G, W, W) <= N
        S = _mask(G, power_value_set(G, w, fac.m))
        series_ok = True
        Ni = subgroup_generated(G, ())
        for phi in phis:
            Ni = subgroup_generated(G, list(Ni.generators) + list(verbal_subgroup(G, phi).generators))
            left = Subgroup(G, P.mask & Ni.mask)
            right = subgroup_generated(G, np.flatnonzero(P.mask & Ni.mask & S))
            if left != right:
                series_ok = False
                bad.extend(np.flatnonzero(left.mask ^ right.mask).tolist())
        rep.numbers.update({"derived": int(derived_ok), "series": int(series_ok)})
        ok = ok and derived_ok and series_ok
    return _conclude(rep, G, ok, [] if ok else _least(x for x in bad if x != G.identity))


# -- simple groups ----------------------------------------------------------------------


def verify_ore(G: FiniteGroup, group_desc: str | None = None) -> VerificationReport:
    """Every element of the non-abelian simple group ``G`` is a commutator."""
    if G.order == 1 or is_abelian(whole_group(G)) or minimal_normal_subgroups(G) != [whole_group(G)]:
        raise HypothesisViolated(f"{G!r} is not a non-abelian simple group")
    comms = value_set(G, delta(1))
    rep = _report(G, "ore", w=delta(1), group_desc=group_desc)
    rep.numbers["#commutators"] = len(comms)
    missing = set(range(G.order)) - comms.elements
    return _conclude(rep, G, not missing, _least(missing))


# -- changing the power -----------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def verify_remark_power(G: FiniteGroup, w: Word, p: int, group_desc: str | None = None) -> VerificationReport:
    """The exponent ``m*`` in ``<P ∩ G_{w^m*}>`` may be raised to ``m``.

    For every divisor ``m*`` of ``m`` with ``k = m / m*``:

    * ``x -> x^k`` maps ``P ∩ G_{w^m*}`` into ``P ∩ G_{w^m}``;
    * raising to the ``p'``-power ``k`` does not change the generated subgroup;
    * hence ``<P ∩ G_{w^m*}> <= <P ∩ G_{w^m}>``, so the focal equality at
      ``m*`` implies the one at ``m``.

    ``m*`` values at which equality already holds are counted in ``equal``.
    """
    fac, P = _sylow_data(G, p)
    W = verbal_subgroup(G, w)
    target = intersect(P, W)
    rep = _report(G, "remark-power", w=w, p=p, group_desc=group_desc)
    m = fac.m
    top = sorted(x for x in power_value_set(G, w, m) if x in P)
    top_set = set(top)
    top_gen = subgroup_generated(G, top)
    bad: list[int] = []
    equal = 0
    divisors = _divisors(m)
    for mstar in divisors:
        k = m // mstar
        low = np.array(sorted(x for x in power_value_set(G, w, mstar) if x in P), dtype=np.int64)
        raised = G.pow_arr(low, k)
        maps_into = all(int(x) in top_set for x in raised)
        low_gen = subgroup_generated(G, low)
        same_gen = subgroup_generated(G, raised) == low_gen
        below = low_gen <= top_gen
        implication = (low_gen != target) or (top_gen == target)
        if low_gen == top_gen:
            equal += 1
        if not (maps_into and same_gen and below and implication):
            bad.extend(np.flatnonzero(low_gen.mask & ~top_gen.mask).tolist() or [G.identity])
    rep.numbers.update({"|P|": P.order, "|wG|": W.order, "|PcapwG|": target.order,
                        "|genSide|": top_gen.order, "m": m, "divisors": len(divisors), "equal": equal})
    return _conclude(rep, G, not bad, _least(bad) if bad else top_gen.generators)


# -- suites -------------------------------------------------------------------------------


def _guard(make, G: FiniteGroup, statement: str, *, w: Word | None = None, p: int | None = None,
           group_desc: str | None = None) -> VerificationReport:
    try:
        return make()
    except FocalError as exc:  # per-item failure, the suite keeps going
        log.warning("%s on %s failed: %s", statement, group_desc or G.name, exc)
        rep = _report(G, statement, w=w, p=p, group_desc=group_desc)
        rep.verdict = ERROR
        rep.error = f"{type(exc).__name__}:{exc}"
        return rep


def _is_simple_nonabelian(G: FiniteGroup) -> bool:
    return G.order > 1 and not is_abelian(whole_group(G)) and minimal_normal_subgroups(G) == [whole_group(G)]


def _group_reports(G: FiniteGroup, desc: str, words: Sequence[Word], primes) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    ps = prime_divisors(G.order) if primes == "auto" else [q for q in primes if G.order % q == 0]

    # group-level statements (no word)
    if G.order > 1:
        for i in (1, 2, 3):
            out.append(_guard(lambda i=i: verify_lemma_min_normal(G, i, desc), G, "lemma-min-normal", group_desc=desc))
        if _is_simple_nonabelian(G):
            out.append(_guard(lambda: verify_ore(G, desc), G, "ore", group_desc=desc))
        mins = minimal_normal_subgroups(G)
        for p in ps:
            pel = p_elements(G, p)
            classes = [c for c in conjugacy_classes(G) if c <= pel and G.identity not in c]
            for N in mins:
                for cls in classes:
                    out.append(_guard(lambda N=N, cls=cls, p=p: verify_lemma_intersection(G, N, cls, p, desc),
                                      G, "lemma-intersection", p=p, group_desc=desc))

    for w in words:
        wtext = format_word(w)
        W = verbal_subgroup(G, w)
        lift_kernels = [N for N in (minimal_normal_subgroups(G) if G.order > 1 else []) if N <= W]
        if isinstance(w, Comm) and w != delta(height(w)):
            lift_kernels.append(verbal_product(G, proper_extensions_same_height(w)))
        for p in ps:
            fac = factor_order(G.order, p)
            out.append(_guard(lambda p=p: verify_theorem_a(G, w, p, desc), G, "theorem-a", w=w, p=p, group_desc=desc))
            out.append(_guard(lambda p=p: check_question1(G, value_set(G, w), p, word_text=wtext, group_desc=desc),
                              G, "question1", w=w, p=p, group_desc=desc))
            X = sorted(power_value_set(G, w, fac.m))
            for N in lift_kernels:
                out.append(_guard(lambda N=N, p=p, X=X: verify_lemma_lift(G, N, W, X, p, desc, word_text=wtext),
                                  G, "lemma-lift", w=w, p=p, group_desc=desc))
            out.append(_guard(lambda p=p: verify_nilpotent_case(G, w, p, desc), G, "nilpotent-case", w=w, p=p,
                              group_desc=desc))
            out.append(_guard(lambda p=p: verify_product_extensions(G, w, p, desc), G, "product-extensions", w=w,
                              p=p, group_desc=desc))
            out.append(_guard(lambda p=p: verify_remark_power(G, w, p, desc), G, "remark-power", w=w, p=p,
                              group_desc=desc))
    return out


def run_suite(corpus: Sequence, words: Sequence[Word], primes="auto", jobs: int = 1) -> list[VerificationReport]:
    """Run every verifier over ``corpus x words x primes``.

    ``corpus`` holds :class:`FiniteGroup` objects or descriptors with a
    ``build()`` method.  Reports come back ordered by group, then word, then
    prime, whatever ``jobs`` is.
    """

    def one(item) -> list[VerificationReport]:
        if isinstance(item, FiniteGroup):
            G, desc = item, item.name or f"order{item.order}"
        else:
            desc = item.name
            try:
                G = item.build()
            except (FocalError, AssertionError) as exc:
                return [VerificationReport("build", desc, verdict=ERROR, error=f"{type(exc).__name__}:{exc}")]
        return _group_reports(G, desc, list(words), primes)

    items = list(corpus)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(one, items))
    else:
        chunks = [one(item) for item in items]
    return [rep for chunk in chunks for rep in chunk]


def summarize(reports: Sequence[VerificationReport]) -> dict[str, int]:
    counts = {"total": len(reports), HOLDS: 0, FAILS: 0, INAPPLICABLE: 0, ERROR: 0}
    for rep in reports:
        counts[rep.verdict] += 1
    return counts
