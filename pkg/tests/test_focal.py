import re

import numpy as np
import pytest

from focalgroups import focal
from focalgroups.corpus import build_named
from focalgroups.errors import HypothesisViolated, TheoremViolated, TrivialGroup
from focalgroups.focal import (
    check_question1,
    extract_focal_generators,
    run_suite,
    summarize,
    verify_lemma_intersection,
    verify_lemma_lift,
    verify_lemma_min_normal,
    verify_nilpotent_case,
    verify_ore,
    verify_product_extensions,
    verify_remark_power,
    verify_theorem_a,
)
from focalgroups.groups import (
    conjugacy_classes,
    element_order,
    minimal_normal_subgroups,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)
from focalgroups.sylow import p_elements, sylow_subgroup
from focalgroups.values import power_value_set, value_set, verbal_subgroup
from focalgroups.words import Leaf, delta, gamma


def V4_of(S4):
    return subgroup_generated(S4, S4.indices("(1 2)(3 4)", "(1 3)(2 4)"))


def check_report_invariants(rep, G):
    if rep.verdict == "fails":
        assert rep.witnesses
    for key, value in rep.numbers.items():
        if key.startswith("|"):
            assert G.order % value == 0, key


# -- focal generation ---------------------------------------------------------


def test_theorem_a_examples(S3, S4):
    rep = verify_theorem_a(S4, gamma(2), 2)
    assert rep.holds
    assert rep.numbers["|PcapwG|"] == rep.numbers["|genSide|"] == 4
    assert subgroup_generated(S4, rep.witnesses) == V4_of(S4)
    rep = verify_theorem_a(S3, delta(1), 3)
    assert rep.holds and rep.numbers["|PcapwG|"] == rep.numbers["|genSide|"] == 3
    for p in (2, 3):
        rep = verify_theorem_a(build_named("C6"), gamma(2), p)
        assert rep.holds and rep.numbers["|PcapwG|"] == rep.numbers["|genSide|"] == 1
    check_report_invariants(rep, build_named("C6"))


def test_extract_examples(S3, S4):
    assert extract_focal_generators(build_named("C6"), gamma(2), 3) == []
    gens = extract_focal_generators(S4, gamma(2), 2)
    assert len(gens) == 2 and subgroup_generated(S4, gens) == V4_of(S4)
    gens = extract_focal_generators(S3, delta(1), 3)
    assert len(gens) == 1 and element_order(S3, gens[0]) == 3


@pytest.mark.parametrize("name", ["S4", "SL23", "S3xS3", "PSL27", "D6"])
@pytest.mark.parametrize("w", [gamma(2), gamma(3), delta(2), Leaf(1)], ids=str)
def test_extract_invariants(name, w):
    G = build_named(name)
    from focalgroups.sylow import factor_order, prime_divisors

    for p in prime_divisors(G.order):
        gens = extract_focal_generators(G, w, p)
        P = sylow_subgroup(G, p)
        allowed = power_value_set(G, w, factor_order(G.order, p).m)
        assert all(g in P and g in allowed for g in gens)
        full = subgroup_generated(G, gens)
        assert full.as_set() == {x for x in verbal_subgroup(G, w) if x in P}
        for i in range(len(gens)):
            assert subgroup_generated(G, gens[:i] + gens[i + 1:]) < full


def test_theorem_a_fail_path_and_violation(monkeypatch, S4):
    # starve the generating side to exercise the failure reporting
    monkeypatch.setattr(focal, "power_value_set", lambda G, w, m: frozenset({G.identity}))
    rep = verify_theorem_a(S4, gamma(2), 2)
    assert rep.verdict == "fails" and rep.witnesses
    assert rep.witnesses[0] in V4_of(S4)
    assert "verdict=fails" in rep.to_line()
    with pytest.raises(TheoremViolated):
        extract_focal_generators(S4, gamma(2), 2)


# -- Question 1 ------------------------------------------------------------------


def test_question1_counterexample(S3):
    rep = check_question1(S3, power_value_set(S3, Leaf(1), 3), 3)
    assert rep.verdict == "fails"
    assert rep.numbers["|genSide|"] == 1 and rep.numbers["|PcapwG|"] == 3
    assert rep.witness_labels == ("(1 2 3)",)


def test_question1_holds(S3, S4):
    assert check_question1(S3, value_set(S3, gamma(2)), 3).holds
    for p in (2, 3):
        assert check_question1(S4, range(24), p).holds


# -- lemmas -------------------------------------------------------------------------


def test_lemma_intersection_examples(S4):
    cls_of = {frozenset(c) for c in conjugacy_classes(S4)}
    dbl = next(c for c in cls_of if S4.index("(1 2)(3 4)") in c)
    four = next(c for c in cls_of if S4.index("(1 2 3 4)") in c)
    V = V4_of(S4)
    assert verify_lemma_intersection(S4, trivial_subgroup(S4), dbl, 2).holds
    assert verify_lemma_intersection(S4, V, dbl, 2).holds
    assert verify_lemma_intersection(S4, V, four, 2).holds
    with pytest.raises(HypothesisViolated):
        verify_lemma_intersection(S4, V, [S4.index("(1 2)(3 4)")], 2)  # not a normal set
    three = next(c for c in cls_of if S4.index("(1 2 3)") in c)
    with pytest.raises(HypothesisViolated):
        verify_lemma_intersection(S4, V, three, 2)  # not 2-elements


def test_lemma_lift_examples(S4):
    V = V4_of(S4)
    A4 = verbal_subgroup(S4, gamma(2))
    G4 = whole_group(S4)
    assert verify_lemma_lift(S4, V, V, [], 2).holds
    X = sorted(power_value_set(S4, gamma(2), 3))
    rep = verify_lemma_lift(S4, V, A4, X, 2)
    assert rep.holds
    rep = verify_lemma_lift(S4, V, G4, sorted(p_elements(S4, 2)), 2)
    assert rep.verdict in ("holds", "inapplicable")
    assert rep.holds  # P̄ is generated by images of transpositions
    with pytest.raises(HypothesisViolated):
        verify_lemma_lift(S4, A4, V, [], 2)


def test_lemma_lift_inapplicable(S4):
    # X empty but P̄ ∩ L̄ nontrivial: hypothesis fails in S4/V4
    rep = verify_lemma_lift(S4, V4_of(S4), whole_group(S4), [], 2)
    assert rep.verdict == "inapplicable"


def test_lemma_min_normal_examples():
    assert verify_lemma_min_normal(build_named("C6"), 1).holds
    rep = verify_lemma_min_normal(build_named("SL23"), 3)
    assert rep.holds and rep.numbers["applicable"] == 1
    assert verify_lemma_min_normal(build_named("D5"), 2).holds
    # A5 is simple and every element is a commutator: vacuous
    assert verify_lemma_min_normal(build_named("A5"), 1).verdict == "inapplicable"
    with pytest.raises(TrivialGroup):
        verify_lemma_min_normal(build_named("C1"), 1)


def test_sl23_structure():
    from focalgroups.groups import derived_series

    G = build_named("SL23")
    Z = minimal_normal_subgroups(G)
    assert [N.order for N in Z] == [2]
    assert [H.order for H in derived_series(G, 3)] == [24, 8, 2, 1]
    assert derived_series(G, 2)[2] == Z[0]


# -- nilpotent case -------------------------------------------------------------------


def test_nilpotent_examples(S3, S4):
    rep = verify_nilpotent_case(S3, gamma(2), 2)
    assert rep.holds and rep.numbers["|genSide|"] == 1 == rep.numbers["|PcapwG|"]
    rep = verify_nilpotent_case(S3, gamma(2), 3)
    assert rep.holds and rep.numbers["|genSide|"] == 3 and rep.numbers["|Gu|"] == 1
    assert rep.numbers["lambda"] * 3 + rep.numbers["mu"] * 2 == 1
    rep = verify_nilpotent_case(build_named("D4"), gamma(2), 2)
    assert rep.holds and rep.numbers["|wG|"] == 2
    assert verify_nilpotent_case(S4, gamma(2), 2).verdict == "inapplicable"


def test_nilpotent_mixed_orders():
    # w(G) = C3 x C5 style: both factors nontrivial
    G = build_named("S3xD5")
    for p in (2, 3, 5):
        rep = verify_nilpotent_case(G, gamma(2), p)
        assert rep.holds
        assert rep.numbers["|Gu|"] * rep.numbers["|genSide|"] == rep.numbers["|wG|"] == 15


# -- product extensions ---------------------------------------------------------------


def test_product_extension_examples(S3, S4):
    rep = verify_product_extensions(S4, gamma(3))
    assert rep.holds and rep.numbers["#Phi"] == 1 and rep.numbers["|N|"] == 4
    assert rep.numbers["|[wG,uG]|"] == 4
    assert verify_product_extensions(S3, gamma(3)).holds
    assert verify_product_extensions(S4, delta(2)).verdict == "inapplicable"
    assert verify_product_extensions(S4, Leaf(1)).verdict == "inapplicable"
    rep = verify_product_extensions(S4, gamma(3), 2)
    assert rep.holds and rep.numbers["series"] == 1 and rep.numbers["derived"] == 1


# -- Ore -----------------------------------------------------------------------------


def test_ore_examples(A5, S4):
    rep = verify_ore(A5)
    assert rep.holds and rep.numbers["#commutators"] == 60
    with pytest.raises(HypothesisViolated):
        verify_ore(S4)
    with pytest.raises(HypothesisViolated):
        verify_ore(build_named("C5"))
    rep = verify_ore(build_named("PSL27"))
    assert rep.holds and rep.numbers["#commutators"] == 168


# -- changing the exponent ---------------------------------------------------------------


@pytest.mark.parametrize("name, p, m", [("S4", 2, 3), ("S3", 3, 2)])
def test_remark_power_examples(name, p, m):
    G = build_named(name)
    P = sylow_subgroup(G, p)
    rep = verify_remark_power(G, gamma(2), p)
    assert rep.holds and rep.numbers["m"] == m
    low = [x for x in value_set(G, gamma(2)).elements if x in P]
    high = [x for x in power_value_set(G, gamma(2), m) if x in P]
    low_gen, high_gen = subgroup_generated(G, low), subgroup_generated(G, high)
    assert high_gen <= low_gen  # the inclusion stated for these instances
    assert subgroup_generated(G, G.pow_arr(np.array(low), m)) == high_gen
    assert rep.numbers["equal"] == rep.numbers["divisors"]


def test_remark_power_trivial_mstar(S4):
    rep = verify_remark_power(S4, gamma(3), 3)
    assert rep.holds and rep.numbers["m"] == 8 and rep.numbers["divisors"] == 4


# -- suite -----------------------------------------------------------------------------


def test_run_suite_examples(S3):
    assert run_suite([], [gamma(2)]) == []
    reps = run_suite([S3], [gamma(2)])
    assert len(reps) >= 6
    assert summarize(reps)["fails"] == 0 and summarize(reps)["error"] == 0
    assert {r.p for r in reps if r.statement == "theorem-a"} == {2, 3}
    for r in reps:
        check_report_invariants(r, S3)


def test_run_suite_records_errors():
    class Broken:
        name = "broken"

        def build(self):
            raise AssertionError("nope")

    reps = run_suite([Broken(), build_named("C2")], [gamma(2)])
    assert reps[0].verdict == "error" and "nope" in reps[0].error
    assert all(r.verdict != "error" for r in reps[1:])


def test_report_line_format(S4):
    line = verify_theorem_a(S4, gamma(2), 2).to_line()
    pattern = (r"^statement=theorem-a group=S4 word=\[x1,x2\] p=2 verdict=holds \|G\|=24 \|P\|=8 \|wG\|=12 "
               r"\|PcapwG\|=4 \|genSide\|=4 .*witnesses=\[[^\]]*\]$")
    assert re.match(pattern, line), line
    assert "word=" not in verify_lemma_min_normal(S4, 1).to_line()


def test_theorem_a_all_short_words_on_corpus():
    from focalgroups.corpus import default_corpus
    from focalgroups.sylow import prime_divisors
    from focalgroups.words import words_up_to_height

    bad = []
    for d in default_corpus():
        G = d.build()
        for w in words_up_to_height(3):
            for p in prime_divisors(G.order):
                if not verify_theorem_a(G, w, p).holds:
                    bad.append((d.name, str(w), p))
                if not check_question1(G, value_set(G, w), p).holds:
                    bad.append(("q1", d.name, str(w), p))
    assert bad == []
