"""P ∩ w(G) is generated by the w^m-values lying in P.

|G| = p^a m with p not dividing m.  For each group, word and prime we
compute both sides and pick a small generating set for the intersection.
"""

from focalgroups import build_named, extract_focal_generators, run_suite, verify_theorem_a
from focalgroups.corpus import default_corpus
from focalgroups.focal import summarize
from focalgroups.sylow import factor_order, prime_divisors
from focalgroups.words import delta, format_word, gamma

G = build_named("S4")
for p in prime_divisors(G.order):
    fac = factor_order(G.order, p)
    rep = verify_theorem_a(G, gamma(2), p, "S4")
    gens = extract_focal_generators(G, gamma(2), p)
    print(f"S4, [x1,x2], p={p}: m={fac.m}, |P|={rep.numbers['|P|']}, "
          f"|P∩w(G)|={rep.numbers['|PcapwG|']}, generators {[G.format(g) for g in gens]}  -> {rep.verdict}")

# The same check on a group whose derived length is 3.
G = build_named("SL23")
for w in (gamma(2), delta(2), gamma(3)):
    for p in (2, 3):
        rep = verify_theorem_a(G, w, p, "SL23")
        print(f"SL(2,3), {format_word(w):<18} p={p}: |P∩w(G)|={rep.numbers['|PcapwG|']:<2} {rep.verdict}")

# Every statement over the whole corpus.  Inapplicable means a hypothesis was not met.
reports = run_suite(default_corpus(), [gamma(2), gamma(3), delta(2)], jobs=4)
print("\ncorpus:", summarize(reports))
print("first report:", reports[0].to_line())
