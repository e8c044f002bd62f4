"""Why the power m matters: a normal set of p-elements can fail to generate.

In S3 take X = {g^3 : g in S3} and p = 3.  X is the identity together with
the transpositions, so P ∩ X = {1} while P ∩ <X> = A3.  For genuine word
values (no power) no such failure shows up in the corpus.
"""

from focalgroups import build_named
from focalgroups.focal import check_question1
from focalgroups.values import power_value_set, value_set
from focalgroups.words import Leaf, gamma

S3 = build_named("S3")
X = power_value_set(S3, Leaf(1), 3)
print("X =", sorted(S3.format(x) for x in X))
rep = check_question1(S3, X, 3, word_text="x1^3", group_desc="S3")
print(f"<P∩X> has order {rep.numbers['|genSide|']}, P∩<X> has order {rep.numbers['|PcapwG|']}: {rep.verdict}")
print("missing element:", rep.witness_labels)

# The commutator values themselves behave.
rep = check_question1(S3, value_set(S3, gamma(2)), 3, word_text="[x1,x2]", group_desc="S3")
print("\nwith w = [x1,x2] instead:", rep.verdict)
