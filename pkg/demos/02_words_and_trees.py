"""Outer commutator words, their trees and their values."""

from focalgroups import build_named, parse_word
from focalgroups.values import value_set, verbal_subgroup
from focalgroups.words import (
    defect,
    delta,
    format_word,
    gamma,
    height,
    is_extension,
    proper_extensions_same_height,
    render_tree,
    words_up_to_height,
)

# Bracket shorthand nests to the left: [x1,x2,x3] is [[x1,x2],x3].
w = parse_word("[x1,x2,x3]")
print(format_word(w), "height", height(w), "defect", defect(w))
print(render_tree(w))

# The two families: gamma_i (lower central) and delta_i (derived).
for i in (1, 2, 3):
    print(f"gamma_{i + 1} = {format_word(gamma(i + 1))}    delta_{i} = {format_word(delta(i))}")

# Trees of bounded height, counted: 1, 2, 5, 26.
print("\nwords of height <= h:", [len(words_up_to_height(h)) for h in range(4)])
zero_defect = [format_word(u) for u in words_up_to_height(3) if defect(u) == 0]
print("defect zero:", zero_defect)

# Extending a word (growing leaves into subtrees) can only shrink the value set.
mixed = parse_word("[[x1,x2],[[x3,x4],x5]]")
print("\nextensions of", format_word(mixed), "with the same height:")
for u in proper_extensions_same_height(mixed):
    print("   ", format_word(u), is_extension(u, mixed))

G = build_named("S4")
for u in (gamma(2), gamma(3), delta(2), mixed):
    vs = value_set(G, u)
    print(f"S4: {format_word(u):<26} {len(vs):>2} values, verbal subgroup of order {verbal_subgroup(G, u).order}")
