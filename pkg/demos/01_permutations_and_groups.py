"""Permutations, enumerated groups and subgroup masks."""

import numpy as np

from focalgroups import Permutation, build_named, format_cycles, generate_group, parse_cycle_notation, subgroup_generated
from focalgroups.groups import conjugacy_classes, derived_series, minimal_normal_subgroups, quotient

# Permutations act on the right: (a * b)(i) applies a first, then b.
a = parse_cycle_notation("(1 2 3)", 4)
b = parse_cycle_notation("(3 4)", 4)
print("a =", format_cycles(a), " b =", format_cycles(b))
print("a*b =", format_cycles(a * b), " b*a =", format_cycles(b * a))
print("order of a*b:", (a * b).order())

# A group is fully enumerated; elements are addressed by index 0..|G|-1.
S4 = generate_group([a, b, Permutation((2, 1, 3, 4))], 4, name="S4")
print("\n|S4| =", S4.order, " identity index:", S4.identity)
print("elements of order 1..4:", np.bincount(S4.element_orders())[1:])

# Arithmetic broadcasts over index arrays, which is what keeps everything fast.
x = S4.index("(1 2 3 4)")
all_g = S4.all_indices()
conj = S4.conj_arr(x, all_g)
print("conjugates of (1 2 3 4):", sorted({S4.format(int(g)) for g in conj}))

# Subgroups are boolean masks over the parent's elements.
V4 = subgroup_generated(S4, S4.indices("(1 2)(3 4)", "(1 3)(2 4)"))
print("\nV4 =", [S4.format(g) for g in V4.indices])
print("minimal normal subgroups:", [N.order for N in minimal_normal_subgroups(S4)])
print("derived series orders:", [H.order for H in derived_series(S4, 3)])
print("class sizes:", [len(c) for c in conjugacy_classes(S4)])

# The quotient by a normal subgroup is another table-backed group.
q = quotient(S4, V4)
print("|S4/V4| =", q.target.order, " image of (1 2 3 4):", q.target.format(int(q.bar[x])))

# The built-in catalogue covers the usual small examples.
for name in ("Q8", "SL23", "S3xS3", "PSL27"):
    G = build_named(name)
    print(f"{name:>6}: order {G.order:>3}, degree {G.degree}")
