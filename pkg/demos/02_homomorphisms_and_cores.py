"""Homomorphisms between labeled posets, the order they induce, and cores.

A homomorphism maps elements to elements, preserving both the order and
the labels.  "p maps into q" is a quasiorder on posets; two posets that
map into each other are equivalent, and every equivalence class has a
unique smallest representative, the core.
"""

from kposet import (
    brute_force_homomorphism,
    build_poset,
    compare,
    compute_core,
    disjoint_union,
    find_homomorphism,
    find_nonsurjective_endomorphism,
    verify_homomorphism,
)

two = build_poset(2, [("b1", 0), ("b2", 1)], [("b1", "b2")])
three = build_poset(2, [("e1", 0), ("e2", 1), ("e3", 0)], [("e1", "e2"), ("e2", "e3")])

h = find_homomorphism(two, three)
print("2-chain (0<1) into 3-chain (0<1<0):", h.mapping)
print("  verified:", verify_homomorphism(two, three, h))
print("3-chain into 2-chain:", find_homomorphism(three, two))
print("  (the top 0 has nowhere to go above the 1)")

# the solver agrees with plain enumeration of all |q|^|p| maps
assert (brute_force_homomorphism(three, two) is None) == (find_homomorphism(three, two) is None)

print()
verdict = compare(two, three)
print("compare(2-chain, 3-chain):", verdict.relation.value)

print()
print("cores:")
doubled = disjoint_union([three, three])
endo = find_nonsurjective_endomorphism(doubled)
print("  two copies of the 3-chain fold onto one:", endo.mapping)
result = compute_core(doubled)
print("  core has", result.core.n, "elements after", len(result.retractions), "retraction(s)")
print("  the 3-chain itself is rigid:", find_nonsurjective_endomorphism(three) is None)

print()
anti = build_poset(1, [("a1", 0), ("a2", 0)], [])
print("an antichain with equal labels collapses:",
      find_nonsurjective_endomorphism(anti).mapping)
