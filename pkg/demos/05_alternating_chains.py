"""Alternating chains, and the fast decision procedure for binary lattices.

An alternating chain is a strictly increasing run whose consecutive labels
differ.  For lattices labeled over {0,1} the maximum alternation length
plus the bottom label determine the whole homomorphism story, so deciding
p -> q needs no search at all.
"""

import random

from kposet import (
    alternation_number,
    build_poset,
    compute_core,
    find_homomorphism,
    is_isomorphic,
    two_lattice_core,
    two_lattice_decide,
)
from kposet.generate import all_two_lattices, random_poset

zig = build_poset(3, [("e1", 0), ("e2", 1), ("e3", 0), ("e4", 2)],
                  [("e1", "e2"), ("e2", "e3"), ("e3", "e4")])
n, witness = alternation_number(zig)
print("fully alternating 4-chain:", n, witness)

flat = build_poset(1, [("a", 0), ("b", 0), ("c", 0)], [("a", "b"), ("b", "c")])
print("constant labels never alternate:", alternation_number(flat))

print()
diamond = build_poset(
    2,
    [("bot", 0), ("m1", 1), ("m2", 0), ("top", 1)],
    [("bot", "m1"), ("bot", "m2"), ("m1", "top"), ("m2", "top")],
)
print("a labeled diamond reduces to its longest alternating chain:")
core = two_lattice_core(diamond)
print("  core:", core.elements, "labels:", core.label)
print("  matches the search-based core:",
      is_isomorphic(core, compute_core(diamond).core) is not None)

print()
print("decide-by-counting agrees with the solver on every small 2-lattice pair:")
family = all_two_lattices(4)
mismatches = sum(
    two_lattice_decide(l1, l2) != (find_homomorphism(l1, l2) is not None)
    for l1 in family
    for l2 in family
)
print(f"  {len(family)}^2 = {len(family) ** 2} pairs, {mismatches} disagreements")

print()
print("alternation is monotone under homomorphisms, e.g. on random posets:")
rng = random.Random(7)
for _ in range(5):
    p = random_poset(rng, 5, 2)
    q = random_poset(rng, 6, 2)
    h = find_homomorphism(p, q)
    if h is not None:
        print(f"  Alt {alternation_number(p)[0]} -> Alt {alternation_number(q)[0]}")
