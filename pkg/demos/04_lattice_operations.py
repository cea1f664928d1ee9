"""Join and meet in the homomorphism order, glued joins, and the law checker.

Disjoint union is the least upper bound and the label-matching product the
greatest lower bound of the homomorphism order.  Among bounded posets with
fixed extreme labels there is a sharper join: glue the interiors between a
fresh shared top and bottom.
"""

from kposet import (
    SizeBudgetExceeded,
    build_poset,
    check_glue_distributivity,
    check_lattice_laws,
    compare,
    disjoint_union,
    find_homomorphism,
    glue_join,
    is_join_irreducible,
    label_matching_product,
    structure_report,
)

zig = build_poset(3, [("e1", 0), ("e2", 1), ("e3", 0), ("e4", 2)],
                  [("e1", "e2"), ("e2", "e3"), ("e3", "e4")])
zag = build_poset(3, [("f1", 1), ("f2", 0), ("f3", 1), ("f4", 2)],
                  [("f1", "f2"), ("f2", "f3"), ("f3", "f4")])

union = disjoint_union([zig, zag])
print("union of the two chains:", union.n, "elements,",
      "both embed:", find_homomorphism(zig, union) is not None
      and find_homomorphism(zag, union) is not None)

product = label_matching_product([zig, zag])
print("product keeps only label-matched pairs:", product.elements)
print("  it is a lower bound of both chains, but not a lattice itself:",
      structure_report(product).is_lattice)

try:
    label_matching_product([zig, zag], budget=3)
except SizeBudgetExceeded as exc:
    print("  products can explode, so a budget guards them:", exc)

print()
print("all eight order-theoretic laws, checked on a concrete triple:")
for check in check_lattice_laws(zig, zag, product).checks:
    flag = "vacuous" if check.vacuous else ("ok" if check.passed else "FAILED")
    print(f"  {check.law:<16} {flag}")

print()
p = build_poset(3, [("pb", 0), ("x", 1), ("pt", 2)], [("pb", "x"), ("x", "pt")])
q = build_poset(3, [("qb", 0), ("y", 0), ("qt", 2)], [("qb", "y"), ("y", "qt")])
glued = glue_join(p, q, 2, 0)
print("glued join of two bounded 3-chains:", glued.elements)
print("  it is the least upper bound among bounded posets (top 2, bottom 0)")
print("  self-glue stays equivalent:", compare(glue_join(p, p, 2, 0), p).relation.value)
print("  meets distribute over glued joins:", check_glue_distributivity(p, q, p, 2, 0))

print()
print("join-irreducibility is a property of the core's components:")
print("  3-chain (0<1<0):", is_join_irreducible(
    build_poset(2, [("a", 0), ("b", 1), ("c", 0)], [("a", "b"), ("b", "c")])))
incomparable = disjoint_union([
    build_poset(2, [("a", 0), ("b", 1), ("c", 0)], [("a", "b"), ("b", "c")]),
    build_poset(2, [("x", 1), ("y", 0), ("z", 1)], [("x", "y"), ("y", "z")]),
])
print("  union of (0<1<0) and (1<0<1):", is_join_irreducible(incomparable))
