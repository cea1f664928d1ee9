"""Encode directed graphs as labeled posets, preserving homomorphism structure.

Each vertex becomes a 2-chain (v,0) < (v,1); each edge u->v becomes a
flipped 2-chain stitched between the endpoint gadgets.  A graph maps into
another exactly when the encoded posets do, so questions about graph
colorings and cores translate into poset questions (which is also why
poset homomorphism is hard in general).
"""

from kposet import (
    build_digraph,
    compute_core,
    encode_lattice,
    encode_poset,
    find_homomorphism,
    graph_core,
    graph_find_homomorphism,
    graph_is_core,
    is_isomorphic,
    structure_report,
)

square = build_digraph(
    ["a", "b", "c", "d"],
    [("a", "b"), ("a", "d"), ("c", "d"), ("b", "c"), ("c", "b")],
)
pg = encode_poset(square)
print("4 vertices + 5 edges encode to", pg.n, "elements and", len(pg.covers), "covers")

triangle = build_digraph(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])
print()
print("homomorphisms transfer exactly:")
for g, name in ((square, "square"), (triangle, "triangle")):
    graph_side = graph_find_homomorphism(g, triangle) is not None
    poset_side = find_homomorphism(encode_poset(g), encode_poset(triangle)) is not None
    print(f"  {name} -> triangle: graphs say {graph_side}, posets say {poset_side}")

print()
print("cores transfer too:")
print("  square is a core:", graph_is_core(square))
core_of_encoding = compute_core(encode_poset(square)).core
encoding_of_core = encode_poset(graph_core(square))
print("  core(encode(square)) iso encode(core(square)):",
      is_isomorphic(core_of_encoding, encoding_of_core) is not None)

print()
print("the bounded variant adds a fresh top and bottom (label 2):")
edge = build_digraph(["u", "v"], [("u", "v")])
lg = encode_lattice(edge)
r = structure_report(lg)
print("  single edge ->", lg.n, "elements, lattice:", r.is_lattice, "bounds:", r.bounds)
loop = encode_lattice(build_digraph(["w"], [("w", "w")]))
print("  a loop breaks the lattice property:", structure_report(loop).is_lattice)
