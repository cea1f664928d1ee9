"""Build labeled posets, inspect their structure, and render them.

A labeled poset ("k-poset") is a finite partial order where every element
carries a label from {0, ..., k-1}.  This script builds a few, shows what
the validator rejects, and prints structural reports and DOT output.
"""

from kposet import (
    CycleDetected,
    build_poset,
    connected_components,
    export_dot,
    induced_subposet,
    serialize_poset,
    structure_report,
)

# covers list the Hasse edges (lower, upper); redundant pairs are fine,
# they are removed by transitive reduction
chain = build_poset(
    3,
    [("e1", 0), ("e2", 1), ("e3", 0), ("e4", 2)],
    [("e1", "e2"), ("e2", "e3"), ("e3", "e4"), ("e1", "e3")],
)
print("a 4-chain with labels 0, 1, 0, 2")
print("  elements:", chain.elements)
print("  covers:  ", chain.covers)
print("  e1 < e3?", chain.lt("e1", "e3"), "(implied, not a cover)")

report = structure_report(chain)
print("  connected:", report.is_connected, "| chain:", report.is_chain,
      "| lattice:", report.is_lattice)
print("  bounds:", report.bounds)

print()
print("restricting to {e1, e3} keeps the comparability:")
sub = induced_subposet(chain, {"e1", "e3"})
print("  covers:", sub.covers)

print()
print("cycles are rejected:")
try:
    build_poset(2, [("a", 0), ("b", 1)], [("a", "b"), ("b", "a")])
except CycleDetected as exc:
    print("  CycleDetected:", exc)

print()
fence = build_poset(
    2,
    [("a", 0), ("b", 1), ("c", 0), ("d", 1)],
    [("a", "b"), ("c", "b"), ("c", "d")],
)
print("a 4-element fence has one component:", len(connected_components(fence)))
print()
print("canonical JSON form:")
print(serialize_poset(fence))
print("DOT form (render with `dot -Tpng`):")
print(export_dot(fence))
