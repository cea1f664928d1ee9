"""Directed graphs and their translations into labeled posets.

A digraph becomes a 2-poset by replacing every vertex and every edge
with a two-element gadget:

* vertex a: (a,0) < (a,1), labels 0 and 1;
* edge e:   (e,1) < (e,0), note the flipped order;
* edge e = (u,v) is stitched in by (u,0) < (e,0) and (e,1) < (v,1).

Graph homomorphisms then correspond exactly to poset homomorphisms of
the encodings, and the same holds after completing the poset with a
fresh top and bottom labeled 2 (which yields a lattice precisely when
the graph has no loop).  Element ids are stable functions of the vertex
and edge names, so a subgraph encodes to a literal subposet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DuplicateId, UnknownElement
from .poset import LabeledPoset, build_poset


@dataclass(frozen=True)
class Digraph:
    """Finite digraph; loops allowed, parallel edges collapse."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self.edges

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={len(self.edges)})"


def build_digraph(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> Digraph:
    """Validate and construct a digraph with sorted vertex order."""
    vs = list(vertices)
    seen: set[str] = set()
    for v in vs:
        if v in seen:
            raise DuplicateId(f"vertex id {v!r} declared twice")
        seen.add(v)
    es = set()
    for u, v in edges:
        if u not in seen:
            raise UnknownElement(f"edge endpoint {u!r} is not a vertex")
        if v not in seen:
            raise UnknownElement(f"edge endpoint {v!r} is not a vertex")
        es.add((u, v))
    return Digraph(tuple(sorted(vs)), frozenset(es))


def induced_subgraph(g: Digraph, subset: Iterable[str]) -> Digraph:
    wanted = set(subset)
    for v in wanted:
        if v not in set(g.vertices):
            raise UnknownElement(f"no vertex {v!r}")
    return Digraph(
        tuple(sorted(wanted)),
        frozenset((u, v) for u, v in g.edges if u in wanted and v in wanted),
    )


def _vid(v: str, bit: int) -> str:
    return f"v:{v}:{bit}"


def _eid(u: str, v: str, bit: int) -> str:
    return f"e:{u}->{v}:{bit}"


def encode_poset(g: Digraph) -> LabeledPoset:
    """The 2-poset of vertex and edge gadgets described in the module docstring."""
    elements = []
    covers = []
    for v in g.vertices:
        elements += [(_vid(v, 0), 0), (_vid(v, 1), 1)]
        covers.append((_vid(v, 0), _vid(v, 1)))
    for u, v in sorted(g.edges):
        elements += [(_eid(u, v, 0), 0), (_eid(u, v, 1), 1)]
        covers.append((_eid(u, v, 1), _eid(u, v, 0)))
        covers.append((_vid(u, 0), _eid(u, v, 0)))
        covers.append((_eid(u, v, 1), _vid(v, 1)))
    return build_poset(2, elements, covers)


def encode_lattice(g: Digraph) -> LabeledPoset:
    """The vertex/edge encoding completed with a top and bottom labeled 2.

    The empty graph encodes to the empty 3-poset.  For loopless graphs
    the result is a lattice; a loop produces two incomparable elements
    with no least upper bound.
    """
    if not g.vertices:
        return build_poset(3, [], [])
    pg = encode_poset(g)
    elements = [(x, pg.label[x]) for x in pg.elements] + [("top", 2), ("bot", 2)]
    covers = list(pg.covers)
    for i, x in enumerate(pg.elements):
        if pg._down[i] == 0:
            covers.append(("bot", x))
        if pg._up[i] == 0:
            covers.append((x, "top"))
    return build_poset(3, elements, covers)


def graph_find_homomorphism(g: Digraph, h: Digraph) -> Optional[dict[str, str]]:
    """Edge-preserving vertex map from ``g`` to ``h``, or None.

    Plain backtracking straight on the graphs, assigning vertices in id
    order and trying targets in id order.  This is kept independent of
    the poset solver so the two can be checked against each other.
    """
    gv = g.vertices
    hv = h.vertices
    if not gv:
        return {}
    if not hv:
        return None
    out_nbrs: dict[str, list[str]] = {v: [] for v in gv}
    in_nbrs: dict[str, list[str]] = {v: [] for v in gv}
    for u, v in g.edges:
        out_nbrs[u].append(v)
        in_nbrs[v].append(u)
    assigned: dict[str, str] = {}

    def extend(i: int) -> bool:
        if i == len(gv):
            return True
        v = gv[i]
        for w in hv:
            ok = True
            for x in out_nbrs[v]:
                if x in assigned and (w, assigned[x]) not in h.edges:
                    ok = False
                    break
            if ok and (v, v) in g.edges and (w, w) not in h.edges:
                ok = False
            if ok:
                for x in in_nbrs[v]:
                    if x in assigned and (assigned[x], w) not in h.edges:
                        ok = False
                        break
            if ok:
                assigned[v] = w
                if extend(i + 1):
                    return True
                del assigned[v]
        return False

    return dict(assigned) if extend(0) else None


def graph_nonsurjective_endomorphism(g: Digraph) -> Optional[dict[str, str]]:
    """First endomorphism of ``g`` missing a vertex, excluding each in id order."""
    universe = set(g.vertices)
    for v in g.vertices:
        h = graph_find_homomorphism(g, induced_subgraph(g, universe - {v}))
        if h is not None:
            return h
    return None


def graph_is_core(g: Digraph) -> bool:
    return graph_nonsurjective_endomorphism(g) is None


def graph_core(g: Digraph) -> Digraph:
    """Minimal retract of ``g``: repeatedly restrict to an endomorphic image."""
    current = g
    while True:
        h = graph_nonsurjective_endomorphism(current)
        if h is None:
            return current
        current = induced_subgraph(current, set(h.values()))
