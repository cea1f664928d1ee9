"""Exhaustive and seeded-random families of small posets and digraphs.

The exhaustive enumerators build every labeled structure on n points
and deduplicate up to isomorphism by a brute-force canonical key (the
minimum relabeling over all permutations), which is fine at the sizes
the test suites use.  Orders are enumerated by inserting elements one
at a time and choosing, for the new element, a down-closed set of
predecessors and an up-closed set of successors; every labeled order
arises exactly once that way.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .digraph import Digraph, build_digraph
from .poset import LabeledPoset, build_poset, structure_report


def _eid(i: int) -> str:
    return f"e{i}"


def strict_orders(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All strict partial orders on range(n), as sorted pair tuples."""
    if n == 0:
        yield ()
        return
    up = [0] * n
    down = [0] * n

    def rec(i: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if i == n:
            yield tuple(sorted(
                (a, b) for a in range(n) for b in range(n) if up[a] >> b & 1
            ))
            return
        prev = range(i)
        down_closed = [
            s for s in range(1 << i)
            if all(not s >> x & 1 or not down[x] & ~s for x in prev)
        ]
        up_closed = [
            s for s in range(1 << i)
            if all(not s >> x & 1 or not up[x] & ~s for x in prev)
        ]
        for d in down_closed:
            for u in up_closed:
                if d & u:
                    continue
                # transitivity through the new element
                if any(d >> x & 1 and u & ~up[x] for x in prev):
                    continue
                down[i], up[i] = d, u
                for x in prev:
                    if d >> x & 1:
                        up[x] |= 1 << i
                    if u >> x & 1:
                        down[x] |= 1 << i
                yield from rec(i + 1)
                for x in prev:
                    up[x] &= ~(1 << i)
                    down[x] &= ~(1 << i)
                down[i] = up[i] = 0
        return

    yield from rec(0)


def canonical_poset_key(p: LabeledPoset):
    """Canonical form up to label-preserving isomorphism, by brute force."""
    n = p.n
    pairs = [(p._index[x], p._index[y]) for x, y in p.closure]
    best = None
    for perm in itertools.permutations(range(n)):
        labels = tuple(p._labels[i] for i in _inverse(perm))
        rel = tuple(sorted((perm[a], perm[b]) for a, b in pairs))
        cand = (labels, rel)
        if best is None or cand < best:
            best = cand
    return (n,) if best is None else (n, *best)


def _inverse(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return inv


def canonical_digraph_key(g: Digraph):
    n = g.n
    idx = {v: i for i, v in enumerate(g.vertices)}
    edges = [(idx[u], idx[v]) for u, v in g.edges]
    best = None
    for perm in itertools.permutations(range(n)):
        cand = tuple(sorted((perm[a], perm[b]) for a, b in edges))
        if best is None or cand < best:
            best = cand
    return (n, best or ())


def _poset_from(n: int, k: int, labels: Sequence[int],
                pairs: Sequence[tuple[int, int]]) -> LabeledPoset:
    return build_poset(
        k,
        [(_eid(i), labels[i]) for i in range(n)],
        [(_eid(a), _eid(b)) for a, b in pairs],
    )


def all_posets(max_n: int, k: int) -> list[LabeledPoset]:
    """Every k-labeled poset with at most max_n elements, up to isomorphism."""
    out = []
    seen = set()
    for n in range(max_n + 1):
        for pairs in strict_orders(n):
            for labels in itertools.product(range(k), repeat=n):
                p = _poset_from(n, k, labels, pairs)
                key = canonical_poset_key(p)
                if key not in seen:
                    seen.add(key)
                    out.append(p)
    return out


def all_two_lattices(max_n: int) -> list[LabeledPoset]:
    """Every {0,1}-labeled lattice with at most max_n elements, up to iso."""
    out = []
    seen = set()
    for n in range(1, max_n + 1):
        for pairs in strict_orders(n):
            skeleton = _poset_from(n, 2, [0] * n, pairs)
            if not structure_report(skeleton).is_lattice:
                continue
            for labels in itertools.product(range(2), repeat=n):
                p = _poset_from(n, 2, labels, pairs)
                key = canonical_poset_key(p)
                if key not in seen:
                    seen.add(key)
                    out.append(p)
    return out


def all_digraphs(max_n: int) -> list[Digraph]:
    """Every digraph (loops allowed) with at most max_n vertices, up to iso."""
    out = []
    seen = set()
    for n in range(max_n + 1):
        names = [f"u{i}" for i in range(n)]
        cells = [(a, b) for a in names for b in names]
        for bits in range(1 << len(cells)):
            edges = [cells[t] for t in range(len(cells)) if bits >> t & 1]
            g = build_digraph(names, edges)
            key = canonical_digraph_key(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


def random_poset(rng: random.Random, n: int, k: int, *,
                 density: float = 0.4) -> LabeledPoset:
    """Random n-element k-poset: random arcs on an index order, closed."""
    labels = [rng.randrange(k) for _ in range(n)]
    pairs = [
        (i, j)
        for i in range(n) for j in range(i + 1, n)
        if rng.random() < density
    ]
    return _poset_from(n, k, labels, pairs)


def random_bounded_poset(rng: random.Random, n: int, k: int,
                         top_label: int, bottom_label: int, *,
                         density: float = 0.4) -> LabeledPoset:
    """Random bounded poset with the given extreme labels; n >= 2."""
    if n < 2:
        raise ValueError("a bounded poset with distinct extremes needs n >= 2")
    inner = n - 2
    labels = [rng.randrange(k) for _ in range(inner)]
    pairs = [
        (i, j)
        for i in range(inner) for j in range(i + 1, inner)
        if rng.random() < density
    ]
    elements = [(_eid(i), labels[i]) for i in range(inner)]
    elements += [("zz-top", top_label), ("aa-bot", bottom_label)]
    covers = [(_eid(a), _eid(b)) for a, b in pairs]
    covers += [("aa-bot", _eid(i)) for i in range(inner)]
    covers += [(_eid(i), "zz-top") for i in range(inner)]
    covers.append(("aa-bot", "zz-top"))
    return build_poset(k, elements, covers)


def random_digraph(rng: random.Random, n: int, *,
                   density: float = 0.3) -> Digraph:
    names = [f"u{i}" for i in range(n)]
    edges = [
        (a, b) for a in names for b in names if rng.random() < density
    ]
    return build_digraph(names, edges)
