"""Finite labeled posets: validated construction and structural analysis.

A labeled poset carries an integer label in ``[0, k)`` on every element.
Elements are identified by opaque strings.  Instances are immutable;
:func:`build_poset` is the only public constructor and accepts arbitrary
order pairs, storing their transitive reduction as the cover relation.

Comparability is kept as one bitmask per element (strict up-set and
strict down-set over the lexicographic element indexing), so order
queries and the searches built on top of them are cheap.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import CycleDetected, DuplicateId, LabelOutOfRange, UnknownElement


class Bounds(NamedTuple):
    top_id: str
    top_label: int
    bottom_id: str
    bottom_label: int


@dataclass(frozen=True)
class StructureReport:
    """Summary facts about one poset, as computed by :func:`structure_report`."""

    is_connected: bool
    is_chain: bool
    is_lattice: bool
    bounds: Optional[Bounds]
    component_count: int


class LabeledPoset:
    """A finite poset whose elements carry labels in ``[0, k)``.

    Do not call the constructor directly; use :func:`build_poset`.  The
    stored ``covers`` are always the transitive reduction of the order,
    and ``elements`` is sorted lexicographically so that every derived
    ordering (witnesses, serializations, reports) is deterministic.
    """

    def __init__(self, k: int, elements: tuple[str, ...], labels: tuple[int, ...],
                 up: list[int], down: list[int]):
        self.k = k
        self.elements = elements
        self._labels = labels
        self._up = up      # strict successors of element i, as a bitmask
        self._down = down  # strict predecessors
        self._index = {x: i for i, x in enumerate(elements)}

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def label(self) -> dict[str, int]:
        return {x: l for x, l in zip(self.elements, self._labels)}

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"no element {x!r}") from None

    def le(self, x: str, y: str) -> bool:
        """Reflexive order test on element ids."""
        i, j = self.index(x), self.index(y)
        return i == j or bool(self._up[i] >> j & 1)

    def lt(self, x: str, y: str) -> bool:
        return bool(self._up[self.index(x)] >> self.index(y) & 1)

    def comparable(self, x: str, y: str) -> bool:
        return self.le(x, y) or self.lt(y, x)

    @cached_property
    def covers(self) -> tuple[tuple[str, str], ...]:
        """Cover pairs (x, y) with x covered by y: the transitive reduction, sorted."""
        out = []
        for i in range(self.n):
            m = self._up[i]
            while m:
                b = m & -m
                j = b.bit_length() - 1
                m ^= b
                # cover iff nothing sits strictly between i and j
                if not self._up[i] & self._down[j]:
                    out.append((self.elements[i], self.elements[j]))
        return tuple(sorted(out))

    @cached_property
    def closure(self) -> frozenset[tuple[str, str]]:
        """All strict order pairs (x, y) with x < y."""
        out = []
        for i in range(self.n):
            m = self._up[i]
            while m:
                b = m & -m
                m ^= b
                out.append((self.elements[i], self.elements[b.bit_length() - 1]))
        return frozenset(out)

    @cached_property
    def _strict_pairs(self) -> tuple[tuple[int, int], ...]:
        # index form of `closure`, for the solver's inner loops
        out = []
        for i in range(self.n):
            m = self._up[i]
            while m:
                b = m & -m
                m ^= b
                out.append((i, b.bit_length() - 1))
        return tuple(out)

    @cached_property
    def _up_refl(self) -> tuple[int, ...]:
        return tuple(self._up[i] | 1 << i for i in range(self.n))

    @cached_property
    def _down_refl(self) -> tuple[int, ...]:
        return tuple(self._down[i] | 1 << i for i in range(self.n))

    @cached_property
    def _linear_extension(self) -> tuple[int, ...]:
        """Element indices in a fixed linear extension (smallest ready id first)."""
        return tuple(_kahn(self.n, self._down))

    @cached_property
    def _component_masks(self) -> tuple[int, ...]:
        """Connected components as index bitmasks, ordered by smallest index."""
        n = self.n
        seen = 0
        comps = []
        for start in range(n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    b = m & -m
                    i = b.bit_length() - 1
                    m ^= b
                    nxt |= self._up[i] | self._down[i]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(comp)
        return tuple(comps)

    @cached_property
    def _fingerprint(self):
        return (self.k, self.elements, self._labels, self.covers)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledPoset):
            return NotImplemented
        return self._fingerprint == other._fingerprint

    def __hash__(self) -> int:
        return hash(self._fingerprint)

    def __repr__(self) -> str:
        return f"LabeledPoset(k={self.k}, n={self.n})"


def _mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _kahn(n: int, down: Sequence[int]) -> list[int]:
    """Linear extension of a strict order given by predecessor masks."""
    placed = 0
    ready = [i for i in range(n) if down[i] == 0]
    heapq.heapify(ready)
    waiting = [i for i in range(n) if down[i] != 0]
    order = []
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        placed |= 1 << i
        still = []
        for j in waiting:
            if down[j] & ~placed:
                still.append(j)
            else:
                heapq.heappush(ready, j)
        waiting = still
    return order


def build_poset(k: int, labeled_elements: Iterable[tuple[str, int]],
                covers: Iterable[tuple[str, str]]) -> LabeledPoset:
    """Validate and construct a labeled poset.

    ``covers`` may contain any set of order pairs, redundant or not; the
    transitive closure is taken and the stored cover relation is its
    reduction.  Raises :class:`DuplicateId`, :class:`LabelOutOfRange`,
    :class:`UnknownElement` or :class:`CycleDetected` on bad input.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    labeled = list(labeled_elements)
    seen: set[str] = set()
    for x, _ in labeled:
        if x in seen:
            raise DuplicateId(f"element id {x!r} declared twice")
        seen.add(x)
    for x, l in labeled:
        if not isinstance(l, int) or isinstance(l, bool) or not 0 <= l < k:
            raise LabelOutOfRange(f"label {l!r} of {x!r} not in [0, {k})")

    elements = tuple(sorted(x for x, _ in labeled))
    index = {x: i for i, x in enumerate(elements)}
    by_id = dict(labeled)
    labels = tuple(by_id[x] for x in elements)

    n = len(elements)
    adj = [0] * n  # direct arcs from the input pairs
    for x, y in covers:
        if x not in index:
            raise UnknownElement(f"cover endpoint {x!r} is not an element")
        if y not in index:
            raise UnknownElement(f"cover endpoint {y!r} is not an element")
        if x == y:
            raise CycleDetected(f"self-relation on {x!r}")
        adj[index[x]] |= 1 << index[y]

    up = _close(n, adj)
    down = _transpose(n, up)
    return LabeledPoset(k, elements, labels, up, down)


def _close(n: int, adj: Sequence[int]) -> list[int]:
    """Strict transitive closure of an arc relation; cycles are an error."""
    indeg = [0] * n
    for i in range(n):
        m = adj[i]
        while m:
            b = m & -m
            indeg[b.bit_length() - 1] += 1
            m ^= b
    stack = [i for i in range(n) if indeg[i] == 0]
    topo = []
    while stack:
        i = stack.pop()
        topo.append(i)
        m = adj[i]
        while m:
            b = m & -m
            j = b.bit_length() - 1
            m ^= b
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
    if len(topo) != n:
        stuck = sorted(set(range(n)) - set(topo))
        raise CycleDetected(f"order pairs contain a cycle through indices {stuck}")
    up = [0] * n
    for i in reversed(topo):
        m = adj[i]
        acc = 0
        while m:
            b = m & -m
            j = b.bit_length() - 1
            m ^= b
            acc |= b | up[j]
        up[i] = acc
        if acc >> i & 1:
            raise CycleDetected(f"order pairs contain a cycle through index {i}")
    return up


def _transpose(n: int, up: Sequence[int]) -> list[int]:
    down = [0] * n
    for i in range(n):
        m = up[i]
        while m:
            b = m & -m
            down[b.bit_length() - 1] |= 1 << i
            m ^= b
    return down


def induced_subposet(p: LabeledPoset, subset: Iterable[str]) -> LabeledPoset:
    """Restriction of ``p`` to ``subset``, with covers recomputed.

    The restricted order is the restriction of the closure, so elements
    that were only connected through removed ones stay comparable.
    """
    wanted = set(subset)
    for x in wanted:
        if x not in p._index:
            raise UnknownElement(f"no element {x!r}")
    ids = tuple(sorted(wanted))
    old = [p._index[x] for x in ids]
    keep = _mask_of(old)
    pos = {o: i for i, o in enumerate(old)}
    n = len(ids)
    up = [0] * n
    for i, o in enumerate(old):
        m = p._up[o] & keep
        while m:
            b = m & -m
            up[i] |= 1 << pos[b.bit_length() - 1]
            m ^= b
    labels = tuple(p._labels[o] for o in old)
    return LabeledPoset(p.k, ids, labels, up, _transpose(n, up))


def connected_components(p: LabeledPoset) -> list[LabeledPoset]:
    """Connected components as induced subposets, smallest element id first."""
    out = []
    for mask in p._component_masks:
        ids = [p.elements[i] for i in _bits(mask)]
        out.append(induced_subposet(p, ids))
    return out


def _bits(m: int):
    while m:
        b = m & -m
        yield b.bit_length() - 1
        m ^= b


def _extremum_of(mask: int, dominated_by: Sequence[int]) -> int:
    """Index i in ``mask`` with mask contained in ``dominated_by[i]``, or -1.

    With reflexive up-sets this finds the least element of ``mask``; with
    reflexive down-sets, the greatest.
    """
    for i in _bits(mask):
        if not mask & ~dominated_by[i]:
            return i
    return -1


def structure_report(p: LabeledPoset) -> StructureReport:
    """Connectivity, chain/lattice status and bounds of ``p``.

    The lattice test checks every pair for a least upper bound and a
    greatest lower bound over the closure.  The empty poset counts as a
    chain and as a lattice (both conditions hold vacuously) but is not
    connected and has no bounds.
    """
    n = p.n
    count = len(p._component_masks)
    is_connected = count == 1

    is_chain = all(
        (p._up[i] | p._down[i]).bit_count() == n - 1 for i in range(n)
    )

    # lub: least element of the common upper bounds; glb dually
    upr, dnr = p._up_refl, p._down_refl
    is_lattice = True
    for i in range(n):
        for j in range(i + 1, n):
            if _extremum_of(upr[i] & upr[j], upr) < 0 or _extremum_of(dnr[i] & dnr[j], dnr) < 0:
                is_lattice = False
                break
        if not is_lattice:
            break

    bounds = None
    maxima = [i for i in range(n) if p._up[i] == 0]
    minima = [i for i in range(n) if p._down[i] == 0]
    if n > 0 and len(maxima) == 1 and len(minima) == 1:
        t, b = maxima[0], minima[0]
        bounds = Bounds(p.elements[t], p._labels[t], p.elements[b], p._labels[b])

    return StructureReport(is_connected, is_chain, is_lattice, bounds, count)
