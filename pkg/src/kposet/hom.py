"""Homomorphism search, cores, and quasiorder comparison.

A homomorphism between labeled posets maps elements to elements so that
labels are preserved exactly and the order is preserved (x <= y forces
h(x) <= h(y); collapsing incomparable elements is allowed).

The searcher is a backtracking constraint solver over candidate bitmasks:

* variable order: source elements in a fixed linear extension, ties
  broken by id, so every later variable is above or incomparable to all
  earlier ones;
* value order: target elements in id order, which makes the returned
  witness the lexicographically first one under that variable order;
* propagation: forward checking against the target's up-set masks, with
  optional full arc consistency behind ``arc_consistency=True``.

Sources are split into connected components, solved independently, and
component decisions are memoized under a canonical form so repeated
copies (disjoint unions, encoded graphs) are only solved once.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Union

from .errors import BudgetExceeded, UnknownElement
from .poset import LabeledPoset, _bits, connected_components, induced_subposet

DEFAULT_ENUMERATION_BUDGET = 10**8

_CACHE_LIMIT = 100_000
_hom_cache: dict = {}


def clear_cache() -> None:
    """Drop all memoized component decisions."""
    _hom_cache.clear()


@dataclass(frozen=True)
class Homomorphism:
    """A total element map witnessing label and order preservation."""

    mapping: Mapping[str, str]

    def __getitem__(self, x: str) -> str:
        return self.mapping[x]

    @property
    def image(self) -> frozenset[str]:
        return frozenset(self.mapping.values())

    def then(self, after: "Homomorphism") -> "Homomorphism":
        """Composition: apply ``self`` first, then ``after``."""
        return Homomorphism({x: after.mapping[y] for x, y in self.mapping.items()})


class Relation(Enum):
    STRICTLY_LESS = "strictly-less"
    STRICTLY_GREATER = "strictly-greater"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class CompareVerdict:
    relation: Relation
    forward: Optional[Homomorphism]
    backward: Optional[Homomorphism]


@dataclass(frozen=True)
class CoreResult:
    core: LabeledPoset
    retractions: tuple[Homomorphism, ...]


def verify_homomorphism(src: LabeledPoset, dst: LabeledPoset,
                        h: Union[Homomorphism, Mapping[str, str]]) -> bool:
    """Check that ``h`` is a label- and order-preserving total map.

    Raises :class:`UnknownElement` if ``h`` is not keyed exactly by the
    source elements or maps outside the target.
    """
    mapping = h.mapping if isinstance(h, Homomorphism) else h
    if set(mapping) != set(src.elements):
        missing = set(src.elements) - set(mapping)
        extra = set(mapping) - set(src.elements)
        what = f"missing {sorted(missing)}" if missing else f"extraneous {sorted(extra)}"
        raise UnknownElement(f"map is not total on the source elements: {what}")
    img = [dst.index(mapping[x]) for x in src.elements]
    for i, x in enumerate(src.elements):
        if src._labels[i] != dst._labels[img[i]]:
            return False
    dst_upr = dst._up_refl  # reflexive, so collapsing a pair is fine
    for i, j in src._strict_pairs:
        if not dst_upr[img[i]] >> img[j] & 1:
            return False
    return True


def find_homomorphism(src: LabeledPoset, dst: LabeledPoset, *,
                      arc_consistency: bool = False,
                      use_cache: bool = True) -> Optional[Homomorphism]:
    """Search for a homomorphism from ``src`` to ``dst``.

    Returns the lexicographically first witness under the fixed element
    ordering, or ``None``.  Labels are compared as plain integers, so a
    k mismatch between the two posets is not an error.
    """
    if src.n == 0:
        return Homomorphism({})
    if dst.n == 0:
        return None
    mapping: dict[str, str] = {}
    for comp_mask in src._component_masks:
        part = _component_hom(src, comp_mask, dst, arc_consistency, use_cache)
        if part is None:
            return None
        mapping.update(part)
    return Homomorphism(mapping)


def _component_hom(src, comp_mask, dst, ac, use_cache):
    variables = [i for i in src._linear_extension if comp_mask >> i & 1]
    labels = tuple(src._labels[i] for i in variables)
    pos = {v: t for t, v in enumerate(variables)}
    rel = tuple(sorted(
        (pos[i], pos[j]) for i, j in src._strict_pairs if comp_mask >> i & 1
    ))
    key = None
    if use_cache:
        key = (labels, rel, dst._fingerprint)
        hit = _hom_cache.get(key)
        if hit is not None:
            found = hit[0]
        else:
            found = _solve(labels, rel, dst, ac)
            if len(_hom_cache) >= _CACHE_LIMIT:
                _hom_cache.clear()
            _hom_cache[key] = (found,)
    else:
        found = _solve(labels, rel, dst, ac)
    if found is None:
        return None
    return {src.elements[v]: dst.elements[found[t]] for t, v in enumerate(variables)}


def _solve(labels, rel, dst, ac):
    """First satisfying assignment of target indices, or None.

    ``labels[t]`` is the required label of variable t and ``rel`` holds
    position pairs (s, t) with s < t both positionally and in the source
    order, which is what the linear extension guarantees.
    """
    m = len(labels)
    by_label: dict[int, int] = {}
    for j in range(dst.n):
        by_label[dst._labels[j]] = by_label.get(dst._labels[j], 0) | 1 << j
    cand = [by_label.get(l, 0) for l in labels]
    if not all(cand):
        return None
    above = [[] for _ in range(m)]
    arcs = []
    for s, t in rel:
        above[s].append(t)
        arcs.append((s, t))
    upr, dnr = dst._up_refl, dst._down_refl

    if ac and not _ac3(cand, arcs, upr, dnr):
        return None

    # chronological backtracking; depth == variable position
    vals = [0] * m
    rem = [cand[0]]
    states = [cand]
    while True:
        d = len(rem) - 1
        if rem[d] == 0:
            if d == 0:
                return None
            rem.pop()
            states.pop()
            continue
        b = rem[d] & -rem[d]
        rem[d] ^= b
        u = b.bit_length() - 1
        nxt = states[d].copy()
        nxt[d] = b
        ok = True
        for t in above[d]:
            if t > d:
                nxt[t] &= upr[u]
                if nxt[t] == 0:
                    ok = False
                    break
        if ok and ac:
            ok = _ac3(nxt, arcs, upr, dnr)
        if not ok:
            continue
        vals[d] = u
        if d + 1 == m:
            return tuple(vals)
        states.append(nxt)
        rem.append(nxt[d + 1])


def _ac3(cand, arcs, upr, dnr) -> bool:
    """Prune values without support along order constraints; False on wipeout."""
    fwd: dict[int, list[int]] = {}
    bwd: dict[int, list[int]] = {}
    for s, t in arcs:
        fwd.setdefault(s, []).append(t)
        bwd.setdefault(t, []).append(s)
    queue = deque()
    for s, t in arcs:
        queue.append((s, t, True))   # revise s against t: need some value above
        queue.append((t, s, False))  # revise t against s: need some value below
    while queue:
        x, y, want_above = queue.popleft()
        other = cand[y]
        kept = 0
        m = cand[x]
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            support = other & (upr[v] if want_above else dnr[v])
            if support:
                kept |= b
        if kept != cand[x]:
            if kept == 0:
                return False
            cand[x] = kept
            for t in fwd.get(x, ()):
                if t != y:
                    queue.append((t, x, False))
            for s in bwd.get(x, ()):
                if s != y:
                    queue.append((s, x, True))
    return True


def brute_force_homomorphism(src: LabeledPoset, dst: LabeledPoset, *,
                             budget: int = DEFAULT_ENUMERATION_BUDGET
                             ) -> Optional[Homomorphism]:
    """Oracle search: try every total map in lexicographic order.

    Enumerates all ``|dst| ** |src|`` maps over the sorted element lists
    and returns the first one that verifies.  Raises
    :class:`BudgetExceeded` when the enumeration would be larger than
    ``budget``.  Deliberately has no pruning; it exists to check the
    backtracking solver against.
    """
    n, m = src.n, dst.n
    total = m**n
    if total > budget:
        raise BudgetExceeded(f"{m}**{n} = {total} maps exceed budget {budget}")
    if n == 0:
        return Homomorphism({})
    src_labels = src._labels
    dst_labels = dst._labels
    pairs = src._strict_pairs
    upr = dst._up_refl
    rng = range(n)
    for combo in itertools.product(range(m), repeat=n):
        if any(src_labels[i] != dst_labels[combo[i]] for i in rng):
            continue
        if any(
            combo[i] != combo[j] and not upr[combo[i]] >> combo[j] & 1
            for i, j in pairs
        ):
            continue
        h = Homomorphism({src.elements[i]: dst.elements[combo[i]] for i in rng})
        assert verify_homomorphism(src, dst, h)
        return h
    return None


def find_nonsurjective_endomorphism(p: LabeledPoset, *,
                                    arc_consistency: bool = False
                                    ) -> Optional[Homomorphism]:
    """First endomorphism of ``p`` that misses at least one element.

    Tries to exclude each element from the image in id order; a map of
    ``p`` into the subposet induced on the remaining elements is exactly
    such an endomorphism.  ``None`` means ``p`` is a core.  The empty
    poset is a core.
    """
    universe = set(p.elements)
    for x in p.elements:
        target = induced_subposet(p, universe - {x})
        h = find_homomorphism(p, target, arc_consistency=arc_consistency)
        if h is not None:
            return h
    return None


def compute_core(p: LabeledPoset, *, arc_consistency: bool = False) -> CoreResult:
    """Shrink ``p`` to its core by repeated nonsurjective retraction.

    Each round finds a nonsurjective endomorphism and restricts to the
    subposet induced on its image.  The returned retractions compose in
    sequence from the original poset down to the core, which is unique
    up to isomorphism and admits no nonsurjective endomorphism.
    """
    current = p
    retractions: list[Homomorphism] = []
    while True:
        h = find_nonsurjective_endomorphism(current, arc_consistency=arc_consistency)
        if h is None:
            return CoreResult(current, tuple(retractions))
        retractions.append(h)
        current = induced_subposet(current, h.image)


def compare(p: LabeledPoset, q: LabeledPoset, *,
            arc_consistency: bool = False) -> CompareVerdict:
    """Place ``p`` and ``q`` in the homomorphism quasiorder."""
    fwd = find_homomorphism(p, q, arc_consistency=arc_consistency)
    bwd = find_homomorphism(q, p, arc_consistency=arc_consistency)
    if fwd is not None and bwd is not None:
        relation = Relation.EQUIVALENT
    elif fwd is not None:
        relation = Relation.STRICTLY_LESS
    elif bwd is not None:
        relation = Relation.STRICTLY_GREATER
    else:
        relation = Relation.INCOMPARABLE
    return CompareVerdict(relation, fwd, bwd)


def _refined_colors(p: LabeledPoset, q: LabeledPoset) -> Optional[tuple[list[int], list[int]]]:
    """Joint iterative refinement of element colors on both posets.

    Colors start from (label, cover degrees) and are refined by the
    multisets of colors strictly above and below, until stable.  Returns
    None early if the color multisets ever disagree.
    """
    def initial(r: LabeledPoset) -> list[tuple]:
        cover_up = [0] * r.n
        cover_dn = [0] * r.n
        for x, y in r.covers:
            cover_up[r.index(x)] += 1
            cover_dn[r.index(y)] += 1
        return [(r._labels[i], cover_up[i], cover_dn[i]) for i in range(r.n)]

    canon: dict = {}
    pc = [canon.setdefault(key, len(canon)) for key in initial(p)]
    qc = [canon.setdefault(key, len(canon)) for key in initial(q)]
    while True:
        if sorted(pc) != sorted(qc):
            return None

        def step(r: LabeledPoset, colors: list[int], table: dict) -> list[int]:
            out = []
            for i in range(r.n):
                key = (
                    colors[i],
                    tuple(sorted(colors[j] for j in _bits(r._up[i]))),
                    tuple(sorted(colors[j] for j in _bits(r._down[i]))),
                )
                out.append(table.setdefault(key, len(table)))
            return out

        table: dict = {}
        np_, nq = step(p, pc, table), step(q, qc, table)
        if np_ == pc and nq == qc:
            return pc, qc
        pc, qc = np_, nq


def is_isomorphic(p: LabeledPoset, q: LabeledPoset) -> Optional[Homomorphism]:
    """Label-preserving order isomorphism between ``p`` and ``q``, or None.

    Declared k values are ignored; only the label values matter.  Element
    colors are refined jointly before a forward-checked matching search,
    and both the refinement and the search are deterministic, so equal
    inputs always yield the same bijection.
    """
    if p.n != q.n:
        return None
    n = p.n
    if n == 0:
        return Homomorphism({})

    colors = _refined_colors(p, q)
    if colors is None:
        return None
    pc, qc = colors
    by_color: dict[int, int] = {}
    for j, c in enumerate(qc):
        by_color[c] = by_color.get(c, 0) | 1 << j
    domains = [by_color.get(c, 0) for c in pc]
    if not all(domains):
        return None

    pup, pdn = p._up, p._down
    qup, qdn = q._up, q._down
    full = (1 << n) - 1
    assign = [-1] * n

    def solve(doms: list[int], remaining: list[int]) -> bool:
        if not remaining:
            return True
        i = min(remaining, key=lambda e: (doms[e].bit_count(), e))
        rest = [e for e in remaining if e != i]
        m = doms[i]
        while m:
            b = m & -m
            j = b.bit_length() - 1
            m ^= b
            nxt = list(doms)
            ok = True
            for e in rest:
                if pup[i] >> e & 1:
                    d = nxt[e] & qup[j]
                elif pdn[i] >> e & 1:
                    d = nxt[e] & qdn[j]
                else:
                    d = nxt[e] & full & ~(qup[j] | qdn[j] | b)
                if not d:
                    ok = False
                    break
                nxt[e] = d
            if ok:
                assign[i] = j
                if solve(nxt, rest):
                    return True
                assign[i] = -1
        return False

    if not solve(domains, list(range(n))):
        return None
    return Homomorphism({p.elements[i]: q.elements[assign[i]] for i in range(n)})
