"""Join, meet and glued join of labeled posets, plus the laws they obey.

Up to homomorphic equivalence the disjoint union is the least upper
bound and the label-matching product the greatest lower bound, making
the equivalence classes a distributive lattice.  On bounded posets with
fixed extreme labels there is a second join, the glued join: drop both
pairs of bounds, put the interiors side by side, and close with a fresh
top and bottom.  The product distributes over it as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import NotBounded, SizeBudgetExceeded, WrongExtremeLabel
from .hom import Homomorphism, Relation, compare, compute_core, find_homomorphism
from .poset import LabeledPoset, build_poset, induced_subposet

DEFAULT_PRODUCT_BUDGET = 10**6


def disjoint_union(family: Sequence[LabeledPoset]) -> LabeledPoset:
    """Side-by-side copies, element ids prefixed with the copy index.

    The result is the join in the homomorphism order: anything above
    every member is above the union.  Members may declare different k;
    the union takes the largest.
    """
    family = list(family)
    if not family:
        raise ValueError("disjoint_union needs a nonempty family")
    k = max(p.k for p in family)
    elements = []
    pairs = []
    for i, p in enumerate(family):
        for x in p.elements:
            elements.append((f"{i}/{x}", p.label[x]))
        pairs.extend((f"{i}/{x}", f"{i}/{y}") for x, y in p.covers)
    return build_poset(k, elements, pairs)


def label_matching_product(family: Sequence[LabeledPoset], *,
                           budget: int = DEFAULT_PRODUCT_BUDGET) -> LabeledPoset:
    """Componentwise order on tuples whose member labels all agree.

    This is the meet in the homomorphism order.  The element count is
    checked against ``budget`` before anything is materialized and
    :class:`SizeBudgetExceeded` is raised above it.
    """
    family = list(family)
    if not family:
        raise ValueError("label_matching_product needs a nonempty family")
    k = max(p.k for p in family)
    groups = []
    for p in family:
        g: dict[int, list[str]] = {}
        for x in p.elements:
            g.setdefault(p.label[x], []).append(x)
        groups.append(g)

    size = 0
    for l in range(k):
        count = 1
        for g in groups:
            count *= len(g.get(l, ()))
        size += count
    if size > budget:
        raise SizeBudgetExceeded(f"product would have {size} elements, budget {budget}")

    tuples: list[tuple[int, tuple[str, ...]]] = []
    for l in range(k):
        parts = [g.get(l, []) for g in groups]
        if all(parts):
            tuples.extend((l, t) for t in itertools.product(*parts))

    def tid(t: tuple[str, ...]) -> str:
        return "(" + ",".join(t) + ")"

    elements = [(tid(t), l) for l, t in tuples]
    pairs = []
    for li, ti in tuples:
        for lj, tj in tuples:
            if ti != tj and all(p.le(a, b) for p, a, b in zip(family, ti, tj)):
                pairs.append((tid(ti), tid(tj)))
    return build_poset(k, elements, pairs)


def _require_bounded(p: LabeledPoset, top_label: int, bottom_label: int) -> tuple[str, str]:
    """Top and bottom ids of ``p``, enforcing the expected extreme labels."""
    maxima = [i for i in range(p.n) if p._up[i] == 0]
    minima = [i for i in range(p.n) if p._down[i] == 0]
    if p.n == 0 or len(maxima) != 1 or len(minima) != 1:
        raise NotBounded(
            f"need a unique top and bottom, found {len(maxima)} maximal "
            f"and {len(minima)} minimal elements"
        )
    top, bot = p.elements[maxima[0]], p.elements[minima[0]]
    if p.label[top] != top_label:
        raise WrongExtremeLabel(f"top {top!r} has label {p.label[top]}, expected {top_label}")
    if p.label[bot] != bottom_label:
        raise WrongExtremeLabel(f"bottom {bot!r} has label {p.label[bot]}, expected {bottom_label}")
    return top, bot


def glue_join(p: LabeledPoset, q: LabeledPoset, top_label: int,
              bottom_label: int) -> LabeledPoset:
    """Join of two bounded posets that stays bounded.

    Both inputs must have a unique top labeled ``top_label`` and a
    unique bottom labeled ``bottom_label`` (:class:`NotBounded` or
    :class:`WrongExtremeLabel` otherwise).  Their interiors are placed
    side by side between a fresh top and bottom carrying those same
    labels.  Within bounded posets of this shape the result is the
    least upper bound up to equivalence.
    """
    interiors = []
    for s in (p, q):
        top, bot = _require_bounded(s, top_label, bottom_label)
        interiors.append(induced_subposet(s, set(s.elements) - {top, bot}))
    inner = disjoint_union(interiors)
    k = max(p.k, q.k)
    elements = [(x, inner.label[x]) for x in inner.elements]
    elements += [("top", top_label), ("bot", bottom_label)]
    pairs = list(inner.covers)
    pairs += [("bot", x) for x in inner.elements]
    pairs += [(x, "top") for x in inner.elements]
    pairs.append(("bot", "top"))
    return build_poset(k, elements, pairs)


def glue_join_all(family: Sequence[LabeledPoset], top_label: int,
                  bottom_label: int) -> LabeledPoset:
    """Left fold of :func:`glue_join`; associative up to isomorphism."""
    family = list(family)
    if not family:
        raise ValueError("glue_join_all needs a nonempty family")
    out = family[0]
    _require_bounded(out, top_label, bottom_label)
    for nxt in family[1:]:
        out = glue_join(out, nxt, top_label, bottom_label)
    return out


def is_join_irreducible(p: LabeledPoset) -> bool:
    """True when the core of ``p`` has at most one connected component.

    Such posets cannot be split as a join of two strictly smaller ones;
    the empty poset (the bottom of the order) counts as irreducible.
    """
    core = compute_core(p).core
    return len(core._component_masks) <= 1


@dataclass(frozen=True)
class LawCheck:
    law: str
    passed: bool
    vacuous: bool = False
    witnesses: Mapping[str, Optional[Homomorphism]] = field(default_factory=dict)


@dataclass(frozen=True)
class LatticeLawReport:
    checks: tuple[LawCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> tuple[LawCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def check_lattice_laws(p: LabeledPoset, q: LabeledPoset, r: LabeledPoset, *,
                       budget: int = DEFAULT_PRODUCT_BUDGET,
                       arc_consistency: bool = False) -> LatticeLawReport:
    """Verify the join/meet laws on a concrete triple, with witnesses.

    Checks that the product is a lower bound and the union an upper
    bound, the two universal properties relative to ``r``, and both
    distributive laws up to equivalence.  Product sizes are capped by
    ``budget``.
    """
    ac = arc_consistency
    checks = []

    def hom(a, b):
        return find_homomorphism(a, b, arc_consistency=ac)

    meet_pq = label_matching_product([p, q], budget=budget)
    join_pq = disjoint_union([p, q])

    for name, a, b in (
        ("meet-below-left", meet_pq, p),
        ("meet-below-right", meet_pq, q),
        ("join-above-left", p, join_pq),
        ("join-above-right", q, join_pq),
    ):
        w = hom(a, b)
        checks.append(LawCheck(name, w is not None, witnesses={"witness": w}))

    rp, rq = hom(r, p), hom(r, q)
    if rp is not None and rq is not None:
        w = hom(r, meet_pq)
        checks.append(LawCheck("meet-universal", w is not None,
                               witnesses={"witness": w}))
    else:
        checks.append(LawCheck("meet-universal", True, vacuous=True))

    pr, qr = hom(p, r), hom(q, r)
    if pr is not None and qr is not None:
        w = hom(join_pq, r)
        checks.append(LawCheck("join-universal", w is not None,
                               witnesses={"witness": w}))
    else:
        checks.append(LawCheck("join-universal", True, vacuous=True))

    lhs = label_matching_product([p, disjoint_union([q, r])], budget=budget)
    rhs = disjoint_union([
        label_matching_product([p, q], budget=budget),
        label_matching_product([p, r], budget=budget),
    ])
    fwd, bwd = hom(lhs, rhs), hom(rhs, lhs)
    checks.append(LawCheck("meet-over-join", fwd is not None and bwd is not None,
                           witnesses={"forward": fwd, "backward": bwd}))

    lhs = disjoint_union([p, label_matching_product([q, r], budget=budget)])
    rhs = label_matching_product([
        disjoint_union([p, q]), disjoint_union([p, r]),
    ], budget=budget)
    fwd, bwd = hom(lhs, rhs), hom(rhs, lhs)
    checks.append(LawCheck("join-over-meet", fwd is not None and bwd is not None,
                           witnesses={"forward": fwd, "backward": bwd}))

    return LatticeLawReport(tuple(checks))


def check_glue_distributivity(p1: LabeledPoset, p2: LabeledPoset, p3: LabeledPoset,
                              top_label: int, bottom_label: int, *,
                              budget: int = DEFAULT_PRODUCT_BUDGET,
                              arc_consistency: bool = False) -> bool:
    """Whether p1 (x) (p2 glue p3) is equivalent to (p1 (x) p2) glue (p1 (x) p3).

    All three posets must be bounded with the given extreme labels.
    Products of such posets are bounded with the same extreme labels
    again (their top is the pair of tops); that is re-checked here
    before gluing.
    """
    for s in (p1, p2, p3):
        _require_bounded(s, top_label, bottom_label)
    lhs = label_matching_product([p1, glue_join(p2, p3, top_label, bottom_label)],
                                 budget=budget)
    m2 = label_matching_product([p1, p2], budget=budget)
    m3 = label_matching_product([p1, p3], budget=budget)
    for prod in (lhs, m2, m3):
        _require_bounded(prod, top_label, bottom_label)
    rhs = glue_join(m2, m3, top_label, bottom_label)
    verdict = compare(lhs, rhs, arc_consistency=arc_consistency)
    return verdict.relation is Relation.EQUIVALENT
