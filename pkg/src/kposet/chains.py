"""Alternating chains and the shortcut order on 2-labeled lattices.

An alternating chain is a chain in the closure whose consecutive labels
differ.  A homomorphism is injective and strictly monotone on such a
chain, so its length can only grow along homomorphisms.  For nonempty
lattices labeled over {0, 1} the maximum length together with the label
of the bottom decides the homomorphism order outright, with no search.
"""

from __future__ import annotations

from .errors import NotTwoLattice
from .poset import LabeledPoset, build_poset, structure_report


def alternation_number(p: LabeledPoset) -> tuple[int, list[str]]:
    """Length and witness of a longest alternating chain.

    Longest-path dynamic programming over the closure restricted to
    label-differing pairs, processed along a linear extension.  Among
    all maximum chains the witness is the lexicographically smallest id
    sequence.  The empty poset has alternation number 0.
    """
    n = p.n
    if n == 0:
        return 0, []
    labels = p._labels
    up = p._up
    # best[i]: longest alternating chain starting at i
    best = [1] * n
    for i in reversed(p._linear_extension):
        m = up[i]
        while m:
            b = m & -m
            j = b.bit_length() - 1
            m ^= b
            if labels[i] != labels[j] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    length = max(best)
    # indices are id-sorted, so the smallest qualifying index is the
    # lexicographically smallest id at every step
    cur = min(i for i in range(n) if best[i] == length)
    chain = [cur]
    need = length - 1
    while need:
        m = up[cur]
        nxt = -1
        while m:
            b = m & -m
            j = b.bit_length() - 1
            m ^= b
            if labels[j] != labels[cur] and best[j] == need:
                nxt = j
                break
        assert nxt >= 0, "DP table inconsistent"
        cur = nxt
        chain.append(cur)
        need -= 1
    return length, [p.elements[i] for i in chain]


def _check_two_lattice(l: LabeledPoset, role: str) -> int:
    """Validate and return the label of the bottom element."""
    if l.n == 0:
        raise NotTwoLattice(f"{role} is empty")
    if max(l._labels) > 1:
        raise NotTwoLattice(f"{role} carries labels outside {{0, 1}}")
    report = structure_report(l)
    if not report.is_lattice:
        raise NotTwoLattice(f"{role} is not a lattice")
    return report.bounds.bottom_label


def two_lattice_decide(l1: LabeledPoset, l2: LabeledPoset) -> bool:
    """Homomorphism order on {0,1}-labeled lattices, decided numerically.

    ``l1`` maps into ``l2`` exactly when its alternation number is
    smaller, or the numbers agree and so do the bottom labels.  Both
    inputs must be nonempty lattices with labels in {0, 1}
    (:class:`NotTwoLattice` otherwise); the declared k may be larger.
    """
    b1 = _check_two_lattice(l1, "first argument")
    b2 = _check_two_lattice(l2, "second argument")
    a1, _ = alternation_number(l1)
    a2, _ = alternation_number(l2)
    return a1 < a2 or (a1 == a2 and b1 == b2)


def two_lattice_core(l: LabeledPoset) -> LabeledPoset:
    """The alternating chain equivalent to ``l``.

    A {0,1}-labeled lattice is equivalent to the chain that alternates
    labels starting from its bottom label, with one element per step of
    a longest alternating chain.  That chain is returned with elements
    ``c0 < c1 < ...``.
    """
    bottom = _check_two_lattice(l, "argument")
    length, _ = alternation_number(l)
    labels = [(bottom + i) % 2 for i in range(length)]
    elements = [(f"c{i}", labels[i]) for i in range(length)]
    covers = [(f"c{i}", f"c{i + 1}") for i in range(length - 1)]
    return build_poset(l.k, elements, covers)
