"""Finite labeled posets and their homomorphism order.

The pieces: validated poset construction and structure reports, a
deterministic homomorphism searcher with core computation, encodings of
digraphs as 2- and 3-posets that carry homomorphisms back and forth,
the disjoint-union join / label-matching-product meet with their laws,
the glued join on bounded posets, and the alternating-chain shortcut
for {0,1}-labeled lattices.  JSON and DOT round-tripping plus a CLI
live in :mod:`kposet.io` and :mod:`kposet.cli`.
"""

from .algebra import (
    DEFAULT_PRODUCT_BUDGET,
    LatticeLawReport,
    LawCheck,
    check_glue_distributivity,
    check_lattice_laws,
    disjoint_union,
    glue_join,
    glue_join_all,
    is_join_irreducible,
    label_matching_product,
)
from .chains import alternation_number, two_lattice_core, two_lattice_decide
from .digraph import (
    Digraph,
    build_digraph,
    encode_lattice,
    encode_poset,
    graph_core,
    graph_find_homomorphism,
    graph_is_core,
    graph_nonsurjective_endomorphism,
    induced_subgraph,
)
from .errors import (
    BudgetExceeded,
    CycleDetected,
    DuplicateId,
    KPosetError,
    LabelOutOfRange,
    NotBounded,
    NotTwoLattice,
    ParseError,
    SizeBudgetExceeded,
    UnknownElement,
    WrongExtremeLabel,
)
from .hom import (
    DEFAULT_ENUMERATION_BUDGET,
    CompareVerdict,
    CoreResult,
    Homomorphism,
    Relation,
    brute_force_homomorphism,
    compare,
    compute_core,
    find_homomorphism,
    find_nonsurjective_endomorphism,
    is_isomorphic,
    verify_homomorphism,
)
from .io import (
    export_dot,
    load_structure,
    parse_digraph,
    parse_poset,
    serialize_digraph,
    serialize_poset,
)
from .poset import (
    Bounds,
    LabeledPoset,
    StructureReport,
    build_poset,
    connected_components,
    induced_subposet,
    structure_report,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Bounds",
    "CompareVerdict",
    "CoreResult",
    "CycleDetected",
    "DEFAULT_ENUMERATION_BUDGET",
    "DEFAULT_PRODUCT_BUDGET",
    "Digraph",
    "DuplicateId",
    "Homomorphism",
    "KPosetError",
    "LabelOutOfRange",
    "LabeledPoset",
    "LatticeLawReport",
    "LawCheck",
    "NotBounded",
    "NotTwoLattice",
    "ParseError",
    "Relation",
    "SizeBudgetExceeded",
    "StructureReport",
    "UnknownElement",
    "WrongExtremeLabel",
    "alternation_number",
    "brute_force_homomorphism",
    "build_digraph",
    "build_poset",
    "check_glue_distributivity",
    "check_lattice_laws",
    "compare",
    "compute_core",
    "connected_components",
    "disjoint_union",
    "encode_lattice",
    "encode_poset",
    "export_dot",
    "find_homomorphism",
    "find_nonsurjective_endomorphism",
    "glue_join",
    "glue_join_all",
    "graph_core",
    "graph_find_homomorphism",
    "graph_is_core",
    "graph_nonsurjective_endomorphism",
    "induced_subgraph",
    "induced_subposet",
    "is_isomorphic",
    "is_join_irreducible",
    "label_matching_product",
    "load_structure",
    "parse_digraph",
    "parse_poset",
    "serialize_digraph",
    "serialize_poset",
    "structure_report",
    "two_lattice_core",
    "two_lattice_decide",
    "verify_homomorphism",
]
