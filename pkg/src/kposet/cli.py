"""Command line front end.

Every subcommand reads structures from JSON files ("-" for stdin).
Decision commands print yes or no and use the exit code for the answer:
0 for yes, 1 for no, 2 for any error.  Commands that build a structure
print it as canonical JSON, or as DOT with ``--format dot``.

The ``--budget`` flag (or the KPOSET_BUDGET environment variable) caps
product sizes and exhaustive enumerations; ``--seed`` fixes the random
generator for workflows that draw random structures.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, Sequence

from . import algebra, chains, digraph as dg, hom, io as kio
from .errors import KPosetError


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _poset(path: str):
    return kio.parse_poset(_read(path))


def _digraph(path: str):
    return kio.parse_digraph(_read(path))


def _budget(args) -> Optional[int]:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("KPOSET_BUDGET")
    return int(env) if env else None


def _emit_poset(p, args) -> None:
    if args.format == "dot":
        sys.stdout.write(kio.export_dot(p))
    else:
        sys.stdout.write(kio.serialize_poset(p))


def _decide(answer: bool) -> int:
    print("yes" if answer else "no")
    return 0 if answer else 1


def _cmd_validate(args) -> int:
    obj = kio.load_structure(_read(args.poset))
    if isinstance(obj, dg.Digraph):
        sys.stdout.write(kio.serialize_digraph(obj))
    else:
        sys.stdout.write(kio.serialize_poset(obj))
    return 0


def _cmd_hom(args) -> int:
    h = hom.find_homomorphism(_poset(args.src), _poset(args.dst))
    if h is not None and args.witness:
        print(json.dumps(dict(sorted(h.mapping.items())), indent=2))
        return 0
    return _decide(h is not None)


def _cmd_compare(args) -> int:
    verdict = hom.compare(_poset(args.p), _poset(args.q))
    print(verdict.relation.value)
    return 0


def _cmd_equiv(args) -> int:
    verdict = hom.compare(_poset(args.p), _poset(args.q))
    return _decide(verdict.relation is hom.Relation.EQUIVALENT)


def _cmd_core(args) -> int:
    result = hom.compute_core(_poset(args.poset))
    if args.trace:
        payload = {
            "core": json.loads(kio.serialize_poset(result.core)),
            "retractions": [dict(sorted(r.mapping.items())) for r in result.retractions],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit_poset(result.core, args)
    return 0


def _cmd_is_core(args) -> int:
    p = _poset(args.poset)
    return _decide(hom.find_nonsurjective_endomorphism(p) is None)


def _cmd_encode(args) -> int:
    g = _digraph(args.digraph)
    encoded = dg.encode_lattice(g) if args.lattice else dg.encode_poset(g)
    _emit_poset(encoded, args)
    return 0


def _cmd_meet(args) -> int:
    budget = _budget(args)
    kwargs = {"budget": budget} if budget else {}
    _emit_poset(algebra.label_matching_product([_poset(f) for f in args.posets], **kwargs), args)
    return 0


def _cmd_join(args) -> int:
    _emit_poset(algebra.disjoint_union([_poset(f) for f in args.posets]), args)
    return 0


def _cmd_glue(args) -> int:
    out = algebra.glue_join(_poset(args.p), _poset(args.q),
                            args.top_label, args.bottom_label)
    _emit_poset(out, args)
    return 0


def _cmd_alt(args) -> int:
    count, witness = chains.alternation_number(_poset(args.poset))
    print(json.dumps({"count": count, "witness": witness}))
    return 0


def _cmd_two_lattice(args) -> int:
    return _decide(chains.two_lattice_decide(_poset(args.l1), _poset(args.l2)))


def _cmd_irreducible(args) -> int:
    return _decide(algebra.is_join_irreducible(_poset(args.poset)))


def _cmd_dot(args) -> int:
    sys.stdout.write(kio.export_dot(kio.load_structure(_read(args.file))))
    return 0


def _cmd_check_laws(args) -> int:
    budget = _budget(args)
    kwargs = {"budget": budget} if budget else {}
    report = algebra.check_lattice_laws(
        _poset(args.p), _poset(args.q), _poset(args.r), **kwargs)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        note = " (vacuous)" if check.vacuous else ""
        print(f"{check.law}: {status}{note}")
    return 0 if report.all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="cap for product sizes and enumerations "
                             "(default from KPOSET_BUDGET)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized generators")
    common.add_argument("--format", choices=("json", "dot"), default="json",
                        help="output format for structure results")

    parser = argparse.ArgumentParser(
        prog="kposet",
        description="Labeled posets: homomorphisms, cores, encodings, lattice operations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", _cmd_validate, "parse a poset file and print its canonical form")
    sp.add_argument("poset")

    sp = add("hom", _cmd_hom, "decide whether a homomorphism src -> dst exists")
    sp.add_argument("src")
    sp.add_argument("dst")
    sp.add_argument("--witness", action="store_true", help="print a witness map")

    sp = add("compare", _cmd_compare, "relate two posets in the homomorphism order")
    sp.add_argument("p")
    sp.add_argument("q")

    sp = add("equiv", _cmd_equiv, "decide homomorphic equivalence")
    sp.add_argument("p")
    sp.add_argument("q")

    sp = add("core", _cmd_core, "compute the core")
    sp.add_argument("poset")
    sp.add_argument("--trace", action="store_true",
                    help="also print the retraction maps")

    sp = add("is-core", _cmd_is_core, "decide whether a poset is its own core")
    sp.add_argument("poset")

    sp = add("encode", _cmd_encode, "translate a digraph into a labeled poset")
    sp.add_argument("digraph")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--poset", action="store_true",
                       help="plain vertex/edge gadget encoding")
    group.add_argument("--lattice", action="store_true",
                       help="encoding completed with a top and bottom")

    sp = add("meet", _cmd_meet, "label-matching product of poset files")
    sp.add_argument("posets", nargs="+")

    sp = add("join", _cmd_join, "disjoint union of poset files")
    sp.add_argument("posets", nargs="+")

    sp = add("glue", _cmd_glue, "glued join of two bounded posets")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--top-label", type=int, required=True)
    sp.add_argument("--bottom-label", type=int, required=True)

    sp = add("alt", _cmd_alt, "longest alternating chain, with witness")
    sp.add_argument("poset")

    sp = add("two-lattice", _cmd_two_lattice,
             "decide the order between two {0,1}-labeled lattices numerically")
    sp.add_argument("l1")
    sp.add_argument("l2")

    sp = add("irreducible", _cmd_irreducible, "decide join-irreducibility")
    sp.add_argument("poset")

    sp = add("dot", _cmd_dot, "render a poset or digraph file as DOT")
    sp.add_argument("file")

    sp = add("check-laws", _cmd_check_laws, "verify the lattice laws on a triple")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("r")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.fn(args)
    except KPosetError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
