"""Canonical JSON round-tripping and DOT export.

Poset files look like

    {"k": 2,
     "elements": [{"id": "a", "label": 0}, ...],
     "covers": [["a", "b"], ...]}

and digraph files like

    {"vertices": ["u", "v"], "edges": [["u", "v"], ...]}

Serialization sorts elements and relation pairs, so serializing after
parsing canonicalizes a file and parsing after serializing gives back
an equal structure.
"""

from __future__ import annotations

import json
from typing import Union

from .digraph import Digraph, build_digraph
from .errors import ParseError
from .poset import LabeledPoset, build_poset


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from None
    if not isinstance(data, dict):
        raise ParseError(f"expected a JSON object at top level, got {type(data).__name__}")
    return data


def _field(data: dict, name: str, kind: type, where: str = ""):
    at = f"{where}{name}"
    if name not in data:
        raise ParseError(f"missing field {at!r}")
    value = data[name]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"field {at!r}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def _pair_list(raw, what: str) -> list[tuple[str, str]]:
    out = []
    for i, item in enumerate(raw):
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(s, str) for s in item)):
            raise ParseError(f"field '{what}[{i}]': expected a pair of strings")
        out.append((item[0], item[1]))
    return out


def parse_poset(text: str) -> LabeledPoset:
    """Build a poset from its JSON form; structural errors pass through."""
    data = _load_json(text)
    k = _field(data, "k", int)
    raw_elements = _field(data, "elements", list)
    raw_covers = _field(data, "covers", list)
    labeled = []
    for i, item in enumerate(raw_elements):
        if not isinstance(item, dict):
            raise ParseError(f"field 'elements[{i}]': expected an object")
        eid = _field(item, "id", str, where=f"elements[{i}].")
        label = _field(item, "label", int, where=f"elements[{i}].")
        labeled.append((eid, label))
    return build_poset(k, labeled, _pair_list(raw_covers, "covers"))


def serialize_poset(p: LabeledPoset) -> str:
    payload = {
        "k": p.k,
        "elements": [{"id": x, "label": p.label[x]} for x in p.elements],
        "covers": [list(c) for c in sorted(p.covers)],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def parse_digraph(text: str) -> Digraph:
    data = _load_json(text)
    raw_vertices = _field(data, "vertices", list)
    for i, v in enumerate(raw_vertices):
        if not isinstance(v, str):
            raise ParseError(f"field 'vertices[{i}]': expected a string")
    raw_edges = _field(data, "edges", list)
    return build_digraph(raw_vertices, _pair_list(raw_edges, "edges"))


def serialize_digraph(g: Digraph) -> str:
    payload = {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in sorted(g.edges)],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def load_structure(text: str) -> Union[LabeledPoset, Digraph]:
    """Parse either kind of file, telling them apart by their fields."""
    data = _load_json(text)
    if "elements" in data:
        return parse_poset(text)
    if "vertices" in data:
        return parse_digraph(text)
    raise ParseError("object has neither 'elements' nor 'vertices'")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(obj: Union[LabeledPoset, Digraph], kind: str | None = None) -> str:
    """Deterministic DOT text: order diagram of a poset or arrows of a digraph.

    ``kind`` is "hasse" for posets and "digraph" for digraphs; it
    defaults to whichever matches the object and rejects a mismatch.
    Poset nodes are captioned "id:label" and each cover pair becomes one
    undirected edge drawn bottom to top.
    """
    if isinstance(obj, LabeledPoset):
        if kind not in (None, "hasse"):
            raise ValueError(f"kind {kind!r} does not fit a poset")
        lines = ["graph {", "  rankdir=BT;"]
        for x in obj.elements:
            lines.append(f"  {_quote(x)} [label={_quote(f'{x}:{obj.label[x]}')}];")
        for a, b in sorted(obj.covers):
            lines.append(f"  {_quote(a)} -- {_quote(b)};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if isinstance(obj, Digraph):
        if kind not in (None, "digraph"):
            raise ValueError(f"kind {kind!r} does not fit a digraph")
        lines = ["digraph {"]
        for v in obj.vertices:
            lines.append(f"  {_quote(v)};")
        for u, v in sorted(obj.edges):
            lines.append(f"  {_quote(u)} -> {_quote(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot export {type(obj).__name__} as DOT")
