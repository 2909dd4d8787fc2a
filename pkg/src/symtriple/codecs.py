"""Canonical JSON records for graphs, groups, triples, designs and reports.

Keys are sorted, separators are compact and every array is 0-indexed, so
equal objects always serialize to identical text.
"""
from __future__ import annotations

import json
from pathlib import Path

from .designs import IncidenceStructure
from .errors import MalformedInput, SchemaError
from .graphs import Graph
from .permgroup import GeneratedGroup, Permutation
from .quotient import SymmetricTriple


def dumps(record) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None


def read_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror or exc}") from None
    return loads(text)


def _need(record, key, path):
    if not isinstance(record, dict):
        raise SchemaError(path, "expected an object")
    if key not in record:
        raise SchemaError(f"{path}.{key}" if path else key, "missing field")
    return record[key]


def _int(value, path, low=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    if low is not None and value < low:
        raise SchemaError(path, f"expected an integer >= {low}, got {value}")
    return value


def _int_list(value, path):
    if not isinstance(value, list):
        raise SchemaError(path, "expected an array")
    return [_int(x, f"{path}[{i}]") for i, x in enumerate(value)]


def _join(path, key):
    return f"{path}.{key}" if path else key


def encode_graph(g: Graph) -> dict:
    return {"edges": [list(e) for e in g.edges], "vertices": g.vertex_count}


def decode_graph(record, path="") -> Graph:
    n = _int(_need(record, "vertices", path), _join(path, "vertices"), low=1)
    edges = _need(record, "edges", path)
    if not isinstance(edges, list):
        raise SchemaError(_join(path, "edges"), "expected an array")
    out = []
    for i, e in enumerate(edges):
        ep = f"{_join(path, 'edges')}[{i}]"
        pair = _int_list(e, ep)
        if len(pair) != 2:
            raise SchemaError(ep, "an edge has exactly two endpoints")
        if pair[0] == pair[1] or not all(0 <= x < n for x in pair):
            raise SchemaError(ep, f"edge {pair} is a loop or leaves 0..{n - 1}")
        out.append(tuple(pair))
    try:
        return Graph(n, out)
    except MalformedInput as exc:
        raise SchemaError(_join(path, "edges"), str(exc)) from None


def encode_group(G: GeneratedGroup) -> dict:
    return {"degree": G.degree, "generators": [list(g.images) for g in G.generators]}


def decode_group(record, path="") -> GeneratedGroup:
    n = _int(_need(record, "degree", path), _join(path, "degree"), low=1)
    gens = _need(record, "generators", path)
    if not isinstance(gens, list):
        raise SchemaError(_join(path, "generators"), "expected an array")
    perms = []
    for i, g in enumerate(gens):
        gp = f"{_join(path, 'generators')}[{i}]"
        images = _int_list(g, gp)
        if sorted(images) != list(range(n)):
            raise SchemaError(gp, f"not a bijection of 0..{n - 1}")
        perms.append(Permutation(tuple(images)))
    return GeneratedGroup(n, perms)


def encode_triple(t: SymmetricTriple) -> dict:
    return {"graph": encode_graph(t.graph), "group": encode_group(t.group),
            "partition": [list(b) for b in t.partition]}


def decode_triple(record, path="") -> SymmetricTriple:
    g = decode_graph(_need(record, "graph", path), _join(path, "graph"))
    G = decode_group(_need(record, "group", path), _join(path, "group"))
    if G.degree != g.vertex_count:
        raise SchemaError(_join(path, "group.degree"), f"{G.degree} != graph vertices {g.vertex_count}")
    part = _need(record, "partition", path)
    pp = _join(path, "partition")
    if not isinstance(part, list):
        raise SchemaError(pp, "expected an array")
    seen = {}
    blocks = []
    for i, b in enumerate(part):
        block = _int_list(b, f"{pp}[{i}]")
        for x in block:
            if not 0 <= x < g.vertex_count:
                raise SchemaError(f"{pp}[{i}]", f"vertex {x} outside 0..{g.vertex_count - 1}")
            if x in seen:
                raise SchemaError(f"{pp}[{i}]", f"vertex {x} already lies in block {seen[x]}")
            seen[x] = i
        blocks.append(tuple(block))
    missing = sorted(set(range(g.vertex_count)) - set(seen))
    if missing:
        raise SchemaError(pp, f"vertices {missing} lie in no block")
    return SymmetricTriple(g, G, blocks)


def encode_design(d: IncidenceStructure) -> dict:
    return {"blocks": [list(b) for b in d.blocks], "points": d.point_count}


def decode_design(record, path="") -> IncidenceStructure:
    n = _int(_need(record, "points", path), _join(path, "points"), low=1)
    blocks = _need(record, "blocks", path)
    if not isinstance(blocks, list):
        raise SchemaError(_join(path, "blocks"), "expected an array")
    rows = []
    for i, b in enumerate(blocks):
        bp = f"{_join(path, 'blocks')}[{i}]"
        row = _int_list(b, bp)
        if len(set(row)) != len(row) or not all(0 <= x < n for x in row):
            raise SchemaError(bp, f"block {row} repeats a point or leaves 0..{n - 1}")
        rows.append(row)
    return IncidenceStructure(n, rows)


def record_kind(record) -> str:
    """triple | design | graph-with-group | graph, from the record's keys."""
    if not isinstance(record, dict):
        raise SchemaError("", "expected an object")
    if "partition" in record:
        return "triple"
    if "points" in record:
        return "design"
    if "graph" in record and "group" in record:
        return "graph-with-group"
    if "vertices" in record:
        return "graph"
    raise SchemaError("", f"unrecognised record with keys {sorted(record)}")
