import json

import pytest
from hypothesis import given, settings, strategies as st

from symtriple import catalog
from symtriple.codecs import (decode_design, decode_graph, decode_group, decode_triple, dumps, encode_design,
                              encode_graph, encode_group, encode_triple, loads, read_json, record_kind)
from symtriple.errors import MalformedInput, SchemaError


def test_triple_round_trip(triples):
    for key, t in triples.items():
        text = dumps(encode_triple(t))
        back = decode_triple(loads(text))
        assert dumps(encode_triple(back)) == text, key
        assert back.partition == t.partition and back.graph == t.graph


@pytest.mark.parametrize("key", ["fano", "affine-3-1", "affine-3-2"])
def test_design_round_trip(key):
    d = catalog.build(key).design
    text = dumps(encode_design(d))
    assert dumps(encode_design(decode_design(loads(text)))) == text


@pytest.mark.parametrize("key", ["k4", "k5", "c6"])
def test_graph_and_group_round_trip(key):
    obj = catalog.build(key)
    g, G = encode_graph(obj.graph), encode_group(obj.group)
    assert encode_graph(decode_graph(g)) == g
    assert encode_group(decode_group(G)) == G


def test_keys_sorted_and_compact(triples):
    text = dumps(encode_triple(triples["arc-pair-k5"]))
    assert " " not in text
    assert list(json.loads(text)) == ["graph", "group", "partition"]


def test_deterministic(triples):
    assert dumps(encode_triple(triples["gamma2-k5"])) == dumps(encode_triple(catalog.build("gamma2-k5")))


def _triple_record():
    return {"graph": {"vertices": 4, "edges": [[0, 1], [2, 3]]},
            "group": {"degree": 4, "generators": [[1, 0, 3, 2]]},
            "partition": [[0, 2], [1, 3]]}


def test_overlapping_partition_names_vertex():
    rec = _triple_record()
    rec["partition"] = [[0, 2], [2, 1, 3]]
    with pytest.raises(SchemaError, match=r"partition\[1\].*vertex 2 already lies in block 0"):
        decode_triple(rec)


def test_uncovered_vertex():
    rec = _triple_record()
    rec["partition"] = [[0, 2], [1]]
    with pytest.raises(SchemaError, match=r"\[3\] lie in no block"):
        decode_triple(rec)


def test_non_bijective_generator():
    rec = _triple_record()
    rec["group"]["generators"] = [[1, 1, 3, 2]]
    with pytest.raises(SchemaError, match=r"group\.generators\[0\]: not a bijection"):
        decode_triple(rec)


@pytest.mark.parametrize("mutate, where", [
    (lambda r: r["graph"].pop("edges"), "graph.edges"),
    (lambda r: r["graph"].__setitem__("vertices", "4"), "graph.vertices"),
    (lambda r: r["graph"]["edges"].append([0, 0]), "graph.edges[2]"),
    (lambda r: r["graph"]["edges"].append([0, 9]), "graph.edges[2]"),
    (lambda r: r.__setitem__("group", {"degree": 5, "generators": [[1, 0, 3, 2, 4]]}), "group.degree"),
    (lambda r: r.pop("partition"), "partition"),
])
def test_schema_errors_carry_paths(mutate, where):
    rec = _triple_record()
    mutate(rec)
    with pytest.raises(SchemaError) as info:
        decode_triple(rec)
    assert where in str(info.value)


def test_schema_error_is_malformed_input():
    assert issubclass(SchemaError, MalformedInput)


def test_bad_design_block():
    with pytest.raises(SchemaError, match=r"blocks\[0\]"):
        decode_design({"points": 3, "blocks": [[0, 0, 1]]})


def test_loads_and_read_json(tmp_path):
    with pytest.raises(MalformedInput):
        loads("{not json")
    with pytest.raises(MalformedInput):
        read_json(tmp_path / "absent.json")
    p = tmp_path / "t.json"
    p.write_text(dumps(_triple_record()))
    assert record_kind(read_json(p)) == "triple"


@pytest.mark.parametrize("record, kind", [
    ({"partition": []}, "triple"),
    ({"points": 3, "blocks": []}, "design"),
    ({"graph": {}, "group": {}}, "graph-with-group"),
    ({"vertices": 2, "edges": []}, "graph"),
])
def test_record_kind(record, kind):
    assert record_kind(record) == kind


@pytest.mark.parametrize("record", [[], {"foo": 1}])
def test_record_kind_rejects(record):
    with pytest.raises(SchemaError):
        record_kind(record)


@settings(max_examples=100)
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))))
def test_graph_round_trip_random(data):
    n, edges = data
    g = decode_graph({"vertices": n, "edges": [list(e) for e in edges]})
    text = dumps(encode_graph(g))
    assert dumps(encode_graph(decode_graph(loads(text)))) == text
