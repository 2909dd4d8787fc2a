from dataclasses import replace

import pytest

from symtriple import catalog
from symtriple.classifier import MODES, analyze_triple, classify, fingerprint, parameter_matches
from symtriple.errors import PMismatch, PreconditionViolation
from symtriple.graphs import Graph
from symtriple.permgroup import GeneratedGroup, alternating_group, symmetric_group
from symtriple.quotient import Parameters, SymmetricTriple, lambda_pairwise, non_incident_blocks


@pytest.fixture(scope="module")
def reports(triples):
    out = {}
    for key, t in triples.items():
        try:
            out[key] = classify(analyze_triple(t))
        except PreconditionViolation:
            out[key] = None
    return out


@pytest.mark.parametrize("key, case, vkrbm", [
    ("arc-pair-k5", "a", (4, 1, 1, 4, 1)),
    ("arc-pair-k7", "a", (6, 1, 1, 6, 1)),
    ("gamma2-k5", "e", (6, 3, 2, 4, 1)),
    ("gamma2-k5-60", "e", (6, 3, 2, 4, 1)),
    ("chain-3", "b", (6, 3, 1, 2, 1)),
    ("chain-4", "b", (6, 3, 1, 2, 1)),
])
def test_default_mode_cases(reports, key, case, vkrbm):
    r = reports[key]
    P = r.parameters
    assert (P.v, P.k, P.r, P.b, P.m) == vkrbm
    assert r.matched_case == case
    assert r.exit_code() == 0
    assert r.findings == []


def test_arc_pair_fingerprints(reports):
    fp = reports["arc-pair-k5"].fingerprints
    assert fp.block_stabilizer_order == 24
    assert fp.on_neighbours.order == 24 and fp.on_neighbours.transitivity >= 2
    assert "S4" in fp.on_block.consistent_with
    assert fp.equivariant_bijection is True


def test_chain_quotient_group_is_dihedral(reports):
    fp = reports["chain-4"].fingerprints
    assert fp.quotient_group_order == 8


def test_agl_variant_matches_nothing(reports):
    r = reports["arc-pair-k5-agl"]
    assert not r.quotient_2at
    assert r.matched_case == "none" and r.exit_code() == 3
    assert r.findings == []


@pytest.mark.parametrize("key", ["xi-k4", "c6-antipodal"])
def test_non_prime_p_fails_preconditions(reports, key):
    r = reports[key]
    assert not r.preconditions_hold and r.exit_code() == 4
    assert r.evidence == []


def test_iff_over_catalog(reports):
    for key, r in reports.items():
        if r is not None and r.p in (3, 5) and r.preconditions_hold:
            assert (r.matched_case != "none") == r.quotient_2at, key


def test_no_findings_over_catalog(reports):
    for key, r in reports.items():
        if r is not None:
            assert r.findings == [], key


def test_none_has_a_failed_mandatory_entry(reports):
    for key, r in reports.items():
        if r is not None and r.preconditions_hold and r.matched_case == "none":
            assert any(e.mandatory and e.status == "fail" for e in r.evidence), key


def test_case_a_consequences(reports, triples):
    for key, r in reports.items():
        if r is not None and r.matched_case == "a":
            assert r.parameters.r == 1
            g = triples[key].graph
            assert all(len(nb) == 1 for nb in g.adjacency)


def test_pa_family_has_one_non_incident_block(triples):
    # xi-k4 has (v, b, r, λ) = (3, 3, 2, 1), the p = 1 member of the family
    t = triples["xi-k4"]
    P = analyze_triple(t).parameters
    assert (P.v, P.b, P.r) == (3, 3, 2)
    assert all(non_incident_blocks(t, x) == 1 for x in range(t.graph.vertex_count))


def test_theorem1_mode(triples):
    assert classify(analyze_triple(triples["gamma2-k5"]), "theorem1").matched_case == "f"
    assert classify(analyze_triple(triples["arc-pair-k5"]), "theorem1").matched_case == "a"
    assert classify(analyze_triple(triples["chain-3"]), "theorem1").matched_case == "b"


def test_mode_prime_mismatch(triples):
    r = classify(analyze_triple(triples["arc-pair-k7"]), "p3")
    assert r.exit_code() == 4
    assert any(e.name == "mode_prime" and e.status == "fail" for e in r.preconditions)


def test_unknown_mode(triples):
    with pytest.raises(PreconditionViolation):
        classify(analyze_triple(triples["arc-pair-k5"]), "p7")
    assert MODES == ("theorem1", "p3", "p5")


def test_p_mismatch_raises(triples):
    with pytest.raises(PMismatch):
        analyze_triple(triples["arc-pair-k5"], p=5)


def test_invalid_triple_raises():
    t = SymmetricTriple(Graph(4, [(0, 1), (2, 3)]), symmetric_group(4), [(0, 1), (2, 3)])
    with pytest.raises(PreconditionViolation):
        analyze_triple(t)


def _uneven_traces():
    # four blocks of three; traces on block 0 are {0,1}, {1,2}, {0}
    edges = [(0, 3), (1, 4), (1, 6), (2, 7), (0, 9)]
    blocks = [(0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11)]
    return SymmetricTriple(Graph(12, edges), GeneratedGroup(12, []), blocks)


def test_lambda_non_constant_witness():
    t = _uneven_traces()
    rep = lambda_pairwise(t, 1, Parameters(3, 2, 2, 3, 1))
    assert not rep.constant and rep.value is None
    (b0, c0, d0), (b1, c1, d1) = rep.witness
    tr = lambda B, C: set(t.trace(B, C))
    assert len(tr(b0, c0) & tr(b0, d0)) != len(tr(b1, c1) & tr(b1, d1))


def test_non_constant_lambda_is_a_finding_when_quotient_is_2at(triples):
    base = analyze_triple(triples["arc-pair-k5"])
    fake = lambda_pairwise(_uneven_traces(), 1, Parameters(3, 2, 2, 3, 1))
    r = classify(replace(base, lambda_report=fake, preconditions=list(base.preconditions)), "p3")
    assert r.matched_case == "none"
    assert any(e.name == "lambda_constant" and e.status == "fail" for e in r.evidence)
    assert any("λ is not constant" in f for f in r.findings)


@pytest.mark.parametrize("mode, p, vbrl, tags", [
    ("p3", 3, (4, 4, 1, 0), ["a"]),
    ("p3", 3, (6, 2, 1, 0), ["b"]),
    ("p3", 3, (7, 7, 4, 2), ["c"]),
    ("p3", 3, (6, 4, 2, 1), ["e"]),
    ("p5", 5, (11, 11, 6, 3), ["d"]),
    ("p5", 5, (21, 21, 16, 12), ["c"]),
    ("p5", 5, (15, 6, 4, 6), ["f"]),
    ("theorem1", 7, (8, 8, 1, 0), ["a"]),
    ("theorem1", 7, (15, 15, 8, 4), ["c"]),
    ("theorem1", 7, (35, 15, 12, 22), ["f"]),
    ("theorem1", 7, (9, 9, 1, 1), []),
])
def test_parameter_matches(mode, p, vbrl, tags):
    assert sorted({t for t, _ in parameter_matches(mode, p, vbrl)}) == tags


@pytest.mark.parametrize("n", [4, 5, 6])
def test_fingerprint_names(n):
    assert f"S{n}" in fingerprint(symmetric_group(n)).consistent_with
    fa = fingerprint(alternating_group(n))
    assert f"A{n}" in fa.consistent_with and fa.all_even


def test_report_dict_keys(reports):
    d = reports["arc-pair-k5"].as_dict()
    assert {"case", "evidence", "fingerprints", "identities", "lambda", "parameters"} <= set(d)
