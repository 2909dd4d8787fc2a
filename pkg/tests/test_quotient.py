from itertools import combinations
from math import gcd

import pytest

from symtriple import catalog
from symtriple.errors import EmptyTrace, OverlappingTraces, PMismatch, PreconditionViolation, RepresentativeDependent
from symtriple.graphs import Graph, complete_graph, cycle_graph, is_s_arc_transitive
from symtriple.permgroup import GeneratedGroup, dihedral_group
from symtriple.quotient import (SymmetricTriple, blocks_refinement, induced_group, lambda_pairwise, parameters,
                                quotient_graph, require_valid, validate_partition)


def oracle_parameters(t):
    """Independent recount straight from the edge list, using block 0 and its first neighbour."""
    block_of = {x: i for i, b in enumerate(t.partition) for x in b}
    B = t.partition[0]
    nbr_blocks = sorted({block_of[y] for u, w in t.graph.edges for x, y in ((u, w), (w, u)) if x in B})
    C = nbr_blocks[0]
    k = sum(1 for x in B if any(block_of[y] == C for y in t.graph.neighbours(x)))
    r = len({block_of[y] for y in t.graph.neighbours(B[0])})
    return len(B), k, r, len(nbr_blocks)


def oracle_lambda(t):
    block_of = {x: i for i, b in enumerate(t.partition) for x in b}
    values = set()
    for i, B in enumerate(t.partition):
        nbrs = sorted({block_of[y] for x in B for y in t.graph.neighbours(x)})
        for C, D in combinations(nbrs, 2):
            values.add(sum(1 for x in B if {C, D} <= {block_of[y] for y in t.graph.neighbours(x)}))
    return values


def c6(partition):
    return SymmetricTriple(cycle_graph(6), dihedral_group(6), partition)


def test_validate_antipodal_pairs():
    assert validate_partition(c6([(0, 3), (1, 4), (2, 5)])).valid


def test_validate_trivial_partition():
    rep = validate_partition(c6([(i,) for i in range(6)]))
    assert [f["check"] for f in rep.failures] == ["nontrivial"]


def test_validate_non_invariant_partition():
    rep = validate_partition(c6([(0, 1), (2, 3), (4, 5)]))
    assert not rep.valid
    assert rep.failures[0]["check"] == "invariant"
    assert "maps [0, 1] to [1, 2]" in rep.failures[0]["detail"]


def test_validate_overlap_and_cover():
    t = SymmetricTriple(cycle_graph(6), dihedral_group(6), [(0, 3), (0, 4), (2, 5)])
    checks = {f["check"] for f in validate_partition(t).failures}
    assert {"disjoint", "cover"} <= checks
    with pytest.raises(PreconditionViolation):
        require_valid(t)


def test_validate_not_symmetric():
    t = SymmetricTriple(cycle_graph(6), GeneratedGroup(6, [[(x + 2) % 6 for x in range(6)]]), [(0, 3), (1, 4), (2, 5)])
    assert [f["check"] for f in validate_partition(t).failures] == ["symmetric"]


@pytest.mark.parametrize("key, vertices, edges", [
    ("arc-pair-k5", 5, 10),
    ("c6-antipodal", 3, 3),
    ("xi-k4", 4, 6),
    ("chain-4", 4, 4),
])
def test_quotient_graph(triples, key, vertices, edges):
    q, table = quotient_graph(triples[key])
    assert (q.vertex_count, len(q.edges)) == (vertices, edges)
    assert is_s_arc_transitive(q, GeneratedGroup(q.vertex_count, table.images), 1)


def test_quotient_of_arc_pair_is_complete(triples):
    q, _ = quotient_graph(triples["arc-pair-k5"])
    assert q == complete_graph(5)


@pytest.mark.parametrize("key, expected", [
    ("arc-pair-k5", (4, 1, 1, 4, 1)),
    ("xi-k4", (3, 2, 2, 3, 1)),
    ("gamma2-k5", (6, 3, 2, 4, 1)),
    ("chain-4", (6, 3, 1, 2, 1)),
    ("arc-pair-k7", (6, 1, 1, 6, 1)),
    ("c6-antipodal", (2, 2, 2, 2, 2)),
])
def test_parameters(triples, key, expected):
    P = parameters(triples[key])
    assert (P.v, P.k, P.r, P.b, P.m) == expected


def test_parameters_match_oracle_on_catalog(triples):
    for key, t in triples.items():
        P = parameters(t)
        assert (P.v, P.k, P.r, P.b) == oracle_parameters(t), key


def test_representative_dependent():
    g = Graph(6, [(0, 2), (2, 4)])
    t = SymmetricTriple(g, GeneratedGroup(6), [(0, 1), (2, 3), (4, 5)])
    with pytest.raises(RepresentativeDependent):
        parameters(t)


@pytest.mark.parametrize("key, p, lam, lam_bar, eq2, eq3", [
    ("gamma2-k5", 3, 1, 1, (12, 12), (3, 3)),
    ("arc-pair-k5", 3, 0, 2, (4, 4), (0, 0)),
    ("xi-k4", 1, 1, 0, (6, 6), (2, 2)),
])
def test_lambda(triples, key, p, lam, lam_bar, eq2, eq3):
    rep = lambda_pairwise(triples[key], p)
    assert rep.constant and rep.value == lam and rep.lambda_bar == lam_bar
    assert (rep.eq2.lhs, rep.eq2.rhs) == eq2
    assert (rep.eq3.lhs, rep.eq3.rhs) == eq3


def test_lambda_single_pair(triples):
    rep = lambda_pairwise(triples["chain-4"], 3)
    assert rep.constant and rep.single_pair and rep.value == 0


def test_lambda_p_mismatch(triples):
    with pytest.raises(PMismatch):
        lambda_pairwise(triples["arc-pair-k5"], 5)


def test_lambda_matches_oracle(triples):
    for key, t in triples.items():
        P = parameters(t)
        if P.b < 2:
            continue
        rep = lambda_pairwise(t, P.p)
        values = oracle_lambda(t)
        assert rep.constant == (len(values) == 1), key
        if rep.constant:
            assert {rep.value} == values


def test_two_arc_transitive_quotient_has_constant_lambda(triples):
    for key, t in triples.items():
        q, table = quotient_graph(t)
        if is_s_arc_transitive(q, induced_group(t), 2):
            assert lambda_pairwise(t, parameters(t).p).constant, key


def test_refinement_of_three_arc_graph(triples):
    ref = blocks_refinement(triples["xi-k4"])
    assert len(ref.refined_partition) == 12
    assert all(len(b) == 1 for b in ref.refined_partition)
    assert ref.a == 3
    hp = ref.hat_parameters
    assert (hp.v, hp.b, hp.k, hp.r) == (3, 3, 2, 2)
    assert ref.quotient_correspondence and ref.refined_invariant
    assert ref.relation_holds


def test_refinement_block_size_is_v_minus_k(triples):
    t = triples["xi-k4"]
    P = parameters(t)
    assert {len(b) for b in blocks_refinement(t).refined_partition} == {P.v - P.k}


def test_refinement_overlapping(triples):
    with pytest.raises(OverlappingTraces):
        blocks_refinement(triples["arc-pair-k5"])


def test_refinement_empty_trace(triples):
    with pytest.raises(EmptyTrace):
        blocks_refinement(triples["c6-antipodal"])


def test_identities_over_catalog(triples):
    for key, t in triples.items():
        P = parameters(t)
        assert P.v * P.r == P.b * P.k, key
        assert gcd(P.r, P.b) % P.m == 0, key
