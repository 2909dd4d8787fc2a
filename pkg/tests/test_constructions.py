from itertools import combinations

import pytest

from symtriple.constructions import (affine_orbit_design, arc_pair_graph, gamma2_graph, lift_to_arcs,
                                     lift_to_paths, matched_cycle_chain, three_arc_graph, three_arc_orbits,
                                     two_paths_of, _span)
from symtriple.designs import design_isomorphic, is_t_design, two_transitive_automorphism_check
from symtriple.errors import NotRegular, NotSelfPaired, PreconditionViolation
from symtriple.gf2n import BinaryField, is_irreducible
from symtriple.graphs import (Graph, check_automorphisms, classify_bipartite, complete_graph, cycle_graph,
                              is_s_arc_transitive, petersen_graph, s_arcs)
from symtriple.permgroup import GeneratedGroup, cyclic_group, dihedral_group, group_order, symmetric_group
from symtriple.quotient import parameters, quotient_graph, validate_partition
from symtriple.constructions import ThreeArcOrbit


@pytest.mark.parametrize("g, G, sizes", [
    (complete_graph(4), symmetric_group(4), [24, 24]),
    (cycle_graph(6), dihedral_group(6), [12]),
    (complete_graph(5), symmetric_group(5), [60, 120]),
])
def test_three_arc_orbits(g, G, sizes):
    orbs = three_arc_orbits(g, G)
    assert sorted(len(o) for o in orbs) == sizes
    assert all(o.self_paired for o in orbs)
    assert sum(len(o) for o in orbs) == len(s_arcs(g, 3))


def test_three_arc_orbits_not_self_paired():
    # C6 under rotations only: each 3-arc orbit is a single direction
    orbs = three_arc_orbits(cycle_graph(6), cyclic_group(6))
    assert len(orbs) == 2 and not any(o.self_paired for o in orbs)


def test_orbits_closed_under_group():
    g, G = complete_graph(5), symmetric_group(5)
    for o in three_arc_orbits(g, G):
        for h in G.generators:
            assert all(tuple(h.images[x] for x in a) in o for a in o.members)


def _distinct(orbs):
    return next(o for o in orbs if o.representative[0] != o.representative[3])


def test_xi_of_k4():
    g, part, arcs = three_arc_graph(complete_graph(4), _distinct(three_arc_orbits(complete_graph(4), symmetric_group(4))))
    assert g.vertex_count == 12 and g.is_regular() and g.degree(0) == 2
    assert sorted(len(c) for c in g.components()) == [4, 4, 4]
    assert all(len(b) == 3 for b in part)


def test_xi_of_c6_is_matching():
    orb = three_arc_orbits(cycle_graph(6), dihedral_group(6))[0]
    g, _, arcs = three_arc_graph(cycle_graph(6), orb)
    assert g.vertex_count == len(arcs) == 12
    assert set(g.degrees()) == {1}


def test_gamma2_of_k5():
    orbs = three_arc_orbits(complete_graph(5), symmetric_group(5))
    big = next(o for o in orbs if len(o) == 120)
    g, part, paths = gamma2_graph(complete_graph(5), big)
    assert g.vertex_count == 30 and set(g.degrees()) == {4}
    assert len(part) == 5 and all(len(b) == 6 for b in part)


def test_gamma2_of_c6():
    orb = three_arc_orbits(cycle_graph(6), dihedral_group(6))[0]
    g, part, _ = gamma2_graph(cycle_graph(6), orb)
    assert g.vertex_count == 6 and len(part) == 6


def test_gamma2_requires_regular():
    path = Graph(3, [(0, 1), (1, 2)])
    orb = ThreeArcOrbit((), (), True)
    with pytest.raises(NotRegular):
        gamma2_graph(path, orb)


def test_not_self_paired_rejected():
    orb = three_arc_orbits(cycle_graph(6), cyclic_group(6))[0]
    with pytest.raises(NotSelfPaired):
        three_arc_graph(cycle_graph(6), orb)
    with pytest.raises(NotSelfPaired):
        gamma2_graph(cycle_graph(6), orb)


@pytest.mark.parametrize("g, G", [
    (complete_graph(4), symmetric_group(4)),
    (complete_graph(5), symmetric_group(5)),
    (cycle_graph(6), dihedral_group(6)),
])
def test_constructions_admit_lifted_group(g, G):
    for orb in three_arc_orbits(g, G):
        xi, _, arcs = three_arc_graph(g, orb)
        check_automorphisms(xi, lift_to_arcs(G, arcs))
        g2, _, paths = gamma2_graph(g, orb)
        check_automorphisms(g2, lift_to_paths(G, paths))
        assert all(xi.has_edge(v, u) for u, v in xi.edges)


@pytest.mark.parametrize("g, vertices", [(complete_graph(5), 20), (cycle_graph(6), 12), (petersen_graph(), 30)])
def test_arc_pair_graph(g, vertices):
    a, part, arcs = arc_pair_graph(g)
    assert a.vertex_count == vertices and set(a.degrees()) == {1}
    assert len(a.edges) == vertices // 2


def test_arc_pair_needs_edges():
    with pytest.raises(PreconditionViolation):
        arc_pair_graph(Graph(3, []))


def test_two_paths_count():
    assert len(two_paths_of(complete_graph(5))) == 5 * 6


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_matched_cycle_chain(n):
    t = matched_cycle_chain(n)
    assert validate_partition(t).valid
    assert t.graph.vertex_count == 6 * n and len(t.graph.edges) == 3 * n
    assert set(t.graph.degrees()) == {1}
    P = parameters(t)
    assert (P.v, P.k, P.b) == (6, 3, 2)
    q, _ = quotient_graph(t)
    assert q == cycle_graph(n)
    B, C = 0, t.block_neighbours[0][0]
    assert str(classify_bipartite(t.graph, t.trace(B, C), t.trace(C, B))) == "3·K2"


def test_matched_cycle_chain_small():
    with pytest.raises(PreconditionViolation):
        matched_cycle_chain(2)


def test_affine_3_1():
    d, G = affine_orbit_design(3, 1)
    got = is_t_design(d, 2)
    assert (got.v, got.k, got.lam, got.block_count) == (8, 4, 3, 14)
    assert group_order(G) == 56
    assert two_transitive_automorphism_check(d, G).point_two_transitive


def test_affine_2_1():
    got = is_t_design(affine_orbit_design(2, 1)[0], 2)
    assert (got.v, got.k, got.lam, got.block_count) == (4, 2, 1, 6)


@pytest.mark.parametrize("n, m", [(3, 3), (3, 0), (1, 1), (9, 1)])
def test_affine_out_of_range(n, m):
    with pytest.raises(PreconditionViolation):
        affine_orbit_design(n, m)


@pytest.mark.parametrize("n, m", [(n, m) for n in range(2, 6) for m in range(1, n)])
def test_affine_block_count_and_lambda(n, m):
    d, G = affine_orbit_design(n, m)
    got = is_t_design(d, 2)
    assert got.block_count == 2 ** m * (2 ** n - 1)
    assert got.k == 2 ** n - 2 ** (n - m)
    assert got.lam == (2 ** m - 1) * (2 ** n - 2 ** (n - m) - 1)
    assert got.replication == (2 ** n - 1) * (2 ** m - 1)
    assert two_transitive_automorphism_check(d, G).point_two_transitive


def _subgroups(n, order):
    """All additive subgroups of GF(2)^n of the given order."""
    seen = set()
    for basis in combinations(range(1, 1 << n), order.bit_length() - 1):
        span = _span(basis)
        if len(span) == order:
            seen.add(span)
    return sorted(seen, key=sorted)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_affine_design_independent_of_modulus(n):
    m = 1
    base, _ = affine_orbit_design(n, m)
    for f in range(1 << n, 1 << (n + 1)):
        if is_irreducible(f):
            other, _ = affine_orbit_design(n, m, field=BinaryField(n, f))
            assert design_isomorphic(base, other) is not None


@pytest.mark.parametrize("n, m", [(2, 1), (3, 1), (3, 2)])
def test_affine_design_independent_of_subgroup(n, m):
    base, _ = affine_orbit_design(n, m)
    for H in _subgroups(n, 2 ** (n - m)):
        other, _ = affine_orbit_design(n, m, subgroup=sorted(H))
        assert design_isomorphic(base, other) is not None


@pytest.mark.parametrize("m", [1, 2, 3])
def test_affine_design_subgroups_n4(m):
    # every subgroup with trivial scalar stabilizer gives an isomorphic design;
    # the others give fewer blocks
    n = 4
    F = BinaryField(n)
    base, _ = affine_orbit_design(n, m)
    full = 2 ** m * (2 ** n - 1)
    for H in _subgroups(n, 2 ** (n - m)):
        other, _ = affine_orbit_design(n, m, subgroup=sorted(H))
        fixed = [lam for lam in range(2, F.size) if {F.mul(lam, h) for h in H} == H]
        if fixed:
            assert other.block_count < full
        else:
            assert other.block_count == full
            assert design_isomorphic(base, other) is not None


def test_affine_subfield_subgroup_gives_fewer_blocks():
    # H = GF(4) inside GF(16) is fixed by the scalars of GF(4)*, so its orbit is smaller
    F = BinaryField(4)
    g = F.primitive_element
    gf4 = {0, 1, F.pow(g, 5), F.pow(g, 10)}
    d, _ = affine_orbit_design(4, 2, subgroup=sorted(gf4))
    assert d.block_count == 2 ** 2 * 15 // 3
