"""Built-in examples addressed by frozen keys.

Triples: arc-pair-k5, arc-pair-k7, arc-pair-k5-agl, gamma2-k5, gamma2-k5-60,
xi-k4, chain-N, c6-antipodal. Designs (with acting group): affine-N-M, fano.
Graphs with a group (for 3-arc orbit listings): k4, k5, c6.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .constructions import (affine_orbit_design, arc_pair_graph, gamma2_graph, lift_to_arcs, lift_to_paths,
                            matched_cycle_chain, three_arc_graph, three_arc_orbits)
from .designs import IncidenceStructure, automorphism_group, fano_plane
from .errors import MalformedInput
from .graphs import Graph, complete_graph, cycle_graph
from .permgroup import GeneratedGroup, Permutation, dihedral_group, symmetric_group
from .quotient import SymmetricTriple


@dataclass(frozen=True)
class GraphWithGroup:
    graph: Graph
    group: GeneratedGroup


@dataclass(frozen=True)
class DesignWithGroup:
    design: IncidenceStructure
    group: GeneratedGroup


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    kind: str  # triple | design | graph
    description: str
    build: Callable


def _complete(n):
    return GraphWithGroup(complete_graph(n), symmetric_group(n))


def _affine_line_group(n: int) -> GeneratedGroup:
    """AGL(1, n) for prime n: x -> x+1 and x -> g x."""
    g = next(a for a in range(2, n) if len({pow(a, e, n) for e in range(n - 1)}) == n - 1)
    return GeneratedGroup(n, [Permutation(tuple((x + 1) % n for x in range(n))),
                              Permutation(tuple(g * x % n for x in range(n)))])


def arc_pair_triple(base: GraphWithGroup) -> SymmetricTriple:
    g, partition, arcs = arc_pair_graph(base.graph)
    return SymmetricTriple(g, lift_to_arcs(base.group, arcs), partition)


def gamma2_triple(base: GraphWithGroup, orbit_index: int) -> SymmetricTriple:
    orbs = three_arc_orbits(base.graph, base.group)
    if not 0 <= orbit_index < len(orbs):
        raise MalformedInput(f"orbit index {orbit_index} outside 0..{len(orbs) - 1}")
    g, partition, paths = gamma2_graph(base.graph, orbs[orbit_index])
    return SymmetricTriple(g, lift_to_paths(base.group, paths), partition)


def xi_triple(base: GraphWithGroup, orbit_index: int) -> SymmetricTriple:
    orbs = three_arc_orbits(base.graph, base.group)
    if not 0 <= orbit_index < len(orbs):
        raise MalformedInput(f"orbit index {orbit_index} outside 0..{len(orbs) - 1}")
    g, partition, arcs = three_arc_graph(base.graph, orbs[orbit_index])
    return SymmetricTriple(g, lift_to_arcs(base.group, arcs), partition)


def _orbit_with(base: GraphWithGroup, pred) -> int:
    return next(i for i, o in enumerate(three_arc_orbits(base.graph, base.group)) if pred(o))


def _gamma2_k5(size: int) -> SymmetricTriple:
    base = _complete(5)
    return gamma2_triple(base, _orbit_with(base, lambda o: len(o) == size))


def _xi_k4() -> SymmetricTriple:
    # the orbit of 3-arcs (a, b, c, d) with d != a
    base = _complete(4)
    return xi_triple(base, _orbit_with(base, lambda o: o.representative[0] != o.representative[3]))


def _c6_antipodal() -> SymmetricTriple:
    return SymmetricTriple(cycle_graph(6), dihedral_group(6), [(i, i + 3) for i in range(3)])


def _fano() -> DesignWithGroup:
    d = fano_plane()
    return DesignWithGroup(d, automorphism_group(d))


def _affine(n: int, m: int) -> DesignWithGroup:
    d, G = affine_orbit_design(n, m)
    return DesignWithGroup(d, G)


FIXED = {
    "arc-pair-k5": CatalogEntry("arc-pair-k5", "triple", "perfect matching on the arcs of K5, S5",
                                lambda: arc_pair_triple(_complete(5))),
    "arc-pair-k7": CatalogEntry("arc-pair-k7", "triple", "perfect matching on the arcs of K7, S7",
                                lambda: arc_pair_triple(_complete(7))),
    "arc-pair-k5-agl": CatalogEntry("arc-pair-k5-agl", "triple",
                                    "arcs of K5 under AGL(1,5), quotient not 2-arc-transitive",
                                    lambda: arc_pair_triple(GraphWithGroup(complete_graph(5), _affine_line_group(5)))),
    "gamma2-k5": CatalogEntry("gamma2-k5", "triple", "2-path graph of K5 on the 3-arc orbit of size 120",
                              lambda: _gamma2_k5(120)),
    "gamma2-k5-60": CatalogEntry("gamma2-k5-60", "triple", "2-path graph of K5 on the 3-arc orbit of size 60",
                                 lambda: _gamma2_k5(60)),
    "xi-k4": CatalogEntry("xi-k4", "triple", "3-arc graph of K4 on the orbit with distinct end vertices",
                          _xi_k4),
    "c6-antipodal": CatalogEntry("c6-antipodal", "triple", "C6 with antipodal blocks, D12", _c6_antipodal),
    "fano": CatalogEntry("fano", "design", "Fano plane with its automorphism group", _fano),
    "k4": CatalogEntry("k4", "graph", "K4 with S4", lambda: _complete(4)),
    "k5": CatalogEntry("k5", "graph", "K5 with S5", lambda: _complete(5)),
    "c6": CatalogEntry("c6", "graph", "C6 with D12", lambda: GraphWithGroup(cycle_graph(6), dihedral_group(6))),
}

_CHAIN = re.compile(r"chain-(\d+)$")
_AFFINE = re.compile(r"affine-(\d+)-(\d+)$")

# Parametric keys used when listing every catalog triple.
DEFAULT_PARAMETRIC = ("chain-3", "chain-4", "chain-5", "affine-3-1", "affine-3-2", "affine-4-2")


def entry(key: str) -> CatalogEntry:
    if key in FIXED:
        return FIXED[key]
    m = _CHAIN.match(key)
    if m:
        n = int(m.group(1))
        return CatalogEntry(key, "triple", f"matched-cycle chain on {n} blocks of 6", lambda: matched_cycle_chain(n))
    m = _AFFINE.match(key)
    if m:
        n, k = int(m.group(1)), int(m.group(2))
        return CatalogEntry(key, "design", f"affine orbit design in GF(2^{n}), m={k}", lambda: _affine(n, k))
    raise MalformedInput(f"unknown catalog key {key!r}; known: {', '.join(sorted(FIXED))}, chain-N, affine-N-M")


def build(key: str):
    return entry(key).build()


def all_keys() -> list[str]:
    return sorted(FIXED) + list(DEFAULT_PARAMETRIC)


def triple_keys() -> list[str]:
    return [k for k in all_keys() if entry(k).kind == "triple"]
