"""Generative constructions: 3-arc orbits, Ξ(Σ,Δ), Γ₂(Σ,Δ), the arc-pair graph,
the matched-cycle chain and the GF(2^n) affine orbit design."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .designs import IncidenceStructure
from .errors import NotRegular, NotSelfPaired, PreconditionViolation
from .gf2n import BinaryField
from .graphs import Graph, check_automorphisms, s_arcs
from .permgroup import GeneratedGroup, Permutation
from .quotient import SymmetricTriple


@dataclass(frozen=True)
class ThreeArcOrbit:
    representative: tuple
    members: tuple
    self_paired: bool

    def __len__(self):
        return len(self.members)

    def __contains__(self, arc):
        return tuple(arc) in self._member_set

    @cached_property
    def _member_set(self):
        return frozenset(self.members)


def three_arc_orbits(sigma: Graph, G: GeneratedGroup) -> list[ThreeArcOrbit]:
    """Partition the 3-arcs of ``sigma`` into G-orbits, sorted by representative."""
    check_automorphisms(sigma, G)
    arcs = s_arcs(sigma, 3)
    gens = [g.images for g in G.generators]
    remaining = set(arcs)
    out = []
    for start in arcs:
        if start not in remaining:
            continue
        orb, stack = {start}, [start]
        while stack:
            a = stack.pop()
            for g in gens:
                b = tuple(g[x] for x in a)
                if b not in orb:
                    orb.add(b)
                    stack.append(b)
        remaining -= orb
        out.append(ThreeArcOrbit(start, tuple(sorted(orb)), start[::-1] in orb))
    return out


def arcs_of(sigma: Graph) -> list[tuple[int, int]]:
    return s_arcs(sigma, 1)


def two_paths_of(sigma: Graph) -> list[tuple[int, int, int]]:
    """2-paths (τ, σ, τ') with τ < τ', ordered by middle vertex then ends."""
    out = []
    for mid in range(sigma.vertex_count):
        nb = sigma.neighbours(mid)
        for i, a in enumerate(nb):
            for c in nb[i + 1:]:
                out.append((a, mid, c))
    return out


def _lift(G: GeneratedGroup, objects: Sequence[tuple], canon) -> GeneratedGroup:
    index = {o: i for i, o in enumerate(objects)}
    rows = []
    for g in G.generators:
        im = g.images
        rows.append(tuple(index[canon(tuple(im[x] for x in o))] for o in objects))
    return GeneratedGroup(len(objects), rows)


def lift_to_arcs(G: GeneratedGroup, arcs: Sequence[tuple]) -> GeneratedGroup:
    """The action of G (on Σ) induced on a list of arcs."""
    return _lift(G, arcs, lambda a: a)


def _canon_path(p):
    a, mid, c = p
    return (a, mid, c) if a < c else (c, mid, a)


def lift_to_paths(G: GeneratedGroup, paths: Sequence[tuple]) -> GeneratedGroup:
    return _lift(G, paths, _canon_path)


def _require_self_paired(delta: ThreeArcOrbit):
    if not delta.self_paired or any(a[::-1] not in delta for a in delta.members):
        raise NotSelfPaired("Δ is not closed under reversal")


def three_arc_graph(sigma: Graph, delta: ThreeArcOrbit):
    """Ξ(Σ, Δ): vertices are the arcs of Σ (lexicographic), (σ,τ) ~ (σ',τ')
    iff (τ, σ, σ', τ') ∈ Δ. Returns ``(graph, partition, arcs)`` where the
    partition groups arcs by first coordinate."""
    _require_self_paired(delta)
    arcs = arcs_of(sigma)
    index = {a: i for i, a in enumerate(arcs)}
    edges = set()
    for tau, s, s2, tau2 in delta.members:
        u, v = index[(s, tau)], index[(s2, tau2)]
        edges.add((min(u, v), max(u, v)))
    partition = _group_by(arcs, lambda a: a[0])
    return Graph(len(arcs), sorted(edges)), partition, arcs


def gamma2_graph(sigma: Graph, delta: ThreeArcOrbit):
    """Γ₂(Σ, Δ) on 2-paths; τστ' ~ ηεη' when they share an edge and the glued
    3-arcs lie in Δ. Returns ``(graph, partition, paths)``, partition by middle vertex."""
    _require_self_paired(delta)
    degs = set(sigma.degrees())
    if len(degs) != 1 or degs.pop() < 2:
        raise NotRegular("Γ₂ needs a regular graph of valency at least 2")
    paths = two_paths_of(sigma)
    index = {p: i for i, p in enumerate(paths)}
    edges = set()
    for a, b, c, d in delta.members:
        u, v = index[_canon_path((a, b, c))], index[_canon_path((b, c, d))]
        edges.add((min(u, v), max(u, v)))
    partition = _group_by(paths, lambda p: p[1])
    return Graph(len(paths), sorted(edges)), partition, paths


def arc_pair_graph(sigma: Graph):
    """Perfect matching (σ,τ) -- (τ,σ) on the arcs; blocks B(σ) by first coordinate."""
    if not sigma.edges:
        raise PreconditionViolation("Σ needs at least one edge")
    arcs = arcs_of(sigma)
    index = {a: i for i, a in enumerate(arcs)}
    edges = sorted({(min(index[(s, t)], index[(t, s)]), max(index[(s, t)], index[(t, s)])) for s, t in arcs})
    return Graph(len(arcs), edges), _group_by(arcs, lambda a: a[0]), arcs


def _group_by(objects, key):
    groups = {}
    for i, o in enumerate(objects):
        groups.setdefault(key(o), []).append(i)
    return [tuple(groups[k]) for k in sorted(groups)]


def matched_cycle_chain(n: int) -> SymmetricTriple:
    """n blocks of 6 around a cycle; block i = {6i..6i+5}.

    Vertex 6i+j (j < 3) is matched to 6(i+1)+3+j: the first half of every
    block is matched forward, the second half backward. The group is
    generated by the rotation, a reflection swapping the halves and a 3-cycle
    inside every half.
    """
    if n < 3:
        raise PreconditionViolation("matched-cycle chain needs n >= 3")
    N = 6 * n
    edges = [(6 * i + j, 6 * ((i + 1) % n) + 3 + j) for i in range(n) for j in range(3)]
    rot = [(x + 6) % N for x in range(N)]
    ref = [6 * ((-(x // 6)) % n) + (x % 6 + 3) % 6 for x in range(N)]
    turn = [6 * (x // 6) + (x % 3 + 1) % 3 + 3 * (x % 6 // 3) for x in range(N)]
    group = GeneratedGroup(N, [rot, ref, turn])
    partition = [tuple(range(6 * i, 6 * i + 6)) for i in range(n)]
    return SymmetricTriple(Graph(N, edges), group, partition)


def affine_orbit_design(n: int, m: int, field: BinaryField | None = None,
                        subgroup: Sequence[int] | None = None, max_n: int = 8):
    """Complements of the E ⋊ F*-orbit of an additive subgroup H of GF(2^n).

    H defaults to the span of 1, x, ..., x^(n-m-1) (the integers below
    2^(n-m)); ``subgroup`` may list any spanning set of an order-2^(n-m)
    subgroup instead. Returns ``(design, group)`` where the group is
    generated by translation by 1 and multiplication by a primitive element.
    """
    if not 2 <= n <= max_n:
        raise PreconditionViolation(f"n={n} outside 2..{max_n}")
    if not 1 <= m <= n - 1:
        raise PreconditionViolation(f"m={m} outside 1..{n - 1}")
    F = field or BinaryField(n)
    if F.n != n:
        raise PreconditionViolation("field degree does not match n")
    if subgroup is None:
        H = frozenset(range(1 << (n - m)))
    else:
        H = _span(subgroup)
        if len(H) != 1 << (n - m):
            raise PreconditionViolation(f"subgroup has order {len(H)}, expected {1 << (n - m)}")
    orbit = set()
    for lam in range(1, F.size):
        scaled = [F.mul(lam, h) for h in H]
        for beta in range(F.size):
            orbit.add(frozenset(x ^ beta for x in scaled))
    everything = frozenset(range(F.size))
    design = IncidenceStructure(F.size, [tuple(sorted(everything - c)) for c in orbit])
    g = F.primitive_element
    translate = Permutation(tuple(x ^ 1 for x in range(F.size)))
    scale = Permutation(tuple(F.mul(g, x) for x in range(F.size)))
    return design, GeneratedGroup(F.size, [translate, scale])


def _span(vectors: Sequence[int]) -> frozenset:
    span = {0}
    for v in vectors:
        span |= {x ^ v for x in span}
    return frozenset(span)
