"""Invariant partitions, quotient graphs and the (v, k, r, b, m, λ) parameter system.

A :class:`SymmetricTriple` bundles a graph, a group acting on it and a vertex
partition. Every parameter is recomputed over all representatives (every
block, every vertex, every adjacent pair) instead of being read off a single
representative, so an input that is not really G-symmetric shows up as a
:class:`RepresentativeDependent` error rather than a silently wrong number.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import (EmptyTrace, IncompleteCover, NotInvariant, NotAutomorphism, OverlappingTraces,
                     PMismatch, PreconditionViolation, RepresentativeDependent)
from .graphs import Graph, is_s_arc_transitive
from .permgroup import ActionTable, GeneratedGroup, block_action


def canonical_partition(blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@dataclass(frozen=True)
class SymmetricTriple:
    graph: Graph
    group: GeneratedGroup = field(compare=False)
    partition: tuple

    def __post_init__(self):
        object.__setattr__(self, "partition", canonical_partition(self.partition))

    @cached_property
    def block_of(self) -> dict[int, int]:
        out = {}
        for i, b in enumerate(self.partition):
            for x in b:
                out.setdefault(x, i)
        return out

    @cached_property
    def block_neighbours(self) -> tuple[tuple[int, ...], ...]:
        """Γ_𝓑(B) for each block index B."""
        adj = self.graph.adjacency
        out = []
        for i, b in enumerate(self.partition):
            out.append(tuple(sorted({self.block_of[y] for x in b for y in adj[x]} - {i})))
        return tuple(out)

    def trace(self, B: int, C: int) -> tuple[int, ...]:
        """B ∩ Γ(C), sorted."""
        adj = self.graph.adjacency
        return tuple(x for x in self.partition[B] if any(self.block_of[y] == C for y in adj[x]))

    def vertex_blocks(self, x: int) -> tuple[int, ...]:
        """Γ_𝓑(α): blocks containing a neighbour of ``x``."""
        return tuple(sorted({self.block_of[y] for y in self.graph.adjacency[x]}))


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    def add(self, check: str, detail: str):
        self.failures.append({"check": check, "detail": detail})


def validate_partition(t: SymmetricTriple) -> ValidationReport:
    """Check cover, nontriviality, invariance, independence and G-symmetry."""
    rep = ValidationReport()
    n = t.graph.vertex_count
    seen = {}
    for i, b in enumerate(t.partition):
        for x in b:
            if not 0 <= x < n:
                rep.add("cover", f"vertex {x} out of range")
            elif x in seen:
                rep.add("disjoint", f"vertex {x} lies in blocks {seen[x]} and {i}")
            else:
                seen[x] = i
    missing = sorted(set(range(n)) - set(seen))
    if missing:
        rep.add("cover", f"vertices {missing} not covered")
    sizes = {len(b) for b in t.partition}
    if any(not 1 < s < n for s in sizes):
        rep.add("nontrivial", f"block sizes {sorted(sizes)} not strictly between 1 and {n}")
    if not rep.valid:
        return rep
    for gi, g in enumerate(t.group.generators):
        for b in t.partition:
            image = tuple(sorted(g.images[x] for x in b))
            if image not in set(t.partition):
                rep.add("invariant", f"generator {gi} maps {list(b)} to {list(image)}")
                break
    has_quotient_edge = any(t.block_of[u] != t.block_of[v] for u, v in t.graph.edges)
    if has_quotient_edge:
        for u, v in t.graph.edges:
            if t.block_of[u] == t.block_of[v]:
                rep.add("independent", f"edge {[u, v]} inside block {t.block_of[u]}")
                break
    try:
        if not is_s_arc_transitive(t.graph, t.group, 1):
            rep.add("symmetric", "group is not transitive on vertices and arcs")
    except NotAutomorphism as exc:
        rep.add("symmetric", str(exc))
    return rep


def require_valid(t: SymmetricTriple):
    rep = validate_partition(t)
    if not rep.valid:
        f = rep.failures[0]
        raise PreconditionViolation(f"invalid triple ({f['check']}): {f['detail']}")


def quotient_graph(t: SymmetricTriple, check: bool = True) -> tuple[Graph, ActionTable]:
    """Γ_𝓑 on block indices, with the induced action of G on blocks."""
    if check:
        require_valid(t)
    edges = {(min(t.block_of[u], t.block_of[v]), max(t.block_of[u], t.block_of[v]))
             for u, v in t.graph.edges if t.block_of[u] != t.block_of[v]}
    q = Graph(len(t.partition), sorted(edges))
    table = block_action(t.group, t.partition)
    if check:
        induced = GeneratedGroup(q.vertex_count, table.images)
        if q.edges and not is_s_arc_transitive(q, induced, 1):
            raise PreconditionViolation("quotient is not G-symmetric")
    return q, table


def induced_group(t: SymmetricTriple) -> GeneratedGroup:
    """G acting on the block indices, generated by the generator rows."""
    table = block_action(t.group, t.partition)
    return GeneratedGroup(len(t.partition), table.images)


@dataclass(frozen=True)
class Parameters:
    v: int
    k: int
    r: int
    b: int
    m: int

    @property
    def p(self) -> int:
        return self.v - self.k

    def as_dict(self) -> dict:
        return {"v": self.v, "k": self.k, "r": self.r, "b": self.b, "m": self.m, "p": self.p}


def _constant(name, values: dict):
    distinct = sorted(set(values.values()))
    if len(distinct) != 1:
        witness = {val: key for key, val in sorted(values.items(), reverse=True)}
        raise RepresentativeDependent(
            f"{name} depends on the representative: values {distinct}, e.g. "
            + ", ".join(f"{val} at {witness[val]}" for val in distinct[:2]))
    return distinct[0]


def _raw_parameters(t: SymmetricTriple) -> Parameters:
    v = _constant("v", {i: len(b) for i, b in enumerate(t.partition)})
    nbrs = t.block_neighbours
    if not any(nbrs):
        raise PreconditionViolation("quotient graph has no edges")
    b = _constant("b", {i: len(n) for i, n in enumerate(nbrs)})
    traces = {(B, C): t.trace(B, C) for B in range(len(t.partition)) for C in nbrs[B]}
    k = _constant("k", {key: len(tr) for key, tr in traces.items()})
    r = _constant("r", {x: len(set(t.vertex_blocks(x)) - {t.block_of[x]}) for x in range(t.graph.vertex_count)})
    m = _constant("m", {(B, C): sum(1 for D in nbrs[B] if traces[(B, D)] == traces[(B, C)])
                        for (B, C) in traces})
    return Parameters(v, k, r, b, m)


def parameters(t: SymmetricTriple) -> Parameters:
    """v, k, r, b, m of the triple, verified representative-independent."""
    P = _raw_parameters(t)
    if P.v * P.r != P.b * P.k:
        raise RepresentativeDependent(f"vr != bk: {P.v}*{P.r} != {P.b}*{P.k}")
    if P.r % P.m or P.b % P.m:
        raise RepresentativeDependent(f"multiplicity {P.m} does not divide gcd(r, b) = {gcd(P.r, P.b)}")
    return P


@dataclass(frozen=True)
class IdentityCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self):
        return {"holds": self.holds, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class LambdaReport:
    constant: bool
    value: int | None
    witness: tuple | None
    single_pair: bool
    lambda_bar: int | None
    eq2: IdentityCheck | None
    eq3: IdentityCheck | None
    fisher: bool | None  # b <= v, only meaningful when λ >= 1

    def as_dict(self):
        return {
            "constant": self.constant,
            "value": self.value,
            "witness": list(self.witness) if self.witness else None,
            "single_pair": self.single_pair,
            "lambda_bar": self.lambda_bar,
            "eq2": self.eq2.as_dict() if self.eq2 else None,
            "eq3": self.eq3.as_dict() if self.eq3 else None,
            "fisher": self.fisher,
        }


def lambda_pairwise(t: SymmetricTriple, p: int, params: Parameters | None = None) -> LambdaReport:
    """|Γ(C) ∩ Γ(D) ∩ B| over all blocks B and pairs C, D of its neighbours.

    When the count is constant also returns λ̄ = v - 2k + λ and checks
    vr = b(v-p), λ(b-1) = (v-p)(r-1) and, for λ >= 1, Fisher's b <= v.
    """
    P = params or parameters(t)
    if p != P.v - P.k:
        raise PMismatch(f"p={p} but v-k={P.v - P.k}")
    if P.b < 2:
        raise PreconditionViolation("λ needs quotient valency b >= 2")
    values = {}
    for B, nbrs in enumerate(t.block_neighbours):
        tr = {C: set(t.trace(B, C)) for C in nbrs}
        for C, D in combinations(nbrs, 2):
            values[(B, C, D)] = len(tr[C] & tr[D])
    distinct = set(values.values())
    v, k, r, b = P.v, P.k, P.r, P.b
    eq2 = IdentityCheck(v * r, b * (v - p))
    if len(distinct) != 1:
        first = min(values)
        base = values[first]
        witness = next(key for key in sorted(values) if values[key] != base)
        return LambdaReport(False, None, (first, witness), b == 2, None, eq2, None, None)
    lam = distinct.pop()
    eq3 = IdentityCheck(lam * (b - 1), (v - p) * (r - 1))
    fisher = (b <= v) if lam >= 1 else None
    return LambdaReport(True, lam, None, b == 2, v - 2 * k + lam, eq2, eq3, fisher)


@dataclass(frozen=True)
class RefinementReport:
    refined_partition: tuple            # 𝒫, as vertex blocks
    hat_partition: tuple                # 𝓑̂, as indices into refined_partition, one row per block of 𝓑
    a: int
    hat_parameters: Parameters          # (v̂, k̂, r̂, b̂, m̂) w.r.t. (Γ_𝒫, 𝓑̂)
    quotient_correspondence: bool       # (Γ_𝒫)_𝓑̂ equals Γ_𝓑 under B̂ <-> B
    refined_invariant: bool
    k_P: int
    v_P: int
    b_P: int
    r_P: int
    s: int | None
    t: int | None
    t_constant: bool
    relation_holds: bool | None         # p t == k_𝒫 s
    case: str
    refined_graph: Graph = field(compare=False, default=None)

    def as_dict(self):
        hp = self.hat_parameters
        return {
            "a": self.a,
            "blocks": len(self.refined_partition),
            "block_size": len(self.refined_partition[0]),
            "hat": {"v": hp.v, "k": hp.k, "b": hp.b, "r": hp.r, "m": hp.m},
            "quotient_correspondence": self.quotient_correspondence,
            "refined_invariant": self.refined_invariant,
            "k_P": self.k_P, "v_P": self.v_P, "b_P": self.b_P, "r_P": self.r_P,
            "s": self.s, "t": self.t, "t_constant": self.t_constant,
            "pt_equals_kPs": self.relation_holds,
            "case": self.case,
        }


def _local_parameters(g: Graph, blocks) -> tuple[int, int, int, int]:
    """(v, k, b, r) of an arbitrary equitable-looking partition; allows singletons."""
    P = _raw_parameters(SymmetricTriple(g, None, blocks))
    return P.v, P.k, P.b, P.r


def blocks_refinement(t: SymmetricTriple, params: Parameters | None = None) -> RefinementReport:
    """Build 𝒫 = {B ∖ Γ(C)} and 𝓑̂, and check the refinement relations.

    Requires the complementary traces B ∖ Γ(C) to be pairwise disjoint
    (λ̄ = 0) and to cover each block.
    """
    P = params or parameters(t)
    if P.k == P.v:
        raise EmptyTrace("k = v: every complementary trace B \\ Γ(C) is empty")
    refined, hat = [], []
    for B, nbrs in enumerate(t.block_neighbours):
        block = set(t.partition[B])
        pieces = sorted({tuple(sorted(block - set(t.trace(B, C)))) for C in nbrs})
        for x, y in combinations(pieces, 2):
            common = set(x) & set(y)
            if common:
                raise OverlappingTraces(f"block {B}: complementary traces {list(x)} and {list(y)} share {sorted(common)}")
        covered = set().union(*map(set, pieces))
        if covered != block:
            raise IncompleteCover(f"block {B}: vertices {sorted(block - covered)} lie in no complementary trace")
        hat.append(pieces)
    order = sorted(piece for pieces in hat for piece in pieces)
    index = {piece: i for i, piece in enumerate(order)}
    hat_rows = tuple(tuple(sorted(index[pc] for pc in pieces)) for pieces in hat)
    a = len(hat_rows[0])

    refined_set = set(order)
    refined_invariant = all(tuple(sorted(g.images[x] for x in pc)) in refined_set
                            for g in t.group.generators for pc in order)
    if not refined_invariant:
        raise NotInvariant("refinement is not G-invariant")

    piece_of = {x: index[pc] for pc in order for x in pc}
    gp_edges = {(min(piece_of[u], piece_of[v]), max(piece_of[u], piece_of[v])) for u, v in t.graph.edges}
    gamma_P = Graph(len(order), sorted(gp_edges))
    # G acts on 𝒫; that action carries the hat partition.
    rows = [tuple(index[tuple(sorted(g.images[x] for x in pc))] for pc in order) for g in t.group.generators]
    hat_triple = SymmetricTriple(gamma_P, GeneratedGroup(len(order), rows), hat_rows)
    hat_params = _raw_parameters(hat_triple)

    q_edges = {(min(t.block_of[u], t.block_of[v]), max(t.block_of[u], t.block_of[v]))
               for u, v in t.graph.edges if t.block_of[u] != t.block_of[v]}
    hat_of = {pc: i for i, row in enumerate(hat_rows) for pc in row}
    hq_edges = {(min(hat_of[x], hat_of[y]), max(hat_of[x], hat_of[y])) for x, y in gamma_P.edges}
    correspondence = q_edges == hq_edges and len(hat_rows) == len(t.partition)

    v_P, k_P, b_P, r_P = _local_parameters(t.graph, order)
    # s: valency of Γ_𝒫[B̂, Ĉ]; t: 𝒫-blocks of C met by Γ(α), α ∈ B ∩ Γ(C)
    s_values, t_values = {}, {}
    adj = gamma_P.adjacency
    for B, row in enumerate(hat_rows):
        for C in t.block_neighbours[B]:
            cset = set(hat_rows[C])
            for x in row:
                d = sum(1 for y in adj[x] if y in cset)
                if d:
                    s_values[(B, C, x)] = d
            for alpha in t.trace(B, C):
                t_values[(B, C, alpha)] = len({piece_of[y] for y in t.graph.adjacency[alpha]
                                               if t.block_of[y] == C})
    s_set, t_set = set(s_values.values()), set(t_values.values())
    s = s_set.pop() if len(s_set) == 1 else None
    tt = t_values[min(t_values)] if t_values else None
    t_constant = len(t_set) == 1
    p = P.v - P.k
    relation = None if s is None or not t_constant else p * tt == k_P * s
    case = "inapplicable"
    if relation:
        if k_P == p and s == tt:
            case = "i"
        elif s % p == 0 and tt == k_P * (s // p) and 1 <= s // p <= (a - 1) // p:
            case = "ii"
    return RefinementReport(
        refined_partition=tuple(order), hat_partition=hat_rows, a=a, hat_parameters=hat_params,
        quotient_correspondence=correspondence, refined_invariant=refined_invariant,
        k_P=k_P, v_P=v_P, b_P=b_P, r_P=r_P, s=s, t=tt, t_constant=t_constant,
        relation_holds=relation, case=case, refined_graph=gamma_P)


def non_incident_blocks(t: SymmetricTriple, x: int) -> int:
    """|{C ∈ Γ_𝓑(B): x ∉ Γ(C)}| for the block B containing ``x``."""
    B = t.block_of[x]
    mine = set(t.vertex_blocks(x))
    return sum(1 for C in t.block_neighbours[B] if C not in mine)
