"""Finite simple graphs, s-arcs, symmetry tests and bipartite pattern tags."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .config import DEFAULT_LIMITS
from .errors import MalformedInput, NotAutomorphism, PreconditionViolation, TooLarge
from .permgroup import GeneratedGroup, orbit, tuple_orbit


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on 0..vertex_count-1; edges are stored as sorted pairs."""
    vertex_count: int
    edges: tuple = field(default=())

    def __post_init__(self):
        if self.vertex_count < 1:
            raise MalformedInput("graph needs at least one vertex")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise MalformedInput(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise MalformedInput(f"edge {[u, v]} has a vertex out of range")
            pair = (min(u, v), max(u, v))
            if pair in canon:
                raise MalformedInput(f"duplicate edge {list(pair)}")
            canon.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def components(self) -> list[list[int]]:
        seen, comps = set(), []
        for s in range(self.vertex_count):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), [(index[u], index[v]) for u, v in self.edges if u in index and v in index])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise MalformedInput("cycle length must be at least 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(n: int) -> Graph:
    """K_{n,n}: left part 0..n-1, right part n..2n-1."""
    return Graph(2 * n, [(i, n + j) for i in range(n) for j in range(n)])


def crown_graph(n: int) -> Graph:
    """K_{n,n} minus the perfect matching {i, n+i}."""
    return Graph(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def disjoint_copies(base: Graph, m: int) -> Graph:
    """m·Σ; copy c occupies vertices c*|V|..(c+1)*|V|-1."""
    n = base.vertex_count
    return Graph(n * m, [(u + c * n, v + c * n) for c in range(m) for u, v in base.edges])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, spokes i--i+5, inner pentagram i+5--(i+2)%5+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def build_named_graph(name: str, *params: int, base: Graph | None = None) -> Graph:
    """Build a graph from the catalog of families.

    Families: ``complete`` (n), ``cycle`` (n), ``complete_bipartite`` (n),
    ``crown`` (n; K_{n,n} minus a perfect matching), ``copies`` (m, with
    ``base``), ``petersen`` (), ``chain`` (n; the matched-cycle chain).
    """
    def need(count):
        if len(params) != count:
            raise MalformedInput(f"family {name!r} takes {count} parameter(s), got {len(params)}")

    if name == "complete":
        need(1)
        if params[0] < 1:
            raise MalformedInput("K_n needs n >= 1")
        return complete_graph(params[0])
    if name == "cycle":
        need(1)
        return cycle_graph(params[0])
    if name in ("complete_bipartite", "crown"):
        need(1)
        if params[0] < 1:
            raise MalformedInput("part size must be positive")
        return complete_bipartite(params[0]) if name == "complete_bipartite" else crown_graph(params[0])
    if name == "copies":
        need(1)
        if base is None or params[0] < 1:
            raise MalformedInput("copies needs m >= 1 and a base graph")
        return disjoint_copies(base, params[0])
    if name == "petersen":
        need(0)
        return petersen_graph()
    if name == "chain":
        need(1)
        from .constructions import matched_cycle_chain
        return matched_cycle_chain(params[0]).graph
    raise MalformedInput(f"unknown graph family {name!r}")


def s_arcs(g: Graph, s: int, budget: int = DEFAULT_LIMITS.s_arc_budget) -> list[tuple[int, ...]]:
    """All s-arcs of ``g`` in lexicographic order (s=0: vertices, s=1: arcs)."""
    if s < 0:
        raise PreconditionViolation("s must be nonnegative")
    d = max(g.degrees(), default=0)
    if g.vertex_count * d ** s > budget:
        raise TooLarge(f"s-arc estimate {g.vertex_count}*{d}^{s} exceeds {budget}")
    adj = g.adjacency
    out = []

    def extend(path):
        if len(path) == s + 1:
            out.append(tuple(path))
            return
        last = path[-1]
        prev = path[-2] if len(path) >= 2 else None
        for y in adj[last]:
            if y != prev:
                path.append(y)
                extend(path)
                path.pop()

    for v in range(g.vertex_count):
        extend([v])
    return out


def check_automorphisms(g: Graph, G: GeneratedGroup):
    """Raise NotAutomorphism naming the first generator/edge that fails."""
    if G.degree != g.vertex_count:
        raise PreconditionViolation(f"group degree {G.degree} != vertex count {g.vertex_count}")
    edges = g.edge_set
    for i, gen in enumerate(G.generators):
        im = gen.images
        for u, v in g.edges:
            a, b = im[u], im[v]
            if (min(a, b), max(a, b)) not in edges:
                raise NotAutomorphism(f"generator {i} maps edge {[u, v]} to non-edge {[a, b]}")


def is_s_arc_transitive(g: Graph, G: GeneratedGroup, s: int) -> bool:
    """(G, s)-arc transitivity; ``s=1`` is the G-symmetric test."""
    if s < 1:
        raise PreconditionViolation("s must be positive")
    check_automorphisms(g, G)
    if len(orbit(G, 0)) != g.vertex_count:
        return False
    arcs = s_arcs(g, s)
    if not arcs:
        return True
    if G.order is not None and G.order < len(arcs):
        return False
    return len(tuple_orbit(G, arcs[0])) == len(arcs)


@dataclass(frozen=True)
class BipartitePattern:
    """Shape of a bipartite graph with equal parts of size ``part``.

    kinds: ``matching`` (count·K2), ``cycles`` (count·C_length),
    ``complete`` (K_{n,n}), ``complete_minus_matching``,
    ``complete_minus_cycle`` and ``other``.
    """
    kind: str
    part: int
    count: int = 1
    length: int = 0

    def __str__(self):
        n = self.part
        if self.kind == "matching":
            return f"{self.count}·K2"
        if self.kind == "cycles":
            return f"C{self.length}" if self.count == 1 else f"{self.count}·C{self.length}"
        if self.kind == "complete":
            return f"K{n},{n}"
        if self.kind == "complete_minus_matching":
            return f"K{n},{n}-{n}·K2"
        if self.kind == "complete_minus_cycle":
            return f"K{n},{n}-C{2 * n}"
        return "other"


def _cycle_census(vertices, adj):
    """Component lengths if every vertex has degree 2, else None."""
    if any(len(adj[v]) != 2 for v in vertices):
        return None
    seen, lengths = set(), []
    for s in vertices:
        if s in seen:
            continue
        size, stack = 0, [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            size += 1
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        lengths.append(size)
    return lengths


def classify_bipartite(g: Graph, left: Iterable[int], right: Iterable[int]) -> BipartitePattern:
    left, right = sorted(set(left)), sorted(set(right))
    if set(left) & set(right):
        raise PreconditionViolation("left and right parts must be disjoint")
    lset, rset = set(left), set(right)
    adj = {v: set() for v in left + right}
    for u in left:
        for w in g.neighbours(u):
            if w in rset:
                adj[u].add(w)
                adj[w].add(u)
    n_edges = sum(len(adj[u]) for u in left)
    n = len(left)
    if n_edges == 0:
        return BipartitePattern("matching", n, count=0)
    if len(left) != len(right):
        return BipartitePattern("other", n)
    degs = {len(adj[v]) for v in adj}
    if degs == {1}:
        return BipartitePattern("matching", n, count=n_edges)
    if degs == {n}:
        return BipartitePattern("complete", n)
    lengths = _cycle_census(left + right, adj)
    if lengths is not None and len(set(lengths)) == 1:
        return BipartitePattern("cycles", n, count=len(lengths), length=lengths[0])
    comp = {v: set() for v in adj}
    for u in left:
        for w in right:
            if w not in adj[u]:
                comp[u].add(w)
                comp[w].add(u)
    cdegs = {len(comp[v]) for v in comp}
    if cdegs == {1}:
        return BipartitePattern("complete_minus_matching", n)
    clengths = _cycle_census(left + right, comp)
    if clengths is not None and clengths == [2 * n]:
        return BipartitePattern("complete_minus_cycle", n)
    return BipartitePattern("other", n)


def graph_automorphism_images(g: Graph, perm: Sequence[int]) -> bool:
    """True iff ``perm`` (an image list) maps edges to edges."""
    edges = g.edge_set
    return all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in g.edges)
