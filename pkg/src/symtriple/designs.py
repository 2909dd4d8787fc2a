"""Incidence structures: D(B) and its relatives, t-design checks, isomorphism search.

Blocks form a multiset; they are stored as sorted tuples and the list of
blocks is itself sorted, so two structures with the same canonical form
compare equal. Optional ``labels`` ride along with the blocks (one label per
block) and record provenance, e.g. which original point a dual block came
from.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .config import DEFAULT_LIMITS
from .errors import MalformedInput, NotAutomorphism, PreconditionViolation, TooLarge
from .permgroup import GeneratedGroup, Permutation, is_k_transitive, tuple_orbit


@dataclass(frozen=True)
class IncidenceStructure:
    point_count: int
    blocks: tuple
    labels: tuple | None = None

    def __post_init__(self):
        if self.point_count < 1:
            raise MalformedInput("incidence structure needs at least one point")
        blocks = [tuple(sorted(set(b))) for b in self.blocks]
        for b in blocks:
            if any(not 0 <= x < self.point_count for x in b):
                raise MalformedInput(f"block {list(b)} has a point outside 0..{self.point_count - 1}")
        if self.labels is None:
            object.__setattr__(self, "blocks", tuple(sorted(blocks)))
        else:
            if len(self.labels) != len(blocks):
                raise MalformedInput("one label per block required")
            pairs = sorted(zip(blocks, self.labels))
            object.__setattr__(self, "blocks", tuple(b for b, _ in pairs))
            object.__setattr__(self, "labels", tuple(lab for _, lab in pairs))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def replication(self) -> list[int]:
        counts = [0] * self.point_count
        for b in self.blocks:
            for x in b:
                counts[x] += 1
        return counts

    def flags(self) -> list[tuple[int, int]]:
        return [(x, j) for j, b in enumerate(self.blocks) for x in b]

    def unlabelled(self) -> IncidenceStructure:
        return IncidenceStructure(self.point_count, self.blocks)


def complement(d: IncidenceStructure) -> IncidenceStructure:
    pts = set(range(d.point_count))
    return IncidenceStructure(d.point_count, [tuple(sorted(pts - set(b))) for b in d.blocks], d.labels)


def dual(d: IncidenceStructure) -> IncidenceStructure:
    """Swap points and blocks. Dual points are the block positions 0..b-1;
    dual block ``x`` is labelled with the original point ``x``."""
    if not d.blocks:
        raise PreconditionViolation("dual of a structure with no blocks")
    rows = [[j for j, b in enumerate(d.blocks) if x in b] for x in range(d.point_count)]
    return IncidenceStructure(len(d.blocks), rows, tuple(range(d.point_count)))


def relabel_points(d: IncidenceStructure, mapping: Sequence[int]) -> IncidenceStructure:
    """Apply the point map ``x -> mapping[x]``."""
    if sorted(mapping) != list(range(d.point_count)):
        raise MalformedInput("mapping must be a bijection of the points")
    return IncidenceStructure(d.point_count, [[mapping[x] for x in b] for b in d.blocks], d.labels)


@dataclass(frozen=True)
class DesignParameters:
    t: int
    v: int
    k: int
    lam: int
    block_count: int
    replication: int

    def as_dict(self):
        return {"t": self.t, "v": self.v, "k": self.k, "lambda": self.lam,
                "blocks": self.block_count, "replication": self.replication}


def is_t_design(d: IncidenceStructure, t: int) -> DesignParameters | None:
    """Parameters if ``d`` is a t-(v, k, λ) design, else None."""
    if t < 1 or t > d.point_count:
        raise PreconditionViolation(f"t={t} outside 1..{d.point_count}")
    sizes = {len(b) for b in d.blocks}
    if len(sizes) != 1:
        return None
    k = sizes.pop()
    counts = Counter()
    for b in d.blocks:
        for sub in combinations(b, t):
            counts[sub] += 1
    total = comb(d.point_count, t)
    if len(counts) != total and counts:
        return None
    values = set(counts.values()) or {0}
    if len(values) != 1:
        return None
    lam = values.pop()
    reps = set(d.replication())
    if len(reps) != 1:
        return None
    params = DesignParameters(t, d.point_count, k, lam, len(d.blocks), reps.pop())
    assert lam * comb(d.point_count, t) == len(d.blocks) * comb(k, t)
    return params


def _signature(d: IncidenceStructure):
    return (d.point_count, sorted(len(b) for b in d.blocks), sorted(d.replication()))


def design_isomorphisms(d1: IncidenceStructure, d2: IncidenceStructure,
                        max_points: int = DEFAULT_LIMITS.isomorphism_max_points) -> Iterator[list[int]]:
    """Yield every point bijection carrying the block multiset of d1 onto d2.

    Backtracking over points in order; candidates are restricted to points of
    equal replication, and after each assignment the multiset of partial block
    images (B ∩ mapped domain) must match on both sides.
    """
    if d1.point_count > max_points or d2.point_count > max_points:
        raise TooLarge(f"isomorphism search limited to {max_points} points")
    if _signature(d1) != _signature(d2):
        return
    n = d1.point_count
    rep1, rep2 = d1.replication(), d2.replication()
    # order points so that highly constrained ones come first
    incid1 = [[j for j, b in enumerate(d1.blocks) if x in b] for x in range(n)]
    order = []
    remaining = set(range(n))
    while remaining:
        placed = set(order)
        # prefer points sharing many blocks with already placed points
        best = max(remaining, key=lambda x: (sum(1 for j in incid1[x] if placed & set(d1.blocks[j])), -x))
        order.append(best)
        remaining.remove(best)
    blocks1 = [set(b) for b in d1.blocks]
    blocks2 = [set(b) for b in d2.blocks]
    mapping = [-1] * n
    used = [False] * n

    def consistent(depth):
        dom = order[:depth + 1]
        img = {mapping[x] for x in dom}
        left = Counter(tuple(sorted(mapping[x] for x in dom if x in b)) for b in blocks1)
        right = Counter(tuple(sorted(y for y in b if y in img)) for b in blocks2)
        return left == right

    def search(depth):
        if depth == n:
            yield list(mapping)
            return
        x = order[depth]
        for y in range(n):
            if used[y] or rep2[y] != rep1[x]:
                continue
            mapping[x] = y
            used[y] = True
            if consistent(depth):
                yield from search(depth + 1)
            used[y] = False
            mapping[x] = -1

    yield from search(0)


def design_isomorphic(d1: IncidenceStructure, d2: IncidenceStructure,
                      max_points: int = DEFAULT_LIMITS.isomorphism_max_points):
    """``(point_map, block_map)`` or None. Repeated blocks are matched in order."""
    for pm in design_isomorphisms(d1, d2, max_points):
        pending = {}
        for j, b in enumerate(d2.blocks):
            pending.setdefault(b, []).append(j)
        block_map = []
        for b in d1.blocks:
            image = tuple(sorted(pm[x] for x in b))
            block_map.append(pending[image].pop(0))
        return pm, block_map
    return None


def automorphism_group(d: IncidenceStructure) -> GeneratedGroup:
    """All point permutations preserving the block multiset (by isomorphism search)."""
    elems = [Permutation(tuple(pm)) for pm in design_isomorphisms(d, d)]
    return GeneratedGroup.from_elements(d.point_count, elems)


def preserves_blocks(d: IncidenceStructure, g: Permutation) -> bool:
    image = sorted(tuple(sorted(g.images[x] for x in b)) for b in d.blocks)
    return image == list(d.blocks)


@dataclass(frozen=True)
class AutomorphismReport:
    automorphisms: bool
    point_transitive: bool
    point_two_transitive: bool
    block_transitive: bool
    flag_transitive: bool

    def as_dict(self):
        return dict(self.__dict__)


def two_transitive_automorphism_check(d: IncidenceStructure, G: GeneratedGroup) -> AutomorphismReport:
    if G.degree != d.point_count:
        raise PreconditionViolation(f"group degree {G.degree} != point count {d.point_count}")
    for i, g in enumerate(G.generators):
        if not preserves_blocks(d, g):
            raise NotAutomorphism(f"generator {i} does not preserve the block multiset")
    pts = range(d.point_count)
    distinct_blocks = sorted(set(d.blocks))
    # blocks and flags are acted on through their point sets
    block_orbit = _set_orbit(G, distinct_blocks[0]) if distinct_blocks else set()
    flags = {(x, b) for b in distinct_blocks for x in b}
    flag_orbit = _flag_orbit(G, next(iter(sorted(flags)))) if flags else set()
    return AutomorphismReport(
        automorphisms=True,
        point_transitive=is_k_transitive(G, pts, 1),
        point_two_transitive=d.point_count >= 2 and is_k_transitive(G, pts, 2),
        block_transitive=len(block_orbit) == len(distinct_blocks),
        flag_transitive=len(flag_orbit) == len(flags),
    )


def _set_orbit(G, block):
    gens = [g.images for g in G.generators]
    start = tuple(block)
    seen, stack = {start}, [start]
    while stack:
        b = stack.pop()
        for g in gens:
            c = tuple(sorted(g[x] for x in b))
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return seen


def _flag_orbit(G, flag):
    gens = [g.images for g in G.generators]
    seen, stack = {flag}, [flag]
    while stack:
        x, b = stack.pop()
        for g in gens:
            f = (g[x], tuple(sorted(g[y] for y in b)))
            if f not in seen:
                seen.add(f)
                stack.append(f)
    return seen


def fano_plane() -> IncidenceStructure:
    """Lines {i, i+1, i+3} mod 7."""
    return IncidenceStructure(7, [((i) % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)])


def trivial_pairs_design(n: int) -> IncidenceStructure:
    """All 2-subsets of n points (K_n viewed as a design)."""
    return IncidenceStructure(n, list(combinations(range(n), 2)))


DESIGN_KINDS = ("D", "complement", "dual", "complement-dual")


def design_from_triple(t, block: int, kind: str = "D") -> IncidenceStructure:
    """D(B) and its complement, dual and complement-dual for block index ``block``.

    For ``D``/``complement`` the points are the vertices of B by position and
    each block is labelled with the neighbouring block C it comes from. For the
    dual kinds the points are the neighbouring blocks by position in Γ_𝓑(B)
    and each block is labelled with the vertex α it comes from.
    """
    if not 0 <= block < len(t.partition):
        raise PreconditionViolation(f"invalid block index {block}")
    nbrs = t.block_neighbours[block]
    if not nbrs:
        raise PreconditionViolation("quotient valency must be at least 1")
    verts = t.partition[block]
    pos = {x: i for i, x in enumerate(verts)}
    if kind in ("D", "complement"):
        rows = []
        for C in nbrs:
            tr = {pos[x] for x in t.trace(block, C)}
            rows.append(tr if kind == "D" else set(range(len(verts))) - tr)
        return IncidenceStructure(len(verts), rows, tuple(nbrs))
    if kind in ("dual", "complement-dual"):
        npos = {C: i for i, C in enumerate(nbrs)}
        rows = []
        for x in verts:
            mine = {npos[C] for C in t.vertex_blocks(x) if C in npos}
            rows.append(mine if kind == "dual" else set(range(len(nbrs))) - mine)
        return IncidenceStructure(len(nbrs), rows, tuple(verts))
    raise PreconditionViolation(f"unknown design kind {kind!r}; expected one of {DESIGN_KINDS}")
