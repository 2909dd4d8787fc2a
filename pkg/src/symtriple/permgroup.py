"""Exact permutation groups on {0, ..., n-1}, given by generators.

Everything here is enumeration based: a group is closed under its generators
by breadth-first search and subgroups are found by filtering the element
list. That is plenty for the desk-scale groups this package deals with
(orders up to a few thousand) and keeps results deterministic.

Composition convention: ``compose(p, q)`` applies ``q`` first, then ``p``,
i.e. ``compose(p, q)(x) == p(q(x))``. Points act on the right in the
mathematical sense (``x^g``), which for us is simply ``g(x)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations as _iter_permutations
from typing import Callable, Iterable, Sequence

from .config import DEFAULT_LIMITS
from .errors import ExceedsBound, MalformedInput, NotInvariant, PreconditionViolation

Images = tuple  # tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    images: Images

    def __post_init__(self):
        images = tuple(self.images)
        if not images:
            raise MalformedInput("permutation of degree 0")
        if sorted(images) != list(range(len(images))):
            raise MalformedInput(f"not a bijection of 0..{len(images) - 1}: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, images: Images) -> Permutation:
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(degree))
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose_inverse(self, other)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                seen.add(x)
                cycle.append(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __repr__(self):
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"
        return f"Permutation[{self.degree}]{body}"


def _mul(p: Images, q: Images) -> Images:
    # apply q first, then p
    return tuple(p[x] for x in q)


def _inv(p: Images) -> Images:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def compose_inverse(p: Permutation, q: Permutation | None = None) -> Permutation:
    """Return ``p∘q`` (q applied first) or, when ``q`` is omitted, ``p⁻¹``."""
    if q is None:
        return Permutation._trusted(_inv(p.images))
    if p.degree != q.degree:
        raise MalformedInput(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation._trusted(_mul(p.images, q.images))


class GeneratedGroup:
    """A permutation group given by generators, with a lazily cached element list."""

    def __init__(self, degree: int, generators: Iterable[Permutation | Sequence[int]] = (),
                 elements: Iterable[Permutation] | None = None):
        if degree < 1:
            raise MalformedInput("group degree must be positive")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(tuple(g))
            if g.degree != degree:
                raise MalformedInput(f"generator of degree {g.degree} in a group of degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._elements: tuple[Permutation, ...] | None = None
        if elements is not None:
            self._elements = tuple(sorted(elements))

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation]) -> GeneratedGroup:
        """A group whose generating set is its own (already closed) element list."""
        elems = sorted(set(elements))
        return cls(degree, elems, elements=elems)

    @property
    def elements(self) -> tuple[Permutation, ...] | None:
        return self._elements

    @property
    def order(self) -> int | None:
        return None if self._elements is None else len(self._elements)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def _gen_images(self) -> list[Images]:
        return sorted({g.images for g in self.generators if not g.is_identity()})

    def __repr__(self):
        return f"GeneratedGroup(degree={self.degree}, generators={len(self.generators)}, order={self.order})"


def enumerate_group(G: GeneratedGroup, bound: int = DEFAULT_LIMITS.enumeration_bound):
    """Close ``G`` under its generators; returns ``(elements, order)``.

    Elements come back sorted by image sequence and are cached on ``G``.
    Raises ExceedsBound once more than ``bound`` elements have been found.
    """
    if bound < 1:
        raise PreconditionViolation("bound must be at least 1")
    if G._elements is not None:
        if len(G._elements) > bound:
            raise ExceedsBound(f"group order {len(G._elements)} exceeds bound {bound}")
        return G._elements, len(G._elements)
    gens = G._gen_images()
    ident = tuple(range(G.degree))
    seen = {ident}
    queue = deque([ident])
    while queue:
        h = queue.popleft()
        for g in gens:
            x = tuple(g[i] for i in h)  # h then g
            if x not in seen:
                seen.add(x)
                if len(seen) > bound:
                    raise ExceedsBound(f"group closure passed {bound} elements")
                queue.append(x)
    G._elements = tuple(Permutation._trusted(x) for x in sorted(seen))
    return G._elements, len(G._elements)


def group_order(G: GeneratedGroup, bound: int = DEFAULT_LIMITS.enumeration_bound) -> int:
    return enumerate_group(G, bound)[1]


def _check_point(G: GeneratedGroup, x: int):
    if not 0 <= x < G.degree:
        raise PreconditionViolation(f"point {x} out of range for degree {G.degree}")


def orbit(G: GeneratedGroup, point: int) -> list[int]:
    _check_point(G, point)
    gens = G._gen_images()
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def orbits(G: GeneratedGroup) -> list[list[int]]:
    done, out = set(), []
    for x in range(G.degree):
        if x not in done:
            o = orbit(G, x)
            done.update(o)
            out.append(o)
    return out


def tuple_orbit(G: GeneratedGroup, start: Sequence[int]) -> set[tuple]:
    """Orbit of a tuple of points under the componentwise action."""
    start = tuple(start)
    if G._elements is not None and len(G.generators) > 8:
        return {tuple(g.images[x] for x in start) for g in G._elements}
    gens = G._gen_images()
    seen = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for g in gens:
            u = tuple(g[x] for x in t)
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def preserves(G: GeneratedGroup, domain: Iterable[int]) -> bool:
    dom = set(domain)
    return all(g.images[x] in dom for g in G.generators for x in dom)


def is_k_transitive(G: GeneratedGroup, domain: Sequence[int], k: int) -> bool:
    """True iff ``G`` is transitive on ordered k-tuples of distinct points of ``domain``."""
    domain = sorted(set(domain))
    if k < 0 or k > len(domain):
        raise PreconditionViolation(f"k={k} outside 0..{len(domain)}")
    for x in domain:
        _check_point(G, x)
    if not preserves(G, domain):
        raise PreconditionViolation("group does not preserve the domain setwise")
    if k == 0:
        return True
    n = len(domain)
    needed = 1
    for i in range(k):
        needed *= n - i
    if G.order is not None and G.order < needed:
        return False
    return len(tuple_orbit(G, domain[:k])) == needed


def transitivity_degree(G: GeneratedGroup, domain: Sequence[int], cap: int = DEFAULT_LIMITS.transitivity_probe) -> int:
    """Largest k <= cap with G k-transitive on ``domain``."""
    domain = sorted(set(domain))
    best = 0
    for k in range(1, min(cap, len(domain)) + 1):
        if not is_k_transitive(G, domain, k):
            break
        best = k
    return best


def stabilizer(G: GeneratedGroup, target, mode: str = "point",
               bound: int = DEFAULT_LIMITS.enumeration_bound) -> GeneratedGroup:
    """Subgroup fixing ``target``; ``mode`` is 'point', 'setwise' or 'pointwise'."""
    elements, _ = enumerate_group(G, bound)
    if mode == "point":
        _check_point(G, target)
        keep = [g for g in elements if g.images[target] == target]
    elif mode == "setwise":
        pts = set(target)
        keep = [g for g in elements if all(g.images[x] in pts for x in pts)]
    elif mode == "pointwise":
        pts = list(target)
        keep = [g for g in elements if all(g.images[x] == x for x in pts)]
    else:
        raise PreconditionViolation(f"unknown stabilizer mode {mode!r}")
    return GeneratedGroup.from_elements(G.degree, keep)


@dataclass(frozen=True)
class ActionTable:
    """The action of ``group`` on an abstract domain {0..domain_size-1}.

    ``images[i]`` is the permutation of the domain induced by generator ``i``.
    When the group has cached elements, ``element_images`` holds the image of
    each element in the same order.
    """
    domain_size: int
    group: GeneratedGroup
    images: tuple[Images, ...]
    element_images: tuple[Images, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        for row in self.images:
            if sorted(row) != list(range(self.domain_size)):
                raise MalformedInput("action row is not a bijection of the domain")

    def image(self, generator_index: int, point: int) -> int:
        return self.images[generator_index][point]

    def image_group(self, bound: int = DEFAULT_LIMITS.enumeration_bound) -> GeneratedGroup:
        """The permutation group induced on the domain (``G^Ω``)."""
        if self.element_images is not None:
            return GeneratedGroup.from_elements(
                self.domain_size, (Permutation._trusted(x) for x in set(self.element_images)))
        H = GeneratedGroup(self.domain_size, (Permutation._trusted(r) for r in self.images))
        enumerate_group(H, bound)
        return H

    def verify_homomorphism(self, bound: int = DEFAULT_LIMITS.enumeration_bound) -> bool:
        """Check that generator -> row extends to a well-defined homomorphism.

        Walks the closure of pairs (g, row(g)); the map is well defined iff no
        group element is reached with two different images.
        """
        pairs = list(zip((g.images for g in self.group.generators), self.images))
        n = self.group.degree
        start = (tuple(range(n)), tuple(range(self.domain_size)))
        image_of = {start[0]: start[1]}
        queue = deque([start])
        while queue:
            h, hi = queue.popleft()
            for g, gi in pairs:
                x = tuple(g[i] for i in h)
                xi = tuple(gi[i] for i in hi)
                known = image_of.get(x)
                if known is None:
                    image_of[x] = xi
                    if len(image_of) > bound:
                        raise ExceedsBound(f"closure passed {bound} elements")
                    queue.append((x, xi))
                elif known != xi:
                    return False
        return True


def action_from_map(G: GeneratedGroup, domain_size: int, act: Callable[[Images], Images]) -> ActionTable:
    rows = tuple(act(g.images) for g in G.generators)
    elem_rows = None
    if G.elements is not None:
        elem_rows = tuple(act(g.images) for g in G.elements)
    return ActionTable(domain_size, G, rows, elem_rows)


def restricted_action(G: GeneratedGroup, points: Sequence[int]) -> ActionTable:
    """Action of ``G`` on the invariant point set ``points`` (relabelled by position)."""
    points = list(points)
    index = {x: i for i, x in enumerate(points)}
    if not preserves(G, points):
        raise NotInvariant("group does not preserve the point set")

    def act(g):
        return tuple(index[g[x]] for x in points)

    return action_from_map(G, len(points), act)


def _block_index(blocks: Sequence[Sequence[int]], degree: int) -> dict[int, int]:
    block_of = {}
    for i, b in enumerate(blocks):
        for x in b:
            if x in block_of:
                raise MalformedInput(f"point {x} lies in two blocks")
            block_of[x] = i
    return block_of


def block_action(G: GeneratedGroup, blocks: Sequence[Sequence[int]], block_subset: Sequence[int] | None = None) -> ActionTable:
    """Action on (a subset of) the blocks of an invariant partition."""
    block_of = _block_index(blocks, G.degree)
    for gi, g in enumerate(G.generators):
        for bi, b in enumerate(blocks):
            targets = {block_of.get(g.images[x]) for x in b}
            if len(targets) != 1 or None in targets or len(blocks[targets.pop()]) != len(b):
                raise NotInvariant(f"generator {gi} splits block {bi} {sorted(b)}")
    if block_subset is None:
        block_subset = range(len(blocks))
    block_subset = list(block_subset)
    index = {b: i for i, b in enumerate(block_subset)}
    reps = [blocks[b][0] for b in block_subset]

    def act(g):
        return tuple(index[block_of[g[x]]] for x in reps)

    try:
        return action_from_map(G, len(block_subset), act)
    except KeyError:
        raise NotInvariant("group does not preserve the chosen set of blocks") from None


def induced_action(G: GeneratedGroup, blocks: Sequence[Sequence[int]],
                   bound: int = DEFAULT_LIMITS.enumeration_bound):
    """Action of ``G`` on the blocks of an invariant partition, plus its kernel.

    Returns ``(ActionTable, kernel)`` where the kernel is the subgroup fixing
    every block setwise.
    """
    enumerate_group(G, bound)
    table = block_action(G, blocks)
    block_of = _block_index(blocks, G.degree)
    kernel = [g for g in G.elements if all(block_of[g.images[x]] == block_of[x] for x in block_of)]
    return table, GeneratedGroup.from_elements(G.degree, kernel)


def equivariant_bijection(G: GeneratedGroup, act1: ActionTable, act2: ActionTable) -> dict[int, int] | None:
    """Find ρ with ρ(x^g) = ρ(x)^g for all g, or None.

    The graph of ρ is a union of orbits of ``G`` on domain1 x domain2 (diagonal
    action), one per G-orbit of domain1. Each orbit O1 is matched by backtracking
    to an unused orbit O2 through a diagonal orbit that is the graph of a
    bijection O1 -> O2. Only the identity group isomorphism is considered.
    """
    if act1.group is not act2.group:
        raise PreconditionViolation("actions must share the same group")
    n = act1.domain_size
    if n != act2.domain_size:
        return None
    rows = list(zip(act1.images, act2.images))
    orbits1 = _domain_orbits(act1.images, n)
    orbits2 = _domain_orbits(act2.images, n)

    def diagonal(x, y):
        orb, stack = {(x, y)}, [(x, y)]
        while stack:
            a, b = stack.pop()
            for r1, r2 in rows:
                nxt = (r1[a], r2[b])
                if nxt not in orb:
                    orb.add(nxt)
                    stack.append(nxt)
        return orb

    used = [False] * len(orbits2)
    chosen: dict[int, int] = {}

    def search(i):
        if i == len(orbits1):
            return True
        o1 = orbits1[i]
        x = o1[0]
        for j, o2 in enumerate(orbits2):
            if used[j] or len(o2) != len(o1):
                continue
            for y in o2:
                orb = diagonal(x, y)
                if len(orb) == len(o1) and len({b for _, b in orb}) == len(o1):
                    used[j] = True
                    chosen.update(orb)
                    if search(i + 1):
                        return True
                    for a, _ in orb:
                        del chosen[a]
                    used[j] = False
        return False

    if not search(0):
        return None
    rho = dict(sorted(chosen.items()))
    assert all(r2[rho[a]] == rho[r1[a]] for r1, r2 in rows for a in range(n))
    return rho


def _domain_orbits(rows, n):
    seen, out = set(), []
    for x in range(n):
        if x in seen:
            continue
        orb, stack = {x}, [x]
        while stack:
            a = stack.pop()
            for r in rows:
                if r[a] not in orb:
                    orb.add(r[a])
                    stack.append(r[a])
        seen |= orb
        out.append(sorted(orb))
    return out


def symmetric_group(n: int) -> GeneratedGroup:
    if n == 1:
        return GeneratedGroup(1, [Permutation.identity(1)])
    if n == 2:
        return GeneratedGroup(2, [Permutation((1, 0))])
    return GeneratedGroup(n, [Permutation.from_cycles(n, (0, 1)), Permutation.from_cycles(n, tuple(range(n)))])


def alternating_group(n: int) -> GeneratedGroup:
    if n < 3:
        return GeneratedGroup(n, [Permutation.identity(n)])
    return GeneratedGroup(n, [Permutation.from_cycles(n, (i, i + 1, i + 2)) for i in range(n - 2)])


def cyclic_group(n: int) -> GeneratedGroup:
    return GeneratedGroup(n, [Permutation.from_cycles(n, tuple(range(n)))])


def dihedral_group(n: int) -> GeneratedGroup:
    """Dihedral group of order 2n acting on the n-gon 0..n-1."""
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    ref = Permutation(tuple((-i) % n for i in range(n)))
    return GeneratedGroup(n, [rot, ref])


def all_permutations(n: int) -> list[Permutation]:
    """Every permutation of 0..n-1; an independent oracle for small tests."""
    return [Permutation._trusted(p) for p in _iter_permutations(range(n))]
