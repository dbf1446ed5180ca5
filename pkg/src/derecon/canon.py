"""Canonical labeling by colour refinement with individualization.

The search tree is the usual one: refine the unit partition to an
equitable ordered partition, pick the first non-singleton cell,
individualize each of its vertices in turn and recurse.  Every leaf is a
discrete partition, i.e. a labeling; the canonical form is the labeling
whose graph6 string is lexicographically smallest.  Subtrees are pruned
with automorphisms discovered at equal leaves (jump back to the common
ancestor) and with orbits of the pointwise stabilizer of the current
individualized prefix.
"""
from __future__ import annotations

from functools import lru_cache

from . import graph6
from .graph import DomainError, Graph, check_cap

CanonicalForm = str


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _code(adj: list[int], lab: list[int]) -> int:
    val = 0
    for j in range(1, len(lab)):
        row = adj[lab[j]]
        for i in range(j):
            val = (val << 1) | ((row >> lab[i]) & 1)
    return val


def _orbit_root(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _orbits(n: int, gens: list[list[int]], fixed: list[int]) -> list[int]:
    parent = list(range(n))
    for gamma in gens:
        if any(gamma[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = _orbit_root(parent, v), _orbit_root(parent, gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [_orbit_root(parent, v) for v in range(n)]


class _Search:
    def __init__(self, adj: list[int]):
        self.adj = adj
        self.n = len(adj)
        self.gens: list[list[int]] = []
        self.first: tuple[list[int], list[int], int] | None = None
        self.best: tuple[list[int], list[int], int] | None = None

    def _automorphism(self, other_lab: list[int], lab: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(other_lab, lab):
            gamma[a] = b
        self.gens.append(gamma)

    def leaf(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        lab = [c[0] for c in cells]
        code = _code(self.adj, lab)
        if self.first is None:
            self.first = self.best = (lab, list(prefix), code)
            return None
        for ref_lab, ref_prefix, ref_code in (self.first, self.best):
            if code == ref_code:
                self._automorphism(ref_lab, lab)
                k = 0
                while k < len(prefix) and k < len(ref_prefix) and prefix[k] == ref_prefix[k]:
                    k += 1
                return k
        if code < self.best[2]:
            self.best = (lab, list(prefix), code)
        return None

    def run(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        cells = _refine(self.adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self.leaf(cells, prefix)
        depth = len(prefix)
        explored: list[int] = []
        for w in cells[target]:
            if explored:
                orb = _orbits(self.n, self.gens, prefix)
                if any(orb[w] == orb[u] for u in explored):
                    continue
            explored.append(w)
            rest = [v for v in cells[target] if v != w]
            child = cells[:target] + [[w], rest] + cells[target + 1:]
            prefix.append(w)
            jump = self.run(child, prefix)
            prefix.pop()
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_labeling(g: Graph, colouring: list[list[int]] | None = None) -> list[int]:
    """Return ``lab`` with ``lab[i]`` the original vertex placed at position ``i``.

    ``colouring`` is an optional ordered partition of the vertices; the
    labeling is then canonical for the coloured graph (isomorphisms must
    map the i-th colour class onto the i-th colour class).
    """
    check_cap(g)
    if g.order == 0:
        return []
    cells = [list(c) for c in colouring if c] if colouring else [list(range(g.order))]
    if sorted(v for c in cells for v in c) != list(range(g.order)):
        raise DomainError("colouring must partition the vertex set")
    s = _Search(g.adjacency())
    s.run(cells, [])
    return list(s.best[0])


def coloured_form(g: Graph, colouring: list[list[int]]) -> tuple[tuple[int, ...], CanonicalForm]:
    """Canonical key of a vertex-coloured graph: colour class sizes plus the graph6 of the relabeling."""
    lab = canonical_labeling(g, colouring)
    adj = g.adjacency()
    sizes = tuple(len(c) for c in colouring if c)
    return sizes, graph6.encode_bits(g.order, [(adj[lab[j]] >> lab[i]) & 1 for j in range(1, g.order) for i in range(j)])


@lru_cache(maxsize=1 << 18)
def _canonical_form(g: Graph) -> CanonicalForm:
    lab = canonical_labeling(g)
    adj = g.adjacency()
    return graph6.encode_bits(g.order, [(adj[lab[j]] >> lab[i]) & 1 for j in range(1, g.order) for i in range(j)])


def canonical_form(g: Graph) -> CanonicalForm:
    """graph6 string of the canonically relabeled graph; equal iff isomorphic."""
    check_cap(g)
    return _canonical_form(g)


def canonical_graph(g: Graph) -> Graph:
    return graph6.decode(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    check_cap(g)
    check_cap(h)
    if g.order != h.order or g.size != h.size:
        return False
    return canonical_form(g) == canonical_form(h)


def component_profiles(g: Graph) -> list[CanonicalForm]:
    """Canonical keys of the connected components, sorted (a multiset as a list)."""
    check_cap(g)
    return sorted(canonical_form(g.induced(c)) for c in g.components())
