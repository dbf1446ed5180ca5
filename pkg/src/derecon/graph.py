"""Small simple undirected graphs on a fixed, labeled vertex set."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

Edge = Tuple[int, int]

DEFAULT_VERTEX_CAP = 16
_vertex_cap = DEFAULT_VERTEX_CAP


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class CapacityError(ValueError):
    """A graph exceeds the configured vertex cap."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable graph on vertices ``0..order-1``.

    Isolated vertices are part of the graph: ``Graph(3, [(0, 1)])`` is
    ``K_2 + K_1``, not ``K_2``.
    """

    order: int
    edges: frozenset

    def __init__(self, order: int, edges: Iterable[Edge] = ()):
        if order < 0:
            raise DomainError(f"negative order {order}")
        normed = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
            normed.add(_norm_edge(u, v))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(normed))

    @property
    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[int]:
        """Neighbourhoods as bitmasks, indexed by vertex."""
        adj = [0] * self.order
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def neighbors(self, v: int) -> list[int]:
        return sorted(w for e in self.edges if v in e for w in e if w != v)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def without_edge(self, e: Edge) -> "Graph":
        e = _norm_edge(*e)
        if e not in self.edges:
            raise DomainError(f"edge {e} not in graph")
        return Graph(self.order, self.edges - {e})

    def with_edge(self, e: Edge) -> "Graph":
        e = _norm_edge(*e)
        if e in self.edges:
            raise DomainError(f"edge {e} already present")
        return Graph(self.order, self.edges | {e})

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image of this graph under ``v -> perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.order)):
            raise DomainError("relabeling must be a permutation of the vertex set")
        return Graph(self.order, ((perm[u], perm[v]) for u, v in self.edges))

    def components(self) -> list[list[int]]:
        """Vertex sets of connected components, each sorted, ordered by least vertex."""
        adj = self.adjacency()
        seen = 0
        comps = []
        for s in range(self.order):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append([v for v in range(self.order) if comp >> v & 1])
        return comps

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled to ``0..k-1`` in increasing vertex order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), ((index[u], index[v]) for u, v in self.edges if u in index and v in index))

    def is_forest(self) -> bool:
        return self.size == self.order - len(self.components())

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())

    def __repr__(self) -> str:
        return f"Graph({self.order}, {self.sorted_edges()})"


def edge_degree(g: Graph, e: Edge) -> int:
    """Number of edges sharing exactly one endpoint with ``e``."""
    u, v = _norm_edge(*e)
    if (u, v) not in g.edges:
        raise DomainError(f"edge {(u, v)} not in graph")
    deg = g.degrees()
    return deg[u] + deg[v] - 2


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def vertex_cap() -> int:
    return _vertex_cap


def set_vertex_cap(cap: int) -> int:
    """Change the process-wide vertex cap; returns the previous value."""
    global _vertex_cap
    if cap < 1:
        raise DomainError("vertex cap must be positive")
    old, _vertex_cap = _vertex_cap, cap
    return old


def check_cap(g: Graph, cap: int | None = None) -> None:
    limit = _vertex_cap if cap is None else cap
    if g.order > limit:
        raise CapacityError(f"graph has {g.order} vertices, cap is {limit}")
