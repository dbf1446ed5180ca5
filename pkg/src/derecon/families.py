"""Constructors for the named graphs: paths, stars, cycles, brooms,
double-brooms (optionally with subdivided leaf edges) and the five
special confusers G1..G5.

Vertex numbering is deterministic but carries no meaning beyond the
docstrings below; compare graphs with :func:`derecon.canon.is_isomorphic`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import graph6
from .graph import DomainError, Graph, disjoint_union


@dataclass(frozen=True)
class DoubleBroomParams:
    m: int
    n: int
    p: int

    def normalized(self) -> "DoubleBroomParams":
        """Apply D(0,n,p) = D(1,n,p-1) (and its mirror); rejects stars and paths of one vertex."""
        m, n, p = self.m, self.n, self.p
        if m < 0 or n < 0:
            raise DomainError(f"negative leaf count in {self}")
        if p < 2:
            raise DomainError(f"double-broom needs p >= 2, got {p}")
        if m == 0 and n == 0:
            raise DomainError("double-broom needs m + n > 0")
        if m == 0:
            if p == 2:
                raise DomainError(f"D(0,{n},2) is a star, not a double-broom")
            m, p = 1, p - 1
        if n == 0:
            if p == 2:
                raise DomainError(f"D({m},0,2) is a star, not a double-broom")
            n, p = 1, p - 1
        return DoubleBroomParams(m, n, p)

    def sorted(self) -> "DoubleBroomParams":
        q = self.normalized()
        return DoubleBroomParams(min(q.m, q.n), max(q.m, q.n), q.p)

    @property
    def vertices(self) -> int:
        return self.m + self.n + self.p


@dataclass(frozen=True)
class SubdividedParams:
    base: DoubleBroomParams
    s: int = 0
    t: int = 0


def path(p: int) -> Graph:
    if p < 1:
        raise DomainError(f"path needs at least one vertex, got {p}")
    return Graph(p, [(i, i + 1) for i in range(p - 1)])


def star(m: int) -> Graph:
    """K_{1,m}; vertex 0 is the centre."""
    if m < 0:
        raise DomainError(f"negative leaf count {m}")
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def cycle(l: int) -> Graph:
    if l < 3:
        raise DomainError(f"cycle needs at least 3 vertices, got {l}")
    return Graph(l, [(i, (i + 1) % l) for i in range(l)])


def broom(m: int, a: int) -> Graph:
    """Path ``0..a-1`` with leaves ``a..a+m-1`` attached to vertex 0."""
    if m < 0 or a < 1:
        raise DomainError(f"broom needs m >= 0 and a >= 1, got ({m}, {a})")
    edges = [(i, i + 1) for i in range(a - 1)] + [(0, a + j) for j in range(m)]
    return Graph(m + a, edges)


def _double_broom_edges(m: int, n: int, p: int, s: int, t: int) -> tuple[int, list[tuple[int, int]]]:
    # path 0..p-1, left leaves hang off 0, right leaves off p-1; the first
    # leaf on each side is swapped for a pendant path when subdivided.
    edges = [(i, i + 1) for i in range(p - 1)]
    nxt = p
    for end, count, sub in ((0, m, s), (p - 1, n, t)):
        for j in range(count):
            prev = end
            for _ in range(sub if j == 0 else 0):
                edges.append((prev, nxt))
                prev, nxt = nxt, nxt + 1
            edges.append((prev, nxt))
            nxt += 1
    return nxt, edges


def double_broom(m: int | DoubleBroomParams, n: int | None = None, p: int | None = None) -> Graph:
    params = m if isinstance(m, DoubleBroomParams) else DoubleBroomParams(m, n, p)
    q = params.normalized()
    order, edges = _double_broom_edges(q.m, q.n, q.p, 0, 0)
    return Graph(order, edges)


def subdivided_double_broom(params: SubdividedParams | DoubleBroomParams, s: int = 0, t: int = 0) -> Graph:
    """D_{m,n,p}^{s,t}: one left leaf edge subdivided ``s`` times, one right leaf edge ``t`` times."""
    if isinstance(params, DoubleBroomParams):
        params = SubdividedParams(params, s, t)
    s, t = params.s, params.t
    if s < 0 or t < 0:
        raise DomainError("negative subdivision count")
    base = params.base
    if base.m < 0 or base.n < 0:
        raise DomainError(f"negative leaf count in {base}")
    if s and base.m == 0:
        raise DomainError("no left leaf edge to subdivide")
    if t and base.n == 0:
        raise DomainError("no right leaf edge to subdivide")
    q = base.normalized() if (s, t) == (0, 0) else base
    if q.p < 2 or (q.m == 0 and q.n == 0):
        raise DomainError(f"invalid double-broom parameters {q}")
    order, edges = _double_broom_edges(q.m, q.n, q.p, s, t)
    return Graph(order, edges)


def _pendants(g: Graph, hosts: list[int], count: int) -> Graph:
    edges = list(g.edges)
    nxt = g.order
    for h in hosts:
        for _ in range(count):
            edges.append((h, nxt))
            nxt += 1
    return Graph(nxt, edges)


def g1(m: int) -> Graph:
    """C_4 with ``m`` pendant vertices on each of two opposite cycle vertices."""
    if m < 1:
        raise DomainError("G1 needs m >= 1")
    return _pendants(cycle(4), [0, 2], m)


def g2(n: int, p: int) -> Graph:
    """C_{p+2} + K_1 with ``n - 1`` pendant vertices on one cycle vertex."""
    if n < 1 or p < 2:
        raise DomainError("G2 needs n >= 1 and p >= 2")
    base = _pendants(cycle(p + 2), [0], n - 1)
    return disjoint_union(base, Graph(1))


def g3(n: int, p: int) -> Graph:
    """D_{2,n,p} + K_1 plus an edge from a left leaf to the path vertex three steps away."""
    if n < 1 or p < 4:
        raise DomainError("G3 needs n >= 1 and p >= 4")
    d = double_broom(2, n, p)
    # vertex p is a left leaf (adjacent to path vertex 0); distance 3 reaches path vertex 2
    return disjoint_union(d.with_edge((p, 2)), Graph(1))


def g4(m: int, p: int) -> Graph:
    """C_{p-1} + B_{m,2} with ``m - 1`` pendant vertices on one cycle vertex."""
    if m < 1 or p < 4:
        raise DomainError("G4 needs m >= 1 and p >= 4")
    return disjoint_union(_pendants(cycle(p - 1), [0], m - 1), broom(m, 2))


def g5(m: int, p: int) -> Graph:
    """C_{p+1} + K_1 with ``m`` pendants on each of two cycle vertices sharing a neighbour."""
    if m < 1 or p < 2:
        raise DomainError("G5 needs m >= 1 and p >= 2")
    return disjoint_union(_pendants(cycle(p + 1), [0, 2], m), Graph(1))


COUNTEREXAMPLES = {"G1": g1, "G2": g2, "G3": g3, "G4": g4, "G5": g5}


def counterexample(name: str, *args: int) -> Graph:
    try:
        ctor = COUNTEREXAMPLES[name.upper()]
    except KeyError:
        raise DomainError(f"unknown counterexample {name!r}") from None
    return ctor(*args)


_CONSTRUCTORS = {
    "dbroom": (double_broom, 3),
    "sdbroom": (lambda m, n, p, s, t: subdivided_double_broom(DoubleBroomParams(m, n, p), s, t), 5),
    "broom": (broom, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "empty": (Graph, 1),
    "g1": (g1, 1),
    "g2": (g2, 2),
    "g3": (g3, 2),
    "g4": (g4, 2),
    "g5": (g5, 2),
}

_TERM = re.compile(r"^([a-z]+\d?)(?::(\d+(?:,\d+)*))?$")


def _parse_term(term: str) -> Graph:
    if term == "k1":
        return Graph(1)
    if term.startswith("g6="):
        return graph6.decode(term[3:])
    match = _TERM.match(term)
    if not match or match.group(1) not in _CONSTRUCTORS:
        raise DomainError(f"cannot parse graph term {term!r}")
    ctor, arity = _CONSTRUCTORS[match.group(1)]
    args = [int(x) for x in match.group(2).split(",")] if match.group(2) else []
    if len(args) != arity:
        raise DomainError(f"{match.group(1)} takes {arity} parameter(s), got {len(args)}")
    return ctor(*args)


def parse_family(text: str) -> Graph:
    """Parse ``dbroom:1,2,4``, ``g1:2+k1``, ``cycle:5+broom:1,1`` ... into a graph.

    Terms are joined by ``+`` (disjoint union) left to right; whitespace is
    ignored.  ``g6=<graph6>`` embeds a literal graph.
    """
    spec = "".join(text.split())
    if not spec:
        raise DomainError("empty graph specification")
    out = Graph(0)
    for term in spec.split("+"):
        out = disjoint_union(out, _parse_term(term if term.startswith("g6=") else term.lower()))
    return out
