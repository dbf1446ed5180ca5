"""Decards, dedecks and the leaf/middle/hub edge taxonomy."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .canon import CanonicalForm, canonical_form
from .families import DoubleBroomParams
from .graph import DomainError, Edge, Graph, check_cap, edge_degree


class Decard(NamedTuple):
    card: CanonicalForm
    missing_degree: int


class EdgeClass(enum.Enum):
    LEAF = "leaf"
    MIDDLE = "middle"
    HUB = "hub"


@dataclass(frozen=True)
class Dedeck:
    """Multiset of decards with explicit multiplicities.

    ``entries`` is stored sorted by (card key, degree), which is also the
    serialization order and the class order used by searches.
    """

    entries: tuple[tuple[Decard, int], ...]
    source_order: int
    source_size: int
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", dict(self.entries))

    @classmethod
    def from_counts(cls, counts: Mapping[Decard, int], source_order: int, source_size: int) -> "Dedeck":
        items = tuple(sorted((Decard(*d), k) for d, k in counts.items() if k > 0))
        if sum(k for _, k in items) != source_size:
            raise DomainError("multiplicities do not sum to the edge count")
        return cls(items, source_order, source_size)

    @property
    def classes(self) -> list[Decard]:
        return [d for d, _ in self.entries]

    @property
    def multiplicities(self) -> list[int]:
        return [k for _, k in self.entries]

    @property
    def total(self) -> int:
        return self.source_size

    def count(self, d: Decard) -> int:
        return self._index.get(d, 0)

    def counter(self) -> Counter:
        return Counter(self._index)

    def __contains__(self, d) -> bool:
        return d in self._index

    def __len__(self) -> int:
        return len(self.entries)

    def serialize(self) -> str:
        return "".join(f"{d.card} {d.missing_degree} {k}\n" for d, k in self.entries)

    @classmethod
    def parse(cls, text: str) -> "Dedeck":
        from . import graph6

        counts: dict[Decard, int] = {}
        order = None
        for line in text.splitlines():
            if not line.strip():
                continue
            key, deg, mult = line.split()
            card = graph6.decode(key)
            order = card.order
            counts[Decard(key, int(deg))] = counts.get(Decard(key, int(deg)), 0) + int(mult)
        if order is None:
            raise DomainError("empty dedeck text")
        return cls.from_counts(counts, order, sum(counts.values()))


def decard(g: Graph, e: Edge) -> Decard:
    return Decard(canonical_form(g.without_edge(e)), edge_degree(g, e))


def dedeck(g: Graph) -> Dedeck:
    check_cap(g)
    if g.size == 0:
        raise DomainError("a graph without edges has no decards")
    counts = Counter(decard(g, e) for e in g.sorted_edges())
    return Dedeck.from_counts(counts, g.order, g.size)


def as_counter(s) -> Counter:
    """Decard multiset from a Dedeck, a mapping to counts, or an iterable with repeats."""
    if isinstance(s, Dedeck):
        return s.counter()
    if isinstance(s, Counter):
        return s
    if isinstance(s, Mapping):
        return Counter(dict(s))
    return Counter(Decard(*d) for d in s)


def multiset_contains(big, small) -> bool:
    """True if ``small`` (multiset of decards) is a sub-multiset of ``big``."""
    big, small = as_counter(big), as_counter(small)
    return all(big[d] >= k for d, k in small.items())


def multiset_intersection_size(a, b) -> int:
    a, b = as_counter(a), as_counter(b)
    return sum(min(k, b[d]) for d, k in a.items())


def classify_edge(g: Graph, e: Edge) -> EdgeClass:
    if not g.is_forest() or sum(1 for c in g.components() if len(c) > 1) != 1:
        raise DomainError("edge taxonomy is defined for trees (plus isolated vertices)")
    d = edge_degree(g, e)
    deg = g.degrees()
    if deg[e[0]] == 1 or deg[e[1]] == 1:
        return EdgeClass.LEAF
    return EdgeClass.MIDDLE if d == 2 else EdgeClass.HUB


def middle_decard_count(params: DoubleBroomParams) -> int:
    """Number of middle edges of D_{m,n,p}: the p - 1 path edges minus the hub edges."""
    q = params.normalized()
    if q.p == 2:
        hubs = 1 if q.m + q.n > 2 else 0
    else:
        hubs = (q.m >= 2) + (q.n >= 2)
    return q.p - 1 - hubs


def decards_of_class(g: Graph, cls: EdgeClass) -> Counter:
    """Decards obtained by deleting the edges of one class, with multiplicity."""
    return Counter(decard(g, e) for e in g.sorted_edges() if classify_edge(g, e) is cls)
