"""Reconstructions from a single decard, confuser enumeration, and the
one-decard sufficiency test.

A decard fixes both the order and the size of any graph it could come
from, so every graph sharing a decard with ``g`` is a one-edge extension
of one of ``g``'s own edge-cards.  Enumerating those extensions is
therefore a complete search for confusers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import graph6
from .canon import CanonicalForm, canonical_form, coloured_form
from .deck import Decard, Dedeck, dedeck
from .graph import Edge, Graph, check_cap, edge_degree


def _candidate_pairs(card: Graph, d: int) -> list[Edge]:
    deg = card.degrees()
    return [
        (u, v)
        for u in range(card.order)
        for v in range(u + 1, card.order)
        if deg[u] + deg[v] == d and (u, v) not in card.edges
    ]


def extensions(card: Graph, d: int) -> dict[CanonicalForm, Graph]:
    """All graphs, up to isomorphism, obtained by adding one edge of degree ``d`` to ``card``.

    Keys are canonical forms, in sorted order; values are representatives.
    """
    check_cap(card)
    found: dict[CanonicalForm, Graph] = {}
    for e in _candidate_pairs(card, d):
        h = card.with_edge(e)
        found.setdefault(canonical_form(h), h)
    return dict(sorted(found.items()))


def _pair_colouring(order: int, pair: Edge) -> list[list[int]]:
    return [list(pair), [v for v in range(order) if v not in pair]]


def lemma1_holds(g: Graph, e: Edge, up_to_symmetry: bool = False) -> bool:
    """One-decard sufficiency condition for the edge ``e``.

    True when ``d(e) = 0``, or when the endpoints of ``e`` are the only
    non-adjacent pair of ``g - e`` whose degrees sum to ``d(e)``.  With
    ``up_to_symmetry`` a competing pair is tolerated when an automorphism
    of ``g - e`` carries it onto the endpoints of ``e``, since the card is
    only known up to isomorphism.
    """
    d = edge_degree(g, e)
    if d == 0:
        return True
    card = g.without_edge(e)
    target = tuple(sorted(e))
    others = [pair for pair in _candidate_pairs(card, d) if pair != target]
    if not up_to_symmetry or not others:
        return not others
    ref = coloured_form(card, _pair_colouring(card.order, target))
    return all(coloured_form(card, _pair_colouring(card.order, pair)) == ref for pair in others)


def lemma1_table(g: Graph) -> list[tuple[Edge, int, bool, bool]]:
    """Per edge: (edge, degree, literal condition, condition up to symmetry)."""
    return [
        (e, edge_degree(g, e), lemma1_holds(g, e), lemma1_holds(g, e, up_to_symmetry=True))
        for e in g.sorted_edges()
    ]


@dataclass(frozen=True)
class Confuser:
    key: CanonicalForm
    overlap: int
    restriction: tuple[int, ...]  # multiplicities over the target's decard classes

    @property
    def graph(self) -> Graph:
        return graph6.decode(self.key)


@dataclass(frozen=True)
class ConfuserSet:
    target: CanonicalForm
    deck: Dedeck
    members: tuple[Confuser, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def keys(self) -> list[CanonicalForm]:
        return [c.key for c in self.members]

    def get(self, key: CanonicalForm) -> Confuser | None:
        return next((c for c in self.members if c.key == key), None)

    def containing(self, s: dict[Decard, int]) -> list[Confuser]:
        """Members whose dedecks contain the multiset ``s`` of target decards."""
        idx = {d: i for i, d in enumerate(self.deck.classes)}
        need = [(idx[d], k) for d, k in s.items() if k > 0]
        return [c for c in self.members if all(c.restriction[i] >= k for i, k in need)]


@lru_cache(maxsize=4096)
def _confusers(key: CanonicalForm) -> ConfuserSet:
    g = graph6.decode(key)
    deck = dedeck(g)
    candidates: dict[CanonicalForm, Graph] = {}
    for d in deck.classes:
        for hkey, h in extensions(graph6.decode(d.card), d.missing_degree).items():
            if hkey != key:
                candidates.setdefault(hkey, h)
    members = []
    for hkey in sorted(candidates):
        hdeck = dedeck(candidates[hkey])
        restriction = tuple(hdeck.count(d) for d in deck.classes)
        overlap = sum(min(a, b) for a, b in zip(restriction, deck.multiplicities))
        members.append(Confuser(hkey, overlap, restriction))
    return ConfuserSet(key, deck, tuple(members))


def confusers(g: Graph) -> ConfuserSet:
    """Every graph not isomorphic to ``g`` that shares at least one decard with it."""
    check_cap(g)
    return _confusers(canonical_form(g))
