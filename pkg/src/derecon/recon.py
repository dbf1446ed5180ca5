"""Exact dern and adern from the confuser set."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .canon import CanonicalForm, canonical_form
from .deck import Decard, as_counter, multiset_contains
from .graph import DomainError, Graph
from .reconstruct import ConfuserSet, confusers


class NotDedeckReconstructible(DomainError):
    """The full dedeck is shared with a non-isomorphic graph."""

    def __init__(self, target: CanonicalForm, witness: CanonicalForm):
        super().__init__(f"{target} is not dedeck-reconstructible (full dedeck shared with {witness})")
        self.target = target
        self.witness = witness


@dataclass(frozen=True)
class ReconReport:
    target: CanonicalForm
    dern: int
    adern: int
    witness_set: tuple[tuple[Decard, int], ...]
    witness_confuser: tuple[CanonicalForm, int] | None

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "dern": self.dern,
            "adern": self.adern,
            "witness_set": [[d.card, d.missing_degree, k] for d, k in self.witness_set],
            "witness_confuser": list(self.witness_confuser) if self.witness_confuser else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict) -> "ReconReport":
        wc = data["witness_confuser"]
        return cls(
            data["target"],
            data["dern"],
            data["adern"],
            tuple((Decard(c, d), k) for c, d, k in data["witness_set"]),
            (wc[0], wc[1]) if wc else None,
        )


def _vector(cs: ConfuserSet, s) -> list[int]:
    if not multiset_contains(cs.deck, s):
        raise DomainError("decard multiset is not contained in the dedeck of the graph")
    counts = as_counter(s)
    return [counts.get(d, 0) for d in cs.deck.classes]


def _blocked(cs: ConfuserSet, x: list[int]) -> CanonicalForm | None:
    """Key of a confuser whose dedeck contains the class-count vector ``x``, if any."""
    for c in cs.members:
        if all(r >= k for r, k in zip(c.restriction, x)):
            return c.key
    return None


def determines(g: Graph, s, cs: ConfuserSet | None = None) -> bool:
    """Whether every graph whose dedeck contains ``s`` is isomorphic to ``g``.

    ``s`` is a multiset of decards: a mapping ``Decard -> count`` or an
    iterable of decards (repeats count).
    """
    cs = cs or confusers(g)
    return _blocked(cs, _vector(cs, s)) is None


def _sub_multisets(caps: list[int], k: int) -> Iterator[list[int]]:
    """Class-count vectors of size ``k`` bounded by ``caps``, lexicographic over class index multisets."""
    for combo in combinations_with_replacement(range(len(caps)), k):
        x = [0] * len(caps)
        for i in combo:
            x[i] += 1
        if all(a <= c for a, c in zip(x, caps)):
            yield x


def _require_reconstructible(cs: ConfuserSet) -> None:
    full = cs.deck.multiplicities
    witness = _blocked(cs, full)
    if witness is not None:
        raise NotDedeckReconstructible(cs.target, witness)


def dern_witness(g: Graph, cs: ConfuserSet | None = None) -> tuple[int, tuple[tuple[Decard, int], ...]]:
    cs = cs or confusers(g)
    _require_reconstructible(cs)
    caps = cs.deck.multiplicities
    for k in range(1, sum(caps) + 1):
        for x in _sub_multisets(caps, k):
            if _blocked(cs, x) is None:
                return k, tuple((d, a) for d, a in zip(cs.deck.classes, x) if a)
    raise AssertionError("full dedeck determines the graph but no subset was found")


def dern(g: Graph) -> int:
    return dern_witness(g)[0]


def max_overlap(g: Graph, cs: ConfuserSet | None = None) -> tuple[CanonicalForm, int] | None:
    """Confuser sharing the most decards with ``g`` (smallest key on ties); None if there are none."""
    cs = cs or confusers(g)
    if not cs.members:
        return None
    best = min(cs.members, key=lambda c: (-c.overlap, c.key))
    return best.key, best.overlap


def adern(g: Graph, cs: ConfuserSet | None = None) -> int:
    cs = cs or confusers(g)
    _require_reconstructible(cs)
    best = max_overlap(g, cs)
    return 1 if best is None else best[1] + 1


def adern_by_subsets(g: Graph, cs: ConfuserSet | None = None) -> int:
    """adern straight from its definition: the least k for which every k-sub-multiset determines ``g``.

    Exponential in the number of decard classes; for cross-checking only.
    """
    cs = cs or confusers(g)
    _require_reconstructible(cs)
    caps = cs.deck.multiplicities
    total = sum(caps)
    for k in range(1, total + 1):
        if all(_blocked(cs, x) is None for x in _sub_multisets(caps, k)):
            return k
    return total


def recon_report(g: Graph) -> ReconReport:
    cs = confusers(g)
    k, witness = dern_witness(g, cs)
    return ReconReport(canonical_form(g), k, adern(g, cs), witness, max_overlap(g, cs))
