"""Closed-form dern/adern predictions for double-brooms and a verifier
that checks them against exhaustive computation."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .canon import CanonicalForm, canonical_form
from .deck import Decard, dedeck, multiset_intersection_size
from .families import DoubleBroomParams, double_broom
from .graph import Graph
from .graph6 import decode
from .recon import ReconReport, recon_report
from .reconstruct import extensions, lemma1_holds


def _params(params) -> DoubleBroomParams:
    if not isinstance(params, DoubleBroomParams):
        params = DoubleBroomParams(*params)
    return params.sorted()


def theorem_dern(params, up_to_symmetry: bool = True) -> int:
    """1 if some edge of the double-broom passes the one-decard test, else 2."""
    g = double_broom(_params(params))
    return 1 if any(lemma1_holds(g, e, up_to_symmetry) for e in g.sorted_edges()) else 2


# (value, label, predicate on (m, n, p) with m <= n), in table order.
ADERN_CLAUSES: list[tuple[int, str, Callable[[int, int, int], bool]]] = [
    (1, "D(m,n,2), 2 not in {m,n}, m != n-2", lambda m, n, p: p == 2 and 2 not in (m, n) and m != n - 2),
    (1, "D(m,n,3), m >= 4, m != n-2", lambda m, n, p: p == 3 and m >= 4 and m != n - 2),
    (5, "D(1,2,4)", lambda m, n, p: (m, n, p) == (1, 2, 4)),
    (5, "D(1,2,p), p >= 6", lambda m, n, p: (m, n) == (1, 2) and p >= 6),
    (5, "D(m,m+2,3), m >= 2", lambda m, n, p: n == m + 2 and p == 3 and m >= 2),
    (4, "D(1,2,5)", lambda m, n, p: (m, n, p) == (1, 2, 5)),
    (4, "D(1,3,3)", lambda m, n, p: (m, n, p) == (1, 3, 3)),
    (4, "D(2,n,p), p >= 5", lambda m, n, p: m == 2 and p >= 5),
    (3, "D(1,1,p), p >= 3", lambda m, n, p: (m, n) == (1, 1) and p >= 3),
    (3, "D(1,2,p), p <= 3", lambda m, n, p: (m, n) == (1, 2) and p <= 3),
    (3, "D(1,n,p), n >= 4, p >= 4", lambda m, n, p: m == 1 and n >= 4 and p >= 4),
    (3, "D(2,n,p), p <= 4, not D(2,4,3)", lambda m, n, p: m == 2 and p <= 4 and (n, p) != (4, 3)),
    (3, "D(3,n,p), p >= 4", lambda m, n, p: m == 3 and p >= 4),
    (3, "D(m,m,p), m >= 4, p >= 5", lambda m, n, p: m == n and m >= 4 and p >= 5),
    (3, "D(m,m+1,p), m >= 4, p >= 4", lambda m, n, p: n == m + 1 and m >= 4 and p >= 4),
    (3, "D(m,m+2,p), m not in {2,3}, p != 3", lambda m, n, p: n == m + 2 and m not in (2, 3) and p != 3),
    (3, "D(3,5,2)", lambda m, n, p: (m, n, p) == (3, 5, 2)),
]
OTHERWISE = (2, "otherwise")


def matching_clauses(params) -> list[tuple[int, str]]:
    q = _params(params)
    return [(v, label) for v, label, pred in ADERN_CLAUSES if pred(q.m, q.n, q.p)]


def theorem_adern_case(params) -> tuple[int, str]:
    """Value and label of the first matching clause of the adern table."""
    hits = matching_clauses(params)
    return hits[0] if hits else OTHERWISE


def theorem_adern(params) -> int:
    return theorem_adern_case(params)[0]


def corollary_double_star(m: int, n: int) -> tuple[int, int]:
    """(dern, adern) of the double-star D(m,n,2), 1 <= m <= n."""
    m, n = min(m, n), max(m, n)
    return 1, 3 if (n == m + 2 or 2 in (m, n)) else 1


@dataclass(frozen=True)
class TheoremPrediction:
    params: DoubleBroomParams
    dern_predicted: int
    adern_predicted: int
    case_label: str


def predict(params, up_to_symmetry: bool = True) -> TheoremPrediction:
    q = _params(params)
    value, label = theorem_adern_case(q)
    return TheoremPrediction(q, theorem_dern(q, up_to_symmetry), value, label)


def all_edges_pass_lemma1(params, up_to_symmetry: bool = True) -> bool:
    g = double_broom(_params(params))
    return all(lemma1_holds(g, e, up_to_symmetry) for e in g.sorted_edges())


@dataclass
class InstanceResult:
    prediction: TheoremPrediction
    report: ReconReport
    case1_agrees: bool
    up_to_symmetry: bool = True

    @property
    def params(self) -> DoubleBroomParams:
        return self.prediction.params

    @property
    def agrees(self) -> bool:
        return (
            self.prediction.dern_predicted == self.report.dern
            and self.prediction.adern_predicted == self.report.adern
            and self.case1_agrees
        )

    @property
    def status(self) -> str:
        return "agree" if self.agrees else "mismatch"

    def csv_row(self) -> list:
        q, pr, r = self.params, self.prediction, self.report
        return [q.m, q.n, q.p, pr.dern_predicted, r.dern, pr.adern_predicted, r.adern, pr.case_label, self.status]


CSV_COLUMNS = ["m", "n", "p", "dern_pred", "dern_comp", "adern_pred", "adern_comp", "case_label", "status"]


@dataclass
class Discrepancy:
    params: DoubleBroomParams
    predicted: TheoremPrediction
    computed: ReconReport
    certificate: dict = field(default_factory=dict)
    up_to_symmetry: bool = True

    def to_dict(self) -> dict:
        q = self.params
        return {
            "params": [q.m, q.n, q.p],
            "predicted": {
                "dern": self.predicted.dern_predicted,
                "adern": self.predicted.adern_predicted,
                "case_label": self.predicted.case_label,
            },
            "computed": self.computed.to_dict(),
            "certificate": self.certificate,
        }


def instances(max_vertices: int) -> list[DoubleBroomParams]:
    """Sorted (m, n, p) with 1 <= m <= n, p >= 2 and m + n + p <= max_vertices."""
    out = []
    for total in range(4, max_vertices + 1):
        for p in range(2, total - 1):
            for m in range(1, (total - p) // 2 + 1):
                out.append(DoubleBroomParams(m, total - p - m, p))
    return sorted(out, key=lambda q: (q.m, q.n, q.p))


def evaluate(params, up_to_symmetry: bool = True, report: ReconReport | None = None) -> InstanceResult:
    q = _params(params)
    pred = predict(q, up_to_symmetry)
    if report is None:
        report = recon_report(double_broom(q))
    case1 = (pred.adern_predicted == 1) == all_edges_pass_lemma1(q, up_to_symmetry)
    return InstanceResult(pred, report, case1, up_to_symmetry)


# ----------------------------------------------------------------------
# certificates


def _fresh_overlap(g: Graph, key: CanonicalForm) -> int:
    return multiset_intersection_size(dedeck(g), dedeck(decode(key)))


def build_certificate(result: InstanceResult) -> dict:
    g = double_broom(result.params)
    pr, r = result.prediction, result.report
    cert: dict = {"target": canonical_form(g)}
    if r.adern > pr.adern_predicted:
        key, overlap = r.witness_confuser
        cert["adern_lower_bound"] = {"confuser": key, "overlap": overlap}
    elif r.adern < pr.adern_predicted:
        # every confuser with its overlap; all stay below adern_pred - 1
        cert["adern_upper_bound"] = {"max_overlap": r.adern - 1}
    if r.dern < pr.dern_predicted:
        cert["dern_upper_bound"] = {"determining_set": [[d.card, d.missing_degree, k] for d, k in r.witness_set]}
    elif r.dern > pr.dern_predicted:
        blockers = []
        for d in dedeck(g).classes:
            h = next(iter(k for k in extensions(decode(d.card), d.missing_degree) if k != cert["target"]))
            blockers.append([d.card, d.missing_degree, h])
        cert["dern_lower_bound"] = {"blockers": blockers}
    if not result.case1_agrees:
        cert["case1"] = {
            "all_edges_pass_lemma1": all_edges_pass_lemma1(result.params, result.up_to_symmetry),
            "adern_predicted": pr.adern_predicted,
        }
    return cert


def validate_certificate(disc: Discrepancy) -> bool:
    """Re-check a certificate from scratch (fresh dedecks, fresh extension search)."""
    g = double_broom(disc.params)
    cert = disc.certificate
    key = canonical_form(g)
    if cert.get("target") != key:
        return False
    ok = True
    if "adern_lower_bound" in cert:
        c = cert["adern_lower_bound"]
        ok &= c["confuser"] != key and _fresh_overlap(g, c["confuser"]) == c["overlap"]
        ok &= c["overlap"] >= disc.predicted.adern_predicted
    if "adern_upper_bound" in cert:
        best = 0
        for d in dedeck(g).classes:
            for hkey in extensions(decode(d.card), d.missing_degree):
                if hkey != key:
                    best = max(best, _fresh_overlap(g, hkey))
        ok &= best == cert["adern_upper_bound"]["max_overlap"] and best + 1 < disc.predicted.adern_predicted
    if "dern_upper_bound" in cert:
        s = {Decard(c, d): k for c, d, k in cert["dern_upper_bound"]["determining_set"]}
        deck = dedeck(g)
        ok &= all(deck.count(d) >= k for d, k in s.items())
        for d in s:
            for hkey in extensions(decode(d.card), d.missing_degree):
                if hkey != key:
                    hdeck = dedeck(decode(hkey))
                    ok &= not all(hdeck.count(x) >= k for x, k in s.items())
        ok &= sum(s.values()) < disc.predicted.dern_predicted
    if "dern_lower_bound" in cert:
        blockers = cert["dern_lower_bound"]["blockers"]
        ok &= len(blockers) == len(dedeck(g).classes)
        for c, d, hkey in blockers:
            ok &= hkey != key and dedeck(decode(hkey)).count(Decard(c, d)) >= 1
    if "case1" in cert:
        c = cert["case1"]
        ok &= c["all_edges_pass_lemma1"] == all_edges_pass_lemma1(disc.params, disc.up_to_symmetry)
        ok &= (c["adern_predicted"] == 1) != c["all_edges_pass_lemma1"]
    return bool(ok)


def discrepancy(result: InstanceResult) -> Discrepancy:
    return Discrepancy(
        result.params, result.prediction, result.report, build_certificate(result), result.up_to_symmetry
    )


def verify_instances(max_vertices: int, up_to_symmetry: bool = True) -> list[InstanceResult]:
    return [evaluate(q, up_to_symmetry) for q in instances(max_vertices)]


def verify_range(max_vertices: int, up_to_symmetry: bool = True) -> list[Discrepancy]:
    """Mismatches between the closed forms and brute force; empty when they agree everywhere."""
    return [discrepancy(r) for r in verify_instances(max_vertices, up_to_symmetry) if not r.agrees]
