"""Corpus surveys: compare square energies, track minima, tally certificates.

A survey consumes a stream of same-order graphs, computes both square
energies for each, and reports the counts and minima that the scan
subcommands print.  Certification coverage runs the full rule pipeline
per graph while still computing the energies directly, so a buggy rule
can never silently hide a counterexample.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .bounds import CERTIFY_RULES, CONCLUSIVE_TOL, certify, m0_threshold
from .graphs import Graph, add_leaf, stats, to_graph6
from .spectral import graph_profile

__all__ = [
    "SurveyRecord",
    "SurveyReport",
    "RuleCoverage",
    "CoverageReport",
    "survey",
    "SURVEY_CSV_HEADER",
    "survey_csv_row",
    "m0_curve",
    "leaf_increment_profile",
    "certify_corpus",
]


@dataclass(frozen=True)
class SurveyRecord:
    """Per-graph facts gathered during a survey."""

    graph6: str
    n: int
    m: int
    s_plus: float
    s_minus: float
    positive: int
    zero: int
    negative: int
    bipartite: bool
    conjecture_ok: bool


@dataclass(frozen=True)
class SurveyReport:
    """Aggregate of one same-order survey.

    ``equal`` counts graphs with |s_plus - s_minus| inside the tie
    tolerance; ``bipartite`` is counted independently so the two can be
    compared.  Ties for either minimum within the tolerance are all
    retained.  ``min_slack`` is the worst min(s_plus, s_minus) - (n-1)
    seen, the direct margin of the conjectured floor.
    """

    n: int
    total: int
    s_plus_gt: int
    s_minus_gt: int
    equal: int
    bipartite: int
    min_s_plus: float
    min_s_plus_g6: str
    min_s_plus_ties: tuple[str, ...]
    min_s_minus: float
    min_s_minus_g6: str
    min_s_minus_ties: tuple[str, ...]
    min_slack: float
    rounding_flags: tuple[str, ...]


def _record(g: Graph) -> SurveyRecord:
    prof = graph_profile(g)
    st = stats(g)
    floor = g.n - 1 - CONCLUSIVE_TOL
    return SurveyRecord(
        graph6=to_graph6(g),
        n=g.n,
        m=g.m,
        s_plus=prof.s_plus,
        s_minus=prof.s_minus,
        positive=prof.inertia.positive,
        zero=prof.inertia.zero,
        negative=prof.inertia.negative,
        bipartite=st.bipartite,
        conjecture_ok=prof.s_plus >= floor and prof.s_minus >= floor,
    )


def _record_payload(payload: tuple[int, tuple[int, ...]]) -> SurveyRecord:
    return _record(Graph(payload[0], payload[1]))


class _MinTracker:
    """Streaming minimum with a tolerance band of tied witnesses."""

    def __init__(self, tol: float):
        self.tol = tol
        self.value = math.inf
        self.near: list[tuple[float, str]] = []

    def offer(self, value: float, tag: str) -> None:
        if value < self.value:
            self.value = value
        if value <= self.value + self.tol:
            self.near.append((value, tag))
            if len(self.near) > 64:
                self.near = [p for p in self.near if p[0] <= self.value + self.tol]

    def result(self) -> tuple[float, str, tuple[str, ...]]:
        ties = sorted(
            (p for p in self.near if p[0] <= self.value + self.tol),
            key=lambda p: (p[0], p[1]),
        )
        return self.value, ties[0][1] if ties else "", tuple(t for _, t in ties)


def _rounding_flag(label: str, value: float) -> Optional[str]:
    # distance (in value units) to the nearest 6-decimal rounding midpoint
    scaled = value * 1e6
    dist = abs(scaled - math.floor(scaled) - 0.5) * 1e-6
    if dist < 1e-9:
        return f"{label}={value!r} sits within 1e-9 of a 6-decimal rounding midpoint"
    return None


def survey(
    graphs: Iterable[Graph],
    *,
    tie_tol: float = 1e-9,
    threads: int = 1,
    record_sink: Optional[Callable[[SurveyRecord], None]] = None,
) -> SurveyReport:
    """Survey a stream of graphs of one common order.

    Counts the s_plus > s_minus / < / tie split, counts bipartite graphs
    independently, and tracks both minima with their graph6 witnesses
    (plus any ties within ``tie_tol``).  ``record_sink`` receives every
    per-graph record as it is produced.  ``threads`` > 1 fans the
    eigensolves out over processes, preserving order and determinism.
    Mixed orders in one stream are an error.
    """
    records = _record_stream(graphs, threads)
    n = -1
    total = plus_gt = minus_gt = equal = bip = 0
    tplus = _MinTracker(tie_tol)
    tminus = _MinTracker(tie_tol)
    min_slack = math.inf
    for rec in records:
        if n < 0:
            n = rec.n
        elif rec.n != n:
            raise ValueError(f"survey stream mixes orders {n} and {rec.n}")
        total += 1
        if rec.s_plus > rec.s_minus + tie_tol:
            plus_gt += 1
        elif rec.s_minus > rec.s_plus + tie_tol:
            minus_gt += 1
        else:
            equal += 1
        if rec.bipartite:
            bip += 1
        tplus.offer(rec.s_plus, rec.graph6)
        tminus.offer(rec.s_minus, rec.graph6)
        min_slack = min(min_slack, min(rec.s_plus, rec.s_minus) - (n - 1))
        if record_sink is not None:
            record_sink(rec)
    if total == 0:
        raise ValueError("survey needs at least one graph")
    vplus, gplus, ties_plus = tplus.result()
    vminus, gminus, ties_minus = tminus.result()
    flags = []
    for label, value in (("min_s_plus", vplus), ("min_s_minus", vminus)):
        flag = _rounding_flag(label, value)
        if flag:
            flags.append(flag)
    return SurveyReport(
        n=n,
        total=total,
        s_plus_gt=plus_gt,
        s_minus_gt=minus_gt,
        equal=equal,
        bipartite=bip,
        min_s_plus=vplus,
        min_s_plus_g6=gplus,
        min_s_plus_ties=ties_plus,
        min_s_minus=vminus,
        min_s_minus_g6=gminus,
        min_s_minus_ties=ties_minus,
        min_slack=min_slack,
        rounding_flags=tuple(flags),
    )


def _record_stream(graphs: Iterable[Graph], threads: int) -> Iterator[SurveyRecord]:
    if threads <= 1:
        return map(_record, graphs)

    def payloads() -> Iterator[tuple[int, tuple[int, ...]]]:
        for g in graphs:
            yield g.n, g.rows

    def run() -> Iterator[SurveyRecord]:
        with multiprocessing.Pool(threads) as pool:
            yield from pool.imap(_record_payload, payloads(), chunksize=64)

    return run()


SURVEY_CSV_HEADER = (
    "n,total,s_plus_gt,s_minus_gt,equal,bipartite,"
    "min_s_plus,min_s_plus_g6,min_s_minus,min_s_minus_g6"
)


def survey_csv_row(report: SurveyReport) -> str:
    """One CSV row matching SURVEY_CSV_HEADER, energies to 6 decimals."""
    return (
        f"{report.n},{report.total},{report.s_plus_gt},{report.s_minus_gt},"
        f"{report.equal},{report.bipartite},"
        f"{report.min_s_plus:.6f},{report.min_s_plus_g6},"
        f"{report.min_s_minus:.6f},{report.min_s_minus_g6}"
    )


def m0_curve(ns: Iterable[int]) -> list[tuple[int, float]]:
    """The cycle half-length threshold m0(n) over a range of orders."""
    return [(n, m0_threshold(n)) for n in ns]


def leaf_increment_profile(g: Graph) -> list[tuple[float, float]]:
    """Per-vertex (delta s_plus, delta s_minus) of attaching one pendant."""
    base = graph_profile(g)
    out = []
    for v in range(g.n):
        prof = graph_profile(add_leaf(g, v))
        out.append((prof.s_plus - base.s_plus, prof.s_minus - base.s_minus))
    return out


@dataclass(frozen=True)
class RuleCoverage:
    fired: int
    conclusive: int


@dataclass(frozen=True)
class CoverageReport:
    """How the certificate rules fare over a corpus.

    Conclusiveness is per target: a graph is fully covered once some
    conclusive certificate speaks for s_plus and some (possibly the
    same, if its target is "both") for s_minus.  Direct energies are
    still computed for every graph; ``min_slack`` is their worst margin
    over the n - 1 floor, independent of any certificate.
    """

    total: int
    per_rule: dict[str, RuleCoverage]
    covered_plus: int
    covered_minus: int
    covered_both: int
    uncertified: tuple[str, ...]
    min_slack: float


def certify_corpus(
    graphs: Iterable[Graph], rules: Optional[Iterable[str]] = None
) -> CoverageReport:
    """Run the certificate pipeline over a corpus and tally coverage."""
    fired = {r: 0 for r in CERTIFY_RULES}
    conclusive = {r: 0 for r in CERTIFY_RULES}
    total = 0
    covered_plus = covered_minus = covered_both = 0
    uncovered: list[str] = []
    min_slack = math.inf
    for g in graphs:
        total += 1
        prof = graph_profile(g)
        min_slack = min(min_slack, min(prof.s_plus, prof.s_minus) - (g.n - 1))
        plus_ok = minus_ok = False
        for cert in certify(g, rules=rules):
            fired[cert.rule] += 1
            if cert.conclusive:
                conclusive[cert.rule] += 1
                if cert.target in ("s_plus", "both"):
                    plus_ok = True
                if cert.target in ("s_minus", "both"):
                    minus_ok = True
        covered_plus += plus_ok
        covered_minus += minus_ok
        covered_both += plus_ok and minus_ok
        if not (plus_ok and minus_ok):
            uncovered.append(to_graph6(g))
    return CoverageReport(
        total=total,
        per_rule={r: RuleCoverage(fired[r], conclusive[r]) for r in CERTIFY_RULES},
        covered_plus=covered_plus,
        covered_minus=covered_minus,
        covered_both=covered_both,
        uncertified=tuple(uncovered),
        min_slack=min_slack,
    )
