"""Corpus surveys, coverage tallies, and their CSV shapes."""

from __future__ import annotations

import math

import pytest

from sqenergy.bounds import m0_threshold
from sqenergy.canon import canonical_form
from sqenergy.enumeration import enumerate_connected
from sqenergy.families import cycle_graph, path_graph, star_graph
from sqenergy.graphs import from_graph6, to_graph6
from sqenergy.survey import (
    SURVEY_CSV_HEADER,
    CoverageReport,
    SurveyReport,
    _rounding_flag,
    certify_corpus,
    leaf_increment_profile,
    m0_curve,
    survey,
    survey_csv_row,
)


class TestSurvey:
    def test_counts_order_five(self):
        report = survey(enumerate_connected(5))
        assert (report.n, report.total) == (5, 21)
        assert (report.s_plus_gt, report.s_minus_gt, report.equal) == (15, 1, 5)
        assert report.bipartite == 5
        assert report.s_plus_gt + report.s_minus_gt + report.equal == report.total

    def test_minima_and_ties_order_four(self):
        report = survey(enumerate_connected(4))
        # star and path share the minimum s_plus = 3 exactly
        assert report.min_s_plus == pytest.approx(3.0)
        assert len(report.min_s_plus_ties) == 2
        tied = {canonical_form(from_graph6(tag)) for tag in report.min_s_plus_ties}
        expected = {canonical_form(star_graph(4)), canonical_form(path_graph(4))}
        assert tied == expected
        assert report.min_s_plus_g6 in report.min_s_plus_ties
        assert report.min_slack == pytest.approx(0.0, abs=1e-9)

    def test_min_slack_matches_minima(self):
        report = survey(enumerate_connected(6))
        floor = report.n - 1
        assert report.min_slack == pytest.approx(
            min(report.min_s_plus, report.min_s_minus) - floor, abs=1e-12
        )

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError, match="order"):
            survey([star_graph(4), star_graph(5)])

    def test_empty_stream_rejected(self):
        with pytest.raises(ValueError):
            survey([])

    def test_record_sink_sees_every_graph_in_order(self):
        seen = []
        survey(enumerate_connected(5), record_sink=seen.append)
        assert len(seen) == 21
        assert [r.graph6 for r in seen] == [to_graph6(g) for g in enumerate_connected(5)]
        rec = seen[0]
        assert rec.n == 5 and rec.positive + rec.zero + rec.negative == 5
        assert rec.conjecture_ok

    def test_threads_do_not_change_the_report(self):
        single = survey(enumerate_connected(6), threads=1)
        multi = survey(enumerate_connected(6), threads=2)
        assert single == multi

    def test_csv_row_shape(self):
        report = survey(enumerate_connected(5))
        row = survey_csv_row(report)
        fields = row.split(",")
        assert len(fields) == len(SURVEY_CSV_HEADER.split(","))
        assert fields[:6] == ["5", "21", "15", "1", "5", "5"]
        assert fields[6] == f"{report.min_s_plus:.6f}"
        from_graph6(fields[7])  # the witness is valid graph6
        assert report.rounding_flags == ()


class TestRoundingFlag:
    def test_midpoint_is_flagged(self):
        flag = _rounding_flag("min_s_plus", 1.0000005)
        assert flag is not None and "midpoint" in flag and "min_s_plus" in flag

    def test_clear_values_pass(self):
        assert _rounding_flag("x", 4.763932) is None
        assert _rounding_flag("x", 3.0) is None


@pytest.fixture(scope="module")
def small_corpus():
    return [g for n in (2, 3, 4, 5) for g in enumerate_connected(n)]


class TestCoverage:
    def test_corpus_tally(self, small_corpus):
        report = certify_corpus(small_corpus)
        assert isinstance(report, CoverageReport)
        assert report.total == 1 + 2 + 6 + 21
        assert report.covered_both <= min(report.covered_plus, report.covered_minus)
        assert report.covered_both + len(report.uncertified) == report.total
        assert report.min_slack >= -1e-9

    def test_rule_filter_restricts_firing(self, small_corpus):
        report = certify_corpus(small_corpus, rules=["avg_degree"])
        fired = {rule for rule, cov in report.per_rule.items() if cov.fired}
        assert fired <= {"avg_degree"}
        assert report.per_rule["avg_degree"].conclusive <= report.per_rule["avg_degree"].fired

    def test_every_uncertified_tag_decodes(self, small_corpus):
        report = certify_corpus(small_corpus)
        for tag in report.uncertified:
            g = from_graph6(tag)
            assert 2 <= g.n <= 5


class TestProfiles:
    def test_m0_curve_values(self):
        curve = m0_curve([5, 100])
        assert curve[0][0] == 5
        assert curve[1][1] == pytest.approx(m0_threshold(100))
        assert curve[1][1] == pytest.approx(7.380092, abs=1e-5)

    def test_m0_curve_is_increasing(self):
        values = [v for _, v in m0_curve(range(5, 60, 5))]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_leaf_increment_profile(self):
        out = leaf_increment_profile(cycle_graph(5))
        assert len(out) == 5
        # vertex-transitive base: every attachment point gives the same delta
        first = out[0]
        for dp, dm in out[1:]:
            assert dp == pytest.approx(first[0], abs=1e-8)
            assert dm == pytest.approx(first[1], abs=1e-8)
        assert all(dp > 0 and dm > 0 for dp, dm in out)

    def test_leaf_increment_depends_on_the_vertex(self):
        from sqenergy.graphs import add_leaf

        # pendant on a pentagon: the tail tip behaves unlike cycle vertices
        out = leaf_increment_profile(add_leaf(cycle_graph(5), 0))
        assert out[5][0] != pytest.approx(out[1][0], abs=1e-6)

    def test_tree_increments_are_all_unit(self):
        # bipartite graphs put half of 2m on each side, so any new pendant
        # shifts both square energies by exactly one
        for dp, dm in leaf_increment_profile(path_graph(5)):
            assert dp == pytest.approx(1.0, abs=1e-8)
            assert dm == pytest.approx(1.0, abs=1e-8)


class TestReportInvariants:
    def test_report_is_frozen(self):
        report = survey(enumerate_connected(4))
        assert isinstance(report, SurveyReport)
        with pytest.raises(AttributeError):
            report.total = 0

    def test_tie_list_always_contains_the_witness(self):
        for n in (4, 5, 6):
            report = survey(enumerate_connected(n))
            assert report.min_s_plus_g6 in report.min_s_plus_ties
            assert report.min_s_minus_g6 in report.min_s_minus_ties
            assert not math.isinf(report.min_slack)
