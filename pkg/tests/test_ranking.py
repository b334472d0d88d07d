import pytest
from hypothesis import given, strategies as st

from termnet.centrality import ASCENDING, CentralityResult, degree
from termnet.ranking import centrality_csv, rank_terms, threshold

from conftest import net_from


def result_for(scores, direction="descending"):
    return CentralityResult("test", "na", dict(scores), direction)


class TestRankTerms:
    def test_descending_order(self):
        net = net_from({("a", "b"): 1.0, ("b", "c"): 1.0, ("c", "a"): 1.0})
        ranked = rank_terms(result_for({"a": 3.0, "b": 1.0, "c": 2.0}), net)
        assert [label for label, _ in ranked] == ["a", "c", "b"]

    def test_ties_break_on_term_frequency(self):
        net = net_from({("a", "b"): 1.0}, tf={"a": 5, "b": 9})
        ranked = rank_terms(result_for({"a": 1.0, "b": 1.0}), net)
        assert [label for label, _ in ranked] == ["b", "a"]

    def test_remaining_ties_break_lexicographically(self):
        net = net_from({("a", "b"): 1.0, ("b", "c"): 1.0})
        ranked = rank_terms(result_for({"a": 1.0, "b": 1.0, "c": 1.0}), net)
        assert [label for label, _ in ranked] == ["a", "b", "c"]

    def test_ascending_for_diversity_style_results(self):
        net = net_from({("a", "b"): 1.0})
        ranked = rank_terms(result_for({"a": 0.2, "b": 0.9}, ASCENDING), net)
        assert [label for label, _ in ranked] == ["a", "b"]

    def test_missing_scores_rejected(self):
        net = net_from({("a", "b"): 1.0})
        with pytest.raises(ValueError):
            rank_terms(result_for({"a": 1.0}), net)


class TestThreshold:
    def test_ceiling(self):
        ranked = [(f"t{i}", float(10 - i)) for i in range(10)]
        assert len(threshold(ranked, 25).terms) == 3

    def test_k_100_keeps_all(self):
        ranked = [(f"t{i}", float(i)) for i in range(7)]
        assert threshold(ranked, 100).terms == ranked

    def test_minimum_one_term(self):
        assert len(threshold([("only", 1.0)], 5).terms) == 1

    def test_rejects_out_of_range(self):
        for bad in (0, 101, -5):
            with pytest.raises(ValueError):
                threshold([("a", 1.0)], bad)

    @given(
        n=st.integers(min_value=0, max_value=50),
        k1=st.integers(min_value=1, max_value=100),
        k2=st.integers(min_value=1, max_value=100),
    )
    def test_prefix_monotonicity(self, n, k1, k2):
        ranked = [(f"t{i:02d}", float(n - i)) for i in range(n)]
        lo, hi = sorted((k1, k2))
        smaller = threshold(ranked, lo).terms
        larger = threshold(ranked, hi).terms
        assert larger[: len(smaller)] == smaller  # prefix property
        assert len(smaller) <= len(larger)


class TestCsvExport:
    def test_header_and_rank_order(self):
        net = net_from({("a", "b"): 1.0, ("b", "c"): 1.0})
        text = centrality_csv(degree(net, "all"), net)
        lines = text.splitlines()
        assert lines[0] == "# measure=degree variant=all rank_direction=descending"
        assert lines[1] == "node,score"
        assert lines[2] == "b,2"
