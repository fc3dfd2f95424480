"""
Search counts against the floating-point brute-force oracle
"""

import json

import pytest

from butson.search.models import SearchConfig
from butson.search.service import run_search
from scripts.brute_force_oracle import oracle_counts


def assert_matches_oracle(m: int, l: int) -> None:
    report = run_search(SearchConfig(m=m, l=l))
    expected = oracle_counts(m, l)
    assert report.scanned == l ** m
    assert report.bh_count == expected["bh_count"]
    assert report.holds_count == expected["holds_count"]
    assert report.counterexample_count == expected["counterexample_count"]
    assert report.no_common_k_count == expected["no_common_k_count"]
    assert [c.first_row for c in report.counterexamples] == expected["counterexamples"]


@pytest.mark.integration
class TestSmallSpaces:
    """Test small (m, l) spaces exhaustively"""

    @pytest.mark.parametrize("m,l", [(2, 2), (3, 3), (4, 2), (4, 4), (6, 2)])
    def test_matches_oracle(self, m, l):
        """Test exact counts equal the float oracle"""
        assert_matches_oracle(m, l)


@pytest.mark.integration
class TestRediscovery:
    """Test the full BH(5,5) scan"""

    def test_counterexample_found(self):
        """Test (1,3,4,4,3) is reported with k = 10 and i = 3"""
        report = run_search(SearchConfig(m=5, l=5))
        assert report.scanned == 3125
        hits = [c for c in report.counterexamples if c.first_row == [1, 3, 4, 4, 3]]
        assert len(hits) == 1
        assert (hits[0].k, hits[0].counterexample_i) == (10, 3)

    @pytest.mark.slow
    def test_matches_oracle(self):
        """Test BH(5,5) counts equal the float oracle"""
        assert_matches_oracle(5, 5)


@pytest.mark.integration
class TestDeterminism:
    """Test reports do not depend on scheduling"""

    def test_workers_byte_identical(self):
        """Test 1 and 4 workers serialize to the same bytes"""
        config = SearchConfig(m=4, l=4, checkpoint_every=37)
        single = run_search(config, workers=1).model_dump_json()
        parallel = run_search(config, workers=4).model_dump_json()
        assert single == parallel
        assert json.loads(single)["scanned"] == 256

    def test_consecutive_ranges_merge(self):
        """Test splitting the BH(5,5) space in two reproduces the full counts"""
        left = run_search(SearchConfig(m=5, l=5, range=(0, 1500)))
        right = run_search(SearchConfig(m=5, l=5, range=(1500, 3125)))
        assert left.merged(right) == run_search(SearchConfig(m=5, l=5))
