"""
End-to-end checks of the three built-in matrices
"""

import pytest

from butson.conjecture.service import conjecture_test
from butson.matrices.service import power, verify_bh
from butson.spectra.service import spectrum_report
from tests.helpers import multiset_close, turn


@pytest.mark.integration
class TestExactPowerIdentities:
    """Test B^k = I as exact identities M^k = m^(k/2) I"""

    def test_example_one(self, ex1):
        """Test M^24 = 2^12 I"""
        assert power(ex1, 24).is_scalar(2 ** 12)
        assert not power(ex1, 12).is_scalar(2 ** 6)

    def test_example_two(self, ex2):
        """Test M^10 = 5^5 I"""
        assert power(ex2, 10).is_scalar(5 ** 5)
        assert not power(ex2, 5).is_scalar(5 ** 2)

    def test_example_three(self, ex3):
        """Test M^3 = 8 I"""
        assert power(ex3, 3).is_scalar(8)


@pytest.mark.integration
class TestGoldenPipeline:
    """Test verification, spectrum and verdict together"""

    def test_example_one(self, ex1):
        """Test BH(2,4), k = 24, conjecture holds"""
        assert verify_bh(ex1).is_bh
        spectrum = spectrum_report(ex1)
        values = [f.value.to_complex() for f in spectrum.findings]
        assert multiset_close(values, [turn(1, 24), turn(17, 24)])
        verdict = conjecture_test(ex1, spectrum)
        assert verdict.holds

    def test_example_two(self, ex2):
        """Test BH(5,5), k = 10, counterexample at i = 3"""
        assert verify_bh(ex2).is_bh
        spectrum = spectrum_report(ex2)
        values = [f.value.to_complex() for f in spectrum.findings]
        assert multiset_close(values, [turn(3, 10), turn(3, 10), turn(1, 10), turn(1, 10), turn(7, 10)])
        verdict = conjecture_test(ex2, spectrum)
        assert (verdict.holds, verdict.counterexample_i) == (False, 3)
        third = next(r for r in verdict.per_i if r.i == 3)
        assert {(v.n, v.t) for v in third.distinct_values} == {(10, 1), (10, 3), (10, 9)}
        assert third.all_in_mu_k and not third.all_in_mu_l

    def test_example_three(self, ex3):
        """Test BH(4,2), k = 3, conjecture holds"""
        assert verify_bh(ex3).is_bh
        spectrum = spectrum_report(ex3)
        assert spectrum.common_k == 3
        assert conjecture_test(ex3, spectrum).holds
