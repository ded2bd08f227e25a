import math

import pytest

from paradoxlab.errors import PreconditionError
from paradoxlab.revolution import (
    HornQuery,
    area_under_curve,
    volume_of_revolution,
)


class TestQueryValidation:
    def test_rejects_upper_at_or_below_one(self):
        with pytest.raises(PreconditionError):
            HornQuery(1.0)
        with pytest.raises(PreconditionError):
            HornQuery(0.5)

    def test_rejects_bad_subdivisions(self):
        with pytest.raises(PreconditionError):
            HornQuery(10.0, 0)


class TestArea:
    def test_analytic_at_e(self):
        result = area_under_curve(HornQuery(math.e, 10_000))
        assert result.analytic == pytest.approx(1.0, abs=1e-15)

    def test_analytic_at_100_with_tight_quadrature(self):
        result = area_under_curve(HornQuery(100.0, 1_000_000))
        assert result.analytic == pytest.approx(4.605170185988092, abs=1e-14)
        assert result.numeric == pytest.approx(result.analytic, abs=1e-8)

    def test_log_law_doubling(self):
        a1 = area_under_curve(HornQuery(50.0, 100)).analytic
        a2 = area_under_curve(HornQuery(2500.0, 100)).analytic
        assert a2 == pytest.approx(2.0 * a1, rel=1e-14)

    def test_divergence_past_any_bound(self):
        # M = 20: both channels exceed 20 once A > e^20
        query = HornQuery(math.exp(20) * 1.05, 1_000_000)
        result = area_under_curve(query)
        assert result.analytic > 20.0
        assert result.numeric > 20.0


class TestVolume:
    def test_analytic_at_10(self):
        result = volume_of_revolution(HornQuery(10.0, 100_000))
        assert result.analytic == pytest.approx(2.827433388230814, abs=1e-14)

    def test_tail_to_pi(self):
        result = volume_of_revolution(HornQuery(1e6, 1000))
        assert abs(result.analytic - math.pi) <= 3.2e-6

    def test_shrinks_to_zero_near_one(self):
        result = volume_of_revolution(HornQuery(1.0 + 1e-9, 100))
        assert result.analytic == pytest.approx(0.0, abs=1e-8)

    def test_numeric_monotone_in_upper_and_bounded_by_pi(self):
        uppers = [2.0, 5.0, 10.0, 50.0, 100.0, 1000.0]
        previous = 0.0
        for upper in uppers:
            got = volume_of_revolution(HornQuery(upper, 100_000)).numeric
            assert previous < got <= math.pi
            previous = got

    def test_quadrature_validation_at_1e4(self):
        result = volume_of_revolution(HornQuery(1e4, 1_000_000))
        assert result.numeric == pytest.approx(result.analytic, abs=1e-8)
