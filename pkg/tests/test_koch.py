import math
from fractions import Fraction

import pytest

from paradoxlab.closedform import SQRT3, ExactValue
from paradoxlab.errors import PreconditionError
from paradoxlab.geometry import measure_length, measure_polygon_area_float
from paradoxlab.koch import (
    build_koch,
    koch_area,
    koch_area_limit,
    koch_perimeter,
    perimeter_diverges,
)


def rational(value):
    return ExactValue.rational(value)


class TestBoundary:
    @pytest.mark.parametrize("n,sides", [(0, 3), (1, 12), (3, 192)])
    def test_side_counts(self, n, sides):
        state = build_koch(1.0, n)
        assert len(state.boundary.primitives) == sides == 3 * 4**n

    @pytest.mark.parametrize("n", [0, 1, 2, 4])
    def test_all_sides_equal_length(self, n):
        state = build_koch(1.0, n)
        want = 1.0 / 3**n
        for seg in state.boundary.primitives:
            assert seg.length == pytest.approx(want, rel=1e-9)

    def test_boundary_closed(self):
        assert build_koch(2.5, 3).boundary.is_closed()

    def test_rejects_deep_recursion(self):
        with pytest.raises(PreconditionError):
            build_koch(1.0, 9)

    def test_rejects_bad_side(self):
        with pytest.raises(PreconditionError):
            build_koch(0.0, 2)


class TestPerimeter:
    @pytest.mark.parametrize(
        "n,expected",
        [(0, Fraction(3)), (1, Fraction(4)), (2, Fraction(16, 3)), (3, Fraction(64, 9))],
    )
    def test_table_values(self, n, expected):
        assert koch_perimeter(1.0, n) == rational(expected)

    def test_value_at_n10(self):
        value = koch_perimeter(1.0, 10)
        assert value == rational(Fraction(3 * 4**10, 3**10))
        assert value.eval_float() == pytest.approx(53.273179901437786, rel=1e-15)

    def test_ratio_is_exactly_four_thirds(self):
        for n in range(0, 15):
            (coeff_here,) = koch_perimeter(1.0, n).terms.values()
            (coeff_there,) = koch_perimeter(1.0, n + 1).terms.values()
            assert coeff_there / coeff_here == Fraction(4, 3)

    def test_strictly_increasing_and_divergent(self):
        values = [koch_perimeter(1.0, n).eval_float() for n in range(12)]
        assert values == sorted(values)
        assert perimeter_diverges() == math.inf

    def test_scales_linearly_in_a(self):
        assert koch_perimeter(2.0, 2) == rational(Fraction(32, 3))


class TestArea:
    def test_initial_triangle(self):
        assert koch_area(1.0, 0) == ExactValue.of(SQRT3, Fraction(1, 4))

    def test_first_step(self):
        # A_1 = A_0 * (1 + 3/9) = sqrt(3)/3
        value = koch_area(1.0, 1)
        assert value == ExactValue.of(SQRT3, Fraction(1, 3))
        assert value.eval_float() == pytest.approx(0.5773502691896257, abs=1e-15)

    def test_recurrence_matches_definition(self):
        # A_n = A_(n-1) + 3*4^(n-1) * (a/3^n)^2 * sqrt(3)/4, checked exactly
        for n in range(1, 12):
            prev = koch_area(1.0, n - 1).coefficient(SQRT3)
            here = koch_area(1.0, n).coefficient(SQRT3)
            bump = Fraction(3 * 4 ** (n - 1), 1) * Fraction(1, 9**n) * Fraction(1, 4)
            assert here == prev + bump

    def test_limit(self):
        assert koch_area_limit(1.0) == ExactValue.of(SQRT3, Fraction(2, 5))
        assert koch_area_limit(2.0) == ExactValue.of(SQRT3, Fraction(8, 5))
        assert koch_area_limit(1.0).eval_float() == pytest.approx(
            0.6928203230275509, abs=1e-15
        )

    def test_monotone_and_bounded_by_limit(self):
        limit = koch_area_limit(1.0).coefficient(SQRT3)
        previous = Fraction(0)
        for n in range(21):
            here = koch_area(1.0, n).coefficient(SQRT3)
            assert previous < here < limit
            previous = here

    def test_geometric_tail_bound(self):
        # |A - A_n| = A_0 * (3/4)(4/9)^(n+1) / (5/9) <= A_0 * (4/9)^n * 0.6
        a0 = koch_area(1.0, 0).coefficient(SQRT3)
        limit = koch_area_limit(1.0).coefficient(SQRT3)
        for n in range(1, 20):
            tail = limit - koch_area(1.0, n).coefficient(SQRT3)
            assert tail <= a0 * Fraction(4, 9) ** n * Fraction(3, 5)


class TestOracleAgreement:
    @pytest.mark.parametrize("n", range(0, 7))
    def test_perimeter_oracle(self, n):
        state = build_koch(1.0, n)
        closed = koch_perimeter(1.0, n).eval_float()
        assert abs(measure_length(state.boundary) - closed) <= 1e-9 * closed

    @pytest.mark.parametrize("n", range(0, 7))
    def test_area_oracle(self, n):
        state = build_koch(1.0, n)
        closed = koch_area(1.0, n).eval_float()
        got = measure_polygon_area_float(state.boundary)
        assert abs(got - closed) <= 1e-7 * closed

    def test_scaled_snowflake_oracle(self):
        state = build_koch(0.75, 4)
        closed = koch_perimeter(0.75, 4).eval_float()
        assert measure_length(state.boundary) == pytest.approx(closed, rel=1e-9)
