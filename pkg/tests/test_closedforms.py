from fractions import Fraction

import pytest

from seqarea.closedforms import (
    closed_triangle_area,
    general_mgon_area,
    general_triangle_area,
    mgon_area,
    polygonal_mgon_area,
    polygonal_triangle_area,
)
from seqarea.geometry import PolygonSpec, build_vertices, shoelace_area
from seqarea.sequences import SequenceFamily, UnsupportedFamilyError, binet_params

FAMILIES = [
    SequenceFamily.fibonacci(),
    SequenceFamily.lucas(),
    SequenceFamily.pell(),
    SequenceFamily.pell_lucas(),
    SequenceFamily.generalized(1, 2),
    SequenceFamily.generalized(2, 3),
    SequenceFamily.generalized(-2, 3),
]


def oracle_area(family: SequenceFamily, n: int, k: int, m: int) -> Fraction:
    return shoelace_area(build_vertices(PolygonSpec(family, n, k, m)))


class TestClosedTriangleArea:
    def test_fibonacci_odd_stride(self):
        result = closed_triangle_area(SequenceFamily.fibonacci(), 1)
        assert result.area == Fraction(1, 2)
        assert result.parity_branch == "odd"

    def test_fibonacci_even_stride(self):
        result = closed_triangle_area(SequenceFamily.fibonacci(), 2)
        assert result.area == Fraction(15, 2)
        assert result.parity_branch == "even"

    def test_pell_odd_stride(self):
        assert closed_triangle_area(SequenceFamily.pell(), 1).area == 4

    def test_lucas_values(self):
        assert closed_triangle_area(SequenceFamily.lucas(), 1).area == Fraction(5, 2)
        assert closed_triangle_area(SequenceFamily.lucas(), 2).area == Fraction(75, 2)

    def test_pell_lucas_values(self):
        # frozen from the shoelace oracle on actual vertex coordinates
        assert closed_triangle_area(SequenceFamily.pell_lucas(), 1).area == 32
        assert closed_triangle_area(SequenceFamily.pell_lucas(), 2).area == 3072

    def test_generalized_prefactor_is_absolute(self):
        # s=1, t=2 gives s^2 + s*t - t^2 = -1; the area must still be positive
        result = closed_triangle_area(SequenceFamily.generalized(1, 2), 1)
        assert result.area == Fraction(1, 2)

    def test_labels_present(self):
        assert closed_triangle_area(SequenceFamily.fibonacci(), 2).formula_label
        assert closed_triangle_area(SequenceFamily.pell(), 3).formula_label

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            closed_triangle_area(SequenceFamily.fibonacci(), 0)
        with pytest.raises(UnsupportedFamilyError):
            closed_triangle_area(SequenceFamily.jacobsthal(), 1)
        with pytest.raises(UnsupportedFamilyError):
            closed_triangle_area(SequenceFamily.tribonacci(), 1)

    @pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.label)
    def test_matches_oracle(self, family):
        for n in range(0, 6):
            for k in range(1, 7):
                assert closed_triangle_area(family, k).area == oracle_area(
                    family, n, k, 3
                )


class TestGeneralTriangleArea:
    def test_fibonacci_magnitude(self):
        params = binet_params(SequenceFamily.fibonacci())
        value = general_triangle_area(params, 1, 1)
        assert abs(value.to_rational()) == Fraction(1, 2)

    def test_sign_alternates_with_start_index(self):
        params = binet_params(SequenceFamily.fibonacci())
        odd = general_triangle_area(params, 1, 1).to_rational()
        even = general_triangle_area(params, 2, 1).to_rational()
        assert odd == -even

    def test_pell_lucas_even_stride(self):
        params = binet_params(SequenceFamily.pell_lucas())
        value = abs(general_triangle_area(params, 0, 2).to_rational())
        assert value == 3072
        assert value == oracle_area(SequenceFamily.pell_lucas(), 0, 2, 3)

    @pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.label)
    def test_matches_parity_split_form(self, family):
        params = binet_params(family)
        for n in range(0, 11):
            for k in range(1, 9):
                lemma = abs(general_triangle_area(params, n, k).to_rational())
                assert lemma == closed_triangle_area(family, k).area


class TestMgonArea:
    def test_fibonacci_examples(self):
        fib = SequenceFamily.fibonacci()
        assert mgon_area(fib, 1, 4) == Fraction(5, 2)
        assert mgon_area(fib, 1, 3) == Fraction(1, 2)

    def test_pell_triangle(self):
        assert mgon_area(SequenceFamily.pell(), 1, 3) == 4

    def test_lucas_is_five_times_fibonacci(self):
        fib, luc = SequenceFamily.fibonacci(), SequenceFamily.lucas()
        for k in range(1, 5):
            for m in range(3, 7):
                assert mgon_area(luc, k, m) == 5 * mgon_area(fib, k, m)

    @pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.label)
    def test_triangle_case_reduces(self, family):
        for k in range(1, 11):
            assert mgon_area(family, k, 3) == closed_triangle_area(family, k).area

    @pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.label)
    def test_agrees_with_general_form(self, family):
        params = binet_params(family)
        for k in range(1, 7):
            for m in range(3, 9):
                assert general_mgon_area(params, k, m) == mgon_area(family, k, m)

    @pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.label)
    def test_matches_oracle(self, family):
        for n in range(0, 4):
            for k in range(1, 5):
                for m in range(3, 8):
                    assert mgon_area(family, k, m) == oracle_area(family, n, k, m)

    def test_domain_errors(self):
        fib = SequenceFamily.fibonacci()
        with pytest.raises(ValueError):
            mgon_area(fib, 0, 4)
        with pytest.raises(ValueError):
            mgon_area(fib, 1, 2)
        with pytest.raises(UnsupportedFamilyError):
            mgon_area(SequenceFamily.perrin(), 1, 4)


class TestGeneralMgonArea:
    def test_fibonacci_examples(self):
        params = binet_params(SequenceFamily.fibonacci())
        assert general_mgon_area(params, 1, 3) == Fraction(1, 2)
        assert general_mgon_area(params, 1, 4) == Fraction(5, 2)

    def test_lucas_quadrilateral(self):
        params = binet_params(SequenceFamily.lucas())
        assert general_mgon_area(params, 1, 4) == Fraction(25, 2)


class TestPolygonalAreas:
    def test_triangle_values(self):
        assert polygonal_triangle_area(3, 1) == 4
        assert polygonal_triangle_area(4, 2) == 256
        assert polygonal_triangle_area(7, 1) == 100

    def test_mgon_values(self):
        assert polygonal_mgon_area(3, 1, 5) == 40
        assert polygonal_mgon_area(5, 1, 6) == 720
        assert polygonal_mgon_area(7, 1, 7) == 3500

    def test_triangle_case_reduces(self):
        for rank in range(3, 11):
            for k in range(1, 6):
                assert polygonal_mgon_area(rank, k, 3) == polygonal_triangle_area(
                    rank, k
                )

    def test_tetrahedral_growth_in_m(self):
        ratios = [
            polygonal_mgon_area(5, 2, m) / polygonal_triangle_area(5, 2)
            for m in range(3, 8)
        ]
        assert ratios == [1, 4, 10, 20, 35]

    def test_independent_of_start_index(self):
        rank = 6
        for n in range(0, 8):
            area = oracle_area(SequenceFamily.polygonal(rank), n, 2, 4)
            assert area == polygonal_mgon_area(rank, 2, 4)

    def test_matches_oracle(self):
        for rank in range(3, 9):
            family = SequenceFamily.polygonal(rank)
            for n in range(0, 4):
                for k in range(1, 4):
                    for m in range(3, 8):
                        assert polygonal_mgon_area(rank, k, m) == oracle_area(
                            family, n, k, m
                        )

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            polygonal_triangle_area(2, 1)
        with pytest.raises(ValueError):
            polygonal_triangle_area(3, 0)
        with pytest.raises(ValueError):
            polygonal_mgon_area(3, 1, 2)
