"""Unit tests for membership functions, linguistic variables and rulebases."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.domain.exceptions import InvalidMembershipError, InvalidPartitionError, RulebaseError
from src.domain.value_objects.fuzzy_rule import FisSpec, FuzzyRule
from src.domain.value_objects.linguistic_variable import LinguisticVariable, uniform_partition
from src.domain.value_objects.triangular_mf import TriangularMf

LABELS = ("VL", "L", "M", "H", "VH")
unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestTriangularMf:
    """Test cases for TriangularMf."""

    def test_peak_and_feet(self):
        mf = TriangularMf(0.0, 0.5, 1.0)
        assert mf.degree(0.5) == 1.0
        assert mf.degree(0.0) == 0.0
        assert mf.degree(1.0) == 0.0
        assert mf.degree(0.25) == pytest.approx(0.5)
        assert mf.degree(0.75) == pytest.approx(0.5)

    def test_outside_support_is_zero(self):
        mf = TriangularMf(0.25, 0.5, 0.75)
        assert mf.degree(-3.0) == 0.0
        assert mf.degree(0.1) == 0.0
        assert mf.degree(0.9) == 0.0

    def test_shoulder_peak_is_one(self):
        left = TriangularMf(0.0, 0.0, 0.25)
        assert left.degree(0.0) == 1.0
        assert left.degree(0.125) == pytest.approx(0.5)

    def test_invalid_order_raises(self):
        with pytest.raises(InvalidMembershipError):
            TriangularMf(0.5, 0.2, 1.0)
        with pytest.raises(InvalidMembershipError):
            TriangularMf(0.0, 1.0, 0.5)

    def test_zero_support_raises(self):
        with pytest.raises(InvalidMembershipError):
            TriangularMf(0.3, 0.3, 0.3)

    def test_curve_matches_scalar_degree(self):
        grid = np.linspace(-0.5, 1.5, 2001)
        for mf in (TriangularMf(0.0, 0.5, 1.0), TriangularMf(0.0, 0.0, 0.25), TriangularMf(0.75, 1.0, 1.0)):
            expected = np.array([mf.degree(x) for x in grid])
            np.testing.assert_allclose(mf.curve(grid), expected, atol=1e-12)

    @given(x=st.floats(min_value=-10, max_value=10, allow_nan=False))
    def test_degree_bounded(self, x):
        assert 0.0 <= TriangularMf(-0.25, 0.0, 0.25).degree(x) <= 1.0

    @given(x=unit, dx=st.floats(min_value=0.0, max_value=1e-3))
    def test_degree_lipschitz(self, x, dx):
        mf = TriangularMf(0.25, 0.5, 0.75)
        assert abs(mf.degree(x + dx) - mf.degree(x)) <= dx / 0.25 + 1e-12


class TestUniformPartition:
    """Test cases for the canonical five-term partition."""

    def test_peaks_and_feet(self):
        variable = uniform_partition("x", 0.0, 1.0, LABELS)
        assert [mf.e for _, mf in variable.terms] == [0.0, 0.25, 0.5, 0.75, 1.0]
        assert variable.term("VL") == TriangularMf(-0.25, 0.0, 0.25)
        assert variable.term("VH") == TriangularMf(0.75, 1.0, 1.25)

    def test_endpoints_saturated(self):
        variable = uniform_partition("x", 0.0, 1.0, LABELS)
        assert variable.fuzzify(0.0)["VL"] == 1.0
        assert variable.fuzzify(1.0)["VH"] == 1.0

    @given(x=unit)
    def test_memberships_sum_to_one(self, x):
        variable = uniform_partition("x", 0.0, 1.0, LABELS)
        assert sum(variable.fuzzify(x).values()) == pytest.approx(1.0, abs=1e-9)

    @given(x=unit)
    def test_at_most_two_terms_active(self, x):
        variable = uniform_partition("x", 0.0, 1.0, LABELS)
        assert sum(1 for degree in variable.fuzzify(x).values() if degree > 0) <= 2

    def test_out_of_domain_input_is_clamped(self):
        variable = uniform_partition("x", 0.0, 1.0, LABELS)
        assert variable.fuzzify(1.7) == variable.fuzzify(1.0)
        assert variable.fuzzify(-0.2) == variable.fuzzify(0.0)

    def test_other_domain(self):
        variable = uniform_partition("speed", 0.0, 100.0, LABELS)
        assert variable.term("M").e == 50.0
        assert variable.fuzzify(62.5)["M"] == pytest.approx(0.5)

    def test_too_few_terms_raises(self):
        with pytest.raises(InvalidPartitionError):
            uniform_partition("x", 0.0, 1.0, ("only",), n=1)

    def test_label_count_mismatch_raises(self):
        with pytest.raises(InvalidPartitionError):
            uniform_partition("x", 0.0, 1.0, LABELS[:4])

    def test_unknown_term_raises(self):
        with pytest.raises(RulebaseError):
            uniform_partition("x", 0.0, 1.0, LABELS).term("XL")

    def test_duplicate_labels_raise(self):
        with pytest.raises(RulebaseError):
            LinguisticVariable("x", 0.0, 1.0, (("A", TriangularMf(0, 0, 1)), ("A", TriangularMf(0, 1, 1))))


def two_input_fis(rules):
    a = uniform_partition("a", 0.0, 1.0, LABELS)
    b = uniform_partition("b", 0.0, 1.0, LABELS)
    out = uniform_partition("out", 0.0, 1.0, LABELS)
    return FisSpec("test", (a, b), out, tuple(rules))


class TestFisSpec:
    """Test cases for FisSpec validation."""

    def test_valid_spec(self):
        fis = two_input_fis([FuzzyRule.of({"a": "VL", "b": "VL"}, "M")])
        assert fis.input_names == ("a", "b")
        assert fis.input("b").name == "b"

    def test_antecedent_order_does_not_matter(self):
        assert FuzzyRule.of({"a": "L", "b": "H"}, "M") == FuzzyRule.of({"b": "H", "a": "L"}, "M")

    def test_empty_rules_raise(self):
        with pytest.raises(RulebaseError):
            two_input_fis([])

    def test_unknown_label_raises(self):
        with pytest.raises(RulebaseError):
            two_input_fis([FuzzyRule.of({"a": "XX", "b": "VL"}, "M")])

    def test_unknown_consequent_raises(self):
        with pytest.raises(RulebaseError):
            two_input_fis([FuzzyRule.of({"a": "VL", "b": "VL"}, "Huge")])

    def test_duplicate_antecedent_raises(self):
        with pytest.raises(RulebaseError):
            two_input_fis(
                [
                    FuzzyRule.of({"a": "VL", "b": "VL"}, "M"),
                    FuzzyRule.of({"a": "VL", "b": "VL"}, "H"),
                ]
            )

    def test_missing_variable_in_antecedent_raises(self):
        with pytest.raises(RulebaseError):
            two_input_fis([FuzzyRule.of({"a": "VL"}, "M")])
