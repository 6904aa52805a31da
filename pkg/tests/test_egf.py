from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from tauseq.counting import hereditary_count
from tauseq.egf import (
    IDENTITY_NAMES,
    TruncatedEGF,
    ZeroConstantTermError,
    exp_neg_w,
    monomial,
    one,
    tree_series,
    verify_identity,
)


def fubini_denominator(order):
    return one(order) - monomial(order, 1) - monomial(order, 2, Fraction(1, 2))


def test_inverse_recovers_counts():
    inv = fubini_denominator(5).inverse()
    assert [inv.sequence_value(k) for k in range(6)] == [1, 1, 3, 12, 66, 450]


def test_inverse_roundtrip():
    f = fubini_denominator(8)
    assert f * f.inverse() == one(8)


def test_inverse_needs_constant_term():
    with pytest.raises(ZeroConstantTermError):
        monomial(4, 1).inverse()


def test_derivative_of_exponential_series():
    e = TruncatedEGF.from_sequence([1] * 9)
    assert e.derivative() == TruncatedEGF.from_sequence([1] * 8)


def test_shift_and_scale():
    f = TruncatedEGF.from_coeffs([1, 2, 3])
    assert f.shift_mul_x().coeffs == (Fraction(0), Fraction(1), Fraction(2))
    assert f.scale(2).coeffs == (Fraction(2), Fraction(4), Fraction(6))


def test_tree_series_coefficients():
    t = tree_series(5)
    assert t.coeffs[0] == 0
    assert t.coeffs[3] == Fraction(3, 2)
    assert t.sequence_value(4) == 4**3


def test_exp_neg_w_constant_term():
    g = exp_neg_w(6)
    assert g.coeffs[0] == 1
    assert g.sequence_value(4) == 5**3


def test_exp_of_tree_series_matches_closed_coefficients():
    order = 12
    assert tree_series(order).exp() == exp_neg_w(order)


def test_square_of_exp_neg_w():
    order = 10
    squared = exp_neg_w(order) * exp_neg_w(order)
    for n in range(order + 1):
        expected = 1 if n == 0 else 2 * (n + 2) ** (n - 1)
        assert squared.sequence_value(n) == expected


def test_tree_fixed_point():
    report = verify_identity("treefixedpoint", 20)
    assert report.holds_everywhere


def test_identities_hold_to_order_12():
    for name in IDENTITY_NAMES:
        report = verify_identity(name, 12)
        assert report.holds_everywhere, (name, report.first_mismatch)
        assert report.holds_to == 12


def test_report_json_shape():
    report = verify_identity("gfubini", 6)
    assert report.to_json() == {
        "identity": "gfubini",
        "order": 6,
        "holds_to": 6,
        "first_mismatch": None,
    }


def test_unknown_identity():
    with pytest.raises(ValueError):
        verify_identity("nope", 5)


def test_mismatch_reporting():
    lhs = TruncatedEGF.from_coeffs([1, 2, 3])
    rhs = TruncatedEGF.from_coeffs([1, 2, 4])
    from tauseq.egf import _compare

    report = _compare("demo", 2, lhs, rhs)
    assert report.holds_to == 1
    assert report.first_mismatch == (2, Fraction(3), Fraction(4))
    assert report.mismatched_orders == (2,)


@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=8))
def test_exp_is_multiplicative_in_first_order(values):
    # exp(f)*exp(-f) telescopes to 1 for any series with zero constant term
    coeffs = [0] + values
    f = TruncatedEGF.from_coeffs(coeffs)
    assert f.exp() * f.scale(-1).exp() == one(len(coeffs) - 1)


def test_hereditary_count_feeds_series():
    assert [hereditary_count(b) for b in range(5)] == [1, 1, 3, 16, 125]
