"""q-Pochhammer product and geometric-tail series: values, certificates, domains."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgamma import (
    Branch,
    ConvergenceError,
    DomainError,
    QParameter,
    SUPPORTED_BASE_MAX,
    TruncationPolicy,
    geometric_tail_sum,
    qpochhammer_inf,
)

Q_HALF = QParameter(0.5, Branch.LESS_THAN_ONE)

# Frozen reference values, minted with tools/mint_reference_values.py
# (mpmath at 50 digits, brute-force partial products/sums).
QQ_INF_AT_HALF = 0.288788095086602
GEO_SHIFT1_AT_HALF = 1.60669515241529
GEO_SHIFT2_AT_HALF = 0.606695152415292


class TestQPochhammer:
    def test_zero_argument_gives_exact_one(self):
        res = qpochhammer_inf(0.0, Q_HALF)
        assert res.value == 1.0
        assert res.log_value == 0.0
        assert res.error_bound == 0.0

    def test_unit_argument_vanishes_without_error(self):
        res = qpochhammer_inf(1.0, Q_HALF)
        assert res.value == 0.0
        assert not res.log_defined
        assert math.isnan(res.log_value)

    def test_q_q_infinity_at_half(self):
        res = qpochhammer_inf(0.5, Q_HALF)
        assert res.value == pytest.approx(QQ_INF_AT_HALF, rel=5e-13)
        assert abs(res.log_value - math.log(QQ_INF_AT_HALF)) <= res.error_bound + 1e-14

    def test_negative_argument(self):
        # (-0.5;0.5)_inf = prod (1 + 0.5^(n+1)) > 1
        res = qpochhammer_inf(-0.5, Q_HALF)
        assert res.value > 1.0
        assert res.log_value > 0.0

    def test_terms_respect_cap(self):
        res = qpochhammer_inf(0.5, Q_HALF)
        assert 0 < res.terms_used <= 10_000_000

    def test_convergence_error_when_cap_binds(self):
        policy = TruncationPolicy(epsilon=1e-13, max_terms=10)
        q = QParameter(0.9, Branch.LESS_THAN_ONE)
        with pytest.raises(ConvergenceError) as exc:
            qpochhammer_inf(0.9, q, policy)
        assert exc.value.terms_used == 10
        assert exc.value.achieved_bound > 1e-13

    def test_supported_base_cut(self):
        q = QParameter(0.99995, Branch.LESS_THAN_ONE)
        with pytest.raises(ConvergenceError):
            qpochhammer_inf(0.5, q)
        assert 0.99995 > SUPPORTED_BASE_MAX

    def test_branch_rejected(self):
        q2 = QParameter(2.0, Branch.GREATER_THAN_ONE)
        with pytest.raises(DomainError):
            qpochhammer_inf(0.5, q2)

    def test_argument_preconditions(self):
        with pytest.raises(DomainError):
            qpochhammer_inf(1.5, Q_HALF)  # a > 1
        with pytest.raises(DomainError):
            qpochhammer_inf(-3.0, Q_HALF)  # |a| q >= 1
        with pytest.raises(DomainError):
            qpochhammer_inf(math.nan, Q_HALF)


class TestGeometricTailSum:
    def test_value_at_shift_one(self):
        res = geometric_tail_sum(1.0, Q_HALF)
        assert res.value == pytest.approx(GEO_SHIFT1_AT_HALF, rel=5e-13)

    def test_value_at_shift_two(self):
        res = geometric_tail_sum(2.0, Q_HALF)
        assert res.value == pytest.approx(GEO_SHIFT2_AT_HALF, rel=5e-13)

    def test_shift_two_below_shift_one(self):
        assert geometric_tail_sum(2.0, Q_HALF).value < geometric_tail_sum(1.0, Q_HALF).value

    def test_tiny_q_single_term(self):
        q = QParameter(1e-8, Branch.LESS_THAN_ONE)
        res = geometric_tail_sum(1.0, q)
        assert abs(res.value - 1e-8 / (1.0 - 1e-8)) <= 1e-15

    def test_shift_must_be_positive(self):
        with pytest.raises(DomainError):
            geometric_tail_sum(0.0, Q_HALF)
        with pytest.raises(DomainError):
            geometric_tail_sum(-1.0, Q_HALF)

    def test_convergence_error_when_cap_binds(self):
        policy = TruncationPolicy(epsilon=1e-13, max_terms=3)
        with pytest.raises(ConvergenceError):
            geometric_tail_sum(1.0, Q_HALF, policy)


class TestParameterTypes:
    def test_q_equal_one_rejected(self):
        with pytest.raises(DomainError):
            QParameter(1.0, Branch.LESS_THAN_ONE)
        with pytest.raises(DomainError):
            QParameter(1.0, Branch.GREATER_THAN_ONE)
        with pytest.raises(DomainError):
            QParameter.from_value(1.0)

    def test_branch_mismatch_rejected(self):
        with pytest.raises(DomainError):
            QParameter(2.0, Branch.LESS_THAN_ONE)
        with pytest.raises(DomainError):
            QParameter(0.5, Branch.GREATER_THAN_ONE)

    def test_nonfinite_rejected(self):
        for bad in (math.nan, math.inf, -math.inf):
            with pytest.raises(DomainError):
                QParameter.from_value(bad)

    def test_from_value_picks_branch(self):
        assert QParameter.from_value(0.25).branch is Branch.LESS_THAN_ONE
        assert QParameter.from_value(4.0).branch is Branch.GREATER_THAN_ONE
        assert QParameter.from_value(4.0).product_base == 0.25

    def test_policy_validation(self):
        for eps in (0.0, 1.0, -1e-3, 2.0):
            with pytest.raises(DomainError):
                TruncationPolicy(epsilon=eps)
        with pytest.raises(DomainError):
            TruncationPolicy(max_terms=0)


# ---------------------------------------------------------------------------
# properties


@settings(deadline=None)
@given(a=st.floats(0.001, 0.999), q=st.floats(0.05, 0.95))
def test_pochhammer_recursion(a, q):
    # (a;q)_inf = (1-a) * (aq;q)_inf
    qp = QParameter(q, Branch.LESS_THAN_ONE)
    lhs = qpochhammer_inf(a, qp).value
    rhs = (1.0 - a) * qpochhammer_inf(a * q, qp).value
    assert lhs == pytest.approx(rhs, rel=1e-12)


@settings(deadline=None)
@given(
    shift=st.floats(0.1, 10.0),
    delta=st.floats(0.05, 10.0),
    q=st.floats(0.05, 0.95),
)
def test_geometric_sum_strictly_decreasing_in_shift(shift, delta, q):
    qp = QParameter(q, Branch.LESS_THAN_ONE)
    assert geometric_tail_sum(shift, qp).value > geometric_tail_sum(shift + delta, qp).value


@settings(deadline=None)
@given(a=st.floats(0.01, 0.99), q=st.floats(0.05, 0.95))
def test_tail_bound_soundness(a, q):
    # Tightening epsilon a hundredfold moves log_value by no more than the
    # coarser run's reported bound.
    qp = QParameter(q, Branch.LESS_THAN_ONE)
    coarse_policy = TruncationPolicy(epsilon=1e-8)
    fine_policy = TruncationPolicy(epsilon=1e-10)
    coarse = qpochhammer_inf(a, qp, coarse_policy)
    fine = qpochhammer_inf(a, qp, fine_policy)
    assert abs(fine.log_value - coarse.log_value) <= coarse.error_bound


@settings(deadline=None)
@given(a=st.floats(-0.9, 0.99), q=st.floats(0.05, 0.95))
def test_log_space_consistency(a, q):
    qp = QParameter(q, Branch.LESS_THAN_ONE)
    res = qpochhammer_inf(a, qp)
    if res.value > 0:
        assert abs(math.exp(res.log_value) - res.value) <= 4 * np.spacing(res.value)


@settings(deadline=None)
@given(shift=st.floats(0.2, 30.0), q=st.floats(0.05, 0.95))
def test_geometric_log_space_consistency(shift, q):
    qp = QParameter(q, Branch.LESS_THAN_ONE)
    res = geometric_tail_sum(shift, qp)
    if res.value > 0:
        assert abs(math.exp(res.log_value) - res.value) <= 4 * np.spacing(res.value)
