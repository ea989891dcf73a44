"""q-gamma on both branches and the q-digamma: anchors, recurrence, derivatives."""

import math

import pytest

from qgamma import (
    ConvergenceError,
    DomainError,
    PoleError,
    QParameter,
    TruncationPolicy,
    euler_gamma,
    qdigamma,
    qgamma,
    qgamma_gt1,
    qgamma_lt1,
)

# Frozen reference values, minted with tools/mint_reference_values.py
# (mpmath at 50 digits, direct-product definition of the q-gamma).
QGAMMA_TABLE_LT1 = {
    (0.1, 0.25): 2.00353782800602,
    (0.1, 0.5): 1.27964149821155,
    (0.1, 1.5): 0.972203695477417,
    (0.1, 2.5): 1.04606657244889,
    (0.1, 5.0): 1.356531,
    (0.5, 0.25): 2.93248824321104,
    (0.5, 0.5): 1.57203272578632,
    (0.5, 1.5): 0.920875450271284,
    (0.5, 2.5): 1.19059362502753,
    (0.5, 5.0): 4.921875,
    (0.9, 0.25): 3.50364971860457,
    (0.9, 0.5): 1.73818435156216,
    (0.9, 1.5): 0.891978883023764,
    (0.9, 2.5): 1.30393961339206,
    (0.9, 5.0): 17.707411,
}
QGAMMA_TABLE_GT1 = {
    (2.0, 0.5): 2.03867422000555,
    (2.0, 1.5): 0.844446511186689,
    (2.0, 3.0): 3.0,
    (5.0, 0.5): 2.52686589021913,
    (5.0, 1.5): 0.780844502584091,
    (5.0, 3.0): 6.0,
}
QDIGAMMA_Y1_AT_HALF = -0.420529034356046
QDIGAMMA_Y2_AT_HALF = 0.2726181462039


def _param(q):
    return QParameter.from_value(q)


class TestNormalization:
    @pytest.mark.parametrize("q", [0.1, 0.3, 0.5, 0.7, 0.9, 2.0, 5.0, 10.0])
    @pytest.mark.parametrize("x", [1.0, 2.0])
    def test_gamma_is_one_at_one_and_two(self, q, x):
        res = qgamma(x, _param(q))
        assert abs(res.value - 1.0) <= 1e-13


class TestOracleTable:
    @pytest.mark.parametrize("key", sorted(QGAMMA_TABLE_LT1))
    def test_lt1_matches_direct_product_oracle(self, key):
        q, x = key
        res = qgamma_lt1(x, _param(q))
        assert res.value == pytest.approx(QGAMMA_TABLE_LT1[key], rel=5e-12)

    @pytest.mark.parametrize("key", sorted(QGAMMA_TABLE_GT1))
    def test_gt1_matches_direct_product_oracle(self, key):
        q, x = key
        res = qgamma_gt1(x, _param(q))
        assert res.value == pytest.approx(QGAMMA_TABLE_GT1[key], rel=5e-12)

    def test_q_factorial_values(self):
        assert qgamma_lt1(3.0, _param(0.5)).value == pytest.approx(1.5, abs=1e-13)
        assert qgamma_gt1(2.0, _param(2.0)).value == pytest.approx(1.0, abs=1e-13)
        assert qgamma_gt1(3.0, _param(2.0)).value == pytest.approx(3.0, abs=2e-13)


class TestRecurrence:
    @pytest.mark.parametrize("q", [0.1, 0.3, 0.5, 0.7, 0.9])
    def test_lt1_recurrence(self, q):
        # qgamma(x+1) = (1-q^x)/(1-q) * qgamma(x)
        qp = _param(q)
        for k in range(1, 21):
            x = 0.25 * k
            ratio = math.exp(
                qgamma_lt1(x + 1.0, qp).log_value - qgamma_lt1(x, qp).log_value
            )
            expected = (1.0 - q**x) / (1.0 - q)
            assert ratio == pytest.approx(expected, rel=1e-11)

    @pytest.mark.parametrize("q", [2.0, 5.0, 10.0])
    def test_gt1_recurrence(self, q):
        # qgamma(x+1) = (q^x-1)/(q-1) * qgamma(x)
        qp = _param(q)
        for k in range(1, 21):
            x = 0.25 * k
            ratio = math.exp(
                qgamma_gt1(x + 1.0, qp).log_value - qgamma_gt1(x, qp).log_value
            )
            expected = (q**x - 1.0) / (q - 1.0)
            assert ratio == pytest.approx(expected, rel=1e-11)


class TestPolesAndDomain:
    @pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -3.0 + 1e-13])
    def test_pole_raises(self, x):
        with pytest.raises(PoleError):
            qgamma_lt1(x, _param(0.5))
        with pytest.raises(PoleError):
            qgamma_gt1(x, _param(2.0))

    def test_negative_non_pole_best_effort(self):
        # one negative leading factor makes the value negative
        res = qgamma_lt1(-0.5, _param(0.5))
        assert res.value < 0.0
        assert not res.log_defined
        assert math.isfinite(res.log_value)
        assert res.value == pytest.approx(-math.exp(res.log_value))

    def test_branch_mismatch(self):
        with pytest.raises(DomainError):
            qgamma_lt1(1.0, _param(2.0))
        with pytest.raises(DomainError):
            qgamma_gt1(1.0, _param(0.5))

    def test_gt1_base_too_close_to_one(self):
        with pytest.raises(ConvergenceError):
            qgamma_gt1(2.0, _param(1.00005))

    def test_nonfinite_argument(self):
        with pytest.raises(DomainError):
            qgamma_lt1(math.inf, _param(0.5))


class TestQDigamma:
    def test_value_at_one(self):
        assert qdigamma(1.0, _param(0.5)) == pytest.approx(QDIGAMMA_Y1_AT_HALF, abs=1e-12)

    def test_value_at_two(self):
        assert qdigamma(2.0, _param(0.5)) == pytest.approx(QDIGAMMA_Y2_AT_HALF, abs=1e-12)

    def test_monotone_sample(self):
        assert qdigamma(2.0, _param(0.5)) > qdigamma(1.0, _param(0.5))

    def test_large_argument_limit(self):
        # the series tail is below 8e-19 here, leaving just -log(1-q)
        assert abs(qdigamma(60.0, _param(0.5)) - (-math.log1p(-0.5))) <= 1e-15

    def test_matches_log_gamma_finite_difference(self):
        h = 1e-6
        for q in (0.2, 0.5, 0.8):
            qp = _param(q)
            y = 0.5
            while y <= 10.0:
                fd = (
                    qgamma_lt1(y + h, qp).log_value - qgamma_lt1(y - h, qp).log_value
                ) / (2.0 * h)
                assert abs(qdigamma(y, qp) - fd) <= 1e-6
                y += 0.5

    def test_domain(self):
        with pytest.raises(DomainError):
            qdigamma(0.0, _param(0.5))
        with pytest.raises(DomainError):
            qdigamma(1.0, _param(2.0))


class TestClassicalLimit:
    @pytest.mark.parametrize("x", [0.5, 1.5, 2.5, 5.0])
    def test_gap_shrinks_towards_one(self, x):
        gaps = [
            abs(qgamma_lt1(x, _param(q)).value - euler_gamma(x))
            for q in (0.9, 0.99, 0.999)
        ]
        assert gaps[0] > gaps[1] > gaps[2]


class TestEvalResultContract:
    @pytest.mark.parametrize("q,x", [(0.3, 0.7), (0.9, 4.2), (3.0, 2.25)])
    def test_exp_log_matches_value(self, q, x):
        res = qgamma(x, _param(q))
        assert math.exp(res.log_value) == pytest.approx(res.value, rel=1e-15)

    def test_error_bound_is_sane(self):
        res = qgamma_lt1(2.5, _param(0.5))
        tighter = qgamma_lt1(2.5, _param(0.5), TruncationPolicy(epsilon=1e-15))
        assert abs(res.log_value - tighter.log_value) <= res.error_bound
