import random
from fractions import Fraction

import pytest

from tschakaloff import (
    ApproximantRecord,
    EstimationError,
    ProblemInstance,
    RationalInterval,
    denominator_growth_exponent,
    empirical_exponents,
    estimate_measure,
    gamma0_enclosure,
    golden_shift,
    hypothesis_check,
    irrationality_exponent_bound,
    remainder_decay_exponent,
    sqrt_enclosure,
)

F = Fraction

# Frozen 20-digit values of the closed forms, checked against the interval
# evaluations below.
GROWTH_LIMIT = F("1.8090169943749474241")  # (5 + sqrt5)/4
DECAY_AT_ZERO = F("-1.1180339887498948482")  # -sqrt5/2
EXPONENT_AT_ZERO = F("2.6180339887498948482")  # (3 + sqrt5)/2
GAMMA0 = F("0.3819660112501051518")  # (3 - sqrt5)/2


def both_decay_forms(gamma: RationalInterval, width=F(1, 2**64)):
    """The two algebraic shapes of the decay limit, evaluated independently."""
    root = sqrt_enclosure(F(5), width)
    beta = (root - 1) / 2
    phi = beta + 1
    gamma0 = (3 - root) / 2
    expanded = -(1 - gamma) * phi * phi / 2 + gamma * phi + beta * beta / 2
    factored = -(root * (root + 1) * (gamma0 - gamma)) / (2 * (root - 1))
    return expanded, factored


class TestClosedFormConstants:
    def test_growth_limit(self):
        enc = denominator_growth_exponent()
        assert abs(enc.midpoint - GROWTH_LIMIT) < F(1, 10**18)
        assert enc.width <= F(1, 2**64)

    def test_growth_limit_algebraic_identity(self):
        # (1 + beta) + beta^2/2 with beta^2 = 1 - beta gives the same value
        root = sqrt_enclosure(F(5), F(1, 2**64))
        beta = (root - 1) / 2
        alt = (1 + beta) + beta * beta / 2
        assert alt.overlaps(denominator_growth_exponent())

    def test_growth_limit_is_gamma_free(self):
        # the expanded form (1-g)(1+b) + g(1+b) + b^2/2 collapses to the
        # constant for any admissible gamma interval
        rng = random.Random(5)
        root = sqrt_enclosure(F(5), F(1, 2**64))
        beta = (root - 1) / 2
        const = denominator_growth_exponent()
        for _ in range(10):
            mid = F(rng.randint(0, 3818), 10**4)
            gamma = RationalInterval(mid, mid + F(1, 10**6))
            expanded = (1 - gamma) * (1 + beta) + gamma * (1 + beta) + beta * beta / 2
            assert expanded.overlaps(const)

    def test_gamma0(self):
        enc = gamma0_enclosure()
        assert abs(enc.midpoint - GAMMA0) < F(1, 10**18)


class TestDecayExponent:
    def test_at_gamma_zero(self):
        enc = remainder_decay_exponent(RationalInterval.point(0))
        assert abs(enc.midpoint - DECAY_AT_ZERO) < F(1, 10**15)
        assert enc.hi < 0

    def test_vanishes_at_threshold(self):
        gamma = gamma0_enclosure(F(1, 2**40))
        enc = remainder_decay_exponent(gamma)
        assert enc.contains(0)

    def test_strictly_negative_below_threshold(self):
        for mid in (F(0), F(1, 10), F(3, 10), F(38, 100)):
            gamma = RationalInterval(mid, mid + F(1, 10**6))
            assert remainder_decay_exponent(gamma).hi < 0

    def test_two_forms_agree_on_random_gammas(self):
        rng = random.Random(31415)
        for _ in range(20):
            mid = F(rng.randint(0, 3800), 10**4)
            gamma = RationalInterval(mid, mid + F(1, 10**5))
            expanded, factored = both_decay_forms(gamma)
            assert expanded.overlaps(factored)
            assert remainder_decay_exponent(gamma).overlaps(expanded)

    def test_rejects_gamma_outside_unit_interval(self):
        with pytest.raises(ValueError):
            remainder_decay_exponent(RationalInterval(F(-1, 10), F(0)))
        with pytest.raises(ValueError):
            remainder_decay_exponent(RationalInterval(F(1, 2), F(1)))


class TestIrrationalityExponentBound:
    def test_at_gamma_zero(self):
        enc = irrationality_exponent_bound(RationalInterval.point(0))
        assert abs(enc.midpoint - EXPONENT_AT_ZERO) < F(1, 10**15)

    def test_pole_near_threshold(self):
        gamma = RationalInterval(F("0.3819"), F("0.38196"))
        enc = irrationality_exponent_bound(gamma)
        assert enc.lo > 100

    def test_rejects_unseparated_gamma(self):
        with pytest.raises(ValueError):
            irrationality_exponent_bound(RationalInterval(F(38, 100), F(39, 100)))

    def test_consistent_with_exponent_ratio(self):
        # 1 + 1/c with c = 2(g0 - g)/(sqrt5 - 1) from the two limit laws
        root = sqrt_enclosure(F(5), F(1, 2**80))
        gamma = RationalInterval(F(1, 10), F(1, 10) + F(1, 2**40))
        c = 2 * (((3 - root) / 2) - gamma) / (root - 1)
        via_ratio = 1 + RationalInterval.point(1) / c
        assert irrationality_exponent_bound(gamma).overlaps(via_ratio)


class TestHypothesisCheck:
    def test_unit_denominator_holds(self, inst21):
        result = hypothesis_check(inst21)
        assert result.satisfied
        assert result.gamma.lo == result.gamma.hi == 0
        assert result.gamma.hi < result.gamma0.lo

    def test_seven_halves_holds(self):
        result = hypothesis_check(ProblemInstance.from_rationals(F(7, 2), F(1)))
        assert result.satisfied
        assert result.gamma.hi < result.gamma0.lo  # certified separation

    def test_three_halves_fails(self):
        result = hypothesis_check(ProblemInstance.from_rationals(F(3, 2), F(1)))
        assert not result.satisfied
        assert result.gamma.lo > result.gamma0.hi  # certified separation


class TestEmpiricalExponents:
    def test_first_order_has_zero_growth_ratio(self, records21, inst21):
        reports = empirical_exponents(records21[:3], inst21)
        assert reports[0].n == 1
        assert reports[0].empirical_B == 0  # |B_1| = 1

    def test_decay_column_negative(self, records21, inst21):
        reports = empirical_exponents(records21, inst21)
        assert all(r.empirical_I < 0 for r in reports)

    def test_growth_deviation_shrinks(self, records21, inst21):
        reports = {r.n: r for r in empirical_exponents(records21, inst21)}
        deviations = [
            abs(reports[n].empirical_B - GROWTH_LIMIT) for n in (10, 20, 40)
        ]
        assert deviations[0] > deviations[1] > deviations[2]

    def test_skips_uncertified_rows(self, records21, inst21):
        fake = ApproximantRecord(
            n=99,
            m=golden_shift(99),
            A=1,
            B=0,
            remainder=RationalInterval(F(-1), F(1)),
            nonzero_certified=False,
        )
        reports = empirical_exponents(list(records21[:5]) + [fake], inst21)
        assert all(r.n != 99 for r in reports)

    def test_consecutive_log_ratio_approaches_one(self, records21, inst21):
        from tschakaloff import ln_enclosure

        def log_mag(record):
            return ln_enclosure(F(abs(record.B)), F(1, 2**32)).midpoint

        by_n = {r.n: r for r in records21}
        early = log_mag(by_n[11]) / log_mag(by_n[10])
        late = log_mag(by_n[51]) / log_mag(by_n[50])
        assert abs(late - 1) < abs(early - 1)


class TestMeasureEstimate:
    def test_exact_power_law_recovered(self):
        # |remainder| = |B|^(-2) exactly: the fit must return c = 2 exactly
        records = []
        for i in range(1, 11):
            exponent = 64 + 8 * i
            records.append(
                ApproximantRecord(
                    n=i,
                    m=golden_shift(i),
                    A=1,
                    B=2**exponent,
                    remainder=RationalInterval.point(F(1, 2 ** (2 * exponent))),
                    nonzero_certified=True,
                )
            )
        inst = ProblemInstance.from_rationals(F(2), F(1))
        estimate = estimate_measure(records, inst)
        assert estimate.c_hat == 2
        assert estimate.empirical_exponent == F(3, 2)

    def test_workhorse_instance_close_to_limit(self, records21, inst21):
        estimate = estimate_measure(records21[29:60], inst21)
        relative = abs(estimate.empirical_exponent / EXPONENT_AT_ZERO - 1)
        assert relative < F(5, 100)
        assert estimate.predicted_exponent.contains(EXPONENT_AT_ZERO)

    def test_needs_five_records(self, records21, inst21):
        with pytest.raises(EstimationError):
            estimate_measure(records21[:4], inst21)

    def test_needs_increasing_denominators(self, records21, inst21):
        shuffled = list(records21[:10]) + [records21[5]]
        with pytest.raises(EstimationError):
            estimate_measure(shuffled, inst21)
