import json
from fractions import Fraction
from math import isqrt

import pytest

from tschakaloff import (
    ApproximantRecord,
    ProblemInstance,
    SeriesTermBudget,
    WitnessNotFoundError,
    approximant_denominator,
    approximant_numerator,
    approximant_pair,
    compute_record,
    find_witness,
    golden_shift,
    normalizer,
    remainder_series_enclosure,
)

F = Fraction

GRID_QS = (F(2), F(-3), F(7, 2), F(5, 3))
GRID_ZS = (F(1), F(1, 2), F(-2), F(3, 7))

REMAINDER_2_1_N1 = F("0.3583674393448461337")


def oracle_pair(inst: ProblemInstance, n: int) -> tuple[int, int]:
    """Brute-force reimplementation of the approximant pair.

    Uses the closed-form coefficient route (Gaussian binomial as a product
    of rational factors) and the literal double sum, sharing no code with
    the library's iterative-expansion and prefix-sum path.
    """
    q, z = inst.q, inst.z
    m = (isqrt(5 * n * n) - n) // 2

    def gauss(top: int, k: int) -> F:
        value = F(1)
        for j in range(1, k + 1):
            value *= (q ** (top - k + j) - 1) / (q**j - 1)
        return value

    coeffs = [
        (-1) ** k * gauss(n, k) * q ** (k * (k + 1) // 2) for k in range(n + 1)
    ]
    scale = F(
        inst.z1**n
        * inst.z2**m
        * inst.q1 ** (m * (m - 1) // 2)
        * inst.q2 ** (n * (n + 1) // 2 + n * (n - 1) // 2 + n * m)
    )
    b_sum = sum(
        z ** (-k) * coeffs[k] * q ** (k * (k - 1) // 2 + k * m)
        for k in range(n + 1)
    )
    a_sum = sum(
        coeffs[k]
        * sum(
            z ** (l - k) * q ** (k * (k - 1) // 2 + k * m - l * (l - 1) // 2)
            for l in range(k + m + 1)
        )
        for k in range(n + 1)
    )
    a_exact, b_exact = scale * a_sum, scale * b_sum
    assert a_exact.denominator == 1 and b_exact.denominator == 1
    return a_exact.numerator, b_exact.numerator


class TestApproximantPair:
    def test_hand_anchors_q2_z1(self, inst21):
        assert approximant_pair(inst21, 1) == (-3, -1)
        assert approximant_pair(inst21, 2) == (140, 53)
        assert approximant_numerator(inst21, 1) == -3
        assert approximant_denominator(inst21, 1) == -1

    def test_against_brute_force_oracle(self):
        for q in GRID_QS:
            for z in GRID_ZS:
                inst = ProblemInstance.from_rationals(q, z)
                for n in range(1, 9):
                    assert approximant_pair(inst, n) == oracle_pair(inst, n)

    def test_oracle_deeper_on_workhorse(self, inst21):
        for n in range(1, 13):
            assert approximant_pair(inst21, n) == oracle_pair(inst21, n)

    def test_integrality_small_grid(self):
        # the unit-denominator assertion runs inside the pair computation;
        # the full 16-instance grid to n=40 runs in the acceptance suite
        for q in GRID_QS:
            for z in GRID_ZS:
                inst = ProblemInstance.from_rationals(q, z)
                for n in range(1, 13):
                    a_value, b_value = approximant_pair(inst, n)
                    assert isinstance(a_value, int)
                    assert isinstance(b_value, int)

    def test_rejects_nonpositive_n(self, inst21):
        with pytest.raises(ValueError):
            approximant_pair(inst21, 0)


class TestNormalizer:
    def test_unit_for_integer_parameters(self, inst21):
        assert normalizer(inst21, 1) == 1  # m = 0, all bases are 1 or 2^0
        assert normalizer(inst21, 4) == 2  # m = 2: q1^(m(m-1)/2) = 2

    def test_clears_worst_exponents(self):
        # z exponent spans [-n, m]; q exponents span the normalizer powers
        inst = ProblemInstance.from_rationals(F(7, 2), F(3, 7))
        n = 6
        m = golden_shift(n)
        scale = normalizer(inst, n)
        assert scale == F(
            3**n * 7**m * 7 ** (m * (m - 1) // 2) * 2 ** (n * n + n * m)
        )


class TestComputeRecord:
    def test_anchor_record(self, inst21):
        record = compute_record(inst21, 1, SeriesTermBudget(10_000, F(1, 10**12)))
        assert (record.n, record.m, record.A, record.B) == (1, 0, -3, -1)
        assert record.nonzero_certified
        assert record.remainder.contains(REMAINDER_2_1_N1)
        assert record.remainder.width <= F(1, 10**12)

    def test_two_routes_overlap_explicitly(self, inst21):
        record = compute_record(inst21, 1)
        direct = remainder_series_enclosure(inst21, 1)
        scaled = direct * normalizer(inst21, 1)
        assert record.remainder.overlaps(scaled)

    def test_two_routes_full_grid(self):
        for q in GRID_QS:
            for z in GRID_ZS:
                inst = ProblemInstance.from_rationals(q, z)
                for n in range(1, 41):
                    compute_record(inst, n)  # overlap asserted internally

    def test_width_shrinks_with_budget(self, inst21):
        wide = compute_record(inst21, 3, SeriesTermBudget(10_000, F(1, 2**20)))
        narrow = compute_record(inst21, 3, SeriesTermBudget(10_000, F(1, 2**80)))
        assert narrow.remainder.width < wide.remainder.width

    def test_remainders_decay(self, records21):
        early = min(r.remainder.abs_bounds()[0] for r in records21[:5])
        late = max(r.remainder.abs_bounds()[1] for r in records21[29:40])
        assert late < early

    def test_remainders_decay_step_by_step(self, records21):
        for previous, current in zip(records21[:40], records21[1:40]):
            assert current.remainder.abs_bounds()[1] < previous.remainder.abs_bounds()[0]

    def test_concurrent_records_match_sequential(self, inst21):
        from concurrent.futures import ThreadPoolExecutor

        orders = list(range(1, 9))
        sequential = [compute_record(inst21, n) for n in orders]
        with ThreadPoolExecutor(max_workers=4) as pool:
            concurrent = list(pool.map(lambda n: compute_record(inst21, n), orders))
        assert concurrent == sequential

    def test_shift_field_matches_golden_shift(self, records21):
        for record in records21:
            assert record.m == golden_shift(record.n)

    def test_certification_flags(self, records21):
        for record in records21:
            if record.nonzero_certified:
                assert not record.remainder.contains_zero()


class TestRecordSerialization:
    def test_json_dict_shape(self, inst21):
        record = compute_record(inst21, 1)
        data = record.to_json_dict()
        assert list(data) == ["n", "m", "A", "B", "I_lo", "I_hi", "nonzero"]
        assert data["n"] == 1 and data["m"] == 0
        assert data["A"] == "-3" and data["B"] == "-1"
        assert data["nonzero"] is True
        json.dumps(data)  # must be JSON-serializable as-is

    def test_round_trip(self, inst21):
        record = compute_record(inst21, 2)
        clone = ApproximantRecord.from_json_dict(record.to_json_dict())
        assert clone == record


class TestFindWitness:
    def test_small_denominators(self, inst21):
        n, record = find_witness(inst21, 1, 40)
        assert n == 1
        assert record.remainder.abs_bounds()[1] < 1
        n, record = find_witness(inst21, 2, 40)
        assert n == 1
        assert 2 * record.remainder.abs_bounds()[1] < 1

    def test_thousand(self, inst21):
        n, record = find_witness(inst21, 1000, 40)
        assert n == 3
        low, high = record.remainder.abs_bounds()
        assert 0 < 1000 * low and 1000 * high < 1

    def test_inapplicable_ratio_times_out(self):
        inst = ProblemInstance.from_rationals(F(3, 2), F(1))
        with pytest.raises(WitnessNotFoundError):
            find_witness(inst, 10**6, 20)

    def test_exhausted_window(self, inst21):
        with pytest.raises(WitnessNotFoundError):
            find_witness(inst21, 10**50, 2)

    def test_rejects_bad_arguments(self, inst21):
        with pytest.raises(ValueError):
            find_witness(inst21, 0, 10)
        with pytest.raises(ValueError):
            find_witness(inst21, 1, 0)
