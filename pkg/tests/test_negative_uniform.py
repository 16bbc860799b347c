import math
from fractions import Fraction

import numpy as np
import pytest

from core import Die, ScalarMode, InvalidInputError, ParityError
from modules.closed_form import optimal_pair
from modules.negative_uniform import (
    t_polynomial_factors, expand_factors, leja_order, construct_uniform_dice, verify_uniform,
    default_partition, check_partition, iter_partitions, Outcome, IMPOSSIBLE_REASON
)


class TestFactors:
    def test_three_sided_pair(self):
        factors = t_polynomial_factors(3, 2)
        assert [factor.k for factor in factors] == [1, 2]
        assert all(factor.modulus == 5 for factor in factors)
        assert factors[0].middle == pytest.approx(-0.618034, abs=1e-6)
        assert factors[1].middle == pytest.approx(1.618034, abs=1e-6)
        np.testing.assert_allclose(expand_factors(factors), [1.0] * 5, atol=1e-12)

    def test_count(self):
        assert len(t_polynomial_factors(3, 3)) == 3
        assert len(t_polynomial_factors(7, 4)) == 12

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_product_is_all_ones(self, n, m):
        factors = t_polynomial_factors(n, m)
        assert all(factor.value_at_one > 0 for factor in factors)
        assert all(factor(1.0) == pytest.approx(factor.value_at_one) for factor in factors)
        np.testing.assert_allclose(expand_factors(factors), np.ones(m * (n - 1) + 1), rtol=0, atol=1e-10)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_even_sides(self, n):
        with pytest.raises(ParityError, match="Theorem 2: impossible for even n"):
            t_polynomial_factors(n, 2)

    def test_invalid_sizes(self):
        with pytest.raises(InvalidInputError):
            t_polynomial_factors(1, 2)
        with pytest.raises(InvalidInputError):
            t_polynomial_factors(3, 1)

    def test_empty_product(self):
        assert expand_factors([]) == (1.0,)

    def test_leja_order_is_a_permutation(self):
        factors = t_polynomial_factors(11, 4)
        ordered = leja_order(factors)
        assert sorted(factor.k for factor in ordered) == [factor.k for factor in factors]
        assert ordered[0] == factors[0]
        assert leja_order(factors[:2]) == factors[:2]

    def test_leja_partial_products_stay_small(self):
        factors = t_polynomial_factors(11, 4)

        def largest_partial(ordered):
            product = np.ones(1)
            largest = 0.0
            for factor in ordered:
                product = np.convolve(product, factor.coefficients)
                largest = max(largest, float(np.max(np.abs(product))))
            return largest

        assert largest_partial(leja_order(factors)) < largest_partial(factors)

    @pytest.mark.parametrize("n, m", [(11, 3), (9, 4), (11, 4)])
    def test_product_ignores_input_order(self, n, m):
        factors = t_polynomial_factors(n, m)
        expected = np.ones(m * (n - 1) + 1)
        np.testing.assert_allclose(expand_factors(factors[::-1]), expected, rtol=0, atol=1e-10)


class TestConstruction:
    def test_three_sided_dice(self):
        result = construct_uniform_dice(3, 2)
        assert result.outcome is Outcome.DICE
        assert result.partition == ((1,), (2,))
        first, second = result.dice
        np.testing.assert_allclose(first.weights, [0.7236068, -0.4472136, 0.7236068], atol=1e-6)
        np.testing.assert_allclose(second.weights, [0.2763932, 0.4472136, 0.2763932], atol=1e-6)
        assert result.max_uniform_error <= 1e-12
        assert result.max_abs_weight == pytest.approx(0.7236068, abs=1e-6)

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_odd_sides_are_uniform(self, n, m):
        result = construct_uniform_dice(n, m)
        assert result.possible
        assert len(result.dice) == m
        assert result.max_uniform_error <= 1e-10
        assert verify_uniform(result.dice) == result.max_uniform_error
        for die in result.dice:
            assert die.n == n
            assert die.allow_negative
            assert die.mode is ScalarMode.FLOAT
            assert abs(sum(die.weights) - 1) <= 1e-12

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_even_sides_are_impossible(self, n, m):
        result = construct_uniform_dice(n, m)
        assert result.outcome is Outcome.IMPOSSIBLE
        assert result.reason == IMPOSSIBLE_REASON
        assert result.dice == ()
        assert result.max_abs_weight is None

    @pytest.mark.parametrize("n", range(2, 13))
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_parity_gate(self, n, m):
        assert construct_uniform_dice(n, m).possible == (n % 2 == 1)

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
    def test_some_weight_is_negative(self, n):
        result = construct_uniform_dice(n, 2)
        assert any(w < 0 for die in result.dice for w in die.weights)

    def test_needs_two_dice(self):
        with pytest.raises(InvalidInputError):
            construct_uniform_dice(3, 1)


class TestPartitions:
    def test_round_robin(self):
        assert default_partition(5, 2) == ((1, 3), (2, 4))
        assert default_partition(3, 3) == ((1,), (2,), (3,))

    def test_enumeration(self):
        assert list(iter_partitions(3, 2)) == [((1,), (2,)), ((2,), (1,))]
        assert len(list(iter_partitions(3, 3))) == 6
        assert len(list(iter_partitions(5, 2))) == 6

    @pytest.mark.parametrize("n, m", [(3, 2), (3, 3), (5, 2)])
    def test_every_partition_is_uniform(self, n, m):
        for partition in iter_partitions(n, m):
            result = construct_uniform_dice(n, m, partition)
            assert result.partition == partition
            assert result.max_uniform_error <= 1e-10

    def test_random_partitions(self):
        rng = np.random.default_rng(3)
        n, m = 7, 3
        for _ in range(20):
            order = [int(k) for k in rng.permutation(np.arange(1, 10))]
            partition = [order[0:3], order[3:6], order[6:9]]
            assert construct_uniform_dice(n, m, partition).max_uniform_error <= 1e-10

    def test_explicit_partition(self):
        result = construct_uniform_dice(5, 2, [[1, 2], [3, 4]])
        assert result.partition == ((1, 2), (3, 4))
        assert result.max_uniform_error <= 1e-10

    @pytest.mark.parametrize("partition", [
        [[1, 2], [3]],
        [[1, 2], [3, 4], []],
        [[1, 1], [3, 4]],
        [[1, 2], [3, 5]],
        [["a", 2], [3, 4]],
    ])
    def test_malformed_partitions(self, partition):
        with pytest.raises(InvalidInputError):
            check_partition(partition, 5, 2)
        with pytest.raises(InvalidInputError):
            construct_uniform_dice(5, 2, partition)


class TestVerifyUniform:
    def test_fair_coins(self):
        coin = Die((0.5, 0.5), ScalarMode.FLOAT)
        assert verify_uniform([coin, coin]) == pytest.approx(1 / 6)

    def test_optimal_pair(self):
        assert verify_uniform(optimal_pair(3).dice) == pytest.approx(3 / 35, abs=1e-15)

    def test_rational_dice(self):
        third = Fraction(1, 3)
        assert verify_uniform([Die((third,) * 3)]) == pytest.approx(0, abs=1e-15)
        assert not math.isnan(verify_uniform([Die((third,) * 3)] * 2))
