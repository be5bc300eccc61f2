"""Tests for Lucas polynomials, lucanomials, and Fibonacci specializations."""

import pytest

from lucanomials.lucas import (
    LucasTable,
    fib_factorial,
    fibonacci,
    fibonomial,
    lucanomial,
    lucanomial_division_oracle,
    lucas,
    lucas_factorial,
    split_identity,
)
from lucanomials.polys import ONE, S, T, ZERO, parse

N_SWEEP = 12


def pascal_triangle(n_max):
    """Additive Pascal computation, independent of any factorial formula."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    return rows


class TestLucas:
    def test_seeds(self):
        assert lucas(0) == ZERO
        assert lucas(1) == ONE

    def test_forced_by_recurrence(self):
        assert lucas(2) == parse("s")
        assert lucas(3) == parse("s^2 + t")

    def test_two_steps_by_hand(self):
        assert lucas(4) == parse("s^3 + 2*s*t")

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            lucas(-1)

    def test_fibonacci_specialization(self):
        assert all(lucas(n).evaluate(1, 1) == fibonacci(n) for n in range(N_SWEEP + 1))

    def test_integer_specialization_at_2_minus_1(self):
        assert all(lucas(n).evaluate(2, -1) == n for n in range(N_SWEEP + 1))


class TestLucasTable:
    def test_recurrence_invariants(self):
        table = LucasTable()
        table.factorial(10)
        for n in range(2, 11):
            assert table.poly(n) == S * table.poly(n - 1) + T * table.poly(n - 2)
            assert table.factorial(n) == table.poly(n) * table.factorial(n - 1)

    def test_shared_table_backs_module_functions(self):
        assert lucas(7) == LucasTable().poly(7)


class TestLucasFactorial:
    def test_empty_product(self):
        assert lucas_factorial(0) == ONE

    def test_hand_product(self):
        # {3}{2}{1} = (s^2 + t) * s * 1
        assert lucas_factorial(3) == parse("s^3 + s*t")

    def test_value_at_one_one(self):
        # F_6! = 8 * 5 * 3 * 2 * 1 * 1
        assert lucas_factorial(6).evaluate(1, 1) == 240


class TestLucanomial:
    def test_edge_column(self):
        assert all(lucanomial(n, 0) == ONE for n in range(8))
        assert all(lucanomial(n, n) == ONE for n in range(8))

    def test_single_step(self):
        assert lucanomial(2, 1) == parse("s")

    def test_value_at_one_one(self):
        assert lucanomial(6, 3).evaluate(1, 1) == 60

    def test_out_of_range_is_zero(self):
        assert lucanomial(4, -1) == ZERO
        assert lucanomial(4, 5) == ZERO

    def test_symmetry(self):
        assert all(
            lucanomial(n, k) == lucanomial(n, n - k)
            for n in range(N_SWEEP + 1)
            for k in range(n + 1)
        )

    def test_positive_coefficients(self):
        assert all(
            lucanomial(n, k).is_nonneg() for n in range(N_SWEEP + 1) for k in range(n + 1)
        )

    def test_binomial_specialization_against_additive_pascal(self):
        rows = pascal_triangle(N_SWEEP)
        for n in range(N_SWEEP + 1):
            for k in range(n + 1):
                assert lucanomial(n, k).evaluate(2, -1) == rows[n][k]

    def test_fibonomial_specialization(self):
        assert all(
            lucanomial(n, k).evaluate(1, 1) == fibonomial(n, k)
            for n in range(N_SWEEP + 1)
            for k in range(n + 1)
        )


class TestDivisionOracle:
    def test_single_row(self):
        assert lucanomial_division_oracle(3, 1) == parse("s^2 + t")

    def test_diagonal(self):
        assert all(lucanomial_division_oracle(n, n) == ONE for n in range(8))

    def test_agrees_with_recurrence(self):
        assert all(
            lucanomial_division_oracle(n, k) == lucanomial(n, k)
            for n in range(N_SWEEP + 1)
            for k in range(n + 1)
        )

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            lucanomial_division_oracle(3, 4)


class TestSplitIdentity:
    def test_base(self):
        assert split_identity(2, 1)

    def test_expanded_by_hand(self):
        assert split_identity(5, 2)

    def test_fibonacci_instance(self):
        # At s = t = 1 and (n, k) = (6, 3): 8 = 2*3 + 1*2.
        assert lucas(6).evaluate(1, 1) == 8
        assert split_identity(6, 3)

    def test_sweep(self):
        assert all(split_identity(n, k) for n in range(1, N_SWEEP + 1) for k in range(1, n + 1))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            split_identity(3, 0)


class TestFibonacci:
    def test_first_values(self):
        assert [fibonacci(n) for n in range(9)] == [0, 1, 1, 2, 3, 5, 8, 13, 21]

    def test_factorials(self):
        assert fib_factorial(0) == 1
        assert fib_factorial(6) == 240
        assert fib_factorial(7) == 3120

    def test_fibonomial_values(self):
        assert fibonomial(6, 3) == 60
        assert fibonomial(4, 2) == 6
        assert fibonomial(7, 3) == 260

    def test_fibonomial_symmetry(self):
        assert all(
            fibonomial(n, k) == fibonomial(n, n - k)
            for n in range(N_SWEEP + 1)
            for k in range(n + 1)
        )

    def test_fibonomial_out_of_range(self):
        assert fibonomial(5, -1) == 0
        assert fibonomial(5, 6) == 0

    def test_fibonomial_matches_factorial_quotient(self):
        for n in range(N_SWEEP + 1):
            for k in range(n + 1):
                assert fibonomial(n, k) * fib_factorial(k) * fib_factorial(n - k) == fib_factorial(n)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            fibonacci(-1)
        with pytest.raises(ValueError):
            fibonomial(-1, 0)
