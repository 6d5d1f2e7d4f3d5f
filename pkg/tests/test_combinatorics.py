"""Golden tables and cross-route checks for the difference-table module."""

from fractions import Fraction

import pytest

from adjoint_powers import (
    ExactDivisionError,
    binomial,
    derangement,
    derangement_enumeration_oracle,
    egf_coefficients,
    euler_table,
    exact_div,
    factorial,
    higher_derangement,
    higher_derangement_table,
)

# The first eleven derangement numbers.
DERANGEMENTS = (1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961)

# Reference difference table, rows k = 0..9 (55 entries).
EULER_ROWS = (
    (1,),
    (0, 1),
    (1, 1, 2),
    (2, 3, 4, 6),
    (9, 11, 14, 18, 24),
    (44, 53, 64, 78, 96, 120),
    (265, 309, 362, 426, 504, 600, 720),
    (1854, 2119, 2428, 2790, 3216, 3720, 4320, 5040),
    (14833, 16687, 18806, 21234, 24024, 27240, 30960, 35280, 40320),
    (133496, 148329, 165016, 183822, 205056, 229080, 256320, 287280, 322560, 362880),
)

# Reference higher derangement table, rows n = 0..9 (55 entries).
HIGHER_ROWS = (
    (1,),
    (0, 1),
    (1, 1, 1),
    (2, 3, 2, 1),
    (9, 11, 7, 3, 1),
    (44, 53, 32, 13, 4, 1),
    (265, 309, 181, 71, 21, 5, 1),
    (1854, 2119, 1214, 465, 134, 31, 6, 1),
    (14833, 16687, 9403, 3539, 1001, 227, 43, 7, 1),
    (133496, 148329, 82508, 30637, 8544, 1909, 356, 57, 8, 1),
)


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(9) == 362880


def test_factorial_multiplicative_consistency():
    for k in range(1, 30):
        assert factorial(k) == k * factorial(k - 1)


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    for k in (0, 1, 7, 23):
        assert binomial(k, 0) == 1
    assert binomial(3, 5) == 0


def test_binomial_against_pascal_triangle():
    # Independent oracle: the triangle built by repeated addition only.
    rows = [[1]]
    for k in range(1, 13):
        prev = rows[-1]
        rows.append([1] + [prev[j - 1] + prev[j] for j in range(1, k)] + [1])
    for k in range(13):
        for j in range(k + 1):
            assert binomial(k, j) == rows[k][j]
    assert binomial(10, 5) == 252 == rows[10][5]


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -2)


def test_exact_div():
    assert exact_div(84, 12) == 7
    assert exact_div(-84, 12) == -7
    with pytest.raises(ExactDivisionError):
        exact_div(7, 2)


def test_euler_table_golden():
    table = euler_table(9)
    assert table.entries == EULER_ROWS
    assert sum(len(row) for row in table.entries) == 55


def test_euler_table_examples():
    assert euler_table(3).entry(3, 2) == 4
    assert euler_table(9).entry(9, 1) == 148329
    assert euler_table(4).entry(4, 0) == 9


def test_euler_table_recurrence_and_diagonal():
    table = euler_table(20)
    for k in range(21):
        assert table.entry(k, k) == factorial(k)
        for j in range(k):
            assert table.entry(k, j) == table.entry(k, j + 1) - table.entry(k - 1, j)


def test_euler_entries_divisible_by_column_factorial():
    table = euler_table(30)
    for k in range(31):
        for j in range(k + 1):
            assert table.entry(k, j) % factorial(j) == 0


def test_euler_table_bounds():
    with pytest.raises(ValueError):
        euler_table(-1)
    table = euler_table(4)
    with pytest.raises(ValueError):
        table.entry(3, 4)
    with pytest.raises(ValueError):
        table.row(5)


def test_derangement_golden_all_methods():
    for method in ("adjacent", "alternating", "table"):
        assert tuple(derangement(k, method) for k in range(11)) == DERANGEMENTS


def test_derangement_seeds():
    for method in ("adjacent", "alternating", "table"):
        assert derangement(0, method) == 1
        assert derangement(1, method) == 0


def test_derangement_methods_agree_to_30():
    table = euler_table(30)
    for k in range(31):
        assert derangement(k, "adjacent") == derangement(k, "alternating") == table.entry(k, 0)


def test_derangement_rejects_bad_input():
    with pytest.raises(ValueError):
        derangement(-1)
    with pytest.raises(ValueError):
        derangement(3, "guess")


def test_enumeration_oracle_examples():
    assert derangement_enumeration_oracle(0) == 1
    assert derangement_enumeration_oracle(3) == 2
    assert derangement_enumeration_oracle(4) == 9


def test_enumeration_oracle_agrees_with_recurrences():
    for k in range(8):
        assert derangement_enumeration_oracle(k) == derangement(k)


def test_enumeration_oracle_cost_limit():
    with pytest.raises(ValueError, match="cost limit"):
        derangement_enumeration_oracle(11)


def test_higher_derangement_golden_table():
    assert higher_derangement_table(9).entries == HIGHER_ROWS


def test_higher_derangement_examples():
    assert higher_derangement(4, 2) == 7
    assert higher_derangement(9, 3) == 30637


def test_higher_derangement_derived_value():
    # Hand-checkable: the closed form at (10, 5) as a single division of a
    # binomial-weighted sum over the derangement table.
    total = (
        DERANGEMENTS[10]
        + 5 * DERANGEMENTS[9]
        + 10 * DERANGEMENTS[8]
        + 10 * DERANGEMENTS[7]
        + 5 * DERANGEMENTS[6]
        + DERANGEMENTS[5]
    )
    assert total % 120 == 0
    expected = total // 120
    assert expected == 18089
    for method in ("table", "recurrence", "closed_form"):
        assert higher_derangement(10, 5, method) == expected


def test_higher_derangement_methods_agree():
    for n in range(17):
        for k in range(n + 1):
            table = higher_derangement(n, k, "table")
            assert table == higher_derangement(n, k, "recurrence")
            assert table == higher_derangement(n, k, "closed_form")


def test_higher_derangement_table_invariants():
    table = higher_derangement_table(20)
    base = euler_table(20)
    for n in range(21):
        assert table.entry(n, n) == 1
        if n >= 1:
            assert table.entry(n, n - 1) == n - 1
        for k in range(n + 1):
            assert table.entry(n, k) * factorial(k) == base.entry(n, k)
            if 1 <= k <= n - 1:
                assert table.entry(n, k) * k == table.entry(n, k - 1) + table.entry(n - 1, k - 1)


def test_higher_derangement_domain_errors():
    with pytest.raises(ValueError):
        higher_derangement(3, 4)
    with pytest.raises(ValueError):
        higher_derangement(-1, 0)
    with pytest.raises(ValueError):
        higher_derangement(4, 2, "guess")


def test_series_examples():
    assert egf_coefficients(0, 4).coefficient(4) == Fraction(3, 8)
    assert egf_coefficients(2, 2).coefficient(2) == Fraction(7, 2)
    for k in range(9):
        assert egf_coefficients(k, 0).coefficient(0) == 1


def test_series_matches_higher_derangements():
    for k in range(9):
        series = egf_coefficients(k, 20)
        for m in range(21):
            assert series.coefficient(m) * factorial(m) == higher_derangement(m + k, k)


def test_series_fields_and_validation():
    series = egf_coefficients(3, 7)
    assert series.parameter == 3
    assert series.order == 7
    assert len(series.coefficients) == 8
    with pytest.raises(ValueError):
        series.coefficient(8)
    with pytest.raises(ValueError):
        egf_coefficients(-1, 4)
    with pytest.raises(ValueError):
        egf_coefficients(2, -1)
