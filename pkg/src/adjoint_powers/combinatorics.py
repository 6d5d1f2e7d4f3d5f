"""Exact integer combinatorics built around Euler's difference table.

Everything here is arbitrary-precision: integers are plain Python ``int``,
rationals are ``fractions.Fraction``.  The central objects are the
triangular difference table ``e[k][j]`` (diagonal ``j!``, backward
difference recurrence), the derangement numbers it produces in its first
column, and the integer refinement ``d[n][k] = e[n][k] / k!``.  Every
division that must come out even goes through :func:`exact_div`, which
refuses to round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
import math

__all__ = [
    "ENUMERATION_LIMIT",
    "ExactDivisionError",
    "EulerTable",
    "HigherDerangementTable",
    "PowerSeries",
    "binomial",
    "derangement",
    "derangement_enumeration_oracle",
    "egf_coefficients",
    "euler_table",
    "exact_div",
    "factorial",
    "higher_derangement",
    "higher_derangement_table",
]

#: Largest argument accepted by the brute-force derangement count (10! permutations).
ENUMERATION_LIMIT = 10

DERANGEMENT_METHODS = ("adjacent", "alternating", "table")
HIGHER_DERANGEMENT_METHODS = ("table", "recurrence", "closed_form")


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder.

    Raised instead of rounding: a nonzero remainder in any of the table
    divisions means a recurrence was violated, and silent truncation
    would mask the bug.
    """


def exact_div(numerator: int, denominator: int) -> int:
    """Divide two integers, insisting on a zero remainder."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ExactDivisionError(
            f"{numerator} is not divisible by {denominator} (remainder {remainder})"
        )
    return quotient


def factorial(k: int) -> int:
    """k! as an exact integer."""
    if k < 0:
        raise ValueError("factorial requires k >= 0")
    return math.factorial(k)


def binomial(k: int, j: int) -> int:
    """Binomial coefficient C(k, j); zero when j exceeds k."""
    if k < 0 or j < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return math.comb(k, j)


@dataclass(frozen=True)
class EulerTable:
    """Triangular difference table with entries ``e[k][j]`` for 0 <= j <= k.

    The diagonal is seeded with ``e[j][j] = j!`` and each row is swept
    downward in j via ``e[k][j] = e[k][j+1] - e[k-1][j]``; column 0 then
    holds the derangement numbers.  Immutable after construction.
    """

    max_index: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, k: int, j: int) -> int:
        if not 0 <= j <= k <= self.max_index:
            raise ValueError(f"entry ({k}, {j}) outside table of size {self.max_index}")
        return self.entries[k][j]

    def row(self, k: int) -> tuple[int, ...]:
        if not 0 <= k <= self.max_index:
            raise ValueError(f"row {k} outside table of size {self.max_index}")
        return self.entries[k]


def euler_table(max_index: int) -> EulerTable:
    """Build the difference table for all 0 <= j <= k <= max_index."""
    if max_index < 0:
        raise ValueError("max_index must be >= 0")
    rows: list[tuple[int, ...]] = []
    for k in range(max_index + 1):
        row = [0] * (k + 1)
        row[k] = factorial(k)
        for j in range(k - 1, -1, -1):
            row[j] = row[j + 1] - rows[k - 1][j]
        rows.append(tuple(row))
    return EulerTable(max_index, tuple(rows))


def derangement(k: int, method: str = "adjacent") -> int:
    """Number of fixed-point-free permutations of k items.

    Three independent routes, which must agree:

    * ``adjacent``:    d_k = (k-1) (d_{k-1} + d_{k-2}),  d_0 = 1, d_1 = 0
    * ``alternating``: d_k = k d_{k-1} + (-1)^k,         d_0 = 1
    * ``table``:       column 0 of the difference table
    """
    if k < 0:
        raise ValueError("derangement requires k >= 0")
    if method == "adjacent":
        prev, curr = 1, 0  # d_0, d_1
        if k == 0:
            return prev
        for i in range(2, k + 1):
            prev, curr = curr, (i - 1) * (curr + prev)
        return curr
    if method == "alternating":
        value = 1
        for i in range(1, k + 1):
            value = i * value + (-1) ** i
        return value
    if method == "table":
        return euler_table(k).entry(k, 0)
    raise ValueError(
        f"unknown derangement method {method!r}; expected one of {DERANGEMENT_METHODS}"
    )


def derangement_enumeration_oracle(k: int) -> int:
    """Count derangements literally, by checking every permutation of {1..k}.

    Costs k! permutations, so arguments above ``ENUMERATION_LIMIT`` are
    refused.
    """
    if k < 0:
        raise ValueError("enumeration requires k >= 0")
    if k > ENUMERATION_LIMIT:
        raise ValueError(
            f"enumeration of {k}! permutations exceeds the cost limit (k <= {ENUMERATION_LIMIT})"
        )
    count = 0
    for perm in permutations(range(k)):
        if all(perm[i] != i for i in range(k)):
            count += 1
    return count


def higher_derangement(n: int, k: int, method: str = "table") -> int:
    """Higher derangement number d_n^k, an exact integer for 0 <= k <= n.

    * ``table``:       e_n^k / k!  (division exact by construction)
    * ``recurrence``:  d_n^k = (d_n^{k-1} + d_{n-1}^{k-1}) / k, iterated in k
    * ``closed_form``: d_n^k = (1/k!) sum_j C(k, j) d_{n-j}
    """
    if n < 0 or k < 0:
        raise ValueError("higher_derangement requires n, k >= 0")
    if k > n:
        raise ValueError(f"higher_derangement requires k <= n, got ({n}, {k})")
    if method == "table":
        return exact_div(euler_table(n).entry(n, k), factorial(k))
    if method == "recurrence":
        column = [derangement(i) for i in range(n + 1)]  # d_i^0 = d_i
        for j in range(1, k + 1):
            column = [0] * j + [
                exact_div(column[i] + column[i - 1], j) for i in range(j, n + 1)
            ]
        return column[n]
    if method == "closed_form":
        total = sum(binomial(k, j) * derangement(n - j) for j in range(k + 1))
        return exact_div(total, factorial(k))
    raise ValueError(
        f"unknown higher_derangement method {method!r}; "
        f"expected one of {HIGHER_DERANGEMENT_METHODS}"
    )


@dataclass(frozen=True)
class HigherDerangementTable:
    """Triangular table of d[n][k] = e[n][k] / k! for 0 <= k <= n <= max_index."""

    max_index: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, n: int, k: int) -> int:
        if not 0 <= k <= n <= self.max_index:
            raise ValueError(f"entry ({n}, {k}) outside table of size {self.max_index}")
        return self.entries[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        if not 0 <= n <= self.max_index:
            raise ValueError(f"row {n} outside table of size {self.max_index}")
        return self.entries[n]


def higher_derangement_table(max_index: int) -> HigherDerangementTable:
    """Divide the difference table column-wise by k! to get all d[n][k]."""
    base = euler_table(max_index)
    rows = tuple(
        tuple(exact_div(base.entry(n, k), factorial(k)) for k in range(n + 1))
        for n in range(max_index + 1)
    )
    return HigherDerangementTable(max_index, rows)


@dataclass(frozen=True)
class PowerSeries:
    """Exact rational truncation of exp(-x) / (1-x)^(parameter+1).

    ``coefficients[m]`` is the coefficient of x^m and equals
    d_{m+parameter}^parameter / m!.
    """

    parameter: int
    order: int
    coefficients: tuple[Fraction, ...]

    def coefficient(self, m: int) -> Fraction:
        if not 0 <= m <= self.order:
            raise ValueError(f"coefficient {m} outside truncation order {self.order}")
        return self.coefficients[m]


def egf_coefficients(k: int, order: int) -> PowerSeries:
    """Series of exp(-x) / (1-x)^(k+1) to the given order.

    Computed by convolving sum (-1)^i x^i / i! with sum C(m+k, k) x^m.
    """
    if k < 0:
        raise ValueError("series parameter must be >= 0")
    if order < 0:
        raise ValueError("order must be >= 0")
    coefficients = []
    for m in range(order + 1):
        total = Fraction(0)
        for i in range(m + 1):
            total += Fraction((-1) ** i, factorial(i)) * binomial(m - i + k, k)
        coefficients.append(total)
    return PowerSeries(k, order, tuple(coefficients))
