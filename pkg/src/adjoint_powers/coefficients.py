"""Decomposition coefficients of adjoint tensor powers.

In the stable range the k-th tensor power of the A-series adjoint
representation splits into rank-independent blocks, one block per number
of uncontracted index pairs.  The integer coefficient of block j in
power k is computed by three independent routes:

* :func:`coefficient`: the closed form C(k, j) * d_k^j,
* :func:`coefficient_by_contraction`: counting contraction patterns
  directly, C(k, p) * (1/p!) * sum_l C(p, l) d_{k-l},
* :func:`decomposition_table`: the two-term recurrence
  c_{j+1}^k = ((k-j) c_j^k + k c_j^{k-1}) / (j+1)^2 seeded by c_0^k = d_k.

All three must agree entry for entry; every division is exact and
checked.  :func:`render_table` turns a table into deterministic
markdown, CSV or JSON text.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import binomial, derangement, exact_div, factorial, higher_derangement
from .serialize import canonical_json

__all__ = [
    "CoefficientRow",
    "DecompositionTable",
    "coefficient",
    "coefficient_by_contraction",
    "coefficient_row",
    "decomposition_table",
    "render_table",
    "table_payload",
]

RENDER_FORMATS = ("markdown", "csv", "json")


@dataclass(frozen=True)
class CoefficientRow:
    """The coefficients (c_0, ..., c_k) of one tensor power."""

    power: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class DecompositionTable:
    """Coefficient rows for powers 1..max_power."""

    max_power: int
    rows: tuple[CoefficientRow, ...]

    def row(self, k: int) -> CoefficientRow:
        if not 1 <= k <= self.max_power:
            raise ValueError(f"row {k} outside table of max power {self.max_power}")
        return self.rows[k - 1]


def coefficient(k: int, j: int) -> int:
    """Block coefficient by the closed form C(k, j) * d_k^j."""
    if k < 0 or j < 0 or j > k:
        raise ValueError(f"coefficient requires 0 <= j <= k, got ({k}, {j})")
    return binomial(k, j) * higher_derangement(k, j)


def coefficient_by_contraction(k: int, p: int) -> int:
    """Block coefficient by counting contraction patterns directly.

    C(k, p) choices of the uncontracted factors, 1/p! for their order,
    and sum_l C(p, l) d_{k-l} contraction patterns on the rest.  The
    division by p! must be exact; a remainder would falsify the
    equivalence with the closed form.
    """
    if k < 0 or p < 0 or p > k:
        raise ValueError(f"coefficient requires 0 <= p <= k, got ({k}, {p})")
    total = sum(binomial(p, l) * derangement(k - l) for l in range(p + 1))
    return binomial(k, p) * exact_div(total, factorial(p))


def coefficient_row(k: int) -> CoefficientRow:
    """One full row (c_0^k, ..., c_k^k) by the closed form; k = 0 gives (1,)."""
    if k < 0:
        raise ValueError("coefficient_row requires k >= 0")
    return CoefficientRow(k, tuple(coefficient(k, j) for j in range(k + 1)))


def decomposition_table(max_power: int) -> DecompositionTable:
    """Rows 1..max_power built from the two-term recurrence.

    Each row starts at c_0^k = d_k and steps right through
    c_{j+1}^k = ((k-j) c_j^k + k c_j^{k-1}) / (j+1)^2, the division
    checked exact.  The power-0 row (1,) seeds the recursion.
    """
    if max_power < 1:
        raise ValueError("decomposition_table requires max_power >= 1")
    rows = []
    previous: tuple[int, ...] = (1,)
    for k in range(1, max_power + 1):
        values = [derangement(k)]
        for j in range(k):
            values.append(exact_div((k - j) * values[j] + k * previous[j], (j + 1) ** 2))
        previous = tuple(values)
        rows.append(CoefficientRow(k, previous))
    return DecompositionTable(max_power, tuple(rows))


def table_payload(table: DecompositionTable) -> dict:
    """JSON-ready form of a table; coefficient values as decimal strings."""
    return {
        "max_power": table.max_power,
        "rows": [
            {"k": row.power, "coefficients": [str(v) for v in row.values]}
            for row in table.rows
        ],
    }


def _markdown_lines(header_cells: list[str], body_rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header_cells) + " |"]
    lines.append("|" + "|".join(" --- " for _ in header_cells) + "|")
    for cells in body_rows:
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines)


def render_table(table: DecompositionTable, fmt: str) -> str:
    """Render a table as markdown, CSV or JSON.

    Markdown carries a header (an empty table renders as the header
    alone); CSV is one unpadded ``k,c_0,...,c_k`` line per power; JSON
    is the canonical envelope.
    """
    if fmt == "markdown":
        width = max((len(row.values) for row in table.rows), default=0)
        header = ["k"] + [f"j={j}" for j in range(width)]
        body = [[str(row.power), *map(str, row.values)] for row in table.rows]
        return _markdown_lines(header, body)
    if fmt == "csv":
        return "\n".join(
            ",".join([str(row.power), *map(str, row.values)]) for row in table.rows
        )
    if fmt == "json":
        return canonical_json(table_payload(table))
    raise ValueError(f"unknown format {fmt!r}")
