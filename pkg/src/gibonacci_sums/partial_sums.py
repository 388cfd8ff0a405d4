"""Iterated partial sums of a Gibonacci sequence.

``a_value(table, k, n)`` is the n-th term of ``P^k(G)``, where ``P`` maps a
sequence to its running sums and ``P^0`` is the identity.
"""
from __future__ import annotations

import csv
import io
import itertools
import threading
from collections.abc import Iterable

from .combinatorics import binomial
from .errors import DomainError
from .sequences import GibonacciSeed, SequencePrefix, gibonacci_prefix

__all__ = [
    "apply_P",
    "PartialSumTable",
    "a_value",
    "a_closed_form",
    "a_at_3",
    "a_descent_residual",
    "table_csv",
]


def apply_P(prefix: SequencePrefix | Iterable[int]) -> tuple[int, ...]:
    """Running sums of ``prefix``; the output has the same length.

    The result is a plain tuple: running sums of a Gibonacci prefix no longer
    satisfy the Gibonacci recurrence.
    """
    values = tuple(prefix.values if isinstance(prefix, SequencePrefix) else prefix)
    if not values:
        raise DomainError("apply_P needs a non-empty prefix")
    return tuple(itertools.accumulate(values))


class PartialSumTable:
    """Memoized ``a_k'(n)`` values for one seed.

    Row ``k`` holds ``a_k'(1), a_k'(2), ...``. Rows are filled left to right
    with ``a_k'(n) = a_k'(n-1) + a_{k-1}'(n)``; fills hold a lock, so one
    table can be shared between threads.
    """

    def __init__(self, seed: GibonacciSeed):
        self.seed = seed
        self._rows: list[list[int]] = [[]]
        self._lock = threading.Lock()

    def _fill(self, k: int, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= k:
                rows.append([])
            base = rows[0]
            if len(base) < n:
                base.extend(gibonacci_prefix(self.seed, n)[len(base):])
            for j in range(1, k + 1):
                row, below = rows[j], rows[j - 1]
                while len(row) < n:
                    m = len(row)
                    row.append(below[m] + (row[m - 1] if m else 0))

    def value(self, k: int, n: int) -> int:
        if k < 0:
            raise DomainError(f"iteration count k must be >= 0, got k={k}")
        if n < 1:
            raise DomainError(f"term index n must be >= 1, got n={n}")
        rows = self._rows
        if k >= len(rows) or len(rows[k]) < n:
            self._fill(k, n)
        return self._rows[k][n - 1]

    def row(self, k: int, n_max: int) -> tuple[int, ...]:
        """``(a_k'(1), ..., a_k'(n_max))``."""
        if n_max < 1:
            return ()
        self.value(k, n_max)
        return tuple(self._rows[k][:n_max])


def a_value(table: PartialSumTable, k: int, n: int) -> int:
    return table.value(k, n)


def a_closed_form(seed: GibonacciSeed, k: int, n: int) -> int:
    """``sum(C(k-1+i, k-1) * G_{n-i} for i in 0..n-1)``, for ``k, n >= 1``."""
    if k < 1:
        raise DomainError(f"the closed form needs k >= 1, got k={k}")
    if n < 1:
        raise DomainError(f"term index n must be >= 1, got n={n}")
    terms = gibonacci_prefix(seed, n)
    return sum(binomial(k - 1 + i, k - 1) * terms[n - 1 - i] for i in range(n))


def a_at_3(seed: GibonacciSeed, k: int) -> int:
    if k < 0:
        raise DomainError(f"k must be >= 0, got k={k}")
    return (k + 1) * seed.g2 + (binomial(k + 1, k - 1) + 1) * seed.g1


def a_descent_residual(seed: GibonacciSeed, k: int, n: int) -> int:
    """The gap ``a_{k-1}'(n+2) - a_k'(n)``, as a non-negative integer."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got k={k}")
    if n < 1:
        raise DomainError(f"term index n must be >= 1, got n={n}")
    top = n + k - 1
    return binomial(top, k - 1) * seed.g2 + binomial(top, k - 2) * seed.g1


def table_csv(table: PartialSumTable, max_k: int, max_n: int) -> str:
    """CSV with header ``k,n,value`` for ``0 <= k <= max_k``, ``1 <= n <= max_n``."""
    if max_k < 0 or max_n < 1:
        raise DomainError(f"table bounds need max_k >= 0 and max_n >= 1, got {max_k}, {max_n}")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k", "n", "value"])
    for k in range(max_k + 1):
        for n, value in enumerate(table.row(k, max_n), start=1):
            writer.writerow([k, n, value])
    return out.getvalue()

