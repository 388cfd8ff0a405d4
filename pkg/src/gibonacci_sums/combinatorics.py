"""Exact binomial coefficients and the hockey-stick sum.

Lower indices outside ``0..n`` give 0, so formulas such as
``C(n + k - 1, k - 2)`` vanish silently at ``k = 1``. A negative upper
index is always a caller bug and raises :class:`DomainError`.
"""
from __future__ import annotations

import math
import threading

from .errors import DomainError

__all__ = ["binomial", "hockey_stick_sum", "BinomialTable"]


def binomial(n: int, k: int) -> int:
    """Return C(n, k) for ``n >= 0``; 0 when ``k < 0`` or ``k > n``."""
    if n < 0:
        raise DomainError(f"binomial upper index must be >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def hockey_stick_sum(k: int, n: int) -> int:
    """Return ``sum(C(k + i, k) for i in 0..n)`` by direct summation."""
    if k < 0 or n < 0:
        raise DomainError(f"hockey_stick_sum needs k >= 0 and n >= 0, got k={k}, n={n}")
    return sum(binomial(k + i, k) for i in range(n + 1))


class BinomialTable:
    """Pascal's triangle, grown row by row on demand.

    Rows are only ever appended, so an entry never changes once it has been
    materialized. Growth is serialized by a lock; reads of existing rows need
    no locking.
    """

    def __init__(self, max_n: int = 0):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()
        self.extend(max_n)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def extend(self, max_n: int) -> None:
        if max_n <= self.max_n:
            return
        with self._lock:
            rows = self._rows
            while len(rows) <= max_n:
                prev = rows[-1]
                row = [1]
                row.extend(prev[j - 1] + prev[j] for j in range(1, len(prev)))
                row.append(1)
                rows.append(row)

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise DomainError(f"row index must be >= 0, got n={n}")
        self.extend(n)
        return tuple(self._rows[n])

    def entry(self, n: int, k: int) -> int:
        if n < 0:
            raise DomainError(f"binomial upper index must be >= 0, got n={n}")
        if k < 0 or k > n:
            return 0
        self.extend(n)
        return self._rows[n][k]
