"""Fibonacci and Gibonacci terms, 1-indexed throughout."""
from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import binomial
from .errors import DomainError

__all__ = [
    "GibonacciSeed",
    "FIBONACCI",
    "SequencePrefix",
    "fibonacci",
    "gibonacci",
    "gibonacci_prefix",
    "gibonacci_via_fibonacci",
    "fibonacci_diagonal",
]


@dataclass(frozen=True, order=True)
class GibonacciSeed:
    """The pair of initial terms ``(G_1, G_2)``; both must be positive."""

    g1: int = 1
    g2: int = 1

    def __post_init__(self):
        for name in ("g1", "g2"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"seed {name} must be an integer, got {value!r}")
            if value < 1:
                raise DomainError(f"seed {name} must be >= 1, got {value}")

    def __str__(self):
        return f"({self.g1},{self.g2})"


FIBONACCI = GibonacciSeed(1, 1)


def _check_index(n: int, lowest: int = 1) -> None:
    if n < lowest:
        raise DomainError(f"sequence index must be >= {lowest}, got n={n}")


def gibonacci_prefix(seed: GibonacciSeed, length: int) -> tuple[int, ...]:
    """Return ``(G_1, ..., G_length)``."""
    if length < 0:
        raise DomainError(f"prefix length must be >= 0, got {length}")
    terms = [seed.g1, seed.g2][:length]
    while len(terms) < length:
        terms.append(terms[-1] + terms[-2])
    return tuple(terms)


@dataclass(frozen=True)
class SequencePrefix:
    """The first ``len(values)`` terms of the Gibonacci sequence for ``seed``."""

    seed: GibonacciSeed
    values: tuple[int, ...] = field(default=())

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if values[:2] != (self.seed.g1, self.seed.g2)[: len(values)]:
            raise DomainError("prefix does not start with the seed terms")
        for i in range(2, len(values)):
            if values[i] != values[i - 1] + values[i - 2]:
                raise DomainError(f"prefix breaks the recurrence at term {i + 1}")

    @classmethod
    def of(cls, seed: GibonacciSeed, length: int) -> "SequencePrefix":
        return cls(seed, gibonacci_prefix(seed, length))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def term(self, n: int) -> int:
        """1-indexed access: ``term(1) == G_1``."""
        if not 1 <= n <= len(self.values):
            raise DomainError(f"term index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]


def gibonacci(seed: GibonacciSeed, n: int) -> int:
    _check_index(n)
    a, b = seed.g1, seed.g2
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def fibonacci(n: int) -> int:
    return gibonacci(FIBONACCI, n)


def gibonacci_via_fibonacci(seed: GibonacciSeed, n: int) -> int:
    """``G_n = G_1 * F_{n-2} + G_2 * F_{n-1}``, valid for ``n > 2``."""
    if n <= 2:
        raise DomainError(f"the Fibonacci expansion of G_n needs n > 2, got n={n}")
    return seed.g1 * fibonacci(n - 2) + seed.g2 * fibonacci(n - 1)


def fibonacci_diagonal(n: int) -> int:
    """Sum of the n-th shallow diagonal of Pascal's triangle (equals ``F_n``)."""
    _check_index(n)
    return sum(binomial(n - i - 1, i) for i in range((n - 1) // 2 + 1))
