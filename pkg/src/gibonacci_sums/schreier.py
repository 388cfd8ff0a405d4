"""Plain and colored Schreier sets: counting, enumeration, brute-force oracle.

A Schreier set is a finite ``S`` of positive integers with ``min S >= |S|``.
In a colored Schreier set the minimum element carries a color. The palette
has ``G_1`` colors when ``min S == |S|`` and ``G_2`` colors when
``min S > |S|``. The empty set (only admitted when ``k == 0``) takes the
``G_2`` palette.
"""
from __future__ import annotations

import enum
import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .combinatorics import binomial
from .errors import DomainError
from .sequences import GibonacciSeed, FIBONACCI

__all__ = [
    "ColorClass",
    "ColoredSchreierSet",
    "CountQuery",
    "ORACLE_MAX_N",
    "max_size",
    "count_fixed_size",
    "s_plain",
    "s_colored",
    "enumerate_colored",
    "s_decrement_residual",
    "brute_force_colored_count",
    "brute_force_plain_count",
]

ORACLE_MAX_N = 24


class ColorClass(enum.Enum):
    MIN_EQUALS_SIZE = "min_equals_size"
    MIN_EXCEEDS_SIZE = "min_exceeds_size"

    def palette(self, seed: GibonacciSeed) -> int:
        return seed.g1 if self is ColorClass.MIN_EQUALS_SIZE else seed.g2


def classify(elements: Sequence[int]) -> ColorClass:
    """Color class of a Schreier set given as a sorted sequence."""
    if not elements:
        return ColorClass.MIN_EXCEEDS_SIZE
    size, least = len(elements), elements[0]
    if least == size:
        return ColorClass.MIN_EQUALS_SIZE
    if least > size:
        return ColorClass.MIN_EXCEEDS_SIZE
    raise DomainError(f"{list(elements)} is not a Schreier set: min {least} < size {size}")


@dataclass(frozen=True)
class ColoredSchreierSet:
    elements: tuple[int, ...]
    color_class: ColorClass
    color_index: int = 0

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if any(e < 1 for e in elements):
            raise DomainError(f"elements must be positive, got {list(elements)}")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise DomainError(f"elements must be strictly increasing, got {list(elements)}")
        expected = classify(elements)
        if self.color_class is not expected:
            raise DomainError(
                f"{list(elements)} belongs to {expected.value}, not {self.color_class.value}"
            )
        if self.color_index < 0:
            raise DomainError(f"color index must be >= 0, got {self.color_index}")

    @classmethod
    def of(cls, elements: Sequence[int], color_index: int = 0) -> "ColoredSchreierSet":
        elements = tuple(sorted(elements))
        return cls(elements, classify(elements), color_index)

    def check_palette(self, seed: GibonacciSeed) -> None:
        palette = self.color_class.palette(seed)
        if self.color_index >= palette:
            raise DomainError(
                f"color index {self.color_index} exceeds palette of {palette} for seed {seed}"
            )

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "color_class": self.color_class.value,
            "color_index": self.color_index,
        }


@dataclass(frozen=True)
class CountQuery:
    n: int
    k: int = 0
    seed: GibonacciSeed = FIBONACCI

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"ground-set bound n must be >= 1, got n={self.n}")
        if self.k < 0:
            raise DomainError(f"minimum size k must be >= 0, got k={self.k}")


def max_size(n: int) -> int:
    """Largest possible size of a Schreier subset of ``{1..n}``."""
    return (n + 1) // 2


def count_fixed_size(n: int, ell: int, relation: ColorClass) -> int:
    """Number of ``S`` in ``{1..n}`` with ``|S| == ell`` and the given min relation."""
    if n < 1 or ell < 1:
        raise DomainError(f"count_fixed_size needs n >= 1 and ell >= 1, got n={n}, ell={ell}")
    if n < ell:
        return 0
    if relation is ColorClass.MIN_EXCEEDS_SIZE:
        return binomial(n - ell, ell)
    return binomial(n - ell, ell - 1)


def _weight(n: int, ell: int, seed: GibonacciSeed) -> int:
    # ell == 0 gives C(n, 0) * G_2 = G_2, the empty set
    if n < ell:
        return 0
    return binomial(n - ell, ell) * seed.g2 + binomial(n - ell, ell - 1) * seed.g1


def s_plain(n: int, k: int) -> int:
    """Uncolored count ``#{S in {1..n} : |S| >= k, min S >= |S|}``, empty set included."""
    CountQuery(n, k)
    return sum(
        binomial(n - ell, ell) + binomial(n - ell, ell - 1)
        for ell in range(k, max_size(n) + 1)
    )


def s_colored(query: CountQuery) -> int:
    n, k, seed = query.n, query.k, query.seed
    return sum(_weight(n, ell, seed) for ell in range(k, max_size(n) + 1))


def s_decrement_residual(query: CountQuery) -> int:
    """``s_k'(n) - s_{k+1}'(n)``: the colored count of sets of size exactly k."""
    return _weight(query.n, query.k, query.seed)


def enumerate_colored(query: CountQuery) -> Iterator[ColoredSchreierSet]:
    """Yield every colored Schreier set for ``query``.

    Order: by size, then lexicographically by elements, then by color index.
    """
    n, k, seed = query.n, query.k, query.seed
    if k == 0:
        for color in range(seed.g2):
            yield ColoredSchreierSet((), ColorClass.MIN_EXCEEDS_SIZE, color)
    for ell in range(max(k, 1), max_size(n) + 1):
        for elements in itertools.combinations(range(ell, n + 1), ell):
            cls = ColorClass.MIN_EQUALS_SIZE if elements[0] == ell else ColorClass.MIN_EXCEEDS_SIZE
            for color in range(cls.palette(seed)):
                yield ColoredSchreierSet(elements, cls, color)


def _scan(n: int, k: int, weight_equal: int, weight_exceed: int) -> int:
    if n > ORACLE_MAX_N:
        raise DomainError(f"brute-force scan refused for n={n} > {ORACLE_MAX_N}")
    if n < 1 or k < 0:
        raise DomainError(f"brute-force scan needs n >= 1 and k >= 0, got n={n}, k={k}")
    total = weight_exceed if k == 0 else 0
    for mask in range(1, 1 << n):
        size = bin(mask).count("1")
        if size < k:
            continue
        least = (mask & -mask).bit_length()
        if least == size:
            total += weight_equal
        elif least > size:
            total += weight_exceed
    return total


def brute_force_colored_count(query: CountQuery) -> int:
    """Weighted count by scanning all ``2**n`` subsets of ``{1..n}``."""
    return _scan(query.n, query.k, query.seed.g1, query.seed.g2)


def brute_force_plain_count(n: int, k: int) -> int:
    """``#{S in {1..n} : |S| >= k, min S >= |S|}`` by subset scan, empty set included."""
    return _scan(n, k, 1, 1)
