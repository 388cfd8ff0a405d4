"""Run every identity over a parameter grid and collect the mismatches.

Failures are returned as data; nothing here raises on a broken identity.
"""
from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .combinatorics import binomial, hockey_stick_sum
from .errors import DomainError
from .lattice import enumerate_paths, path_from_set, set_from_path
from .partial_sums import PartialSumTable, a_at_3, a_closed_form, a_descent_residual
from .schreier import (
    ORACLE_MAX_N,
    CountQuery,
    brute_force_colored_count,
    enumerate_colored,
    max_size,
    s_colored,
    s_decrement_residual,
)
from .sequences import GibonacciSeed, fibonacci, fibonacci_diagonal, gibonacci, gibonacci_via_fibonacci

__all__ = ["Failure", "VerificationReport", "RunConfig", "DEFAULT_SEEDS", "IDENTITIES", "verify_all"]

DEFAULT_SEEDS = (
    GibonacciSeed(1, 1),
    GibonacciSeed(1, 2),
    GibonacciSeed(3, 2),
    GibonacciSeed(7, 5),
)


@dataclass(frozen=True)
class Failure:
    seed: GibonacciSeed | None
    k: int | None
    n: int | None
    expected: object
    actual: object


@dataclass
class VerificationReport:
    identity_name: str
    grid: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, seed, k, n, expected, actual) -> None:
        self.checked += 1
        if expected != actual:
            self.failures.append(Failure(seed, k, n, expected, actual))

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{status:<6} {self.identity_name:<28} checked={self.checked:<7} {self.grid}"


@dataclass(frozen=True)
class RunConfig:
    seeds: tuple[GibonacciSeed, ...] = DEFAULT_SEEDS
    max_k: int = 12
    max_n: int = 40
    oracle_max_n: int = 16

    def __post_init__(self):
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if not self.seeds:
            raise DomainError("at least one seed is required")
        if self.max_k < 0:
            raise DomainError(f"max_k must be >= 0, got {self.max_k}")
        if self.max_n < 1:
            raise DomainError(f"max_n must be >= 1, got {self.max_n}")
        if not 1 <= self.oracle_max_n <= ORACLE_MAX_N:
            raise DomainError(f"oracle_max_n must lie in 1..{ORACLE_MAX_N}, got {self.oracle_max_n}")

    @property
    def k_range(self) -> range:
        # identities stated for k >= 1 still get one row when max_k == 0
        return range(1, max(self.max_k, 1) + 1)


TableLookup = Mapping[GibonacciSeed, PartialSumTable]


def _ks(n: int, extra: int = 0) -> range:
    return range(0, max_size(n) + 1 + extra)


def _hockey_stick(cfg: RunConfig, tables: TableLookup) -> VerificationReport:
    rep = VerificationReport("hockey_stick", f"0<=k<={cfg.max_k}, 0<=n<={cfg.max_n}")
    for k in range(cfg.max_k + 1):
        for n in range(cfg.max_n + 1):
            rep.check(None, k, n, binomial(k + n + 1, k + 1), hockey_stick_sum(k, n))
    return rep


def _via_fibonacci(cfg, tables):
    rep = VerificationReport("gibonacci_via_fibonacci", f"3<=n<={cfg.max_n + 2}")
    for seed in cfg.seeds:
        for n in range(3, cfg.max_n + 3):
            rep.check(seed, None, n, gibonacci(seed, n), gibonacci_via_fibonacci(seed, n))
    return rep


def _diagonal(cfg, tables):
    rep = VerificationReport("fibonacci_diagonal", f"1<=n<={cfg.max_n}")
    for n in range(1, cfg.max_n + 1):
        rep.check(None, None, n, fibonacci(n), fibonacci_diagonal(n))
    return rep


def _closed_form(cfg, tables):
    rep = VerificationReport("closed_form", f"1<=k<={cfg.k_range.stop - 1}, 1<=n<={cfg.max_n}")
    for seed in cfg.seeds:
        table = tables[seed]
        for k in cfg.k_range:
            for n in range(1, cfg.max_n + 1):
                rep.check(seed, k, n, a_closed_form(seed, k, n), table.value(k, n))
    return rep


def _descent(cfg, tables):
    rep = VerificationReport("descent", f"1<=k<={cfg.k_range.stop - 1}, 1<=n<={cfg.max_n}")
    for seed in cfg.seeds:
        table = tables[seed]
        for k in cfg.k_range:
            for n in range(1, cfg.max_n + 1):
                lhs = table.value(k, n) + a_descent_residual(seed, k, n)
                rep.check(seed, k, n, table.value(k - 1, n + 2), lhs)
    return rep


def _at_3(cfg, tables):
    rep = VerificationReport("a_at_3", f"0<=k<={cfg.max_k}")
    for seed in cfg.seeds:
        for k in range(cfg.max_k + 1):
            rep.check(seed, k, 3, tables[seed].value(k, 3), a_at_3(seed, k))
    return rep


def _partial_sum_k1(cfg, tables):
    rep = VerificationReport("partial_sum_k1", f"1<=n<={cfg.max_n}")
    for seed in cfg.seeds:
        for n in range(1, cfg.max_n + 1):
            rep.check(seed, 1, n, gibonacci(seed, n + 2) - seed.g2, tables[seed].value(1, n))
    return rep


def _s_vs_oracle(cfg, tables):
    rep = VerificationReport("s_vs_oracle", f"1<=n<={cfg.oracle_max_n}, 0<=k<=(n+1)//2+1")
    for seed in cfg.seeds:
        for n in range(1, cfg.oracle_max_n + 1):
            for k in _ks(n, extra=1):
                q = CountQuery(n, k, seed)
                rep.check(seed, k, n, brute_force_colored_count(q), s_colored(q))
    return rep


def _expected_s(table: PartialSumTable, k: int, n: int) -> int:
    if k == 0:
        return gibonacci(table.seed, n + 2)
    return table.value(k, n - 2 * (k - 1))


def _s_vs_a(cfg, tables):
    rep = VerificationReport("s_vs_a", f"1<=n<={cfg.max_n}, 0<=k<=(n+1)//2")
    for seed in cfg.seeds:
        for n in range(1, cfg.max_n + 1):
            for k in _ks(n):
                rep.check(seed, k, n, _expected_s(tables[seed], k, n), s_colored(CountQuery(n, k, seed)))
    return rep


def _decrement(cfg, tables):
    rep = VerificationReport("decrement", f"1<=n<={cfg.max_n}, 0<=k<=(n+1)//2")
    for seed in cfg.seeds:
        for n in range(1, cfg.max_n + 1):
            for k in _ks(n):
                q = CountQuery(n, k, seed)
                lhs = s_colored(CountQuery(n, k + 1, seed)) + s_decrement_residual(q)
                rep.check(seed, k, n, s_colored(q), lhs)
    return rep


def _bijection(cfg, tables):
    rep = VerificationReport("path_set_bijection", f"1<=n<={cfg.oracle_max_n}, 0<=k<=(n+1)//2")
    for seed in cfg.seeds:
        for n in range(1, cfg.oracle_max_n + 1):
            for k in _ks(n):
                for s in enumerate_colored(CountQuery(n, k, seed)):
                    p = path_from_set(s, n)
                    rep.check(seed, k, n, s, set_from_path(p))
                    rep.check(seed, k, n, p, path_from_set(set_from_path(p), n))
    return rep


def _path_count(cfg, tables):
    rep = VerificationReport("path_count", f"1<=n<={cfg.oracle_max_n}, 0<=k<=(n+1)//2")
    for seed in cfg.seeds:
        for n in range(1, cfg.oracle_max_n + 1):
            for k in _ks(n):
                count = sum(1 for _ in enumerate_paths(seed, k, n))
                rep.check(seed, k, n, s_colored(CountQuery(n, k, seed)), count)
                rep.check(seed, k, n, _expected_s(tables[seed], k, n), count)
    return rep


IDENTITIES: tuple[tuple[str, Callable[[RunConfig, TableLookup], VerificationReport]], ...] = (
    ("hockey_stick", _hockey_stick),
    ("gibonacci_via_fibonacci", _via_fibonacci),
    ("fibonacci_diagonal", _diagonal),
    ("closed_form", _closed_form),
    ("descent", _descent),
    ("a_at_3", _at_3),
    ("partial_sum_k1", _partial_sum_k1),
    ("s_vs_oracle", _s_vs_oracle),
    ("s_vs_a", _s_vs_a),
    ("decrement", _decrement),
    ("path_set_bijection", _bijection),
    ("path_count", _path_count),
)


def verify_all(
    config: RunConfig | None = None,
    tables: Mapping[GibonacciSeed, PartialSumTable] | None = None,
) -> list[VerificationReport]:
    """One report per identity, in a fixed order.

    ``tables`` lets a caller supply the partial-sum tables checked against the
    closed forms; missing seeds get a fresh table.
    """
    config = config or RunConfig()
    lookup = dict(tables or {})
    for seed in config.seeds:
        lookup.setdefault(seed, PartialSumTable(seed))
    return [check(config, lookup) for _, check in IDENTITIES]


def iter_failures(reports: Sequence[VerificationReport]) -> Iterator[tuple[str, Failure]]:
    for rep in reports:
        for f in rep.failures:
            yield rep.identity_name, f
