import pytest

from gibonacci_sums import DomainError, GibonacciSeed, PartialSumTable, RunConfig, verify_all
from gibonacci_sums.verify import IDENTITIES

SMALL = RunConfig(max_k=4, max_n=10, oracle_max_n=8)


def test_small_config_passes():
    reports = verify_all(SMALL)
    assert [r.identity_name for r in reports] == [name for name, _ in IDENTITIES]
    assert len(reports) == 12
    for r in reports:
        assert r.passed, r.failures[:3]
        assert r.checked > 0


def test_degenerate_grid():
    reports = verify_all(RunConfig(max_k=0, max_n=1, oracle_max_n=1))
    assert len(reports) == 12
    assert all(r.passed and r.checked > 0 for r in reports)


class CorruptedTable(PartialSumTable):
    def __init__(self, seed, bad):
        super().__init__(seed)
        self.bad = bad

    def value(self, k, n):
        v = super().value(k, n)
        return v + 1 if (k, n) == self.bad else v


def test_harness_reports_corrupted_entry():
    seed = GibonacciSeed(3, 2)
    reports = verify_all(SMALL, tables={seed: CorruptedTable(seed, (2, 5))})
    closed = next(r for r in reports if r.identity_name == "closed_form")
    assert not closed.passed
    assert [(f.seed, f.k, f.n) for f in closed.failures] == [(seed, 2, 5)]
    assert closed.failures[0].actual == closed.failures[0].expected + 1
    untouched = next(r for r in reports if r.identity_name == "hockey_stick")
    assert untouched.passed


@pytest.mark.parametrize(
    "kwargs",
    [{"max_k": -1}, {"max_n": 0}, {"oracle_max_n": 25}, {"oracle_max_n": 0}, {"seeds": ()}],
)
def test_bad_config(kwargs):
    with pytest.raises(DomainError):
        RunConfig(**kwargs)


def test_summary_line():
    r = verify_all(SMALL)[0]
    assert r.summary().startswith("PASS")
