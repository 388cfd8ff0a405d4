import threading

import pytest

from gibonacci_sums import (
    DomainError,
    GibonacciSeed,
    PartialSumTable,
    SequencePrefix,
    a_at_3,
    a_closed_form,
    a_descent_residual,
    a_value,
    apply_P,
    gibonacci,
    gibonacci_prefix,
    table_csv,
)


def running_sums(values, times=1):
    values = list(values)
    for _ in range(times):
        out, total = [], 0
        for v in values:
            total += v
            out.append(total)
        values = out
    return values


@pytest.mark.parametrize(
    "values, expected",
    [((1, 1, 2, 3, 5), (1, 2, 4, 7, 12)), ((3,), (3,)), ((3, 2, 5, 7), (3, 5, 10, 17))],
)
def test_apply_P(values, expected):
    assert apply_P(values) == expected


def test_apply_P_accepts_prefix_and_rejects_empty():
    assert apply_P(SequencePrefix.of(GibonacciSeed(3, 2), 4)) == (3, 5, 10, 17)
    with pytest.raises(DomainError):
        apply_P(())


@pytest.mark.parametrize(
    "seed, k, n, expected",
    [((1, 1), 3, 2, 4), ((3, 2), 2, 3, 18), ((3, 2), 0, 4, 7)],
)
def test_a_value(seed, k, n, expected):
    assert a_value(PartialSumTable(GibonacciSeed(*seed)), k, n) == expected


@pytest.mark.parametrize(
    "seed, k, n, expected",
    [((3, 2), 1, 4, 17), ((3, 2), 2, 3, 18), ((1, 1), 3, 2, 4)],
)
def test_a_closed_form(seed, k, n, expected):
    assert a_closed_form(GibonacciSeed(*seed), k, n) == expected


def test_closed_form_rejects_k0():
    with pytest.raises(DomainError):
        a_closed_form(GibonacciSeed(1, 1), 0, 3)


@pytest.mark.parametrize("seed, k, expected", [((3, 2), 2, 18), ((3, 2), 0, 5), ((1, 1), 4, 16)])
def test_a_at_3(seed, k, expected):
    assert a_at_3(GibonacciSeed(*seed), k) == expected


@pytest.mark.parametrize(
    "seed, k, n, expected",
    [
        ((3, 2), 1, 5, 2),
        ((1, 1), 1, 6, 1),
        # C(4,1)*2 + C(4,0)*3; running-sum oracle gives a_1'(5) = 29, a_2'(3) = 18
        ((3, 2), 2, 3, 11),
    ],
)
def test_a_descent_residual(seed, k, n, expected):
    seed = GibonacciSeed(*seed)
    assert a_descent_residual(seed, k, n) == expected
    lower = running_sums(gibonacci_prefix(seed, n + 2), k - 1)[n + 1]
    upper = running_sums(gibonacci_prefix(seed, n), k)[n - 1]
    assert lower - upper == expected


def test_table_invariants(table):
    seed = table.seed
    for n in range(1, 30):
        assert table.value(0, n) == gibonacci(seed, n)
    for k in range(10):
        assert table.value(k, 1) == seed.g1
        for n in range(2, 30):
            if k:
                assert table.value(k, n) == table.value(k, n - 1) + table.value(k - 1, n)


def test_operator_consistency(table):
    m = 25
    prefix = SequencePrefix.of(table.seed, m)
    row = prefix.values
    for k in range(1, 9):
        row = apply_P(row)
        assert row == table.row(k, m)
        assert list(row) == running_sums(prefix.values, k)


def test_fill_order_independent(seed):
    column_first, row_first = PartialSumTable(seed), PartialSumTable(seed)
    for n in range(1, 31):
        for k in range(8):
            column_first.value(k, n)
    row_first.value(7, 30)
    assert all(column_first.row(k, 30) == row_first.row(k, 30) for k in range(8))


def test_closed_form_grid(table):
    for k in range(1, 13):
        for n in range(1, 61):
            assert a_closed_form(table.seed, k, n) == table.value(k, n)


def test_descent_grid(table):
    for k in range(1, 13):
        for n in range(1, 61):
            assert table.value(k, n) + a_descent_residual(table.seed, k, n) == table.value(k - 1, n + 2)


def test_k1_specialisation(table):
    seed = table.seed
    for n in range(1, 81):
        assert table.value(1, n) == gibonacci(seed, n + 2) - seed.g2


def test_a_at_3_grid(table):
    for k in range(41):
        assert a_at_3(table.seed, k) == table.value(k, 3)


def test_concurrent_fills_agree(seed):
    shared = PartialSumTable(seed)
    errors = []

    def work(offset):
        try:
            for n in range(1, 40):
                shared.value((n + offset) % 10, n)
        except Exception as exc:  # pragma: no cover
            errors.append(exc)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    fresh = PartialSumTable(seed)
    for k in range(10):
        assert shared.row(k, 39) == fresh.row(k, 39)


def test_bad_indices():
    table = PartialSumTable(GibonacciSeed(1, 1))
    with pytest.raises(DomainError):
        table.value(-1, 3)
    with pytest.raises(DomainError):
        table.value(2, 0)


def test_table_csv():
    text = table_csv(PartialSumTable(GibonacciSeed(3, 2)), 2, 3)
    assert text == (
        "k,n,value\n"
        "0,1,3\n0,2,2\n0,3,5\n"
        "1,1,3\n1,2,5\n1,3,10\n"
        "2,1,3\n2,2,8\n2,3,18\n"
    )
