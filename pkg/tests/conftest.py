import pytest

from gibonacci_sums import GibonacciSeed, PartialSumTable

BATTERY = (
    GibonacciSeed(1, 1),
    GibonacciSeed(1, 2),
    GibonacciSeed(3, 2),
    GibonacciSeed(7, 5),
)


@pytest.fixture(params=BATTERY, ids=str)
def seed(request):
    return request.param


@pytest.fixture
def table(seed):
    return PartialSumTable(seed)
