"""
Iterated partial sums of a Gibonacci sequence
=============================================

Start from G_1 = 3, G_2 = 2 and apply the running-sum operator a few times.
Every row of the memoized table agrees with the binomial-weighted closed form.
"""
from gibonacci_sums import (
    GibonacciSeed,
    PartialSumTable,
    SequencePrefix,
    a_at_3,
    a_closed_form,
    a_descent_residual,
    apply_P,
)

seed = GibonacciSeed(3, 2)
prefix = SequencePrefix.of(seed, 8)
print("G      :", prefix.values)

row = prefix.values
for k in range(1, 4):
    row = apply_P(row)
    print(f"P^{k}(G) :", row)

table = PartialSumTable(seed)
print("\nclosed form, k=3:", [a_closed_form(seed, 3, n) for n in range(1, 9)])
print("table row,   k=3:", list(table.row(3, 8)))

# a_k'(3) has a closed form of its own
print("\na_k'(3) for k=0..6:", [a_at_3(seed, k) for k in range(7)])

# stepping down one iterate costs a shift by two and a binomial correction
k, n = 2, 5
print(
    f"\na_{k}'({n}) + residual = {table.value(k, n)} + {a_descent_residual(seed, k, n)}"
    f" = {table.value(k - 1, n + 2)} = a_{k - 1}'({n + 2})"
)
