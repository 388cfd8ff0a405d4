"""
Colored Schreier sets
=====================

List the colored Schreier subsets of {1..6} with at least two elements for
G_1 = 3, G_2 = 2, then cross-check the count against a full subset scan and
against the partial-sum table.
"""
from itertools import groupby

from gibonacci_sums import (
    CountQuery,
    GibonacciSeed,
    PartialSumTable,
    brute_force_colored_count,
    enumerate_colored,
    s_colored,
)

seed = GibonacciSeed(3, 2)
query = CountQuery(n=6, k=2, seed=seed)
letters = "RBG"

for elements, group in groupby(enumerate_colored(query), key=lambda s: s.elements):
    group = list(group)
    shown = [f"{{{elements[0]}^{letters[s.color_index]}," + ",".join(map(str, elements[1:])) + "}" for s in group]
    print(f"{str(list(elements)):<10} {group[0].color_class.value:<17}", " ".join(shown))

print("\nformula     :", s_colored(query))
print("subset scan :", brute_force_colored_count(query))
print("a_2'(4)     :", PartialSumTable(seed).value(2, 6 - 2 * (2 - 1)))
