"""
Colored lattice paths
=====================

The Fibonacci case k = 3, n = 6 has four paths. Draw them as text and write
an SVG of the same figure to the working directory.
"""
from pathlib import Path

from gibonacci_sums import (
    FIBONACCI,
    CountQuery,
    count_monotone,
    enumerate_paths,
    render_paths,
    s_colored,
    s_decrement_residual,
)

paths = list(enumerate_paths(FIBONACCI, k=3, n=6))
print(render_paths(paths, "ascii"))

out = Path("figure1.svg")
out.write_text(render_paths(paths, "svg"), encoding="utf-8")
print("wrote", out)

# Paths of height exactly k line up with monotone paths in a k x (n-2k+1)
# grid; the whole height >= k family only does so when no taller paths fit.
print("\n n  k  height>=k  height==k  monotone")
for n, k in [(6, 3), (6, 2), (7, 2), (9, 3)]:
    print(
        f"{n:>2} {k:>2} {s_colored(CountQuery(n, k)):>10}"
        f" {s_decrement_residual(CountQuery(n, k)):>10} {count_monotone(k, n - 2 * k + 1):>9}"
    )
