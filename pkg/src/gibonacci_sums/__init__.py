"""Exact partial sums of Gibonacci sequences, colored Schreier sets and lattice paths."""
from .combinatorics import BinomialTable, binomial, hockey_stick_sum
from .errors import DomainError
from .lattice import (
    ColoredLatticePath,
    PathClass,
    RenderFormat,
    count_monotone,
    enumerate_paths,
    path_from_set,
    render_path,
    render_paths,
    set_from_path,
)
from .partial_sums import (
    PartialSumTable,
    a_at_3,
    a_closed_form,
    a_descent_residual,
    a_value,
    apply_P,
    table_csv,
)
from .schreier import (
    ColorClass,
    ColoredSchreierSet,
    CountQuery,
    brute_force_colored_count,
    count_fixed_size,
    enumerate_colored,
    s_colored,
    s_decrement_residual,
    s_plain,
)
from .sequences import (
    FIBONACCI,
    GibonacciSeed,
    SequencePrefix,
    fibonacci,
    fibonacci_diagonal,
    gibonacci,
    gibonacci_prefix,
    gibonacci_via_fibonacci,
)
from .verify import RunConfig, VerificationReport, verify_all

__version__ = "0.1.0"
