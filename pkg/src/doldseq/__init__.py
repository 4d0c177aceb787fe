"""Dold-condition analysis for integer linear recurrent sequences."""

from .dold import (
    ClassificationRow,
    DoldViolation,
    FailReport,
    PowerBound,
    classify,
    dold_violations,
    empirical_fail_lower,
    fail_report,
    mobius_sum,
    power_fail_bound,
    prime_power_check,
    raw_report,
    sign_violations,
    table_bounds,
)
from .factorint import (
    Factorization,
    FactorPattern,
    degree_pattern,
    factor_mod_p,
    factor_over_Z,
    hensel_lift,
    irreducibility_witness,
    root_density,
)
from .numth import PrimeSieve, legendre, mobius, p_valuation, primes_up_to, radical_int
from .polyring import ModPoly, discriminant, mod_reduce, power_sums, resultant, squarefree_part
from .recurrence import (
    RecurrenceSpec,
    SequenceView,
    StructureVerdict,
    TraceSequence,
    char_poly,
    convenient_check,
    make_recurrence,
    power_subsequence,
    raw_view,
    scaled_view,
    sequence_view,
    square_disc_family,
    structure_test,
    term,
    trace_sequence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
