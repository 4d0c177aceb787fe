"""Dold and sign condition scans, fail-factor bounds and the consolidated report.

A sequence A satisfies the Dold condition when n divides
S_n = sum over d | n of mu(n/d) * A_d, for every n; equivalently when
p^k divides A_{p^k s} - A_{p^{k-1} s} for every prime power p^k and
p-coprime s.  The fail factor of A is the least positive c such that
c*A satisfies the condition (infinite when no c works).  Each violating
index n forces n / gcd(n, S_n) to divide any repairing c, so the lcm of
these deficiencies is a certified lower bound; the theoretical multiples
of fail come from the structure of the characteristic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numth import divisors, factorize, gcd_list, lcm_list, mobius, p_valuation, radical_int
from .polyring import IntPoly, degree, discriminant, squarefree_part
from .recurrence import (
    RecurrenceSpec,
    SequenceView,
    StructureVerdict,
    char_poly,
    convenient_check,
    sequence_view,
    structure_test,
)

DEFAULT_HORIZON = 200


@dataclass(frozen=True)
class DoldViolation:
    """Index n with n not dividing S_n; deficiency is the forced repair multiple."""

    n: int
    mobius_sum: int
    deficiency: int


@dataclass(frozen=True)
class ClassificationRow:
    """Most specific case-table row applicable to a recurrence."""

    row_id: str
    condition: str
    details: dict


@dataclass(frozen=True)
class FailReport:
    verdict: str  # "almost-dold" | "not-almost-dold" | "unknown"
    horizon: int
    empirical_lower: int
    upper_bounds: tuple[tuple[str, int], ...]
    exact: int | None
    infinite: bool
    structure: StructureVerdict | None = None
    classification: ClassificationRow | None = None
    violations: tuple[DoldViolation, ...] = ()
    per_prime: tuple[tuple[int, int, int], ...] = ()  # (p, min exponent, max exponent)


def mobius_sum(view: SequenceView, n: int) -> int:
    """S_n = sum over d | n of mu(n/d) * A_d."""
    if n < 1:
        raise ValueError("indices start at 1")
    return sum(mobius(n // d) * view.term(d) for d in divisors(n))


def dold_violations(view: SequenceView, horizon: int) -> list[DoldViolation]:
    """All indices n <= horizon where n does not divide S_n."""
    out = []
    for n in range(1, horizon + 1):
        s = mobius_sum(view, n)
        if s % n:
            out.append(DoldViolation(n, s, n // math.gcd(n, s)))
    return out


def sign_violations(view: SequenceView, horizon: int) -> list[int]:
    """All indices n <= horizon with a negative Mobius sum."""
    return [n for n in range(1, horizon + 1) if mobius_sum(view, n) < 0]


def prime_power_check(view: SequenceView, p: int, k: int, s: int) -> bool:
    """True iff p^k divides A_{p^k s} - A_{p^(k-1) s}; requires p coprime to s."""
    if s % p == 0:
        raise ValueError("s must not be divisible by p")
    return (view.term(p**k * s) - view.term(p ** (k - 1) * s)) % p**k == 0


def empirical_fail_lower(view: SequenceView, horizon: int) -> int:
    """lcm of deficiencies over n <= horizon; divides the fail factor."""
    return lcm_list([v.deficiency for v in dold_violations(view, horizon)])


# -- classification and theoretical bounds -----------------------------------


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def classify(spec: RecurrenceSpec, prime_bound: int = 300) -> ClassificationRow:
    """Assign the most specific case-table row to the recurrence."""
    d = spec.order
    cpoly = char_poly(spec)
    disc = discriminant(cpoly)
    details: dict = {"order": d, "discriminant": disc}
    if d == 1:
        return ClassificationRow("order-1", "always almost satisfies", details)
    if d == 2:
        if _is_square(disc):
            return ClassificationRow(
                "order-2-reducible", "square discriminant; almost iff single-coefficient form", details
            )
        return ClassificationRow(
            "order-2-irreducible", "non-square discriminant; almost iff both root coefficients equal", details
        )
    status, payload = convenient_check(spec, prime_bound)
    details["convenient"] = status
    if status == "certified":
        details["witness"] = payload
        return ClassificationRow("convenient", "almost iff all root coefficients equal", details)
    from .factorint import factor_over_Z

    if factor_over_Z(cpoly).is_irreducible():
        return ClassificationRow("irreducible", "almost iff all root coefficients equal", details)
    if disc != 0:
        return ClassificationRow(
            "nonzero-discriminant", "almost iff coefficients constant on each irreducible factor", details
        )
    return ClassificationRow("any", "almost iff constant coefficients on each distinct factor", details)


def table_bounds(
    spec: RecurrenceSpec, verdict: StructureVerdict, classification: ClassificationRow
) -> list[tuple[str, int]]:
    """Every applicable theoretical multiple of the fail factor, labeled.

    Only meaningful when the structure verdict is positive (the bounds are
    vacuous otherwise).  Absolute values are taken throughout since the
    recursion coefficients may be negative while fail is positive.
    """
    if not verdict.almost:
        return []
    d = spec.order
    r = spec.coefficients
    cpoly = char_poly(spec)
    disc = discriminant(cpoly)
    bounds: list[tuple[str, int]] = []
    if d == 1:
        bounds.append(("order-1", abs(r[0])))
    m = len(verdict.coefficients)
    irreducible = m == 1 and degree(list(verdict.coefficients[0][0])) == d
    if irreducible:
        # gcd(r_1, 2 r_2, ..., d r_d); appending the discriminant would not
        # change the gcd, so it is never included.
        bounds.append(("gcd", gcd_list([(i + 1) * abs(c) for i, c in enumerate(r)])))
    if d == 2 and disc != 0:
        if _is_square(disc):
            bounds.append(("order-2-scaled", abs(r[1]) * radical_int(disc)))
        else:
            bounds.append(("order-2-scaled", 2 * abs(r[1]) * radical_int(abs(disc))))
    if disc != 0:
        bounds.append(("discriminant", abs(r[d - 1] * disc)))
    sf = squarefree_part(cpoly)
    bounds.append(("squarefree-discriminant", abs(r[d - 1] * discriminant(sf))))
    bounds.append(("denominator", lcm_list([l.denominator for _, l in verdict.coefficients])))
    return bounds


def _per_prime_resolution(lower: int, bounds: list[tuple[str, int]]) -> tuple[tuple[int, int, int], ...]:
    if not bounds:
        return ()
    best = min(b for _, b in bounds)
    out = []
    for p, _ in factorize(best):
        lo = p_valuation(p, lower) if lower else 0
        hi = min(p_valuation(p, b) for _, b in bounds if b)
        out.append((p, lo, hi))
    return tuple(out)


def fail_report(spec: RecurrenceSpec, horizon: int = DEFAULT_HORIZON, max_bits: int | None = None) -> FailReport:
    """Full analysis of a recurrence-backed sequence.

    Runs the structure test, classification, theoretical bounds and the
    empirical scan; declares the fail factor exact only when the
    empirical lower bound meets a proof-backed upper bound.
    """
    if horizon < 1:
        raise ValueError("horizon must be positive")
    kwargs = {} if max_bits is None else {"max_bits": max_bits}
    view = sequence_view(spec, **kwargs)
    verdict = structure_test(spec)
    classification = classify(spec)
    violations = dold_violations(view, horizon)
    lower = lcm_list([v.deficiency for v in violations])
    if not verdict.almost:
        return FailReport(
            verdict="not-almost-dold",
            horizon=horizon,
            empirical_lower=lower,
            upper_bounds=(),
            exact=None,
            infinite=True,
            structure=verdict,
            classification=classification,
            violations=tuple(violations),
        )
    bounds = table_bounds(spec, verdict, classification)
    minimum = min(b for _, b in bounds)
    exact = lower if lower == minimum else None
    return FailReport(
        verdict="almost-dold",
        horizon=horizon,
        empirical_lower=lower,
        upper_bounds=tuple(bounds),
        exact=exact,
        infinite=False,
        structure=verdict,
        classification=classification,
        violations=tuple(violations),
        per_prime=_per_prime_resolution(lower, bounds),
    )


def raw_report(view: SequenceView, horizon: int) -> FailReport:
    """Empirical-only report for an ingested sequence (no structure claims)."""
    violations = dold_violations(view, horizon)
    lower = lcm_list([v.deficiency for v in violations])
    return FailReport(
        verdict="unknown",
        horizon=horizon,
        empirical_lower=lower,
        upper_bounds=(),
        exact=None,
        infinite=False,
        violations=tuple(violations),
    )


# -- power subsequences ------------------------------------------------------


@dataclass(frozen=True)
class PowerBound:
    """Upper bound for the fail factor of the n**t-sampled subsequence."""

    bound: int
    radical: int
    degree_multiple: int
    heuristic: bool


def _splitting_degree_multiple(cpoly: IntPoly, prime_bound: int = 1000) -> int:
    """lcm of mod-p factor degrees at unramified primes, capped at d!.

    For order <= 2 this equals the splitting-field degree; beyond that it
    is a lower-bound heuristic for it.
    """
    from .factorint import degree_pattern
    from .numth import primes_up_to

    sf = squarefree_part(cpoly)
    d = degree(sf)
    cap = math.factorial(degree(cpoly))
    m = 1
    disc = discriminant(sf)
    for p in primes_up_to(prime_bound).primes:
        if disc % p == 0:
            continue
        pat = degree_pattern(sf, p)
        m = lcm_list([m, *pat.pattern])
        if m >= cap:
            return cap
    return m


def power_fail_bound(spec: RecurrenceSpec, t: int) -> PowerBound | None:
    """Fail-factor multiple for the subsequence sampled at indices n**t.

    Requires a nonzero discriminant.  The multiplier is
    |r_d * disc * rad(disc)|, offered when t is a multiple of the
    splitting-field degree (exact for order <= 2, a degree-pattern
    heuristic above that, flagged as such).  The radical of the
    characteristic discriminant stands in for the radical of the
    splitting-field discriminant: every prime ramified in the splitting
    field divides the polynomial discriminant.
    """
    if t < 1:
        raise ValueError("exponent must be positive")
    d = spec.order
    cpoly = char_poly(spec)
    disc = discriminant(cpoly)
    if disc == 0:
        raise ValueError("power-subsequence bound requires a nonzero discriminant")
    radical = radical_int(abs(disc))
    if d <= 2:
        m = 1 if (d == 1 or _is_square(disc)) else 2
        if t % m:
            return None
        return PowerBound(
            bound=abs(spec.coefficients[d - 1] * disc) * radical,
            radical=radical,
            degree_multiple=m,
            heuristic=False,
        )
    m = _splitting_degree_multiple(cpoly)
    if t % m:
        return None
    return PowerBound(
        bound=abs(spec.coefficients[d - 1] * disc) * radical,
        radical=radical,
        degree_multiple=m,
        heuristic=True,
    )
