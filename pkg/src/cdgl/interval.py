"""The interval model: two Maurer-Cartan endpoints joined by a degree-0
generator whose differential involves the Bernoulli series
ad/(e^{ad} - 1).

This lives in negative degrees, so it runs in a scratch free
presentation; the check is that the differential squares to zero within
the chosen bracket-length truncation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import FreePresentation, Generator, GradedLieElement, bracket
from .errors import DomainError
from .reports import SuiteReport


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Bernoulli numbers with B_1 = -1/2 (the x/(e^x - 1) convention),
    via the standard recurrence sum_{j<=k} C(k+1, j) B_j = 0."""
    if k == 0:
        return Fraction(1)
    return -Fraction(sum(comb(k + 1, j) * bernoulli(j) for j in range(k)), k + 1)


def interval_presentation(order: int) -> tuple[FreePresentation, dict[str, GradedLieElement]]:
    """The free complete Lie algebra on a0, a1 (degree -1) and a01
    (degree 0), truncated at bracket length `order`, with
      d a_i  = -1/2 [a_i, a_i],
      d a01  = [a01, a1] + sum_k B_k/k! ad_{a01}^k (a1 - a0).
    """
    if order < 2:
        raise DomainError("interval check needs truncation order >= 2")
    gens = [Generator("a0", -1), Generator("a1", -1), Generator("a01", 0)]
    P = FreePresentation(gens, truncation=order, scratch=True)
    a0, a1, a01 = (P.gen(n) for n in ("a0", "a1", "a01"))
    half = Fraction(1, 2)

    series = P.zero()
    term = a1 - a0
    for k in range(order):
        series = series + term.scale(bernoulli(k) / factorial(k))
        term = bracket(a01, term, P)
        if term.is_zero:
            break
    P.set_differential(
        {
            "a0": bracket(a0, a0, P).scale(-half),
            "a1": bracket(a1, a1, P).scale(-half),
            "a01": bracket(a01, a1, P) + series,
        }
    )
    return P, {"a0": a0, "a1": a1, "a01": a01}


def ls_interval_check(order: int) -> tuple[SuiteReport, GradedLieElement]:
    """Verify d^2 = 0 on all three generators of the interval model,
    exactly, through bracket length `order`.  Returns the report and the
    truncated differential of the joining generator (its series head)."""
    P, gens = interval_presentation(order)
    report = SuiteReport("interval-d-squared")
    d = P.differential
    for name, g in gens.items():
        dd = d(d(g))
        report.record(
            dd.is_zero,
            "d-squared",
            name,
            "" if dd.is_zero else "d^2 %s = %s" % (name, dd.format()),
        )
    linear = {
        key: c
        for key, c in d(gens["a01"]).terms.items()
        if key.length == 1
    }
    a0_key = next(k for k in linear if P.format_key(k) == "a0")
    a1_key = next(k for k in linear if P.format_key(k) == "a1")
    report.record(
        linear[a0_key] == -1 and linear[a1_key] == 1 and len(linear) == 2,
        "linear-part",
        "a01",
        "linear part of d a01 must be a1 - a0",
    )
    return report, d(gens["a01"])
