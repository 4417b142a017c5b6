"""Closed-form genus-0 counts.

Every result carries both the coefficient of ``p_alpha`` (times the power
of ``y`` fixed by genus 0) in the genus-0 free energy and the raw class
total obtained from it:

* Hurwitz: ``H_0(alpha) = n! (n+l-2)! * coeff``
* monotone Hurwitz: ``vec-H_0(alpha) = n! * coeff``
* m-hypermap: ``G^(m)_0(alpha) = n! * coeff``
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .partition import Partition, aut_size


class NormalizationError(ArithmeticError):
    """A closed form produced a non-integral raw count."""


@dataclass(frozen=True)
class CountResult:
    partition: Partition
    genus: int
    kind: str
    series_coeff: Fraction
    raw_count: int

    def as_row(self) -> dict:
        return {
            "partition": list(self.partition),
            "genus": self.genus,
            "kind": self.kind,
            "num": str(self.series_coeff.numerator),
            "den": str(self.series_coeff.denominator),
            "raw_count": str(self.raw_count),
        }


def _check(alpha) -> Partition:
    alpha = Partition(alpha)
    if not alpha:
        raise ValueError("closed forms need a nonempty partition")
    return alpha


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NormalizationError(f"{what} is not integral: {value}")
    return value.numerator


def hurwitz_genus0(alpha) -> CountResult:
    alpha = _check(alpha)
    n, l = alpha.size, len(alpha)
    coeff = Fraction(n) ** (l - 3) / aut_size(alpha)
    for a in alpha:
        coeff *= Fraction(a**a, math.factorial(a))
    raw = _integral(coeff * math.factorial(n) * math.factorial(n + l - 2), "Hurwitz count")
    return CountResult(alpha, 0, "hurwitz", coeff, raw)


def monotone_hurwitz_genus0(alpha) -> CountResult:
    alpha = _check(alpha)
    n, l = alpha.size, len(alpha)
    raw_q = Fraction(math.factorial(n), aut_size(alpha)) * Fraction(
        math.factorial(2 * n + l - 3), math.factorial(2 * n)
    )
    for a in alpha:
        raw_q *= math.comb(2 * a, a)
    raw = _integral(raw_q, "monotone Hurwitz count")
    return CountResult(alpha, 0, "monotone", raw_q / math.factorial(n), raw)


def mhypermap_genus0(m: int, alpha) -> CountResult:
    """Genus-0 m-hypermap count.

    For ``m == 1`` the product formula degenerates; a single factor equals
    the target, which is transitive only for a full cycle, so the count is
    the class size ``(n-1)!`` for ``alpha == (n)`` and ``0`` otherwise.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    alpha = _check(alpha)
    n, l = alpha.size, len(alpha)
    kind = f"hypermap({m})"
    if m == 1:
        raw = math.factorial(n - 1) if l == 1 else 0
        return CountResult(alpha, 0, kind, Fraction(raw, math.factorial(n)), raw)
    top = (m - 1) * n - 1
    bottom = (m - 1) * n - l + 2
    raw_q = Fraction(math.factorial(n) * m, aut_size(alpha))
    if bottom < 0:
        raw_q = Fraction(0)
    else:
        raw_q *= Fraction(math.factorial(top), math.factorial(bottom))
    for a in alpha:
        raw_q *= math.comb(m * a - 1, a)
    raw = _integral(raw_q, "hypermap count")
    return CountResult(alpha, 0, kind, raw_q / math.factorial(n), raw)


def closed_form(kind: str, alpha, m: int = 2) -> CountResult:
    if kind == "hurwitz":
        return hurwitz_genus0(alpha)
    if kind == "monotone":
        return monotone_hurwitz_genus0(alpha)
    if kind == "hypermap":
        return mhypermap_genus0(m, alpha)
    raise ValueError(f"unknown kind {kind!r}")
