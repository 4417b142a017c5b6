"""Exact sparse symmetric-function algebra in the power-sum generators.

A :class:`PPoly` is a finite linear combination of power-sum monomials
``p_alpha`` with rational coefficients.  The weight of ``p_alpha`` is
``|alpha|``; truncation is always by weight.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Optional, Sequence

from .chartable import character
from .partition import Partition, class_size, partitions, z_weight

Rational = Fraction | int


def _sort_key(lam: Partition):
    return (lam.size, tuple(-p for p in lam))


class LinComb:
    """Immutable sparse linear combination of partitions-indexed basis elements."""

    __slots__ = ("_terms",)
    basis_symbol = "b"

    def __init__(self, terms: Optional[Mapping[Iterable[int], Rational]] = None):
        clean: dict[Partition, Fraction] = {}
        for key, coeff in (terms or {}).items():
            key = Partition(key)
            coeff = Fraction(coeff)
            if coeff:
                clean[key] = clean.get(key, Fraction(0)) + coeff
                if not clean[key]:
                    del clean[key]
        self._terms = dict(sorted(clean.items(), key=lambda kv: _sort_key(kv[0])))

    @classmethod
    def basis(cls, parts: Iterable[int] = (), coeff: Rational = 1):
        return cls({Partition(parts): coeff})

    @classmethod
    def zero(cls):
        return cls()

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(Partition(key), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = type(self)({(): other}) if other else type(self)()
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self)({(): other})
        out = dict(self._terms)
        for k, v in other.items():
            out[k] = out.get(k, Fraction(0)) + v
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -v for k, v in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Rational):
        return type(self)({k: v * c for k, v in self.items()})

    def __truediv__(self, c: Rational):
        return self.scale(Fraction(1) / Fraction(c))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, v in self.items():
            name = f"{self.basis_symbol}[{','.join(map(str, k))}]" if k else "1"
            parts.append(f"{v}*{name}")
        return " + ".join(parts)

    def homogeneous_components(self) -> dict[int, "LinComb"]:
        comps: dict[int, dict] = {}
        for k, v in self.items():
            comps.setdefault(k.size, {})[k] = v
        return {n: type(self)(t) for n, t in sorted(comps.items())}

    def truncate(self, N: int):
        return type(self)({k: v for k, v in self.items() if k.size <= N})

    @property
    def max_weight(self) -> int:
        return max((k.size for k in self.keys()), default=0)


class PPoly(LinComb):
    """Polynomial in ``p_1, p_2, ...``; keys are the exponent patterns ``alpha``."""

    __slots__ = ()
    basis_symbol = "p"

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply_truncated(self, other, None)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def constant_term(self) -> Fraction:
        return self[()]

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(k), "num": str(v.numerator), "den": str(v.denominator)}
            for k, v in self.items()
        ]

    @classmethod
    def from_json(cls, rows: Sequence[Mapping]) -> "PPoly":
        return cls({tuple(r["partition"]): Fraction(int(r["num"]), int(r["den"])) for r in rows})


class SchurExpansion(LinComb):
    """Linear combination of Schur functions ``s_lambda``."""

    __slots__ = ()
    basis_symbol = "s"


def p(*parts: int) -> PPoly:
    return PPoly.basis(parts)


def s(*parts: int) -> SchurExpansion:
    return SchurExpansion.basis(parts)


def multiply_truncated(a: PPoly, b: PPoly, N: Optional[int]) -> PPoly:
    out: dict[Partition, Fraction] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            if N is not None and ka.size + kb.size > N:
                continue
            key = ka.union(kb)
            out[key] = out.get(key, Fraction(0)) + va * vb
    return PPoly(out)


def apply_pperp(i: int, a: PPoly) -> PPoly:
    """``p_i^perp = i d/dp_i``."""
    if i < 1:
        raise ValueError("p-perp index must be positive")
    out: dict[Partition, Fraction] = {}
    for k, v in a.items():
        m = k.count(i)
        if m:
            key = k.remove_part(i)
            out[key] = out.get(key, Fraction(0)) + v * i * m
    return PPoly(out)


def apply_pperp_partition(alpha: Iterable[int], a: PPoly) -> PPoly:
    for part in alpha:
        a = apply_pperp(part, a)
        if not a:
            break
    return a


def multiply_p(gamma: Iterable[int], a: PPoly, N: Optional[int] = None) -> PPoly:
    gamma = Partition(gamma)
    return PPoly(
        {k.union(gamma): v for k, v in a.items() if N is None or k.size + gamma.size <= N}
    )


@lru_cache(maxsize=None)
def _schur_in_p(lam: Partition) -> PPoly:
    n = lam.size
    return PPoly(
        {alpha: Fraction(class_size(alpha), math.factorial(n)) * character(lam, alpha)
         for alpha in partitions(n)}
    )


def schur_to_p(lam: Iterable[int] | SchurExpansion) -> PPoly:
    """Power-sum expansion of ``s_lam`` (or of a whole Schur expansion)."""
    if isinstance(lam, SchurExpansion):
        out = PPoly()
        for k, v in lam.items():
            out = out + _schur_in_p(k).scale(v)
        return out
    return _schur_in_p(Partition(lam))


def p_to_schur(a: PPoly) -> SchurExpansion:
    out: dict[Partition, Fraction] = {}
    for alpha, v in a.items():
        for lam in partitions(alpha.size):
            chi = character(lam, alpha)
            if chi:
                out[lam] = out.get(lam, Fraction(0)) + v * chi
    return SchurExpansion(out)


def hall_inner(a: LinComb, b: LinComb) -> Fraction:
    """Hall inner product; Schur expansions are orthonormal, ``<p_a, p_a> = z_a``."""
    if isinstance(a, SchurExpansion) and isinstance(b, SchurExpansion):
        return sum((v * b[k] for k, v in a.items()), Fraction(0))
    if isinstance(a, SchurExpansion):
        a = schur_to_p(a)
    if isinstance(b, SchurExpansion):
        b = schur_to_p(b)
    return sum((v * b[k] * z_weight(k) for k, v in a.items()), Fraction(0))


def exp_truncated(a: PPoly, N: int) -> PPoly:
    if a.constant_term():
        raise ValueError("exp needs a series with zero constant term")
    result = PPoly({(): 1})
    power = PPoly({(): 1})
    for k in range(1, N + 1):
        power = multiply_truncated(power, a, N).scale(Fraction(1, k))
        if not power:
            break
        result = result + power
    return result


def log_truncated(a: PPoly, N: int) -> PPoly:
    if a.constant_term() != 1:
        raise ValueError("log needs a series with constant term 1")
    u = a - 1
    result = PPoly()
    power = PPoly({(): 1})
    for k in range(1, N + 1):
        power = multiply_truncated(power, u, N)
        if not power:
            break
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
    return result


def joincut(a: PPoly, N: Optional[int] = None) -> PPoly:
    """The cut-and-join operator; weight preserving, so ``N`` only trims input."""
    if N is not None:
        a = a.truncate(N)
    out = PPoly()
    for alpha, v in a.items():
        mono = PPoly({alpha: v})
        for r in set(alpha):
            cut = apply_pperp(r, mono)
            for i in range(1, r):
                out = out + multiply_p((i, r - i), cut).scale(Fraction(1, 2))
        for i, j in combinations_with_replacement(sorted(set(alpha)), 2):
            joined = apply_pperp(j, apply_pperp(i, mono))
            if joined:
                weight = Fraction(1, 2) if i == j else Fraction(1)
                out = out + multiply_p((i + j,), joined).scale(weight)
    return out


def complete_homogeneous(k: int, points: Sequence[Rational]) -> Fraction:
    """``h_k`` evaluated at ``points`` by direct monomial summation."""
    if k < 0:
        return Fraction(0)
    return sum(
        (math.prod((Fraction(x) for x in combo), start=Fraction(1))
         for combo in combinations_with_replacement(points, k)),
        Fraction(0),
    )


def vandermonde_hk_check(n: int, k: int, points: Sequence[Rational]) -> tuple[Fraction, Fraction]:
    """Both sides of the divided-difference identity for ``h_k``.

    ``lhs = sum_i x_i^(k+n-1) / prod_{j != i} (x_i - x_j)``; ``rhs = h_k`` for
    ``k >= 0`` and ``0`` for ``-(n-1) <= k <= -1``.
    """
    pts = [Fraction(x) for x in points]
    if len(pts) != n:
        raise ValueError(f"expected {n} points, got {len(pts)}")
    if len(set(pts)) != n:
        raise ValueError("points must be pairwise distinct")
    if k < -(n - 1):
        raise ValueError("k must be at least -(n-1)")
    lhs = Fraction(0)
    for i, xi in enumerate(pts):
        denom = math.prod((xi - xj for j, xj in enumerate(pts) if j != i), start=Fraction(1))
        lhs += xi ** (k + n - 1) / denom
    return lhs, complete_homogeneous(k, pts)
