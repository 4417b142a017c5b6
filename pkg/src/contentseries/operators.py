"""Raising/lowering content operators, Bernstein operators and their relatives.

Operators defined by their action on Schur functions take and return
:class:`SchurExpansion`.  Differential operators in the power sums are
:class:`POperator` instances, stored in normal order (every ``p^perp`` acts
before every multiplication).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .chartable import dimension
from .partition import (
    Partition,
    add_cells,
    aut_size,
    partitions,
    phi,
    phi_star,
    remove_cells,
    z_weight,
)
from .psalgebra import (
    PPoly,
    SchurExpansion,
    apply_pperp_partition,
    multiply_p,
    multiply_truncated,
    p_to_schur,
    schur_to_p,
)


def _cpow(c: int, k: int) -> int:
    # 0**0 == 1 in Python already; kept explicit because the convention matters.
    return 1 if k == 0 else c**k


def _schur_map(e: SchurExpansion, rule: Callable[[Partition], Iterable[tuple[Partition, Fraction]]]):
    out: dict[Partition, Fraction] = {}
    for lam, v in e.items():
        for mu, w in rule(lam):
            if w:
                out[mu] = out.get(mu, Fraction(0)) + v * w
    return SchurExpansion(out)


def u_schur(k: int, e: SchurExpansion) -> SchurExpansion:
    return _schur_map(e, lambda lam: ((mu, _cpow(c, k)) for mu, c in add_cells(lam)))


def d_schur(k: int, e: SchurExpansion) -> SchurExpansion:
    return _schur_map(e, lambda lam: ((mu, _cpow(c, k)) for mu, c in remove_cells(lam)))


def on_p(schur_op: Callable[[SchurExpansion], SchurExpansion], a: PPoly) -> PPoly:
    """Apply a Schur-basis operator to a power-sum polynomial."""
    return schur_to_p(schur_op(p_to_schur(a)))


def sekiguchi_c_eigenvalue(k: int, mu: Partition) -> Fraction:
    n = mu.size
    if n == 0:
        return Fraction(0)
    total = sum(_cpow(c, k) * dimension(lam) for lam, c in remove_cells(mu))
    return Fraction(n * total, dimension(mu))


def sekiguchi_t_eigenvalue(k: int, mu: Partition) -> Fraction:
    n = mu.size
    total = sum(_cpow(c, k) * dimension(lam) for lam, c in add_cells(mu))
    return Fraction(total, (n + 1) * dimension(mu))


def sekiguchi_c(k: int, e: SchurExpansion) -> SchurExpansion:
    return _schur_map(e, lambda mu: [(mu, sekiguchi_c_eigenvalue(k, mu))])


def sekiguchi_t(k: int, e: SchurExpansion) -> SchurExpansion:
    return _schur_map(e, lambda mu: [(mu, sekiguchi_t_eigenvalue(k, mu))])


class POperator:
    """Normal-ordered differential operator ``sum coeff * p_gamma p^perp_alpha``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[tuple, Fraction | int]] = None):
        clean: dict[tuple[Partition, Partition], Fraction] = {}
        for (gamma, alpha), c in (terms or {}).items():
            key = (Partition(gamma), Partition(alpha))
            clean[key] = clean.get(key, Fraction(0)) + Fraction(c)
        self._terms = {
            k: v
            for k, v in sorted(clean.items(), key=lambda kv: (kv[0][1].size, kv[0][1], kv[0][0]))
            if v
        }

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, key) -> Fraction:
        gamma, alpha = key
        return self._terms.get((Partition(gamma), Partition(alpha)), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, POperator) and self._terms == other._terms

    def __add__(self, other: "POperator") -> "POperator":
        out = dict(self._terms)
        for k, v in other.items():
            out[k] = out.get(k, Fraction(0)) + v
        return POperator(out)

    def __repr__(self):
        body = " + ".join(
            f"{v}*p[{','.join(map(str, g))}]p^[{','.join(map(str, a))}]" for (g, a), v in self.items()
        )
        return f"POperator({body or '0'})"

    def apply(self, a: PPoly, N: Optional[int] = None) -> PPoly:
        return apply_poperator(self, a, N)

    def to_json(self) -> list[dict]:
        return [
            {"gamma": list(g), "alpha": list(a), "num": str(v.numerator), "den": str(v.denominator)}
            for (g, a), v in self.items()
        ]

    @classmethod
    def from_json(cls, rows: Sequence[Mapping]) -> "POperator":
        return cls(
            {(tuple(r["gamma"]), tuple(r["alpha"])): Fraction(int(r["num"]), int(r["den"])) for r in rows}
        )


def apply_poperator(op: POperator, a: PPoly, N: Optional[int] = None) -> PPoly:
    out = PPoly()
    for (gamma, alpha), c in op.items():
        reduced = apply_pperp_partition(alpha, a)
        if reduced:
            out = out + multiply_p(gamma, reduced, N).scale(c)
    return out


# U_k^{(h)} as a differential operator.  Under normal ordering every generator
# commutes, so exp(sum_i x^{2i+1} w^{2i} Q_{2i} / (4^i (2i+1)!)) factors over
# generators: each p_a or p^perp_a carries x * S_a(u) with u = (wx)^2 and
# S_a(u) = sum_i a^{2i} u^i / (4^i (2i+1)!).  The prefactor is 1/(x S_1(u)).
# A monomial with d = l(gamma)+l(alpha) factors then sits at x^{d-1+2h} w^{2h},
# so its coefficient in U_k^{(h)} is k! [u^h] prod S_a(u) / S_1(u) / (Aut).

def _s_series(a: int, order: int) -> list[Fraction]:
    return [Fraction(a ** (2 * i), 4**i * math.factorial(2 * i + 1)) for i in range(order + 1)]


def _series_mul(x: list[Fraction], y: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y[: order + 1 - i]):
                out[i + j] += xi * yj
    return out


def _series_inv(x: list[Fraction], order: int) -> list[Fraction]:
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / x[0]
    for n in range(1, order + 1):
        acc = sum((x[i] * inv[n - i] for i in range(1, min(n, len(x) - 1) + 1)), Fraction(0))
        inv[n] = -acc / x[0]
    return inv


def _generic_coeff(k: int, h: int, gamma: Partition, alpha: Partition) -> Fraction:
    series = _series_inv(_s_series(1, h), h)
    for a in list(gamma) + list(alpha):
        series = _series_mul(series, _s_series(a, h), h)
    return Fraction(math.factorial(k)) * series[h] / (aut_size(gamma) * aut_size(alpha))


def _genus0_coeff(k: int, gamma: Partition, alpha: Partition) -> Fraction:
    j = len(gamma)
    orderings = Fraction(math.factorial(j), aut_size(gamma)) * Fraction(
        math.factorial(k + 1 - j), aut_size(alpha)
    )
    return Fraction(math.comb(k + 1, j), k + 1) * orderings


def _monomial_shapes(k: int, h: int, N: int):
    d = k + 1 - 2 * h
    if d < 1:
        return
    for lg in range(1, d + 1):
        la = d - lg
        for w in range(0, N + 1):
            alphas = [a for a in partitions(w) if len(a) == la]
            if not alphas:
                continue
            gammas = [g for g in partitions(w + 1) if len(g) == lg]
            for alpha in alphas:
                for gamma in gammas:
                    yield gamma, alpha


@lru_cache(maxsize=None)
def u_monomials(k: int, h: int, N: int, method: str = "auto") -> POperator:
    """``U_k^{(h)}`` restricted to monomials ``p_gamma p^perp_alpha`` with ``|alpha| <= N``.

    ``method="auto"`` uses the closed genus-0 coefficients for ``h == 0`` and
    the generating series otherwise; ``"series"`` forces the generating series.
    """
    if k == 0:
        return POperator({((1,), ()): 1}) if h == 0 else POperator()
    use_closed = h == 0 and method == "auto"
    terms = {}
    for gamma, alpha in _monomial_shapes(k, h, N):
        if use_closed:
            if not alpha:
                continue
            terms[(gamma, alpha)] = _genus0_coeff(k, gamma, alpha)
        else:
            terms[(gamma, alpha)] = _generic_coeff(k, h, gamma, alpha)
    return POperator(terms)


def u_operator(k: int, N: int) -> POperator:
    """The full ``U_k`` as a sum of its genus pieces."""
    total = POperator()
    for h in range(0, k // 2 + 1):
        total = total + u_monomials(k, h, N)
    return total


@dataclass(frozen=True)
class BernsteinResult:
    sign: int
    shape: Optional[Partition]

    @property
    def is_zero(self) -> bool:
        return self.shape is None

    def as_schur(self) -> SchurExpansion:
        return SchurExpansion() if self.shape is None else SchurExpansion({self.shape: self.sign})


def bernstein(n: int, lam: Partition) -> BernsteinResult:
    res = phi(Partition(lam), n)
    if res is None:
        return BernsteinResult(1, None)
    shape, r = res
    return BernsteinResult((-1) ** r, shape)


def bernstein_perp(n: int, lam: Partition) -> BernsteinResult:
    # The sign exponent counts rows of lam ending in content >= -n, i.e. r*_{-n}.
    res = phi_star(Partition(lam), -n)
    if res is None:
        return BernsteinResult(1, None)
    shape, r = res
    return BernsteinResult((-1) ** r, shape)


def apply_bernstein(n: int, e: SchurExpansion, perp: bool = False) -> SchurExpansion:
    op = bernstein_perp if perp else bernstein
    out = SchurExpansion()
    for lam, v in e.items():
        out = out + op(n, lam).as_schur().scale(v)
    return out


def rimhook_compound(n: int, m: int, lam: Partition) -> SchurExpansion:
    """``B_n B^perp_{-m} s_lam``."""
    return apply_bernstein(n, bernstein_perp(-m, lam).as_schur())


def bernstein_vertex(n: int, lam: Partition, perp: bool = False) -> PPoly:
    """``B_n s_lam`` (or ``B^perp_n``) straight from the vertex-operator series.

    ``B(t) = exp(sum t^k p_k / k) exp(-sum t^-k p^perp_k / k)``; the adjoint
    flips both signs.  Annihilation terminates because ``p^perp`` lowers
    weight, and creation is the generating series of ``h`` (or signed ``e``).
    """
    lam = Partition(lam)
    create_sign, annihilate_sign = (-1, 1) if perp else (1, -1)
    base = schur_to_p(lam)
    # annihilated[j] = [t^-j] exp(annihilate_sign * sum t^-k p^perp_k / k) s_lam
    annihilated: dict[int, PPoly] = {}
    for alpha in (a for w in range(lam.size + 1) for a in partitions(w)):
        coeff = Fraction(annihilate_sign ** len(alpha), z_weight(alpha))
        term = apply_pperp_partition(alpha, base).scale(coeff)
        if term:
            annihilated[alpha.size] = annihilated.get(alpha.size, PPoly()) + term
    out = PPoly()
    for j, piece in annihilated.items():
        i = n + j
        if i < 0:
            continue
        # [t^i] exp(create_sign * sum t^k p_k / k) = sum_{alpha |- i} sign^l p_alpha / z_alpha
        created = PPoly({a: Fraction(create_sign ** len(a), z_weight(a)) for a in partitions(i)})
        out = out + multiply_truncated(created, piece, None)
    return out
