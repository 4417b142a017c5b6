"""The content series, its logarithm, genus slices and PDE residuals.

Storage convention: a :class:`GradedSeries` maps ``(alpha, m)`` to the
absolute coefficient of ``p_alpha y^m z^|alpha|``.  The ``1/n!`` of the
exponential generating series is folded in, so the factorization counts are

* Hurwitz (``f = e^x``):             ``H_g(b)    = n! * m! * coeff``
* monotone (``f = 1/(1-x)``):        ``vecH_g(b) = n! * coeff``
* m-hypermap (``f = (1+x)^m``):      ``G_g(b)    = n! * coeff``

with ``m = |b| + l(b) - 2 + 2g``.  Because the z-degree always equals the
weight, ``d/dz`` is exact on this representation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .chartable import dimension
from .operators import on_p, sekiguchi_c, u_schur
from .partition import Partition, contents, partitions
from .psalgebra import PPoly, apply_pperp, multiply_truncated, schur_to_p

DEFAULT_N = 5
DEFAULT_M = 6


@dataclass(frozen=True)
class UnivariateSeries:
    """``f(x) = sum f_i x^i`` known up to ``x^K``.

    ``exact`` marks polynomials: coefficients past ``K`` are genuinely zero.
    """

    coeffs: tuple[Fraction, ...]
    name: str = "custom"
    exact: bool = False

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if i < len(self.coeffs):
            return self.coeffs[i]
        if self.exact:
            return Fraction(0)
        raise ValueError(f"{self.name} is only known to order {self.order}, asked for x^{i}")

    def truncated(self, K: int) -> list[Fraction]:
        return [self.coeff(i) for i in range(K + 1)]


def quotient(f: UnivariateSeries, g: UnivariateSeries, K: int) -> UnivariateSeries:
    g0 = g.coeff(0)
    if not g0:
        raise ValueError("g_0 must be nonzero")
    q: list[Fraction] = []
    for n in range(K + 1):
        acc = f.coeff(n) - sum((g.coeff(i) * q[n - i] for i in range(1, n + 1)), Fraction(0))
        q.append(acc / g0)
    return UnivariateSeries(tuple(q), name=f"({f.name})/({g.name})")


def exp_series(K: int) -> UnivariateSeries:
    return UnivariateSeries(tuple(Fraction(1, math.factorial(i)) for i in range(K + 1)), "exp")


def geometric_series(K: int) -> UnivariateSeries:
    return UnivariateSeries((Fraction(1),) * (K + 1), "geom")


def binomial_power(m: int, K: Optional[int] = None) -> UnivariateSeries:
    """``(1+x)^m``; a polynomial for ``m >= 0``."""
    if m >= 0:
        return UnivariateSeries(tuple(Fraction(math.comb(m, i)) for i in range(m + 1)), f"binom:{m}", True)
    if K is None:
        raise ValueError("negative powers need a truncation order")
    coeffs = []
    c = Fraction(1)
    for i in range(K + 1):
        coeffs.append(c)
        c = c * (m - i) / (i + 1)
    return UnivariateSeries(tuple(coeffs), f"binom:{m}")


def constant_one() -> UnivariateSeries:
    return UnivariateSeries((Fraction(1),), "one", True)


def one_minus_x() -> UnivariateSeries:
    return UnivariateSeries((Fraction(1), Fraction(-1)), "1-x", True)


def named_series(text: str, K: int) -> UnivariateSeries:
    """``exp``, ``geom``, ``one``, ``binom:m`` or a comma list of rationals ``"1,1/2,..."``."""
    if text == "exp":
        return exp_series(K)
    if text == "geom":
        return geometric_series(K)
    if text == "one":
        return constant_one()
    if text.startswith("binom:"):
        return binomial_power(int(text.split(":", 1)[1]), K)
    try:
        coeffs = tuple(Fraction(t.strip()) for t in text.split(","))
    except ValueError:
        raise ValueError(f"unknown series {text!r}") from None
    return UnivariateSeries(coeffs, "custom", True)


class YPoly:
    """Polynomial in ``y`` truncated above degree ``cap``."""

    __slots__ = ("coeffs", "cap")

    def __init__(self, coeffs: Iterable[Fraction | int], cap: int):
        c = [Fraction(x) for x in coeffs][: cap + 1]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)
        self.cap = cap

    def __mul__(self, other: "YPoly") -> "YPoly":
        cap = min(self.cap, other.cap)
        out = [Fraction(0)] * (cap + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs[: cap + 1 - i]):
                    out[i + j] += a * b
        return YPoly(out, cap)

    def __add__(self, other: "YPoly") -> "YPoly":
        cap = min(self.cap, other.cap)
        n = max(len(self.coeffs), len(other.coeffs))
        return YPoly([self[i] + other[i] for i in range(n)], cap)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, YPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"YPoly({[str(c) for c in self.coeffs]}, cap={self.cap})"

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def f_of_cy(f: UnivariateSeries, c: int, M: int) -> YPoly:
    return YPoly([f.coeff(i) * c**i for i in range(M + 1)], M)


Key = tuple[Partition, int]


class GradedSeries:
    """Truncated series in ``p``, ``y`` and ``z`` with ``z``-degree equal to weight."""

    __slots__ = ("_terms", "N", "M")

    def __init__(self, terms: Optional[Mapping[tuple, Fraction | int]] = None, N: int = DEFAULT_N, M: int = DEFAULT_M):
        self.N, self.M = N, M
        clean: dict[Key, Fraction] = {}
        for (alpha, m), v in (terms or {}).items():
            alpha = Partition(alpha)
            if alpha.size > N or m > M or m < 0:
                continue
            v = Fraction(v)
            if v:
                clean[(alpha, m)] = clean.get((alpha, m), Fraction(0)) + v
        self._terms = {
            k: v
            for k, v in sorted(clean.items(), key=lambda kv: (kv[0][0].size, tuple(-x for x in kv[0][0]), kv[0][1]))
            if v
        }

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, key) -> Fraction:
        alpha, m = key
        return self._terms.get((Partition(alpha), m), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedSeries) and self._terms == other._terms

    def __repr__(self) -> str:
        return f"GradedSeries(N={self.N}, M={self.M}, {len(self)} terms)"

    def _like(self, terms) -> "GradedSeries":
        return GradedSeries(terms, self.N, self.M)

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        out = dict(self._terms)
        for k, v in other.items():
            out[k] = out.get(k, Fraction(0)) + v
        return GradedSeries(out, min(self.N, other.N), min(self.M, other.M))

    def __neg__(self):
        return self._like({k: -v for k, v in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GradedSeries":
        return self._like({k: v * c for k, v in self.items()})

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        N, M = min(self.N, other.N), min(self.M, other.M)
        out: dict[Key, Fraction] = {}
        right = list(other.items())
        for (a, ma), va in self.items():
            for (b, mb), vb in right:
                if a.size + b.size > N:
                    break
                if ma + mb > M:
                    continue
                key = (a.union(b), ma + mb)
                out[key] = out.get(key, Fraction(0)) + va * vb
        return GradedSeries(out, N, M)

    def constant_term(self) -> Fraction:
        return self[((), 0)]

    def restrict(self, pred: Callable[[Partition, int], bool]) -> "GradedSeries":
        return self._like({k: v for k, v in self.items() if pred(*k)})

    def slice(self, n: int, m: int) -> PPoly:
        """The ``z^n y^m`` coefficient as a polynomial in ``p``."""
        return PPoly({a: v for (a, mm), v in self.items() if a.size == n and mm == m})

    def y_degrees(self, n: int) -> list[int]:
        return sorted({m for (a, m) in self.keys() if a.size == n})

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(a), "ydeg": m, "num": str(v.numerator), "den": str(v.denominator)}
            for (a, m), v in self.items()
        ]

    @classmethod
    def from_json(cls, rows: Sequence[Mapping], N: int, M: int) -> "GradedSeries":
        return cls(
            {(tuple(r["partition"]), int(r["ydeg"])): Fraction(int(r["num"]), int(r["den"])) for r in rows},
            N,
            M,
        )


def build_phi(f: UnivariateSeries, N: int = DEFAULT_N, M: int = DEFAULT_M) -> GradedSeries:
    terms: dict[Key, Fraction] = {}
    for n in range(N + 1):
        scale = Fraction(1, math.factorial(n))
        for lam in partitions(n):
            weight = YPoly([1], M)
            for c in contents(lam):
                weight = weight * f_of_cy(f, c, M)
            if not weight.coeffs:
                continue
            s_lam = schur_to_p(lam)
            d = dimension(lam)
            for m, ym in enumerate(weight.coeffs):
                if not ym:
                    continue
                for alpha, v in s_lam.items():
                    key = (alpha, m)
                    terms[key] = terms.get(key, Fraction(0)) + scale * d * ym * v
    return GradedSeries(terms, N, M)


def log_phi(phi: GradedSeries) -> GradedSeries:
    if phi.constant_term() != 1:
        raise ValueError("log needs constant term 1")
    u = phi - GradedSeries({((), 0): 1}, phi.N, phi.M)
    result = GradedSeries({}, phi.N, phi.M)
    power = GradedSeries({((), 0): 1}, phi.N, phi.M)
    for k in range(1, phi.N + 1):
        power = power * u
        if not power:
            break
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
    return result


def exp_series_graded(psi: GradedSeries) -> GradedSeries:
    if psi.constant_term():
        raise ValueError("exp needs zero constant term")
    result = GradedSeries({((), 0): 1}, psi.N, psi.M)
    power = GradedSeries({((), 0): 1}, psi.N, psi.M)
    for k in range(1, psi.N + 1):
        power = (power * psi).scale(Fraction(1, k))
        if not power:
            break
        result = result + power
    return result


def genus_of_entry(beta: Partition, m: int) -> Optional[int]:
    """Genus of a ``(beta, y^m)`` entry, or ``None`` if the degree is off-lattice."""
    excess = m - beta.size - len(beta) + 2
    if excess < 0 or excess % 2:
        return None
    return excess // 2


def genus_slice(psi: GradedSeries, g: int) -> GradedSeries:
    return psi.restrict(lambda beta, m: m == beta.size + len(beta) - 2 + 2 * g)


NORMALIZATIONS = ("hurwitz", "monotone", "hypermap")


def normalized_count(psi: GradedSeries, beta: Partition, g: int, kind: str) -> Fraction:
    """Recover the factorization count from a coefficient of ``log Phi``."""
    beta = Partition(beta)
    n = beta.size
    m = n + len(beta) - 2 + 2 * g
    if m > psi.M or n > psi.N:
        raise ValueError(f"entry ({beta}, y^{m}) lies beyond the caps N={psi.N}, M={psi.M}")
    coeff = psi[(beta, m)]
    if kind == "hurwitz":
        return coeff * math.factorial(n) * math.factorial(m)
    if kind in ("monotone", "hypermap"):
        return coeff * math.factorial(n)
    raise ValueError(f"unknown normalization {kind!r}")


# ---------------------------------------------------------------------------
# PDE residuals


def _u_sum_applied(f: UnivariateSeries, phi: GradedSeries, n_max: int) -> GradedSeries:
    """``(sum_i f_i y^i U_i) Phi`` on slices of weight ``<= n_max``, via the Schur basis.

    Keys of the result are ``(gamma, m)`` with z-degree ``|gamma| - 1``.
    """
    out: dict[Key, Fraction] = {}
    for n in range(n_max + 1):
        for m in phi.y_degrees(n):
            piece = phi.slice(n, m)
            for i in range(phi.M - m + 1):
                fi = f.coeff(i)
                if not fi:
                    continue
                image = on_p(lambda e: u_schur(i, e), piece)
                for gamma, v in image.items():
                    key = (gamma, m + i)
                    out[key] = out.get(key, Fraction(0)) + fi * v
    return GradedSeries(out, phi.N, phi.M)


def verify_fpde(f: UnivariateSeries, N: int = DEFAULT_N, M: int = DEFAULT_M) -> GradedSeries:
    """Residual of ``(sum f_i y^i U_i) Phi - dPhi/dz``; keys carry z-degree ``|gamma|-1``."""
    phi = build_phi(f, N, M)
    lhs = _u_sum_applied(f, phi, N - 1)
    dz = GradedSeries({(a, m): v * a.size for (a, m), v in phi.items() if a.size >= 1}, N, M)
    return lhs - dz


def verify_fg_pde(
    f: UnivariateSeries, g: UnivariateSeries, N: int = DEFAULT_N, M: int = DEFAULT_M
) -> GradedSeries:
    """Residual of ``(sum f_i y^i U_i) Phi - z^-1 (sum g_i y^i C_i) Phi`` for ``Phi = Phi^{f/g}``."""
    if not g.coeff(0):
        raise ValueError("g_0 must be nonzero")
    phi = build_phi(quotient(f, g, M), N, M)
    lhs = _u_sum_applied(f, phi, N - 1)
    rhs: dict[Key, Fraction] = {}
    for n in range(1, N + 1):
        for m in phi.y_degrees(n):
            piece = phi.slice(n, m)
            for i in range(M - m + 1):
                gi = g.coeff(i)
                if not gi:
                    continue
                image = on_p(lambda e: sekiguchi_c(i, e), piece)
                for gamma, v in image.items():
                    key = (gamma, m + i)
                    rhs[key] = rhs.get(key, Fraction(0)) + gi * v
    return lhs - GradedSeries(rhs, N, M)


def genus0_hat(f: UnivariateSeries, N: int) -> PPoly:
    """Genus-0 part of ``log Phi^f`` at ``y = 1``, as a polynomial in ``p`` (z = weight)."""
    M = max(2 * N - 2, 0)
    psi0 = genus_slice(log_phi(build_phi(f, N, M)), 0)
    out: dict[Partition, Fraction] = {}
    for (beta, _m), v in psi0.items():
        out[beta] = out.get(beta, Fraction(0)) + v
    return PPoly(out)


def _ordered_compositions_poly(total: int, parts: int) -> PPoly:
    """``sum p_{a_1}...p_{a_j}`` over ordered positive ``a`` with the given sum."""
    return PPoly(
        {gamma: Fraction(math.factorial(parts), math.prod(math.factorial(c) for c in gamma.multiplicities().values()))
         for gamma in partitions(total) if len(gamma) == parts}
    )


def genus0_pde_residual(f: UnivariateSeries, psi_hat: PPoly, N: int) -> PPoly:
    """Residual of the genus-0 equation for a candidate ``psi_hat`` (weights ``<= N``)."""
    # U(u) = sum_i (p_i^perp psi_hat) u^i, graded by p-weight + u-degree.
    U = {i: apply_pperp(i, psi_hat) for i in range(1, N + 1)}
    U = {i: v for i, v in U.items() if v}

    def upow_mul(A: dict[int, PPoly], B: dict[int, PPoly], cap: int) -> dict[int, PPoly]:
        out: dict[int, PPoly] = {}
        for i, a in A.items():
            for j, b in B.items():
                if i + j > cap:
                    continue
                prod_ = multiply_truncated(a, b, cap - i - j)
                if prod_:
                    out[i + j] = out.get(i + j, PPoly()) + prod_
        return out

    cap = N - 1
    powers: dict[int, dict[int, PPoly]] = {0: {0: PPoly({(): 1})}}
    lhs = PPoly({(1,): f.coeff(0)})
    for k in range(1, 2 * N - 1):
        fk = f.coeff(k)
        if not fk:
            continue
        for j in range(1, k + 1):
            r = k + 1 - j
            while max(powers) < r:
                top = max(powers)
                powers[top + 1] = upow_mul(powers[top], U, cap)
            coeff = fk * Fraction(math.comb(k + 1, j), k + 1)
            for ell, piece in powers[r].items():
                if ell + 1 < j:
                    continue
                front = _ordered_compositions_poly(ell + 1, j)
                if front:
                    lhs = lhs + multiply_truncated(front, piece, N).scale(coeff)
    rhs = PPoly({beta: v * beta.size for beta, v in psi_hat.items()})
    return (lhs - rhs).truncate(N)


def verify_genus0_pde(f: UnivariateSeries, N: int = DEFAULT_N) -> PPoly:
    return genus0_pde_residual(f, genus0_hat(f, N), N)
