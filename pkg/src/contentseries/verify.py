"""Verification suites shared by the CLI and the acceptance tests.

Each suite walks a fixed finite range, stops at the first disagreement and
reports it.  Everything is exact, so "agree" means equal as rationals.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import factorizations as fz
from .chartable import character
from .formulas import hurwitz_genus0, mhypermap_genus0, monotone_hurwitz_genus0
from .operators import (
    bernstein,
    bernstein_perp,
    bernstein_vertex,
    d_schur,
    on_p,
    rimhook_compound,
    sekiguchi_c,
    u_monomials,
    u_operator,
    u_schur,
)
from .partition import (
    Partition,
    class_size,
    contents,
    format_partition,
    partitions,
    partitions_up_to,
    phi,
    phi_star,
    rim_hooks_add,
    rim_hooks_remove,
    z_weight,
)
from .psalgebra import PPoly, SchurExpansion, joincut, p, schur_to_p, vandermonde_hk_check
from .series import (
    UnivariateSeries,
    binomial_power,
    build_phi,
    exp_series,
    geometric_series,
    log_phi,
    normalized_count,
    one_minus_x,
    constant_one,
    verify_fg_pde,
    verify_fpde,
    verify_genus0_pde,
)


@dataclass
class SuiteReport:
    name: str
    checks: int = 0
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f": {self.failure}"
        return f"{status} {self.name} ({self.checks} checks){tail}"


class _Stop(Exception):
    pass


def _describe(key) -> str:
    if isinstance(key, Partition):
        return f"p[{format_partition(key)}]"
    alpha, m = key
    return f"p[{format_partition(alpha)}] y^{m}"


class _Checker:
    def __init__(self, name: str):
        self.report = SuiteReport(name)

    def equal(self, got, want, where: str) -> None:
        self.report.checks += 1
        if got != want:
            self.report.failure = f"{where}: got {got!r}, expected {want!r}"
            raise _Stop

    def zero(self, residual, where: str) -> None:
        self.report.checks += 1
        if residual:
            key, value = next(iter(residual.items()))
            self.report.failure = f"{where}: nonzero coefficient {value} at {_describe(key)}"
            raise _Stop


def _run(name: str, body: Callable[[_Checker], None]) -> SuiteReport:
    chk = _Checker(name)
    try:
        body(chk)
    except _Stop:
        pass
    return chk.report


def _bases(max_weight: int) -> Iterable[Partition]:
    return partitions_up_to(max_weight)


# -- operators ---------------------------------------------------------------

def suite_operators(k_max: int = 6, weight: int = 6) -> SuiteReport:
    """Schur-side ``U_k`` against the genus-graded monomial form, plus the
    adjointness, commutator and ``C_1 = 2 Delta`` relations."""

    def body(chk: _Checker):
        for k in range(k_max + 1):
            op = u_operator(k, weight)
            for beta in _bases(weight - 1):
                a = p(*beta)
                chk.equal(op.apply(a), on_p(lambda e: u_schur(k, e), a), f"U_{k} on p{list(beta)}")
        for k in range(5):
            for lam in _bases(6):
                up = u_schur(k, SchurExpansion.basis(lam))
                for mu, c in up.items():
                    back = d_schur(k, SchurExpansion.basis(mu))[lam]
                    chk.equal(c, back, f"<U_{k} s{list(lam)}, s{list(mu)}> vs D_{k}")
        for k in range(1, 6):
            prev = lambda e, k=k: u_schur(k - 1, e)
            for beta in _bases(5):
                a = p(*beta)
                lhs = joincut(on_p(prev, a)) - on_p(prev, joincut(a))
                chk.equal(lhs, on_p(lambda e: u_schur(k, e), a), f"[Delta, U_{k - 1}] on p{list(beta)}")
        for beta in _bases(7):
            a = p(*beta)
            chk.equal(on_p(lambda e: sekiguchi_c(1, e), a), joincut(a).scale(2), f"C_1 on p{list(beta)}")

    return _run("operators", body)


# -- bernstein ---------------------------------------------------------------

def _diagonal_side(lam: Partition, c: int) -> str:
    """Where the first cell of content ``c`` outside ``lam`` meets the diagram."""
    i = max(1, 1 - c)
    while i <= len(lam) and lam[i - 1] >= i + c:
        i += 1
    col = i + c
    left_inside = col - 1 == 0 or (i <= len(lam) and lam[i - 1] >= col - 1)
    return "right" if left_inside else "below"


def rimhook_reference(n: int, m: int, lam: Partition) -> SchurExpansion:
    """``B_n B^perp_{-m} s_lam`` by direct rim-hook search."""
    lam = Partition(lam)
    if n > m:
        want = list(range(m, n))
        for hook in rim_hooks_add(lam, n - m):
            if sorted(hook.contents) == want:
                return SchurExpansion({hook.outer: (-1) ** hook.height})
        return SchurExpansion()
    if n < m:
        want = list(range(n, m))
        for hook in rim_hooks_remove(lam, m - n):
            if sorted(hook.contents) == want:
                return SchurExpansion({hook.inner: (-1) ** hook.height})
        return SchurExpansion()
    return SchurExpansion.basis(lam) if _diagonal_side(lam, n) == "right" else SchurExpansion()


def suite_bernstein(n_max: int = 6, spread: int = 4, vertex_max: int = 4) -> SuiteReport:
    def body(chk: _Checker):
        worked = Partition((5, 3, 3, 1))
        chk.equal(phi(worked, 2), (Partition((4, 3, 3, 3, 1)), 1), "phi_2(5,3,3,1)")
        chk.equal(phi_star(worked, 1), (Partition((6, 4, 1)), 2), "phi*_1(5,3,3,1)")
        reach = n_max + spread + 1
        for lam in _bases(n_max):
            for m in range(-reach, reach + 1):
                for n in range(m - spread, m + spread + 1):
                    chk.equal(
                        rimhook_compound(n, m, lam),
                        rimhook_reference(n, m, lam),
                        f"B_{n} B*_{-m} s{list(lam)}",
                    )
        for lam in _bases(vertex_max):
            for n in range(-vertex_max - 1, vertex_max + 2):
                for perp, op in ((False, bernstein), (True, bernstein_perp)):
                    got = schur_to_p(op(n, lam).as_schur())
                    chk.equal(got, bernstein_vertex(n, lam, perp), f"{'B*' if perp else 'B'}_{n} s{list(lam)}")

    return _run("bernstein", body)


# -- PDEs --------------------------------------------------------------------

STANDARD_FS = {
    "exp": lambda K: exp_series(K),
    "geom": lambda K: geometric_series(K),
    "binom:2": lambda K: binomial_power(2),
    "binom:3": lambda K: binomial_power(3),
}


def suite_pde(
    fs: Optional[dict[str, UnivariateSeries]] = None,
    N: int = 4,
    M: int = 4,
    g: Optional[UnivariateSeries] = None,
) -> SuiteReport:
    """``verify_fpde`` for each ``f``; with ``g`` (or by default ``f = 1,
    g = 1 - x``) also the quotient form."""

    def body(chk: _Checker):
        chosen = fs if fs is not None else {k: make(M) for k, make in STANDARD_FS.items()}
        for name, f in chosen.items():
            chk.zero(verify_fpde(f, N, M), f"f={name}")
        if g is not None:
            for name, f in chosen.items():
                chk.zero(verify_fg_pde(f, g, N, M), f"f={name}, g={g.name}")
        elif fs is None:
            chk.zero(verify_fg_pde(constant_one(), one_minus_x(), N, M), "f=1, g=1-x")

    return _run("pde", body)


def suite_genus0pde(fs: Optional[dict[str, UnivariateSeries]] = None, N: int = 5) -> SuiteReport:
    def body(chk: _Checker):
        chosen = fs if fs is not None else {k: make(2 * N) for k, make in STANDARD_FS.items()}
        for name, f in chosen.items():
            chk.zero(verify_genus0_pde(f, N), f"f={name}")

    return _run("genus0pde", body)


# -- oracles -----------------------------------------------------------------

def suite_oracle(n_max: int = 5, M: int = 6, k_max: int = 4, beta_max: int = 4) -> SuiteReport:
    """Content series against the JM product, and the marked-stage JM action
    against ``U_k^(h)``; also the composition-convention flip."""

    def body(chk: _Checker):
        import math

        for fname, make in STANDARD_FS.items():
            f = make(M)
            phi_series = build_phi(f, n_max, M)
            for n in range(1, n_max + 1):
                expansion = fz.jm_product_expansion(f, n, M)
                for m in range(M + 1):
                    want = PPoly({a: class_size(a) * poly[m] for a, poly in expansion.items()})
                    got = phi_series.slice(n, m).scale(math.factorial(n))
                    chk.equal(got, want, f"f={fname}, n={n}, y^{m}")
        for k in range(k_max + 1):
            for beta in _bases(beta_max):
                if not beta:
                    continue
                action = fz.jm_genus_stratified_action(k, beta)
                for h in range(k // 2 + 1):
                    want = u_monomials(k, h, beta.size).apply(p(*beta))
                    chk.equal(action.get(h, PPoly()), want, f"U_{k}^({h}) p{list(beta)}")
        for n in range(1, 5):
            for alpha in partitions(n):
                for m in range(0, 4):
                    for count in (fz.count_transposition_factorizations, fz.count_monotone_factorizations):
                        chk.equal(
                            count(alpha, m, True, left_to_right=True),
                            count(alpha, m, True),
                            f"{count.__name__}{list(alpha)}, m={m} convention flip",
                        )
                if n <= 3:
                    for m in (2, 3):
                        chk.equal(
                            fz.count_tuple_factorizations(alpha, m, 0, left_to_right=True),
                            fz.count_tuple_factorizations(alpha, m, 0),
                            f"tuples{list(alpha)}, m={m} convention flip",
                        )

    return _run("oracle", body)


# -- closed forms ------------------------------------------------------------

def suite_formulas(n_max: int = 5, hyper_ms: Iterable[int] = (2, 3), hyper_n_max: int = 4) -> SuiteReport:
    """Closed form = brute-force oracle = normalized genus-0 coefficient."""

    def body(chk: _Checker):
        M = 2 * n_max - 2
        psi_h = log_phi(build_phi(exp_series(M), n_max, M))
        psi_m = log_phi(build_phi(geometric_series(M), n_max, M))
        for n in range(1, n_max + 1):
            for alpha in partitions(n):
                m = n + len(alpha) - 2
                closed = hurwitz_genus0(alpha).raw_count
                chk.equal(fz.count_transposition_factorizations(alpha, m), closed, f"Hurwitz oracle {list(alpha)}")
                chk.equal(normalized_count(psi_h, alpha, 0, "hurwitz"), closed, f"Hurwitz series {list(alpha)}")
                closed = monotone_hurwitz_genus0(alpha).raw_count
                chk.equal(fz.count_monotone_factorizations(alpha, m), closed, f"monotone oracle {list(alpha)}")
                chk.equal(normalized_count(psi_m, alpha, 0, "monotone"), closed, f"monotone series {list(alpha)}")
        for mm in hyper_ms:
            M = 2 * hyper_n_max - 2
            psi = log_phi(build_phi(binomial_power(mm), hyper_n_max, M))
            for n in range(1, hyper_n_max + 1):
                for alpha in partitions(n):
                    closed = mhypermap_genus0(mm, alpha).raw_count
                    chk.equal(fz.count_tuple_factorizations(alpha, mm, 0), closed, f"hypermap({mm}) oracle {list(alpha)}")
                    chk.equal(normalized_count(psi, alpha, 0, "hypermap"), closed, f"hypermap({mm}) series {list(alpha)}")

    return _run("formulas", body)


# -- identities --------------------------------------------------------------

def suite_identities(
    n_max: int = 8, vandermonde_n: int = 5, k_max: int = 4, point_sets: int = 20, seed: int = 0
) -> SuiteReport:
    """Character orthogonality, the cut-and-join eigenvalues and the
    divided-difference formula for ``h_k`` at random rational points."""

    def body(chk: _Checker):
        for n in range(n_max + 1):
            lams = partitions(n)
            for i, lam in enumerate(lams):
                for mu in lams[i:]:
                    inner = sum(
                        (Fraction(character(lam, a) * character(mu, a), z_weight(a)) for a in lams),
                        Fraction(0),
                    )
                    chk.equal(inner, int(lam == mu), f"<chi{list(lam)}, chi{list(mu)}>")
            for lam in lams:
                s_lam = schur_to_p(lam)
                chk.equal(joincut(s_lam), s_lam.scale(sum(contents(lam))), f"Delta s{list(lam)}")
        rng = random.Random(seed)
        for n in range(1, vandermonde_n + 1):
            for k in range(-(n - 1), k_max + 1):
                for _ in range(point_sets):
                    points: list[Fraction] = []
                    while len(points) < n:
                        x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                        if x not in points:
                            points.append(x)
                    lhs, rhs = vandermonde_hk_check(n, k, points)
                    chk.equal(lhs, rhs, f"h_{k} at {[str(x) for x in points]}")

    return _run("identities", body)


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "operators": suite_operators,
    "bernstein": suite_bernstein,
    "pde": suite_pde,
    "genus0pde": suite_genus0pde,
    "oracle": suite_oracle,
    "formulas": suite_formulas,
    "identities": suite_identities,
}
