import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contentseries.operators import (
    POperator,
    apply_bernstein,
    bernstein,
    bernstein_perp,
    bernstein_vertex,
    d_schur,
    on_p,
    rimhook_compound,
    sekiguchi_c,
    sekiguchi_t,
    u_monomials,
    u_operator,
    u_schur,
)
from contentseries.partition import Partition, partitions_up_to
from contentseries.psalgebra import PPoly, SchurExpansion, joincut, p, s, schur_to_p
from contentseries.verify import rimhook_reference

P = Partition
EMPTY = P(())


def test_u_d_examples():
    assert u_schur(0, s()) == s(1)
    assert u_schur(1, s(1)) == s(2) - s(1, 1)
    assert d_schur(1, s(2)) == s(1)
    # 0^0 = 1: U_0 adds every addable cell
    assert u_schur(0, s(1)) == s(2) + s(1, 1)


def test_u_monomials_genus0_k1():
    op = u_monomials(1, 0, 4)
    assert dict(op.items()) == {(P((b + 1,)), P((b,))): 1 for b in range(1, 5)}


def test_u_monomials_genus0_k2():
    # ordered sums over (b, c) with unit weights: a key with two distinct
    # parts collects both orderings
    op = u_monomials(2, 0, 3)
    for (gamma, alpha), c in op.items():
        two_part = gamma if len(gamma) == 2 else alpha
        assert c == len(set(itertools.permutations(two_part)))
        assert gamma.size == alpha.size + 1 and len(gamma) + len(alpha) == 3
    assert op[((4,), (2, 1))] == 2
    assert op[((2, 1), (2,))] == 2
    assert op[((1, 1), (1,))] == 1


def test_u_monomials_genus1_k3():
    op = u_monomials(3, 1, 5)
    assert dict(op.items()) == {(P((b + 1,)), P((b,))): Fraction(b * (b + 1), 2) for b in range(1, 6)}


def test_u_monomials_series_route_matches_closed_genus0():
    for k in range(1, 6):
        assert u_monomials(k, 0, 5) == u_monomials(k, 0, 5, method="series")


def test_monomial_shape_invariants():
    for k in range(1, 7):
        for h in range(k // 2 + 1):
            for (gamma, alpha), c in u_monomials(k, h, 5).items():
                assert c != 0
                assert gamma.size == alpha.size + 1
                assert len(gamma) + len(alpha) == k + 1 - 2 * h
                assert len(gamma) >= 1 and len(alpha) >= 1


def test_apply_poperator_examples():
    assert u_monomials(1, 0, 3).apply(p(1)) == p(2)
    assert u_monomials(3, 1, 3).apply(p(1)) == p(2)
    assert u_operator(4, 4).apply(PPoly()) == PPoly()
    assert u_monomials(0, 0, 3).apply(PPoly({(): 1})) == p(1)


def test_poperator_json_round_trip():
    op = u_operator(4, 4)
    assert POperator.from_json(op.to_json()) == op


def test_bernstein_examples():
    res = bernstein(2, P((5, 3, 3, 1)))
    assert (res.sign, res.shape) == (-1, P((4, 3, 3, 3, 1)))
    for n in range(5):
        res = bernstein(n, EMPTY)
        assert (res.sign, res.shape) == (1, P((n,)) if n else EMPTY)
    assert bernstein(-1, EMPTY).is_zero
    assert bernstein(-1, EMPTY).as_schur() == SchurExpansion()


def test_rimhook_compound_examples():
    assert rimhook_compound(2, 0, EMPTY) == s(2)
    assert rimhook_compound(1, 1, P((1,))) == s(1)
    assert rimhook_compound(0, 2, P((2,))) == s()
    # a vertical strip picks up the height sign
    assert rimhook_compound(1, -1, EMPTY) == -s(1, 1)


def test_sekiguchi_examples():
    for mu in partitions_up_to(4):
        assert sekiguchi_c(0, SchurExpansion.basis(mu)) == SchurExpansion.basis(mu).scale(mu.size)
        assert sekiguchi_t(0, SchurExpansion.basis(mu)) == SchurExpansion.basis(mu)
    assert sekiguchi_c(1, s(2)) == s(2).scale(2)


@pytest.mark.parametrize("k", range(5))
def test_operator_equivalence(k):
    op = u_operator(k, 5)
    for beta in partitions_up_to(4):
        assert op.apply(p(*beta)) == on_p(lambda e: u_schur(k, e), p(*beta))


@pytest.mark.parametrize("k", range(4))
def test_u_d_adjoint(k):
    for lam in partitions_up_to(6):
        for mu, c in u_schur(k, SchurExpansion.basis(lam)).items():
            assert d_schur(k, SchurExpansion.basis(mu))[lam] == c


@pytest.mark.parametrize("k", range(1, 5))
def test_commutator_recursion(k):
    prev = lambda e: u_schur(k - 1, e)
    for beta in partitions_up_to(4):
        a = p(*beta)
        assert joincut(on_p(prev, a)) - on_p(prev, joincut(a)) == on_p(lambda e: u_schur(k, e), a)


def test_c1_is_twice_joincut():
    for beta in partitions_up_to(6):
        assert on_p(lambda e: sekiguchi_c(1, e), p(*beta)) == joincut(p(*beta)).scale(2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(partitions_up_to(5))), st.integers(-6, 6))
def test_bernstein_matches_vertex_operator(lam, n):
    assert schur_to_p(bernstein(n, lam).as_schur()) == bernstein_vertex(n, lam)
    assert schur_to_p(bernstein_perp(n, lam).as_schur()) == bernstein_vertex(n, lam, perp=True)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(list(partitions_up_to(6))), st.integers(-8, 8), st.integers(-4, 4))
def test_rimhook_compound_matches_enumeration(lam, m, shift):
    n = m + shift
    assert rimhook_compound(n, m, lam) == rimhook_reference(n, m, lam)


def test_apply_bernstein_is_linear():
    e = s(2, 1).scale(3) - s(1)
    assert apply_bernstein(1, e) == bernstein(1, P((2, 1))).as_schur().scale(3) - bernstein(1, P((1,))).as_schur()
