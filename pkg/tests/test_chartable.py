import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contentseries.chartable import character, character_table, dimension
from contentseries.partition import Partition, class_size, partitions

P = Partition


@pytest.mark.parametrize("alpha", partitions(4))
def test_trivial_character(alpha):
    assert character(P((4,)), alpha) == 1


def test_small_values():
    assert character(P((2, 1)), P((1, 1, 1))) == 2
    assert character(P((2, 1)), P((3,))) == -1
    assert character(P((2, 1)), P((2, 1))) == 0
    assert character(P(()), P(())) == 1


def test_size_mismatch():
    with pytest.raises(ValueError):
        character(P((2,)), P((1,)))


@pytest.mark.parametrize("lam, d", [((1, 1, 1), 1), ((2, 1), 2), ((2, 2), 2), ((5, 3, 3, 1), 4158)])
def test_dimension(lam, d):
    assert dimension(P(lam)) == d


# frozen from the standard S_4 table
S4 = {
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [3, 1, -1, 0, -1],
    (2, 2): [2, 0, 2, -1, 0],
    (2, 1, 1): [3, -1, -1, 0, 1],
    (1, 1, 1, 1): [1, -1, 1, 1, -1],
}
S4_CLASSES = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]


def test_s4_table():
    table = character_table(4)
    for lam, row in S4.items():
        assert [table[(P(lam), P(a))] for a in S4_CLASSES] == row


@pytest.mark.parametrize("n", range(9))
def test_row_orthogonality(n):
    lams = partitions(n)
    for lam in lams:
        for mu in lams:
            total = sum(class_size(a) * character(lam, a) * character(mu, a) for a in lams)
            assert total == math.factorial(n) * (lam == mu)


@pytest.mark.parametrize("n", range(9))
def test_dimension_squares(n):
    assert sum(dimension(lam) ** 2 for lam in partitions(n)) == math.factorial(n)


@given(st.integers(0, 8).flatmap(lambda n: st.tuples(st.sampled_from(partitions(n)), st.sampled_from(partitions(n)))))
def test_conjugate_twists_by_sign(pair):
    lam, alpha = pair
    sign = (-1) ** (alpha.size - len(alpha))
    assert character(lam.conjugate(), alpha) == sign * character(lam, alpha)
