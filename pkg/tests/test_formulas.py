from fractions import Fraction

import pytest

from contentseries import factorizations as fz
from contentseries.formulas import (
    CountResult,
    closed_form,
    hurwitz_genus0,
    mhypermap_genus0,
    monotone_hurwitz_genus0,
)
from contentseries.partition import Partition, partitions

P = Partition


@pytest.mark.parametrize("alpha, raw", [((3,), 6), ((1, 1), 1), ((2, 1), 24)])
def test_hurwitz_examples(alpha, raw):
    assert hurwitz_genus0(alpha).raw_count == raw


def test_hurwitz_coefficient_uses_negative_power():
    res = hurwitz_genus0((3,))
    assert res.series_coeff == Fraction(1, 9) * Fraction(27, 6)
    assert res == CountResult(P((3,)), 0, "hurwitz", Fraction(1, 2), 6)


@pytest.mark.parametrize("alpha, raw", [((1,), 1), ((2,), 1), ((3,), 4)])
def test_monotone_examples(alpha, raw):
    assert monotone_hurwitz_genus0(alpha).raw_count == raw


@pytest.mark.parametrize("m, alpha, raw", [(2, (3,), 10), (2, (2,), 2), (2, (1,), 1)])
def test_hypermap_examples(m, alpha, raw):
    assert mhypermap_genus0(m, alpha).raw_count == raw


def test_hypermap_single_factor():
    for n in range(1, 6):
        for alpha in partitions(n):
            assert mhypermap_genus0(1, alpha).raw_count == fz.count_tuple_factorizations(alpha, 1, 0)


def test_errors():
    with pytest.raises(ValueError):
        hurwitz_genus0(())
    with pytest.raises(ValueError):
        mhypermap_genus0(0, (2,))
    with pytest.raises(ValueError):
        closed_form("other", (2,))


def test_as_row():
    row = hurwitz_genus0((2, 1)).as_row()
    assert row == {"partition": [2, 1], "genus": 0, "kind": "hurwitz", "num": "2", "den": "3", "raw_count": "24"}


@pytest.mark.parametrize("n", range(1, 6))
def test_against_transposition_oracles(n):
    for alpha in partitions(n):
        m = n + len(alpha) - 2
        assert hurwitz_genus0(alpha).raw_count == fz.count_transposition_factorizations(alpha, m)
        assert monotone_hurwitz_genus0(alpha).raw_count == fz.count_monotone_factorizations(alpha, m)


@pytest.mark.parametrize("m", [2, 3])
def test_against_tuple_oracle(m):
    for n in range(1, 5):
        for alpha in partitions(n):
            assert mhypermap_genus0(m, alpha).raw_count == fz.count_tuple_factorizations(alpha, m, 0)
