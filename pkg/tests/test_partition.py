from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contentseries.partition import (
    EMPTY,
    Partition,
    add_cells,
    aut_size,
    class_size,
    contents,
    format_partition,
    is_rim_hook,
    lies_below,
    lies_right,
    parse_partition,
    partitions,
    phi,
    phi_star,
    remove_cells,
    rim_hooks_add,
    rim_hooks_remove,
)

P = Partition


@st.composite
def small_partitions(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    return draw(st.sampled_from(partitions(n)))


def test_canonical_storage():
    assert P((1, 3, 2)) == P((3, 2, 1))
    assert P((2, 0, 1)) == P((2, 1))
    assert P(()).size == 0
    with pytest.raises(ValueError):
        P((2, -1))


def test_parse_and_format_round_trip():
    assert parse_partition("5,3,3,1") == P((5, 3, 3, 1))
    assert parse_partition("-") == EMPTY
    assert format_partition(P((2, 1))) == "2,1"
    assert format_partition(EMPTY) == "-"
    with pytest.raises(ValueError):
        parse_partition("2,x")
    with pytest.raises(ValueError):
        parse_partition("2,0")


def test_partition_counts():
    assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_conjugate():
    assert P((5, 3, 3, 1)).conjugate() == P((4, 3, 3, 1, 1))
    assert EMPTY.conjugate() == EMPTY


@pytest.mark.parametrize(
    "lam, expected",
    [
        ((), []),
        ((2, 1), [0, 1, -1]),
        ((5, 3, 3, 1), [4, 3, 2, 1, 0, 1, 0, -1, 0, -1, -2, -3]),
    ],
)
def test_contents(lam, expected):
    assert Counter(contents(P(lam))) == Counter(expected)


def test_add_cells_examples():
    assert add_cells(EMPTY) == [(P((1,)), 0)]
    assert add_cells(P((1,))) == [(P((2,)), 1), (P((1, 1)), -1)]
    assert add_cells(P((2, 1))) == [(P((3, 1)), 2), (P((2, 2)), 0), (P((2, 1, 1)), -2)]


def test_remove_cells_examples():
    assert remove_cells(EMPTY) == []
    assert remove_cells(P((2,))) == [(P((1,)), 1)]
    assert sorted(remove_cells(P((2, 1))), key=lambda t: -t[1]) == [(P((1, 1)), 1), (P((2,)), -1)]


def test_rim_hook_examples():
    (hook,) = rim_hooks_remove(P((2, 1)), 3)
    assert hook.inner == EMPTY and hook.height == 1 and sorted(hook.contents) == [-1, 0, 1]
    (hook,) = rim_hooks_remove(P((2,)), 1)
    assert hook.inner == P((1,)) and list(hook.contents) == [1]
    assert rim_hooks_remove(P((1,)), 2) == []


def test_phi_worked_instances():
    lam = P((5, 3, 3, 1))
    assert phi(lam, 2) == (P((4, 3, 3, 3, 1)), 1)
    assert phi_star(lam, 1) == (P((6, 4, 1)), 2)


def test_phi_small_cases():
    # B_0 . 1 = h_0 = 1 and B_1 s_1 = s_11 (Jacobi-Trudi): the content-0 cell of
    # the empty diagram is addable, so it is both below and to the right.
    assert phi(EMPTY, 0) == (EMPTY, 0)
    assert phi(EMPTY, 1) == (P((1,)), 0)
    assert phi(P((1,)), 1) == (P((1, 1)), 0)
    assert phi_star(EMPTY, 0) == (EMPTY, 0)
    assert phi_star(P((1,)), 1) == (EMPTY, 0)
    assert phi(EMPTY, -1) is None


@pytest.mark.parametrize("alpha, aut, cls", [((2, 2, 1), 2, 15), ((1, 1, 1, 1), 24, 1), ((3,), 1, 2)])
def test_aut_and_class_size(alpha, aut, cls):
    assert aut_size(P(alpha)) == aut
    assert class_size(P(alpha)) == cls


@given(small_partitions())
def test_add_remove_inverse(lam):
    for mu, c in add_cells(lam):
        assert (lam, c) in remove_cells(mu)
    for mu, c in remove_cells(lam):
        assert (lam, c) in add_cells(mu)


@given(small_partitions())
def test_addable_count(lam):
    assert len(add_cells(lam)) == len(set(lam)) + 1


@given(small_partitions(), st.integers(1, 6))
def test_rim_hook_contents_decompose(lam, k):
    for hook in rim_hooks_remove(lam, k):
        assert Counter(contents(hook.outer)) == Counter(contents(hook.inner)) + Counter(hook.contents)
        assert sorted(hook.contents) == list(range(min(hook.contents), min(hook.contents) + k))
        assert is_rim_hook(hook.outer, hook.inner)
    for hook in rim_hooks_add(lam, k):
        assert hook.inner == lam and hook.outer.size == lam.size + k


@given(small_partitions(), st.integers(-10, 10))
def test_boundary_cell_classification(lam, c):
    below, right = lies_below(lam, c), lies_right(lam, c)
    assert (phi(lam, c) is not None) == below
    assert (phi_star(lam, c) is not None) == right
    addable = any(cc == c for _, cc in add_cells(lam))
    removable = any(cc == c for _, cc in remove_cells(lam))
    if addable:
        assert below and right
    elif removable:
        assert not below and not right
    else:
        assert below != right


@settings(max_examples=50)
@given(small_partitions(), st.integers(-10, 10))
def test_phi_moves_cells_along_boundary(lam, c):
    res = phi(lam, c)
    if res is not None:
        # B_c raises degree by c
        assert res[0].size == lam.size + c
    res = phi_star(lam, c)
    if res is not None:
        assert res[0].size == lam.size - c
