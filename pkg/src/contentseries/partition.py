"""Integer partitions, diagram geometry and boundary moves.

Cells are addressed as ``(row, col)`` with both indices starting at 1; the
content of a cell is ``col - row``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Optional


class Partition(tuple):
    """An integer partition stored as a weakly decreasing tuple of parts.

    Parts given in any order are sorted; zero parts are dropped.  Being a
    tuple, partitions hash and compare lexicographically on their parts.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, sorted((p for p in parts if p), reverse=True))

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator["Cell"]:
        for i, part in enumerate(self, start=1):
            for j in range(1, part + 1):
                yield Cell(i, j)

    def remove_part(self, part: int) -> "Partition":
        parts = list(self)
        parts.remove(part)
        return Partition(parts)

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(list(self) + list(other))


EMPTY = Partition()


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class RimHook:
    outer: Partition
    inner: Partition
    length: int
    height: int
    contents: tuple[int, ...]

    @property
    def content_sum(self) -> int:
        return sum(self.contents)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,3,1"``; ``"-"`` or an empty string is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return EMPTY
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {text!r}")
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(map(str, lam)) if lam else "-"


@lru_cache(maxsize=None)
def partitions(n: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions(k)


def contents(lam: Partition) -> list[int]:
    return [c.content for c in lam.cells()]


def add_cells(lam: Partition) -> list[tuple[Partition, int]]:
    """Partitions obtained by adding one cell, top row first, with its content."""
    out = []
    rows = list(lam) + [0]
    for i, part in enumerate(rows):
        if i == 0 or rows[i - 1] > part:
            new = rows.copy()
            new[i] += 1
            out.append((Partition(new), part + 1 - (i + 1)))
    return out


def remove_cells(lam: Partition) -> list[tuple[Partition, int]]:
    """Partitions obtained by deleting one corner cell, with its content."""
    out = []
    rows = list(lam)
    for i, part in enumerate(rows):
        if i == len(rows) - 1 or rows[i + 1] < part:
            new = rows.copy()
            new[i] -= 1
            out.append((Partition(new), part - (i + 1)))
    return out


def _beta_set(lam: Partition, length: int) -> list[int]:
    padded = list(lam) + [0] * (length - len(lam))
    return [padded[i] + (length - 1 - i) for i in range(length)]


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    return Partition(beta[i] - (L - 1 - i) for i in range(L))


def rim_hooks_remove(lam: Partition, k: int) -> list[RimHook]:
    """All rim hooks of length ``k`` that can be removed from ``lam``.

    Works on the beta-set of ``lam``: a removable ``k``-hook is a bead that can
    slide ``k`` places down onto an empty position.
    """
    if k < 1:
        raise ValueError("hook length must be positive")
    L = len(lam) + k
    beta = _beta_set(lam, L)
    occupied = set(beta)
    cells = set(lam.cells())
    hooks = []
    for b in beta:
        if b - k < 0 or (b - k) in occupied:
            continue
        inner = _from_beta([x if x != b else b - k for x in beta])
        skew = cells - set(inner.cells())
        rows = {c.row for c in skew}
        hooks.append(
            RimHook(
                outer=lam,
                inner=inner,
                length=k,
                height=len(rows) - 1,
                contents=tuple(sorted(c.content for c in skew)),
            )
        )
    return hooks


def rim_hooks_add(lam: Partition, k: int, max_rows: Optional[int] = None) -> list[RimHook]:
    """All rim hooks of length ``k`` that can be added to ``lam``."""
    if k < 1:
        raise ValueError("hook length must be positive")
    L = len(lam) + k
    beta = _beta_set(lam, L)
    occupied = set(beta)
    cells = set(lam.cells())
    hooks = []
    for b in beta:
        if (b + k) in occupied:
            continue
        outer = _from_beta([x if x != b else b + k for x in beta])
        skew = set(outer.cells()) - cells
        rows = {c.row for c in skew}
        hooks.append(
            RimHook(
                outer=outer,
                inner=lam,
                length=k,
                height=len(rows) - 1,
                contents=tuple(sorted(c.content for c in skew)),
            )
        )
    return hooks


def is_rim_hook(outer: Partition, inner: Partition) -> bool:
    """Edge-connected skew shape with no 2x2 block."""
    if len(inner) > len(outer) or any(
        i > o for i, o in zip(inner, outer)
    ):
        return False
    skew = set(outer.cells()) - set(inner.cells())
    if not skew:
        return False
    for c in skew:
        if {Cell(c.row + 1, c.col), Cell(c.row, c.col + 1), Cell(c.row + 1, c.col + 1)} <= skew:
            return False
    seen = {next(iter(skew))}
    stack = list(seen)
    while stack:
        c = stack.pop()
        for d in (Cell(c.row + 1, c.col), Cell(c.row - 1, c.col),
                  Cell(c.row, c.col + 1), Cell(c.row, c.col - 1)):
            if d in skew and d not in seen:
                seen.add(d)
                stack.append(d)
    return seen == skew


# Boundary moves.  Rows past the last part are treated as empty rows whose
# "last cell" sits in column 0 (content -i); columns past the first part are
# empty columns whose "last cell" sits in row 0 (content j).

def _row_end(lam: Partition, i: int) -> int:
    return (lam[i - 1] if i <= len(lam) else 0) - i


def _col_end(conj: Partition, j: int) -> int:
    return j - (conj[j - 1] if j <= len(conj) else 0)


def lies_below(lam: Partition, c: int) -> bool:
    """Whether the outer-boundary cell of content ``c`` sits under a column end."""
    conj = lam.conjugate()
    top = max(len(conj), c + 1) + 1
    return any(_col_end(conj, j) - 1 == c for j in range(1, top + 1))


def lies_right(lam: Partition, c: int) -> bool:
    """Whether the outer-boundary cell of content ``c`` sits after a row end."""
    top = max(len(lam), -c + 1) + 1
    return any(_row_end(lam, i) + 1 == c for i in range(1, top + 1))


def _reshape(lam: Partition, removed: set, added: set) -> Partition:
    cells = (set(lam.cells()) - removed) | added
    cols = Counter(cell.col for cell in cells)
    lengths = [cols[j] for j in range(1, max(cols, default=0) + 1)]
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        raise AssertionError(f"boundary move left a non-partition: {sorted(cells)}")
    return Partition(lengths).conjugate()


def phi(lam: Partition, c: int) -> Optional[tuple[Partition, int]]:
    """``(phi_c lam, r_c(lam))`` or ``None`` when the content-``c`` cell is not below."""
    if not lies_below(lam, c):
        return None
    conj = lam.conjugate()
    removed = {Cell(i, lam[i - 1]) for i in range(1, len(lam) + 1) if _row_end(lam, i) > c}
    ncols = max(len(conj), c) + 1
    added = {
        Cell((conj[j - 1] if j <= len(conj) else 0) + 1, j)
        for j in range(1, ncols + 1)
        if _col_end(conj, j) <= c
    }
    return _reshape(lam, removed, added), len(removed)


def phi_star(lam: Partition, c: int) -> Optional[tuple[Partition, int]]:
    """``(phi*_c lam, r*_c(lam))`` or ``None`` when the content-``c`` cell is not right."""
    if not lies_right(lam, c):
        return None
    conj = lam.conjugate()
    nrows = max(len(lam), -c) + 1
    added = {
        Cell(i, (lam[i - 1] if i <= len(lam) else 0) + 1)
        for i in range(1, nrows + 1)
        if _row_end(lam, i) >= c
    }
    removed = {Cell(conj[j - 1], j) for j in range(1, len(conj) + 1) if _col_end(conj, j) < c}
    return _reshape(lam, removed, added), len(added)


def aut_size(alpha: Partition) -> int:
    return prod(factorial(m) for m in alpha.multiplicities().values())


def z_weight(alpha: Partition) -> int:
    """``prod i^{m_i} m_i!``, the centralizer order of a permutation of type ``alpha``."""
    return prod(i**m * factorial(m) for i, m in alpha.multiplicities().items())


def class_size(alpha: Partition) -> int:
    return factorial(alpha.size) // z_weight(alpha)


def hook_length_dimension(lam: Partition) -> int:
    conj = lam.conjugate()
    hooks = prod(lam[c.row - 1] - c.col + conj[c.col - 1] - c.row + 1 for c in lam.cells())
    return factorial(lam.size) // hooks
