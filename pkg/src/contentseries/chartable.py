"""Irreducible characters of the symmetric groups (Murnaghan-Nakayama)."""
from __future__ import annotations

from functools import lru_cache

from .partition import Partition, hook_length_dimension, partitions, rim_hooks_remove


def character(lam: Partition, alpha: Partition) -> int:
    """The value of the irreducible character indexed by ``lam`` on class ``alpha``."""
    lam, alpha = Partition(lam), Partition(alpha)
    if lam.size != alpha.size:
        raise ValueError(f"size mismatch: |{lam}| != |{alpha}|")
    return _mn(lam, alpha)


# lru_cache is safe under concurrent lookups; a racing miss just recomputes
# the same deterministic value.
@lru_cache(maxsize=None)
def _mn(lam: Partition, alpha: Partition) -> int:
    if not alpha:
        return 1
    k = alpha[0]
    rest = Partition(alpha[1:])
    return sum(
        (-1) ** hook.height * _mn(hook.inner, rest) for hook in rim_hooks_remove(lam, k)
    )


@lru_cache(maxsize=None)
def dimension(lam: Partition) -> int:
    lam = Partition(lam)
    d = character(lam, Partition([1] * lam.size))
    assert d == hook_length_dimension(lam), lam
    return d


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    return {(lam, alpha): character(lam, alpha) for lam in partitions(n) for alpha in partitions(n)}
