"""Brute-force symmetric-group oracles.

Permutations are tuples of images on ``{0, ..., n-1}``.  Products compose
right to left: ``compose(a, b)`` applies ``b`` first, so a factorization
``(pi_1, ..., pi_m)`` of ``sigma`` means ``pi_1 pi_2 ... pi_m = sigma`` with
``pi_m`` acting first.  Class totals do not depend on this choice; the
``left_to_right`` switches exist so tests can check that.

Every count is a class total: the per-element count for the canonical
representative (cycles of consecutive integers, longest first) times the
class size.

Enumeration guard
-----------------
Each oracle estimates its work before starting and raises
:class:`GuardExceeded` past ``max_states`` (default ``10**8``):

* transposition / monotone DP: ``n! * Bell(n) * m * C(n,2)`` (times ``n`` if monotone)
* tuple enumeration: ``(n!)^(m-1)``
* JM product expansion: ``n! * n * (M+1)``
* JM genus-stratified action: ``n^k``
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import permutations as _perms
from itertools import product as _product
from typing import Iterable, Optional, Sequence

from .partition import Partition, class_size, partitions
from .psalgebra import PPoly
from .series import UnivariateSeries, YPoly

Perm = tuple[int, ...]
DEFAULT_MAX_STATES = 10**8


class GuardExceeded(RuntimeError):
    def __init__(self, what: str, estimate: int, limit: int):
        super().__init__(f"{what}: estimated {estimate} states exceeds limit {limit}")
        self.estimate = estimate
        self.limit = limit


def _guard(what: str, estimate: int, limit: Optional[int]) -> None:
    limit = DEFAULT_MAX_STATES if limit is None else limit
    if estimate > limit:
        raise GuardExceeded(what, estimate, limit)


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """``a o b``: apply ``b`` first."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def product(factors: Sequence[Perm], n: int, left_to_right: bool = False) -> Perm:
    seq = reversed(factors) if left_to_right else factors
    return reduce(compose, seq, identity(n))


def transposition(n: int, s: int, t: int) -> Perm:
    """The transposition swapping the 1-based points ``s`` and ``t``."""
    img = list(range(n))
    img[s - 1], img[t - 1] = t - 1, s - 1
    return tuple(img)


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation of ``[n]`` from 1-based cycles."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a - 1] = b - 1
    return tuple(img)


def cycles(pi: Perm) -> list[list[int]]:
    seen = [False] * len(pi)
    out = []
    for start in range(len(pi)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = pi[x]
        out.append(cyc)
    return out


def cycle_type(pi: Perm) -> Partition:
    return Partition(len(c) for c in cycles(pi))


def canonical_representative(alpha: Partition) -> Perm:
    alpha = Partition(alpha)
    img = []
    start = 0
    for part in alpha:
        img.extend(start + (i + 1) % part for i in range(part))
        start += part
    return tuple(img)


def orbits(gens: Iterable[Perm], n: int) -> list[set[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(g):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    groups: dict[int, set[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), set()).add(x)
    return list(groups.values())


def is_transitive(factors: Sequence[Perm], target: Perm) -> bool:
    n = len(target)
    return n == 0 or len(orbits(list(factors) + [target], n)) == 1


def genus(factors: Sequence[Perm], target: Perm, left_to_right: bool = False) -> int:
    """Riemann-Hurwitz genus of a factorization of ``target``."""
    n = len(target)
    if product(factors, n, left_to_right) != target:
        raise ValueError("factors do not multiply to the target")
    total = n - len(cycle_type(target)) + sum(n - len(cycle_type(f)) for f in factors)
    twice = total - 2 * n + 2
    assert twice % 2 == 0, "Riemann-Hurwitz parity violated"
    return twice // 2


@lru_cache(maxsize=None)
def _bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _merge(labels: tuple[int, ...], s: int, t: int) -> tuple[int, ...]:
    a, b = labels[s], labels[t]
    if a == b:
        return labels
    lo, hi = min(a, b), max(a, b)
    return tuple(lo if x == hi else x for x in labels)


def _transposition_dp(
    alpha: Partition,
    m: int,
    transitive_only: bool,
    monotone: bool,
    left_to_right: bool,
    max_states: Optional[int],
) -> int:
    alpha = Partition(alpha)
    n = alpha.size
    pairs = [(s, t) for t in range(n) for s in range(t)]
    estimate = math.factorial(n) * _bell(n) * max(m, 1) * max(len(pairs), 1) * (n if monotone else 1)
    _guard("transposition factorizations", estimate, max_states)
    target = canonical_representative(alpha)
    swaps = {(s, t): transposition(n, s + 1, t + 1) for s, t in pairs}
    start_labels = tuple(range(n)) if transitive_only else ()
    # state: (partial product, component labels, largest t used so far)
    states: dict[tuple, int] = {(identity(n), start_labels, -1): 1}
    for _ in range(m):
        nxt: dict[tuple, int] = {}
        for (perm, labels, last), count in states.items():
            for s, t in pairs:
                if monotone and t < last:
                    continue
                tau = swaps[(s, t)]
                new_perm = compose(tau, perm) if left_to_right else compose(perm, tau)
                new_labels = _merge(labels, s, t) if transitive_only else labels
                key = (new_perm, new_labels, t if monotone else -1)
                nxt[key] = nxt.get(key, 0) + count
        states = nxt
    total = 0
    for (perm, labels, _last), count in states.items():
        if perm != target:
            continue
        if transitive_only and len(set(labels)) > 1:
            continue
        total += count
    if transitive_only and total and n:
        assert (m - n - len(alpha) + 2) % 2 == 0, "Riemann-Hurwitz parity violated"
    return total * class_size(alpha)


def count_transposition_factorizations(
    alpha: Partition,
    m: int,
    transitive_only: bool = True,
    *,
    max_states: Optional[int] = None,
    left_to_right: bool = False,
) -> int:
    """Number of ``m``-tuples of transpositions with product in the class ``alpha``.

    Exhaustive over all transposition sequences, aggregated by the state
    (partial product, orbit partition) so equal prefixes are not recounted.
    """
    return _transposition_dp(alpha, m, transitive_only, False, left_to_right, max_states)


def count_monotone_factorizations(
    alpha: Partition,
    m: int,
    transitive_only: bool = True,
    *,
    max_states: Optional[int] = None,
    left_to_right: bool = False,
) -> int:
    """As :func:`count_transposition_factorizations` with ``t_1 <= ... <= t_m``."""
    return _transposition_dp(alpha, m, transitive_only, True, left_to_right, max_states)


def _tuple_block(args) -> int:
    first, rest_count, all_perms, target, g, left_to_right = args
    n = len(target)
    hits = 0
    for rest in _product(all_perms, repeat=rest_count):
        head = (first,) + rest
        partial = product(head, n, left_to_right)
        # solve for the last factor so that the full product is the target
        last = compose(inverse(partial), target) if not left_to_right else compose(target, inverse(partial))
        factors = head + (last,)
        if not is_transitive(factors, target):
            continue
        if genus(factors, target, left_to_right) == g:
            hits += 1
    return hits


def count_tuple_factorizations(
    alpha: Partition,
    m: int,
    g: int,
    *,
    max_states: Optional[int] = None,
    threads: int = 1,
    left_to_right: bool = False,
) -> int:
    """Transitive ``m``-tuples of arbitrary permutations, product in ``alpha``, genus ``g``."""
    alpha = Partition(alpha)
    n = alpha.size
    if m < 1:
        raise ValueError("need at least one factor")
    _guard("tuple factorizations", math.factorial(n) ** (m - 1), max_states)
    target = canonical_representative(alpha)
    if m == 1:
        hits = int(is_transitive((target,), target) and genus((target,), target) == g)
        return hits * class_size(alpha)
    all_perms = list(_perms(range(n)))
    jobs = [(first, m - 2, all_perms, target, g, left_to_right) for first in all_perms]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            per_block = list(pool.map(_tuple_block, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        per_block = [_tuple_block(job) for job in jobs]
    return sum(per_block) * class_size(alpha)


def jm_product_expansion(
    f: UnivariateSeries, n: int, M: int, *, max_states: Optional[int] = None
) -> dict[Partition, YPoly]:
    """``[C_alpha] prod_{i<=n} f(y J_i)`` for every class, truncated at ``y^M``.

    Multiplying by ``J_t^i`` runs over the monotone blocks of ``i``
    transpositions ``(s t)``, so each monotone sequence contributes
    ``f_{i_1} ... f_{i_n} y^m`` exactly as in the factorization expansion.
    """
    _guard("JM product expansion", math.factorial(n) * max(n, 1) * (M + 1), max_states)
    element: dict[Perm, list[Fraction]] = {identity(n): [f.coeff(0)] + [Fraction(0)] * M}
    for t in range(1, n):
        swaps = [transposition(n, s + 1, t + 1) for s in range(t)]
        acc: dict[Perm, list[Fraction]] = {}

        def add(target: dict, perm: Perm, poly: list[Fraction], shift: int, scale: Fraction):
            row = target.setdefault(perm, [Fraction(0)] * (M + 1))
            for d, c in enumerate(poly[: M + 1 - shift]):
                if c:
                    row[d + shift] += c * scale

        current = element
        for perm, poly in current.items():
            add(acc, perm, poly, 0, f.coeff(0))
        for i in range(1, M + 1):
            nxt: dict[Perm, list[Fraction]] = {}
            for perm, poly in current.items():
                for tau in swaps:
                    add(nxt, compose(perm, tau), poly, 0, Fraction(1))
            current = nxt
            fi = f.coeff(i)
            if fi:
                for perm, poly in current.items():
                    add(acc, perm, poly, i, fi)
        element = acc
    out = {}
    for alpha in partitions(n):
        rep = canonical_representative(alpha)
        out[alpha] = YPoly(element.get(rep, []), M)
    return out


def jm_genus_stratified_action(
    k: int, beta: Partition, *, max_states: Optional[int] = None
) -> dict[int, PPoly]:
    """Bucket ``sum_{tau in J_M^k sigma'} p_cyc(tau)`` by the number of rejoins.

    ``sigma'`` is the canonical element of class ``beta`` with a fixed point
    ``M = n + 1`` appended.  Each stage multiplies on the left by ``(c_i M)``.
    A cycle cut off the M-cycle is *spare* and remembers its stage; joining
    a spare cycle back marks both stages.  The genus bucket is half the
    number of marked stages.
    """
    beta = Partition(beta)
    n = beta.size
    if k and not n:
        return {}
    _guard("JM genus-stratified action", n**k, max_states)
    size = n + 1
    top = n
    sigma = canonical_representative(beta) + (top,)
    buckets: dict[int, dict[Partition, int]] = {}
    for cs in _product(range(n), repeat=k):
        perm = sigma
        spare: dict[frozenset, int] = {}
        marks: set[int] = set()
        for stage, c in enumerate(cs, start=1):
            m_cycle = _cycle_of(perm, top)
            perm = compose(transposition(size, c + 1, top + 1), perm)
            if c in m_cycle:
                spare[frozenset(_cycle_of(perm, c))] = stage
            else:
                joined = next((cyc for cyc in spare if c in cyc), None)
                if joined is not None:
                    marks.update((spare.pop(joined), stage))
        h = len(marks) // 2
        shape = cycle_type(perm)
        bucket = buckets.setdefault(h, {})
        bucket[shape] = bucket.get(shape, 0) + 1
    return {h: PPoly(terms) for h, terms in sorted(buckets.items())}


def _cycle_of(perm: Perm, x: int) -> set[int]:
    out = {x}
    y = perm[x]
    while y != x:
        out.add(y)
        y = perm[y]
    return out
