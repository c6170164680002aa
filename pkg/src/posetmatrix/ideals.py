"""Order ideals and antichains of the Pascal poset, and its Boolean fixed points.

The Pascal poset on {0..n-1} orders labels by binary-support inclusion.
Subsets of the ground set are bitmasks throughout: bit i set means element
i is in the subset.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator

from .bmatrix import identity, iter_bits
from .pascal import check_index_vector, induced_submatrix, pascal_matrix

MAX_COUNT_GROUND = 32
MAX_SCAN_GROUND = 20
MAX_DEDEKIND_EXP = 5

_PARALLEL_MIN_GROUND = 13
_PARALLEL_SPLIT = 12


def _check_mask(mask: int, n: int) -> None:
    if not 0 <= mask < (1 << n):
        raise ValueError(f"subset mask {mask:#x} does not fit a ground set of size {n}")


def principal_ideal(i: int, n: int) -> int:
    """Mask of everything at or below i in the support order: the submasks of i."""
    if not 0 <= i < n:
        raise ValueError(f"element {i} outside a ground set of size {n}")
    mask = 0
    s = i
    while True:
        mask |= 1 << s
        if s == 0:
            return mask
        s = (s - 1) & i


def is_ideal(mask: int, n: int) -> bool:
    """True when mask is downward closed in the support order."""
    _check_mask(mask, n)
    for e in iter_bits(mask):
        if principal_ideal(e, n) & ~mask:
            return False
    return True


def is_antichain(mask: int, n: int) -> bool:
    """True when no element of mask has its support contained in another's."""
    _check_mask(mask, n)
    elements = list(iter_bits(mask))
    for pos, a in enumerate(elements):
        for b in elements[pos + 1 :]:
            if a & ~b == 0:
                return False
    return True


def antichain_to_ideal(mask: int, n: int) -> int:
    """Downward closure of mask: union of the principal ideals of its elements."""
    _check_mask(mask, n)
    out = 0
    for e in iter_bits(mask):
        out |= principal_ideal(e, n)
    return out


def ideal_to_antichain(mask: int, n: int) -> int:
    """Maximal elements of mask under the support order."""
    _check_mask(mask, n)
    out = 0
    for e in iter_bits(mask):
        maximal = True
        for other in iter_bits(mask ^ (1 << e)):
            if e & ~other == 0:
                maximal = False
                break
        if maximal:
            out |= 1 << e
    return out


@lru_cache(maxsize=None)
def _column_masks(n: int) -> tuple[int, ...]:
    """For each column j of the Pascal matrix, the mask of rows i with a 1 at (i, j)."""
    cols = [0] * n
    for i in range(n):
        s = i
        while True:
            cols[s] |= 1 << i
            if s == 0:
                break
            s = (s - 1) & i
    return tuple(cols)


def is_fixed_point(x: int, n: int) -> bool:
    """True when the characteristic row vector x satisfies x . P = x over the Boolean semiring.

    Coordinate j of x . P is the OR of x over the rows with a 1 in column j.
    """
    _check_mask(x, n)
    for j, col in enumerate(_column_masks(n)):
        if bool(x & col) != bool(x >> j & 1):
            return False
    return True


@lru_cache(maxsize=None)
def _pred_masks(n: int) -> tuple[int, ...]:
    """Proper predecessors of each element: its proper submasks."""
    return tuple(principal_ideal(i, n) ^ (1 << i) for i in range(n))


def _count_tail(preds: tuple[int, ...], i: int, chosen: int, n: int) -> int:
    """Ideals extending the decided prefix: element i joins only if its predecessors did."""
    if i == n:
        return 1
    total = _count_tail(preds, i + 1, chosen, n)
    if preds[i] & ~chosen == 0:
        total += _count_tail(preds, i + 1, chosen | (1 << i), n)
    return total


def _ideal_count_task(args: tuple[int, int, int]) -> int:
    n, start, chosen = args
    return _count_tail(_pred_masks(n), start, chosen, n)


def count_ideals(n: int, jobs: int = 1) -> int:
    """Number of downward-closed subsets of the size-n Pascal poset."""
    if not 0 <= n <= MAX_COUNT_GROUND:
        raise ValueError(f"ideal counting supports n in [0, {MAX_COUNT_GROUND}], got {n}")
    if jobs > 1 and n >= _PARALLEL_MIN_GROUND:
        # Every ideal restricted to the first elements is an ideal of the
        # smaller poset, so those restrictions partition the search space.
        tasks = [(n, _PARALLEL_SPLIT, chosen) for chosen in iter_ideals(_PARALLEL_SPLIT)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_ideal_count_task, tasks, chunksize=8))
    return _count_tail(_pred_masks(n), 0, 0, n)


def iter_ideals(n: int) -> Iterator[int]:
    """Yield every ideal of the size-n Pascal poset as a subset mask."""
    if not 0 <= n <= MAX_COUNT_GROUND:
        raise ValueError(f"ideal iteration supports n in [0, {MAX_COUNT_GROUND}], got {n}")
    preds = _pred_masks(n)

    def rec(i: int, chosen: int) -> Iterator[int]:
        if i == n:
            yield chosen
            return
        yield from rec(i + 1, chosen)
        if preds[i] & ~chosen == 0:
            yield from rec(i + 1, chosen | (1 << i))

    return rec(0, 0)


def count_fixed_points(n: int) -> int:
    """Count solutions of x . P = x by scanning all 2**n vectors.

    Deliberately the slow route: an independent cross-check on count_ideals,
    not a second copy of it.
    """
    if not 0 <= n <= MAX_SCAN_GROUND:
        raise ValueError(f"fixed-point scans support n in [0, {MAX_SCAN_GROUND}], got {n}")
    return sum(1 for x in range(1 << n) if is_fixed_point(x, n))


def dedekind(k: int) -> int:
    """k-th Dedekind number: antichains of the subset lattice = ideals of the size-2**k Pascal poset."""
    if not 0 <= k <= MAX_DEDEKIND_EXP:
        raise ValueError(f"dedekind supports k in [0, {MAX_DEDEKIND_EXP}], got {k}")
    return count_ideals(1 << k)


def identity_antichain_check(alpha, n: int) -> bool:
    """True when alpha's induced Pascal submatrix is an identity matrix.

    Equivalent to alpha's entries being pairwise incomparable in the support
    order (an antichain); the empty vector passes.
    """
    entries = check_index_vector(alpha, n)
    return induced_submatrix(pascal_matrix(n), entries) == identity(len(entries))


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def _mask_to_string(mask: int, n: int) -> str:
    return "".join("1" if mask >> j & 1 else "0" for j in range(n))


def antichain_table(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...], str]]:
    """(antichain, ideal, fixed-point string) for every ideal, by antichain size then entries."""
    rows = []
    for ideal_mask in iter_ideals(n):
        anti = ideal_to_antichain(ideal_mask, n)
        rows.append((_mask_to_tuple(anti), _mask_to_tuple(ideal_mask), _mask_to_string(ideal_mask, n)))
    rows.sort(key=lambda triple: (len(triple[0]), triple[0]))
    return rows
