"""Row-domination structure of incidence matrices and the orbit search it generates.

An index vector alpha with n entries below 2**n becomes an n x n Boolean
matrix whose row i is the binary expansion of alpha[i].  Row/column
permutations, and single-entry flips that leave every pairwise row
domination as it was, rewrite that matrix without leaving the isomorphism
class of the poset the vector selects from the Pascal matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bmatrix import BoolMatrix, Permutation, iter_bits
from .pascal import check_index_vector
from .posetcore import PosetMatrix, validate

DEFAULT_ORBIT_BUDGET = 10**6


class NotChangeableError(ValueError):
    """Requested flip would create or break a row domination."""

    def __init__(self, i: int, j: int):
        self.position = (i, j)
        super().__init__(f"entry ({i}, {j}) is not changeable")


def incidence_matrix(alpha: Sequence[int], n: int) -> BoolMatrix:
    """n x n matrix whose row i is the binary expansion of alpha[i]."""
    entries = tuple(int(a) for a in alpha)
    if len(entries) != n:
        raise ValueError(f"need exactly {n} entries, got {len(entries)}")
    limit = 1 << n
    for a in entries:
        if not 0 <= a < limit:
            raise ValueError(f"entry {a} does not fit in {n} binary digits")
    return BoolMatrix(n, entries)


def index_of(m: BoolMatrix) -> tuple[int, ...]:
    """Row values of m in increasing order: the vector that regenerates m up to row order."""
    values = sorted(m.rows)
    for a, b in zip(values, values[1:]):
        if a == b:
            raise ValueError(f"duplicate row value {a}: rows do not form an index vector")
    return tuple(values)


def _profile(rows: Sequence[int]) -> set[tuple[int, int]]:
    """All ordered pairs (i, j), i != j, with row i entrywise at most row j."""
    pairs = set()
    for i, ri in enumerate(rows):
        for j, rj in enumerate(rows):
            if i != j and ri & ~rj == 0:
                pairs.add((i, j))
    return pairs


def domination_relations(m: BoolMatrix) -> frozenset[tuple[int, int]]:
    """Ordered pairs (i, j), i != j, where row i is dominated by row j."""
    return frozenset(_profile(m.rows))


def _row_pairs_match(rows: Sequence[int], i: int, base: set[tuple[int, int]]) -> bool:
    """Pairs involving row i agree with base (only row i may have changed)."""
    ri = rows[i]
    for k, rk in enumerate(rows):
        if k == i:
            continue
        if (ri & ~rk == 0) != ((i, k) in base):
            return False
        if (rk & ~ri == 0) != ((k, i) in base):
            return False
    return True


def changeable_entries(m: BoolMatrix) -> frozenset[tuple[int, int]]:
    """Positions whose single flip leaves every pairwise row domination intact.

    Each position is judged on its own against the unflipped matrix; flips
    are not composed.
    """
    rows = list(m.rows)
    base = _profile(rows)
    out = set()
    for i in range(m.n):
        original = rows[i]
        for j in range(m.n):
            rows[i] = original ^ (1 << j)
            if _row_pairs_match(rows, i, base):
                out.add((i, j))
        rows[i] = original
    return frozenset(out)


def flip_entry(m: BoolMatrix, i: int, j: int) -> BoolMatrix:
    """Toggle entry (i, j), refusing flips that would alter the domination profile."""
    if not (0 <= i < m.n and 0 <= j < m.n):
        raise ValueError(f"entry ({i}, {j}) outside a {m.n}x{m.n} matrix")
    base = _profile(m.rows)
    rows = list(m.rows)
    rows[i] ^= 1 << j
    if not _row_pairs_match(rows, i, base):
        raise NotChangeableError(i, j)
    return BoolMatrix(m.n, tuple(rows))


def permute(m: BoolMatrix, row_perm: Permutation, col_perm: Permutation) -> BoolMatrix:
    """Permute rows and columns independently; entry (i, j) moves to (row_perm(i), col_perm(j))."""
    if row_perm.n != m.n or col_perm.n != m.n:
        raise ValueError("permutation sizes must match the matrix side")
    rows = [0] * m.n
    for i, row in enumerate(m.rows):
        moved = 0
        for j in iter_bits(row):
            moved |= 1 << col_perm.mapping[j]
        rows[row_perm.mapping[i]] = moved
    return BoolMatrix(m.n, tuple(rows))


def reduce_to_poset_matrix(m: BoolMatrix) -> PosetMatrix:
    """Collapse an incidence matrix with increasing rows to the poset of its row dominations.

    Entry (i, j) of the result records whether row j is dominated by row i;
    with strictly increasing rows that order is already compatible with the
    row numbering, so the result is a valid poset matrix.
    """
    rows = m.rows
    for a, b in zip(rows, rows[1:]):
        if a >= b:
            raise ValueError("rows not in increasing integer order; permute rows first")
    out = []
    for ri in rows:
        picked = 0
        for j, rj in enumerate(rows):
            if rj & ~ri == 0:
                picked |= 1 << j
        out.append(picked)
    return validate(BoolMatrix(m.n, tuple(out)))


@dataclass(frozen=True)
class OrbitResult:
    """Outcome of the breadth-first orbit walk."""

    alpha: tuple[int, ...]
    n: int
    members: tuple[tuple[int, ...], ...]
    exhausted: bool
    states_visited: int

    def to_json_obj(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "n": self.n,
            "members": [list(m) for m in self.members],
            "exhausted": self.exhausted,
            "states_visited": self.states_visited,
        }


def _orbit_moves(state: tuple[int, ...], n: int) -> Iterable[tuple[int, ...]]:
    """Sorted successor states: all column transpositions, then all single changeable flips."""
    rows = list(state)
    moves = []
    for c1 in range(n):
        b1 = 1 << c1
        for c2 in range(c1 + 1, n):
            b2 = 1 << c2
            swapped = []
            for r in rows:
                moved = r & ~(b1 | b2)
                if r & b1:
                    moved |= b2
                if r & b2:
                    moved |= b1
                swapped.append(moved)
            moves.append(tuple(sorted(swapped)))
    base = _profile(rows)
    for i in range(n):
        original = rows[i]
        for j in range(n):
            rows[i] = original ^ (1 << j)
            if _row_pairs_match(rows, i, base):
                moves.append(tuple(sorted(rows)))
        rows[i] = original
    return moves


def domination_orbit(alpha: Sequence[int], n: int, budget: int = DEFAULT_ORBIT_BUDGET) -> OrbitResult:
    """Breadth-first closure of alpha under column swaps and changeable flips.

    States are sorted row-value tuples: row permutations are absorbed by the
    normalization, and transpositions generate every column permutation over
    a few steps.  Expands at most `budget` states; when the budget runs out
    the result carries exhausted=False and whatever was reached so far.
    """
    entries = check_index_vector(alpha, 1 << n)
    if len(entries) != n:
        raise ValueError(f"need exactly {n} entries, got {len(entries)}")
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    seen = {entries}
    queue = deque([entries])
    expanded = 0
    exhausted = True
    while queue:
        if expanded >= budget:
            exhausted = False
            break
        state = queue.popleft()
        expanded += 1
        for nxt in _orbit_moves(state, n):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return OrbitResult(entries, n, tuple(sorted(seen)), exhausted, expanded)
