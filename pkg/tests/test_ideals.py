import itertools

import pytest

from posetmatrix.bmatrix import identity, iter_bits
from posetmatrix.ideals import (
    antichain_table,
    antichain_to_ideal,
    count_fixed_points,
    count_ideals,
    dedekind,
    ideal_to_antichain,
    identity_antichain_check,
    is_antichain,
    is_fixed_point,
    is_ideal,
    iter_ideals,
    principal_ideal,
)
from posetmatrix.pascal import pascal_matrix

IDEAL_COUNTS = [1, 2, 3, 5, 6, 11, 14, 19, 20, 39]

TABLE_FIVE_ELEMENTS = [
    ((), (), "00000"),
    ((0,), (0,), "10000"),
    ((1,), (0, 1), "11000"),
    ((2,), (0, 2), "10100"),
    ((3,), (0, 1, 2, 3), "11110"),
    ((4,), (0, 4), "10001"),
    ((1, 2), (0, 1, 2), "11100"),
    ((1, 4), (0, 1, 4), "11001"),
    ((2, 4), (0, 2, 4), "10101"),
    ((3, 4), (0, 1, 2, 3, 4), "11111"),
    ((1, 2, 4), (0, 1, 2, 4), "11101"),
]


def naive_leq(a, b):
    return a & ~b == 0


def naive_ideals(n):
    """All downward-closed subsets by scanning the full powerset."""
    out = []
    for mask in range(1 << n):
        elements = [e for e in range(n) if mask >> e & 1]
        if all(naive_leq(d, e) <= (mask >> d & 1 == 1) for e in elements for d in range(n)):
            out.append(mask)
    return out


# ---- principal ideals and closures ----


def test_principal_ideal_examples():
    assert principal_ideal(0, 5) == 0b00001
    assert principal_ideal(3, 5) == 0b01111
    assert principal_ideal(4, 5) == 0b10001
    assert principal_ideal(2, 5) == 0b00101


def test_principal_ideal_is_pascal_row():
    for n in (1, 5, 16, 32):
        p = pascal_matrix(n)
        for i in range(n):
            assert principal_ideal(i, n) == p.rows[i]


def test_principal_ideal_bounds():
    with pytest.raises(ValueError):
        principal_ideal(5, 5)
    with pytest.raises(ValueError):
        principal_ideal(-1, 5)


def test_antichain_to_ideal_table():
    for anti, ideal, _ in TABLE_FIVE_ELEMENTS:
        mask = sum(1 << e for e in anti)
        expected = sum(1 << e for e in ideal)
        assert antichain_to_ideal(mask, 5) == expected


def test_ideal_to_antichain_table():
    for anti, ideal, _ in TABLE_FIVE_ELEMENTS:
        mask = sum(1 << e for e in ideal)
        expected = sum(1 << e for e in anti)
        assert ideal_to_antichain(mask, 5) == expected


def test_antichain_ideal_bijection():
    for n in range(9):
        for ideal in iter_ideals(n):
            anti = ideal_to_antichain(ideal, n)
            assert is_antichain(anti, n)
            assert antichain_to_ideal(anti, n) == ideal
        antichains = [m for m in range(1 << n) if is_antichain(m, n)]
        ideals = set(iter_ideals(n))
        assert len(antichains) == len(ideals)
        assert {antichain_to_ideal(a, n) for a in antichains} == ideals


def test_is_ideal_against_naive():
    for n in range(9):
        naive = set(naive_ideals(n))
        assert {m for m in range(1 << n) if is_ideal(m, n)} == naive
        assert set(iter_ideals(n)) == naive


def test_mask_bounds_checked():
    with pytest.raises(ValueError):
        is_ideal(1 << 5, 5)
    with pytest.raises(ValueError):
        antichain_to_ideal(-1, 5)


# ---- fixed points ----


def test_is_fixed_point_matches_vector_matrix_product():
    for n in range(9):
        p = pascal_matrix(n)
        for x in range(1 << n):
            product = 0
            for j in range(n):
                if any(x >> i & 1 and p.entry(i, j) for i in range(n)):
                    product |= 1 << j
            assert is_fixed_point(x, n) == (product == x)


def test_fixed_points_are_exactly_ideals():
    for n in range(11):
        assert {x for x in range(1 << n) if is_fixed_point(x, n)} == set(iter_ideals(n))


def test_count_fixed_points_agrees_with_count_ideals():
    for n in range(13):
        assert count_fixed_points(n) == count_ideals(n)


def test_count_fixed_points_bounds():
    with pytest.raises(ValueError):
        count_fixed_points(21)


# ---- counting ----


def test_ideal_count_table():
    assert [count_ideals(n) for n in range(10)] == IDEAL_COUNTS


def test_ideal_count_more_values():
    # 15 (support {0,1,2,3}) tops the 16-element poset, so it adds one ideal
    assert count_ideals(15) == 167
    assert count_ideals(16) == 168
    # independent scan route for sizes past the main table
    for n in (15, 17):
        assert count_ideals(n) == count_fixed_points(n)


def test_ideal_count_parallel_matches_serial():
    for n in (13, 16):
        assert count_ideals(n, jobs=2) == count_ideals(n)


def test_ideal_count_bounds():
    with pytest.raises(ValueError):
        count_ideals(33)
    with pytest.raises(ValueError):
        count_ideals(-1)


def test_dedekind_values():
    assert [dedekind(k) for k in range(5)] == [2, 3, 6, 20, 168]


def test_dedekind_bounds():
    with pytest.raises(ValueError):
        dedekind(6)


def test_dedekind_matches_powerset_antichains():
    # antichains of the subset lattice on k generators, counted from scratch
    for k in range(4):
        subsets = list(range(1 << k))
        count = 0
        for picks in itertools.product((0, 1), repeat=len(subsets)):
            chosen = [s for s, p in zip(subsets, picks) if p]
            if all(
                not (a != b and a & ~b == 0)
                for a in chosen
                for b in chosen
            ):
                count += 1
        assert dedekind(k) == count


# ---- antichain table and identity check ----


def test_antichain_table_five_elements():
    assert antichain_table(5) == TABLE_FIVE_ELEMENTS


def test_antichain_table_sorted_by_size_then_entries():
    table = antichain_table(7)
    keys = [(len(a), a) for a, _, _ in table]
    assert keys == sorted(keys)
    assert len(table) == count_ideals(7)


def test_identity_antichain_check():
    assert identity_antichain_check((), 5)
    assert identity_antichain_check((1, 2, 4), 5)
    assert identity_antichain_check((7, 11, 13, 14), 16)
    assert not identity_antichain_check((1, 3), 5)
    with pytest.raises(ValueError):
        identity_antichain_check((3, 1), 5)


def test_antichain_scan_totals_match_ideal_counts():
    # summing identity-realizing vectors over all lengths recounts the ideals
    for n in range(11):
        total = 0
        for k in range(n + 1):
            for alpha in itertools.combinations(range(n), k):
                if identity_antichain_check(alpha, n):
                    total += 1
        assert total == count_ideals(n)


def test_identity_antichain_check_agrees_with_is_antichain():
    for n in range(9):
        for mask in range(1 << n):
            alpha = tuple(iter_bits(mask))
            assert identity_antichain_check(alpha, n) == is_antichain(mask, n)
