import random

import pytest
from hypothesis import given, strategies as st

from posetmatrix.bmatrix import (
    BoolMatrix,
    NotSquareError,
    Permutation,
    bool_mul,
    flip_transpose,
    format_index_vector,
    identity,
    is_idempotent,
    iter_bits,
    parse_index_vector,
    permute_similar,
)


def naive_bool_mul(a, b):
    """Triple-loop (or, and) product; the reference the fast path is checked against."""
    n = a.n
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = int(any(a.entry(i, k) and b.entry(k, j) for k in range(n)))
    return BoolMatrix.from_lists(out)


def random_matrix(rng, n):
    return BoolMatrix(n, tuple(rng.randrange(1 << n) for _ in range(n)))


@st.composite
def bool_matrices(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    rows = tuple(draw(st.integers(min_value=0, max_value=(1 << n) - 1)) for _ in range(n))
    return BoolMatrix(n, rows)


@st.composite
def matrix_triples(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))

    def one():
        return BoolMatrix(n, tuple(draw(st.integers(min_value=0, max_value=(1 << n) - 1)) for _ in range(n)))

    return one(), one(), one()


@st.composite
def matrix_with_permutation(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    rows = tuple(draw(st.integers(min_value=0, max_value=(1 << n) - 1)) for _ in range(n))
    mapping = tuple(draw(st.permutations(list(range(n)))))
    return BoolMatrix(n, rows), Permutation(mapping)


# ---- construction and access ----


def test_entry_bit_layout():
    m = BoolMatrix(3, (1, 6, 4))
    assert m.to_lists() == [[1, 0, 0], [0, 1, 1], [0, 0, 1]]
    assert m.entry(1, 2) == 1
    assert m.entry(2, 0) == 0


def test_entry_out_of_range():
    m = identity(2)
    with pytest.raises(IndexError):
        m.entry(2, 0)
    with pytest.raises(IndexError):
        m.entry(0, -1)


def test_row_count_mismatch():
    with pytest.raises(NotSquareError):
        BoolMatrix(3, (1, 2))


def test_row_overflow():
    with pytest.raises(ValueError):
        BoolMatrix(2, (1, 4))


def test_side_bounds():
    with pytest.raises(ValueError):
        BoolMatrix(65, tuple([0] * 65))
    assert BoolMatrix(0, ()).rows == ()


def test_from_lists_ragged():
    with pytest.raises(NotSquareError):
        BoolMatrix.from_lists([[1, 0], [1]])


def test_matrix_equality_and_hash():
    assert BoolMatrix(2, (1, 3)) == BoolMatrix(2, (1, 3))
    assert len({BoolMatrix(2, (1, 3)), BoolMatrix(2, (1, 3)), BoolMatrix(2, (1, 2))}) == 2


# ---- text and json forms ----


def test_text_round_trip():
    m = BoolMatrix.from_text("100\n110\n101\n")
    assert m.rows == (1, 3, 5)
    assert m.to_text() == "100\n110\n101"
    assert BoolMatrix.from_text(m.to_text()) == m


def test_text_accepts_single_spaces():
    assert BoolMatrix.from_text("1 0\n1 1") == BoolMatrix.from_text("10\n11")


def test_text_rejects_bad_characters_and_ragged_rows():
    with pytest.raises(ValueError):
        BoolMatrix.from_text("10\n1x")
    with pytest.raises(NotSquareError):
        BoolMatrix.from_text("10\n110")


def test_empty_text_is_empty_matrix():
    assert BoolMatrix.from_text("") == BoolMatrix(0, ())


def test_json_round_trip():
    m = BoolMatrix(3, (1, 3, 5))
    obj = m.to_json_obj()
    assert obj == {"n": 3, "rows": ["100", "110", "101"]}
    assert BoolMatrix.from_json_obj(obj) == m


def test_json_bad_fields():
    with pytest.raises(ValueError):
        BoolMatrix.from_json_obj({"rows": ["1"]})
    with pytest.raises(NotSquareError):
        BoolMatrix.from_json_obj({"n": 2, "rows": ["10"]})
    with pytest.raises(NotSquareError):
        BoolMatrix.from_json_obj({"n": 1, "rows": [""]})


# ---- product ----


def test_bool_mul_example():
    a = BoolMatrix.from_lists([[1, 0], [1, 1]])
    assert bool_mul(a, a).to_lists() == [[1, 0], [1, 1]]
    b = BoolMatrix.from_lists([[0, 1], [1, 0]])
    assert bool_mul(a, b).to_lists() == [[0, 1], [1, 1]]


def test_bool_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        bool_mul(identity(2), identity(3))


def test_bool_mul_against_naive():
    rng = random.Random(1812)
    for _ in range(200):
        n = rng.randrange(9)
        a, b = random_matrix(rng, n), random_matrix(rng, n)
        assert bool_mul(a, b) == naive_bool_mul(a, b)


def test_identity_is_neutral():
    rng = random.Random(99)
    for n in range(9):
        m = random_matrix(rng, n)
        assert bool_mul(m, identity(n)) == m
        assert bool_mul(identity(n), m) == m


@given(matrix_triples())
def test_bool_mul_associative(triple):
    a, b, c = triple
    assert bool_mul(bool_mul(a, b), c) == bool_mul(a, bool_mul(b, c))


def test_is_idempotent():
    assert is_idempotent(identity(4))
    assert is_idempotent(BoolMatrix.from_lists([[1, 0, 0], [1, 1, 0], [1, 1, 1]]))
    # 0<1 and 1<2 without 0<2: squaring fills in the missing entry
    assert not is_idempotent(BoolMatrix.from_lists([[1, 0, 0], [1, 1, 0], [0, 1, 1]]))


# ---- permutation similarity ----


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_permutation_inverse():
    q = Permutation((2, 0, 1))
    assert q.inverse().mapping == (1, 2, 0)
    assert q(0) == 2


def test_permute_similar_example():
    # swap labels 0 and 2 of the chain 0<1<2
    a = BoolMatrix.from_lists([[1, 0, 0], [1, 1, 0], [1, 1, 1]])
    q = Permutation((2, 1, 0))
    assert permute_similar(a, q).to_lists() == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def test_permute_similar_entrywise():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randrange(1, 7)
        m = random_matrix(rng, n)
        mapping = list(range(n))
        rng.shuffle(mapping)
        q = Permutation(tuple(mapping))
        moved = permute_similar(m, q)
        for i in range(n):
            for j in range(n):
                assert moved.entry(q(i), q(j)) == m.entry(i, j)


@given(matrix_with_permutation())
def test_permute_similar_round_trip(pair):
    m, q = pair
    assert permute_similar(permute_similar(m, q), q.inverse()) == m


def test_permute_similar_size_mismatch():
    with pytest.raises(ValueError):
        permute_similar(identity(3), Permutation((1, 0)))


# ---- flip transpose ----


def test_flip_transpose_examples():
    a = BoolMatrix(4, (1, 3, 5, 13))
    assert flip_transpose(a) == BoolMatrix(4, (1, 3, 4, 15))
    assert flip_transpose(BoolMatrix(4, (1, 3, 4, 15))) == a


def test_flip_transpose_entrywise():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.randrange(8)
        m = random_matrix(rng, n)
        f = flip_transpose(m)
        for i in range(n):
            for j in range(n):
                assert f.entry(i, j) == m.entry(n - 1 - j, n - 1 - i)


@given(bool_matrices())
def test_flip_transpose_involution(m):
    assert flip_transpose(flip_transpose(m)) == m


# ---- small helpers ----


def test_iter_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []


def test_index_vector_text_forms():
    assert parse_index_vector("2,5,9,13") == (2, 5, 9, 13)
    assert parse_index_vector("") == ()
    assert parse_index_vector(" 7 ") == (7,)
    assert format_index_vector((2, 5, 9, 13)) == "2,5,9,13"
    assert format_index_vector(()) == ""
    with pytest.raises(ValueError):
        parse_index_vector("1,two")
