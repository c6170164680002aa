"""Boolean matrix kernel: storage, semiring product, permutation similarity.

Matrices are square, at most 64x64, and immutable.  Row i is stored as an
integer bitmask whose bit j holds the entry in row i, column j, so the
Boolean product reduces to OR-accumulating rows of the right factor over
the set bits of each row of the left one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_SIDE = 64


class NotSquareError(ValueError):
    """Matrix input whose row count and row lengths disagree."""


def iter_bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BoolMatrix:
    """Immutable square Boolean matrix; ``rows[i] >> j & 1`` is entry (i, j)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_SIDE:
            raise ValueError(f"matrix side must be in [0, {MAX_SIDE}], got {self.n}")
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.n:
            raise NotSquareError(f"expected {self.n} rows, got {len(self.rows)}")
        top = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if not 0 <= row <= top:
                raise ValueError(f"row {i} does not fit in {self.n} columns")

    def entry(self, i: int, j: int) -> int:
        """Entry (i, j) as 0 or 1."""
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"entry ({i}, {j}) outside a {self.n}x{self.n} matrix")
        return self.rows[i] >> j & 1

    # ---- conversions ----------------------------------------------------

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BoolMatrix":
        """Build from a sequence of rows, each a sequence of 0/1 entries."""
        n = len(entries)
        rows = []
        for vals in entries:
            if len(vals) != n:
                raise NotSquareError(f"{n} rows but a row of length {len(vals)}")
            rows.append(sum(1 << j for j, v in enumerate(vals) if v))
        return cls(n, tuple(rows))

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    @classmethod
    def from_text(cls, text: str) -> "BoolMatrix":
        """Parse the one-line-per-row text form; single spaces between digits are tolerated."""
        lines = [line.strip().replace(" ", "") for line in text.splitlines()]
        lines = [line for line in lines if line]
        n = len(lines)
        rows = []
        for line in lines:
            if len(line) != n:
                raise NotSquareError(f"{n} rows but a row of {len(line)} characters")
            if set(line) - {"0", "1"}:
                raise ValueError(f"matrix rows may only contain 0 and 1: {line!r}")
            rows.append(sum(1 << j for j, ch in enumerate(line) if ch == "1"))
        return cls(n, tuple(rows))

    def row_string(self, i: int) -> str:
        return "".join("1" if self.rows[i] >> j & 1 else "0" for j in range(self.n))

    def to_text(self) -> str:
        return "\n".join(self.row_string(i) for i in range(self.n))

    @classmethod
    def from_json_obj(cls, obj) -> "BoolMatrix":
        """Build from the JSON object form {"n": ..., "rows": ["010...", ...]}."""
        try:
            n = obj["n"]
            row_strings = obj["rows"]
        except (TypeError, KeyError) as exc:
            raise ValueError("matrix JSON needs the fields 'n' and 'rows'") from exc
        if not isinstance(n, int) or not isinstance(row_strings, list) or len(row_strings) != n:
            raise NotSquareError("field 'n' disagrees with the number of rows")
        m = cls.from_text("\n".join(str(s) for s in row_strings))
        if m.n != n:
            raise NotSquareError("field 'n' disagrees with the row lengths")
        return m

    def to_json_obj(self) -> dict:
        return {"n": self.n, "rows": [self.row_string(i) for i in range(self.n)]}


def identity(n: int) -> BoolMatrix:
    """The n x n identity matrix."""
    return BoolMatrix(n, tuple(1 << i for i in range(n)))


def bool_mul(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Boolean matrix product of a and b over the (or, and) semiring."""
    if a.n != b.n:
        raise ValueError(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    rows = []
    for row in a.rows:
        acc = 0
        for k in iter_bits(row):
            acc |= b.rows[k]
        rows.append(acc)
    return BoolMatrix(a.n, tuple(rows))


def is_idempotent(a: BoolMatrix) -> bool:
    """True when a.a = a over the Boolean semiring."""
    return bool_mul(a, a) == a


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0, ..., n-1}; ``mapping[i]`` is the image of i."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError(f"not a bijection on 0..{len(self.mapping) - 1}: {self.mapping}")

    @property
    def n(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, image in enumerate(self.mapping):
            inv[image] = i
        return Permutation(tuple(inv))


def permute_similar(a: BoolMatrix, q: Permutation) -> BoolMatrix:
    """Conjugate a by q: entry (q(i), q(j)) of the result is entry (i, j) of a."""
    if q.n != a.n:
        raise ValueError(f"permutation on {q.n} points cannot act on a {a.n}x{a.n} matrix")
    rows = [0] * a.n
    for i, row in enumerate(a.rows):
        moved = 0
        for j in iter_bits(row):
            moved |= 1 << q.mapping[j]
        rows[q.mapping[i]] = moved
    return BoolMatrix(a.n, tuple(rows))


def flip_transpose(a: BoolMatrix) -> BoolMatrix:
    """Reflect across the anti-diagonal: entry (i, j) of the result is entry (n-1-j, n-1-i) of a."""
    n = a.n
    rows = [0] * n
    for i in range(n):
        for j in iter_bits(a.rows[i]):
            rows[n - 1 - j] |= 1 << (n - 1 - i)
    return BoolMatrix(n, tuple(rows))


def parse_index_vector(text: str) -> tuple[int, ...]:
    """Parse the comma-separated vector form, e.g. "2,5,9,13"; empty input is the empty vector."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad index vector: {text!r}") from exc


def format_index_vector(alpha: Iterable[int]) -> str:
    return ",".join(str(a) for a in alpha)
