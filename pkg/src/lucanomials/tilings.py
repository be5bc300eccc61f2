"""Partitions in a rectangle, square/domino row tilings, and weight sums.

A row tiling is a string over {"S", "D"}: S covers one cell, D covers two
adjacent cells.  A partition with k parts, each at most m (zeros explicit),
sits inside a k x m rectangle; the lengths of the columns of its complement,
read right to left so they come out weakly decreasing, form a second
partition with m parts.

A :class:`RectTiling` combines a partition in a rectangle with a linear
tiling of each partition row and a tiling of each complement column that
must begin with a domino when the column is nonempty.  Its weight is the
monomial s^(#squares) * t^(#dominos).  Summing weights over all rectangle
tilings of a k x (n-k) rectangle produces the lucanomial {n choose k};
:func:`lucanomial_tiling_oracle` computes that sum as a route entirely
independent of the recurrence in :mod:`lucanomials.lucas`, using per-row
generating polynomials maintained by their own recurrence (the product of
row polynomials equals the weight sum over the cross product of row
tilings, which the test suite checks by full enumeration at small sizes).

All enumeration orders are deterministic: partitions stream in
lexicographically descending order, and row tilings stream square-first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import polys
from .polys import ONE, Poly, ZERO

SQUARE = "S"
DOMINO = "D"
_TILE_LEN = {SQUARE: 1, DOMINO: 2}


class ShapeError(ValueError):
    """A partition, tiling, or board does not have the required shape."""


def covered_length(tiling: str) -> int:
    """Number of cells covered by a row tiling string."""
    total = 0
    for ch in tiling:
        if ch not in _TILE_LEN:
            raise ShapeError(f"invalid tile {ch!r}; expected 'S' or 'D'")
        total += _TILE_LEN[ch]
    return total


def is_breakable(tiling: str, i: int) -> bool:
    """True iff no single domino covers cells i and i+1 (1-indexed)."""
    length = covered_length(tiling)
    if not 1 <= i < length:
        raise IndexError(f"position {i} out of range for a row of length {length}")
    return not _domino_covers(tiling, i)


def _domino_covers(tiling: str, i: int) -> bool:
    # Does a domino cover cells i and i+1?  False for i < 1 or off the end.
    if i < 1:
        return False
    cum = 0
    for ch in tiling:
        if cum >= i:
            break
        if ch == DOMINO and cum == i - 1:
            return True
        cum += _TILE_LEN[ch]
    return False


def split_after(tiling: str, i: int) -> tuple[str, str]:
    """Split a row tiling between cells i and i+1.

    Returns the pieces covering cells 1..i and i+1..end.  Raises ShapeError
    when a domino spans the cut or i is outside 0..covered_length.
    """
    if i < 0:
        raise ShapeError(f"cannot split before cell 1 (i={i})")
    cum = 0
    for index, ch in enumerate(tiling):
        if cum == i:
            return tiling[:index], tiling[index:]
        cum += _TILE_LEN[ch]
        if cum > i:
            raise ShapeError(f"a domino spans the cut at position {i}")
    if cum == i:
        return tiling, ""
    raise ShapeError(f"cannot split after cell {i} of a row of length {cum}")


@lru_cache(maxsize=None)
def _linear_tilings(length: int) -> tuple[str, ...]:
    if length == 0:
        return ("",)
    if length == 1:
        return (SQUARE,)
    return tuple(SQUARE + rest for rest in _linear_tilings(length - 1)) + tuple(
        DOMINO + rest for rest in _linear_tilings(length - 2)
    )


def linear_tilings(length: int) -> Iterator[str]:
    """All square/domino tilings of a strip; there are F_{length+1} of them."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    yield from _linear_tilings(length)


def domino_initial_tilings(length: int) -> Iterator[str]:
    """Tilings whose first tile is a domino (plus the empty tiling at length 0).

    There are F_{length-1} of them for length >= 1; in particular none for
    length 1.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        yield ""
    elif length >= 2:
        for rest in _linear_tilings(length - 2):
            yield DOMINO + rest


_row_polys: list[Poly] = [ONE, polys.S]


def row_weight_poly(length: int, domino_initial: bool = False) -> Poly:
    """Sum of s^(#squares) * t^(#dominos) over one row's admissible tilings."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    if domino_initial:
        if length == 0:
            return ONE
        if length == 1:
            return ZERO
        return polys.T * row_weight_poly(length - 2)
    while len(_row_polys) <= length:
        _row_polys.append(polys.S * _row_polys[-1] + polys.T * _row_polys[-2])
    return _row_polys[length]


def partitions_in_rectangle(k: int, m: int) -> Iterator[tuple[int, ...]]:
    """Partitions with k parts, each at most m, in lexicographic descending order."""
    if k < 0 or m < 0:
        raise ValueError("rectangle dimensions must be nonnegative")

    def rec(remaining: int, bound: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(bound, -1, -1):
            yield from rec(remaining - 1, part, prefix + (part,))

    yield from rec(k, m, ())


def star(lam: tuple[int, ...], k: int, m: int) -> tuple[int, ...]:
    """Column lengths of the complement of lam in the k x m rectangle.

    Columns are read right to left so the result is weakly decreasing; it
    has m parts with zeros explicit.
    """
    if len(lam) != k:
        raise ShapeError(f"expected {k} parts, got {len(lam)}")
    previous = m
    for part in lam:
        if not isinstance(part, int) or part < 0 or part > m:
            raise ShapeError(f"part {part} does not fit in width {m}")
        if part > previous:
            raise ShapeError("parts must be weakly decreasing")
        previous = part
    return tuple(sum(1 for part in lam if part < column) for column in range(m, 0, -1))


@dataclass(frozen=True)
class RectTiling:
    """A partition in a rectangle with tiled rows and tiled complement columns.

    ``lam`` has one entry per rectangle row (zeros explicit), ``lambda_rows``
    tiles each part, and ``star_rows`` tiles each complement column; every
    nonempty complement column begins with a domino.  The rectangle is
    len(lam) x len(star_rows).
    """

    lam: tuple[int, ...]
    lambda_rows: tuple[str, ...]
    star_rows: tuple[str, ...]

    def __post_init__(self):
        k = len(self.lam)
        m = len(self.star_rows)
        star_parts = star(self.lam, k, m)
        if len(self.lambda_rows) != k:
            raise ShapeError(f"expected {k} row tilings, got {len(self.lambda_rows)}")
        for part, row in zip(self.lam, self.lambda_rows):
            if covered_length(row) != part:
                raise ShapeError(f"row tiling {row!r} does not cover {part} cells")
        for part, row in zip(star_parts, self.star_rows):
            if covered_length(row) != part:
                raise ShapeError(f"column tiling {row!r} does not cover {part} cells")
            if part > 0 and not row.startswith(DOMINO):
                raise ShapeError(f"nonempty column tiling {row!r} must begin with a domino")

    @property
    def star_parts(self) -> tuple[int, ...]:
        return star(self.lam, len(self.lam), len(self.star_rows))

    def weight(self) -> Poly:
        """Monomial s^(#squares) * t^(#dominos) over all rows and columns."""
        squares = dominos = 0
        for row in self.lambda_rows + self.star_rows:
            squares += row.count(SQUARE)
            dominos += row.count(DOMINO)
        return Poly({(squares, dominos): 1})

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "lambda_rows": list(self.lambda_rows),
            "star_rows": list(self.star_rows),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> RectTiling:
        try:
            return cls(
                tuple(int(p) for p in data["lambda"]),
                tuple(str(r) for r in data["lambda_rows"]),
                tuple(str(r) for r in data["star_rows"]),
            )
        except KeyError as exc:
            raise ValueError(f"malformed rectangle tiling JSON: missing {exc}") from exc


def enumerate_rect_tilings(n: int, k: int) -> Iterator[RectTiling]:
    """All rectangle tilings for the k x (n-k) rectangle, each exactly once.

    At s = t = 1 the number of tilings equals fibonomial(n, k).
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    m = n - k
    for lam in partitions_in_rectangle(k, m):
        star_parts = star(lam, k, m)
        row_choices = [_linear_tilings(part) for part in lam]
        column_choices = [tuple(domino_initial_tilings(part)) for part in star_parts]
        for rows in itertools.product(*row_choices):
            for columns in itertools.product(*column_choices):
                yield RectTiling(lam, rows, columns)


def lucanomial_tiling_oracle(n: int, k: int) -> Poly:
    """Weight sum over all rectangle tilings of the k x (n-k) rectangle.

    Computed per partition as a product of per-row generating polynomials;
    must equal lucanomial(n, k).
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    m = n - k
    total = ZERO
    for lam in partitions_in_rectangle(k, m):
        term = ONE
        for part in lam:
            term = term * row_weight_poly(part)
        for part in star(lam, k, m):
            term = term * row_weight_poly(part, domino_initial=True)
        total = total + term
    return total
