"""The stairstep bijection and the pair decomposition built on top of it.

A stairstep tiling of size m tiles rows of lengths m, m-1, ..., 1
independently with squares and dominos; there are F_2 * F_3 * ... * F_{m+1}
of them, which is F_{m+1}! since F_1 = 1.  :func:`forward` maps each
stairstep tiling of size n-1, for a chosen 1 <= k <= n-1, to a triple of

* a stairstep tiling of size k-1 (the bottom k-1 rows, taken verbatim),
* a stairstep tiling of size n-k-1, and
* a rectangle tiling of the (n-k) x k rectangle,

witnessing F_n! = fibonomial(n, k) * F_k! * F_{n-k}! bijectively.

Forward procedure.  The top n-k rows are scanned cyclically while a
comparison column c (starting at k) drifts left:

* if a domino covers cells c and c+1 of the current row, the path of the
  rectangle partition gains a leftward step, the domino and everything
  right of it is cut off to become the next complement-column tiling
  (domino first, so the column obeys the domino-initial rule), the row
  keeps its first c-1 cells, and c decreases by one;
* otherwise the path gains a downward step, cells 1..c of the row become
  the next partition-row tiling and the remaining cells become the next
  row of the size-(n-k-1) stairstep, consuming the row.

The cursor then moves to the next row below, skipping consumed rows and
wrapping from the last scanned row back to the topmost row that still has
cells.  When every cell has been placed, the path is completed to the
bottom-left corner of the rectangle; the completion steps carry empty rows
or columns only.  Comparisons at column 0 or beyond the end of a row count
as breakable, which makes the procedure total, including the degenerate
parameters k = 0 and k = n that the pair decomposition needs.

:func:`inverse` replays the scan: the event sequence is read off the
partition's boundary path (which determines which rows are cut and where),
so the cut segments, partition rows, and stairstep rows can be glued back
in place.  Shape-valid triples are always reachable; a NotInImageError
therefore signals an inconsistent triple or an implementation fault, never
a routine condition.

:func:`decompose_pair` splits a pair of stairstep tilings of sizes n-1 and
n-2 along the first row of the larger one, at the boundary between cells
k-1 and k, and applies :func:`forward` to both remainders.  Counting the
two cases of :func:`verify_pair_decomposition` realizes the identity

    F_n! * F_{n-1}! = F_k! F_{n-k}! F_{k-1}! F_{n-k+1}!
                      * [fib(n-1,k-1)^2 + fib(n-1,k) * fib(n-1,k-2)]

by exhaustion: the bracket is exactly the integer Narayana-style recurrence
value for (n, k).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .lucas import fib_factorial, fibonomial
from .tilings import (
    RectTiling,
    ShapeError,
    _domino_covers,
    covered_length,
    linear_tilings,
    split_after,
)


class NotInImageError(ValueError):
    """No stairstep tiling maps to the given triple."""


@dataclass(frozen=True)
class StairstepTiling:
    """Independent row tilings of rows of lengths size, size-1, ..., 1."""

    rows: tuple[str, ...]

    def __post_init__(self):
        size = len(self.rows)
        for index, row in enumerate(self.rows):
            expected = size - index
            if covered_length(row) != expected:
                raise ShapeError(
                    f"row {index + 1} covers {covered_length(row)} cells, expected {expected}"
                )

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_text(self) -> str:
        """Fixture format: one row per line, top row first."""
        return "\n".join(self.rows)

    @classmethod
    def from_text(cls, text: str) -> StairstepTiling:
        rows = tuple(line.strip() for line in text.splitlines() if line.strip())
        return cls(rows)

    def tile_counts(self) -> tuple[int, int]:
        """(squares, dominos) over all rows."""
        return sum(r.count("S") for r in self.rows), sum(r.count("D") for r in self.rows)


EMPTY_STAIRSTEP = StairstepTiling(())


def enumerate_stairstep_tilings(m: int) -> Iterator[StairstepTiling]:
    """All stairstep tilings of size m, each exactly once; F_{m+1}! of them."""
    if m < 0:
        raise ValueError("size must be nonnegative")
    choices = [tuple(linear_tilings(length)) for length in range(m, 0, -1)]
    for rows in itertools.product(*choices):
        yield StairstepTiling(rows)


@dataclass(frozen=True)
class TilingTriple:
    """Image of :func:`forward`: two smaller stairsteps plus a rectangle tiling."""

    small_stair: StairstepTiling  # size k-1 (empty when k <= 1)
    other_stair: StairstepTiling  # size n-k-1 (empty when k >= n-1)
    rect: RectTiling  # partition inside the (n-k) x k rectangle

    def tile_counts(self) -> tuple[int, int]:
        squares, dominos = self.small_stair.tile_counts()
        s2, d2 = self.other_stair.tile_counts()
        rows = self.rect.lambda_rows + self.rect.star_rows
        return (
            squares + s2 + sum(r.count("S") for r in rows),
            dominos + d2 + sum(r.count("D") for r in rows),
        )

    def to_json_dict(self) -> dict:
        return {
            "small_stair": list(self.small_stair.rows),
            "other_stair": list(self.other_stair.rows),
            "rect": self.rect.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> TilingTriple:
        try:
            return cls(
                StairstepTiling(tuple(str(r) for r in data["small_stair"])),
                StairstepTiling(tuple(str(r) for r in data["other_stair"])),
                RectTiling.from_json_dict(data["rect"]),
            )
        except KeyError as exc:
            raise ValueError(f"malformed triple JSON: missing {exc}") from exc


def forward(t: StairstepTiling, k: int) -> TilingTriple:
    """Map a stairstep tiling of size n-1 to its triple, n = t.size + 1."""
    n = t.size + 1
    if not 0 <= k <= n:
        raise ShapeError(f"need 0 <= k <= {n} for a stairstep of size {n - 1}")
    small_count = max(k - 1, 0)
    scan_count = (n - 1) - small_count
    small_stair = StairstepTiling(t.rows[scan_count:])
    rect_height = n - k

    remaining = list(t.rows[:scan_count])
    lengths = [covered_length(row) for row in remaining]
    consumed = [False] * scan_count
    alive = scan_count

    c = k
    lam_parts: list[int] = []
    lam_rows: list[str] = []
    star_cols: list[str] = []
    stair_rows: list[str] = []
    cursor = 0
    while alive:
        while consumed[cursor % scan_count]:
            cursor += 1
        r = cursor % scan_count
        if _domino_covers(remaining[r], c):
            left, segment = split_after(remaining[r], c - 1)
            star_cols.append(segment)
            remaining[r] = left
            lengths[r] = c - 1
            if lengths[r] == 0:
                consumed[r] = True
                alive -= 1
            c -= 1
        else:
            if c > lengths[r]:
                raise RuntimeError("comparison column drifted past the end of a row")
            left, right = split_after(remaining[r], c)
            lam_parts.append(c)
            lam_rows.append(left)
            stair_rows.append(right)
            consumed[r] = True
            alive -= 1
        cursor += 1

    # Complete the path to the bottom-left corner: one of the two remainders
    # is always zero, otherwise cells would have been left unplaced.
    missing_down = rect_height - len(lam_parts)
    if missing_down and c:
        raise RuntimeError("scan ended with both path directions unfinished")
    lam_parts.extend([0] * missing_down)
    lam_rows.extend([""] * missing_down)
    star_cols.extend([""] * c)

    try:
        other_stair = StairstepTiling(tuple(row for row in stair_rows if row))
        rect = RectTiling(tuple(lam_parts), tuple(lam_rows), tuple(star_cols))
    except ShapeError as exc:
        raise RuntimeError(f"scan produced an inconsistent triple: {exc}") from exc
    if other_stair.size != max(rect_height - 1, 0):
        raise RuntimeError("scan produced a stairstep of the wrong size")
    return TilingTriple(small_stair, other_stair, rect)


def _path_from_partition(lam: tuple[int, ...], width: int) -> list[str]:
    # Boundary path from the top-right to the bottom-left corner of the
    # rectangle: "L" for leftward, "D" for downward steps.
    steps: list[str] = []
    x = width
    for part in lam:
        steps.extend("L" * (x - part))
        steps.append("D")
        x = part
    steps.extend("L" * x)
    return steps


def inverse(triple: TilingTriple, n: int, k: int) -> StairstepTiling:
    """The unique stairstep tiling T with forward(T, k) == triple."""
    if not 0 <= k <= n:
        raise ShapeError(f"need 0 <= k <= {n}")
    rect = triple.rect
    rect_height = n - k
    width = k
    if len(rect.lam) != rect_height or len(rect.star_rows) != width:
        raise ShapeError(
            f"rectangle tiling is {len(rect.lam)} x {len(rect.star_rows)}, "
            f"expected {rect_height} x {width}"
        )
    if triple.small_stair.size != max(k - 1, 0):
        raise ShapeError(f"small stairstep has size {triple.small_stair.size}, expected {max(k - 1, 0)}")
    if triple.other_stair.size != max(rect_height - 1, 0):
        raise ShapeError(
            f"other stairstep has size {triple.other_stair.size}, expected {max(rect_height - 1, 0)}"
        )

    path = _path_from_partition(rect.lam, width)
    if path and path[-1] == "D":
        events = path[:-1]
    else:
        cut = len(path)
        while cut and path[cut - 1] == "L":
            cut -= 1
        events = path[:cut]

    scan_count = (n - 1) - max(k - 1, 0)
    if events and scan_count == 0:
        raise NotInImageError("path has events but there are no rows to scan")
    lengths = [n - 1 - i for i in range(scan_count)]
    consumed = [False] * scan_count
    alive = scan_count
    segments: list[list[str]] = [[] for _ in range(scan_count)]
    left_parts: list[str] = [""] * scan_count

    c = k
    cursor = 0
    next_lam = 0
    next_star = 0
    next_other = 0
    for step in events:
        if not alive:
            raise NotInImageError("path demands more events than the rows supply")
        while consumed[cursor % scan_count]:
            cursor += 1
        r = cursor % scan_count
        if step == "L":
            if c < 1:
                raise NotInImageError("leftward step with the comparison column exhausted")
            segment = rect.star_rows[next_star]
            next_star += 1
            if covered_length(segment) != lengths[r] - c + 1 or not segment.startswith("D"):
                raise NotInImageError("complement column does not fit the replayed cut")
            segments[r].append(segment)
            lengths[r] = c - 1
            if lengths[r] == 0:
                consumed[r] = True
                alive -= 1
            c -= 1
        else:
            lam_row = rect.lambda_rows[next_lam]
            if rect.lam[next_lam] != c:
                raise NotInImageError("partition part does not match the replayed column")
            next_lam += 1
            stair_length = lengths[r] - c
            if stair_length < 0:
                raise NotInImageError("partition row longer than the remaining cells")
            if stair_length > 0:
                if next_other >= len(triple.other_stair.rows):
                    raise NotInImageError("stairstep rows exhausted during replay")
                stair_row = triple.other_stair.rows[next_other]
                next_other += 1
                if covered_length(stair_row) != stair_length:
                    raise NotInImageError("stairstep row does not fit the replayed split")
            else:
                stair_row = ""
            left_parts[r] = lam_row + stair_row
            consumed[r] = True
            alive -= 1
        cursor += 1

    if alive:
        raise NotInImageError("replay finished with rows still unplaced")
    for index in range(next_lam, rect_height):
        if rect.lam[index] != 0 or rect.lambda_rows[index] != "":
            raise NotInImageError("trailing partition rows must be empty")
    for index in range(next_star, width):
        if rect.star_rows[index] != "":
            raise NotInImageError("trailing complement columns must be empty")
    if next_other != len(triple.other_stair.rows):
        raise NotInImageError("unused stairstep rows remain")

    rows = tuple(
        left_parts[r] + "".join(reversed(segments[r])) for r in range(scan_count)
    ) + triple.small_stair.rows
    try:
        return StairstepTiling(rows)
    except ShapeError as exc:
        raise NotInImageError(f"reassembled rows have inconsistent lengths: {exc}") from exc


def verify_cardinality(n: int, k: int) -> dict:
    """Exhaustively check F_n! = fibonomial(n,k) * F_k! * F_{n-k}! via forward.

    Returns a report with both side counts plus injectivity and surjectivity
    flags.  Surjectivity uses the count argument: images are shape-valid by
    construction, so hitting the full product count means hitting every
    triple.
    """
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    image = set()
    total = 0
    for tiling in enumerate_stairstep_tilings(n - 1):
        image.add(forward(tiling, k))
        total += 1
    if total != fib_factorial(n):
        raise RuntimeError("stairstep enumeration does not match F_n!")
    rhs = fibonomial(n, k) * fib_factorial(k) * fib_factorial(n - k)
    injective = len(image) == total
    surjective = len(image) == rhs
    return {
        "n": n,
        "k": k,
        "lhs": str(total),
        "rhs": str(rhs),
        "injective": injective,
        "surjective": surjective,
        "pass": injective and surjective and total == rhs,
    }


@dataclass(frozen=True)
class PairDecomposition:
    """Outcome of :func:`decompose_pair` for one pair of stairstep tilings."""

    case_tag: str  # "no_domino" or "domino"
    first_row_parts: tuple[str, str]
    triple_1: TilingTriple
    triple_2: TilingTriple


def decompose_pair(t1: StairstepTiling, t2: StairstepTiling, k: int) -> PairDecomposition:
    """Split (T1 of size n-1, T2 of size n-2) along T1's first row at k-1|k.

    With no domino across cells k-1 and k of the first row, the row splits
    into pieces of lengths k-1 and n-k and both remainders map forward with
    column parameter k-1.  With a domino there, the flanking pieces have
    lengths k-2 and n-k-1, T1's remainder maps forward with parameter k-2,
    and T2 with parameter k.
    """
    n = t1.size + 1
    if t2.size != n - 2:
        raise ShapeError(f"second tiling has size {t2.size}, expected {n - 2}")
    if not 1 <= k <= n - 1:
        raise ShapeError(f"need 1 <= k <= {n - 1}")
    first = t1.rows[0]
    rest = StairstepTiling(t1.rows[1:])
    if _domino_covers(first, k - 1):
        left, tail = split_after(first, k - 2)
        return PairDecomposition(
            "domino", (left, tail[1:]), forward(rest, k - 2), forward(t2, k)
        )
    left, right = split_after(first, k - 1)
    return PairDecomposition(
        "no_domino", (left, right), forward(rest, k - 1), forward(t2, k - 1)
    )


def recompose_pair(dec: PairDecomposition, n: int, k: int) -> tuple[StairstepTiling, StairstepTiling]:
    """Invert :func:`decompose_pair`; documents that the splitting loses nothing."""
    left, right = dec.first_row_parts
    if dec.case_tag == "domino":
        first = left + "D" + right
        rest = inverse(dec.triple_1, n - 1, k - 2)
        t2 = inverse(dec.triple_2, n - 1, k)
    else:
        first = left + right
        rest = inverse(dec.triple_1, n - 1, k - 1)
        t2 = inverse(dec.triple_2, n - 1, k - 1)
    return StairstepTiling((first,) + rest.rows), t2


def verify_pair_decomposition(n: int, k: int) -> dict:
    """Exhaustively verify the pair-decomposition counting identity at (n, k).

    Checks that decompose_pair is injective over all F_n! * F_{n-1}! pairs
    and that the per-case image sizes match
    F_k! F_{n-k}! F_{k-1}! F_{n-k+1}! * fib(n-1,k-1)^2   (no domino) and
    F_k! F_{n-k}! F_{k-1}! F_{n-k+1}! * fib(n-1,k) * fib(n-1,k-2)  (domino).
    """
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    seconds = list(enumerate_stairstep_tilings(n - 2))
    seen: set[PairDecomposition] = set()
    counts = {"no_domino": 0, "domino": 0}
    total = 0
    for t1 in enumerate_stairstep_tilings(n - 1):
        for t2 in seconds:
            dec = decompose_pair(t1, t2, k)
            seen.add(dec)
            counts[dec.case_tag] += 1
            total += 1
    prefactor = (
        fib_factorial(k) * fib_factorial(n - k) * fib_factorial(k - 1) * fib_factorial(n - k + 1)
    )
    bracket = fibonomial(n - 1, k - 1) ** 2 + fibonomial(n - 1, k) * fibonomial(n - 1, k - 2)
    expected = {
        "no_domino": prefactor * fibonomial(n - 1, k - 1) ** 2,
        "domino": prefactor * fibonomial(n - 1, k) * fibonomial(n - 1, k - 2),
    }
    lhs = fib_factorial(n) * fib_factorial(n - 1)
    injective = len(seen) == total
    cases_match = counts == expected
    ok = injective and total == lhs and cases_match and lhs == prefactor * bracket
    return {
        "n": n,
        "k": k,
        "lhs": str(lhs),
        "rhs": str(prefactor * bracket),
        "no_domino": str(counts["no_domino"]),
        "domino": str(counts["domino"]),
        "injective": injective,
        "surjective": cases_match,
        "pass": ok,
    }
