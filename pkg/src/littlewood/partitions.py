"""Integer partitions, Frobenius symbols and diagonal stacking.

Partitions are the universal currency of this package: they index Schur
polynomials, ideals of noncompact roots, nodes of block posets and the
summation ranges of every identity we verify.  Everything here is exact
integer arithmetic on tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  Ordering comparisons use the graded order
    of the enumeration helpers (first by size, then lexicographically by
    parts), not plain tuple order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        items = [int(p) for p in parts]
        for a, b in zip(items, items[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {items}")
        if items and items[-1] < 0:
            raise ValueError(f"parts must be nonnegative, got {items}")
        while items and items[-1] == 0:
            items.pop()
        return super().__new__(cls, items)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    # -- basic statistics ---------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def rank(self) -> int:
        """Length of the main diagonal of the Young diagram."""
        return sum(1 for i, part in enumerate(self) if part >= i + 1)

    @property
    def num_rows(self) -> int:
        return len(self)

    @property
    def num_cols(self) -> int:
        return self[0] if self else 0

    def sort_key(self) -> tuple:
        return (self.size, tuple(self))

    def __lt__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __le__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key() > other.sort_key()

    def __ge__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key() >= other.sort_key()

    # -- diagram operations --------------------------------------------------

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self:
            return Partition()
        cols = [0] * self[0]
        for part in self:
            for j in range(part):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams, row by row."""
        other = Partition(other)
        if len(other) > len(self):
            return False
        return all(mine >= theirs for mine, theirs in zip(self, other))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes ``(i, j)`` of the diagram, 1-indexed, row-major."""
        for i, part in enumerate(self, start=1):
            for j in range(1, part + 1):
                yield (i, j)

    def hooks(self) -> dict[tuple[int, int], int]:
        """Hook length of every box: arm + leg + 1."""
        conj = self.conjugate()
        return {
            (i, j): (self[i - 1] - j) + (conj[j - 1] - i) + 1
            for (i, j) in self.boxes()
        }

    def contents(self) -> dict[tuple[int, int], int]:
        """Content ``j - i`` of every box."""
        return {(i, j): j - i for (i, j) in self.boxes()}

    # -- Frobenius coordinates -----------------------------------------------

    def frobenius(self) -> "FrobeniusSymbol":
        """Arm/leg lengths along the main diagonal."""
        r = self.rank
        conj = self.conjugate()
        arms = tuple(self[i] - (i + 1) for i in range(r))
        legs = tuple(conj[i] - (i + 1) for i in range(r))
        return FrobeniusSymbol(arms, legs)

    def is_form_alpha_plus_m(self, m: int) -> bool:
        """True when every diagonal arm exceeds its leg by exactly ``m``."""
        fs = self.frobenius()
        return all(a == b + m for a, b in zip(fs.arms, fs.legs))


@dataclass(frozen=True)
class FrobeniusSymbol:
    """The ``(arms | legs)`` encoding of a partition along its diagonal."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        arms = tuple(int(a) for a in self.arms)
        legs = tuple(int(b) for b in self.legs)
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "legs", legs)
        if len(arms) != len(legs):
            raise ValueError("arms and legs must have the same length")
        for seq, name in ((arms, "arms"), (legs, "legs")):
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} must be strictly decreasing, got {seq}")
            if seq and seq[-1] < 0:
                raise ValueError(f"{name} must be nonnegative, got {seq}")

    @property
    def rank(self) -> int:
        return len(self.arms)

    @property
    def size(self) -> int:
        return sum(self.arms) + sum(self.legs) + self.rank

    def to_partition(self) -> Partition:
        r = self.rank
        if r == 0:
            return Partition()
        parts = [self.arms[i] + i + 1 for i in range(r)]
        total_rows = self.legs[0] + 1
        for i in range(r + 1, total_rows + 1):
            parts.append(sum(1 for j in range(r) if self.legs[j] + j + 1 >= i))
        return Partition(parts)

    def shifted(self, arm_shift: int = 0, leg_shift: int = 0) -> "FrobeniusSymbol":
        """Add a constant to every arm and/or leg."""
        return FrobeniusSymbol(
            tuple(a + arm_shift for a in self.arms),
            tuple(b + leg_shift for b in self.legs),
        )

    def __str__(self) -> str:
        arms = ",".join(str(a) for a in self.arms)
        legs = ",".join(str(b) for b in self.legs)
        return f"({arms}|{legs})"


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """Partition with the given diagonal arm and leg lengths."""
    return FrobeniusSymbol(tuple(arms), tuple(legs)).to_partition()


# ---------------------------------------------------------------------------
# Shape families
# ---------------------------------------------------------------------------
#
# Every enumeration below returns a list sorted in the same deterministic
# order: ascending by size, then lexicographically ascending by part tuples.
# CLI output, JSON exports and test expectations all rely on this order.


def _graded(shapes: Iterable[Partition]) -> list[Partition]:
    return sorted(shapes, key=Partition.sort_key)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    if rows < 0 or cols < 0:
        raise ValueError("box dimensions must be nonnegative")

    def gen(max_part: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if rows_left == 0:
            return
        for first in range(1, max_part + 1):
            for rest in gen(first, rows_left - 1):
                yield (first,) + rest

    return _graded(Partition(t) for t in gen(cols, rows))


def strict_partitions_max(max_part: int) -> list[tuple[int, ...]]:
    """Strictly decreasing tuples of positive integers, parts at most ``max_part``.

    These are the row-length vectors of shifted diagrams; there are
    ``2**max_part`` of them (one per subset of ``{1, ..., max_part}``).
    """
    if max_part < 0:
        raise ValueError("max_part must be nonnegative")
    shapes = []
    for r in range(max_part + 1):
        for combo in combinations(range(max_part, 0, -1), r):
            shapes.append(tuple(combo))
    return sorted(shapes, key=lambda t: (sum(t), t))


def asc_partitions(n: int, m: int) -> list[Partition]:
    """Partitions of the form ``(alpha + m | alpha)`` with ``alpha[0] < n``.

    ``alpha`` runs over strictly decreasing tuples of nonnegative integers
    (including the empty tuple, giving the empty partition).  ``m = 1`` gives
    the almost self-conjugate partitions, ``m = 0`` the self-conjugate ones.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    shapes = []
    for r in range(n + 1):
        for alpha in combinations(range(n - 1, -1, -1), r):
            shapes.append(from_frobenius(tuple(a + m for a in alpha), alpha))
    return _graded(shapes)


def even_row_partitions(n: int, w: int) -> list[Partition]:
    """Partitions in the ``n x w`` box with every row length even."""
    return [p for p in partitions_in_box(n, w) if all(part % 2 == 0 for part in p)]


def even_column_partitions(n: int, w: int) -> list[Partition]:
    """Partitions in the ``n x w`` box with every column length even."""
    return [
        p
        for p in partitions_in_box(n, w)
        if all(col % 2 == 1 for col in p.conjugate()) is False
        and all(col % 2 == 0 for col in p.conjugate())
    ]


def odd_column_partitions(n: int, w: int) -> list[Partition]:
    """Partitions with at most ``n`` rows and exactly ``w`` columns, all odd.

    Exactly ``w`` columns means the first row has length ``w``; the empty
    partition qualifies only for ``w = 0``.  This is the branching-rule
    range, which is why the count of columns is pinned rather than bounded.
    """
    return [
        p
        for p in partitions_in_box(n, w)
        if p.num_cols == w and all(col % 2 == 1 for col in p.conjugate())
    ]


_FAMILIES = {
    "par_box": partitions_in_box,
    "asc": asc_partitions,
    "even_rows": even_row_partitions,
    "even_cols": even_column_partitions,
    "odd_cols": odd_column_partitions,
    "strict": strict_partitions_max,
}


def enumerate_shapes(family: str, *args: int, **kwargs: int) -> list:
    """Dispatch to a shape-family enumerator by name.

    Known families: ``par_box(rows, cols)``, ``asc(n, m)``,
    ``even_rows(n, w)``, ``even_cols(n, w)``, ``odd_cols(n, w)``,
    ``strict(max_part)``.
    """
    try:
        fn = _FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unknown shape family {family!r}; expected one of {sorted(_FAMILIES)}"
        ) from None
    return fn(*args, **kwargs)


# ---------------------------------------------------------------------------
# Stacking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StackedShape:
    """An ideal shape stacked with its reflection across the diagonal.

    Type I stacks the conjugate upside down on top of the shape itself (two
    "wings"); Types II and III glue the shape to its conjugate along the
    diagonal, yielding a partition of the form ``(a | a - 1)`` respectively
    its transpose.
    """

    kind: str
    neg_wing: Partition | None = None
    pos_wing: Partition | None = None
    shape: Partition | None = None

    def signed_row_lengths(self, rows: int, cols: int) -> tuple[int, ...]:
        """Type I presentation as ``cols`` negative then ``rows`` positive rows."""
        if self.kind != "I":
            raise ValueError("signed row lengths only make sense for Type I")
        assert self.neg_wing is not None and self.pos_wing is not None
        neg = list(self.neg_wing) + [0] * (cols - len(self.neg_wing))
        pos = list(self.pos_wing) + [0] * (rows - len(self.pos_wing))
        return tuple(-x for x in reversed(neg)) + tuple(pos)


def stack(ideal, kind: str) -> StackedShape:
    """Stack an ideal shape according to the Hermitian type.

    Type I takes a partition and returns its two wings (conjugate, shape).
    Types II and III take the strictly decreasing row lengths of a shifted
    diagram; the result is the partition ``(rows | rows - 1)`` in Frobenius
    coordinates (Type III: its conjugate).
    """
    if kind == "I":
        shape = Partition(ideal)
        return StackedShape(kind="I", neg_wing=shape.conjugate(), pos_wing=shape)
    if kind in ("II", "III"):
        rows = tuple(int(a) for a in ideal)
        if any(a <= b for a, b in zip(rows, rows[1:])) or (rows and rows[-1] <= 0):
            raise ValueError(f"row lengths must be strictly decreasing and positive, got {rows}")
        if not rows:
            merged = Partition()
        else:
            merged = from_frobenius(rows, tuple(a - 1 for a in rows))
        if kind == "III":
            merged = merged.conjugate()
        return StackedShape(kind=kind, shape=merged)
    raise ValueError(f"unknown stacking type {kind!r}")
