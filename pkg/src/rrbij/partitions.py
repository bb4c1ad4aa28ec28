"""Partitions, labeled partitions, statistics and Ferrers-shape surgery.

Partitions are plain tuples of positive ints in weakly increasing order,
so positions are 1-based from the smallest part.  Vectors that allow zero
entries (``PartStarVec``) are tuples too; their length is significant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

Partition = tuple[int, ...]
PartStarVec = tuple[int, ...]

# top element of the extended order used for empty-partition conventions
INF = math.inf


class PartitionError(ValueError):
    pass


class RepeatedParts(PartitionError):
    pass


class OutOfRange(PartitionError):
    pass


class NonPositiveResult(PartitionError):
    pass


class NoValidPosition(PartitionError):
    pass


class Label(Enum):
    NONE = (0, 0)
    X = (1, 0)
    Y = (0, 1)
    XY = (1, 1)
    XY2 = (1, 2)
    X2Y2 = (2, 2)
    X2Y = (2, 1)

    @property
    def xdeg(self) -> int:
        return self.value[0]

    @property
    def ydeg(self) -> int:
        return self.value[1]

    @property
    def marker(self) -> str:
        """Marker monomial as written in part subscripts: 'x', 'xy2', ''."""
        out = ""
        for var, deg in (("x", self.xdeg), ("y", self.ydeg)):
            if deg:
                out += var + (str(deg) if deg > 1 else "")
        return out


@dataclass(frozen=True, order=True)
class LabeledPartition:
    parts: Partition
    labels: tuple[Label, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.labels):
            raise PartitionError("one label per part is required")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise PartitionError(f"parts {self.parts} are not weakly increasing")
        if any(p < 1 for p in self.parts):
            raise PartitionError("parts must be positive")

    @classmethod
    def uniform(cls, parts: Iterable[int], label: Label) -> "LabeledPartition":
        parts = tuple(parts)
        return cls(parts, (label,) * len(parts))

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def marker_degrees(self) -> tuple[int, int]:
        return (sum(l.xdeg for l in self.labels), sum(l.ydeg for l in self.labels))

    def count(self, label: Label) -> int:
        return self.labels.count(label)

    def sort_key(self):
        return (self.parts, tuple(l.value for l in self.labels))


def weight(p: Sequence[int]) -> int:
    return sum(p)


def is_partition(p: Sequence[int]) -> bool:
    return all(x >= 1 for x in p) and all(a <= b for a, b in zip(p, p[1:]))


def is_strict(p: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(p, p[1:]))


# statistics ---------------------------------------------------------------

def runs_with_gap(p: Sequence[int], gap: int) -> list[tuple[int, ...]]:
    """Maximal runs of consecutive entries whose adjacent difference is ``gap``."""
    out: list[list[int]] = []
    for part in p:
        if out and part - out[-1][-1] == gap:
            out[-1].append(part)
        else:
            out.append([part])
    return [tuple(r) for r in out]


def _require_strict(p: Sequence[int]) -> None:
    if not is_strict(p):
        raise RepeatedParts(f"{tuple(p)} has repeated parts")


def stat_sol(p: Sequence[int]) -> int:
    """Number of maximal runs of consecutive integers with odd length."""
    _require_strict(p)
    return sum(len(r) % 2 for r in runs_with_gap(p, 1))


def stat_sol2(p: Sequence[int]) -> int:
    """Number of maximal runs with adjacent difference 2 and odd length."""
    _require_strict(p)
    return sum(len(r) % 2 for r in runs_with_gap(p, 2))


def stat_zero_sequences(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Maximal runs of equal entries; zeros of a PartStarVec form runs too."""
    return runs_with_gap(p, 0)


def first_odd_zero_sequence(k: Sequence[int]) -> tuple[float, float]:
    """(value, 1-based start position) of the first equal-run of odd length.

    Both are INF when every run has even length.
    """
    pos = 1
    for run in stat_zero_sequences(k):
        if len(run) % 2:
            return run[0], pos
        pos += len(run)
    return INF, INF


# shapes -------------------------------------------------------------------

def tl_shape_size(p: Sequence[int], k: int, t: int) -> int:
    """Size of the k-th tL-shape: part k plus a t-wide arm over the parts above."""
    m = len(p)
    if not 1 <= k <= m:
        raise OutOfRange(f"position {k} outside 1..{m}")
    # the arm sits on the rows above, so t may exceed p_k itself
    if t < 1:
        raise OutOfRange(f"thickness {t} must be positive")
    return p[k - 1] + t * (m - k)


def remove_tl_shape(p: Sequence[int], k: int, t: int) -> tuple[Partition, int]:
    size = tl_shape_size(p, k, t)
    rest = tuple(p[: k - 1]) + tuple(x - t for x in p[k:])
    if any(x <= 0 for x in rest):
        raise NonPositiveResult(f"removing the {t}L-shape at {k} empties a row")
    return rest, size


def tl_insert_position(p: Sequence[int], size: int, t: int) -> int:
    """1-based index the new part takes when ``size`` is inserted as a tL-shape.

    Bottom insertion happens when the new part is below the current smallest
    part (after the others are raised by t); otherwise the new part goes just
    above the largest part b with p_b + t(m-b) + t < size.
    """
    m = len(p)
    if m == 0:
        if size < 1:
            raise NoValidPosition(f"cannot insert {size}")
        return 1
    if p[0] + t * m >= size:
        if size - t * m < 1:
            raise NoValidPosition(f"{size} is too small for a {t}L-shape over {m} parts")
        return 1
    for b in range(m, 0, -1):
        if p[b - 1] + t * (m - b) + t < size:
            return b + 1
    raise NoValidPosition(f"no slot for {size} in {tuple(p)}")


def insert_tl_shape_at(p: Sequence[int], size: int, t: int, k: int) -> Partition:
    """Insert a tL-shape of the given size so that the new part sits at index k."""
    m = len(p)
    if not 1 <= k <= m + 1:
        raise OutOfRange(f"position {k} outside 1..{m + 1}")
    new = size - t * (m + 1 - k)
    if new < 1:
        raise NonPositiveResult(f"new part {new} is not positive")
    return tuple(p[: k - 1]) + (new,) + tuple(x + t for x in p[k - 1:])


def insert_tl_shape(p: Sequence[int], size: int, t: int) -> Partition:
    k = tl_insert_position(p, size, t)
    out = insert_tl_shape_at(p, size, t, k)
    if not is_partition(out):
        raise NoValidPosition(f"inserting {size} into {tuple(p)} breaks the order")
    return out


def i_shape_size(p: Sequence[int], k: int) -> int:
    m = len(p)
    if not 1 <= k <= m:
        raise OutOfRange(f"position {k} outside 1..{m}")
    return m - k + 1


def remove_i_shape(p: Sequence[int], k: int, times: int = 1) -> tuple[Partition, int]:
    """Subtract ``times`` from parts k..m; returns (partition, size of one pass).

    Parts that reach zero are dropped.
    """
    if times not in (1, 2):
        raise OutOfRange("an I-shape is removed once or twice")
    size = i_shape_size(p, k)
    if any(x < times for x in p[k - 1:]):
        raise OutOfRange(f"parts from position {k} are smaller than {times}")
    lowered = tuple(p[: k - 1]) + tuple(x - times for x in p[k - 1:])
    return tuple(x for x in lowered if x > 0), size


def add_i_shape(p: Sequence[int], size: int, times: int = 1) -> Partition:
    """Inverse of remove_i_shape: add ``times`` to the top ``size`` parts.

    If ``size`` exceeds the length by one, a zero part is revived at the bottom.
    """
    m = len(p)
    if size == m + 1:
        p = (0,) + tuple(p)
        m += 1
    if not 1 <= size <= m:
        raise OutOfRange(f"I-shape of size {size} does not fit {m} parts")
    return tuple(p[: m - size]) + tuple(x + times for x in p[m - size:])
