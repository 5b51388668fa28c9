"""Partitions, skew diagrams, boundary paths and decay into components.

Partitions are immutable tuples of positive integers in weakly decreasing
order. Boxes use matrix coordinates ``(row, col)`` starting at 1, so the skew
diagram ``λ/μ`` holds the boxes with ``μ_r < c <= λ_r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import ContainmentError, EmptyDiagram, EmptyPartition, ParseError

INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    """Refuse counts that would not fit a signed 64-bit integer."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"count {value} exceeds 64-bit range")
    return value


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are accepted on input and dropped, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def at(self, i: int) -> int:
        """Part ``i`` (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return ",".join(str(p) for p in self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ParseError(f"bad partition {text!r}: {exc}") from None


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def conjugate(p) -> Partition:
    p = as_partition(p)
    if not p:
        return p
    return Partition(sum(1 for part in p if part > j) for j in range(p[0]))


def distinct_parts(p) -> int:
    return len(set(p))


def staircase(n: int) -> Partition:
    return Partition(range(n, 0, -1))


def part_sum(p, q) -> Partition:
    n = max(len(p), len(q))
    p, q = as_partition(p), as_partition(q)
    return Partition(p.at(i) + q.at(i) for i in range(n))


def part_union(p, q) -> Partition:
    return Partition(sorted((*p, *q), reverse=True))


def intersect(p, q) -> Partition:
    return Partition(min(a, b) for a, b in zip(p, q))


def bar_complement(p) -> Partition:
    """``(λ_1-λ_l, ..., λ_1-λ_2)``: the inner shape of the rotated diagram."""
    p = as_partition(p)
    if not p:
        raise EmptyPartition("bar complement of the empty partition")
    return Partition(p[0] - part for part in reversed(p[1:]))


def hook_lengths(p) -> list[int]:
    conj = conjugate(p)
    return [p[r] - c + conj[c] - r - 1 for r in range(len(p)) for c in range(p[r])]


@lru_cache(maxsize=None)
def _count_syt(p: Partition) -> int:
    return checked(factorial(p.size()) // prod(hook_lengths(p)))


def count_syt(p) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    return _count_syt(as_partition(p))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first, *tail)

    for parts in rec(n, max_part):
        yield Partition(parts)


def subpartitions(p) -> Iterator[Partition]:
    """All partitions contained in ``p`` (including ``()`` and ``p``)."""
    p = as_partition(p)

    def rec(i, cap):
        if i == len(p):
            yield ()
            return
        for part in range(min(p[i], cap), -1, -1):
            if part == 0:
                yield ()
            else:
                for tail in rec(i + 1, part):
                    yield (part, *tail)

    for parts in rec(0, p[0] if p else 0):
        yield Partition(parts)


@dataclass(frozen=True)
class SkewDiagram:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if len(self.inner) > len(self.outer) or any(
            m > l for m, l in zip(self.inner, self.outer)
        ):
            raise ContainmentError(f"{self.inner} is not contained in {self.outer}")

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def is_empty(self) -> bool:
        return self.size() == 0

    @cached_property
    def boxes(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (r + 1, c)
            for r, l in enumerate(self.outer)
            for c in range(self.inner.at(r) + 1, l + 1)
        )

    def is_basic(self) -> bool:
        lam, mu = self.outer, self.inner
        return all(
            mu.at(i) < lam[i] and mu.at(i) <= lam.at(i + 1) for i in range(len(lam))
        )

    def rank(self) -> int:
        """Number of rows plus columns, ``λ_1 + l(λ)``, for a basic diagram."""
        return (self.outer[0] + len(self.outer)) if self.outer else 0

    def __str__(self):
        return f"{self.outer}/{self.inner}"

    @classmethod
    def parse(cls, text: str) -> "SkewDiagram":
        outer, sep, inner = text.partition("/")
        return skew(Partition.parse(outer), Partition.parse(inner))


def skew(outer, inner=()) -> SkewDiagram:
    return SkewDiagram(as_partition(outer), as_partition(inner))


EMPTY = SkewDiagram(Partition(), Partition())


def from_boxes(boxes: Iterable[tuple[int, int]]) -> SkewDiagram:
    """Basic skew diagram with the given box set, up to translation.

    Empty rows and columns are squeezed out; the boxes must form a skew shape.
    """
    boxes = set(boxes)
    if not boxes:
        return EMPTY
    row_index = {r: i for i, r in enumerate(sorted({r for r, _ in boxes}))}
    col_index = {c: j + 1 for j, c in enumerate(sorted({c for _, c in boxes}))}
    lo = [None] * len(row_index)
    hi = [0] * len(row_index)
    for r, c in boxes:
        i, j = row_index[r], col_index[c]
        hi[i] = max(hi[i], j)
        lo[i] = j if lo[i] is None else min(lo[i], j)
    d = SkewDiagram(Partition(hi), Partition(j - 1 for j in lo))
    if d.boxes != {(row_index[r] + 1, col_index[c]) for r, c in boxes}:
        raise ValueError("box set is not a skew shape")
    return d


def to_basic(d: SkewDiagram) -> SkewDiagram:
    if d.is_basic():
        return d
    return from_boxes(d.boxes)


@dataclass(frozen=True)
class PathPair:
    outer_seq: str
    inner_seq: str


def _path(p: Partition, rows: int, width: int) -> str:
    # steps are emitted bottom row first; ``rows`` pads p with zero rows
    steps = []
    for i in range(rows - 1, -1, -1):
        steps.append("h" * (p.at(i) - p.at(i + 1)))
        steps.append("v")
    steps.append("h" * (width - p.at(0)))
    return "".join(steps)


def paths(d: SkewDiagram) -> PathPair:
    """Outer and inner boundary paths as strings over ``{'h', 'v'}``."""
    if d.is_empty():
        raise EmptyDiagram("paths of an empty diagram")
    rows, width = len(d.outer), d.outer[0]
    return PathPair(_path(d.outer, rows, width), _path(d.inner, rows, width))


def rotate(d: SkewDiagram) -> SkewDiagram:
    """Rotation by 180 degrees, returned in basic position."""
    b = to_basic(d)
    if b.is_empty():
        return b
    rows, width = len(b.outer), b.outer[0]
    return from_boxes((rows + 1 - r, width + 1 - c) for r, c in b.boxes)


def skew_sum(a: SkewDiagram, b: SkewDiagram) -> SkewDiagram:
    return SkewDiagram(part_sum(a.outer, b.outer), part_sum(a.inner, b.inner))


def skew_union(a: SkewDiagram, b: SkewDiagram) -> SkewDiagram:
    return SkewDiagram(part_union(a.outer, b.outer), part_union(a.inner, b.inner))


def _component_key(d: SkewDiagram):
    return (d.rank(), d.size(), tuple(d.outer), tuple(d.inner))


@dataclass(frozen=True)
class SkewClass:
    """Skew diagrams up to translation of their connected components.

    ``components`` holds connected basic diagrams sorted by
    (rank, size, outer, inner), largest first.
    """

    components: tuple[SkewDiagram, ...] = ()

    @classmethod
    def of(cls, components: Iterable[SkewDiagram]) -> "SkewClass":
        comps = tuple(sorted(components, key=_component_key, reverse=True))
        return cls(comps)

    def rank(self) -> int:
        return sum(c.rank() for c in self.components)

    def size(self) -> int:
        return sum(c.size() for c in self.components)

    def is_empty(self) -> bool:
        return not self.components

    def arrangement(self) -> SkewDiagram:
        """Canonical representative: components stacked anti-diagonally."""
        return arrange(self.components)

    def arrangements(self) -> Iterator[tuple[tuple[SkewDiagram, ...], SkewDiagram]]:
        """Every distinct ordering of the components with its concrete diagram."""
        for comps in _distinct_orders(self.components):
            yield comps, arrange(comps)

    def __str__(self):
        if not self.components:
            return "{}"
        return " (x) ".join(f"[{c}]" for c in self.components)


def _distinct_orders(items: tuple) -> Iterator[tuple]:
    """Distinct orderings of a multiset, in lexicographic order of first appearance."""
    kinds = list(dict.fromkeys(items))
    left = [items.count(k) for k in kinds]
    out: list = []

    def rec():
        if len(out) == len(items):
            yield tuple(out)
            return
        for i, kind in enumerate(kinds):
            if left[i]:
                left[i] -= 1
                out.append(kind)
                yield from rec()
                out.pop()
                left[i] += 1

    yield from rec()


def arrange(components: Sequence[SkewDiagram]) -> SkewDiagram:
    """Stack basic components so each lies strictly below-left of the next.

    ``components[0]`` ends up in the bottom-left corner.
    """
    outer: list[int] = []
    inner: list[int] = []
    offset = 0
    for comp in components:
        outer[:0] = [part + offset for part in comp.outer]
        inner[:0] = [comp.inner.at(i) + offset for i in range(len(comp.outer))]
        offset += comp.outer[0]
    return SkewDiagram(Partition(outer), Partition(inner))


def decay(d: SkewDiagram) -> SkewClass:
    """Split ``d`` into connected components, each in basic position."""
    by_row: dict[int, list] = {}
    by_col: dict[int, list] = {}
    for box in d.boxes:
        by_row.setdefault(box[0], []).append(box)
        by_col.setdefault(box[1], []).append(box)
    unseen = set(d.boxes)
    comps = []
    while unseen:
        start = unseen.pop()
        group, stack = [start], [start]
        while stack:
            r, c = stack.pop()
            for nb in (*by_row[r], *by_col[c]):
                if nb in unseen:
                    unseen.remove(nb)
                    group.append(nb)
                    stack.append(nb)
        comps.append(from_boxes(group))
    return SkewClass.of(comps)


def skew_class(d) -> SkewClass:
    if isinstance(d, SkewClass):
        return d
    return decay(d)


def delta_value(d) -> int:
    """``min(dp(λ), dp(μ) + 1)`` on a basic representative."""
    if isinstance(d, SkewClass):
        if d.is_empty():
            raise EmptyDiagram("delta value of the empty class")
        d = d.arrangement()
    d = to_basic(d)
    if d.is_empty():
        raise EmptyDiagram("delta value of an empty diagram")
    return min(distinct_parts(d.outer), distinct_parts(d.inner) + 1)


def staircase_class(n: int) -> SkewClass:
    """Class of ``δ_n/δ_{n-1}``: ``n`` disconnected single boxes."""
    return SkewClass.of([SkewDiagram(Partition((1,)))] * n)
