"""Counting sequences p_n, f_n, g_n, p̄_n and the two-coloured partition bijection.

Every sequence is computed by enumeration and cross-checked against a second
independent route (recurrence or generating function) before it is returned.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .diagrams import Partition, as_partition, checked, count_syt, intersect, part_union, partitions
from .errors import MalformedPair


class SequenceMismatch(AssertionError):
    """Two independent routes to the same sequence value disagree."""


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(partitions(n))


@lru_cache(maxsize=None)
def euler_p(n: int) -> int:
    """Partition numbers via Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * euler_p(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * euler_p(n - g2)
        k += 1
    return checked(total)


def p_count(n: int) -> int:
    value = len(_partitions_of(n))
    if value != euler_p(n):
        raise SequenceMismatch(f"p_{n}: enumeration {value} != recurrence {euler_p(n)}")
    return value


@lru_cache(maxsize=None)
def involutions(n: int) -> int:
    """``f_n = f_{n-1} + (n-1) f_{n-2}``."""
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, checked(b + (k - 1) * a)
    return b


def f_count(n: int) -> int:
    value = checked(sum(count_syt(lam) for lam in _partitions_of(n)))
    if value != involutions(n):
        raise SequenceMismatch(f"f_{n}: hook sum {value} != recurrence {involutions(n)}")
    return value


def differ_by_one_box(a, b) -> bool:
    a, b = as_partition(a), as_partition(b)
    return a.size() == b.size() and a != b and intersect(a, b).size() == a.size() - 1


@lru_cache(maxsize=None)
def g_count(n: int) -> int:
    """Unordered pairs of partitions of ``n`` that differ by one box, by brute force."""
    parts = _partitions_of(n)
    return sum(
        1 for i, a in enumerate(parts) for b in parts[i + 1 :] if differ_by_one_box(a, b)
    )


@dataclass(frozen=True)
class BarPartition:
    """A partition in which 1s and 2s come in two colours.

    ``core`` holds the ordinary parts; ``n1`` and ``n2`` count the primed
    1s and primed 2s.
    """

    core: Partition
    n1: int = 0
    n2: int = 0

    def __post_init__(self):
        object.__setattr__(self, "core", as_partition(self.core))
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("primed counts must be nonnegative")

    @property
    def weight(self) -> int:
        return self.core.size() + self.n1 + 2 * self.n2

    def __str__(self):
        parts = [str(p) for p in self.core if p > 2]
        parts += ["2'"] * self.n2 + ["2"] * self.core.count(2)
        parts += ["1"] * self.core.count(1) + ["1'"] * self.n1
        return ",".join(parts) if parts else "()"


def bar_partitions(n: int) -> Iterator[BarPartition]:
    for n2 in range(n // 2 + 1):
        for n1 in range(n - 2 * n2 + 1):
            for core in _partitions_of(n - 2 * n2 - n1):
                yield BarPartition(core, n1, n2)


def _gf_coefficients(max_degree: int) -> list[int]:
    """Coefficients of ``1/((1-x)(1-x^2)) Π_{i>=1} 1/(1-x^i)`` up to ``x^max_degree``."""
    coeffs = [1] + [0] * max_degree
    for k in [1, 2, *range(1, max_degree + 1)]:
        # multiply by 1/(1 - x^k) in place
        for j in range(k, max_degree + 1):
            coeffs[j] += coeffs[j - k]
    return coeffs


def barp_gf(max_degree: int) -> list[int]:
    return _gf_coefficients(max_degree)


def barp_count(n: int) -> int:
    value = sum(1 for _ in bar_partitions(n))
    gf = _gf_coefficients(n)[n]
    if value != gf:
        raise SequenceMismatch(f"barp_{n}: enumeration {value} != generating function {gf}")
    return checked(value)


@dataclass(frozen=True)
class BoxPair:
    """Two partitions of the same size differing by one box, larger one first."""

    nu1: Partition
    nu2: Partition

    def __post_init__(self):
        object.__setattr__(self, "nu1", as_partition(self.nu1))
        object.__setattr__(self, "nu2", as_partition(self.nu2))

    def is_valid(self) -> bool:
        return differ_by_one_box(self.nu1, self.nu2) and tuple(self.nu1) > tuple(self.nu2)

    @property
    def weight(self) -> int:
        return self.nu1.size()


def box_pairs(n: int) -> Iterator[BoxPair]:
    parts = _partitions_of(n)
    for i, a in enumerate(parts):
        for b in parts[i + 1 :]:
            if differ_by_one_box(a, b):
                # _partitions_of is lexicographically decreasing, so a > b
                yield BoxPair(a, b)


def bijection_forward(b: BarPartition) -> BoxPair:
    m = b.n1 + b.n2
    return BoxPair(
        part_union(b.core, (m + 2, b.n2)),
        part_union(b.core, (m + 1, b.n2 + 1)),
    )


def bijection_inverse(pair: BoxPair) -> BarPartition:
    nu1, nu2 = pair.nu1, pair.nu2
    if not pair.is_valid():
        raise MalformedPair(f"({nu1}, {nu2}) do not differ by exactly one box")
    width = max(len(nu1), len(nu2))
    c1 = Counter(nu1.at(i) for i in range(width))
    c2 = Counter(nu2.at(i) for i in range(width))
    only1 = sorted((c1 - c2).elements(), reverse=True)
    only2 = sorted((c2 - c1).elements(), reverse=True)
    if len(only1) != 2 or len(only2) != 2:
        raise MalformedPair(f"({nu1}, {nu2}) differ in more than two rows")
    top, b = only1
    c = top - 2
    if not (c >= b >= 0 and only2 == [c + 1, b + 1]):
        raise MalformedPair(f"({nu1}, {nu2}) are not of the form (c+2, b) / (c+1, b+1)")
    core = c1 - Counter(only1)
    core_parts = sorted((p for p in core.elements() if p), reverse=True)
    return BarPartition(Partition(core_parts), c - b, b)


def table_rows(n_max: int, names=("g", "p", "f")) -> dict[str, list[int]]:
    funcs = {"p": p_count, "f": f_count, "g": g_count, "barp": barp_count}
    return {name: [funcs[name](n) for n in range(1, n_max + 1)] for name in names}


def format_table(n_max: int, names=("g", "p", "f")) -> str:
    """Aligned text table, one row per sequence."""
    rows = table_rows(n_max, names)
    cells = [["n:", *map(str, range(1, n_max + 1))]]
    cells += [[f"{name}_n:", *map(str, values)] for name, values in rows.items()]
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return "\n".join(
        " ".join(cell.rjust(w) if j else cell.ljust(w) for j, (cell, w) in enumerate(zip(row, widths)))
        for row in cells
    ) + "\n"
