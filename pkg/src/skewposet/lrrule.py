"""Littlewood-Richardson coefficients and skew character decomposition.

One backtracking kernel fills a skew shape row by row, top to bottom, and
right to left inside each row, so the reverse row word grows one letter at a
time and the lattice condition can be checked on every prefix.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .diagrams import (
    Partition,
    SkewDiagram,
    as_partition,
    checked,
    intersect,
    skew,
)
from .errors import ParseError


def _lr_fillings(d: SkewDiagram, content: Partition | None = None) -> Iterator[list[int]]:
    """Yield the content vector of every LR filling of ``d``.

    With ``content`` fixed, only fillings of exactly that content are produced.
    """
    lam, mu = d.outer, d.inner
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r], mu.at(r), -1)]
    n = len(cells)
    max_entry = len(lam)
    if content is not None:
        if content.size() != n or len(content) > max_entry:
            return
        max_entry = len(content)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (max_entry + 2)

    def rec(k: int):
        if k == n:
            yield counts[1 : max_entry + 1]
            return
        r, c = cells[k]
        # right neighbour already placed: rows weakly increase left to right
        hi = filling.get((r, c + 1), max_entry)
        # box above, if inside the skew shape: columns strictly increase
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                # lattice condition; larger v only gets worse once counts[v-1] is 0
                if counts[v - 1] == 0:
                    break
                continue
            if content is not None and counts[v] + 1 > content[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            yield from rec(k + 1)
            del filling[(r, c)]
            counts[v] -= 1

    yield from rec(0)


def lr_coefficient(lam, mu, nu) -> int:
    """``c(λ; μ, ν)``: LR tableaux of shape ``λ/μ`` with content ``ν``."""
    d = skew(lam, mu)
    nu = as_partition(nu)
    return checked(sum(1 for _ in _lr_fillings(d, nu)))


@dataclass(frozen=True)
class SkewCharacter:
    """A character ``Σ c_ν [ν]`` with positive coefficients only."""

    terms: Mapping[Partition, int] = field(default_factory=dict)
    degree: int = 0

    def __post_init__(self):
        terms = {as_partition(k): int(v) for k, v in self.terms.items() if v}
        for nu, coeff in terms.items():
            if coeff < 0:
                raise ValueError(f"negative coefficient for {nu}")
            if nu.size() != self.degree:
                raise ValueError(f"{nu} does not have degree {self.degree}")
        ordered = dict(sorted(terms.items(), key=lambda kv: tuple(kv[0]), reverse=True))
        object.__setattr__(self, "terms", ordered)

    def __eq__(self, other):
        if not isinstance(other, SkewCharacter):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, tuple(self.terms.items())))

    def __getitem__(self, nu) -> int:
        return self.terms.get(as_partition(nu), 0)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"[{nu}]" if coeff == 1 else f"{coeff}*[{nu}]" for nu, coeff in self.terms.items()
        )

    @classmethod
    def parse(cls, text: str) -> "SkewCharacter":
        text = text.strip()
        if text == "0":
            return cls()
        terms: Counter = Counter()
        degree = None
        for chunk in text.split("+"):
            chunk = chunk.strip()
            coeff_text, star, rest = chunk.partition("*")
            if not star:
                coeff_text, rest = "1", chunk
            if not (rest.startswith("[") and rest.endswith("]")):
                raise ParseError(f"bad character term {chunk!r}")
            try:
                coeff = int(coeff_text)
            except ValueError:
                raise ParseError(f"bad coefficient in {chunk!r}") from None
            nu = Partition.parse(rest[1:-1])
            degree = nu.size() if degree is None else degree
            terms[nu] += coeff
        return cls(dict(terms), degree or 0)

    def to_records(self) -> list[dict]:
        return [{"nu": list(nu), "coeff": coeff} for nu, coeff in self.terms.items()]

    @classmethod
    def from_records(cls, records: list[dict], degree: int | None = None) -> "SkewCharacter":
        terms = {Partition(r["nu"]): r["coeff"] for r in records}
        if degree is None:
            degree = next(iter(terms)).size() if terms else 0
        return cls(terms, degree)

    def conjugate(self) -> "SkewCharacter":
        from .diagrams import conjugate

        return SkewCharacter({conjugate(nu): c for nu, c in self.terms.items()}, self.degree)


def decompose(d: SkewDiagram) -> SkewCharacter:
    """``[λ/μ] = Σ_ν c(λ; μ, ν) [ν]`` by enumerating every LR filling."""
    tally: Counter = Counter()
    for counts in _lr_fillings(d):
        tally[Partition(counts)] += 1
    return SkewCharacter(dict(tally), d.size())


@dataclass(frozen=True)
class CcType:
    components: int
    constituents: int

    def __iter__(self):
        return iter((self.components, self.constituents))

    def __str__(self):
        return f"({self.components},{self.constituents})"


def cc_type(ch: SkewCharacter) -> CcType:
    return CcType(len(ch.terms), checked(sum(ch.terms.values())))


def one_box_pairs(ch: SkewCharacter) -> int:
    """Unordered pairs of constituents whose diagrams differ by moving one box."""
    keys = list(ch.terms)
    target = ch.degree - 1
    return sum(
        1
        for i, a in enumerate(keys)
        for b in keys[i + 1 :]
        if intersect(a, b).size() == target
    )


def outer_product(alpha, beta) -> SkewCharacter:
    """``[α] ⊗ [β]`` realised as the disconnected skew shape ``α ⊗ β``.

    ``α`` sits in the lower left and ``β`` above it to the right.
    """
    alpha, beta = as_partition(alpha), as_partition(beta)
    w = alpha.at(0)
    outer = Partition([*(p + w for p in beta), *alpha])
    inner = Partition([w] * len(beta))
    return decompose(SkewDiagram(outer, inner))


def count_syt_skew(d: SkewDiagram) -> int:
    """Standard fillings of the box set of ``d``, counted without any LR machinery.

    Boxes are placed one label at a time; a box may take the next label once
    its left and upper neighbours inside the shape are filled.
    """
    boxes = d.boxes
    preds = {
        b: [p for p in ((b[0], b[1] - 1), (b[0] - 1, b[1])) if p in boxes] for b in boxes
    }
    order = sorted(boxes)
    index = {b: i for i, b in enumerate(order)}
    memo: dict[int, int] = {}
    full = (1 << len(order)) - 1

    def count(mask: int) -> int:
        if mask == full:
            return 1
        if mask in memo:
            return memo[mask]
        total = 0
        for b in order:
            bit = 1 << index[b]
            if mask & bit:
                continue
            if all(mask & (1 << index[p]) for p in preds[b]):
                total += count(mask | bit)
        memo[mask] = total
        return total

    return checked(count(0))
