"""The graded poset of skew classes ordered by column insertion and row union.

A basic diagram ``λ/μ`` covers ``α/β`` when ``λ/μ = α/β + (1^x)/(1^y)`` with
``0 <= y <= x <= l(α)`` or ``λ/μ = α/β ∪ (x)/(y)`` with ``0 <= y <= x <= α_1``,
both diagrams basic. Classes inherit the relation existentially over their
arrangements.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .diagrams import (
    Partition,
    SkewClass,
    SkewDiagram,
    decay,
    delta_value,
    skew_class,
    staircase_class,
)
from .errors import AtMinimum, EmptyDiagram, ParseError, TheoremViolation

COLUMN, ROW = "column", "row"
UP, DOWN = "up", "down"


@dataclass(frozen=True, order=True)
class CoverMove:
    kind: str
    x: int
    y: int
    direction: str = UP

    def __post_init__(self):
        if self.kind not in (COLUMN, ROW) or self.direction not in (UP, DOWN):
            raise ValueError(f"bad move {self.kind!r}/{self.direction!r}")
        if not 0 <= self.y <= self.x:
            raise ValueError(f"need 0 <= y <= x, got x={self.x} y={self.y}")

    def reversed(self) -> "CoverMove":
        return CoverMove(self.kind, self.x, self.y, DOWN if self.direction == UP else UP)

    def __str__(self):
        sign = "+" if self.direction == UP else "-"
        return f"{sign}{'col' if self.kind == COLUMN else 'row'} {self.x} {self.y}"

    @classmethod
    def parse(cls, text: str) -> "CoverMove":
        try:
            head, x, y = text.split()
            sign, kind = head[0], head[1:]
            direction = {"+": UP, "-": DOWN, "−": DOWN}[sign]
            kind = {"col": COLUMN, "row": ROW}[kind]
            return cls(kind, int(x), int(y), direction)
        except (KeyError, ValueError, IndexError):
            raise ParseError(f"bad move {text!r}") from None


def _minus_column(p: Partition, k: int) -> Partition | None:
    """``p - (1^k)`` if that is a partition, else None."""
    if k == 0:
        return p
    if k > len(p) or p.at(k - 1) - 1 < p.at(k):
        return None
    return Partition([*(part - 1 for part in p[:k]), *p[k:]])


def _minus_row(p: Partition, k: int) -> Partition | None:
    """``p`` with one part equal to ``k`` removed; ``k = 0`` removes nothing."""
    if k == 0:
        return p
    if k not in p:
        return None
    parts = list(p)
    parts.remove(k)
    return Partition(parts)


def _basic_or_none(outer: Partition | None, inner: Partition | None) -> SkewDiagram | None:
    if outer is None or inner is None:
        return None
    if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
        return None
    d = SkewDiagram(outer, inner)
    return d if d.is_basic() else None


def apply_up(d: SkewDiagram, move: CoverMove) -> SkewDiagram | None:
    """``d + (1^x)/(1^y)`` or ``d ∪ (x)/(y)`` when that is a cover, else None."""
    lam, mu = d.outer, d.inner
    x, y = move.x, move.y
    if x < 1:
        return None
    if move.kind == COLUMN:
        if x > len(lam):
            return None
        outer = Partition([*(p + 1 for p in lam[:x]), *lam[x:]])
        inner = Partition([*(mu.at(i) + 1 for i in range(y)), *mu[y:]])
    else:
        if x > lam.at(0):
            return None
        outer = Partition(sorted((*lam, x), reverse=True))
        inner = Partition(sorted((*mu, y), reverse=True))
    return _basic_or_none(outer, inner)


def apply_down(d: SkewDiagram, move: CoverMove) -> SkewDiagram | None:
    """The basic ``α/β`` with ``apply_up(α/β, move) == d``, or None."""
    x, y = move.x, move.y
    if x < 1:
        return None
    if move.kind == COLUMN:
        outer, inner = _minus_column(d.outer, x), _minus_column(d.inner, y)
        if outer is None or len(outer) < x:
            return None
    else:
        outer, inner = _minus_row(d.outer, x), _minus_row(d.inner, y)
        if outer is None or outer.at(0) < x:
            return None
    return _basic_or_none(outer, inner)


def _moves(kind: str, bound: int, direction: str) -> Iterator[CoverMove]:
    for x in range(1, bound + 1):
        for y in range(x + 1):
            yield CoverMove(kind, x, y, direction)


def diagram_down_covers(d: SkewDiagram) -> Iterator[tuple[CoverMove, SkewDiagram]]:
    """Down covers of one concrete basic diagram, columns first, then ascending (x, y)."""
    lam = d.outer
    for move in _moves(COLUMN, len(lam), DOWN):
        below = apply_down(d, move)
        if below is not None:
            yield move, below
    for move in _moves(ROW, lam.at(0), DOWN):
        below = apply_down(d, move)
        if below is not None:
            yield move, below


def diagram_up_covers(d: SkewDiagram) -> Iterator[tuple[CoverMove, SkewDiagram]]:
    lam = d.outer
    for move in _moves(COLUMN, len(lam), UP):
        above = apply_up(d, move)
        if above is not None:
            yield move, above
    for move in _moves(ROW, lam.at(0), UP):
        above = apply_up(d, move)
        if above is not None:
            yield move, above


def rank(c) -> int:
    return skew_class(c).rank()


@lru_cache(maxsize=None)
def _down_candidates(c: SkewClass) -> tuple[tuple[CoverMove, SkewClass], ...]:
    out = []
    for _, arrangement in c.arrangements():
        for move, below in diagram_down_covers(arrangement):
            out.append((move, decay(below)))
    return tuple(out)


@lru_cache(maxsize=None)
def _up_candidates(c: SkewClass) -> tuple[tuple[CoverMove, SkewClass], ...]:
    out = []
    for _, arrangement in c.arrangements():
        for move, above in diagram_up_covers(arrangement):
            out.append((move, decay(above)))
    return tuple(out)


def down_covers(c) -> frozenset[SkewClass]:
    return frozenset(cls for _, cls in _down_candidates(skew_class(c)))


def up_covers(c) -> frozenset[SkewClass]:
    return frozenset(cls for _, cls in _up_candidates(skew_class(c)))


def is_geq(a, b) -> bool:
    """Whether ``b`` is reachable from ``a`` by repeatedly stepping down a cover."""
    a, b = skew_class(a), skew_class(b)
    target = b.rank()
    if a == b:
        return True
    if a.rank() <= target:
        return False
    seen = {a}
    frontier = deque([a])
    while frontier:
        cur = frontier.popleft()
        for below in down_covers(cur):
            if below == b:
                return True
            if below.rank() > target and below not in seen:
                seen.add(below)
                frontier.append(below)
    return False


def is_staircase(c: SkewClass) -> bool:
    return not c.is_empty() and c == staircase_class(delta_value(c))


def reduce_step(c) -> tuple[SkewClass, CoverMove]:
    """One rank down without changing the delta value."""
    c = skew_class(c)
    if c.is_empty():
        raise EmptyDiagram("cannot reduce the empty class")
    n = delta_value(c)
    if c == staircase_class(n):
        raise AtMinimum(f"{c} is the staircase class for delta {n}")
    for move, below in _down_candidates(c):
        if not below.is_empty() and delta_value(below) == n:
            return below, move
    raise TheoremViolation(f"no delta-preserving cocover of {c}", c)


@dataclass(frozen=True)
class WitnessChain:
    start: SkewClass
    steps: tuple[tuple[CoverMove, SkewClass], ...] = ()

    def __len__(self):
        return len(self.steps)

    @property
    def end(self) -> SkewClass:
        return self.steps[-1][1] if self.steps else self.start

    def classes(self) -> list[SkewClass]:
        return [self.start, *(cls for _, cls in self.steps)]

    def to_text(self) -> str:
        lines = [f"start {self.start.arrangement()}"]
        lines += [f"{move} {cls.arrangement()}" for move, cls in self.steps]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "WitnessChain":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("start "):
            raise ParseError("witness chain must begin with a 'start' line")
        start = decay(SkewDiagram.parse(lines[0].split(None, 1)[1]))
        steps = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 4:
                raise ParseError(f"bad chain line {ln!r}")
            move = CoverMove.parse(" ".join(parts[:3]))
            steps.append((move, decay(SkewDiagram.parse(parts[3]))))
        return cls(start, tuple(steps))


def reduce_to_staircase(c) -> WitnessChain:
    """Chain of delta-preserving down covers ending at ``δ_n/δ_{n-1}``."""
    start = skew_class(c)
    if start.is_empty():
        raise EmptyDiagram("cannot reduce the empty class")
    steps = []
    cur = start
    while not is_staircase(cur):
        cur, move = reduce_step(cur)
        steps.append((move, cur))
    return WitnessChain(start, tuple(steps))


def _is_cover_step(prev: SkewClass, move: CoverMove, nxt: SkewClass) -> bool:
    apply = apply_up if move.direction == UP else apply_down
    for _, arrangement in prev.arrangements():
        result = apply(arrangement, move)
        if result is not None and decay(result) == nxt:
            return True
    return False


def verify_chain(w: WitnessChain) -> bool:
    """Recheck every step of ``w`` from scratch."""
    prev = w.start
    for move, nxt in w.steps:
        step = 1 if move.direction == UP else -1
        if nxt.rank() != prev.rank() + step:
            return False
        if not _is_cover_step(prev, move, nxt):
            return False
        prev = nxt
    return True
