"""Exhaustive verification of the component, constituent and pair bounds.

Every basic skew class up to a box ceiling is checked against:

* ``lower_cc``: cc-type at least ``(p_n, f_n)`` with ``n`` the delta value;
* ``pairs``: at least ``g_n`` one-box pairs (delta >= 2), and at least
  ``max(a, b)`` pairs from the two-row splitting;
* ``upper``: at most ``g_N`` pairs, ``p_N`` components and
  ``min(f_N, p_N f^μ, p_N f^λ̄)`` constituents, ``N`` the box count;
* ``reduction``: a delta-preserving witness chain down to ``δ_n/δ_{n-1}``;
* ``symmetry``: rotation, conjugation and argument-swap symmetry of the LR
  coefficients, plus the standard-filling count identity;
* ``monotonicity``: seeded samples of ``c(λ;μ,ν) <= c(λ+λ';μ+μ';ν+ν')`` and
  the row-union form.
"""
from __future__ import annotations

import json
import logging
import random
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from .diagrams import (
    Partition,
    SkewClass,
    SkewDiagram,
    bar_complement,
    conjugate,
    count_syt,
    decay,
    delta_value,
    part_sum,
    part_union,
    partitions,
    rotate,
    skew_class,
    staircase_class,
    subpartitions,
)
from .errors import HypothesisNotMet, TheoremViolation
from .lrrule import (
    SkewCharacter,
    cc_type,
    count_syt_skew,
    decompose,
    lr_coefficient,
    one_box_pairs,
)
from .poset import reduce_to_staircase, verify_chain
from .sequences import f_count, g_count, p_count

log = logging.getLogger(__name__)

CLASS_CHECKS = ("lower_cc", "pairs", "upper", "reduction", "symmetry")
ALL_CHECKS = (*CLASS_CHECKS, "monotonicity")

Decomposer = Callable[[SkewDiagram], SkewCharacter]


@dataclass
class SweepConfig:
    max_boxes: int = 6
    checks: tuple[str, ...] = ALL_CHECKS
    sample_seed: int = 0
    samples: int = 1000
    parallel_jobs: int = 1
    # the standard-filling identity is only swept up to this many boxes
    oracle_max_boxes: int = 7

    def __post_init__(self):
        if self.max_boxes < 1:
            raise ValueError("max_boxes must be at least 1")
        self.checks = tuple(self.checks)
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass
class CheckResult:
    name: str
    examined: int = 0
    skipped: int = 0
    violations: list[dict] = field(default_factory=list)
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class Report:
    config: SweepConfig
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, timings: bool = True) -> dict:
        checks = []
        for c in self.checks:
            entry = {
                "name": c.name,
                "examined": c.examined,
                "skipped": c.skipped,
                "violations": c.violations,
            }
            if timings:
                entry["millis"] = round(c.millis, 3)
            checks.append(entry)
        return {"config": asdict(self.config), "checks": checks, "pass": self.passed}

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), indent=2)

    def to_text(self) -> str:
        lines = [f"max_boxes={self.config.max_boxes} jobs={self.config.parallel_jobs}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(
                f"{status} {c.name:<13} examined={c.examined} skipped={c.skipped} "
                f"violations={len(c.violations)} ({c.millis:.0f} ms)"
            )
            for v in c.violations[:10]:
                lines.append(f"    {json.dumps(v)}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


# -- enumeration -----------------------------------------------------------


def basic_diagrams(n: int) -> Iterator[SkewDiagram]:
    """All basic skew diagrams with exactly ``n`` boxes.

    Rows are built bottom-up. With row ``i+1`` spanning ``(μ_{i+1}, λ_{i+1}]``
    the row above needs ``μ_{i+1} <= μ_i <= λ_{i+1}`` and
    ``λ_i >= max(λ_{i+1}, μ_i + 1)``, which is exactly the basic condition.
    """

    def rec(rows, budget):
        if budget == 0:
            outer = Partition(lam for _, lam in reversed(rows))
            inner = Partition(mu for mu, _ in reversed(rows))
            yield SkewDiagram(outer, inner)
            return
        mu_below, lam_below = rows[-1]
        for mu in range(mu_below, lam_below + 1):
            for lam in range(max(lam_below, mu + 1), mu + budget + 1):
                rows.append((mu, lam))
                yield from rec(rows, budget - (lam - mu))
                rows.pop()

    for first in range(1, n + 1):
        yield from rec([(0, first)], n - first)


def class_key(c: SkewClass):
    return tuple((d.rank(), d.size(), tuple(d.outer), tuple(d.inner)) for d in c.components)


def enumerate_basic(max_boxes: int) -> Iterator[SkewClass]:
    """Every class of basic skew diagrams with 1..max_boxes boxes, once each."""
    if max_boxes < 1:
        raise ValueError("max_boxes must be at least 1")
    for n in range(1, max_boxes + 1):
        seen = {decay(d) for d in basic_diagrams(n)}
        yield from sorted(seen, key=class_key)


# -- per-class checks ------------------------------------------------------


def _violation(check: str, c: SkewClass, d: SkewDiagram, lhs, rhs, detail: str, ch=None) -> dict:
    return {
        "check": check,
        "class": str(c),
        "diagram": str(d),
        "lhs": lhs,
        "rhs": rhs,
        "detail": detail,
        "decomposition": str(ch) if ch is not None else None,
    }


def lower_cc_violations(c: SkewClass, decomposer: Decomposer = decompose) -> list[dict]:
    d = c.arrangement()
    n = delta_value(c)
    ch = decomposer(d)
    a, b = cc_type(ch)
    out = []
    if a < p_count(n):
        out.append(_violation("lower_cc", c, d, a, p_count(n), f"components < p_{n}", ch))
    if b < f_count(n):
        out.append(_violation("lower_cc", c, d, b, f_count(n), f"constituents < f_{n}", ch))
    return out


def check_lower_cc(c) -> bool:
    return not lower_cc_violations(skew_class(c))


def splitting(d: SkewDiagram) -> tuple[SkewDiagram, SkewDiagram]:
    """``A = (λ_1-2, λ_l-1)/(μ_1-1)`` and ``B = (λ_2..λ_{l-1})/(μ_2..μ_m)``."""
    lam, mu = d.outer, d.inner
    a = SkewDiagram(Partition((lam[0] - 2, lam[-1] - 1)), Partition((mu[0] - 1,)))
    b = SkewDiagram(Partition(lam[1:-1]), Partition(mu[1:]))
    return a, b


def pair_bound_violations(c: SkewClass, decomposer: Decomposer = decompose) -> list[dict]:
    n = delta_value(c)
    if n < 2:
        raise HypothesisNotMet(f"delta value {n} < 2")
    out = []
    for _, d in c.arrangements():
        ch = decomposer(d)
        pairs = one_box_pairs(ch)
        if pairs < g_count(n):
            out.append(_violation("pairs", c, d, pairs, g_count(n), f"pairs < g_{n}", ch))
        if len(d.outer) >= 1 and d.inner:
            a_diag, b_diag = splitting(d)
            bound = max(len(decomposer(a_diag)), len(decomposer(b_diag)))
            if pairs < bound:
                out.append(_violation(
                    "pairs", c, d, pairs, bound,
                    f"pairs < max(a, b) for A={a_diag} B={b_diag}", ch,
                ))
    return out


def check_pair_bounds(c) -> bool:
    """Raises HypothesisNotMet when the delta value is below 2."""
    return not pair_bound_violations(skew_class(c))


def upper_bound_violations(c: SkewClass, decomposer: Decomposer = decompose) -> list[dict]:
    n = c.size()
    out = []
    for _, d in c.arrangements():
        ch = decomposer(d)
        comps, consts = cc_type(ch)
        pairs = one_box_pairs(ch)
        if pairs > g_count(n):
            out.append(_violation("upper", c, d, pairs, g_count(n), f"pairs > g_{n}", ch))
        if comps > p_count(n):
            out.append(_violation("upper", c, d, comps, p_count(n), f"components > p_{n}", ch))
        bound = min(
            f_count(n),
            p_count(n) * count_syt(d.inner),
            p_count(n) * count_syt(bar_complement(d.outer)),
        )
        if consts > bound:
            out.append(_violation("upper", c, d, consts, bound, "constituents > min(...)", ch))
    return out


def check_upper_bounds(c) -> bool:
    return not upper_bound_violations(skew_class(c))


def reduction_violations(c: SkewClass) -> list[dict]:
    d = c.arrangement()
    n = delta_value(c)
    try:
        chain = reduce_to_staircase(c)
    except TheoremViolation as exc:
        return [_violation("reduction", c, d, None, None, str(exc))]
    problems = []
    if chain.end != staircase_class(n):
        problems.append("chain does not end at the staircase class")
    if len(chain) != c.rank() - 2 * n:
        problems.append(f"chain length {len(chain)} != rank - 2n = {c.rank() - 2 * n}")
    prev = c
    for move, cls in chain.steps:
        if delta_value(cls) != n:
            problems.append(f"step {move} changes delta value")
        if cls.rank() != prev.rank() - 1:
            problems.append(f"step {move} does not lower the rank by one")
        prev = cls
    if not verify_chain(chain):
        problems.append("verify_chain rejects the chain")
    return [_violation("reduction", c, d, None, None, p) for p in problems]


def conjugate_diagram(d: SkewDiagram) -> SkewDiagram:
    return SkewDiagram(conjugate(d.outer), conjugate(d.inner))


def symmetry_violations(
    d: SkewDiagram,
    c: SkewClass | None = None,
    decomposer: Decomposer = decompose,
    oracle_max_boxes: int = 7,
) -> list[dict]:
    """Symmetries of ``[d]`` and, for small ``d``, the standard-filling identity."""
    c = c if c is not None else decay(d)
    ch = decomposer(d)
    out = []
    rot = decomposer(rotate(d))
    if rot != ch:
        out.append(_violation("symmetry", c, d, str(rot), str(ch), "rotation", ch))
    conj = decomposer(conjugate_diagram(d))
    if conj != ch.conjugate():
        out.append(_violation("symmetry", c, d, str(conj), str(ch.conjugate()), "conjugation", ch))
    for nu, coeff in ch.terms.items():
        if len(nu) > len(d.outer) or any(a > b for a, b in zip(nu, d.outer)):
            out.append(_violation("symmetry", c, d, coeff, 0, f"[{nu}] not inside outer shape", ch))
            continue
        swapped = lr_coefficient(d.outer, nu, d.inner)
        if swapped != coeff:
            out.append(_violation("symmetry", c, d, swapped, coeff, f"argument swap at [{nu}]", ch))
    if d.size() <= oracle_max_boxes:
        lhs = sum(coeff * count_syt(nu) for nu, coeff in ch.terms.items())
        rhs = count_syt_skew(d)
        if lhs != rhs:
            out.append(_violation("symmetry", c, d, lhs, rhs, "sum c f^nu != standard fillings", ch))
    return out


# -- monotonicity ------------------------------------------------------------


def _random_triple(rng: random.Random, parts_by_size, max_size: int, nonzero: bool):
    lam = rng.choice(parts_by_size[rng.randint(0, max_size)])
    mu = rng.choice(list(subpartitions(lam)))
    d = SkewDiagram(lam, mu)
    ch = decompose(d)
    if nonzero or rng.random() < 0.8:
        nu = rng.choice(list(ch.terms))
    else:
        nu = rng.choice(parts_by_size[d.size()])
    return lam, mu, nu


def monotonicity_violations(seed: int, samples: int, max_size: int = 7) -> list[dict]:
    rng = random.Random(seed)
    parts_by_size = [list(partitions(k)) for k in range(max_size + 1)]
    out = []
    for i in range(samples):
        lam, mu, nu = _random_triple(rng, parts_by_size, max_size, nonzero=False)
        lam2, mu2, nu2 = _random_triple(rng, parts_by_size, max_size, nonzero=True)
        base = lr_coefficient(lam, mu, nu)
        plus = lr_coefficient(part_sum(lam, lam2), part_sum(mu, mu2), part_sum(nu, nu2))
        union = lr_coefficient(part_union(lam, lam2), part_union(mu, mu2), part_union(nu, nu2))
        for form, value in (("+", plus), ("union", union)):
            if base > value:
                out.append({
                    "check": "monotonicity",
                    "sample": i,
                    "form": form,
                    "triple": [list(lam), list(mu), list(nu)],
                    "added": [list(lam2), list(mu2), list(nu2)],
                    "lhs": base,
                    "rhs": value,
                })
    return out


def check_monotonicity(seed: int, samples: int) -> bool:
    return not monotonicity_violations(seed, samples)


# -- sweep -------------------------------------------------------------------


def _run_shard(args) -> dict[str, tuple[int, int, list, float]]:
    """Run the class checks on one shard; values are (examined, skipped, violations, ms)."""
    classes, checks, oracle_max_boxes, decomposer = args
    results = {name: [0, 0, [], 0.0] for name in checks}
    for idx, c in classes:
        for name in checks:
            t0 = time.perf_counter()
            entry = results[name]
            try:
                if name == "lower_cc":
                    found = lower_cc_violations(c, decomposer)
                elif name == "pairs":
                    found = pair_bound_violations(c, decomposer)
                elif name == "upper":
                    found = upper_bound_violations(c, decomposer)
                elif name == "reduction":
                    found = reduction_violations(c)
                else:
                    found = symmetry_violations(c.arrangement(), c, decomposer, oracle_max_boxes)
                entry[0] += 1
            except HypothesisNotMet:
                entry[1] += 1
                found = []
            entry[2].extend((idx, v) for v in found)
            entry[3] += (time.perf_counter() - t0) * 1000
    return results


def _shard_of(c: SkewClass, jobs: int) -> int:
    return zlib.crc32(str(c).encode()) % jobs


def run_suite(cfg: SweepConfig, decomposer: Decomposer = decompose) -> Report:
    """Run the selected checks; the report content depends only on ``cfg``.

    ``decomposer`` exists so the harness can be fed a faulty decomposition in
    self-tests; it must be picklable when ``parallel_jobs > 1``.
    """
    class_checks = [name for name in CLASS_CHECKS if name in cfg.checks]
    results: list[CheckResult] = []
    if class_checks:
        t0 = time.perf_counter()
        classes = list(enumerate(enumerate_basic(cfg.max_boxes)))
        log.info("enumerated %d classes in %.1f s", len(classes), time.perf_counter() - t0)
        jobs = max(1, cfg.parallel_jobs)
        shards = [[] for _ in range(jobs)]
        for idx, c in classes:
            shards[_shard_of(c, jobs)].append((idx, c))
        tasks = [(shard, class_checks, cfg.oracle_max_boxes, decomposer) for shard in shards]
        if jobs == 1:
            partial = [_run_shard(tasks[0])]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                partial = list(pool.map(_run_shard, tasks))
        for name in class_checks:
            merged = CheckResult(name)
            found = []
            for part in partial:
                examined, skipped, violations, millis = part[name]
                merged.examined += examined
                merged.skipped += skipped
                merged.millis += millis
                found.extend(violations)
            merged.violations = [v for _, v in sorted(found, key=lambda iv: iv[0])]
            results.append(merged)
    if "monotonicity" in cfg.checks:
        t0 = time.perf_counter()
        violations = monotonicity_violations(cfg.sample_seed, cfg.samples)
        results.append(CheckResult(
            "monotonicity", cfg.samples, 0, violations, (time.perf_counter() - t0) * 1000
        ))
    return Report(cfg, results)
