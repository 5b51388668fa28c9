import json

import pytest

from oracles import decay_components, normalize, skew_box_sets_up_to_translation
from skewposet.diagrams import decay, skew, staircase, staircase_class
from skewposet.errors import HypothesisNotMet
from skewposet.lrrule import SkewCharacter, decompose
from skewposet.verifier import (
    ALL_CHECKS,
    Report,
    SweepConfig,
    basic_diagrams,
    check_lower_cc,
    check_monotonicity,
    check_pair_bounds,
    check_upper_bounds,
    enumerate_basic,
    lower_cc_violations,
    monotonicity_violations,
    pair_bound_violations,
    reduction_violations,
    run_suite,
    splitting,
    symmetry_violations,
    upper_bound_violations,
)

FOUR_THREE = skew((4, 3, 2, 1), (2, 2))


def shrunk_decompose(d):
    """Drops the largest constituent: a deliberately broken decomposition."""
    ch = decompose(d)
    terms = dict(ch.terms)
    if len(terms) > 1:
        terms.pop(next(iter(terms)))
    return SkewCharacter(terms, ch.degree)


class TestEnumeration:
    def test_one_and_two_boxes(self):
        assert list(enumerate_basic(1)) == [decay(skew((1,)))]
        two = set(enumerate_basic(2)) - set(enumerate_basic(1))
        assert two == {decay(skew((2,))), decay(skew((1, 1))), staircase_class(2)}

    def test_diagrams_match_brute_force(self):
        for n in range(1, 6):
            ours = {(tuple(d.outer), tuple(d.inner)) for d in basic_diagrams(n)}
            assert ours == skew_box_sets_up_to_translation(n)

    def test_class_counts(self):
        expected_diagrams = [1, 3, 9, 28, 87, 272]
        expected_classes = [1, 3, 7, 19, 47, 125]
        for n in range(1, 7):
            diagrams = list(basic_diagrams(n))
            assert len(diagrams) == len(set(diagrams)) == expected_diagrams[n - 1]
            assert len({decay(d) for d in diagrams}) == expected_classes[n - 1]

    def test_classes_are_component_multisets(self):
        # classes with equal component box sets (up to translation) are equal
        for n in range(1, 6):
            by_shape = {}
            for d in basic_diagrams(n):
                key = tuple(sorted(
                    tuple(sorted(normalize(comp))) for comp in decay_components(d.boxes)
                ))
                by_shape.setdefault(key, set()).add(decay(d))
            assert all(len(v) == 1 for v in by_shape.values())

    def test_deterministic(self):
        assert list(enumerate_basic(5)) == list(enumerate_basic(5))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            list(enumerate_basic(0))


class TestChecks:
    def test_four_three(self):
        c = decay(FOUR_THREE)
        assert check_lower_cc(FOUR_THREE)
        assert check_pair_bounds(FOUR_THREE)
        assert check_upper_bounds(FOUR_THREE)
        assert reduction_violations(c) == []
        assert symmetry_violations(FOUR_THREE) == []

    def test_splitting(self):
        a, b = splitting(skew((4, 3, 2, 1), (2, 2)))
        assert a == skew((2,), (1,))
        assert b == skew((3, 2), (2,))

    @pytest.mark.parametrize("n", range(2, 6))
    def test_staircase_is_tight(self, n):
        c = staircase_class(n)
        d = skew(staircase(n), staircase(n - 1))
        # the staircase meets the lower and upper bounds with equality
        assert lower_cc_violations(c) == []
        assert upper_bound_violations(c) == []
        assert pair_bound_violations(c) == []
        shrunk = lower_cc_violations(c, shrunk_decompose)
        assert shrunk and shrunk[0]["diagram"] == str(d)

    def test_straight_shape_skips_pairs(self):
        with pytest.raises(HypothesisNotMet):
            check_pair_bounds(skew((3, 1)))
        with pytest.raises(HypothesisNotMet):
            pair_bound_violations(decay(skew((1,))))

    def test_violation_payload(self):
        found = lower_cc_violations(staircase_class(3), shrunk_decompose)
        assert set(found[0]) == {"check", "class", "diagram", "lhs", "rhs", "detail", "decomposition"}
        assert found[0]["lhs"] < found[0]["rhs"]

    def test_monotonicity_sample(self):
        assert check_monotonicity(seed=3, samples=50)
        assert monotonicity_violations(7, 20) == monotonicity_violations(7, 20)


class TestSweep:
    def test_config_validation(self):
        with pytest.raises(ValueError):
            SweepConfig(max_boxes=0)
        with pytest.raises(ValueError):
            SweepConfig(checks=("lower_cc", "nonsense"))

    def test_single_box(self):
        report = run_suite(SweepConfig(max_boxes=1, samples=10))
        assert report.passed
        names = [c.name for c in report.checks]
        assert names == list(ALL_CHECKS)
        pairs = report.checks[names.index("pairs")]
        assert (pairs.examined, pairs.skipped) == (0, 1)

    def test_small_sweep_passes(self):
        report = run_suite(SweepConfig(max_boxes=5, samples=50))
        assert report.passed
        assert all(c.examined for c in report.checks if c.name != "pairs")

    def test_fault_injection_is_caught(self):
        cfg = SweepConfig(max_boxes=4, checks=("lower_cc", "upper"))
        report = run_suite(cfg, decomposer=shrunk_decompose)
        assert not report.passed
        lower = report.checks[0]
        assert any(v["class"] == str(staircase_class(3)) for v in lower.violations)
        assert "FAIL" in report.to_text()
        assert json.loads(report.to_json())["pass"] is False

    def test_jobs_do_not_change_report(self):
        base = SweepConfig(max_boxes=5, checks=("lower_cc", "pairs", "upper"), samples=0)
        faulty = [
            run_suite(SweepConfig(**{**base.__dict__, "parallel_jobs": j}), shrunk_decompose)
            for j in (1, 2)
        ]
        one, two = (r.to_dict(timings=False) for r in faulty)
        one["config"].pop("parallel_jobs")
        two["config"].pop("parallel_jobs")
        assert one == two
        assert one["checks"][0]["violations"]

    def test_report_json_shape(self):
        report = run_suite(SweepConfig(max_boxes=2, samples=5))
        data = json.loads(report.to_json())
        assert set(data) == {"config", "checks", "pass"}
        assert set(data["checks"][0]) == {"name", "examined", "skipped", "violations", "millis"}
        assert isinstance(report, Report)
