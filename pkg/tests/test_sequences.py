import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_one_box, brute_partitions, colored_partitions, transpose_partition
from skewposet.diagrams import count_syt
from skewposet.errors import MalformedPair
from skewposet.sequences import (
    BarPartition,
    BoxPair,
    bar_partitions,
    barp_count,
    barp_gf,
    bijection_forward,
    bijection_inverse,
    box_pairs,
    euler_p,
    f_count,
    format_table,
    g_count,
    involutions,
    p_count,
    table_rows,
)

G = [0, 1, 2, 5, 9, 17, 28, 47, 73, 114, 170, 253, 365]
P = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101]
F = [1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152, 568504]
# coefficients of the two-coloured partition series, x^0..x^20
BARP = [1, 2, 5, 9, 17, 28, 47, 73, 114, 170, 253, 365, 525, 738, 1033, 1422, 1948, 2634, 3545, 4721, 6259]


def test_table_values():
    assert table_rows(13) == {"g": G, "p": P, "f": F}


def test_p_matches_oracle():
    for n in range(1, 11):
        assert p_count(n) == euler_p(n) == len(brute_partitions(n))


def test_f_counts_involutions_and_tableaux():
    for n in range(1, 10):
        assert f_count(n) == involutions(n) == sum(count_syt(p) for p in brute_partitions(n))


def test_g_matches_oracle():
    for n in range(1, 9):
        parts = sorted(brute_partitions(n))
        brute = sum(1 for i, a in enumerate(parts) for b in parts[i + 1 :] if brute_one_box(a, b))
        assert g_count(n) == brute == G[n - 1]


def test_g_is_conjugation_invariant():
    # conjugating both partitions preserves the one-box relation
    for n in range(2, 8):
        for pair in box_pairs(n):
            assert brute_one_box(transpose_partition(pair.nu1), transpose_partition(pair.nu2))


def test_format_table():
    lines = format_table(4).splitlines()
    assert lines[0].split() == ["n:", "1", "2", "3", "4"]
    assert lines[1].split() == ["g_n:", "0", "1", "2", "5"]
    assert len({len(line) for line in lines}) == 1


class TestBarPartitions:
    def test_gf_coefficients(self):
        assert barp_gf(20) == BARP

    def test_gf_by_convolution(self):
        # p(n - k) ordinary parts times the k//2 + 1 ways to write k with 1' and 2'
        p = [1] + [euler_p(n) for n in range(1, 21)]
        assert BARP == [sum(p[n - k] * (k // 2 + 1) for k in range(n + 1)) for n in range(21)]

    def test_enumeration_matches_oracle(self):
        for n in range(0, 8):
            assert barp_count(n) == len(colored_partitions(n)) == BARP[n]

    def test_shifted_g(self):
        for n in range(0, 10):
            assert barp_count(n) == g_count(n + 2)

    def test_text(self):
        assert str(BarPartition((3, 2, 1), n1=1, n2=1)) == "3,2',2,1,1'"
        assert str(BarPartition(())) == "()"

    def test_negative(self):
        with pytest.raises(ValueError):
            BarPartition((), n1=-1)


TABLE_2 = {
    BarPartition((2,)): ((2, 2), (2, 1, 1)),
    BarPartition((), n2=1): ((3, 1), (2, 2)),
    BarPartition((1, 1)): ((2, 1, 1), (1, 1, 1, 1)),
    BarPartition((1,), n1=1): ((3, 1), (2, 1, 1)),
    BarPartition((), n1=2): ((4,), (3, 1)),
}


class TestBijection:
    def test_table_two(self):
        assert set(bar_partitions(2)) == set(TABLE_2)
        for b, (nu1, nu2) in TABLE_2.items():
            pair = bijection_forward(b)
            assert (tuple(pair.nu1), tuple(pair.nu2)) == (nu1, nu2)
            assert bijection_inverse(pair) == b

    @pytest.mark.parametrize("n", range(0, 16))
    def test_bijective(self, n):
        images = [bijection_forward(b) for b in bar_partitions(n)]
        assert all(p.is_valid() and p.weight == n + 2 for p in images)
        assert len(set(images)) == len(images)
        assert set(images) == set(box_pairs(n + 2))
        for b, p in zip(bar_partitions(n), images):
            assert bijection_inverse(p) == b

    @given(st.integers(0, 12).flatmap(lambda n: st.sampled_from(list(box_pairs(n + 2)))))
    @settings(max_examples=50, deadline=None)
    def test_inverse_then_forward(self, pair):
        assert bijection_forward(bijection_inverse(pair)) == pair

    @pytest.mark.parametrize(
        "nu1,nu2",
        [((3,), (3,)), ((2, 1), (3,)), ((4, 1), (2, 2, 1)), ((3,), (1, 1))],
    )
    def test_malformed(self, nu1, nu2):
        with pytest.raises(MalformedPair):
            bijection_inverse(BoxPair(nu1, nu2))
