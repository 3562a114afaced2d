"""Abel-type set maps on blocks, partition sums, and tail forests."""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest

from setmaps.abel import (
    BlockPartition,
    abel_general_setmap,
    abel_poly,
    abel_setmap,
    count_tail_forests,
    verify_closed_form_partition_sum,
    verify_forest_coefficients,
)
from setmaps.expansions import check_binomial_type
from setmaps.ring import CapExceeded, SetMap
from setmaps.umbral import AbelPolynomials, Poly


def size_vectors(max_blocks, max_size):
    for count in range(1, max_blocks + 1):
        yield from combinations_with_replacement(range(1, max_size + 1), count)


# ---------------------------------------------------------------------------
# the closed-form map
# ---------------------------------------------------------------------------


def test_block_partition_validation():
    with pytest.raises(ValueError):
        BlockPartition((2, 0))
    bp = BlockPartition((2, 1, 3))
    assert bp.block_count == 3 and bp.weight == 6
    assert bp.subset_weight(0b101) == 5
    assert len(bp.elements()) == 6


def test_single_block_gives_x():
    for size in (1, 2, 5):
        assert abel_poly(BlockPartition((size,)), 1) == Poly.x()


def test_two_singleton_blocks_full_set():
    # x(x + 2) at weight 2, two blocks
    assert abel_poly(BlockPartition((1, 1)), 0b11) == Poly((0, 2, 1))


def test_sizes_two_one_full_set():
    # x(x + 3) at weight 3, two blocks
    assert abel_poly(BlockPartition((2, 1)), 0b11) == Poly((0, 3, 1))


def test_empty_subset_value_is_one():
    assert abel_poly(BlockPartition((2, 1)), 0) == Poly.one()


def test_abel_setmap_is_binomial_type():
    for sizes in size_vectors(4, 3):
        assert check_binomial_type(abel_setmap(BlockPartition(sizes)))


def test_abel_setmap_cap():
    with pytest.raises(CapExceeded):
        abel_setmap(BlockPartition((1,) * 13))


# ---------------------------------------------------------------------------
# the general additive-weight map
# ---------------------------------------------------------------------------


def additive_map(n, singleton_values):
    def value(S):
        total = Fraction(0)
        for v in range(n):
            if (S >> v) & 1:
                total += Fraction(singleton_values[v])
        return total

    return SetMap.from_function(n, value)


def test_general_map_with_zero_weights_is_monomials():
    p = abel_general_setmap(additive_map(3, (0, 0, 0)))
    for S in range(8):
        assert p[S] == Poly.monomial(S.bit_count())


def test_general_map_diagonal_is_abel_sequence():
    # constant singleton weight -a turns the diagonal into x(x - a n)^(n-1)
    a = Fraction(3, 2)
    n = 4
    p = abel_general_setmap(additive_map(n, (-a,) * n))
    fam = AbelPolynomials(a)
    for S in range(1 << n):
        assert p[S] == fam.poly(S.bit_count())


def test_general_map_reproduces_block_map():
    sizes = (2, 1, 3)
    bp = BlockPartition(sizes)
    p = abel_general_setmap(additive_map(len(sizes), sizes))
    assert p == abel_setmap(bp)


def test_general_map_is_binomial_type():
    p = abel_general_setmap(additive_map(4, (1, -2, Fraction(1, 2), 0)))
    assert check_binomial_type(p)


def test_general_map_rejects_non_additive_alpha():
    table = [Fraction(0)] * 8
    table[0b11] = Fraction(5)
    with pytest.raises(ValueError, match="additive"):
        abel_general_setmap(SetMap(3, table))


# ---------------------------------------------------------------------------
# partition-sum identities
# ---------------------------------------------------------------------------


def test_closed_form_partition_sum_single_block():
    assert verify_closed_form_partition_sum(BlockPartition((3,)))


def test_closed_form_partition_sum_two_singletons_by_hand():
    # x^2 * 1 * 1 + x * 2^1 = x(x + 2)
    assert verify_closed_form_partition_sum(BlockPartition((1, 1)))


def test_closed_form_partition_sum_sweep():
    for sizes in size_vectors(7, 3):
        assert verify_closed_form_partition_sum(BlockPartition(sizes))


def test_forest_coefficients_hand_values():
    # two singletons, k=1: C(1,0) * 2 = 2 = the single one-block term
    assert verify_forest_coefficients(BlockPartition((1, 1)), k=1)
    # sizes (2,1), k=1: both sides 3
    assert verify_forest_coefficients(BlockPartition((2, 1)), k=1)
    # k = n: both sides 1
    assert verify_forest_coefficients(BlockPartition((2, 2, 1)), k=3)


def test_forest_coefficients_sweep_all_k():
    for sizes in size_vectors(7, 3):
        assert verify_forest_coefficients(BlockPartition(sizes))


def test_forest_coefficients_match_polynomial_coefficients():
    # the x^k coefficient of the closed form is the k-block partition sum
    for sizes in size_vectors(4, 3):
        bp = BlockPartition(sizes)
        n = bp.block_count
        poly = abel_poly(bp, bp.full_mask)
        for k in range(1, n + 1):
            assert poly.coefficient(k) == comb(n - 1, k - 1) * bp.weight ** (n - k)


def test_forest_coefficients_rejects_bad_k():
    with pytest.raises(ValueError):
        verify_forest_coefficients(BlockPartition((1, 1)), k=3)
    with pytest.raises(ValueError):
        verify_forest_coefficients(BlockPartition((1, 1)), k=0)


def test_partition_sum_cap():
    with pytest.raises(CapExceeded):
        verify_closed_form_partition_sum(BlockPartition((1,) * 11))


# ---------------------------------------------------------------------------
# tail forests
# ---------------------------------------------------------------------------


def test_tail_forest_empty_forest():
    assert count_tail_forests(BlockPartition((2, 1, 1)), 3) == 1


def test_tail_forest_two_singletons():
    # 2 origin choices x 2 targets, self-targets loop: 2 survive
    assert count_tail_forests(BlockPartition((1, 1)), 1) == 2


def test_tail_forest_sizes_two_one():
    assert count_tail_forests(BlockPartition((2, 1)), 1) == 3


def test_tail_forest_counts_match_closed_form():
    for sizes in size_vectors(4, 4):
        bp = BlockPartition(sizes)
        if bp.weight > 8:
            continue
        n = bp.block_count
        for k in range(1, n + 1):
            expected = comb(n - 1, k - 1) * bp.weight ** (n - k)
            assert count_tail_forests(bp, k) == expected


def test_tail_forest_caps_and_validation():
    with pytest.raises(CapExceeded):
        count_tail_forests(BlockPartition((1,) * 6), 1)
    with pytest.raises(CapExceeded):
        count_tail_forests(BlockPartition((9,)), 1)
    with pytest.raises(ValueError):
        count_tail_forests(BlockPartition((1, 1)), 0)
