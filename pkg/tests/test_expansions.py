"""Expansion theorem, coefficient interpretations, and power identity."""

from fractions import Fraction
from math import factorial

import pytest

from setmaps.expansions import (
    check_binomial_type,
    expand,
    expansion_reconstructs,
    partition_sum,
    verify_abel_one_expansion,
    verify_chromatic_expansion,
    verify_power_identity,
    verify_rising_orientation_pairs,
    verify_stable_count_expansion,
    verify_stanley_evaluation,
)
from setmaps.graphs import Graph, chromatic_poly, chromatic_setmap
from setmaps.ring import CapExceeded, SetMap, compose, partitions_of
from setmaps.umbral import (
    AbelPolynomials,
    FallingFactorials,
    Functional,
    LogPolynomials,
    Monomials,
    Poly,
    RisingFactorials,
    standard_families,
)

from _corpus import graphs_through, random_graphs
from conftest import random_fraction, random_table


def monomial_type_map(n: int) -> SetMap:
    return SetMap.from_function(n, lambda S: Poly.monomial(S.bit_count()))


# ---------------------------------------------------------------------------
# binomial-type checking
# ---------------------------------------------------------------------------


def test_chromatic_maps_are_binomial_type():
    for g in graphs_through(4):
        assert check_binomial_type(chromatic_setmap(g))


def test_zero_map_is_binomial_type():
    zero = SetMap.constant(3, Poly.zero())
    assert check_binomial_type(zero)


def test_perturbed_power_map_is_not_binomial_type():
    p = monomial_type_map(3)
    assert check_binomial_type(p)
    table = list(p.table)
    table[0b011] = table[0b011] + 1
    assert not check_binomial_type(SetMap(3, table))


def test_binomial_check_cap():
    with pytest.raises(CapExceeded):
        check_binomial_type(monomial_type_map(8))


# ---------------------------------------------------------------------------
# expansion and its aggregates
# ---------------------------------------------------------------------------


def test_k2_monomial_coefficients_by_hand():
    # derivative-at-0 coefficients: 1 on singletons, -1 on the pair, and
    # x^2 * 1 + x * (-1) rebuilds the chromatic polynomial
    exp = expand(chromatic_setmap(Graph.complete(2)), None, Monomials())
    assert exp.coeffs[0b01] == 1
    assert exp.coeffs[0b10] == 1
    assert exp.coeffs[0b11] == -1
    assert exp.coeffs[0] == 0
    assert exp.reconstruct() == Poly((0, -1, 1))


def test_expand_empty_subset_reconstructs_one():
    exp = expand(chromatic_setmap(Graph.complete(2)), 0, Monomials())
    assert exp.by_length() == (Fraction(1),)
    assert exp.reconstruct() == Poly.one()


def test_k2_falling_coefficients_are_stability_indicators():
    exp = expand(chromatic_setmap(Graph.complete(2)), None, FallingFactorials(1))
    assert exp.coeffs[0b01] == 1 and exp.coeffs[0b10] == 1
    assert exp.coeffs[0b11] == 0  # the edge makes the pair unstable
    assert exp.by_length() == (0, 0, 1)
    assert exp.reconstruct() == Poly((0, -1, 1))


def test_k2_rising_by_length():
    exp = expand(chromatic_setmap(Graph.complete(2)), None, RisingFactorials())
    assert exp.by_length() == (0, -2, 1)


def test_top_length_coefficient_is_singleton_product():
    for g in graphs_through(3):
        p = chromatic_setmap(g)
        for fam in (Monomials(), RisingFactorials(), LogPolynomials()):
            exp = expand(p, None, fam)
            cs = exp.by_length()
            prod = Fraction(1)
            for v in range(g.n):
                prod *= exp.coeffs[1 << v]
            assert cs[g.n] == prod


def test_expand_rejects_trivial_map():
    trivial = SetMap.constant(2, Poly.zero())
    with pytest.raises(ValueError, match="nontrivial"):
        expand(trivial, None, Monomials())


def test_expand_subset_cap():
    with pytest.raises(CapExceeded):
        expand(monomial_type_map(4), None, Monomials(), cap=3)


def test_reconstruct_matches_direct_partition_sum():
    # the by-length regrouping must agree with the raw per-partition sum
    for g in (Graph.complete(3), Graph.path(4), Graph.cycle(4)):
        p = chromatic_setmap(g)
        for fam in (RisingFactorials(), AbelPolynomials(1), LogPolynomials()):
            exp = expand(p, None, fam)
            direct = partition_sum(p.full_mask, lambda T: exp.coeffs[T], fam.poly)
            assert exp.reconstruct() == direct


def test_restricted_reconstruction_shares_one_coefficient_pass():
    g = Graph.cycle(4)
    p = chromatic_setmap(g)
    exp = expand(p, None, RisingFactorials())
    for S in range(1 << g.n):
        assert exp.reconstruct(S) == p[S]
    with pytest.raises(ValueError, match="contained"):
        expand(p, 0b0011, RisingFactorials()).by_length(0b1100)


def test_mix_reconstruction_all_families_small_corpus():
    families = standard_families() + (AbelPolynomials(-1),)
    corpus = list(graphs_through(4)) + random_graphs(6, 8, seed=0x515)
    for g in corpus:
        p = chromatic_setmap(g)
        for fam in families:
            exp = expand(p, None, fam)
            for S in range(1 << g.n):
                assert exp.reconstruct(S) == p[S]


def test_mix_reconstruction_on_abel_type_map():
    # a binomial-type map that is not a chromatic set map
    from setmaps.abel import BlockPartition, abel_setmap

    p = abel_setmap(BlockPartition((2, 1, 3)))
    for fam in (Monomials(), RisingFactorials(), FallingFactorials(2)):
        assert expansion_reconstructs(p, fam)


# ---------------------------------------------------------------------------
# functional action on binomial-type maps
# ---------------------------------------------------------------------------


def test_functional_action_factorizes(rng):
    # L M p = (L p) * (M p) as set maps, for the chromatic map
    for g in (Graph.complete(3), Graph.path(4), Graph.cycle(4)):
        p = chromatic_setmap(g)
        bound = g.n
        for _ in range(20):
            L = Functional([random_fraction(rng) for _ in range(bound + 1)])
            M = Functional([random_fraction(rng) for _ in range(bound + 1)])
            lhs = p.map_values(L * M)
            rhs = p.map_values(L) * p.map_values(M)
            assert lhs == rhs


def test_functional_powers_count_ordered_partitions():
    # (A^k) p_S = k! sum over k-block partitions of prod A p_T
    for g in list(graphs_through(4))[:10] + random_graphs(5, 3, seed=0xAEC):
        p = chromatic_setmap(g)
        fam = RisingFactorials()
        exp = expand(p, None, fam)
        bound = max(1, max(v.degree for v in p.table))
        A = fam.delta(bound)
        for k in range(5):
            Ak = A**k
            for S in range(1 << g.n):
                total = Fraction(0)
                for sigma in partitions_of(S):
                    if len(sigma) != k:
                        continue
                    prod = Fraction(1)
                    for block in sigma:
                        prod *= exp.coeffs[block]
                    total += prod
                assert Ak(p[S]) == factorial(k) * total


def test_theta_bijection_round_trip(rng):
    # composing a basis with a rational map and applying its functional
    # entrywise must invert each other
    for fam in standard_families():
        for _ in range(5):
            n = rng.randint(1, 5)
            table = random_table(rng, n, first=0)
            h = SetMap(n, table)
            polys = [fam.poly(k) for k in range(n + 1)]
            p = compose(polys, h)
            assert check_binomial_type(p)
            A = fam.delta(max(1, n))
            assert p.map_values(A) == h
            assert p[0] == Poly.one()


# ---------------------------------------------------------------------------
# chromatic coefficient interpretations
# ---------------------------------------------------------------------------


def test_rising_orientation_pairs_k2_by_hand():
    assert verify_rising_orientation_pairs(Graph.complete(2))


def test_rising_orientation_pairs_edgeless_and_k3():
    assert verify_rising_orientation_pairs(Graph.edgeless(3))
    assert verify_rising_orientation_pairs(Graph.complete(3))


def test_rising_orientation_pairs_small_corpus():
    for g in graphs_through(4):
        for S in range(1 << g.n):
            assert verify_rising_orientation_pairs(g, S)


def test_abel_one_expansion_examples():
    assert verify_abel_one_expansion(Graph.complete(2))
    assert verify_abel_one_expansion(Graph.complete(3))
    assert verify_abel_one_expansion(Graph(1), 1)  # singleton: x * chi'(1)


def test_stable_count_expansion_examples():
    assert verify_stable_count_expansion(Graph.complete(2))
    assert verify_stable_count_expansion(Graph.path(3))
    assert verify_stable_count_expansion(Graph(1), 1)


def test_chromatic_expansion_modes():
    k2 = Graph.complete(2)
    assert verify_chromatic_expansion(k2, None, 0, "derivative")
    assert verify_chromatic_expansion(k2, None, 1, "evaluation")
    k3 = Graph.complete(3)
    assert verify_chromatic_expansion(k3, None, -1, "evaluation")
    assert verify_chromatic_expansion(k3, None, Fraction(1, 2), "derivative")


def test_chromatic_expansion_rejects_zero_evaluation_point():
    with pytest.raises(ValueError, match="nonzero"):
        verify_chromatic_expansion(Graph.complete(2), None, 0, "evaluation")
    with pytest.raises(ValueError, match="mode"):
        verify_chromatic_expansion(Graph.complete(2), None, 0, "nonsense")


def test_stanley_verifier_small_corpus():
    for g in graphs_through(4):
        assert verify_stanley_evaluation(g)


# ---------------------------------------------------------------------------
# power identity
# ---------------------------------------------------------------------------


def test_power_identity_trivial_exponent(rng):
    p = chromatic_setmap(Graph.path(3))
    assert verify_power_identity(p, random_fraction(rng), 1)


def test_power_identity_k2_squared():
    # chi table at 2, squared, equals the table at 4: both sides by hand
    p = chromatic_setmap(Graph.complete(2))
    evaluated = p.map_values(lambda q: q(Fraction(2)))
    squared = evaluated * evaluated
    assert squared[3] == Fraction(12) == chromatic_poly(Graph.complete(2))(4)
    assert verify_power_identity(p, 2, 2)


def test_power_identity_k3_cubed():
    assert verify_power_identity(chromatic_setmap(Graph.complete(3)), 1, 3)


def test_power_identity_rejects_bad_exponent():
    p = chromatic_setmap(Graph.complete(2))
    with pytest.raises(ValueError):
        verify_power_identity(p, 2, 0)


def test_power_identity_cap():
    with pytest.raises(CapExceeded):
        verify_power_identity(monomial_type_map(8), 1, 2)
