"""The colon-variable formula against brute-force colons, q, depth and the
depth-zero witness."""

import pytest

from borelstab import (
    GroundSet,
    colon,
    depth_power,
    depth_zero_witness,
    expand_squarefree,
    ideal_power,
    linear_quotient_set,
    max_ideal_in_ass,
    m_in_ass,
    minimalize,
    power_generators,
    q_invariant,
    quotient_profile,
)
from conftest import all_squarefree, mono, sf


class TestLinearQuotientSet:
    def test_worked_positions(self, g3):
        gens = power_generators(sf(g3, 2, 3), 1).generators
        # sorted decreasing: x_1x_2 > x_1x_3 > x_2x_3
        assert linear_quotient_set(gens, 1, 1) == frozenset()
        assert linear_quotient_set(gens, 2, 1) == frozenset({2})
        assert linear_quotient_set(gens, 3, 1) == frozenset({1})

    def test_matches_brute_force(self, g3):
        gens = power_generators(sf(g3, 2, 3), 1).generators
        for i in (2, 3):
            brute = colon(minimalize(gens[: i - 1]), gens[i - 1])
            assert {m.support[0] for m in brute.generators} == set(
                linear_quotient_set(gens, i, 1)
            )

    def test_unsorted_rejected(self, g3):
        gens = list(power_generators(sf(g3, 2, 3), 1).generators)
        gens.reverse()
        with pytest.raises(ValueError):
            linear_quotient_set(gens, 2, 1)

    def test_position_bounds(self, g3):
        gens = power_generators(sf(g3, 2, 3), 1).generators
        with pytest.raises(ValueError):
            linear_quotient_set(gens, 0, 1)
        with pytest.raises(ValueError):
            linear_quotient_set(gens, 4, 1)


class TestQInvariant:
    def test_examples(self, g3):
        assert q_invariant(sf(g3, 2, 3), 1) == 1
        assert q_invariant(sf(g3, 2, 3), 2) == 2
        g1 = GroundSet.contiguous(1)
        assert q_invariant(sf(g1, 1), 5) == 0

    def test_witness_generator_reaches_q(self, g3):
        profile = quotient_profile(sf(g3, 2, 3), 2)
        gens = power_generators(sf(g3, 2, 3), 2).generators
        best = max(range(len(gens)), key=lambda t: len(profile.colon_sets[t]))
        assert gens[best] == mono(g3, x1=1, x2=1, x3=2)


class TestDepth:
    def test_examples(self, g3):
        assert depth_power(sf(g3, 2, 3), 1) == 1
        assert depth_power(sf(g3, 2, 3), 2) == 0
        g2 = GroundSet.contiguous(2)
        assert depth_power(sf(g2, 1, 2), 1) == 1  # principal: q = 0

    def test_depth_non_increasing_in_k(self):
        for n in (2, 3, 4, 5):
            for u in all_squarefree(n):
                values = [depth_power(u, k) for k in (1, 2, 3)]
                assert values == sorted(values, reverse=True), (u, values)


class TestMaxIdealInAss:
    def test_examples(self, g3):
        assert not max_ideal_in_ass(sf(g3, 2, 3), 1)
        assert max_ideal_in_ass(sf(g3, 2, 3), 2)

    def test_min_one_never_associated(self, g5, worked_generator):
        J = expand_squarefree(worked_generator)
        Jk = J
        for k in range(1, 5):
            if k > 1:
                Jk = minimalize(a * b for a in Jk.generators for b in J.generators)
            assert not max_ideal_in_ass(worked_generator, k)
            assert not m_in_ass(Jk)

    def test_negative_branches(self):
        # max(u) < n or min(u) = 1: never associated (formula side, k <= 3)
        for n in (2, 3, 4):
            for u in all_squarefree(n):
                if u.min_index > 1 and u.max_index == n:
                    continue
                if n == 1:
                    continue
                for k in (1, 2, 3):
                    assert not max_ideal_in_ass(u, k), (u, k)

    def test_formula_vs_oracle_small(self):
        for n in (1, 2, 3, 4):
            for u in all_squarefree(n):
                J = expand_squarefree(u)
                for k in (1, 2):
                    assert max_ideal_in_ass(u, k) == m_in_ass(ideal_power(J, k))


class TestDepthZeroWitness:
    def test_worked_example(self, g3):
        assert depth_zero_witness(sf(g3, 2, 3), 2) == mono(g3, x1=1, x2=1, x3=2)

    def test_sparse_example(self, g5):
        got = depth_zero_witness(sf(g5, 2, 5), 2)
        assert got == mono(g5, x1=1, x2=1, x5=2)

    def test_preconditions(self, g3, g5):
        with pytest.raises(ValueError):
            depth_zero_witness(sf(g3, 2, 3), 1)  # k <= r
        with pytest.raises(ValueError):
            depth_zero_witness(sf(g5, 1, 5), 3)  # min(u) = 1
        with pytest.raises(ValueError):
            depth_zero_witness(sf(g5, 2, 4), 3)  # max(u) < n

    def test_single_variable_generator(self):
        g2 = GroundSet.contiguous(2)
        assert depth_zero_witness(sf(g2, 2), 1) == mono(g2, x2=1)


def test_colon_formula_vs_brute_force_small():
    # acceptance covers n <= 5, k <= 2; quick n <= 4 copy here
    for n in range(1, 5):
        for u in all_squarefree(n):
            for k in (1, 2):
                gens = power_generators(u, k).generators
                for i in range(1, len(gens) + 1):
                    fast = linear_quotient_set(gens, i, k)
                    if i == 1:
                        assert fast == frozenset()
                        continue
                    brute = colon(minimalize(gens[: i - 1]), gens[i - 1])
                    assert all(m.degree == 1 for m in brute.generators)
                    assert {m.support[0] for m in brute.generators} == set(fast)
