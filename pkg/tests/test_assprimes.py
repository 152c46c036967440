"""The brute-force oracle: decomposition soundness, witnessed primes,
profiles, persistence and cross-validation."""

import itertools

import pytest

from borelstab import (
    GroundSet,
    Monomial,
    ResourceLimitError,
    VariableSubset,
    ass_profile,
    associated_primes,
    colon,
    cross_validate,
    expand_squarefree,
    ideal_power,
    irreducible_decomposition,
    localize_by_saturation,
    m_in_ass,
    minimalize,
    persistence_scan,
)
from conftest import all_squarefree, box_vectors, ideal, mono, sf


class TestIrreducibleDecomposition:
    def test_single_squarefree_generator(self):
        g2 = GroundSet.contiguous(2)
        comps = irreducible_decomposition(ideal(mono(g2, x1=1, x2=1)))
        assert {c.powers for c in comps} == {((1, 1),), ((2, 1),)}

    def test_embedded_example(self):
        g2 = GroundSet.contiguous(2)
        comps = irreducible_decomposition(
            ideal(mono(g2, x1=2), mono(g2, x1=1, x2=1))
        )
        assert {c.powers for c in comps} == {((1, 1),), ((1, 2), (2, 1))}

    def test_triangle(self, g3):
        comps = irreducible_decomposition(
            ideal(
                mono(g3, x1=1, x2=1), mono(g3, x1=1, x3=1), mono(g3, x2=1, x3=1)
            )
        )
        assert {c.powers for c in comps} == {
            ((1, 1), (2, 1)),
            ((1, 1), (3, 1)),
            ((2, 1), (3, 1)),
        }

    def test_zero_unit_rejected(self, g3):
        with pytest.raises(ValueError):
            irreducible_decomposition(minimalize([], ground=g3))
        with pytest.raises(ValueError):
            irreducible_decomposition(ideal(Monomial.unit(g3)))

    def test_intersection_equals_ideal(self):
        # membership agreement on the bounding box plus a margin of one
        samples = []
        g3 = GroundSet.contiguous(3)
        samples.append(ideal(mono(g3, x1=2), mono(g3, x1=1, x2=1), mono(g3, x2=3)))
        samples.append(ideal_power(expand_squarefree(sf(g3, 2, 3)), 2))
        g4 = GroundSet.contiguous(4)
        samples.append(ideal_power(expand_squarefree(sf(g4, 2, 4)), 2))
        samples.append(ideal(mono(g4, x1=1, x2=2, x3=1), mono(g4, x2=1, x4=2)))
        for J in samples:
            comps = irreducible_decomposition(J)
            bounds = [
                max(g.exponent(i) for g in J.generators) + 1
                for i in J.ground.indices
            ]
            for vec in box_vectors(bounds):
                w = Monomial.from_vector(J.ground, vec)
                assert (w in J) == all(w in c for c in comps), (J, w)

    def test_components_are_irredundant(self):
        g3 = GroundSet.contiguous(3)
        J = ideal_power(expand_squarefree(sf(g3, 2, 3)), 2)
        comps = irreducible_decomposition(J)
        # dropping any single component must strictly enlarge the intersection
        bounds = [
            max(g.exponent(i) for g in J.generators) + 1 for i in J.ground.indices
        ]
        for skip in range(len(comps)):
            rest = [c for t, c in enumerate(comps) if t != skip]
            witness_found = False
            for vec in box_vectors(bounds):
                w = Monomial.from_vector(J.ground, vec)
                if all(w in c for c in rest) and w not in comps[skip]:
                    witness_found = True
                    break
            assert witness_found, f"component {comps[skip]} is redundant"


class TestAssociatedPrimes:
    def test_worked_minimal_primes(self, worked_generator):
        primes = associated_primes(expand_squarefree(worked_generator))
        assert set(primes) == {
            (1,),
            (3, 4),
            (2, 5),
            (2, 4),
            (2, 3),
            (4, 5),
            (3, 5),
        }

    def test_embedded_with_witnesses(self):
        g2 = GroundSet.contiguous(2)
        J = ideal(mono(g2, x1=2), mono(g2, x1=1, x2=1))
        witnessed = associated_primes(J, with_witnesses=True)
        assert set(witnessed) == {(1,), (1, 2)}
        for prime, w in witnessed.items():
            got = colon(J, w)
            assert {m.support[0] for m in got.generators} == set(prime)
            assert all(m.degree == 1 for m in got.generators)

    def test_principal_prime(self, g3):
        assert associated_primes(ideal(mono(g3, x1=1))) == ((1,),)

    def test_witness_soundness_across_small_ideals(self):
        for n in (2, 3):
            for u in all_squarefree(n):
                J = ideal_power(expand_squarefree(u), 2)
                for prime, w in associated_primes(J, with_witnesses=True).items():
                    got = colon(J, w)
                    assert all(m.degree == 1 for m in got.generators)
                    assert {m.support[0] for m in got.generators} == set(prime)


class TestMInAss:
    def test_examples(self, g3):
        J = expand_squarefree(sf(g3, 2, 3))
        assert m_in_ass(ideal_power(J, 2))
        assert not m_in_ass(J)
        g2 = GroundSet.contiguous(2)
        assert not m_in_ass(ideal(mono(g2, x1=1, x2=1)))

    def test_agrees_with_full_prime_list(self):
        for n in (1, 2, 3, 4):
            everything = tuple(range(1, n + 1))
            for u in all_squarefree(n):
                for k in (1, 2):
                    J = ideal_power(expand_squarefree(u), k)
                    assert m_in_ass(J) == (everything in associated_primes(J))

    def test_rejects_improper(self, g3):
        with pytest.raises(ValueError):
            m_in_ass(ideal(Monomial.unit(g3)))


class TestAssProfile:
    def test_worked_sizes(self, worked_generator):
        profile = ass_profile(worked_generator, kmax=3)
        assert [len(profile.primes_at(k)) for k in (1, 2, 3)] == [7, 11, 12]
        chain = [set(profile.primes_at(k)) for k in (1, 2, 3)]
        assert chain[0] < chain[1] < chain[2]
        assert profile.stable_from is None  # growth up to the scanned edge

    def test_stable_immediately(self):
        g1 = GroundSet.contiguous(1)
        profile = ass_profile(sf(g1, 1), kmax=3)
        assert all(profile.primes_at(k) == ((1,),) for k in (1, 2, 3))
        assert profile.stable_from == 1

    def test_maximal_appears_at_two(self, g3):
        profile = ass_profile(sf(g3, 2, 3), kmax=2)
        assert (1, 2, 3) not in profile.primes_at(1)
        assert (1, 2, 3) in profile.primes_at(2)

    def test_witnesses_recorded(self, g3):
        profile = ass_profile(sf(g3, 2, 3), kmax=2)
        for k in (1, 2):
            J = ideal_power(expand_squarefree(sf(g3, 2, 3)), k)
            for prime, w in profile.witnesses_by_power[k - 1]:
                got = colon(J, w)
                assert {m.support[0] for m in got.generators} == set(prime)


class TestPersistence:
    def test_worked_example(self, worked_generator):
        assert persistence_scan(worked_generator, kmax=3).ok

    def test_exhaustive_tiny(self):
        for n in (1, 2, 3):
            for u in all_squarefree(n):
                assert persistence_scan(u, kmax=3).ok

    def test_trivial(self):
        g1 = GroundSet.contiguous(1)
        assert persistence_scan(sf(g1, 1), kmax=3).ok


class TestCrossValidate:
    def test_index_two_case(self, g5):
        report = cross_validate(sf(g5, 2, 4, 5), kmax=2)
        assert report.depth_checks == 2
        assert report.sharpness_checks > 0

    def test_bound_case(self, g4):
        # u = x_2 x_3 x_4: the index reaches the degree, sharp at k = 3
        report = cross_validate(sf(g4, 2, 3, 4), kmax=3)
        assert report.membership_checks == 3 * 2**4

    def test_exhaustive_sweep(self):
        for n in (1, 2, 3, 4):
            for u in all_squarefree(n):
                cross_validate(u, kmax=3)

    def test_sampled_width_five(self, g5):
        for idx in [(2, 3), (2, 4, 5), (3, 4, 5), (1, 2, 5)]:
            cross_validate(sf(g5, *idx), kmax=2)

    def test_worked_example_full_depth(self, worked_generator):
        report = cross_validate(worked_generator, kmax=3)
        assert report.depth_checks == 3
        assert report.sharpness_checks == 12  # one per stable-set member


class TestLocalizationCommutesWithAss:
    def test_exhaustive(self):
        for n in (2, 3, 4, 5):
            g = GroundSet.contiguous(n)
            for u in all_squarefree(n):
                J = expand_squarefree(u)
                for k in (1, 2):
                    Jk = ideal_power(J, k)
                    primes = set(associated_primes(Jk))
                    for size in range(1, n):
                        for members in itertools.combinations(range(1, n + 1), size):
                            A = VariableSubset(g, members)
                            local = localize_by_saturation(J, A)
                            if local.is_unit:
                                inside = False
                            else:
                                inside = m_in_ass(ideal_power(local, k))
                            assert (A.complement in primes) == inside, (u, members, k)


def _primes_by_colon_enumeration(J):
    """Every monomial prime arising as an exact colon J : w over the box.

    The most literal reading of the definition; stronger than per-prime
    witness confirmation because it would also expose primes the
    decomposition route missed.
    """
    ground = J.ground
    bounds = [max(g.exponent(i) for g in J.generators) for i in ground.indices]
    found = set()
    for vec in box_vectors(bounds):
        w = Monomial.from_vector(ground, vec)
        q = colon(J, w)
        if q.generators and all(m.degree == 1 for m in q.generators):
            found.add(tuple(sorted(m.support[0] for m in q.generators)))
    return found


def test_decomposition_route_equals_colon_enumeration():
    import random

    rng = random.Random(99)
    checked = 0
    while checked < 100:
        n = rng.randint(1, 4)
        g = GroundSet.contiguous(n)
        gens = []
        for _ in range(rng.randint(1, 5)):
            vec = tuple(rng.randint(0, 3) for _ in range(n))
            if any(vec):
                gens.append(Monomial.from_vector(g, vec))
        if not gens:
            continue
        J = minimalize(gens)
        if J.is_unit:
            continue
        assert set(associated_primes(J)) == _primes_by_colon_enumeration(J), J
        checked += 1


def test_generator_ceiling(g3):
    J = expand_squarefree(sf(g3, 2, 3))
    with pytest.raises(ResourceLimitError):
        irreducible_decomposition(J, ceiling=2)
    with pytest.raises(ResourceLimitError):
        m_in_ass(J, ceiling=2)
