"""Brute-force associated primes of monomial ideals, and verification scans.

The prime-hunting core here is the independent referee for the rest of
the package: it works on raw exponent vectors, never consults the
closed-form shortcuts it is meant to check, and certifies its own output
twice over.  Associated primes are read off an irredundant irreducible
decomposition, and every reported prime must additionally be confirmed by
an explicit colon witness ``w`` with ``J : w = P``.  A failure of either
layer is a bug, not a data condition, and raises immediately.

:func:`cross_validate` is the bridge that pits those brute-force answers
against the closed-form routes (depth, localization, stable membership)
and fails hard with a minimal reproducer on any disagreement.

Complexity is exponential by nature; the entry points refuse ideals above
a configurable generator ceiling instead of running unbounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .borel import expand_squarefree
from .localization import VariableSubset, localize_by_saturation
from .monomials import (
    GroundSet,
    Monomial,
    MonomialIdeal,
    SquarefreeMonomial,
    _minimal_vectors,
    ideal_power,
)
from .stability import INFINITE, lambda_of_prime, stable_membership_direct

GENERATOR_CEILING = 5000


class ResourceLimitError(RuntimeError):
    """The ideal is too large for the configured brute-force budget."""


class CrossValidationError(AssertionError):
    """A closed-form result disagreed with the oracle; carries a reproducer."""


def _check_ceiling(J: MonomialIdeal, ceiling: int) -> None:
    if len(J.generators) > ceiling:
        raise ResourceLimitError(
            f"{len(J.generators)} generators exceed the ceiling {ceiling}; "
            "raise the ceiling explicitly to proceed"
        )


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure variable powers ``x_i^{e_i}``."""

    ground: GroundSet
    powers: tuple[tuple[int, int], ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.powers)

    def as_ideal(self) -> MonomialIdeal:
        gens = tuple(Monomial.variable(self.ground, i, e) for i, e in self.powers)
        return MonomialIdeal(self.ground, gens)

    def contains_vector(self, w: tuple[int, ...]) -> bool:
        pos = self.ground.position
        return any(w[pos(i)] >= e for i, e in self.powers)

    def __contains__(self, w: Monomial) -> bool:
        return self.contains_vector(w.exponent_vector())


def _vec_in(vecs, w) -> bool:
    return any(all(g <= x for g, x in zip(gen, w)) for gen in vecs)


def _is_pure_power(vec) -> bool:
    return sum(1 for e in vec if e) == 1


def _split_components(gens: frozenset) -> frozenset:
    """All pure-power component vectors from recursive pivot splitting.

    The pivot is the lex-largest generator that is not a pure power; it is
    split at its lowest-index variable block into two coprime parts.
    """
    width = len(next(iter(gens)))
    memo: dict[frozenset, frozenset] = {}

    def recurse(state: frozenset) -> frozenset:
        cached = memo.get(state)
        if cached is not None:
            return cached
        pivot = None
        for g in sorted(state, reverse=True):
            if not _is_pure_power(g):
                pivot = g
                break
        if pivot is None:
            component = tuple(max(g[i] for g in state) for i in range(width))
            memo[state] = result = frozenset({component})
            return result
        low = next(i for i, e in enumerate(pivot) if e)
        head = tuple(pivot[low] if i == low else 0 for i in range(width))
        tail = tuple(0 if i == low else e for i, e in enumerate(pivot))
        rest = [g for g in state if g != pivot]
        result = frozenset()
        for part in (head, tail):
            child = frozenset(_minimal_vectors(rest + [part]))
            result |= recurse(child)
        memo[state] = result
        return result

    return recurse(gens)


def _component_contains_component(c, other) -> bool:
    """other (as a set of monomials) is inside c."""
    return all(0 < c[i] <= e for i, e in enumerate(other) if e)


def _vector_in_component(w, c) -> bool:
    return any(e and w[i] >= e for i, e in enumerate(c))


def _irredundant(components: list) -> list:
    """Drop components containing another, then any containing the
    intersection of the rest (checked on the bounding box of exponents)."""
    comps = sorted(set(components))
    kept = [
        c
        for c in comps
        if not any(o != c and _component_contains_component(c, o) for o in comps)
    ]
    if len(kept) <= 1:
        return kept

    width = len(kept[0])
    bounds = [max(c[i] for c in kept) for i in range(width)]
    masks = set()
    for w in itertools.product(*(range(b + 1) for b in bounds)):
        mask = 0
        for t, c in enumerate(kept):
            if _vector_in_component(w, c):
                mask |= 1 << t
        masks.add(mask)

    active = (1 << len(kept)) - 1
    changed = True
    while changed:
        changed = False
        for t in range(len(kept)):
            bit = 1 << t
            if not active & bit:
                continue
            rest = active ^ bit
            if not any((m & active) == rest for m in masks):
                active = rest  # the rest already cuts out this component
                changed = True
                break
    return [c for t, c in enumerate(kept) if active & (1 << t)]


def irreducible_decomposition(
    J: MonomialIdeal, ceiling: int = GENERATOR_CEILING
) -> tuple[IrreducibleComponent, ...]:
    """The irredundant irreducible components of a proper nonzero ideal."""
    if J.is_zero or J.is_unit:
        raise ValueError("zero and unit ideals have no irreducible decomposition")
    _check_ceiling(J, ceiling)
    gens = frozenset(tuple(v) for v in J.generator_vectors())
    components = _irredundant(list(_split_components(gens)))
    labels = J.ground.indices
    out = []
    for c in components:
        powers = tuple((labels[i], e) for i, e in enumerate(c) if e)
        out.append(IrreducibleComponent(J.ground, powers))
    out.sort(key=lambda comp: (len(comp.powers), comp.powers))
    return tuple(out)


def _colon_vectors(gen_vecs, w):
    return _minimal_vectors(
        tuple(max(g - x, 0) for g, x in zip(gen, w)) for gen in gen_vecs
    )


def _find_witness(J: MonomialIdeal, prime: tuple[int, ...], components) -> Monomial:
    """A monomial ``w`` with ``J : w`` exactly the prime on ``prime``.

    Exponents are capped at the componentwise maximum of the generators;
    a witness always exists inside that box for a true associated prime.
    Candidates derived from same-support components are tried first.
    """
    ground = J.ground
    gen_vecs = [tuple(v) for v in J.generator_vectors()]
    width = len(ground)
    bounds = [max(g[i] for g in gen_vecs) for i in range(width)]
    prime_pos = {ground.position(i) for i in prime}
    target = sorted(
        tuple(1 if i == p else 0 for i in range(width)) for p in prime_pos
    )

    def is_witness(w) -> bool:
        return sorted(_colon_vectors(gen_vecs, w)) == target

    for comp in components:
        if comp.support != prime:
            continue
        guess = list(bounds)
        for i, e in comp.powers:
            guess[ground.position(i)] = e - 1
        if is_witness(tuple(guess)):
            return Monomial.from_vector(ground, tuple(guess))
    for w in itertools.product(*(range(b + 1) for b in bounds)):
        if is_witness(w):
            return Monomial.from_vector(ground, w)
    raise AssertionError(
        f"no colon witness for {prime} in {J}: decomposition layer is buggy"
    )


def associated_primes(
    J: MonomialIdeal, ceiling: int = GENERATOR_CEILING, with_witnesses: bool = False
):
    """Associated primes of S/J as sorted label tuples.

    Supports of the irredundant irreducible components, each confirmed by
    an explicit colon witness.  With ``with_witnesses`` returns a dict
    ``prime -> witness`` instead of the bare tuple of primes.
    """
    if J.is_zero or J.is_unit:
        raise ValueError("associated primes need a proper nonzero ideal")
    components = irreducible_decomposition(J, ceiling)
    primes = sorted({c.support for c in components}, key=lambda p: (len(p), p))
    witnessed = {p: _find_witness(J, p, components) for p in primes}
    if with_witnesses:
        return witnessed
    return tuple(primes)


def m_in_ass(J: MonomialIdeal, ceiling: int = GENERATOR_CEILING) -> bool:
    """Depth-zero test: some ``w`` outside ``J`` has ``w * x_i`` in ``J``
    for every variable; equivalent to the full set being an associated
    prime."""
    if J.is_zero or J.is_unit:
        raise ValueError("depth-zero test needs a proper nonzero ideal")
    _check_ceiling(J, ceiling)
    gen_vecs = [tuple(v) for v in J.generator_vectors()]
    width = len(J.ground)
    bounds = [max(g[i] for g in gen_vecs) for i in range(width)]
    for w in itertools.product(*(range(b + 1) for b in bounds)):
        if _vec_in(gen_vecs, w):
            continue
        bumped = list(w)
        for i in range(width):
            bumped[i] += 1
            inside = _vec_in(gen_vecs, tuple(bumped))
            bumped[i] -= 1
            if not inside:
                break
        else:
            return True
    return False


def _product(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    from .monomials import minimalize

    return minimalize(g * h for g in J.generators for h in K.generators)


def _powers_of_expansion(u: SquarefreeMonomial, kmax: int) -> list[MonomialIdeal]:
    base = expand_squarefree(u)
    powers = [base]
    for _ in range(1, kmax):
        powers.append(_product(powers[-1], base))
    return powers


@dataclass(frozen=True)
class AssProfile:
    """Associated primes of the first ``kmax`` powers of an expansion.

    ``primes_by_power[k-1]`` lists the primes of the k-th power, each as a
    sorted label tuple; ``witnesses_by_power`` pairs each with a confirmed
    colon witness.  ``stable_from`` is the least power from which the sets
    stay constant within the scanned range (None if never repeated).
    """

    u: SquarefreeMonomial
    n: int
    kmax: int
    primes_by_power: tuple[tuple[tuple[int, ...], ...], ...]
    witnesses_by_power: tuple[tuple[tuple[tuple[int, ...], Monomial], ...], ...]
    stable_from: int | None

    def primes_at(self, k: int) -> tuple[tuple[int, ...], ...]:
        return self.primes_by_power[k - 1]


def ass_profile(
    u: SquarefreeMonomial,
    n: int | None = None,
    kmax: int = 3,
    ceiling: int = GENERATOR_CEILING,
) -> AssProfile:
    """Associated primes of I, I^2, ..., I^kmax for the expansion of ``u``."""
    if n is None:
        n = len(u.ground)
    elif n != len(u.ground):
        raise ValueError(f"n={n} does not match ground set of size {len(u.ground)}")
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    powers = _powers_of_expansion(u, kmax)
    per_power = []
    witnesses = []
    for J in powers:
        _check_ceiling(J, ceiling)
        witnessed = associated_primes(J, ceiling, with_witnesses=True)
        per_power.append(tuple(witnessed))
        witnesses.append(tuple(witnessed.items()))
    stable_from = None
    for k in range(kmax - 1, 0, -1):
        if set(per_power[k - 1]) == set(per_power[k]):
            stable_from = k
        else:
            break
    return AssProfile(
        u=u,
        n=n,
        kmax=kmax,
        primes_by_power=tuple(per_power),
        witnesses_by_power=tuple(witnesses),
        stable_from=stable_from,
    )


@dataclass(frozen=True)
class PersistenceReport:
    """Primes found to drop out of a later power (expected: none)."""

    u: SquarefreeMonomial
    n: int
    kmax: int
    violations: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def persistence_scan(
    u: SquarefreeMonomial,
    n: int | None = None,
    kmax: int = 3,
    ceiling: int = GENERATOR_CEILING,
) -> PersistenceReport:
    """Check Ass(I^k) is contained in Ass(I^{k+1}) for k below kmax."""
    profile = ass_profile(u, n, kmax, ceiling)
    violations = []
    for k in range(1, kmax):
        later = set(profile.primes_at(k + 1))
        for prime in profile.primes_at(k):
            if prime not in later:
                violations.append((k, prime))
    return PersistenceReport(u, profile.n, kmax, tuple(violations))


@dataclass(frozen=True)
class CrossValidationReport:
    """Tally of oracle-vs-formula checks that all passed."""

    u: SquarefreeMonomial
    n: int
    kmax: int
    depth_checks: int
    localization_checks: int
    membership_checks: int
    sharpness_checks: int


def _fail(reproducer: dict) -> None:
    raise CrossValidationError(f"oracle mismatch: {reproducer}")


def cross_validate(
    u: SquarefreeMonomial,
    n: int | None = None,
    kmax: int = 3,
    ceiling: int = GENERATOR_CEILING,
) -> CrossValidationReport:
    """Tie every closed form to the oracle on one generator.

    Checks, for each power k up to kmax: the maximal ideal is associated
    exactly when q = n - 1; each prime ``P_A`` is associated exactly when
    the maximal ideal of the saturation-localized ideal is; membership per
    the stable-set criterion happens exactly at the predicted index, which
    is sharp.  Any mismatch raises :class:`CrossValidationError` with a
    minimal reproducer.
    """
    from .quotients import q_invariant

    if n is None:
        n = len(u.ground)
    profile = ass_profile(u, n, kmax, ceiling)
    powers = _powers_of_expansion(u, kmax)
    base = powers[0]
    ass_sets = [set(profile.primes_at(k)) for k in range(1, kmax + 1)]

    depth_checks = 0
    for k in range(1, kmax + 1):
        formula = q_invariant(u, k, n) == n - 1
        oracle = m_in_ass(powers[k - 1], ceiling)
        if formula != oracle:
            _fail({"check": "depth", "u": str(u), "k": k, "formula": formula, "oracle": oracle})
        depth_checks += 1

    localization_checks = 0
    membership_checks = 0
    sharpness_checks = 0
    labels = u.ground.indices
    for size in range(n + 1):
        for combo in itertools.combinations(labels, size):
            A = VariableSubset(u.ground, combo)
            prime = A.complement

            if prime:
                localized = localize_by_saturation(base, A) if combo else base
                for k in range(1, kmax + 1):
                    in_ass = prime in ass_sets[k - 1]
                    if localized.is_unit:
                        local_m = False
                    else:
                        local_m = m_in_ass(ideal_power(localized, k), ceiling)
                    if in_ass != local_m:
                        _fail(
                            {
                                "check": "localization",
                                "u": str(u),
                                "A": combo,
                                "k": k,
                                "P_A in Ass(I^k)": in_ass,
                                "m in Ass(I(P_A)^k)": local_m,
                            }
                        )
                    localization_checks += 1

            member = stable_membership_direct(u, A, n)
            lam = lambda_of_prime(u, A, n)
            for k in range(1, kmax + 1):
                expected = member and lam != INFINITE and lam <= k
                observed = bool(prime) and prime in ass_sets[k - 1]
                if expected != observed:
                    _fail(
                        {
                            "check": "membership",
                            "u": str(u),
                            "A": combo,
                            "k": k,
                            "lambda": lam,
                            "expected": expected,
                            "observed": observed,
                        }
                    )
                membership_checks += 1
            if member and lam != INFINITE and lam <= kmax:
                sharp = prime in ass_sets[int(lam) - 1] and (
                    lam == 1 or prime not in ass_sets[int(lam) - 2]
                )
                if not sharp:
                    _fail(
                        {
                            "check": "sharpness",
                            "u": str(u),
                            "A": combo,
                            "lambda": lam,
                        }
                    )
                sharpness_checks += 1

    return CrossValidationReport(
        u=u,
        n=n,
        kmax=kmax,
        depth_checks=depth_checks,
        localization_checks=localization_checks,
        membership_checks=membership_checks,
        sharpness_checks=sharpness_checks,
    )


__all__ = [
    "AssProfile",
    "CrossValidationError",
    "CrossValidationReport",
    "GENERATOR_CEILING",
    "IrreducibleComponent",
    "PersistenceReport",
    "ResourceLimitError",
    "ass_profile",
    "associated_primes",
    "cross_validate",
    "irreducible_decomposition",
    "m_in_ass",
    "persistence_scan",
]
