"""Linear quotients, the q-invariant and depth for powers of Borel ideals.

For the generators ``u_1 > u_2 > ...`` (decreasing lex) of the k-th power
of a squarefree principal Borel ideal, each colon ideal
``(u_1,...,u_{i-1}) : u_i`` is generated by the variables

    { x_j : j <= max(u_i) - 1 }  minus  { x_j in supp(u_i) : exponent = k }.

The largest such variable count is ``q``; the depth of the quotient ring
is then ``n - q - 1``, and the maximal ideal is associated exactly when
``q = n - 1``.  The formula's validity domain is exactly this generator
class, so the entry points here construct the generator list themselves
from a squarefree generator; the raw positional form validates its
ordering precondition and nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .borel import borel_closure, is_power_generator, power_generators
from .monomials import Monomial, SquarefreeMonomial, lex_key


def _colon_variables(gen: Monomial, cap: int) -> frozenset[int]:
    top = gen.max_index
    saturated = {i for i, e in gen.exps if e == cap}
    return frozenset(j for j in gen.ground.indices if j < top and j not in saturated)


def linear_quotient_set(gens: Sequence[Monomial], i: int, cap: int) -> frozenset[int]:
    """Variables generating ``(u_1,...,u_{i-1}) : u_i`` (1-based ``i``).

    ``gens`` must be strictly decreasing in lex order and is expected to
    be the full generator list of a power of a squarefree principal Borel
    ideal; outside that class use the brute-force colon instead.
    """
    if not 1 <= i <= len(gens):
        raise ValueError(f"position {i} out of range 1..{len(gens)}")
    keys = [lex_key(g) for g in gens]
    if any(a <= b for a, b in zip(keys, keys[1:])):
        raise ValueError("generators not sorted in strictly decreasing lex order")
    if i == 1:
        return frozenset()
    return _colon_variables(gens[i - 1], cap)


@dataclass(frozen=True)
class QuotientProfile:
    """Colon variable sets of a power, with q, depth and the depth-zero flag."""

    n: int
    k: int
    colon_sets: tuple[frozenset[int], ...]
    q: int
    depth: int
    m_in_ass: bool


def quotient_profile(u: SquarefreeMonomial, k: int, n: int | None = None) -> QuotientProfile:
    """Full linear-quotient profile of the k-th power of the expansion of ``u``."""
    ground = u.ground
    if not ground.is_contiguous:
        raise ValueError("quotient profile needs contiguous labels 1..n")
    if n is None:
        n = len(ground)
    elif n != len(ground):
        raise ValueError(f"n={n} does not match ground set of size {len(ground)}")
    gens = power_generators(u, k).generators
    sets = [frozenset()]
    sets += [_colon_variables(g, k) for g in gens[1:]]
    q = max(len(s) for s in sets)
    assert q < n, "colon sets live below max(u_i), so q must stay below n"
    return QuotientProfile(
        n=n,
        k=k,
        colon_sets=tuple(sets),
        q=q,
        depth=n - q - 1,
        m_in_ass=(q == n - 1),
    )


def q_invariant(u: SquarefreeMonomial, k: int, n: int | None = None) -> int:
    """Largest colon-variable count over the generators of the k-th power."""
    return quotient_profile(u, k, n).q


def depth_power(u: SquarefreeMonomial, k: int, n: int | None = None) -> int:
    """depth of S/I^k, namely n - q - 1."""
    return quotient_profile(u, k, n).depth


def max_ideal_in_ass(u: SquarefreeMonomial, k: int, n: int | None = None) -> bool:
    """Whether the maximal ideal is associated to the k-th power (q = n-1)."""
    return quotient_profile(u, k, n).m_in_ass


def depth_zero_witness(u: SquarefreeMonomial, k: int) -> Monomial:
    """A generator of the k-th power whose colon set uses all of ``1..n-1``.

    Exists for ``u = x_{i_1} ... x_{i_r} x_n`` with ``min(u) > 1``,
    ``max(u) = n`` and ``k > r`` (``r = deg(u) - 1``):

        x_1^r * x_{i_1}^{k-1} * ... * x_{i_r}^{k-1} * x_n^k

    Membership in the generator set and the size of its colon set are both
    asserted before returning.
    """
    ground = u.ground
    if not ground.is_contiguous:
        raise ValueError("witness construction needs contiguous labels 1..n")
    n = len(ground)
    if u.min_index <= 1 or u.max_index != n:
        raise ValueError(f"need min(u) > 1 and max(u) = {n}, got {u}")
    r = u.degree - 1
    if k <= r:
        raise ValueError(f"need k > deg(u) - 1 = {r}, got k={k}")
    exps: dict[int, int] = {i: k - 1 for i in u.indices[:-1]}
    exps[n] = k
    if r:
        exps[1] = exps.get(1, 0) + r
    witness = Monomial.make(ground, exps)
    assert is_power_generator(witness, u, k), "witness fails the membership test"
    assert witness in borel_closure(u.power(k), k), "witness not in the closure"
    assert len(_colon_variables(witness, k)) == n - 1
    return witness


__all__ = [
    "QuotientProfile",
    "depth_power",
    "depth_zero_witness",
    "linear_quotient_set",
    "max_ideal_in_ass",
    "q_invariant",
    "quotient_profile",
]
