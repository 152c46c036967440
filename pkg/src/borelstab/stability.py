"""Stability indices and the stable set of associated primes.

For a squarefree principal Borel ideal with generator ``u`` over ``1..n``
the maximal ideal is eventually associated iff ``min(u) > 1`` and
``max(u) = n``.  When it is, the least power is read off the interval
decomposition of the support: with block lengths ``l_j`` and gap lengths
``gap_j``,

    lambda = max_j  ceil( (l_1+...+l_j) / (gap_1+...+gap_j) ) + 1.

A prime ``P_A`` is eventually associated iff the maximal ideal of the
localized ring is, which turns into two conditions on the localized
generator ``u_A``: its minimum must exceed the smallest variable outside
``A`` and its maximum must reach the largest one.  Both a direct route
(compute ``u_A``) and a purely combinatorial route (on ``u`` and ``A``
alone) are implemented; they must always agree and the tests enforce it.

One-variable degenerate case: the general theory excludes a generator
equal to the single variable of its ring, but such localizations do occur
(the localized ideal is then the maximal ideal itself); they are members
with index 1.  A localized generator that collapses to the unit monomial
makes the localization the whole ring: never a member.
"""

from __future__ import annotations

import itertools
import math
from bisect import bisect_right
from dataclasses import dataclass

from .localization import LocalizedGenerator, VariableSubset, localize_closed_form
from .monomials import GroundSet, SquarefreeMonomial

INFINITE = math.inf

DEFAULT_ENUMERATION_BOUND = 12  # stable_set_enumerate walks all 2^n subsets


def _require_contiguous(u: SquarefreeMonomial, n: int | None) -> int:
    if not u.ground.is_contiguous:
        raise ValueError("interval combinatorics needs contiguous labels 1..n")
    size = len(u.ground)
    if n is not None and n != size:
        raise ValueError(f"n={n} does not match ground set of size {size}")
    return size


@dataclass(frozen=True)
class IntervalDecomposition:
    """Maximal consecutive blocks of the support of ``u`` (with ``n`` last).

    ``lengths[j]`` is the block length for all but the last block, whose
    recorded length is one less (``n - a_m``); ``gaps[j]`` is the free
    space before block ``j``.  The recorded lengths add up to ``d - 1``.
    """

    n: int
    blocks: tuple[tuple[int, int], ...]
    lengths: tuple[int, ...]
    gaps: tuple[int, ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def interval_decomposition(u: SquarefreeMonomial, n: int | None = None) -> IntervalDecomposition:
    """Decompose the support of ``u`` into maximal runs; needs ``max(u) = n``."""
    n = _require_contiguous(u, n)
    if u.max_index != n:
        raise ValueError(f"max(u) = {u.max_index} but the ground set tops out at {n}")
    blocks: list[tuple[int, int]] = []
    start = prev = u.indices[0]
    for i in u.indices[1:]:
        if i == prev + 1:
            prev = i
            continue
        blocks.append((start, prev))
        start = prev = i
    blocks.append((start, prev))

    lengths = [b - a + 1 for a, b in blocks]
    lengths[-1] = n - blocks[-1][0]
    gaps = [blocks[0][0] - 1]
    gaps += [a - pb - 1 for (_, pb), (a, _) in zip(blocks, blocks[1:])]
    deco = IntervalDecomposition(n, tuple(blocks), tuple(lengths), tuple(gaps))
    assert sum(deco.lengths) == u.degree - 1
    return deco


def ever_associated(u: SquarefreeMonomial, n: int | None = None) -> bool:
    """Whether the maximal ideal is associated to some power at all."""
    n = _require_contiguous(u, n)
    if n == 1:
        return True  # the ideal is the maximal ideal of a one-variable ring
    return u.min_index > 1 and u.max_index == n


def lambda_max_ideal(u: SquarefreeMonomial, n: int | None = None) -> int | float:
    """Least power with the maximal ideal associated; inf when there is none."""
    n = _require_contiguous(u, n)
    if n == 1:
        return 1
    if u.min_index == 1 or u.max_index < n:
        return INFINITE
    deco = interval_decomposition(u, n)
    best = 0
    num = den = 0
    for length, gap in zip(deco.lengths, deco.gaps):
        num += length
        den += gap
        assert den >= 1, "min(u) > 1 guarantees a positive leading gap"
        best = max(best, -(-num // den) + 1)
    return best


def lambda_value_witness(d: int, i: int) -> tuple[SquarefreeMonomial, int]:
    """A degree-d generator over ``2d - i + 1`` variables whose index is ``i``.

    Concatenates the run ``x_2 .. x_i``, the spaced labels ``x_{i+2j}``
    for ``j = 1 .. d-i``, and the top variable.  Defined for 2 <= i <= d.
    """
    if not 2 <= i <= d:
        raise ValueError(f"need 2 <= i <= d, got i={i}, d={d}")
    n = 2 * d - i + 1
    labels = list(range(2, i + 1))
    labels += [i + 2 * j for j in range(1, d - i + 1)]
    labels.append(n)
    u = SquarefreeMonomial(GroundSet.contiguous(n), tuple(sorted(set(labels))))
    assert u.degree == d
    assert lambda_max_ideal(u, n) == i
    return u, n


# --- combinatorics of a subset against the generator -----------------------


def cover_positions(A: VariableSubset, u: SquarefreeMonomial) -> tuple[int | None, ...]:
    """For each element of ``A`` (in order), the 1-based position of the
    first generator index that is at least it; None when none is."""
    out: list[int | None] = []
    for k in A.members:
        pos = bisect_right(u.indices, k - 1)
        out.append(pos + 1 if pos < len(u.indices) else None)
    return tuple(out)


def max_preserved(u: SquarefreeMonomial, A: VariableSubset) -> bool:
    """Does localizing at ``A`` keep the top support index of ``u``?

    Evaluated combinatorially when every element of ``A`` stays within the
    support range (``k_s <= i_d``): the maximum drops exactly when
    ``k_{s-j} > i_{d-j-1}`` for some ``j >= 0`` (indices at or below zero
    count as 0).  Falls back to the closed form otherwise.
    """
    if not A.members:
        return True
    ks = A.members
    idx = u.indices
    if ks[-1] > idx[-1]:
        local = localize_closed_form(u, A)
        return bool(local.indices) and local.indices[-1] == idx[-1]
    s, d = len(ks), len(idx)
    for j in range(s):
        below = d - j - 1
        threshold = idx[below - 1] if below >= 1 else 0
        if ks[s - j - 1] > threshold:
            return False
    return True


@dataclass(frozen=True)
class MembershipShape:
    """Structural parameters of ``(u, A)`` used by the combinatorial route.

    ``max_outside``   largest variable not in ``A`` (the localized top).
    ``head_count``    elements of ``A`` below ``max_outside``; the rest of
                      ``A`` is the consecutive run capping the ground set.
    ``support_below`` generator indices not exceeding ``max_outside``.
    ``initial_run``   length of the generator's leading run ``1, 2, ...``
                      (``d`` when the whole generator is such a run).
    """

    max_outside: int
    head_count: int
    support_below: int
    initial_run: int


def membership_parameters(
    u: SquarefreeMonomial, A: VariableSubset, n: int | None = None
) -> MembershipShape:
    n = _require_contiguous(u, n)
    if A.is_everything:
        raise ValueError("no variable is left outside the full subset")
    outside = A.complement
    max_outside = outside[-1]
    head_count = sum(1 for k in A.members if k < max_outside)
    support_below = bisect_right(u.indices, max_outside)
    run = 0
    for pos, label in enumerate(u.indices):
        if label != pos + 1:
            break
        run = pos + 1
    return MembershipShape(max_outside, head_count, support_below, run)


def _degenerate_membership(local: LocalizedGenerator) -> bool | None:
    """Handle unit and one-variable localizations; None means not degenerate."""
    if local.is_unit_ideal:
        return False
    if len(local.ground) == 1:
        return local.indices == local.ground
    return None


def stable_membership_direct(
    u: SquarefreeMonomial, A: VariableSubset, n: int | None = None
) -> bool:
    """Membership of ``P_A`` in the stable set, via the localized generator."""
    _require_contiguous(u, n)
    local = localize_closed_form(u, A)
    special = _degenerate_membership(local)
    if special is not None:
        return special
    ground = local.ground
    return local.indices[0] > ground[0] and local.indices[-1] == ground[-1]


def stable_membership_combinatorial(
    u: SquarefreeMonomial, A: VariableSubset, n: int | None = None
) -> bool:
    """Membership of ``P_A`` in the stable set, without computing ``u_A``'s
    min and max directly.

    Condition (i), min above the floor: the first ``initial_run`` elements
    of ``A`` must be exactly ``1, 2, ...``.  Condition (ii), max reaching
    the ceiling: the largest outside variable must itself be a support
    index, and striking the head of ``A`` from the truncated generator
    must preserve that top index, i.e. ``l(head-j) < support_below - j``
    for ``j = 0 .. head-1`` where ``l`` is :func:`cover_positions`.
    """
    n = _require_contiguous(u, n)
    local = localize_closed_form(u, A)
    special = _degenerate_membership(local)
    if special is not None:
        return special

    shape = membership_parameters(u, A, n)
    run = shape.initial_run
    if run > A.size or A.members[:run] != tuple(range(1, run + 1)):
        return False

    g = shape.support_below
    if g == 0 or u.indices[g - 1] != shape.max_outside:
        return False
    covers = cover_positions(A, u)
    for j in range(shape.head_count):
        t = shape.head_count - j  # 1-based position into the head of A
        ell = covers[t - 1]
        if ell is None or ell >= g - j:
            return False
    return True


def lambda_of_prime(
    u: SquarefreeMonomial, A: VariableSubset, n: int | None = None
) -> int | float:
    """Least power with ``P_A`` associated: the maximal-ideal index of the
    localized generator, relabeled onto contiguous variables."""
    _require_contiguous(u, n)
    local = localize_closed_form(u, A)
    if local.is_unit_ideal:
        return INFINITE
    relabeled = local.as_squarefree().relabel_contiguous()
    return lambda_max_ideal(relabeled)


@dataclass(frozen=True)
class StableSetEntry:
    """One subset ``A`` with its localized generator and membership data.

    ``prime`` lists the generator labels of ``P_A`` (the complement of
    ``A``); its positions also record the order isomorphism used to
    relabel the localized ring when evaluating the stability index.
    """

    subset: tuple[int, ...]
    generator: LocalizedGenerator
    prime: tuple[int, ...]
    member: bool
    stability_index: int | float


def stable_set_enumerate(
    u: SquarefreeMonomial,
    n: int | None = None,
    members_only: bool = False,
    enumeration_bound: int = DEFAULT_ENUMERATION_BOUND,
) -> list[StableSetEntry]:
    """Every subset ``A`` with membership verdicts and stability indices.

    Subsets are listed by cardinality and then lexicographically.  Both
    membership routes are evaluated and must agree; a finite index must
    occur exactly on members.
    """
    n = _require_contiguous(u, n)
    if n > enumeration_bound:
        raise ValueError(f"n={n} exceeds the enumeration bound {enumeration_bound}")
    entries: list[StableSetEntry] = []
    labels = u.ground.indices
    for size in range(n + 1):
        for combo in itertools.combinations(labels, size):
            A = VariableSubset(u.ground, combo)
            direct = stable_membership_direct(u, A, n)
            combinatorial = stable_membership_combinatorial(u, A, n)
            if direct != combinatorial:
                raise AssertionError(
                    f"membership routes disagree at u={u}, A={combo}: "
                    f"direct={direct}, combinatorial={combinatorial}"
                )
            lam = lambda_of_prime(u, A, n)
            if direct != (lam != INFINITE):
                raise AssertionError(
                    f"membership and finiteness disagree at u={u}, A={combo}"
                )
            if members_only and not direct:
                continue
            entries.append(
                StableSetEntry(
                    subset=combo,
                    generator=localize_closed_form(u, A),
                    prime=A.complement,
                    member=direct,
                    stability_index=lam,
                )
            )
    return entries


__all__ = [
    "DEFAULT_ENUMERATION_BOUND",
    "INFINITE",
    "IntervalDecomposition",
    "MembershipShape",
    "StableSetEntry",
    "cover_positions",
    "ever_associated",
    "interval_decomposition",
    "lambda_max_ideal",
    "lambda_of_prime",
    "lambda_value_witness",
    "max_preserved",
    "membership_parameters",
    "stable_membership_combinatorial",
    "stable_membership_direct",
    "stable_set_enumerate",
]
