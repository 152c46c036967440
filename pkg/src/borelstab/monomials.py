"""Exact monomial and monomial-ideal arithmetic over ordered ground sets.

Everything here is plain integer combinatorics on exponent vectors: no
coefficient field, no polynomials, no Groebner machinery.  Variable labels
are positive integers and are carried explicitly by a :class:`GroundSet`,
so localized ideals can keep their original labels (e.g. live on the
variables ``{2, 3, 4, 5}``) without renumbering.

All types are immutable and all operations are pure functions.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass


class GroundSetMismatch(ValueError):
    """Raised when an operation mixes monomials over different ground sets."""


def _check_same_ground(a, b) -> None:
    if a.ground != b.ground:
        raise GroundSetMismatch(f"ground sets differ: {a.ground} vs {b.ground}")


@dataclass(frozen=True)
class GroundSet:
    """A finite, strictly increasing, non-empty set of variable labels."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        if not idx:
            raise ValueError("ground set must be non-empty")
        if any(not isinstance(i, int) or i < 1 for i in idx):
            raise ValueError(f"variable labels must be positive integers: {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"variable labels must be strictly increasing: {idx}")

    @classmethod
    def contiguous(cls, n: int) -> GroundSet:
        if n < 1:
            raise ValueError("need at least one variable")
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def is_contiguous(self) -> bool:
        return self.indices == tuple(range(1, len(self.indices) + 1))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, label: int) -> bool:
        pos = bisect_left(self.indices, label)
        return pos < len(self.indices) and self.indices[pos] == label

    def position(self, label: int) -> int:
        """0-based position of a label within the ground set."""
        pos = bisect_left(self.indices, label)
        if pos == len(self.indices) or self.indices[pos] != label:
            raise ValueError(f"label {label} not in ground set {self.indices}")
        return pos

    def without(self, labels) -> GroundSet:
        gone = set(labels)
        return GroundSet(tuple(i for i in self.indices if i not in gone))

    def __str__(self) -> str:
        if self.is_contiguous:
            return f"n={len(self.indices)}"
        return "vars=" + ",".join(str(i) for i in self.indices)


@dataclass(frozen=True)
class Monomial:
    """A monomial, stored as sorted ``(label, exponent)`` pairs.

    The unit monomial has no pairs.  Exponents are arbitrary-size Python
    integers, so overflow cannot occur at any scale.
    """

    ground: GroundSet
    exps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(i), int(e)) for i, e in self.exps if e != 0))
        object.__setattr__(self, "exps", pairs)
        for i, e in pairs:
            if e < 0:
                raise ValueError(f"negative exponent on x_{i}")
            if i not in self.ground:
                raise ValueError(f"x_{i} not in ground set {self.ground.indices}")

    @classmethod
    def make(cls, ground: GroundSet, exponents=None) -> Monomial:
        """Build from a ``{label: exponent}`` mapping (empty/None = unit)."""
        items = tuple((exponents or {}).items())
        return cls(ground, items)

    @classmethod
    def unit(cls, ground: GroundSet) -> Monomial:
        return cls(ground, ())

    @classmethod
    def variable(cls, ground: GroundSet, label: int, power: int = 1) -> Monomial:
        return cls(ground, ((label, power),))

    @classmethod
    def from_vector(cls, ground: GroundSet, vec) -> Monomial:
        return cls(ground, tuple(zip(ground.indices, vec)))

    def exponent(self, label: int) -> int:
        for i, e in self.exps:
            if i == label:
                return e
        return 0

    def exponent_vector(self) -> tuple[int, ...]:
        """Exponents aligned with the ground set order."""
        lookup = dict(self.exps)
        return tuple(lookup.get(i, 0) for i in self.ground.indices)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.exps)

    @property
    def is_unit(self) -> bool:
        return not self.exps

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    @property
    def min_index(self) -> int:
        if not self.exps:
            raise ValueError("unit monomial has no support")
        return self.exps[0][0]

    @property
    def max_index(self) -> int:
        if not self.exps:
            raise ValueError("unit monomial has no support")
        return self.exps[-1][0]

    def __mul__(self, other: Monomial) -> Monomial:
        _check_same_ground(self, other)
        merged = dict(self.exps)
        for i, e in other.exps:
            merged[i] = merged.get(i, 0) + e
        return Monomial(self.ground, tuple(merged.items()))

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            raise ValueError("negative power")
        return Monomial(self.ground, tuple((i, e * k) for i, e in self.exps))

    def gcd(self, other: Monomial) -> Monomial:
        _check_same_ground(self, other)
        theirs = dict(other.exps)
        pairs = tuple((i, min(e, theirs.get(i, 0))) for i, e in self.exps)
        return Monomial(self.ground, pairs)

    def lcm(self, other: Monomial) -> Monomial:
        _check_same_ground(self, other)
        merged = dict(self.exps)
        for i, e in other.exps:
            merged[i] = max(merged.get(i, 0), e)
        return Monomial(self.ground, tuple(merged.items()))

    def divide_by(self, other: Monomial) -> Monomial:
        """Exact division; raises if ``other`` does not divide ``self``."""
        if not divides(other, self):
            raise ValueError(f"{other} does not divide {self}")
        theirs = dict(other.exps)
        pairs = tuple((i, e - theirs.get(i, 0)) for i, e in self.exps)
        return Monomial(self.ground, pairs)

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "".join(f"x_{i}^{e}" if e > 1 else f"x_{i}" for i, e in self.exps)


@dataclass(frozen=True)
class SquarefreeMonomial:
    """A squarefree monomial, identified with its support ``i_1 < ... < i_d``."""

    ground: GroundSet
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        if not idx:
            raise ValueError("squarefree monomial needs at least one variable")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"support must be strictly increasing: {idx}")
        for i in idx:
            if i not in self.ground:
                raise ValueError(f"x_{i} not in ground set {self.ground.indices}")

    @property
    def degree(self) -> int:
        return len(self.indices)

    @property
    def min_index(self) -> int:
        return self.indices[0]

    @property
    def max_index(self) -> int:
        return self.indices[-1]

    def to_monomial(self) -> Monomial:
        return Monomial(self.ground, tuple((i, 1) for i in self.indices))

    def power(self, k: int) -> Monomial:
        return Monomial(self.ground, tuple((i, k) for i in self.indices))

    def __str__(self) -> str:
        return str(self.to_monomial())

    def relabel_contiguous(self) -> SquarefreeMonomial:
        """Map the ground set order-isomorphically onto ``1..n`` and carry
        the support along; positions in the old ground set become labels."""
        new_ground = GroundSet.contiguous(len(self.ground))
        new_idx = tuple(self.ground.position(i) + 1 for i in self.indices)
        return SquarefreeMonomial(new_ground, new_idx)


def divides(w1: Monomial, w2: Monomial) -> bool:
    """True iff every exponent of ``w1`` is at most the one in ``w2``."""
    _check_same_ground(w1, w2)
    theirs = dict(w2.exps)
    return all(e <= theirs.get(i, 0) for i, e in w1.exps)


def lex_key(w: Monomial) -> tuple[int, ...]:
    """Sort key for the lex order with x_i > x_j whenever i < j.

    Comparing exponent vectors (aligned to the ground set) as plain tuples
    realizes exactly that order: the smallest index where two monomials
    differ decides, larger exponent first.
    """
    return w.exponent_vector()


def lex_compare(w1: Monomial, w2: Monomial) -> int:
    """-1, 0 or 1 as ``w1`` is lex-smaller, equal, or lex-greater."""
    _check_same_ground(w1, w2)
    a, b = lex_key(w1), lex_key(w2)
    return (a > b) - (a < b)


def radical(w: Monomial) -> SquarefreeMonomial:
    """The product of the support variables of a non-unit monomial."""
    if w.is_unit:
        raise ValueError("unit monomial has no radical support")
    return SquarefreeMonomial(w.ground, w.support)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Generators are kept in canonical (decreasing lex) order.  The zero
    ideal is the empty generator tuple; the unit ideal is generated by the
    unit monomial.  Construction rejects non-minimal generator sets; use
    :func:`minimalize` to build from arbitrary monomials.
    """

    ground: GroundSet
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(sorted(self.generators, key=lex_key, reverse=True))
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if g.ground != self.ground:
                raise GroundSetMismatch("generator over a different ground set")
        for g, h in itertools.permutations(gens, 2):
            if divides(g, h):
                raise ValueError(f"non-minimal generating set: {g} divides {h}")

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit

    def __contains__(self, w: Monomial) -> bool:
        return any(divides(g, w) for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def generator_vectors(self) -> list[tuple[int, ...]]:
        return [g.exponent_vector() for g in self.generators]

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _minimal_vectors(vecs) -> list[tuple[int, ...]]:
    """Prune vectors that are coordinatewise above another vector."""
    ordered = sorted(set(vecs), key=lambda v: (sum(v), v))
    kept: list[tuple[int, ...]] = []
    for v in ordered:
        if not any(all(k <= x for k, x in zip(keep, v)) for keep in kept):
            kept.append(v)
    return kept


def minimalize(gens, ground: GroundSet | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to minimal generators.

    Idempotent and independent of input order.  An empty input yields the
    zero ideal, in which case ``ground`` must be supplied.
    """
    gens = list(gens)
    if not gens:
        if ground is None:
            raise ValueError("empty generating set needs an explicit ground set")
        return MonomialIdeal(ground, ())
    if ground is not None and ground != gens[0].ground:
        raise GroundSetMismatch("generators over a different ground set than requested")
    ground = gens[0].ground
    for g in gens:
        if g.ground != ground:
            raise GroundSetMismatch("generators over different ground sets")
    kept = _minimal_vectors(g.exponent_vector() for g in gens)
    return MonomialIdeal(ground, tuple(Monomial.from_vector(ground, v) for v in kept))


def colon(J: MonomialIdeal, w: Monomial) -> MonomialIdeal:
    """The colon ideal J : (w), computed generatorwise as g / gcd(g, w)."""
    if w.ground != J.ground:
        raise GroundSetMismatch("colon divisor over a different ground set")
    if J.is_zero:
        return J
    return minimalize(g.divide_by(g.gcd(w)) for g in J.generators)


def saturate(J: MonomialIdeal, w: Monomial) -> MonomialIdeal:
    """The saturation J : (w)^infinity, i.e. the fixed point of colon by w.

    Terminates because the partial quotients form an ascending chain of
    monomial ideals with bounded exponents.
    """
    current = J
    while True:
        nxt = colon(current, w)
        if nxt == current:
            return current
        current = nxt


def ideal_power(J: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of J^k, from all k-fold products of generators."""
    if k < 1:
        raise ValueError("power must be at least 1")
    if J.is_zero:
        return J
    ground = J.ground
    vecs = J.generator_vectors()
    products = set()
    for combo in itertools.combinations_with_replacement(vecs, k):
        products.add(tuple(sum(col) for col in zip(*combo)))
    kept = _minimal_vectors(products)
    return MonomialIdeal(ground, tuple(Monomial.from_vector(ground, v) for v in kept))


# --- shared text format ---------------------------------------------------
#
# Monomials are written as comma-separated ``index^exponent`` pairs with the
# exponent omitted when it is 1, e.g. ``1^2,3,5^4`` for x_1^2 x_3 x_5^4.
# Squarefree monomials may be bare index lists such as ``1,3,4,5``.  The unit
# monomial is the empty string.  Ground sets are ``n=5`` or ``vars=2,3,5``.


def format_monomial(w: Monomial) -> str:
    return ",".join(f"{i}^{e}" if e > 1 else str(i) for i, e in w.exps)


def parse_monomial(text: str, ground: GroundSet) -> Monomial:
    text = text.strip()
    if not text:
        return Monomial.unit(ground)
    exps: dict[int, int] = {}
    for part in text.split(","):
        part = part.strip()
        try:
            if "^" in part:
                idx, exp = part.split("^", 1)
                i, e = int(idx), int(exp)
            else:
                i, e = int(part), 1
        except ValueError:
            raise ValueError(f"malformed monomial term {part!r}") from None
        if e < 1:
            raise ValueError(f"exponent must be positive in {part!r}")
        exps[i] = exps.get(i, 0) + e
    return Monomial.make(ground, exps)


def parse_squarefree(text: str, ground: GroundSet) -> SquarefreeMonomial:
    w = parse_monomial(text, ground)
    if w.is_unit or not w.is_squarefree:
        raise ValueError(f"{text!r} is not a non-unit squarefree monomial")
    return SquarefreeMonomial(ground, w.support)


def parse_ground(text: str) -> GroundSet:
    text = text.strip()
    if text.startswith("n="):
        return GroundSet.contiguous(int(text[2:]))
    if text.startswith("vars="):
        return GroundSet(tuple(int(p) for p in text[5:].split(",") if p.strip()))
    raise ValueError(f"malformed ground set {text!r} (expected n=... or vars=...)")
