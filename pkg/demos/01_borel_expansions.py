#!/usr/bin/env python3
"""Borel expansions and closures.

A squarefree monomial u = x_{i_1} ... x_{i_d} generates a squarefree
strongly stable ideal: its minimal generators are all x_{j_1} ... x_{j_d}
with j_t <= i_t positionwise.  Powers of that ideal are again principal
Borel ideals, now with exponent cap k, and can be produced either by
closing u^k under exchange moves or by multiplying out generators.
"""

from borelstab import (
    GroundSet,
    SquarefreeMonomial,
    borel_closure,
    expand_squarefree,
    extract_borel_generator,
    ideal_power,
    power_generators,
)

g5 = GroundSet.contiguous(5)
u = SquarefreeMonomial(g5, (1, 3, 4, 5))

print("generator u =", u)
J = expand_squarefree(u)
print("expansion has", len(J.generators), "generators:")
for g in J.generators:
    print("   ", g)

print()
print("the closure route and the product route agree on powers:")
for k in (1, 2, 3):
    via_closure = power_generators(u, k)
    via_products = ideal_power(J, k)
    print(f"  k={k}: {len(via_closure.generators):3d} generators,",
          "routes agree:", via_closure == via_products)

print()
print("recognition recovers the generator from the expansion:")
print("   ", extract_borel_generator(J, 1))

print()
g3 = GroundSet.contiguous(3)
w = SquarefreeMonomial(g3, (2, 3)).power(2)
print("closure of", w, "with cap 2:")
for gen in borel_closure(w, 2).generators:
    print("   ", gen)
