"""Compute the reduced characteristic polynomial of one matroid four ways.

The running example is the cycle matroid of a triangle with a pendant edge.
Its reduced characteristic polynomial is q^2 - 3q + 2, so the coefficient
vector we are after is (1, 3, 2).  Four geometric routes and two
combinatorial oracles must all land on the same numbers.
"""

import time

from matchow import (
    deg_lex,
    deg_pp,
    deg_stable,
    deg_tropical,
    poly_q_str,
    triangle_with_pendant,
)

m = triangle_with_pendant()
print(f"matroid: {m}")
print(f"ground set: 0..{m.n_elements - 1} (edges ab, bc, ca, cd)")
print(f"bases: {sorted(sorted(b) for b in m.bases)}")
print()

print(f"characteristic polynomial:          {poly_q_str(m.char_poly())}")
print(f"reduced characteristic polynomial:  {poly_q_str(m.reduced_char_poly())}")
print()

r = m.rank() - 1
methods = {
    "lex   (flag monomial expansion)": deg_lex,
    "pp    (chamber sums)": deg_pp,
    "stable (displaced skeletons)": deg_stable,
    "tropical (iterated divisors)": deg_tropical,
}

print(f"coefficient mu^k for k = 0..{r}, method by method:")
for label, fn in methods.items():
    started = time.perf_counter()
    vector = tuple(fn(m, k) for k in range(r + 1))
    elapsed = (time.perf_counter() - started) * 1000
    print(f"  {label:36s} {vector}   [{elapsed:.1f} ms]")

print()
print("combinatorial oracles:")
print(f"  {'whitney (Moebius sum)':36s} {m.mu_vector()}")
chains = tuple(m.chains_with_descent_set(range(1, k + 1)) for k in range(r + 1))
print(f"  {'chains (descent-set count)':36s} {chains}")
print()

expected = (1, 3, 2)
assert m.mu_vector() == expected
assert chains == expected
for fn in methods.values():
    assert tuple(fn(m, k) for k in range(r + 1)) == expected
print(f"all six agree: mu = {expected}")
