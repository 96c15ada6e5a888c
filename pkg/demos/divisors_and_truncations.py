"""Walk a matroid fan down to a number with tropical divisors.

truncation_weight(m, r1, r2) puts weight |mu(F_{r1})| on each flag of flats
of consecutive ranks r1..r2.  Taking the divisor of the function that is 1
on rays through the reference element trims the window from above; the
complementary function trims it from below.  Ending at a single rank and
collapsing once more leaves a number at the origin: a coefficient of the
reduced characteristic polynomial.
"""

from matchow import (
    complete_graph_k4,
    divisor,
    matroid_fan,
    pl_alpha,
    pl_beta,
    truncation_weight,
)

m = complete_graph_k4()
r = m.rank() - 1
n = m.n_elements
alpha, beta = pl_alpha(n), pl_beta(n)

print(f"matroid: {m}, mu vector {m.mu_vector()}")
print()

print("== the window calculus ==")
full = truncation_weight(m, 1, r)
print(f"T[1,{r}] equals the unit-weight matroid fan: {full == matroid_fan(m)}")
for r1 in range(1, r + 1):
    for r2 in range(r1 + 1, r + 1):
        w = truncation_weight(m, r1, r2)
        same_a = divisor(alpha, w) == truncation_weight(m, r1, r2 - 1)
        same_b = divisor(beta, w) == truncation_weight(m, r1 + 1, r2)
        print(f"alpha . T[{r1},{r2}] == T[{r1},{r2 - 1}]: {same_a}    "
              f"beta . T[{r1},{r2}] == T[{r1 + 1},{r2}]: {same_b}")
print()

print("== collapsing a single-rank window ==")
for j in range(1, r + 1):
    w = truncation_weight(m, j, j)
    weights = sorted(w.weights.values())
    a_val = divisor(alpha, w).weight(())
    b_val = divisor(beta, w).weight(())
    print(f"T[{j},{j}]: weights {weights}")
    print(f"  alpha closes it to {a_val} = mu^{j - 1},  beta to {b_val} = mu^{j}")
    assert a_val == m.mu(j - 1)
    assert b_val == m.mu(j)
print()

print("== the full pipeline, k = 1 ==")
w = matroid_fan(m)
print(f"start: {w}")
w = divisor(beta, w)
print(f"after beta:  {w} (this is T[2,{r}])")
assert w == truncation_weight(m, 2, r)
w = divisor(alpha, w)
print(f"after alpha: weight at the origin = {w.weight(())}")
assert w.weight(()) == m.mu(1) == 5
