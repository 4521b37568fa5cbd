"""Binomial moments of the jump indicators, from subset types.

X_i fires when |pi(i+1) - pi(i)| <= d.  S_m sums E[X_I] over m-subsets I of
[n-1]; E[X_I] only depends on how I breaks into runs, so S_m is a short sum
over types.  The alternating partial sums bracket Pr[mj >= d + 1].
"""

from permstat import exact_prob_ge, exact_Sm
from permstat.ie import (Sm_formula, Sm_leading, bonferroni_partial_sums,
                         count_subsets_of_type, nu_of_type, profile_subset, types_of_size)

prof = profile_subset({3, 4, 6, 7, 8, 10}, 12)
print(f"I = {set(prof.elements)}: runs {prof.run_lengths}, type {list(prof.type_partition)}, "
      f"irregularity {prof.irregularity}")

n, d, m = 12, 1, 3
print(f"\nn = {n}, d = {d}, m = {m}")
for lam in types_of_size(m):
    count = count_subsets_of_type(n, m, lam)
    print(f"  type {list(lam)!s:<6} subsets {count:>4}   nu = {nu_of_type(m, lam, n, d)}")

n = 9
S = [Sm_formula(n, d, k) for k in range(n)]
print(f"\nn = {n}: S_m from types equals enumeration:",
      all(S[k] == exact_Sm(n, d, k, "minjump") for k in range(n)))
target = exact_prob_ge(n, "minjump", d + 1)
for r, partial in enumerate(bonferroni_partial_sums(S)):
    side = "upper" if r % 2 == 0 else "lower"
    print(f"  r = {r}: {float(partial):+.6f} ({side} bound)   target {float(target):.6f}")

print("\nS_m m!/(2d)^m approaches 1:")
for n in (50, 100, 200):
    print(f"  n = {n:>3}: " + "  ".join(f"{float(Sm_formula(n, 1, k) / Sm_leading(1, k)):.4f}"
                                        for k in (1, 2, 3)))
