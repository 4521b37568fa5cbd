"""Exact distributions over all of S_n, next to the limit laws."""

from permstat import asymptotics, enumerate_distribution, exact_prob_ge
from permstat.exact import closepair_mean_formula

for n in (4, 7, 10):
    dist = enumerate_distribution(n, "breadth")
    row = ", ".join(f"{v}: {c}" for v, c in sorted(dist.counts.items()))
    print(f"n = {n:>2} breadth counts  {row}   (total {dist.total})")

print()
print(" n   Pr[d >= 3]   Pr[mj >= 2]")
for n in range(4, 12):
    print(f"{n:>2}   {float(exact_prob_ge(n, 'breadth', 3)):.6f}     "
          f"{float(exact_prob_ge(n, 'minjump', 2)):.6f}")
print(f"lim  {asymptotics.limit_tail('breadth', 3):.6f}     "
      f"{asymptotics.limit_tail('minjump', 2):.6f}")

# the number of close pairs has an exact mean; it creeps up to d^2 + d
print()
for d in (1, 2):
    means = [f"{float(closepair_mean_formula(n, d)):.4f}" for n in (10, 100, 1000)]
    print(f"d = {d}: mean close pairs at n = 10, 100, 1000: {means}; limit {asymptotics.lam(d)}")
