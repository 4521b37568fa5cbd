"""How far apart are the closest two dots of a permutation graph?

Walks through the three ways of computing the minimum Manhattan distance on
a small example, then shows the close pairs behind it.
"""

from permstat import (Permutation, adaptive_window, breadth_band_limit, close_pairs,
                      is_prolific, manhattan_distance, min_distance_adaptive,
                      min_distance_banded, min_distance_naive, min_jump)

p = Permutation.from_text("1 4 7 2 5 8 3 6 9")
n = p.n
print(f"pi = {p}")

# every pair of dots, the definition
print("naive   d(pi) =", min_distance_naive(p))

# no permutation of [n] is spread wider than y + 2, so only pairs whose
# positions differ by at most y + 1 can attain the minimum
y = breadth_band_limit(n)
print(f"band limit y = {y}, banded with window {y + 1}: d(pi) =", min_distance_banded(p, y + 1))

# neighbours in position are at distance 1 + jump, so d(pi) <= mj(pi) + 1;
# the adaptive scan uses that to shrink the window further
print(f"mj(pi) = {min_jump(p)}, adaptive window = {adaptive_window(p)}, "
      f"d(pi) = {min_distance_adaptive(p)}")

print("distance between dots 1 and 2:", manhattan_distance(p, 1, 2))
print("distance between dots 1 and 4:", manhattan_distance(p, 1, 4))

# at threshold d a close pair is one at distance at most d + 1
for d in (2, 3):
    rep = close_pairs(p, d)
    print(f"d = {d}: {len(rep.pairs)} close pairs, {rep.starter_count} starters, "
          f"{d}-prolific: {is_prolific(p, d)}")
