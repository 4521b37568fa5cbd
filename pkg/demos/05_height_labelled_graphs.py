"""Counting value assignments on graphs with red and blue edges.

Z counts maps h: V -> [n] with 1 <= |h(u) - h(v)| <= d on red edges and
h(u) = h(v) on blue ones; Z* also asks the values to be distinct.  Z* comes
either from placing each component directly or from inclusion-exclusion
over added blue edges, whose partial sums alternate around it.
"""

from permstat.ie import ColoredGraph, Z, Z_star, pie_partial_sums

edge = ColoredGraph.from_edge_list("a b red")
for n in (5, 10, 20):
    print(f"single red edge, n = {n}, d = 2: Z = {Z(edge, n, 2)} "
          f"(2dn - d(d+1) = {4 * n - 6})")

path = ColoredGraph.from_edge_list("""
    1 2 red
    2 3 red
    3 4 red
    5          # an isolated vertex
""")
n, d = 12, 2
print(f"\npath on 4 vertices plus a point, n = {n}, d = {d}")
print("  Z             =", Z(path, n, d))
print("  Z* (tuples)   =", Z_star(path, n, d, method="tuples"))
print("  Z* (pie)      =", Z_star(path, n, d, method="pie"))
partials = pie_partial_sums(path, n, d)
print("  partial sums  =", partials[:6], "...")

mixed = ColoredGraph.from_edge_list("x y red\ny z blue")
print("\nred x-y, blue y-z, n = 6, d = 1: Z =", Z(mixed, 6, 1))
