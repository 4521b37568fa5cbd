"""Moments of the limit laws and the exponential polynomials."""

import math

from permstat import exp_polynomial, limit_moment, stirling2

for kind, name in (("breadth", "Y"), ("minjump", "Z")):
    moments = [limit_moment(kind, a) for a in (1, 2, 3)]
    var = moments[1] - moments[0] ** 2
    print(f"{name}: E = {moments[0]:.16f}  E^2 = {moments[1]:.10f}  "
          f"E^3 = {moments[2]:.10f}  var = {var:.10f}")
print(f"1 / (1 - e^-2) = {1 / (1 - math.exp(-2)):.16f}")

print("\nStirling numbers S(a, k):")
for a in range(7):
    print("  " + " ".join(f"{stirling2(a, k):>4}" for k in range(a + 1)))

x = -1.5
print(f"\nb_a({x}) e^x against the series sum m^a x^m / m!:")
for a in range(7):
    series = math.fsum(m ** a * x ** m / math.factorial(m) for m in range(61))
    print(f"  a = {a}: {exp_polynomial(a)(x) * math.exp(x):+.12f}  {series:+.12f}")
