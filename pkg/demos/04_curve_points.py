"""
Points on y^2 = x^3 + 4x
========================

For p = 1 mod 4 the count comes from the primary Gaussian prime above p;
for p = 3 mod 4 the curve is supersingular.
"""

from cyclicweights.curve import count_points_brute, count_points_closed, primary_pi, trace_power, two_squares
from cyclicweights.ffield import make_field

for p in [5, 13, 17, 29, 37]:
    a, b = two_squares(p)
    pi = primary_pi(p)
    print(f"p={p} = {a}^2 + {b}^2, primary pi = {pi}, traces", [trace_power(p, n) for n in range(1, 5)])

# closed count against a direct count of the affine solutions plus infinity
for p, d in [(17, 2), (13, 2), (3, 4), (7, 3), (11, 2)]:
    F = make_field(p, d)
    print(f"GF({p}^{d}):", count_points_closed(p, d), count_points_brute(F))
