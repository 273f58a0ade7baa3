"""
Finite fields and quadratic Gaussian periods
============================================

Build GF(81) from a default modulus, look at its generator, and compute the
two quadratic Gaussian periods by summing the additive character directly.
"""

from cyclicweights.chars import gaussian_period_direct, periods_closed_N2
from cyclicweights.ffield import format_coeffs, make_field

# GF(3^4); elements are encoded as integers sum(c_j 3^j)
F = make_field(3, 4).ensure_tables()
print("modulus:", format_coeffs(F.modulus))
print("generator:", format_coeffs(F.coeffs(F.gen)), "of order", F.order(F.gen))

x = F.power_of_gen(10)
y = F.power_of_gen(33)
print("x*y == gen^43:", F.mul(x, y) == F.power_of_gen(43))
print("Tr(x) =", F.absolute_trace(x))

# The squares form one cyclotomic class, the non-squares the other
eta1 = gaussian_period_direct(F, 2, 1)
eta_a = gaussian_period_direct(F, 2, F.gen)
print("direct periods:", eta1, eta_a)
print("closed periods:", periods_closed_N2(3, 1, 4))
print("eta_1 + eta_alpha =", eta1 + eta_a)

# a few more fields, all with eta_1 + eta_alpha = -1
for p, d in [(3, 2), (5, 2), (13, 2), (17, 2)]:
    G = make_field(p, d).ensure_tables()
    print(f"GF({p}^{d})", gaussian_period_direct(G, 2, 1), gaussian_period_direct(G, 2, G.gen))
