"""
Closed-form weight distributions for e=4, N=2
=============================================

The closed form needs only the two Gaussian periods, the trace of Frobenius
of y^2 = x^3 + 4x, and whether g(beta+1) is a square.
"""

from cyclicweights.closedform import (
    closed_weight_distribution,
    degenerate_lambdas,
    nondegenerate_rows,
    pi_trace,
    select_case,
)
from cyclicweights.code import brute_weight_distribution, code_params, format_enumerator, weight_from_lambda

for args in [(17, 1, 2, 4, 4), (13, 1, 2, 4, 4), (3, 2, 2, 4, 4), (3, 2, 2, 8, 4)]:
    params = code_params(*args)
    case = select_case(params)
    print(f"q={params.q} m={params.m} h={params.h}: n={params.n}, case {case.name}, trace {pi_trace(params)}")

    for lam, freq in nondegenerate_rows(params, case):
        print(f"   weight {weight_from_lambda(params, lam):3d}  x{freq}")
    for lam, freq in degenerate_lambdas(params):
        print(f"   weight {weight_from_lambda(params, lam):3d}  x{freq}  (degenerate)")

    dist = closed_weight_distribution(params)
    print("  ", format_enumerator(dist))
    print("   agrees with enumeration:", dist == brute_weight_distribution(params))

# a larger field, where enumeration would take much longer
params = code_params(101, 1, 2, 4, 4)
print("q=101:", format_enumerator(closed_weight_distribution(params)))
