"""
Weight distributions by enumeration
===================================

Every codeword c(a, b) of C(q,m,h,e) is enumerated. This works for any
parameters small enough to fit the pair budget, not only e=4.
"""

import time

from cyclicweights.code import brute_weight_distribution, code_params, codeword, format_enumerator, hamming_weight

params = code_params(5, 1, 2, 4, 4)
print(params.describe())

# one codeword written out
word = codeword(params, 3, 7)
print("c(3, 7) =", word[:12], "...", "weight", hamming_weight(word))

t0 = time.perf_counter()
dist = brute_weight_distribution(params)
print(format_enumerator(dist), f"({time.perf_counter() - t0:.3f} s)")
print("minimum distance:", dist.minimum_distance())

# e=3 over GF(4^3): the closed form does not cover this, enumeration does
params = code_params(2, 2, 3, 3, 3)
print(params.describe())
print(format_enumerator(brute_weight_distribution(params)))

# q=17, m=2, h=4: 83,521 codewords of length 72
params = code_params(17, 1, 2, 4, 4)
t0 = time.perf_counter()
dist = brute_weight_distribution(params)
print(format_enumerator(dist), f"({time.perf_counter() - t0:.2f} s)")
