"""
Closed-form counts versus brute force
=====================================

Every counting formula in the package has an exhaustive twin that walks all
matrices over a small field. The two routes share no linear algebra code.
"""

from rextension import parse_poly
from rextension.counting import (
    compositions,
    count_by_dimension,
    count_lfsr,
    count_max_extension,
    count_Nr,
    oracle_by_dimension,
    oracle_lfsr,
    oracle_max_extension,
    oracle_Nr,
)
from rextension.gf import find_primitive

###############################################################################
# Multisequences sorted by dimension. Summed over all dimensions they account
# for every nonzero state, one orbit of length q^n - 1 at a time.

q, m, n = 3, 2, 3
for l in range(m + 1):
    print(f"dimension {l}: formula {count_by_dimension(l, m, n, q)}, oracle {oracle_by_dimension(l, m, n, q)}")
print("orbits in total", (q ** (m * n) - 1) // (q**n - 1))

###############################################################################
# Maximal R-extensions. The count depends on R only through its length and sum.

n = 5
p = find_primitive(2, n)
for R in compositions(4, 2):
    print(R.parts, count_max_extension(R, n, 2), oracle_max_extension(R, p))
print("summed over compositions", count_Nr(2, 4, n, 2), oracle_Nr(2, 4, p))

###############################################################################
# m-companion matrices with a fixed primitive characteristic polynomial.
# The 3-word case walks 2^18 feedback pairs and takes a couple of seconds.

print("m=2, b=2:", count_lfsr(2, 2, 2), oracle_lfsr(2, 2, parse_poly("s^4+s+1", 2)))
print("m=3, b=2:", count_lfsr(3, 2, 2), oracle_lfsr(3, 2, parse_poly("s^6+s+1", 2), jobs=2))
