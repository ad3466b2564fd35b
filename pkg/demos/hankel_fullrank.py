"""
Nonsingular Hankel matrices through two-row multisequences
==========================================================

A Hankel matrix of order n is fixed by 2n-1 anti-diagonal values. Pairing that
vector with the last unit vector gives a two-row state whose (n-1, n)-extension
is maximal exactly when the Hankel matrix is nonsingular.
"""

from itertools import product

import numpy as np

from rextension.gf import find_primitive
from rextension.hankel import (
    HankelVec,
    count_fullrank_hankel,
    enumerate_fullrank_hankel,
    fullrank_via_extension,
    hankel_from_vector,
)
from rextension.linalg import rank

a = HankelVec([0, 1, 0, 1, 1], 2)
print(np.array(hankel_from_vector(a).tolist()))
print("nonsingular:", fullrank_via_extension(a, find_primitive(2, 5)))

# the predicate agrees with plain elimination on every vector of length 5
p = find_primitive(2, 5)
agree = all(
    fullrank_via_extension(HankelVec(v, 2), p) == (rank(hankel_from_vector(HankelVec(v, 2))) == 3)
    for v in product(range(2), repeat=5)
)
print("agrees on all 32 vectors:", agree)

for q, n in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]:
    print(q, n, count_fullrank_hankel(q, n), enumerate_fullrank_hankel(q, n))
