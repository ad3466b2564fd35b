"""Slow, obviously-correct reference computations used only by the tests."""

from itertools import permutations, product

from rextension.gf import Poly


def perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def charpoly_leibniz(rows, q):
    """det(sI - M) by the Leibniz expansion over F_q[s]."""
    n = len(rows)
    entry = [
        [Poly([-rows[i][j], 1], q) if i == j else Poly([-rows[i][j]], q) for j in range(n)]
        for i in range(n)
    ]
    total = Poly([], q)
    for perm in permutations(range(n)):
        term = Poly([perm_sign(perm)], q)
        for i, j in enumerate(perm):
            term = term * entry[i][j]
        total = total + term
    return total


def rank_bruteforce(rows, q):
    """Rank as log_q of the number of distinct vectors in the row span."""
    if not rows:
        return 0
    span = set()
    for coeffs in product(range(q), repeat=len(rows)):
        span.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(len(rows[0]))))
    size, k = len(span), 0
    while q**k < size:
        k += 1
    return k


def subspaces(l, m, q):
    """Every l-dimensional subspace of F_q^m as a frozenset of vectors."""
    vectors = list(product(range(q), repeat=m))
    found = set()
    for basis in product(vectors, repeat=l):
        if rank_bruteforce(list(basis), q) != l:
            continue
        span = frozenset(
            tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) % q for j in range(m))
            for coeffs in product(range(q), repeat=l)
        )
        found.add(span)
    return found


def order_bruteforce(p):
    """Least e > 0 with s^e = 1 mod p, by stepping powers of s."""
    one = Poly([1], p.q)
    s = Poly([0, 1], p.q)
    cur = s % p
    e = 1
    while cur != one:
        cur = (cur * s) % p
        e += 1
        if e > p.q ** p.degree:
            return None
    return e


def det_2x2(a, b, c, d, q):
    return (a * d - b * c) % q
