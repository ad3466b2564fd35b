"""Exact counting formulas and the brute-force oracles that recheck them.

Counts are of multisequences up to shift. The matrix oracles count every
nonzero state and divide by the orbit length ``q**n - 1``; a remainder means a
bug and raises :class:`NonIntegralOrbitQuotient`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from math import comb, prod
from typing import Any, Iterator, Sequence

import numpy as np

from . import enumeration as en
from .errors import BadRange, NonIntegralOrbitQuotient, TooLarge
from .gf import Poly, find_primitive, is_primitive
from .linalg import Mat, charpoly
from .multiseq import RVector, as_rvector
from .rroad import road

ORACLE_LIMIT = 1 << 22


# -- formulas -----------------------------------------------------------------


def grassmannian_size(l: int, m: int, q: int) -> int:
    """Number of ``l``-dimensional subspaces of ``F_q^m``."""
    if not 0 <= l <= m:
        raise BadRange(f"need 0 <= l <= m, got l={l}, m={m}")
    num = prod(q**m - q**i for i in range(l))
    den = prod(q**l - q**i for i in range(l))
    return num // den


def count_by_dimension(l: int, m: int, n: int, q: int) -> int:
    """Multisequences in ``F_q^m`` with a fixed primitive minimal polynomial of degree ``n`` and dimension ``l``.

    ``l = 0`` gives 0: the zero multisequence has minimal polynomial 1.
    """
    if not 0 <= l <= min(m, n):
        raise BadRange(f"need 0 <= l <= min(m, n), got l={l}, m={m}, n={n}")
    if l == 0:
        return 0
    return grassmannian_size(l, m, q) * prod(q**n - q**i for i in range(1, l))


def count_independent(m: int, n: int, q: int) -> int:
    if not 1 <= m <= n:
        raise BadRange(f"need 1 <= m <= n, got m={m}, n={n}")
    return prod(q**n - q**i for i in range(1, m))


def _max_extension_product(m: int, r: int, n: int, q: int) -> int:
    return prod(q**n - q**i for i in range(r - m + 1, r))


def count_max_extension(R: RVector | Sequence[int], n: int, q: int) -> int:
    """Multisequences whose R-extension has full dimension ``r``; depends on R only through ``r`` and ``m``."""
    R = as_rvector(R)
    if R.r > n:
        raise BadRange(f"need r <= n, got r={R.r}, n={n}")
    return _max_extension_product(R.m, R.r, n, q)


def count_Nr(m: int, r: int, n: int, q: int) -> int:
    """Sum of :func:`count_max_extension` over all compositions of ``r`` into ``m`` positive parts."""
    if not 1 <= m <= r <= n:
        raise BadRange(f"need 1 <= m <= r <= n, got m={m}, r={r}, n={n}")
    return comb(r - 1, r - m) * _max_extension_product(m, r, n, q)


def count_lfsr(m: int, b: int, q: int) -> int:
    """m-companion matrices of size ``m*b`` with a given primitive characteristic polynomial."""
    if m < 1 or b < 1:
        raise BadRange(f"need m, b >= 1, got m={m}, b={b}")
    n = m * b
    return prod(q**n - q ** (n - i) for i in range(1, m))


def compositions(r: int, m: int) -> Iterator[RVector]:
    """All ``R`` in ``Z_+^m`` with ``sum(R) == r``, in lexicographic order of cut points."""
    for cuts in combinations(range(1, r), m - 1):
        bounds = (0,) + cuts + (r,)
        yield RVector(bounds[i + 1] - bounds[i] for i in range(m))


# -- reports ------------------------------------------------------------------


@dataclass
class CountReport:
    formula_value: int
    oracle_value: int | None = None
    parameters: dict[str, Any] = field(default_factory=dict)

    @property
    def match(self) -> bool | None:
        if self.oracle_value is None:
            return None
        return self.formula_value == self.oracle_value

    def to_json(self) -> dict[str, Any]:
        return {
            "formula": self.formula_value,
            "oracle": self.oracle_value,
            "match": self.match,
            "parameters": self.parameters,
        }


# -- oracles --------------------------------------------------------------------


def _guard(size: int) -> None:
    if size > ORACLE_LIMIT:
        raise TooLarge(f"search space of {size} exceeds the oracle limit {ORACLE_LIMIT}")


def _orbit_quotient(total: int, q: int, n: int) -> int:
    orbit = q**n - 1
    quot, rem = divmod(total, orbit)
    if rem:
        raise NonIntegralOrbitQuotient(f"{total} states do not split into orbits of size {orbit}")
    return quot


def _companion_np(p: Poly) -> np.ndarray:
    n, q = p.degree, p.q
    A = np.zeros((n, n), dtype=np.int64)
    A[np.arange(1, n), np.arange(n - 1)] = 1
    A[:, n - 1] = [(-c) % q for c in p.coeffs[:n]]
    return A


def _shard_rank_count(lo: int, hi: int, *, q: int, m: int, n: int, target: int) -> int:
    X = en.matrices(lo, hi, q, m, n)
    return int(np.count_nonzero(en.batch_rank(X, q) == target))


def _shard_extension_count(
    lo: int, hi: int, *, q: int, m: int, n: int, powers: tuple[np.ndarray, ...], R: tuple[int, ...]
) -> int:
    X = en.matrices(lo, hi, q, m, n)
    ext = en.batch_extension(X, powers, R, q)
    return int(np.count_nonzero(en.batch_rank(ext, q) == sum(R)))


def count_states_by_rank(l: int, m: int, n: int, q: int, start: int = 1, stop: int | None = None, jobs: int = 1) -> int:
    """Number of ``m x n`` matrices of rank ``l`` with index in ``[start, stop)``."""
    total = q ** (m * n)
    _guard(total)
    stop = total if stop is None else stop
    return en.sharded_sum(partial(_shard_rank_count, q=q, m=m, n=n, target=l), start, stop, jobs)


def oracle_by_dimension(l: int, m: int, n: int, q: int, jobs: int = 1) -> int:
    if l == 0:
        return 0
    return _orbit_quotient(count_states_by_rank(l, m, n, q, jobs=jobs), q, n)


def count_states_max_extension(
    R: RVector | Sequence[int], p: Poly, start: int = 1, stop: int | None = None, jobs: int = 1
) -> int:
    """Nonzero states (index range ``[start, stop)``) whose R-extension under ``p`` has rank ``r``."""
    R = as_rvector(R)
    q, n, m = p.q, p.degree, R.m
    total = q ** (m * n)
    _guard(total)
    stop = total if stop is None else stop
    powers = tuple(en.matrix_powers(_companion_np(p), max(R), q))
    fn = partial(_shard_extension_count, q=q, m=m, n=n, powers=powers, R=R.parts)
    return en.sharded_sum(fn, max(start, 1), stop, jobs)


def oracle_max_extension(R: RVector | Sequence[int], p: Poly, jobs: int = 1) -> int:
    return _orbit_quotient(count_states_max_extension(R, p, jobs=jobs), p.q, p.degree)


def oracle_Nr(m: int, r: int, p: Poly, jobs: int = 1) -> int:
    """Composition-summed oracle: sum of :func:`oracle_max_extension` over all R with ``sum(R) == r``."""
    return sum(oracle_max_extension(R, p, jobs=jobs) for R in compositions(r, m))


def _shard_lfsr_count(lo: int, hi: int, *, q: int, m: int, b: int, coeffs: tuple[int, ...], target: Poly) -> int:
    n = m * b
    blocks = en.digits(lo, hi, q, m * m * b).reshape(-1, b, m, m)
    N = blocks.shape[0]
    A = np.zeros((N, n, n), dtype=np.int64)
    A[:, np.arange(n - m), np.arange(m, n)] = 1
    for j in range(b):
        A[:, n - m :, j * m : (j + 1) * m] = blocks[:, j]
    # Cayley-Hamilton: charpoly == target forces target(A) == 0, so this prefilter drops no match
    survivors = np.nonzero(~en.batch_poly_at(A, coeffs, q).any(axis=(1, 2)))[0]
    return sum(1 for i in survivors if charpoly(Mat(A[i].tolist(), q, n)) == target)


def oracle_lfsr(m: int, b: int, p: Poly, start: int = 0, stop: int | None = None, jobs: int = 1) -> int:
    """Number of feedback tuples ``(B_0, ..., B_{b-1})`` whose m-companion matrix has charpoly ``p``."""
    q = p.q
    if p.degree != m * b:
        raise BadRange(f"polynomial degree {p.degree} differs from m*b = {m * b}")
    total = q ** (m * m * b)
    _guard(total)
    stop = total if stop is None else stop
    fn = partial(_shard_lfsr_count, q=q, m=m, b=b, coeffs=p.coeffs, target=p)
    return en.sharded_sum(fn, start, stop, jobs)


def oracle_road_counts(R: RVector | Sequence[int], n: int, ladder: dict[int, Poly], jobs: int = 1) -> list[tuple[RVector, int, int]]:
    """``(G, k, N(G, k))`` for each point G on the R-road with ``k = n - r + sum(G)``."""
    R = as_rvector(R)
    out = []
    for G in road(R):
        k = n - R.r + G.r
        out.append((G, k, oracle_max_extension(G, ladder[k], jobs=jobs)))
    return out


def default_poly(q: int, n: int, p: Poly | None = None) -> Poly:
    if p is None:
        return find_primitive(q, n)
    if p.degree != n or not is_primitive(p):
        raise BadRange(f"{p} is not a primitive polynomial of degree {n}")
    return p
