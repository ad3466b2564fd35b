"""Scalar Hankel matrices and their full-rank count."""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Iterable

import numpy as np

from . import enumeration as en
from .errors import BadDegree, EvenLength, TooLarge
from .gf import Poly
from .linalg import Mat
from .multiseq import MultiseqState, extension_dimension
from .synthesis import unit

ORACLE_LIMIT = 1 << 22


@dataclass(frozen=True)
class HankelVec:
    """The anti-diagonal values ``(a_1, ..., a_{2n-1})`` of an ``n x n`` Hankel matrix."""

    values: tuple[int, ...]
    q: int

    def __init__(self, values: Iterable[int], q: int):
        vals = tuple(int(v) % q for v in values)
        if len(vals) % 2 == 0:
            raise EvenLength(f"Hankel vectors have odd length, got {len(vals)}")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "q", q)

    @property
    def n(self) -> int:
        return (len(self.values) + 1) // 2


def hankel_from_vector(a: HankelVec) -> Mat:
    n = a.n
    return Mat(([a.values[i + j] for j in range(n)] for i in range(n)), a.q, n)


def fullrank_via_extension(a: HankelVec, p: Poly) -> bool:
    """Decide whether H(a) is nonsingular through the (n-1, n)-extension of the state ``[e; a]``."""
    n = a.n
    if p.degree != 2 * n - 1 or p.q != a.q:
        raise BadDegree(f"need a primitive polynomial of degree {2 * n - 1} over F_{a.q}")
    if not any(a.values):
        return False
    if n == 1:
        # (0, 1)-extension keeps only the second component
        return a.values[0] != 0
    s = MultiseqState(Mat([unit(2 * n - 1), a.values], a.q), p)
    return extension_dimension(s, (n - 1, n)) == 2 * n - 1


def count_fullrank_hankel(q: int, n: int) -> int:
    return q ** (2 * n - 1) - q ** (2 * n - 2)


def _shard_fullrank(lo: int, hi: int, *, q: int, n: int) -> int:
    vecs = en.digits(lo, hi, q, 2 * n - 1)
    idx = np.arange(n)[:, None] + np.arange(n)[None, :]
    H = vecs[:, idx]
    return int(np.count_nonzero(en.batch_rank(H, q) == n))


def enumerate_fullrank_hankel(q: int, n: int, start: int = 0, stop: int | None = None, jobs: int = 1) -> int:
    """Count nonsingular Hankel matrices among vectors with index in ``[start, stop)`` by elimination."""
    total = q ** (2 * n - 1)
    if total > ORACLE_LIMIT:
        raise TooLarge(f"{total} Hankel vectors exceed the oracle limit {ORACLE_LIMIT}")
    stop = total if stop is None else stop
    return en.sharded_sum(partial(_shard_fullrank, q=q, n=n), start, stop, jobs)
