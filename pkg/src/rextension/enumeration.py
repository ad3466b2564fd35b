"""Vectorised exhaustive enumeration over F_q matrices.

This is the engine behind the brute-force oracles. It deliberately shares no
code with :mod:`rextension.linalg`: ranks come from a batched numpy
elimination, so an oracle count never passes through the path it checks.

Matrices are indexed by the integers ``0 .. q**(rows*cols) - 1``; the
flattened row-major entries are the little-endian base-``q`` digits.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Sequence

import numpy as np

CHUNK = 1 << 16


def digits(start: int, stop: int, q: int, width: int) -> np.ndarray:
    """Base-``q`` little-endian digits of ``start .. stop-1``, shape ``(stop-start, width)``."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, width), dtype=np.int64)
    for j in range(width):
        out[:, j] = idx % q
        idx //= q
    return out


def matrices(start: int, stop: int, q: int, rows: int, cols: int) -> np.ndarray:
    return digits(start, stop, q, rows * cols).reshape(-1, rows, cols)


def chunks(start: int, stop: int, size: int = CHUNK) -> Iterator[tuple[int, int]]:
    for lo in range(start, stop, size):
        yield lo, min(lo + size, stop)


def batch_rank(a: np.ndarray, q: int) -> np.ndarray:
    """Rank over F_q of every matrix in the stack ``a`` of shape ``(N, r, c)``."""
    a = np.array(a, dtype=np.int64) % q
    N, r, c = a.shape
    inv = np.zeros(q, dtype=np.int64)
    for v in range(1, q):
        inv[v] = pow(v, -1, q)
    rank = np.zeros(N, dtype=np.int64)
    row_ids = np.arange(r)
    for col in range(c):
        cand = (a[:, :, col] != 0) & (row_ids[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        sel = np.nonzero(has)[0]
        piv = cand[sel].argmax(axis=1)
        tgt = rank[sel]
        prow = a[sel, piv].copy()
        a[sel, piv] = a[sel, tgt]
        prow = prow * inv[prow[:, col]][:, None] % q
        a[sel, tgt] = prow
        below = row_ids[None, :] > tgt[:, None]
        factors = a[sel, :, col] * below
        a[sel] = (a[sel] - factors[:, :, None] * prow[:, None, :]) % q
        rank[sel] += 1
    return rank


def matrix_powers(A: np.ndarray, count: int, q: int) -> list[np.ndarray]:
    """``[I, A, ..., A^(count-1)]`` modulo ``q``."""
    out = [np.eye(A.shape[0], dtype=np.int64)]
    for _ in range(count - 1):
        out.append(out[-1] @ A % q)
    return out


def batch_extension(X: np.ndarray, powers: Sequence[np.ndarray], R: Sequence[int], q: int) -> np.ndarray:
    """Stack rows ``x_i A^j`` (``j < r_i``) for each state in ``X`` of shape ``(N, m, n)``."""
    blocks = []
    for i, ri in enumerate(R):
        for j in range(ri):
            blocks.append(X[:, i, :] @ powers[j] % q)
    return np.stack(blocks, axis=1)


def batch_poly_at(mats: np.ndarray, coeffs: Sequence[int], q: int) -> np.ndarray:
    """``f(M)`` for every matrix in the stack, by Horner's rule."""
    N, n, _ = mats.shape
    eye = np.eye(n, dtype=np.int64)
    out = np.zeros_like(mats)
    for c in reversed(coeffs):
        out = (out @ mats + c * eye) % q
    return out


def sharded_sum(fn: Callable[[int, int], int], start: int, stop: int, jobs: int = 1) -> int:
    """Sum ``fn(lo, hi)`` over disjoint sub-ranges of ``[start, stop)``, optionally in processes."""
    if jobs <= 1 or stop - start <= CHUNK:
        return sum(fn(lo, hi) for lo, hi in chunks(start, stop))
    step = -(-(stop - start) // jobs)
    bounds = [(lo, min(lo + step, stop)) for lo in range(start, stop, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_chunked, fn, lo, hi) for lo, hi in bounds]
        return sum(f.result() for f in futures)


def _chunked(fn: Callable[[int, int], int], lo: int, hi: int) -> int:
    return sum(fn(a, b) for a, b in chunks(lo, hi))
