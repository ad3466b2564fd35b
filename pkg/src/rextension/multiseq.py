"""Multisequences over F_q represented by a matrix state and a primitive minimal polynomial.

Row ``i`` of a matrix state is the state vector of component sequence ``i``;
column ``j`` is the vector ``W(k + j)``. One shift of the multisequence is
right multiplication by the companion matrix of the minimal polynomial.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .errors import (
    InsufficientSamples,
    NotPrimitive,
    OrbitTooLarge,
    ShapeMismatch,
    ZeroState,
)
from .gf import Poly, companion_matrix, is_primitive
from .linalg import Mat, Vector, rank

MAX_ORBIT = 1 << 20


@dataclass(frozen=True)
class RVector:
    """Extension profile ``(r_1, ..., r_m)`` of positive integers; also a road point."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(v) for v in parts)
        if not parts:
            raise ValueError("RVector needs at least one part")
        if any(v < 1 for v in parts):
            raise ValueError(f"RVector parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> RVector:
        return cls(int(v) for v in text.replace("(", "").replace(")", "").split(",") if v.strip())

    @classmethod
    def ones(cls, m: int) -> RVector:
        return cls([1] * m)

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def r(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_rvector(R: RVector | Sequence[int]) -> RVector:
    return R if isinstance(R, RVector) else RVector(R)


@dataclass(frozen=True)
class MultiseqState:
    """A matrix state ``M_W(k)`` together with its primitive minimal polynomial."""

    state: Mat
    minpoly: Poly
    companion: Mat = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.state.q != self.minpoly.q:
            raise ShapeMismatch("state and minimal polynomial live over different fields")
        if not is_primitive(self.minpoly):
            raise NotPrimitive(f"{self.minpoly} is not primitive over F_{self.minpoly.q}")
        if self.state.ncols != self.minpoly.degree:
            raise ShapeMismatch(
                f"state has {self.state.ncols} columns, minimal polynomial degree is {self.minpoly.degree}"
            )
        if self.state.nrows == 0 or all(v == 0 for r in self.state.rows_data for v in r):
            raise ZeroState("a multisequence state must be nonzero")
        object.__setattr__(self, "companion", companion_matrix(self.minpoly))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], minpoly: Poly) -> MultiseqState:
        return cls(Mat(rows, minpoly.q), minpoly)

    @property
    def q(self) -> int:
        return self.minpoly.q

    @property
    def m(self) -> int:
        return self.state.nrows

    @property
    def n(self) -> int:
        return self.minpoly.degree

    def with_state(self, state: Mat) -> MultiseqState:
        return MultiseqState(state, self.minpoly)

    def to_json(self) -> dict[str, Any]:
        return {"q": self.q, "minpoly": list(self.minpoly.coeffs), "state": self.state.to_json()}

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> MultiseqState:
        q = obj["q"]
        return cls(Mat.from_json(obj["state"], q), Poly(obj["minpoly"], q))


def step(s: MultiseqState, k: int = 1) -> MultiseqState:
    """Shift by ``k`` (possibly negative): state becomes ``state @ A**k``."""
    if k == 0:
        return s
    return s.with_state(s.state @ (s.companion ** k))


def dimension(s: MultiseqState) -> int:
    return rank(s.state)


def shift_rows(x: Sequence[int], A: Mat, count: int) -> list[Vector]:
    """``[x, xA, ..., xA^(count-1)]``."""
    rows: list[Vector] = []
    cur = tuple(x)
    for _ in range(count):
        rows.append(cur)
        cur = A.vecmul(cur)
    return rows


def extension_state(s: MultiseqState, R: RVector | Sequence[int]) -> Mat:
    """Matrix state of the R-extension, grouped by component.

    Rows are ``x_1, x_1 A, ..., x_1 A^(r_1-1), x_2, ...``.
    """
    R = as_rvector(R)
    if R.m != s.m:
        raise ShapeMismatch(f"R has {R.m} parts, multisequence has {s.m} components")
    rows: list[Vector] = []
    for x, ri in zip(s.state.rows_data, R):
        rows.extend(shift_rows(x, s.companion, ri))
    return Mat(rows, s.q, s.n)


def extension_dimension(s: MultiseqState, R: RVector | Sequence[int]) -> int:
    return rank(extension_state(s, R))


def component_sequence(s: MultiseqState, i: int, length: int) -> list[int]:
    """First ``length`` terms ``W_i(k), W_i(k+1), ...`` of component ``i`` (0-based)."""
    x = s.state.row(i)
    out = list(x[:length])
    cur = x
    while len(out) < length:
        cur = s.companion.vecmul(cur)
        out.append(cur[-1])
    return out


def words(s: MultiseqState, length: int) -> list[Vector]:
    """The vectors ``W(k), ..., W(k + length - 1)``."""
    comps = [component_sequence(s, i, length) for i in range(s.m)]
    return [tuple(c[t] for c in comps) for t in range(length)]


def minimal_poly_oracle(samples: Sequence[int], q: int) -> Poly:
    """Minimal polynomial of a scalar sequence by Berlekamp-Massey over F_q.

    Warns with :class:`InsufficientSamples` when fewer than twice the found
    linear complexity were supplied, since the answer may then be a divisor.
    """
    seq = [int(v) % q for v in samples]
    C = [1]
    B = [1]
    L = 0
    shift = 1
    b = 1
    for k, sk in enumerate(seq):
        d = sk
        for i in range(1, min(L, len(C) - 1) + 1):
            d += C[i] * seq[k - i]
        d %= q
        if d == 0:
            shift += 1
            continue
        coef = d * pow(b, -1, q) % q
        T = C[:]
        C = C + [0] * max(0, len(B) + shift - len(C))
        for i, v in enumerate(B):
            C[i + shift] = (C[i + shift] - coef * v) % q
        if 2 * L <= k:
            L = k + 1 - L
            B = T
            b = d
            shift = 1
        else:
            shift += 1
    if 2 * L > len(seq):
        warnings.warn(
            f"{len(seq)} samples for linear complexity {L}; result may be a proper divisor",
            InsufficientSamples,
            stacklevel=2,
        )
    C = C + [0] * (L + 1 - len(C))
    # connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L  ->  s^L C(1/s)
    return Poly([C[L - i] for i in range(L + 1)], q)


def _orbit_size_guard(s: MultiseqState) -> int:
    size = s.q**s.n - 1
    if size > MAX_ORBIT:
        raise OrbitTooLarge(f"orbit of size {size} exceeds {MAX_ORBIT}")
    return size


def canonical_state(s: MultiseqState) -> MultiseqState:
    """Lexicographically least state (row-major) among all shifts of ``s``."""
    size = _orbit_size_guard(s)
    A = s.companion
    rows = s.state.rows_data
    best = rows
    for _ in range(size - 1):
        rows = tuple(A.vecmul(r) for r in rows)
        if rows < best:
            best = rows
    return s.with_state(Mat(best, s.q, s.n))


def same_multisequence(a: MultiseqState, b: MultiseqState) -> bool:
    """True when ``a`` and ``b`` are shifts of one another."""
    return a.minpoly == b.minpoly and canonical_state(a).state == canonical_state(b).state
