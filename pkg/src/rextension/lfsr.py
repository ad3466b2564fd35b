"""Word-based LFSRs with m-input m-output delay blocks.

The register state is the column stack ``(W(k); W(k+1); ...; W(k+b-1))`` of
``b`` words of width ``m``. One clock multiplies it by the m-companion
transition matrix, whose bottom block row ``(B_0, ..., B_{b-1})`` gives

    W(k+b) = B_0 W(k) + B_1 W(k+1) + ... + B_{b-1} W(k+b-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import ExtensionDeficient, NotMCompanion, OrbitTooLarge, ShapeMismatch, VerificationError, ZeroState
from .gf import Poly, is_primitive
from .linalg import Mat, Vector, charpoly, inverse, rank
from .multiseq import MultiseqState

MAX_PERIOD_WALK = 1 << 24


@dataclass(frozen=True)
class LfsrSpec:
    q: int
    m: int
    b: int
    blocks: tuple[Mat, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if len(self.blocks) != self.b:
            raise ShapeMismatch(f"{len(self.blocks)} feedback blocks for b={self.b}")
        for B in self.blocks:
            if B.shape != (self.m, self.m) or B.q != self.q:
                raise ShapeMismatch(f"feedback block of shape {B.shape} over F_{B.q}")

    @property
    def n(self) -> int:
        return self.m * self.b

    def transition(self) -> MCompanion:
        n, m = self.n, self.m
        rows = [[0] * n for _ in range(n)]
        for i in range(n - m):
            rows[i][i + m] = 1
        for j, B in enumerate(self.blocks):
            for i in range(m):
                rows[n - m + i][j * m : (j + 1) * m] = B.row(i)
        return MCompanion(Mat(rows, self.q, n), m)

    def to_json(self) -> dict[str, Any]:
        return {"q": self.q, "m": self.m, "b": self.b, "blocks": [B.to_json() for B in self.blocks]}

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> LfsrSpec:
        q = obj["q"]
        return cls(q, obj["m"], obj["b"], tuple(Mat.from_json(B, q) for B in obj["blocks"]))


def _mcompanion_violation(mat: Mat, m: int) -> str | None:
    n = mat.nrows
    if mat.ncols != n:
        return "not square"
    if m < 1 or n % m:
        return f"size {n} is not a multiple of word width {m}"
    for i in range(n - m):
        for j in range(n):
            if mat[i, j] != int(j == i + m):
                return f"entry ({i}, {j}) breaks the block-shift structure"
    return None


@dataclass(frozen=True)
class MCompanion:
    """An ``n x n`` matrix with identity blocks on the block superdiagonal."""

    mat: Mat
    m: int

    def __post_init__(self) -> None:
        problem = _mcompanion_violation(self.mat, self.m)
        if problem:
            raise NotMCompanion(problem)

    @property
    def b(self) -> int:
        return self.mat.nrows // self.m


def is_mcompanion(mat: Mat, m: int) -> bool:
    return _mcompanion_violation(mat, m) is None


def stacked_state(s: MultiseqState, b: int) -> Mat:
    """``[M; M A; ...; M A^(b-1)]`` for the state ``M`` and companion matrix ``A``."""
    if s.m * b != s.n:
        raise ShapeMismatch(f"m*b = {s.m * b} differs from the minimal polynomial degree {s.n}")
    blocks = [s.state]
    for _ in range(b - 1):
        blocks.append(blocks[-1] @ s.companion)
    return blocks[0].vstack(*blocks[1:])


def transition_from_multiseq(s: MultiseqState) -> MCompanion:
    """The transition matrix ``M* A (M*)^-1`` of the unique LFSR generating ``s``."""
    if s.n % s.m:
        raise ShapeMismatch(f"degree {s.n} is not a multiple of width {s.m}")
    Ms = stacked_state(s, s.n // s.m)
    if rank(Ms) != s.n:
        raise ExtensionDeficient("stacked state is singular: the (b,...,b)-extension is not maximal")
    result = MCompanion(Ms @ s.companion @ inverse(Ms), s.m)
    if charpoly(result.mat) != s.minpoly:
        raise VerificationError("transition matrix charpoly differs from the minimal polynomial")
    return result


def feedback_blocks(A: MCompanion) -> LfsrSpec:
    m, b, n = A.m, A.b, A.mat.nrows
    bottom = A.mat.submatrix(slice(n - m, n), slice(None))
    blocks = tuple(bottom.submatrix(slice(None), slice(j * m, (j + 1) * m)) for j in range(b))
    return LfsrSpec(A.mat.q, m, b, blocks)


def lfsr_step(spec: LfsrSpec, state: Sequence[int]) -> Vector:
    """One clock: drop ``W(k)`` and append ``W(k+b) = sum_j B_j W(k+j)``."""
    n, m, q = spec.n, spec.m, spec.q
    if len(state) != n:
        raise ShapeMismatch(f"state of length {len(state)} for n={n}")
    new = [0] * m
    for j, B in enumerate(spec.blocks):
        w = state[j * m : (j + 1) * m]
        for i, row in enumerate(B.rows_data):
            new[i] += sum(a * x for a, x in zip(row, w))
    return tuple(state[m:]) + tuple(v % q for v in new)


def output_words(spec: LfsrSpec, state: Sequence[int], count: int) -> list[Vector]:
    """``W(k), W(k+1), ..., W(k+count-1)`` from the register state at time ``k``."""
    m = spec.m
    words = [tuple(state[j * m : (j + 1) * m]) for j in range(spec.b)]
    cur = tuple(state)
    while len(words) < count:
        cur = lfsr_step(spec, cur)
        words.append(cur[-m:])
    return words[:count]


def multiseq_from_lfsr(spec: LfsrSpec, state: Sequence[int], minpoly: Poly) -> MultiseqState:
    """Matrix state ``[W(k), ..., W(k+n-1)]`` of the output multisequence."""
    cols = output_words(spec, state, spec.n)
    return MultiseqState(Mat(zip(*cols), spec.q, spec.n), minpoly)


def register_state(s: MultiseqState, b: int) -> Vector:
    """Register contents ``(W(k); ...; W(k+b-1))`` read from the first ``b`` columns of ``s``."""
    return tuple(s.state[i, j] for j in range(b) for i in range(s.m))


def period(spec: LfsrSpec, state: Sequence[int]) -> int:
    """Least ``t > 0`` returning ``state`` to itself, by direct iteration."""
    state = tuple(v % spec.q for v in state)
    if not any(state):
        raise ZeroState("the zero state is a fixed point")
    limit = spec.q**spec.n - 1
    if limit > MAX_PERIOD_WALK:
        raise OrbitTooLarge(f"q^n - 1 = {limit} exceeds the walk limit {MAX_PERIOD_WALK}")
    cur = lfsr_step(spec, state)
    t = 1
    while cur != state:
        if t > limit:
            raise ValueError("state is not periodic within q^n - 1 steps (singular transition?)")
        cur = lfsr_step(spec, cur)
        t += 1
    return t


@dataclass
class LfsrReport:
    structure_ok: bool
    charpoly: Poly
    charpoly_matches: bool
    is_primitive: bool
    period_checked: int | None = None
    expected_period: int | None = field(default=None)

    @property
    def ok(self) -> bool:
        period_ok = self.period_checked is None or self.period_checked == self.expected_period
        return self.structure_ok and self.charpoly_matches and self.is_primitive and period_ok

    def to_json(self) -> dict[str, Any]:
        return {
            "structure_ok": self.structure_ok,
            "charpoly": str(self.charpoly),
            "charpoly_coeffs": list(self.charpoly.coeffs),
            "charpoly_matches": self.charpoly_matches,
            "is_primitive": self.is_primitive,
            "period_checked": self.period_checked,
            "expected_period": self.expected_period,
            "ok": self.ok,
        }


def verify_lfsr(spec: LfsrSpec, p: Poly, check_period: bool = False) -> LfsrReport:
    """Check structure, characteristic polynomial and (optionally) period of ``spec`` against ``p``."""
    mat = spec.transition().mat
    cp = charpoly(mat)
    report = LfsrReport(
        structure_ok=is_mcompanion(mat, spec.m),
        charpoly=cp,
        charpoly_matches=cp == p,
        is_primitive=is_primitive(p),
    )
    if check_period and report.charpoly_matches and report.is_primitive:
        start = (0,) * (spec.n - 1) + (1,)
        report.expected_period = spec.q**spec.n - 1
        report.period_checked = period(spec, start)
    return report
