"""Generation of multisequences whose R-extensions have maximum dimension.

Starting from a full-row-rank state with a primitive minimal polynomial of
degree ``n - r + m``, each step of the backward road traversal realigns the
state so that the active row is the last unit vector, appends one free field
element to every other row and raises the degree by one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .errors import (
    BadChoices,
    BadDegree,
    BadInitialState,
    BadLadder,
    RowNotUnit,
    ShapeMismatch,
    VerificationError,
    ZeroRow,
)
from .gf import Poly, as_poly, find_primitive, is_primitive
from .linalg import Mat, Vector, rank, solve_left
from .multiseq import MultiseqState, RVector, as_rvector, extension_dimension, shift_rows
from .rroad import backward_traverse


def unit(k: int, i: int | None = None) -> Vector:
    """``e_i^k`` with 1-based ``i`` (default: the last position)."""
    i = k if i is None else i
    return tuple(int(j == i - 1) for j in range(k))


@dataclass(frozen=True)
class ChoiceScript:
    """The free choices of one run: the initial state and the appended elements per step.

    ``appended[t]`` lists ``d_i`` for every row ``i != c`` in ascending order.
    """

    initial_state: Mat
    appended: tuple[tuple[int, ...], ...]

    def __init__(self, initial_state: Mat, appended: Sequence[Sequence[int]]):
        object.__setattr__(self, "initial_state", initial_state)
        object.__setattr__(
            self, "appended", tuple(tuple(v % initial_state.q for v in d) for d in appended)
        )

    def to_json(self) -> dict[str, Any]:
        return {"initial_state": self.initial_state.to_json(), "appended": [list(d) for d in self.appended]}

    @classmethod
    def from_json(cls, obj: Mapping[str, Any], q: int | None = None) -> ChoiceScript:
        return cls(Mat.from_json(obj["initial_state"], q), obj["appended"])

    def validate(self, R: RVector, n: int) -> None:
        m, r = R.m, R.r
        M = self.initial_state
        if M.shape != (m, n - r + m):
            raise BadInitialState(f"initial state is {M.shape}, expected {(m, n - r + m)}")
        if rank(M) != m:
            raise BadInitialState("initial state does not have full row rank")
        if len(self.appended) != r - m:
            raise BadChoices(f"{len(self.appended)} appended vectors, expected {r - m}")
        if any(len(d) != m - 1 for d in self.appended):
            raise BadChoices(f"each appended vector must have {m - 1} entries")


@dataclass(frozen=True)
class PolyLadder:
    """Primitive polynomials keyed by degree."""

    q: int
    polys: Mapping[int, Poly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for deg, p in self.polys.items():
            if p.q != self.q or p.degree != deg or not is_primitive(p):
                raise BadLadder(f"{p} is not a primitive polynomial of degree {deg} over F_{self.q}")

    @classmethod
    def default(cls, q: int, lo: int, hi: int, overrides: Mapping[int, Poly] | None = None) -> PolyLadder:
        polys = {d: find_primitive(q, d) for d in range(lo, hi + 1)}
        polys.update(overrides or {})
        return cls(q, polys)

    def __getitem__(self, degree: int) -> Poly:
        try:
            return self.polys[degree]
        except KeyError:
            raise BadLadder(f"ladder has no polynomial of degree {degree}") from None

    def covers(self, lo: int, hi: int) -> bool:
        return all(d in self.polys for d in range(lo, hi + 1))

    def to_json(self) -> dict[str, Any]:
        return {"q": self.q, "polys": {str(d): list(p.coeffs) for d, p in sorted(self.polys.items())}}

    @classmethod
    def from_json(cls, obj: Mapping[str, Any], q: int | None = None) -> PolyLadder:
        """Accepts ``{"q": ..., "polys": {...}}`` or a bare ``{degree: polynomial}`` map."""
        if "polys" in obj:
            q, obj = obj.get("q", q), obj["polys"]
        return cls(q, {int(d): as_poly(v, q) for d, v in obj.items()})


def find_f(x: Sequence[int], A: Mat) -> Poly:
    """``f`` of degree below ``k`` with ``x f(A) = e_k^k``.

    Solves ``a @ [x; xA; ...; xA^(k-1)] = e_k^k`` and reads ``f`` off ``a``.
    """
    k = A.nrows
    if len(x) != k:
        raise ShapeMismatch(f"row of length {len(x)} for a {k}x{k} companion matrix")
    if not any(x):
        raise ZeroRow("cannot realign a zero row")
    krylov = Mat(shift_rows(x, A, k), A.q, k)
    return Poly(solve_left(krylov, unit(k)), A.q)


def apply_poly(state: Mat, f: Poly, A: Mat) -> Mat:
    """``state @ f(A)`` evaluated row by row as ``sum a_j (row A^j)``."""
    q = A.q
    k = A.nrows
    out = []
    for x in state.rows_data:
        acc = [0] * k
        for a_j, xA_j in zip(f.coeffs, shift_rows(x, A, len(f.coeffs))):
            if a_j:
                for t, v in enumerate(xA_j):
                    acc[t] += a_j * v
        out.append([v % q for v in acc])
    return Mat(out, q, k)


def realign(s: MultiseqState, c: int) -> MultiseqState:
    """The shift of ``s`` whose row ``c`` (1-based) is ``e_n^n``."""
    x = s.state.row(c - 1)
    f = find_f(x, s.companion)
    return s.with_state(apply_poly(s.state, f, s.companion))


def lift(s: MultiseqState, c: int, d: Sequence[int], p_next: Poly) -> MultiseqState:
    """Append ``d_i`` to each row ``i != c`` and set row ``c`` to ``e_(k+1)^(k+1)``."""
    k = s.n
    if p_next.degree != k + 1:
        raise BadDegree(f"next polynomial has degree {p_next.degree}, expected {k + 1}")
    if s.state.row(c - 1) != unit(k):
        raise RowNotUnit(f"row {c} is not e_{k}^{k}; realign first")
    if len(d) != s.m - 1:
        raise BadChoices(f"expected {s.m - 1} appended elements, got {len(d)}")
    extra = iter(d)
    rows = []
    for i, x in enumerate(s.state.rows_data):
        rows.append(unit(k + 1) if i == c - 1 else x + (next(extra) % s.q,))
    return MultiseqState(Mat(rows, s.q, k + 1), p_next)


def random_choices(q: int, R: RVector | Sequence[int], n: int, seed: int) -> ChoiceScript:
    """A replayable random :class:`ChoiceScript` (uniform full-rank start, uniform ``d_i``)."""
    R = as_rvector(R)
    m, r = R.m, R.r
    k0 = n - r + m
    if k0 < m:
        raise BadInitialState(f"n={n} too small for R={R}: need n >= r")
    rng = random.Random(seed)
    while True:
        M = Mat(([rng.randrange(q) for _ in range(k0)] for _ in range(m)), q, k0)
        if rank(M) == m:
            break
    appended = [[rng.randrange(q) for _ in range(m - 1)] for _ in range(r - m)]
    return ChoiceScript(M, appended)


@dataclass
class SynthesisTrace:
    """Per-step record: road point before the step, active position, realigned and lifted states."""

    steps: list[dict[str, Any]] = field(default_factory=list)


def synthesize(
    q: int,
    R: RVector | Sequence[int],
    n: int,
    ladder: PolyLadder | None = None,
    choices: ChoiceScript | int = 0,
    verify: bool = False,
    trace: SynthesisTrace | None = None,
) -> MultiseqState:
    """A multisequence with minimal polynomial ``ladder[n]`` whose R-extension has dimension ``r``.

    ``choices`` is either an explicit :class:`ChoiceScript` or an integer seed
    for :func:`random_choices`. With ``verify`` the extension dimension is
    checked after every step.
    """
    R = as_rvector(R)
    m, r = R.m, R.r
    if n < r:
        raise BadDegree(f"n={n} must be at least r={r}")
    k0 = n - r + m
    if ladder is None:
        ladder = PolyLadder.default(q, k0, n)
    if ladder.q != q or not ladder.covers(k0, n):
        raise BadLadder(f"ladder must cover degrees {k0}..{n} over F_{q}")
    if isinstance(choices, int):
        choices = random_choices(q, R, n, choices)
    if choices.initial_state.q != q:
        raise BadInitialState("initial state over the wrong field")
    choices.validate(R, n)

    s = MultiseqState(choices.initial_state, ladder[k0])
    steps = backward_traverse(R)
    assert len(steps) == r - m
    for (G, c), d in zip(steps, choices.appended):
        aligned = realign(s, c)
        s = lift(aligned, c, d, ladder[s.n + 1])
        if trace is not None:
            trace.steps.append({"G": G.parts, "active": c, "realigned": aligned.state, "lifted": s.state})
        if verify:
            G_next = list(G.parts)
            G_next[c - 1] += 1
            dim = extension_dimension(s, G_next)
            if dim != sum(G_next):
                raise VerificationError(f"after step at {G}: extension dimension {dim} != {sum(G_next)}")
    return s
