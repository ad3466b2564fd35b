"""The Phi map, R-roads and their backward traversal.

Positions reported to callers are 1-based.
"""

from __future__ import annotations

from typing import Sequence

from .errors import AlreadyAtR, AtOnes, NotOnRoad, ShapeMismatch
from .multiseq import RVector, as_rvector


def phi(G: RVector | Sequence[int]) -> RVector:
    """Decrement the first coordinate attaining the maximum."""
    G = as_rvector(G)
    gmax = max(G)
    if gmax == 1:
        raise AtOnes("phi is undefined at (1, ..., 1)")
    c = G.parts.index(gmax)
    return RVector(G[:c] + (gmax - 1,) + G[c + 1 :])


def road(R: RVector | Sequence[int]) -> list[RVector]:
    """``[R, phi(R), phi(phi(R)), ..., (1, ..., 1)]``; length ``r - m + 1``."""
    G = as_rvector(R)
    out = [G]
    while max(G) > 1:
        G = phi(G)
        out.append(G)
    return out


def _active(G: tuple[int, ...], R: tuple[int, ...]) -> int:
    gmax = max(G)
    for target in (gmax - 1, gmax):
        for c in range(len(G) - 1, -1, -1):
            if G[c] == target and G[c] < R[c]:
                return c
    raise NotOnRoad(f"no active coordinate for {G} towards {R}")


def active_coordinate(G: RVector | Sequence[int], R: RVector | Sequence[int], check: bool = True) -> int:
    """1-based position incremented when walking the R-road from G back towards R.

    With ``check`` the road is replayed from R to confirm G lies on it.
    """
    G, R = as_rvector(G), as_rvector(R)
    if G.m != R.m:
        raise ShapeMismatch(f"{G} and {R} differ in length")
    if G == R:
        raise AlreadyAtR(f"{G} is R itself")
    if check and G not in road(R):
        raise NotOnRoad(f"{G} is not on the road of {R}")
    return _active(G.parts, R.parts) + 1


def backward_traverse(R: RVector | Sequence[int]) -> list[tuple[RVector, int]]:
    """Walk from (1, ..., 1) up to R, emitting ``(G, active position)`` before each increment."""
    R = as_rvector(R)
    G = [1] * R.m
    steps: list[tuple[RVector, int]] = []
    while tuple(G) != R.parts:
        c = _active(tuple(G), R.parts)
        steps.append((RVector(G), c + 1))
        G[c] += 1
    return steps
