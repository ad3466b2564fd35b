"""Dense matrices over F_p.

Matrices are immutable values; every operation returns a fresh :class:`Mat`.
Entries are stored as canonical ints in ``[0, q)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import FieldMismatch, NoSolution, ShapeMismatch, Singular
from .gf import Poly

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Mat:
    rows_data: tuple[Vector, ...]
    q: int
    ncols: int

    def __init__(self, rows: Iterable[Iterable[int]], q: int, ncols: int | None = None):
        data = tuple(tuple(int(v) % q for v in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ShapeMismatch("ragged matrix rows")
        object.__setattr__(self, "rows_data", data)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def identity(cls, n: int, q: int) -> Mat:
        return cls(([int(i == j) for j in range(n)] for i in range(n)), q, n)

    @classmethod
    def zeros(cls, rows: int, cols: int, q: int) -> Mat:
        return cls(([0] * cols for _ in range(rows)), q, cols)

    @property
    def nrows(self) -> int:
        return len(self.rows_data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> Vector:
        return self.rows_data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows_data)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows_data[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows_data]

    @property
    def T(self) -> Mat:
        return Mat(zip(*self.rows_data), self.q, self.nrows) if self.ncols else Mat.zeros(0, self.nrows, self.q)

    def _check(self, other: Mat) -> None:
        if other.q != self.q:
            raise FieldMismatch(f"F_{self.q} vs F_{other.q}")

    def __add__(self, other: Mat) -> Mat:
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return Mat(([a + b for a, b in zip(r, s)] for r, s in zip(self.rows_data, other.rows_data)), self.q, self.ncols)

    def scale(self, c: int) -> Mat:
        return Mat(([c * v for v in r] for r in self.rows_data), self.q, self.ncols)

    def __matmul__(self, other: Mat) -> Mat:
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        cols = list(zip(*other.rows_data))
        q = self.q
        return Mat(
            ([sum(a * b for a, b in zip(r, c)) % q for c in cols] for r in self.rows_data),
            q,
            other.ncols,
        )

    def __pow__(self, k: int) -> Mat:
        if self.nrows != self.ncols:
            raise ShapeMismatch("power of a non-square matrix")
        base = self if k >= 0 else inverse(self)
        k = abs(k)
        result = Mat.identity(self.nrows, self.q)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def vecmul(self, x: Sequence[int]) -> Vector:
        """Row vector times matrix, ``x @ self``."""
        if len(x) != self.nrows:
            raise ShapeMismatch(f"vector of length {len(x)} times {self.shape}")
        q = self.q
        out = [0] * self.ncols
        for xi, r in zip(x, self.rows_data):
            if xi:
                for j, v in enumerate(r):
                    out[j] += xi * v
        return tuple(v % q for v in out)

    def matvec(self, x: Sequence[int]) -> Vector:
        """Matrix times column vector, ``self @ x``."""
        if len(x) != self.ncols:
            raise ShapeMismatch(f"{self.shape} times vector of length {len(x)}")
        q = self.q
        return tuple(sum(a * b for a, b in zip(r, x)) % q for r in self.rows_data)

    def submatrix(self, rows: slice | Sequence[int], cols: slice | Sequence[int]) -> Mat:
        ri = range(self.nrows)[rows] if isinstance(rows, slice) else rows
        ci = range(self.ncols)[cols] if isinstance(cols, slice) else cols
        return Mat(([self.rows_data[i][j] for j in ci] for i in ri), self.q, len(ci))

    def permute_rows(self, order: Sequence[int]) -> Mat:
        return Mat((self.rows_data[i] for i in order), self.q, self.ncols)

    def vstack(self, *others: Mat) -> Mat:
        rows = list(self.rows_data)
        for o in others:
            self._check(o)
            if o.ncols != self.ncols:
                raise ShapeMismatch("vstack column mismatch")
            rows.extend(o.rows_data)
        return Mat(rows, self.q, self.ncols)

    def to_json(self) -> dict[str, Any]:
        return {"rows": self.nrows, "cols": self.ncols, "q": self.q, "data": self.tolist()}

    @classmethod
    def from_json(cls, obj: dict[str, Any], q: int | None = None) -> Mat:
        mq = obj.get("q", q)
        if mq is None:
            raise ValueError("matrix JSON lacks 'q'")
        if q is not None and mq != q:
            raise FieldMismatch(f"matrix over F_{mq}, expected F_{q}")
        m = cls(obj["data"], mq, obj.get("cols"))
        if "rows" in obj and obj["rows"] != m.nrows:
            raise ShapeMismatch(f"declared {obj['rows']} rows, found {m.nrows}")
        return m

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self.rows_data)


def row_reduce(M: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and pivot columns.

    First nonzero entry at or below the current row is the pivot, scanning
    columns left to right.
    """
    q = M.q
    a = [list(r) for r in M.rows_data]
    pivots: list[int] = []
    r = 0
    for c in range(M.ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, q)
        a[r] = [v * inv % q for v in a[r]]
        pr = a[r]
        for i in range(len(a)):
            f = a[i][c]
            if i != r and f:
                a[i] = [(v - f * w) % q for v, w in zip(a[i], pr)]
        pivots.append(c)
        r += 1
    return Mat(a, q, M.ncols), pivots


def rank(M: Mat) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return len(row_reduce(M)[1])


def inverse(M: Mat) -> Mat:
    n = M.nrows
    if M.ncols != n:
        raise ShapeMismatch("inverse of a non-square matrix")
    aug = Mat((r + e for r, e in zip(M.rows_data, Mat.identity(n, M.q).rows_data)), M.q, 2 * n)
    red, piv = row_reduce(aug)
    if piv[:n] != list(range(n)):
        raise Singular("matrix is singular")
    return red.submatrix(slice(None), slice(n, 2 * n))


def solve_left(M: Mat, e: Sequence[int]) -> Vector:
    """A row vector ``a`` with ``a @ M == e`` (unique when ``M`` is invertible)."""
    if M.nrows != M.ncols:
        raise ShapeMismatch("solve_left expects a square matrix")
    if len(e) != M.ncols:
        raise ShapeMismatch("right-hand side length mismatch")
    n = M.nrows
    # a @ M = e  <=>  M^T a^T = e^T
    aug = Mat((list(col) + [b] for col, b in zip(zip(*M.rows_data), e)), M.q, n + 1)
    red, piv = row_reduce(aug)
    if n in piv:
        raise NoSolution("e is not in the row space of M")
    a = [0] * n
    for i, c in enumerate(piv):
        a[c] = red[i, n]
    return tuple(a)


def charpoly(M: Mat) -> Poly:
    """Monic ``det(sI - M)`` via reduction to upper Hessenberg form."""
    n = M.nrows
    if M.ncols != n:
        raise ShapeMismatch("charpoly of a non-square matrix")
    q = M.q
    h = [list(r) for r in M.rows_data]
    # similarity transforms: eliminate below the subdiagonal column by column
    for c in range(n - 2):
        piv = next((i for i in range(c + 1, n) if h[i][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            h[piv], h[c + 1] = h[c + 1], h[piv]
            for row in h:
                row[piv], row[c + 1] = row[c + 1], row[piv]
        inv = pow(h[c + 1][c], -1, q)
        for i in range(c + 2, n):
            f = h[i][c] * inv % q
            if not f:
                continue
            # row_i -= f * row_{c+1}; then col_{c+1} += f * col_i
            h[i] = [(v - f * w) % q for v, w in zip(h[i], h[c + 1])]
            for row in h:
                row[c + 1] = (row[c + 1] + f * row[i]) % q
    # p_k(s) = (s - h_kk) p_{k-1}(s) - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_{i-1}(s)
    polys = [Poly([1], q)]
    for k in range(n):
        pk = Poly([-h[k][k], 1], q) * polys[k]
        t = 1
        for i in range(k - 1, -1, -1):
            t = t * h[i + 1][i] % q
            if not t:
                break
            pk = pk - polys[i] * (h[i][k] * t % q)
        polys.append(pk)
    return polys[n]


def poly_eval_matrix(f: Poly, A: Mat) -> Mat:
    """``f(A)`` by Horner's rule."""
    n = A.nrows
    result = Mat.zeros(n, n, A.q)
    ident = Mat.identity(n, A.q)
    for c in reversed(f.coeffs):
        result = result @ A + ident.scale(c)
    return result


def dot(x: Sequence[int], y: Sequence[int], q: int) -> int:
    return sum(a * b for a, b in zip(x, y)) % q
