"""Prime-field arithmetic, polynomials over F_p and primitive polynomials.

Polynomial coefficients are stored little-endian: ``coeffs[i]`` is the
coefficient of ``s**i``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

from .errors import (
    DegreeZero,
    DivisionByZero,
    FieldMismatch,
    ModulusZero,
    NotIrreducible,
    NotMonic,
    ZeroConstantTerm,
)

if TYPE_CHECKING:
    from .linalg import Mat

MAX_MODULUS = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization ``{prime: exponent}`` of ``n >= 1``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime ``2 <= p < 2**16``."""

    p: int

    def __post_init__(self) -> None:
        if not (2 <= self.p < MAX_MODULUS) or not is_prime(self.p):
            raise ValueError(f"modulus must be a prime below 2^16, got {self.p}")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(v, self) for v in range(self.p))

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.p


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.p:
            raise ValueError(f"{self.value} is not a canonical element of F_{self.field.p}")

    def _other(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"F_{self.field.p} vs F_{other.field.p}")
            return other.value
        return other % self.field.p

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return self.field(self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return self.field(self.value - self._other(other))

    def __rsub__(self, other: int) -> FieldElement:
        return self.field(self._other(other) - self.value)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return self.field(self.value * self._other(other))

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return self.field(-self.value)

    def inv(self) -> FieldElement:
        return self.field(self.field.inv(self.value))

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return self.field(self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other: int) -> FieldElement:
        return self.field(self.field.div(self._other(other), self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"


def _trim(coeffs: Iterable[int], q: int) -> tuple[int, ...]:
    out = [c % q for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over F_q, little-endian coefficients, trailing zeros trimmed.

    The zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    coeffs: tuple[int, ...]
    q: int

    def __init__(self, coeffs: Iterable[int], q: int):
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", _trim(coeffs, q))

    @classmethod
    def monomial(cls, degree: int, q: int, coeff: int = 1) -> Poly:
        return cls([0] * degree + [coeff], q)

    @classmethod
    def parse(cls, text: str, q: int) -> Poly:
        return parse_poly(text, q)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: Poly) -> None:
        if other.q != self.q:
            raise FieldMismatch(f"F_{self.q}[s] vs F_{other.q}[s]")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly((self[i] + other[i] for i in range(n)), self.q)

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly((self[i] - other[i] for i in range(n)), self.q)

    def __neg__(self) -> Poly:
        return Poly((-c for c in self.coeffs), self.q)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly((c * other for c in self.coeffs), self.q)
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly((), self.q)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.q)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero:
            raise ModulusZero("polynomial division by zero")
        q = self.q
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = pow(other.lead, -1, q)
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] % q
            if c:
                f = c * inv_lead % q
                quot[k - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * b
        return Poly(quot, q), Poly(rem[:dq] if dq > 0 else (), q)

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self * pow(self.lead, -1, self.q)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.q
        return acc

    def to_text(self) -> str:
        return format_poly(self)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, q={self.q})"


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    """``base**e mod mod`` by square-and-multiply."""
    if mod.is_zero:
        raise ModulusZero("powmod with zero modulus")
    if e < 0:
        raise ValueError("negative exponent")
    result = Poly([1], base.q) % mod
    b = base % mod
    while e:
        if e & 1:
            result = (result * b) % mod
        b = (b * b) % mod
        e >>= 1
    return result


_TERM = re.compile(r"^(?:(\d+)\s*\*?\s*)?(s(?:\s*\^\s*(\d+))?)?$")


def parse_poly(text: str, q: int) -> Poly:
    """Parse ``"s^6+s+1"``, ``"3*s^2-s+2"`` or ``"coeffs=[1,1,0,0,0,0,1]"`` (little-endian)."""
    text = text.strip()
    if text.startswith("coeffs"):
        _, _, body = text.partition("=")
        return Poly(json.loads(body), q)
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial")
    pieces = re.findall(r"([+-]?)([^+-]+)", compact)
    if "".join(sign + term for sign, term in pieces) != compact:
        raise ValueError(f"cannot parse {text!r}")
    out: dict[int, int] = {}
    for sign, term in pieces:
        m = _TERM.match(term)
        if m is None or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            power = 0
        else:
            power = int(m.group(3)) if m.group(3) is not None else 1
        if sign == "-":
            coeff = -coeff
        out[power] = out.get(power, 0) + coeff
    deg = max(out)
    return Poly([out.get(i, 0) for i in range(deg + 1)], q)


def format_poly(p: Poly) -> str:
    if p.is_zero:
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
        if i == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return "+".join(terms)


def _require_monic_nonzero_constant(p: Poly) -> None:
    if p.degree < 1:
        raise DegreeZero(f"{p} has degree < 1")
    if not p.is_monic:
        raise NotMonic(f"{p} is not monic")
    if p.coeffs[0] == 0:
        raise ZeroConstantTerm(f"{p} has zero constant term")


@lru_cache(maxsize=4096)
def is_irreducible(p: Poly) -> bool:
    """Rabin's irreducibility test."""
    n = p.degree
    if n < 1:
        return False
    if n == 1:
        return True
    p = p.monic()
    s = Poly([0, 1], p.q)
    if powmod(s, p.q**n, p) != s % p:
        return False
    for d in factorize(n):
        h = powmod(s, p.q ** (n // d), p) - s
        if gcd(h, p).degree != 0:
            return False
    return True


@lru_cache(maxsize=4096)
def order(p: Poly) -> int:
    """Multiplicative order of ``s`` modulo the irreducible polynomial ``p``."""
    _require_monic_nonzero_constant(p)
    if not is_irreducible(p):
        raise NotIrreducible(f"{p} is reducible")
    s = Poly([0, 1], p.q)
    one = Poly([1], p.q)
    e = p.q**p.degree - 1
    for prime in factorize(e):
        while e % prime == 0 and powmod(s, e // prime, p) == one:
            e //= prime
    return e


@lru_cache(maxsize=4096)
def is_primitive(p: Poly) -> bool:
    if p.degree < 1 or not p.is_monic or p.coeffs[0] == 0:
        return False
    if not is_irreducible(p):
        return False
    return order(p) == p.q**p.degree - 1


def companion_matrix(p: Poly) -> Mat:
    """Companion matrix A of ``p`` acting on row vectors: ``x(k+1) = x(k) @ A``.

    Ones sit just below the diagonal; the last column holds ``(a_0, ..., a_{n-1})``
    where ``p(s) = s^n - sum(a_i s^i)``.
    """
    from .linalg import Mat

    _require_monic_nonzero_constant(p)
    n, q = p.degree, p.q
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p.coeffs[i] % q
    return Mat(rows, q)


def monic_candidates(q: int, n: int) -> Iterator[Poly]:
    """Monic degree-``n`` polynomials with nonzero constant term.

    Ordered by ``(c_0, ..., c_{n-1})`` read as a little-endian base-``q`` integer.
    """
    for k in range(q**n):
        digits = [(k // q**i) % q for i in range(n)]
        if digits[0] == 0:
            continue
        yield Poly(digits + [1], q)


def primitive_polys(q: int, n: int) -> Iterator[Poly]:
    """All primitive polynomials of degree ``n`` over F_q, in :func:`find_primitive` order."""
    if n < 1:
        raise DegreeZero("degree must be at least 1")
    PrimeField(q)
    return (p for p in monic_candidates(q, n) if is_primitive(p))


@lru_cache(maxsize=None)
def find_primitive(q: int, n: int) -> Poly:
    """The first primitive polynomial of degree ``n`` in little-endian coefficient order."""
    for p in primitive_polys(q, n):
        return p
    raise AssertionError(f"no primitive polynomial of degree {n} over F_{q}")  # pragma: no cover


def as_poly(value: Poly | str | Sequence[int], q: int) -> Poly:
    """Coerce text, coefficient lists or a :class:`Poly` to a :class:`Poly` over F_q."""
    if isinstance(value, Poly):
        if value.q != q:
            raise FieldMismatch(f"polynomial over F_{value.q}, expected F_{q}")
        return value
    if isinstance(value, str):
        return parse_poly(value, q)
    return Poly(value, q)
