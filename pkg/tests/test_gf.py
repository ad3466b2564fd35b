import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P
from oracles import order_bruteforce
from rextension.errors import DivisionByZero, FieldMismatch, NotMonic, ZeroConstantTerm
from rextension.gf import (
    Poly,
    PrimeField,
    companion_matrix,
    factorize,
    find_primitive,
    format_poly,
    gcd,
    is_irreducible,
    is_prime,
    is_primitive,
    monic_candidates,
    order,
    parse_poly,
    powmod,
    primitive_polys,
)
from rextension.linalg import Mat, charpoly

PRIMES = [2, 3, 5, 7, 11, 13, 65521]


def test_field_ops():
    F5 = PrimeField(5)
    assert F5.add(3, 4) == 2
    assert F5.inv(2) == 3
    assert F5.div(1, 2) == 3
    assert F5.neg(2) == 3
    with pytest.raises(DivisionByZero):
        PrimeField(2).inv(0)
    with pytest.raises(ZeroDivisionError):
        F5(1) / F5(0)


def test_field_elements():
    F5, F7 = PrimeField(5), PrimeField(7)
    assert int(F5(3) + F5(4)) == 2
    assert int(F5(2) * 3) == 1
    assert int(1 - F5(3)) == 3
    assert int(F5(2).inv()) == 3
    with pytest.raises(FieldMismatch):
        F5(1) + F7(1)


def test_prime_checks():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ValueError):
        PrimeField(1 << 16)
    assert factorize(63) == {3: 2, 7: 1}
    assert factorize(1) == {}


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, a, b, c):
    F = PrimeField(p)
    a, b, c = a % p, b % p, c % p
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(F.sub(a, b), b) == a
    if b:
        assert F.mul(F.div(a, b), b) == a
        assert F.mul(b, F.inv(b)) == 1


def test_poly_basics():
    assert P("s+1") * P("s+1") == P("s^2+1")
    assert Poly([1, 0, 0], 2).coeffs == (1,)
    assert Poly([], 2).degree == -1
    assert Poly([0, 0], 3).is_zero
    assert P("s^4+s+1").is_monic
    assert gcd(P("s^2+1"), P("s+1")) == P("s+1")
    assert powmod(P("s"), 15, P("s^4+s+1")) == Poly([1], 2)
    assert P("s^2+s+1")(1) == 1


def test_parse_and_format():
    assert parse_poly("s^6+s+1", 2).coeffs == (1, 1, 0, 0, 0, 0, 1)
    assert parse_poly("3*s^2-s+2", 5).coeffs == (2, 4, 3)
    assert parse_poly("coeffs=[1,1,0,1]", 2) == P("s^3+s+1")
    assert format_poly(P("s^5+s^2+1")) == "s^5+s^2+1"
    with pytest.raises(ValueError):
        parse_poly("s^2+x", 2)


poly_coeffs = st.lists(st.integers(0, 6), max_size=7)


@given(poly_coeffs, poly_coeffs.filter(lambda c: any(v % 7 for v in c)))
def test_division_identity(a, b):
    a, b = Poly(a, 7), Poly(b, 7)
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


@given(st.sampled_from(PRIMES[:4]), st.integers(0, 6))
def test_text_round_trip(q, seed):
    import random

    rng = random.Random(seed)
    p = Poly([rng.randrange(q) for _ in range(rng.randint(0, 6))], q)
    if not p.is_zero:
        assert parse_poly(format_poly(p), q) == p


def test_order_examples():
    assert order(P("s^4+s+1")) == 15
    assert order(P("s^4+s^3+s^2+s+1")) == 5
    assert order(P("s+1")) == 1
    with pytest.raises(ZeroConstantTerm):
        order(P("s^2+s"))
    with pytest.raises(NotMonic):
        order(Poly([1, 1, 2], 3))


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)])
def test_order_against_bruteforce(q, n):
    for p in monic_candidates(q, n):
        if is_irreducible(p):
            assert order(p) == order_bruteforce(p)


def test_primitivity():
    assert is_primitive(P("s^4+s+1"))
    assert not is_primitive(P("s^4+s^3+s^2+s+1"))
    assert is_irreducible(P("s^4+s^3+s^2+s+1"))
    assert not is_primitive(P("s^2+1"))


@pytest.mark.parametrize("q,n,expected", [(2, 1, 1), (2, 2, 1), (2, 3, 2), (2, 4, 2), (2, 5, 6), (2, 6, 6), (3, 2, 2), (3, 3, 4), (5, 2, 4)])
def test_primitive_count(q, n, expected):
    # number of primitive polynomials is phi(q^n - 1) / n
    assert sum(1 for _ in primitive_polys(q, n)) == expected


def test_find_primitive():
    assert find_primitive(2, 1) == P("s+1")
    assert find_primitive(2, 3) == P("s^3+s+1")
    assert find_primitive(2, 4) == P("s^4+s+1")
    assert find_primitive(2, 5) == P("s^5+s^2+1")
    assert find_primitive(2, 6) == P("s^6+s+1")
    for q, n in [(3, 2), (3, 4), (5, 3), (7, 2)]:
        p = find_primitive(q, n)
        assert p.degree == n and order_bruteforce(p) == q**n - 1


def test_companion_matrix():
    A6 = companion_matrix(P("s^6+s+1"))
    assert A6.col(5) == (1, 1, 0, 0, 0, 0)
    assert A6.vecmul((0, 0, 0, 0, 0, 1)) == (0, 0, 0, 0, 1, 0)
    assert A6.vecmul((0, 1, 0, 1, 1, 0)) == (1, 0, 1, 1, 0, 1)
    assert companion_matrix(P("s+1")).tolist() == [[1]]


@pytest.mark.parametrize("q,n", [(2, 3), (2, 5), (3, 3), (5, 2)])
def test_companion_charpoly_round_trip(q, n):
    for p in primitive_polys(q, n):
        assert charpoly(companion_matrix(p)) == p


@pytest.mark.parametrize("p", ["s^3+s+1", "s^4+s+1", "s^5+s^2+1"])
def test_orbit_of_primitive_companion(p):
    p = P(p)
    A = companion_matrix(p)
    x = (0,) * (p.degree - 1) + (1,)
    seen = set()
    for _ in range(2**p.degree - 1):
        seen.add(x)
        x = A.vecmul(x)
    assert len(seen) == 2**p.degree - 1
    assert x == (0,) * (p.degree - 1) + (1,)
    assert A ** (2**p.degree - 1) == Mat.identity(p.degree, 2)
