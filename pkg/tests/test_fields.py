import random
from fractions import Fraction
from math import gcd

import pytest

from thickrep.errors import DivisionByZero, FieldMismatch, NotMonic, WrongField, ZeroInput
from thickrep.fields import (
    GF,
    QQ,
    Poly,
    field_from_json,
    field_to_json,
    nth_roots,
    poly_factor_fp,
    rational_roots,
    scalar,
    scalar_arith,
)


def test_scalar_arith_rationals():
    a = scalar(QQ, "2/3")
    b = scalar(QQ, "1/6")
    assert scalar_arith(a, b, "add") == scalar(QQ, "5/6")


def test_scalar_arith_prime_field():
    F5 = GF(5)
    assert scalar_arith(scalar(F5, 3), scalar(F5, 4), "mul") == scalar(F5, 2)
    F7 = GF(7)
    assert scalar_arith(scalar(F7, 1), scalar(F7, 3), "div") == scalar(F7, 5)


def test_scalar_arith_errors():
    with pytest.raises(FieldMismatch):
        scalar_arith(scalar(QQ, 1), scalar(GF(5), 1), "add")
    with pytest.raises(DivisionByZero):
        scalar_arith(scalar(GF(5), 1), scalar(GF(5), 0), "div")


def test_division_roundtrip():
    rng = random.Random(7)
    F7 = GF(7)
    for _ in range(50):
        a = QQ.random(rng)
        b = QQ.random(rng)
        if b != 0:
            assert QQ.mul(QQ.div(a, b), b) == a
        x, y = rng.randrange(7), rng.randrange(1, 7)
        assert F7.mul(F7.div(x, y), y) == x % 7


def _poly(field, ints):
    return Poly.from_ints(field, ints)


def test_factor_irreducible_quadratic_f2():
    F2 = GF(2)
    f = _poly(F2, [1, 1, 1])
    assert poly_factor_fp(f) == [(f, 1)]


def test_factor_split_quadratic_f5():
    F5 = GF(5)
    f = _poly(F5, [-1, 0, 1])  # x^2 - 1
    facs = poly_factor_fp(f)
    assert facs == [(_poly(F5, [1, 1]), 1), (_poly(F5, [4, 1]), 1)]
    # multiply back
    prod = _poly(F5, [1])
    for g, mult in facs:
        for _ in range(mult):
            prod = prod * g
    assert prod == f


def test_factor_repeated_root():
    F3 = GF(3)
    f = _poly(F3, [0, 0, 0, 1])  # x^3
    assert poly_factor_fp(f) == [(_poly(F3, [0, 1]), 3)]


def test_factor_not_monic():
    F3 = GF(3)
    with pytest.raises(NotMonic):
        poly_factor_fp(_poly(F3, [1, 2]))


def test_factor_wrong_field():
    with pytest.raises(WrongField):
        poly_factor_fp(_poly(QQ, [1, 0, 1]))


def test_factor_product_roundtrip_random():
    rng = random.Random(20240)
    for p in (2, 3, 5, 13):
        F = GF(p)
        for _ in range(20):
            deg = rng.randint(1, 6)
            coeffs = [rng.randrange(p) for _ in range(deg)] + [1]
            f = Poly(F, coeffs)
            facs = poly_factor_fp(f)
            prod = _poly(F, [1])
            for g, mult in facs:
                assert g.is_monic()
                if g.degree >= 2:
                    assert all(g(x) != 0 for x in F.elements())
                for _ in range(mult):
                    prod = prod * g
            assert prod == f


def test_nth_roots_examples():
    F5 = GF(5)
    assert nth_roots(scalar(F5, 4), 2) == [scalar(F5, 2), scalar(F5, 3)]
    assert nth_roots(scalar(F5, 2), 2) == []
    assert nth_roots(scalar(QQ, 8), 3) == [scalar(QQ, 2)]


def test_nth_roots_zero_input():
    with pytest.raises(ZeroInput):
        nth_roots(scalar(GF(5), 0), 2)


def test_nth_roots_count_matches_gcd():
    for p in (5, 7, 13):
        F = GF(p)
        for n in (2, 3, 4):
            for a in range(1, p):
                roots = F.nth_roots(a, n)
                for r in roots:
                    assert pow(r, n, p) == a
                assert len(roots) in (0, gcd(n, p - 1))
                if roots:
                    assert len(roots) == gcd(n, p - 1)


def test_negative_and_even_rational_roots():
    assert QQ.nth_roots(Fraction(9, 4), 2) == [Fraction(-3, 2), Fraction(3, 2)]
    assert QQ.nth_roots(Fraction(-8), 3) == [Fraction(-2)]
    assert QQ.nth_roots(Fraction(-4), 2) == []


def test_rational_roots_of_poly():
    f = Poly(QQ, [Fraction(-2), Fraction(1), Fraction(0), Fraction(1)])
    # x^3 + x - 2 = (x - 1)(x^2 + x + 2)
    assert rational_roots(f) == [(Fraction(1), 1)]


def test_field_json_roundtrip():
    for f in (QQ, GF(5)):
        assert field_from_json(field_to_json(f)) == f
    assert field_to_json(GF(5)) == {"kind": "Fp", "p": 5}
    assert field_to_json(QQ) == {"kind": "Q"}


def test_scalar_formatting():
    assert str(scalar(QQ, "3/2")) == "3/2"
    assert str(scalar(GF(5), 9)) == "4"


def test_extension_field_basics():
    F4 = GF(2, 2)
    elems = list(F4.elements())
    assert len(elems) == 4
    for a in elems:
        if a == F4.zero:
            continue
        assert F4.mul(a, F4.inv(a)) == F4.one
    F9 = GF(3, 2)
    assert len(list(F9.elements())) == 9
    for a in F9.elements():
        if a == F9.zero:
            continue
        assert F9.mul(a, F9.inv(a)) == F9.one


def test_canonical_scalar_ordering():
    vals = [Fraction(1, 2), Fraction(-1, 2), Fraction(2), Fraction(0)]
    ordered = sorted(vals, key=QQ.sort_key)
    assert ordered == [Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(2)]
    assert sorted([4, 0, 2], key=GF(5).sort_key) == [0, 2, 4]
