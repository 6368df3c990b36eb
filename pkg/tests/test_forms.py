"""Dense binary forms: arithmetic, exact division, gcd, composition."""

from fractions import Fraction

import pytest

from scrollgeom.errors import BothZeroError, InexactDivisionError
from scrollgeom.fields import QQ, PrimeField
from scrollgeom.forms import (
    BinaryForm,
    compose_form,
    divide_exact,
    form_gcd,
    gcd_many,
    linear_form,
    product_of_linears,
    random_form,
    vanishing_at,
)
from scrollgeom.rngstream import as_stream

ONE = QQ.one
ZERO = QQ.zero


def lp(*coeffs):
    return BinaryForm(len(coeffs) - 1, tuple(Fraction(c) for c in coeffs))


def test_coefficient_layout():
    # coeffs[j] multiplies s0^(deg-j) * s1^j
    m = BinaryForm.monomial(3, 1, ONE)
    assert m.coeffs == (0, 1, 0, 0)
    assert m.evaluate(QQ(2), QQ(3)) == 2 * 2 * 3


def test_addition_and_multiplication():
    s0_plus_s1 = lp(1, 1)
    sq = s0_plus_s1 * s0_plus_s1
    assert sq.coeffs == (1, 2, 1)
    assert sq.degree == 2
    assert sq.evaluate(QQ(2), QQ(3)) == 25
    assert (sq - sq).is_zero()
    assert (-sq).coeffs == (-1, -2, -1)
    assert sq.power(2) == sq * sq
    assert sq.scale(QQ(3)).coeffs == (3, 6, 3)


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        lp(1, 1) + lp(1, 1, 1)


def test_vanishing_at_and_product():
    v = vanishing_at(QQ(5))
    assert v.evaluate(QQ(5), ONE) == 0
    assert v.evaluate(ONE, ZERO) == 1
    prod = product_of_linears([QQ(1), QQ(2), QQ(3)], QQ)
    assert prod.degree == 3
    for r in (1, 2, 3):
        assert prod.evaluate(QQ(r), ONE) == 0
    assert prod.evaluate(QQ(4), ONE) == (4 - 1) * (4 - 2) * (4 - 3)
    assert linear_form(QQ(2), QQ(-3)).evaluate(QQ(3), QQ(2)) == 0


def test_divide_exact_frozen():
    # (s0 - 2 s1)(s0 - 3 s1) = s0^2 - 5 s0 s1 + 6 s1^2
    num = lp(1, -5, 6)
    q = divide_exact(num, lp(1, -2))
    assert q.coeffs == (1, -3)
    with pytest.raises(InexactDivisionError):
        divide_exact(lp(1, 0, 1), lp(1, -1))


def test_divide_exact_with_s1_powers():
    # pure s1 factors have no s0-leading coefficient; cover that branch
    num = lp(0, 0, 1, -1)  # s0 s1^2 - s1^3 = s1^2 (s0 - s1)
    q = divide_exact(num, lp(0, 1))
    assert q.coeffs == (0, 1, -1)
    q2 = divide_exact(num, lp(0, 0, 1))
    assert q2.coeffs == (1, -1)


def test_form_gcd_frozen():
    g = form_gcd(lp(0, 1, 0), lp(0, 0, 1))  # gcd(s0 s1, s1^2) = s1
    assert g.coeffs == (0, 1)
    g2 = form_gcd(lp(1, -5, 6), lp(1, -2))
    assert g2.coeffs == (1, -2)
    g3 = form_gcd(lp(1, 0), lp(0, 1))
    assert g3.degree == 0 and not g3.is_zero()
    with pytest.raises(BothZeroError):
        form_gcd(BinaryForm.zero(2, QQ), BinaryForm.zero(1, QQ))


def test_gcd_is_monic_and_divides():
    rng = as_stream(3)
    for _ in range(10):
        g = random_form(2, QQ, rng, nonzero=True)
        a = g * random_form(2, QQ, rng, nonzero=True)
        b = g * random_form(3, QQ, rng, nonzero=True)
        got = form_gcd(a, b)
        # gcd contains g; both divisions must be exact
        divide_exact(a, got)
        divide_exact(b, got)
        assert divide_exact(got, form_gcd(got, g)).degree == got.degree - form_gcd(got, g).degree


def test_gcd_many():
    forms = [lp(0, 1, -1), lp(0, 1, 0), lp(0, 2, 2)]  # all divisible by s1 only
    assert gcd_many(forms).coeffs == (0, 1)


def test_compose_form():
    outer = lp(1, 0, 0)  # s0^2
    comp = compose_form(outer, lp(1, 1), lp(1, -1))
    assert comp.coeffs == (1, 2, 1)
    outer2 = lp(1, -1)  # s0 - s1
    comp2 = compose_form(outer2, lp(1, 1), lp(1, -1))
    assert comp2.coeffs == (0, 2)


def test_valuations():
    f = lp(0, 0, 1, -1)  # s1^2 (s0 - s1)
    assert f.s1_valuation() == 2
    assert f.s0_valuation() == 0
    g = lp(0, 1, 0, 0)
    assert g.s0_valuation() == 2
    assert g.s1_valuation() == 1


def test_random_form_determinism_and_flags():
    a = random_form(4, QQ, as_stream(8).child("f"))
    b = random_form(4, QQ, as_stream(8).child("f"))
    assert a == b and a.degree == 4
    fp = PrimeField(10007)
    nz = random_form(2, fp, as_stream(8).child("g"), nonzero=True)
    assert not nz.is_zero()


def test_fp_forms_roundtrip():
    fp = PrimeField(7)
    f = BinaryForm(2, (fp(1), fp(5), fp(6)))
    g = BinaryForm(1, (fp(1), fp(2)))  # root at t = -2 = 5
    assert (f * g).degree == 3
    assert g.evaluate(fp(5), fp(1)) == fp(0)
    assert divide_exact(f * g, g) == f
