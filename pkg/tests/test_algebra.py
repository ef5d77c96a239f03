"""Exact field arithmetic: minimal polynomials, operations, signs, the form."""

import math
import random
from fractions import Fraction

import pytest

from coxwalk import algebra
from coxwalk.algebra import Definiteness, field_for_lcm, minpoly_2cos_pi_over
from coxwalk.diagram import parse_diagram


KNOWN_MINPOLYS = {
    2: (0, 1),          # x
    3: (-1, 1),         # x - 1
    4: (-2, 0, 1),      # x^2 - 2
    5: (-1, -1, 1),     # x^2 - x - 1
    6: (-3, 0, 1),      # x^2 - 3
    12: (1, 0, -4, 0, 1),
}


@pytest.mark.parametrize("L,expected", sorted(KNOWN_MINPOLYS.items()))
def test_minpoly_known_values(L, expected):
    assert minpoly_2cos_pi_over(L) == expected


def test_minpoly_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.Symbol("x")
    for L in list(range(2, 25)) + [30, 36]:
        expected = sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / L), x)
        coeffs = list(reversed(expected.as_poly(x).all_coeffs()))
        assert list(minpoly_2cos_pi_over(L)) == [int(c) for c in coeffs], L


def test_minpoly_degree_and_root():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 60
    for L in range(2, 40):
        field = field_for_lcm(L)
        c = 2 * mpmath.cos(mpmath.pi / L)
        value = mpmath.polyval(list(reversed(field.minpoly)), c)
        scale = max(abs(v) for v in field.minpoly)
        assert abs(value) < mpmath.mpf(10) ** -40 * scale


def test_field_for_uses_label_lcm():
    d = parse_diagram("a b c; a-b b-c")  # labels {3, 2}
    f = algebra.field_for(d)
    assert f.L == 6 and f.degree == 2
    d = parse_diagram("s t u v w; s-t:5 t-u u-v v-w")
    assert algebra.field_for(d).L == 30
    assert algebra.field_for(d).degree == 8
    d = parse_diagram("a b")  # all labels 2
    f = algebra.field_for(d)
    assert f.L == 2 and f.degree == 1


def test_generator_satisfies_golden_identity():
    f = field_for_lcm(5)
    c = f.generator
    assert (c * c - c - 1).is_zero()
    assert (c - 1).sign() == 1
    assert (c * c - c - 1).sign() == 0


def _random_element(field, rng, span=60):
    nums = [rng.randint(-span, span) for _ in range(field.degree)]
    den = rng.randint(1, 30)
    return field.element([Fraction(n, den) for n in nums])


@pytest.mark.parametrize("L", [5, 12, 30])
def test_field_axioms_randomized(L):
    field = field_for_lcm(L)
    rng = random.Random(1000 + L)
    for _ in range(60):
        a = _random_element(field, rng)
        b = _random_element(field, rng)
        c = _random_element(field, rng)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + field.zero == a
        assert a * field.one == a
        assert (a - a).is_zero()
        if not b.is_zero():
            assert (a / b) * b == a


@pytest.mark.parametrize("L", [5, 30])
def test_inverse_roundtrip(L):
    field = field_for_lcm(L)
    rng = random.Random(7)
    for _ in range(40):
        a = _random_element(field, rng)
        if a.is_zero():
            continue
        assert (a * a.inverse()) == field.one
    with pytest.raises(ZeroDivisionError):
        field.zero.inverse()


def test_sign_matches_high_precision_floats():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 80
    field = field_for_lcm(30)
    c = 2 * mpmath.cos(mpmath.pi / 30)
    rng = random.Random(42)
    for _ in range(1000):
        a = _random_element(field, rng, span=999)
        value = sum(Fraction(n, a.den) * c**i for i, n in enumerate(a.nums))
        expected = 0 if value == 0 else (1 if value > 0 else -1)
        assert a.sign() == expected


def test_equality_iff_difference_sign_zero():
    field = field_for_lcm(12)
    rng = random.Random(3)
    for _ in range(100):
        a = _random_element(field, rng)
        b = _random_element(field, rng) if rng.random() < 0.5 else a
        assert (a == b) == ((a - b).sign() == 0)


def test_comparison_operators():
    f = field_for_lcm(5)
    c = f.generator  # the golden ratio, about 1.618
    assert f.rational(1) < c < f.rational(2)
    assert c >= c and c <= c


def test_scalar_coercions_and_float():
    import math

    f = field_for_lcm(12)
    c = f.generator
    assert 2 - c == -(c - 2)
    assert 3 * c == c + c + c
    assert (c / 2) * 2 == c
    assert abs(float(c) - 2 * math.cos(math.pi / 12)) < 1e-12
    assert Fraction(1, 2) + c == c + Fraction(1, 2)


def test_form_values():
    d = parse_diagram("a b c d; a-b:3 b-c:4 c-d:5")
    f = algebra.field_for(d)
    assert f.L == 60
    assert algebra.form_value(d, 0, 0, f) == f.one
    assert algebra.form_value(d, 0, 2, f).is_zero()  # m = 2
    assert algebra.form_value(d, 0, 1, f) == Fraction(-1, 2)  # m = 3
    x4 = algebra.form_value(d, 1, 2, f)  # -cos(pi/4)
    assert x4.sign() == -1
    two = f.rational(2)
    assert ((x4 + x4) * (x4 + x4)) == two
    x5 = algebra.form_value(d, 2, 3, f)  # -cos(pi/5) = -(1+sqrt(5))/4
    assert (4 * (x5 * x5) + 2 * x5 - 1).is_zero()
    # 2*(-x) is the golden ratio 2cos(pi/5)
    z = (-x5) + (-x5)
    assert (z * z - z - 1).is_zero()


def test_form_value_infinite_label():
    d = parse_diagram("a b; a-b:inf")
    f = algebra.field_for(d)
    assert algebra.form_value(d, 0, 1, f) == f.rational(-1)


def test_form_bounds():
    d = parse_diagram("a b c d e f g; a-b:3 a-c:4 a-d:5 a-e:6 a-f:7 a-g:inf")
    f = algebra.field_for(d)
    one = f.one
    for j in range(1, 7):
        val = algebra.form_value(d, 0, j, f)
        assert (one - val).sign() >= 0 and (val + one).sign() >= 0
        gap = one - val * val
        if d.label(0, j) == math.inf:
            assert gap.sign() == 0
        else:
            assert gap.sign() == 1
    # diagonal: 1 - f^2 vanishes
    diag = algebra.form_value(d, 0, 0, f)
    assert (one - diag * diag).sign() == 0


def test_gram_definiteness_examples():
    a2 = parse_diagram("a b; a-b")
    assert algebra.definiteness(algebra.gram(a2)) == Definiteness.POS_DEF
    a2t = parse_diagram("a b c; a-b b-c a-c")
    assert algebra.definiteness(algebra.gram(a2t)) == Definiteness.POS_SEMIDEF_SINGULAR
    i2inf = parse_diagram("a b; a-b:inf")
    g = algebra.gram(i2inf)
    assert g.entry(0, 1) == g.field.rational(-1)
    assert algebra.definiteness(g) == Definiteness.POS_SEMIDEF_SINGULAR
    b3 = parse_diagram("a b c; a-b b-c:4")
    assert algebra.definiteness(algebra.gram(b3)) == Definiteness.POS_DEF
    hyp = parse_diagram("a b c; a-b b-c a-c:4")
    assert algebra.definiteness(algebra.gram(hyp)) == Definiteness.OTHER


def test_mixed_field_operations_rejected():
    f5 = field_for_lcm(5)
    f6 = field_for_lcm(6)
    with pytest.raises(ValueError):
        f5.one + f6.one
