import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterlift import RationalFunction, parse_expression as P, rf_substitute
from clusterlift.algebra.rational import coprime, rf_reduced
from clusterlift.errors import DivisionByZero

x1, x2, x3 = (RationalFunction.variable(n) for n in ("x1", "x2", "x3"))


def test_reduced_on_construction():
    f = ((x1 + 1) * (x2 - 1)) / ((x1 + 1) * x2)
    assert f.num == (x2 - 1).num
    assert f.den == x2.num


def test_denominator_sign_normalized():
    f = RationalFunction((x1 + 1).num, (-(x2 + 1)).num)
    assert f.den == (x2 + 1).num
    assert f.num == (-(x1 + 1)).num


def test_zero_denominator():
    with pytest.raises(DivisionByZero):
        x1 / (x2 - x2)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(1, 0)


def test_substitute_exchange():
    f = x1 * x2
    assert rf_substitute(f, {"x1": (1 + x2) / x1, "x2": x2}) == x2 * (1 + x2) / x1


def test_substitute_identity():
    f = (x1**2 + x3) / (x2 + 1)
    assert rf_substitute(f, {"x1": x1, "x2": x2, "x3": x3}) == f


def test_self_quotient_is_one():
    f = x1 / x1
    assert f == 1
    assert rf_substitute(f, {"x1": x2 + 7}) == 1


def test_substitute_missing_image():
    with pytest.raises(KeyError):
        rf_substitute(x1 + x2, {"x1": x2})
    assert rf_substitute(x1 + x2, {"x1": x3}, partial=True) == x3 + x2


def test_substitute_zero_denominator():
    with pytest.raises(DivisionByZero):
        rf_substitute(1 / (x1 - 1), {"x1": RationalFunction.constant(1)})


def test_coprime():
    assert coprime((x1 + 1).num, (x1 - 1).num)
    assert not coprime((x1**2 - 1).num, (x1 + 1).num)


def test_laurent_printing():
    assert str((1 + x2) / x1) == "x1^-1*x2 + x1^-1"
    assert str(1 / (x1 + 1)) == "(1)*(x1 + 1)^-1"


# -- properties --------------------------------------------------------------

SYMS = dict(zip(("x1", "x2", "x3"), sympy.symbols("x1 x2 x3")))


def to_sympy(f: RationalFunction):
    num = sympy.sympify(str(f.num).replace("^", "**"), locals=SYMS)
    den = sympy.sympify(str(f.den).replace("^", "**"), locals=SYMS)
    return num / den


small = st.sampled_from([x1, x2, x3, x1 + 1, x2 - x3, x1 * x2 + 2, RationalFunction.constant(3)])
rf = st.tuples(small, small, small, st.booleans()).map(lambda t: (t[0] * t[1] + t[2]) / (t[1] + 1 if t[3] else t[2]))


@settings(max_examples=60, deadline=None)
@given(rf, rf)
def test_field_arithmetic_against_sympy(f, g):
    assert sympy.simplify(to_sympy(f + g) - (to_sympy(f) + to_sympy(g))) == 0
    assert sympy.simplify(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0


@settings(max_examples=60, deadline=None)
@given(rf)
def test_normalization_idempotent(f):
    g = rf_reduced(f)
    assert (g.num, g.den) == (f.num, f.den)
    assert RationalFunction(f.num, f.den) == f


@settings(max_examples=40, deadline=None)
@given(rf, rf, st.sampled_from([x1 + x2, x2 / x3, (x1 + 1) / x2, x3 - 2]))
def test_substitution_is_homomorphism(f, g, image):
    phi = {"x1": image, "x2": x2, "x3": x3 + 1}
    try:
        sf, sg = rf_substitute(f, phi), rf_substitute(g, phi)
        assert rf_substitute(f * g, phi) == sf * sg
        assert rf_substitute(f + g, phi) == sf + sg
    except DivisionByZero:
        pass
