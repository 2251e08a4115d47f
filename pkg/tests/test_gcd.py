import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterlift import LaurentPolynomial, poly_gcd
from clusterlift.algebra.laurent import divexact_poly, var

x1, x2, x3 = var("x1"), var("x2"), var("x3")
SYMS = sympy.symbols("x1 x2 x3")


def to_sympy(p: LaurentPolynomial):
    return sympy.sympify(str(p).replace("^", "**"), locals=dict(zip(map(str, SYMS), SYMS)))


def test_common_monomial():
    assert poly_gcd(x1**2 * x2 + x1 * x2, x1 * x2**2) == x1 * x2


def test_unit_argument():
    p = x1**3 + 2 * x2
    assert poly_gcd(p, LaurentPolynomial.constant(1)) == 1


def test_linear_forms():
    assert poly_gcd(x1 + x2, x1 - x2) == 1


def test_zero_zero():
    assert poly_gcd(LaurentPolynomial(0), LaurentPolynomial(0)) == 0


def test_sign_normalized():
    assert poly_gcd(-(x1 + 1) * x2, -(x1 + 1) * x3) == x1 + 1


def test_integer_content():
    assert poly_gcd(6 * x1 + 6, 4 * x1**2 - 4) == 2 * x1 + 2


poly = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1), st.integers(-3, 3)), max_size=4
).map(lambda ts: sum((c * x1**a * x2**b * x3**e for a, b, e, c in ts), LaurentPolynomial(0)))


@settings(max_examples=50, deadline=None)
@given(poly, poly, poly)
def test_gcd_against_sympy(a, b, c):
    a, b = a * c, b * c
    g = poly_gcd(a, b)
    ref = sympy.gcd(to_sympy(a), to_sympy(b))
    assert sympy.expand(to_sympy(g) - ref) == 0 or sympy.expand(to_sympy(g) + ref) == 0
    if not g.is_zero():
        qa, qb = divexact_poly(a, g), divexact_poly(b, g)
        assert qa is not None and qb is not None
        assert poly_gcd(qa, qb).is_constant()
