"""Multivariate polynomial gcd over the integers.

Recursive content / primitive-part reduction; the primitive parts are
combined with the subresultant pseudo-remainder sequence in a main variable
chosen as the common variable of least maximal degree.
"""

from __future__ import annotations

from math import gcd as igcd

from clusterlift.algebra.laurent import LaurentPolynomial, _build, divexact_poly

ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial.constant(0)

# univariate polynomial in a main variable: dense coefficient list, index = degree
Univariate = list


def normalize_sign(p: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``p`` or ``-p`` so that the lex-greatest coefficient is positive."""
    if p.is_zero():
        return p
    return -p if p.leading_term()[1] < 0 else p


def _to_univariate(p: LaurentPolynomial, v: str) -> Univariate:
    i = p._vars.index(v)
    rest = p._vars[:i] + p._vars[i + 1:]
    buckets: dict[int, dict] = {}
    for m, c in p._terms.items():
        buckets.setdefault(m[i], {})[m[:i] + m[i + 1:]] = c
    deg = max(buckets)
    out = [ZERO] * (deg + 1)
    for d, terms in buckets.items():
        out[d] = _build(rest, terms)
    return out


def _from_univariate(coeffs: Univariate, v: str) -> LaurentPolynomial:
    out = ZERO
    for d, c in enumerate(coeffs):
        if not c.is_zero():
            out = out + c * LaurentPolynomial.monomial({v: d})
    return out


def _trim(u: Univariate) -> Univariate:
    while u and u[-1].is_zero():
        u.pop()
    return u


def _exact(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    q = divexact_poly(a, b)
    if q is None:
        raise ArithmeticError("internal error: inexact division in gcd")
    return q


def _prem(A: Univariate, B: Univariate) -> Univariate:
    """Pseudo-remainder lc(B)^(deg A - deg B + 1) * A mod B."""
    n = len(B) - 1
    b = B[-1]
    R = list(A)
    e = len(A) - 1 - n + 1
    while R and len(R) - 1 >= n:
        lr = R[-1]
        shift = len(R) - 1 - n
        R = [c * b for c in R]
        for j, bc in enumerate(B):
            if not bc.is_zero():
                R[j + shift] = R[j + shift] - lr * bc
        _trim(R)
        e -= 1
    if e > 0 and R:
        f = b**e
        R = [c * f for c in R]
    return R


def _content(coeffs) -> LaurentPolynomial:
    g = ZERO
    for c in coeffs:
        if c.is_zero():
            continue
        g = _gcd(g, c) if not g.is_zero() else normalize_sign(c)
        if g.is_constant() and abs(g.constant_value()) == 1:
            return ONE
    return g


def _subresultant_pp(A: Univariate, B: Univariate) -> Univariate:
    """Primitive gcd of two primitive univariate polynomials over Z[others]."""
    if len(A) < len(B):
        A, B = B, A
    if len(B) == 1:
        return [ONE]
    g = ONE
    h = ONE
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B)
        if not R:
            cont = _content(B)
            return [_exact(c, cont) for c in B]
        if len(R) == 1:
            return [ONE]
        div = g * h**delta
        A, B = B, [_exact(c, div) for c in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = _exact(g**delta, h ** (delta - 1))


def _gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    if a.is_zero():
        return normalize_sign(b)
    if b.is_zero():
        return normalize_sign(a)
    # common monomial factor first
    ma, mb = a.monomial_content(), b.monomial_content()
    mono = {v: min(e, mb[v]) for v, e in ma.items() if v in mb}
    if ma:
        a = a.shift({v: -e for v, e in ma.items()})
    if mb:
        b = b.shift({v: -e for v, e in mb.items()})
    return LaurentPolynomial.monomial(mono) * _gcd_nomono(a, b)


def _gcd_nomono(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    if a.is_constant() or b.is_constant():
        return LaurentPolynomial.constant(igcd(a.content(), b.content()))
    if len(b) > len(a):
        a, b = b, a
    q = divexact_poly(a, b)
    if q is not None:
        return normalize_sign(b)
    sa, sb = set(a._vars), set(b._vars)
    common = sa & sb
    if not common:
        return LaurentPolynomial.constant(igcd(a.content(), b.content()))
    # a variable present in only one argument contributes through its content alone
    only_a, only_b = sorted(sa - sb), sorted(sb - sa)
    if only_a:
        return _gcd(_content(_to_univariate(a, only_a[0])), b)
    if only_b:
        return _gcd(a, _content(_to_univariate(b, only_b[0])))
    v = min(sorted(common), key=lambda w: max(a.degree(w), b.degree(w)))
    A = _to_univariate(a, v)
    B = _to_univariate(b, v)
    ca, cb = _content(A), _content(B)
    c = _gcd(ca, cb)
    A = [_exact(x, ca) for x in A]
    B = [_exact(x, cb) for x in B]
    G = _subresultant_pp(A, B)
    return normalize_sign(c * _from_univariate(G, v))


def poly_gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Greatest common divisor in Z[x], lex-greatest coefficient positive.

    Both arguments must have nonnegative exponents; ``poly_gcd(0, 0) == 0``.
    """
    if not (a.is_polynomial() and b.is_polynomial()):
        raise ValueError("poly_gcd expects polynomials with nonnegative exponents")
    return normalize_sign(_gcd(a, b))
