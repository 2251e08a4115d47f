"""Reduced rational functions: the ambient field of every seed."""

from __future__ import annotations

from math import gcd as igcd
from typing import Mapping, Union

from clusterlift.algebra.gcd import normalize_sign, poly_gcd
from clusterlift.algebra.laurent import LaurentPolynomial, divexact_poly
from clusterlift.errors import DivisionByZero

_ONE = LaurentPolynomial.constant(1)
_ZERO = LaurentPolynomial.constant(0)


def _split_laurent(p: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Write a Laurent polynomial as polynomial / monomial."""
    low = {v: -e for v, e in p.monomial_content().items() if e < 0}
    if not low:
        return p, _ONE
    return p.shift(low), LaurentPolynomial.monomial(low)


def _reduce(num: LaurentPolynomial, den: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return _ZERO, _ONE
    # common monomial factor
    mn, md = num.monomial_content(), den.monomial_content()
    common = {v: min(e, md[v]) for v, e in mn.items() if v in md}
    if common:
        neg = {v: -e for v, e in common.items()}
        num, den = num.shift(neg), den.shift(neg)
        md = den.monomial_content()
    if not den.is_monomial():
        # Laurent fast path: the non-monomial part of den often divides num exactly
        den0 = den.shift({v: -e for v, e in md.items()}) if md else den
        q = divexact_poly(num, den0)
        if q is not None:
            num, den = q, LaurentPolynomial.monomial(md)
        else:
            q = divexact_poly(den, num)
            if q is not None:
                num, den = _ONE, q
            else:
                g = poly_gcd(num, den)
                if not (g.is_constant() and g.constant_value() == 1):
                    num, den = divexact_poly(num, g), divexact_poly(den, g)
    if den.is_monomial():
        c = igcd(num.content(), den.leading_term()[1])
        if c > 1:
            num = LaurentPolynomial._raw(num._vars, {m: v // c for m, v in num._terms.items()})
            den = LaurentPolynomial._raw(den._vars, {m: v // c for m, v in den._terms.items()})
    if den.leading_term()[1] < 0:
        num, den = -num, -den
    return num, den


class RationalFunction:
    """Quotient of two integer polynomials, kept reduced and sign-normalized.

    The denominator's lex-greatest coefficient is positive and the gcd of
    numerator and denominator is a unit, so equality is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[LaurentPolynomial, int] = 0, den: Union[LaurentPolynomial, int] = 1):
        if isinstance(num, int):
            num = LaurentPolynomial.constant(num)
        if isinstance(den, int):
            den = LaurentPolynomial.constant(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        n1, d1 = _split_laurent(num)
        n2, d2 = _split_laurent(den)
        self.num, self.den = _reduce(n1 * d2, n2 * d1)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPolynomial, den: LaurentPolynomial) -> "RationalFunction":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, num: LaurentPolynomial, den: LaurentPolynomial) -> "RationalFunction":
        return cls._raw(*_reduce(num, den))

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial) -> "RationalFunction":
        n, d = _split_laurent(p)
        return cls._raw(n, d)

    @classmethod
    def variable(cls, name: str) -> "RationalFunction":
        return cls._raw(LaurentPolynomial.variable(name), _ONE)

    @classmethod
    def constant(cls, c: int) -> "RationalFunction":
        return cls._raw(LaurentPolynomial.constant(c), _ONE)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        """True when the denominator is a monomial (coefficient allowed)."""
        return self.den.is_monomial()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def to_laurent(self) -> LaurentPolynomial:
        """The Laurent polynomial equal to this function; needs a unit-monomial denominator."""
        if not self.den.is_monomial():
            raise ValueError("denominator is not a monomial")
        (mono, c), = self.den.terms.items()
        if c != 1:
            raise ValueError("denominator has a non-unit coefficient")
        return self.num.shift({v: -e for v, e in mono})

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.num.variables) | set(self.den.variables)))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction.constant(other)
        if isinstance(other, LaurentPolynomial):
            return RationalFunction.from_laurent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalFunction._make(self.num + other.num, self.den)
        if self.den.is_monomial() and other.den.is_monomial():
            # lcm of monomial denominators keeps the result small
            (ma, ca), = self.den.terms.items()
            (mb, cb), = other.den.terms.items()
            ea, eb = dict(ma), dict(mb)
            lcm_e = {v: max(ea.get(v, 0), eb.get(v, 0)) for v in set(ea) | set(eb)}
            g = igcd(ca, cb)
            lc = ca // g * cb
            fa = LaurentPolynomial.monomial({v: e - ea.get(v, 0) for v, e in lcm_e.items()}, lc // ca)
            fb = LaurentPolynomial.monomial({v: e - eb.get(v, 0) for v, e in lcm_e.items()}, lc // cb)
            return RationalFunction._make(self.num * fa + other.num * fb, LaurentPolynomial.monomial(lcm_e, lc))
        return RationalFunction._make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RationalFunction.constant(0)
        if self.den.is_constant() and other.den.is_constant() and self.den == other.den == _ONE:
            return RationalFunction._raw(self.num * other.num, _ONE)
        return RationalFunction._make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den.leading_term()[1] < 0:
            num, den = -num, -den
        return RationalFunction._raw(num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero("division by zero")
        return RationalFunction._make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.num**k, self.den**k)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPolynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        if self.den.is_monomial() and self.den.leading_term()[1] == 1:
            return str(self.to_laurent())
        return f"({self.num})*({self.den})^-1"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


RF = Union[RationalFunction, LaurentPolynomial, int]


def as_rf(x: RF) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPolynomial):
        return RationalFunction.from_laurent(x)
    if isinstance(x, int):
        return RationalFunction.constant(x)
    raise TypeError(f"cannot convert {type(x).__name__} to RationalFunction")


def _eval_poly(p: LaurentPolynomial, image: Mapping[str, RationalFunction], partial: bool):
    """Evaluate a polynomial (nonnegative or Laurent) at rational images.

    Returns (numerator, denominator) over a common denominator built from
    the images' numerators and denominators, avoiding repeated reductions.
    """
    vars_ = p.variables
    targets = []
    for v in vars_:
        if v in image:
            targets.append(image[v])
        elif partial:
            targets.append(None)
        else:
            raise KeyError(f"no image for variable {v!r}")
    hi = [0] * len(vars_)
    lo = [0] * len(vars_)
    for m in p._terms:
        for i, e in enumerate(m):
            if e > hi[i]:
                hi[i] = e
            if -e > lo[i]:
                lo[i] = -e
    cache: dict = {}

    def power(i: int, which: str, k: int) -> LaurentPolynomial:
        key = (i, which, k)
        if key not in cache:
            t = targets[i]
            if t is None:
                base = LaurentPolynomial.variable(vars_[i]) if which == "n" else _ONE
            else:
                base = t.num if which == "n" else t.den
            cache[key] = base**k
        return cache[key]

    for i, t in enumerate(targets):
        if lo[i] and t is not None and t.is_zero():
            raise DivisionByZero(f"variable {vars_[i]!r} maps to zero under a negative power")
    num = _ZERO
    for m, c in p._terms.items():
        term = LaurentPolynomial.constant(c)
        for i, e in enumerate(m):
            a = e + lo[i]
            b = hi[i] - e
            if targets[i] is None:
                if e:
                    term = term * LaurentPolynomial.monomial({vars_[i]: e})
                continue
            if a:
                term = term * power(i, "n", a)
            if b:
                term = term * power(i, "d", b)
        num = num + term
    den = LaurentPolynomial.constant(1)
    for i, t in enumerate(targets):
        if t is None:
            continue
        if hi[i]:
            den = den * power(i, "d", hi[i])
        if lo[i]:
            den = den * power(i, "n", lo[i])
    return num, den


def rf_substitute(f: RF, image: Mapping[str, RF], partial: bool = False) -> RationalFunction:
    """Substitute rational functions for variables and reduce.

    With ``partial`` set, variables without an image are left in place.
    """
    f = as_rf(f)
    img = {v: as_rf(x) for v, x in image.items()}
    if not partial:
        missing = set(f.variables) - set(img)
        if missing:
            raise KeyError(f"no image for variables {sorted(missing)}")
    relevant = set(f.variables) & set(img)
    if not relevant:
        return f
    nn, nd = _eval_poly(f.num, img, partial)
    dn, dd = _eval_poly(f.den, img, partial)
    if dn.is_zero():
        raise DivisionByZero("substitution makes the denominator vanish")
    return RationalFunction._make(nn * dd, nd * dn)


def rf_reduced(f: RationalFunction) -> RationalFunction:
    """Re-run normalization; idempotent on reduced input."""
    return RationalFunction._make(f.num, f.den)


def coprime(a: LaurentPolynomial, b: LaurentPolynomial) -> bool:
    """True when the gcd of two polynomials is a unit in Z[x]."""
    g = poly_gcd(a, b)
    return g.is_constant() and abs(g.constant_value()) == 1


__all__ = [
    "RationalFunction",
    "as_rf",
    "rf_substitute",
    "rf_reduced",
    "coprime",
    "normalize_sign",
]
