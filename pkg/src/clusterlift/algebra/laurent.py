"""Sparse multivariate Laurent polynomials with integer coefficients."""

from __future__ import annotations

import heapq
import re
from math import gcd
from typing import Iterable, Mapping, Union

from clusterlift.errors import ZeroPolynomial

# A sparse monomial: sorted (variable, nonzero exponent) pairs.
Monomial = tuple[tuple[str, int], ...]

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


def _reindex(terms: dict, old: tuple[str, ...], new: tuple[str, ...]) -> dict:
    if old == new:
        return terms
    pos = [new.index(v) for v in old]
    width = len(new)
    out = {}
    for m, c in terms.items():
        e = [0] * width
        for p, x in zip(pos, m):
            e[p] = x
        out[tuple(e)] = c
    return out


def _union(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if a == b:
        return a
    return tuple(sorted(set(a) | set(b)))


def _build(vars_: tuple[str, ...], terms: dict) -> "LaurentPolynomial":
    """Drop variables that no longer occur, then wrap."""
    if not terms:
        return LaurentPolynomial._raw((), {})
    used = [False] * len(vars_)
    for m in terms:
        for i, e in enumerate(m):
            if e:
                used[i] = True
    if all(used):
        return LaurentPolynomial._raw(vars_, terms)
    keep = [i for i, u in enumerate(used) if u]
    new_vars = tuple(vars_[i] for i in keep)
    new_terms = {}
    for m, c in terms.items():
        new_terms[tuple(m[i] for i in keep)] = c
    return LaurentPolynomial._raw(new_vars, new_terms)


class _Packer:
    """Packs exponent tuples into integers; integer order equals lex order."""

    __slots__ = ("n", "bits", "shifts", "lo", "guard")

    def __init__(self, n: int, lo: list[int], span: int):
        self.n = n
        self.lo = lo
        # one spare bit per field serves as a borrow guard
        self.bits = max(span, 1).bit_length() + 1
        self.shifts = [self.bits * (n - 1 - i) for i in range(n)]
        g = 0
        for s in self.shifts:
            g |= 1 << (s + self.bits - 1)
        self.guard = g

    def pack(self, m) -> int:
        r = 0
        for e, lo, s in zip(m, self.lo, self.shifts):
            r |= (e - lo) << s
        return r

    def unpack(self, p: int, offset: list[int]) -> tuple[int, ...]:
        mask = (1 << self.bits) - 1
        return tuple(((p >> s) & mask) + o for s, o in zip(self.shifts, offset))


def _mul_terms(vars_: tuple[str, ...], ta: dict, tb: dict) -> dict:
    n = len(vars_)
    if n == 0:
        return {(): ta[()] * tb[()]}
    if len(ta) == 1 or len(tb) == 1:
        if len(tb) != 1:
            ta, tb = tb, ta
        (mb, cb), = tb.items()
        return {tuple(x + y for x, y in zip(ma, mb)): ca * cb for ma, ca in ta.items()}
    lo_a = [min(m[i] for m in ta) for i in range(n)]
    lo_b = [min(m[i] for m in tb) for i in range(n)]
    span = 0
    for i in range(n):
        span = max(span, max(m[i] for m in ta) - lo_a[i] + max(m[i] for m in tb) - lo_b[i])
    pa = _Packer(n, lo_a, span)
    pb = _Packer(n, lo_b, span)
    A = [(pa.pack(m), c) for m, c in ta.items()]
    B = [(pb.pack(m), c) for m, c in tb.items()]
    out: dict[int, int] = {}
    get = out.get
    for ka, ca in A:
        for kb, cb in B:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    offset = [x + y for x, y in zip(lo_a, lo_b)]
    return {pa.unpack(k, offset): c for k, c in out.items() if c}


def _divexact_terms(n: int, ta: dict, tb: dict) -> dict | None:
    """Exact division in Z[x] (all exponents >= 0); None when it does not divide."""
    if n == 0:
        q, r = divmod(ta[()], tb[()])
        return None if r else {(): q}
    max_a = [max(m[i] for m in ta) for i in range(n)]
    max_b = [max(m[i] for m in tb) for i in range(n)]
    for x, y in zip(max_a, max_b):
        if y > x:
            return None
    P = _Packer(n, [0] * n, 2 * max(max(max_a), 1))
    G = P.guard
    A = {P.pack(m): c for m, c in ta.items()}
    Bt = sorted(((P.pack(m), c) for m, c in tb.items()), reverse=True)
    lm_b, lc_b = Bt[0]
    rest_b = Bt[1:]
    min_a = min(A)
    min_b = Bt[-1][0]
    bound = P.pack(max_a) | G
    maxb_packed = P.pack(max_b)
    rem = A
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q: dict[int, int] = {}
    while rem:
        m = -heapq.heappop(heap)
        if m not in rem:
            continue
        c = rem.pop(m)
        qc, r = divmod(c, lc_b)
        if r:
            return None
        t = (m | G) - lm_b
        if t & G != G:
            return None
        d = t ^ G
        if d + min_b < min_a:
            return None
        if (bound - (d + maxb_packed)) & G != G:
            return None
        q[d] = qc
        for kb, cb in rest_b:
            k = d + kb
            v = rem.get(k, 0) - qc * cb
            if v:
                if k not in rem:
                    heapq.heappush(heap, -k)
                rem[k] = v
            else:
                rem.pop(k, None)
    zero = [0] * n
    return {P.unpack(k, zero): c for k, c in q.items()}


class LaurentPolynomial:
    """An immutable Laurent polynomial in named variables over the integers.

    Terms are stored densely over the sorted tuple of variables that actually
    occur, so two equal polynomials always have identical internal state.
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, terms: Union[int, Mapping, None] = None):
        if terms is None:
            terms = {}
        if isinstance(terms, int):
            terms = {(): terms} if terms else {}
        names: set[str] = set()
        sparse = []
        for mono, coeff in terms.items():
            if not isinstance(coeff, int):
                raise TypeError("coefficients must be integers")
            exps = dict(mono.items() if isinstance(mono, Mapping) else mono)
            for v in exps:
                if not isinstance(v, str) or not v:
                    raise ValueError(f"invalid variable id {v!r}")
            names.update(exps)
            sparse.append((exps, coeff))
        vars_ = tuple(sorted(names))
        acc: dict = {}
        for exps, coeff in sparse:
            key = tuple(exps.get(v, 0) for v in vars_)
            acc[key] = acc.get(key, 0) + coeff
        acc = {k: c for k, c in acc.items() if c}
        built = _build(vars_, acc)
        self._vars = built._vars
        self._terms = built._terms
        self._hash = None

    @classmethod
    def _raw(cls, vars_: tuple[str, ...], terms: dict) -> "LaurentPolynomial":
        obj = object.__new__(cls)
        obj._vars = vars_
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls._raw((), {(): c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "LaurentPolynomial":
        if not name:
            raise ValueError("variable id must be non-empty")
        return cls._raw((name,), {(1,): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: int = 1) -> "LaurentPolynomial":
        if not coeff:
            return cls._raw((), {})
        items = sorted((v, e) for v, e in exponents.items() if e)
        return cls._raw(tuple(v for v, _ in items), {tuple(e for _, e in items): coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[Monomial, int]:
        return {
            tuple((v, e) for v, e in zip(self._vars, m) if e): c
            for m, c in self._terms.items()
        }

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._vars

    def constant_value(self) -> int:
        if self._vars:
            raise ValueError("not a constant")
        return self._terms.get((), 0)

    def is_monomial(self) -> bool:
        """True for a single term (any nonzero coefficient)."""
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        return all(e >= 0 for m in self._terms for e in m)

    def degree(self, v: str) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        if v not in self._vars:
            return 0
        i = self._vars.index(v)
        return max(m[i] for m in self._terms)

    def min_exponent(self, v: str) -> int:
        if not self._terms:
            raise ZeroPolynomial("valuation of the zero polynomial is infinite")
        if v not in self._vars:
            return 0
        i = self._vars.index(v)
        return min(m[i] for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(sum(m) for m in self._terms)

    def content(self) -> int:
        """Nonnegative gcd of the coefficients."""
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def monomial_content(self) -> dict[str, int]:
        """Per-variable minimum exponent (nonzero entries only)."""
        if not self._terms:
            return {}
        out = {}
        for i, v in enumerate(self._vars):
            lo = min(m[i] for m in self._terms)
            if lo:
                out[v] = lo
        return out

    def leading_term(self) -> tuple[Monomial, int]:
        """Lex-greatest term with variables ordered by name."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        m = max(self._terms)
        return tuple((v, e) for v, e in zip(self._vars, m) if e), self._terms[m]

    def shift(self, exponents: Mapping[str, int]) -> "LaurentPolynomial":
        """Multiply by the Laurent monomial with the given exponents."""
        return self * LaurentPolynomial.monomial(exponents)

    def evaluate_partial(self, values: Mapping[str, int]) -> "LaurentPolynomial":
        """Set some variables to integer values (nonzero where exponents are negative)."""
        idx = [i for i, v in enumerate(self._vars) if v in values]
        if not idx:
            return self
        acc: dict = {}
        for m, c in self._terms.items():
            for i in idx:
                e = m[i]
                if e:
                    base = values[self._vars[i]]
                    if e < 0:
                        if base not in (1, -1):
                            raise ValueError("evaluation at a non-unit with negative exponent")
                        c *= base ** (-e)
                    else:
                        c *= base**e
            if not c:
                continue
            key = tuple(0 if i in idx else e for i, e in enumerate(m))
            acc[key] = acc.get(key, 0) + c
        return _build(self._vars, {k: c for k, c in acc.items() if c})

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return NotImplemented

    def _addsub(self, other: "LaurentPolynomial", sign: int) -> "LaurentPolynomial":
        vars_ = _union(self._vars, other._vars)
        a = _reindex(self._terms, self._vars, vars_)
        b = _reindex(other._terms, other._vars, vars_)
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + sign * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return _build(vars_, out)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        return self._addsub(other, 1)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self._vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        return self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPolynomial._raw((), {})
        vars_ = _union(self._vars, other._vars)
        a = _reindex(self._terms, self._vars, vars_)
        b = _reindex(other._terms, other._vars, vars_)
        return _build(vars_, _mul_terms(vars_, a, b))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (m, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a monomial with non-unit coefficient")
            return LaurentPolynomial._raw(self._vars, {tuple(k * e for e in m): c ** (-k)})
        if self.is_monomial():
            (m, c), = self._terms.items()
            return _build(self._vars, {tuple(k * e for e in m): c**k}) if k else LaurentPolynomial.constant(1)
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial | None":
        """Quotient in the Laurent ring, or None when ``other`` does not divide."""
        if not other._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return self
        ma = self.monomial_content()
        mb = other.monomial_content()
        a0 = self.shift({v: -e for v, e in ma.items()}) if ma else self
        b0 = other.shift({v: -e for v, e in mb.items()}) if mb else other
        q = divexact_poly(a0, b0)
        if q is None:
            return None
        shift = dict(ma)
        for v, e in mb.items():
            shift[v] = shift.get(v, 0) - e
        return q.shift(shift)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items(), reverse=True):
            factors = []
            for v, e in zip(self._vars, m):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"


def divexact_poly(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial | None:
    """Exact division in the polynomial ring Z[x]; both inputs must have exponents >= 0."""
    if not b._terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a._terms:
        return a
    if not set(b._vars) <= set(a._vars):
        return None
    vars_ = a._vars
    tb = _reindex(b._terms, b._vars, vars_)
    q = _divexact_terms(len(vars_), a._terms, tb)
    if q is None:
        return None
    return _build(vars_, q)


def lp_arith(a: LaurentPolynomial, b: LaurentPolynomial, op: str) -> LaurentPolynomial:
    """Exact ``add``, ``sub`` or ``mul`` of two Laurent polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def lp_min_exponent(p: LaurentPolynomial, v: str) -> int:
    """Minimum exponent of ``v`` over the monomials of ``p``."""
    return p.min_exponent(v)


def var(name: str) -> LaurentPolynomial:
    return LaurentPolynomial.variable(name)


def product(factors: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    out = LaurentPolynomial.constant(1)
    for f in factors:
        out = out * f
    return out
