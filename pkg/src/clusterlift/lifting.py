"""Minimal monomial lifting of seeds and the accompanying checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from clusterlift.algebra.laurent import LaurentPolynomial
from clusterlift.algebra.rational import RationalFunction, as_rf, coprime, rf_substitute
from clusterlift.errors import MalformedNu, NoChart, NotFrozen, VertexCollision, ZeroPolynomial
from clusterlift.grading import (
    DegreeConfiguration,
    DegreeVector,
    NonHomogeneous,
    degree_of,
    mutate_degree_configuration,
)
from clusterlift.matrix import ExchangeMatrix, IntMatrix, is_maximal_rank
from clusterlift.seed import (
    Seed,
    VertexKind,
    default_var,
    exchange_monomials,
    express_in_seed,
    mutate_seed,
    validate_seed,
)

INFINITY = math.inf


@dataclass(frozen=True)
class LiftingData:
    """Boundary index set ``D``, lifting matrix ``nu`` (rows D, columns I) and status of D."""

    D: tuple[str, ...]
    nu: IntMatrix
    frozen_kind: VertexKind = VertexKind.HIGHLYFROZEN
    names: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "D", tuple(str(d) for d in self.D))
        object.__setattr__(self, "frozen_kind", VertexKind(self.frozen_kind))
        if self.frozen_kind is VertexKind.UNFROZEN:
            raise MalformedNu("lifting vertices must be frozen")
        if len(set(self.D)) != len(self.D):
            raise MalformedNu("duplicate lifting vertex")
        if set(self.nu.rows) != set(self.D):
            raise MalformedNu(f"nu rows {list(self.nu.rows)} differ from D {list(self.D)}")
        names = {d: default_var(d, "X") for d in self.D}
        names.update({str(k): str(v) for k, v in self.names.items()})
        object.__setattr__(self, "names", names)

    def column(self, j: str) -> dict[str, int]:
        return {d: self.nu[d, j] for d in self.D}


@dataclass(frozen=True)
class LiftingHypotheses:
    """Symbolic evidence for the hypotheses under which lifting describes the Cox ring."""

    maximal_rank: bool
    noncoprime_pairs: tuple[tuple[str, str], ...]
    noncoprime_exchanges: tuple[str, ...]

    @property
    def warnings(self) -> list[str]:
        out = []
        if not self.maximal_rank:
            out.append("exchange matrix is not of maximal rank")
        for i, j in self.noncoprime_pairs:
            out.append(f"cluster variables at {i} and {j} share a factor")
        for k in self.noncoprime_exchanges:
            out.append(f"cluster variable at {k} and its exchange partner share a factor")
        return out

    @property
    def ok(self) -> bool:
        return not self.warnings


@dataclass(frozen=True, eq=False)
class LiftedSeed:
    seed: Seed
    base: Seed
    data: LiftingData
    grading: DegreeConfiguration
    hypotheses: LiftingHypotheses | None = None
    notices: tuple[str, ...] = ()

    @property
    def D(self) -> tuple[str, ...]:
        return self.data.D

    def X(self, d: str) -> RationalFunction:
        return RationalFunction.variable(self.data.names[d])


def _nu_monomial(data: LiftingData, exps: Mapping[str, int]) -> LaurentPolynomial:
    return LaurentPolynomial.monomial({data.names[d]: e for d, e in exps.items() if e})


def check_hypotheses(t: Seed) -> LiftingHypotheses:
    """Maximal rank and coprimality of unfrozen variables and of exchange pairs."""
    unfrozen = list(t.mutable)
    pairs = []
    for a, i in enumerate(unfrozen):
        for j in unfrozen[a + 1:]:
            if not coprime(t.cluster[i].num, t.cluster[j].num):
                pairs.append((i, j))
    exch = []
    for k in unfrozen:
        partner = mutate_seed(t, k).cluster[k]
        if not coprime(t.cluster[k].num, partner.num):
            exch.append(k)
    return LiftingHypotheses(is_maximal_rank(t.matrix), tuple(pairs), tuple(exch))


def lift_seed(t: Seed, data: LiftingData, check: bool = True) -> LiftedSeed:
    """Build the lifted seed ``(B; -nu B)`` with variables ``X^{nu_j} x_j`` and ``X_d``."""
    validate_seed(t)
    clash = set(data.D) & set(t.vertices)
    if clash:
        raise VertexCollision(f"lifting vertices {sorted(clash)} already belong to the seed")
    if set(data.nu.cols) != set(t.vertices):
        raise MalformedNu(f"nu columns {list(data.nu.cols)} differ from the seed vertices")
    xnames = [data.names[d] for d in data.D]
    universe = {g for f in t.cluster.values() for g in f.variables} | set(t.names.values())
    taken = universe & set(xnames)
    if taken or len(set(xnames)) != len(xnames):
        raise VertexCollision(f"lifting variable names {sorted(taken) or xnames} are already in use")

    B = t.matrix
    lower = [
        [-sum(data.nu[d, i] * B[i, k] for i in B.rows) for k in B.cols]
        for d in data.D
    ]
    rows = list(B.rows) + list(data.D)
    matrix = ExchangeMatrix(rows, B.cols, [list(r) for r in B.entries] + lower)

    kinds = dict(t.kinds)
    kinds.update({d: data.frozen_kind for d in data.D})
    names = dict(t.names)
    names.update({d: data.names[d] for d in data.D})
    cluster = {j: t.cluster[j] * _nu_monomial(data, data.column(j)) for j in t.vertices}
    cluster.update({d: RationalFunction.variable(data.names[d]) for d in data.D})

    chart = None
    try:
        base_map = t.expression_map()
    except NoChart:
        base_map = None
    if base_map is not None:
        scale = {
            t.names[j]: RationalFunction.from_laurent(
                LaurentPolynomial.variable(t.names[j]) * _nu_monomial(data, {d: -e for d, e in data.column(j).items()})
            )
            for j in t.vertices
        }
        chart = {g: rf_substitute(f, scale, partial=True) for g, f in base_map.items()}
        chart.update({x: RationalFunction.variable(x) for x in xnames})
    seed = Seed(kinds, matrix, cluster, (), names, chart)

    degrees = {j: DegreeVector(data.column(j)) for j in t.vertices}
    degrees.update({d: DegreeVector.basis(d) for d in data.D})
    grading = DegreeConfiguration(degrees, data.D)
    hyp = check_hypotheses(t) if check else None
    return LiftedSeed(seed, t, data, grading, hyp)


def restrict_iota(f: object, L: LiftedSeed) -> RationalFunction:
    """Specialize every ``X_d`` to 1."""
    f = as_rf(f)
    one = RationalFunction.constant(1)
    return rf_substitute(f, {L.data.names[d]: one for d in L.D}, partial=True)


def homogenize(f: object, L: LiftedSeed) -> tuple[DegreeVector, LaurentPolynomial]:
    """Homogeneous lift of a polynomial in the base cluster variables.

    Returns ``(n, ftilde)`` with ``ftilde`` a polynomial in the lifted
    variables (named like the base ones, plus the ``X_d``) of degree ``n``,
    where ``n_d`` is the largest nu-weight of a monomial of ``f``.
    """
    if isinstance(f, RationalFunction):
        if f.den != LaurentPolynomial.constant(1):
            raise ValueError("homogenize expects a polynomial")
        f = f.num
    if isinstance(f, int):
        f = LaurentPolynomial.constant(f)
    if f.is_zero():
        raise ZeroPolynomial("cannot homogenize zero")
    if not f.is_polynomial():
        raise ValueError("homogenize expects nonnegative exponents")
    by_name = {L.base.names[j]: j for j in L.base.vertices}
    unknown = set(f.variables) - set(by_name)
    if unknown:
        raise KeyError(f"variables {sorted(unknown)} are not base cluster variables")
    weights = []
    for mono, c in f.terms.items():
        w = {d: 0 for d in L.D}
        for name, e in mono:
            for d in L.D:
                w[d] += L.data.nu[d, by_name[name]] * e
        weights.append((mono, c, w))
    n = {d: max(w[d] for _, _, w in weights) for d in L.D}
    out = LaurentPolynomial.constant(0)
    for mono, c, w in weights:
        exps = dict(mono)
        for d in L.D:
            exps[L.data.names[d]] = n[d] - w[d]
        out = out + LaurentPolynomial.monomial(exps, c)
    return DegreeVector(n), out


def cluster_valuation(f: object, s: Seed, d: str) -> int | float:
    """Order of vanishing of ``f`` along the frozen variable at ``d``, read in ``s``."""
    if d not in s.kinds:
        raise NotFrozen(f"unknown vertex {d!r}")
    if not s.kinds[d].frozen:
        raise NotFrozen(f"vertex {d!r} is unfrozen")
    f = as_rf(f)
    if f.is_zero():
        return INFINITY
    g = express_in_seed(f, s)
    v = s.names[d]
    return g.num.min_exponent(v) - g.den.min_exponent(v)


@dataclass(frozen=True)
class ValuationEntry:
    element: RationalFunction
    vertex: str
    value: int | float

    @property
    def ok(self) -> bool:
        return self.value >= 0


@dataclass(frozen=True)
class EqualityReport:
    entries: tuple[ValuationEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[ValuationEntry]:
        return [e for e in self.entries if not e.ok]


def check_equality_conditions(fs: Iterable[object], L: LiftedSeed) -> EqualityReport:
    """Valuations of each element along each lifting vertex; passes iff all are nonnegative."""
    entries = []
    for f in fs:
        f = as_rf(f)
        for d in L.D:
            entries.append(ValuationEntry(f, d, cluster_valuation(f, L.seed, d)))
    return EqualityReport(tuple(entries))


@dataclass(frozen=True)
class ConsistencyEntry:
    vertex: str
    role: str  # "cluster" or "exchange"
    restricts: bool
    degree: DegreeVector | NonHomogeneous
    expected: DegreeVector

    @property
    def ok(self) -> bool:
        return self.restricts and isinstance(self.degree, DegreeVector) and self.degree == self.expected


@dataclass(frozen=True)
class ConsistencyReport:
    sequence: tuple[str, ...]
    entries: tuple[ConsistencyEntry, ...]
    lifted: Seed
    base: Seed
    grading: DegreeConfiguration

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def __bool__(self) -> bool:
        return self.passed

    def degree(self, v: str, role: str = "cluster") -> DegreeVector | NonHomogeneous:
        for e in self.entries:
            if e.vertex == v and e.role == role:
                return e.degree
        raise KeyError(v)


def verify_lifting_consistency(L: LiftedSeed, seq: Sequence[str]) -> ConsistencyReport:
    """Mutate lifted and base seeds together and compare restrictions and degrees.

    Degrees are computed by expressing each variable in the initial lifted
    seed, which is a genuine homogeneity test rather than a tautology.
    """
    lifted, base, sigma = L.seed, L.base, L.grading
    for k in seq:
        sigma = mutate_degree_configuration(lifted, sigma, k)
        lifted = mutate_seed(lifted, k)
        base = mutate_seed(base, k)
    entries = []
    for i in base.vertices:
        x = lifted.cluster[i]
        ok = restrict_iota(x, L) == base.cluster[i]
        entries.append(ConsistencyEntry(i, "cluster", ok, degree_of(x, L.seed, L.grading), sigma[i]))
    for d in L.D:
        x = lifted.cluster[d]
        entries.append(ConsistencyEntry(d, "cluster", True, degree_of(x, L.seed, L.grading), sigma[d]))
    for k in lifted.mutable:
        plus, minus = exchange_monomials(lifted, k)
        partner = (plus + minus) / lifted.cluster[k]
        bplus, bminus = exchange_monomials(base, k)
        bpartner = (bplus + bminus) / base.cluster[k]
        expected = mutate_degree_configuration(lifted, sigma, k)[k]
        entries.append(
            ConsistencyEntry(
                k, "exchange", restrict_iota(partner, L) == bpartner, degree_of(partner, L.seed, L.grading), expected
            )
        )
    return ConsistencyReport(tuple(seq), tuple(entries), lifted, base, sigma)
