"""Seeds of geometric type with mixed frozen statuses, and their mutation."""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Mapping, Sequence

from clusterlift.algebra.laurent import IDENTIFIER, LaurentPolynomial
from clusterlift.algebra.rational import RationalFunction, as_rf, rf_substitute
from clusterlift.errors import MalformedSeed, NoChart, NotMutable
from clusterlift.matrix import (
    ExchangeMatrix,
    IntMatrix,
    determinant,
    inverse_unimodular,
    is_maximal_rank,
    mutate_matrix,
    skew_symmetrizer,
)


class VertexKind(str, Enum):
    UNFROZEN = "unfrozen"
    SEMIFROZEN = "semifrozen"
    HIGHLYFROZEN = "highlyfrozen"

    @property
    def frozen(self) -> bool:
        return self is not VertexKind.UNFROZEN


def default_var(vertex: str, prefix: str = "x") -> str:
    """Variable name for a vertex: the id itself if it is an identifier, else prefix + id."""
    return vertex if IDENTIFIER.match(vertex) else prefix + vertex


def monomial(base: Mapping[str, RationalFunction], exps: Mapping[str, int]) -> RationalFunction:
    out = RationalFunction.constant(1)
    for v, e in exps.items():
        if e:
            out = out * base[v] ** e
    return out


def exchange_binomial(B: IntMatrix, k: str, names: Mapping[str, str]) -> RationalFunction:
    """``x^{B+_k} + x^{B-_k}`` written in the symbols ``names``."""
    plus = {names[i]: b for i, b in B.col(k).items() if b > 0}
    minus = {names[i]: -b for i, b in B.col(k).items() if b < 0}
    return RationalFunction.from_laurent(LaurentPolynomial.monomial(plus) + LaurentPolynomial.monomial(minus))


def _derive_chart(cluster: Mapping[str, RationalFunction], names: Mapping[str, str]):
    """Invert a root cluster of unit Laurent monomials; None means identity."""
    if all(cluster[v] == RationalFunction.variable(names[v]) for v in cluster):
        return None
    verts = list(cluster)
    exps = []
    for v in verts:
        f = cluster[v]
        if not f.is_laurent() or not f.num.is_monomial() or f.num.leading_term()[1] != 1:
            raise NoChart(f"root cluster variable at {v!r} is not a unit monomial; supply a chart")
        try:
            exps.append(dict(f.to_laurent().leading_term()[0]))
        except ValueError:
            raise NoChart(f"root cluster variable at {v!r} has a non-unit denominator") from None
    gens = sorted({g for e in exps for g in e})
    if len(gens) != len(verts):
        raise NoChart("root cluster does not form a basis of the universe; supply a chart")
    M = [[e.get(g, 0) for g in gens] for e in exps]
    if abs(determinant(M)) != 1:
        raise NoChart("root cluster monomials are not unimodular; supply a chart")
    inv = inverse_unimodular(M)
    # gens[j] = prod_v symbol_v ^ inv[j][v]
    return {
        g: RationalFunction.from_laurent(
            LaurentPolynomial.monomial({names[verts[i]]: inv[j][i] for i in range(len(verts))})
        )
        for j, g in enumerate(gens)
    }


class Seed:
    """A seed ``(I_uf, I_sf, I_hf, B, x)``.

    Cluster variables are rational functions in a fixed universe of
    independent generators (the root seed's variables, unless a ``chart``
    says otherwise).  ``names`` gives the symbol used for each vertex when
    an element is rewritten in this seed's own variables, and ``chart``
    expresses each universe generator in the root seed's symbols.
    """

    __slots__ = ("kinds", "matrix", "cluster", "provenance", "names", "_chart", "_parent", "_emap")

    def __init__(
        self,
        kinds: Mapping[str, VertexKind | str],
        matrix: IntMatrix,
        cluster: Mapping[str, object] | None = None,
        provenance: Sequence[str] = (),
        names: Mapping[str, str] | None = None,
        chart: Mapping[str, object] | None = None,
    ):
        self.kinds = {str(v): VertexKind(k) for v, k in kinds.items()}
        self.matrix = ExchangeMatrix.coerce(matrix)
        self.names = {v: default_var(v) for v in self.kinds}
        if names:
            self.names.update({str(v): str(n) for v, n in names.items()})
        if cluster is None:
            self.cluster = {v: RationalFunction.variable(self.names[v]) for v in self.kinds}
        else:
            self.cluster = {str(v): as_rf(f) for v, f in cluster.items()}
        self.provenance = tuple(str(k) for k in provenance)
        self._chart = None if chart is None else {g: as_rf(f) for g, f in chart.items()}
        self._parent = None
        self._emap = None
        self._check_structure()

    def _check_structure(self) -> None:
        verts = set(self.kinds)
        if set(self.matrix.rows) != verts:
            raise MalformedSeed("matrix rows must equal the vertex set")
        if set(self.cluster) != verts:
            raise MalformedSeed("cluster keys must equal the vertex set")
        unfrozen = {v for v, k in self.kinds.items() if k is VertexKind.UNFROZEN}
        if set(self.matrix.cols) != unfrozen:
            raise MalformedSeed("matrix columns must be exactly the unfrozen vertices")
        if len(set(self.names.values())) != len(self.names):
            raise MalformedSeed("vertex variable names must be distinct")
        for v, n in self.names.items():
            if not IDENTIFIER.match(n):
                raise MalformedSeed(f"variable name {n!r} for vertex {v!r} is not an identifier")
        for k in self.provenance:
            if k not in unfrozen:
                raise MalformedSeed(f"provenance step {k!r} is not an unfrozen vertex")

    # -- basic views --------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.matrix.rows

    @property
    def mutable(self) -> tuple[str, ...]:
        return self.matrix.cols

    def kind(self, v: str) -> VertexKind:
        return self.kinds[v]

    def frozen(self) -> list[str]:
        return [v for v in self.vertices if self.kinds[v].frozen]

    def of_kind(self, kind: VertexKind) -> list[str]:
        return [v for v in self.vertices if self.kinds[v] is kind]

    def symbols(self) -> dict[str, RationalFunction]:
        """This seed's variables as fresh independent generators."""
        return {v: RationalFunction.variable(self.names[v]) for v in self.vertices}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return (
            self.kinds == other.kinds
            and self.matrix.same_entries(other.matrix)
            and self.cluster == other.cluster
        )

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.kinds.items())), frozenset(self.cluster.items())))

    def __repr__(self) -> str:
        cl = ", ".join(f"{v}: {self.cluster[v]}" for v in self.vertices)
        return f"Seed({{{cl}}}, provenance={list(self.provenance)})"

    def replace(self, **changes) -> "Seed":
        args = dict(
            kinds=self.kinds,
            matrix=self.matrix,
            cluster=self.cluster,
            provenance=self.provenance,
            names=self.names,
            chart=self._chart,
        )
        args.update(changes)
        return Seed(**args)

    # -- mutation -----------------------------------------------------------

    def _require_mutable(self, k: str) -> None:
        if k not in self.kinds:
            raise NotMutable(f"unknown vertex {k!r}", vertex=k)
        if self.kinds[k] is not VertexKind.UNFROZEN:
            raise NotMutable(f"vertex {k!r} is {self.kinds[k].value}", vertex=k)

    def chart(self):
        """Universe generator -> rational function in root symbols (None = identity)."""
        if self._chart is None:
            root = self.root()
            if root._chart is None:
                root._chart = _derive_chart(root.cluster, root.names) or {}
            self._chart = root._chart
        return self._chart or None

    def root(self) -> "Seed":
        """The seed at the start of the provenance path."""
        s = self
        while s.provenance:
            if s._parent is not None:
                s = s._parent
            else:
                k = s.provenance[-1]
                parent = _mutate(s, k, s.provenance[:-1])
                parent._chart = s._chart
                s = parent
        return s

    def expression_map(self) -> dict[str, RationalFunction]:
        """Universe generator -> rational function in this seed's symbols."""
        if self._emap is not None:
            return self._emap
        chain = []
        s = self
        while s.provenance and s._emap is None:
            if s._parent is None:
                s = _attach_parents(s)
                continue
            chain.append((s._parent, s.provenance[-1]))
            s = s._parent
        if s._emap is None:
            ch = s.chart()
            if ch is None:
                ch = {g: RationalFunction.variable(g) for g in s.names.values()}
            s._emap = dict(ch)
        emap = s._emap
        for parent, k in reversed(chain):
            sym = parent.names[k]
            repl = exchange_binomial(parent.matrix, k, parent.names) / RationalFunction.variable(sym)
            emap = {
                g: (rf_substitute(f, {sym: repl}, partial=True) if sym in f.variables else f)
                for g, f in emap.items()
            }
        self._emap = emap
        return emap


def _attach_parents(s: Seed) -> Seed:
    """Rebuild the parent chain of a seed loaded with a provenance path."""
    steps = list(s.provenance)
    seeds = [s]
    cur = s
    while steps:
        k = steps.pop()
        cur = _mutate(cur, k, tuple(steps))
        seeds.append(cur)
    root = seeds[-1]
    root._chart = s._chart
    for child, parent in zip(seeds, seeds[1:]):
        child._parent = parent
    return s


def _mutate(s: Seed, k: str, provenance: tuple[str, ...]) -> Seed:
    s._require_mutable(k)
    mplus, mminus = exchange_monomials(s, k)
    new = dict(s.cluster)
    new[k] = (mplus + mminus) / s.cluster[k]
    out = Seed.__new__(Seed)
    out.kinds = s.kinds
    out.matrix = mutate_matrix(s.matrix, k)
    out.cluster = new
    out.provenance = provenance
    out.names = s.names
    out._chart = s._chart
    out._parent = None
    out._emap = None
    return out


def validate_seed(s: Seed) -> dict[str, int]:
    """Check the structural invariants and return a minimal symmetrizer of B°."""
    s._check_structure()
    return skew_symmetrizer(s.matrix)


def exchange_monomials(s: Seed, k: str) -> tuple[RationalFunction, RationalFunction]:
    """The monomials ``x^{B+_k}`` and ``x^{B-_k}`` of the exchange relation at ``k``."""
    s._require_mutable(k)
    col = s.matrix.col(k)
    plus = monomial(s.cluster, {i: b for i, b in col.items() if b > 0})
    minus = monomial(s.cluster, {i: -b for i, b in col.items() if b < 0})
    return plus, minus


def mutate_seed(s: Seed, k: str) -> Seed:
    """Mutation at the unfrozen vertex ``k``."""
    out = _mutate(s, k, s.provenance + (k,))
    out._parent = s
    return out


def apply_sequence(s: Seed, seq: Iterable[str]) -> Seed:
    for step, k in enumerate(seq):
        try:
            s = mutate_seed(s, k)
        except NotMutable as e:
            raise NotMutable(f"step {step}: {e}", vertex=k, step=step) from None
    return s


def express_in_seed(f: object, s: Seed) -> RationalFunction:
    """Rewrite ``f`` (over the universe) in the variables of ``s``."""
    f = as_rf(f)
    emap = s.expression_map()
    missing = set(f.variables) - set(emap)
    if missing:
        raise KeyError(f"variables {sorted(missing)} are not in the seed's universe")
    return rf_substitute(f, emap, partial=True)


def expand_from_seed(f: object, s: Seed) -> RationalFunction:
    """Inverse of :func:`express_in_seed`: substitute the seed's cluster for its symbols."""
    return rf_substitute(as_rf(f), {s.names[v]: s.cluster[v] for v in s.vertices}, partial=True)


def is_seed_maximal_rank(s: Seed) -> bool:
    return is_maximal_rank(s.matrix)


def make_seed(
    unfrozen: Sequence[str],
    frozen: Mapping[str, VertexKind | str] | None,
    B: Sequence[Sequence[int]],
    rows: Sequence[str] | None = None,
    **kw,
) -> Seed:
    """Convenience constructor: rows default to unfrozen followed by frozen vertices."""
    frozen = dict(frozen or {})
    rows = list(rows) if rows is not None else list(unfrozen) + list(frozen)
    kinds = {v: (VertexKind.UNFROZEN if v in unfrozen else VertexKind(frozen[v])) for v in rows}
    return Seed(kinds, ExchangeMatrix(rows, list(unfrozen), B), **kw)
