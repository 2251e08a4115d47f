"""Diagonal partial compactification: lifting with nu = (Id, 0) and its chart maps."""

from __future__ import annotations

from clusterlift.algebra.rational import RationalFunction, as_rf, rf_substitute
from clusterlift.errors import NotMaximalRank, SemifrozenPresent
from clusterlift.grading import DegreeVector
from clusterlift.lifting import LiftedSeed, LiftingData, lift_seed, restrict_iota
from clusterlift.matrix import IntMatrix, is_maximal_rank
from clusterlift.seed import Seed, VertexKind, exchange_binomial, express_in_seed

FACTORIALITY_NOTICE = (
    "assumption: the upper cluster algebra of the base seed is factorial; this is not verified"
)


def primed(v: str) -> str:
    return v + "'"


def diagonal_compactification_lift(t: Seed, strict: bool = True) -> LiftedSeed:
    """Lift ``t`` along the boundary divisors ``i'`` indexed by its mutable vertices.

    With ``strict`` unset a seed that is not of maximal rank is accepted
    and the defect is reported as a notice instead of an error.
    """
    semi = t.of_kind(VertexKind.SEMIFROZEN)
    if semi:
        raise SemifrozenPresent(f"semi-frozen vertices {semi} are not allowed")
    notices = [FACTORIALITY_NOTICE]
    if not is_maximal_rank(t.matrix):
        if strict:
            raise NotMaximalRank("the exchange matrix is not of maximal rank")
        notices.append("the exchange matrix is not of maximal rank")
    D = [primed(k) for k in t.mutable]
    nu = IntMatrix.from_function(D, t.vertices, lambda d, i: int(d == primed(i)))
    L = lift_seed(t, LiftingData(tuple(D), nu, VertexKind.HIGHLYFROZEN))
    return LiftedSeed(L.seed, L.base, L.data, L.grading, L.hypotheses, tuple(notices))


def lifted_sections(L: LiftedSeed) -> dict[str, tuple[DegreeVector, RationalFunction]]:
    """Each lifted initial variable as a pair (degree, function in the base chart)."""
    out = {}
    for v in L.seed.vertices:
        f = express_in_seed(restrict_iota(L.seed.cluster[v], L), L.base)
        out[v] = (L.grading[v], f)
    return out


def chart_pullback(
    L: LiftedSeed, k: str, g: tuple[DegreeVector, object]
) -> tuple[DegreeVector, RationalFunction]:
    """Rewrite a section ``(n, f)`` from the base chart in the chart of ``mu_k(t)``.

    ``f`` is in the base seed's variables; the result uses the same symbols
    for the variables of ``mu_k(t)``.
    """
    t = L.base
    t._require_mutable(k)
    n, f = g
    n = n if isinstance(n, DegreeVector) else DegreeVector(n)
    sym = t.names[k]
    xk = RationalFunction.variable(sym)
    image = exchange_binomial(t.matrix, k, t.names) / xk
    out = rf_substitute(as_rf(f), {sym: image}, partial=True)
    e = n[primed(k)]
    return n, out * xk**e
