"""Lifting the trivial seed of a torus to the Cox ring of a smooth toric variety."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from clusterlift.errors import MalformedSeed, NotSmoothCone, ProportionalRays
from clusterlift.grading import DegreeVector
from clusterlift.lifting import LiftedSeed, LiftingData, lift_seed
from clusterlift.matrix import ExchangeMatrix, IntMatrix, determinant, inverse_unimodular
from clusterlift.seed import Seed, VertexKind


@dataclass(frozen=True)
class FanInput:
    """Rays of a fan in a rank-``n`` lattice and a smooth base cone (1-based ray indices)."""

    rank: int
    rays: tuple[tuple[int, ...], ...]
    base_cone: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "base_cone", tuple(int(i) for i in self.base_cone))
        n = self.rank
        if n < 0 or any(len(r) != n for r in self.rays):
            raise MalformedSeed(f"every ray must have {n} coordinates")
        if len(self.base_cone) != n or len(set(self.base_cone)) != n:
            raise NotSmoothCone(f"the base cone must consist of {n} distinct rays")
        if any(not 1 <= i <= len(self.rays) for i in self.base_cone):
            raise MalformedSeed("base cone index out of range")
        for r in self.rays:
            if not any(r):
                raise ProportionalRays("zero vector is not a ray")
        for a in range(len(self.rays)):
            for b in range(a + 1, len(self.rays)):
                if _same_half_line(self.rays[a], self.rays[b]):
                    raise ProportionalRays(f"rays {a + 1} and {b + 1} span the same half-line")
        if abs(determinant([self.rays[i - 1] for i in self.base_cone])) != 1:
            raise NotSmoothCone("base cone rays do not form a lattice basis")

    @property
    def labels(self) -> list[str]:
        return [str(i + 1) for i in range(len(self.rays))]

    @property
    def boundary(self) -> list[str]:
        return [str(i + 1) for i in range(len(self.rays)) if i + 1 not in self.base_cone]


def _same_half_line(u: Sequence[int], v: Sequence[int]) -> bool:
    # u, v are positively proportional iff u_i v_j = u_j v_i for all i, j and u.v > 0
    n = len(u)
    if any(u[i] * v[j] != u[j] * v[i] for i in range(n) for j in range(n)):
        return False
    return sum(a * b for a, b in zip(u, v)) > 0


def dual_basis(fan: FanInput) -> list[list[int]]:
    """Rows ``w_k`` with ``<w_k, v_j> = delta_kj`` for the base cone rays ``v_j``."""
    V = [fan.rays[i - 1] for i in fan.base_cone]
    VT = [list(col) for col in zip(*V)] if V else []
    return inverse_unimodular(VT)


def toric_nu(fan: FanInput) -> IntMatrix:
    W = dual_basis(fan)
    base = [str(i) for i in fan.base_cone]
    D = fan.boundary
    entries = [
        [-sum(w * x for w, x in zip(W[k], fan.rays[int(d) - 1])) for k in range(fan.rank)]
        for d in D
    ]
    return IntMatrix(D, base, entries)


@dataclass(frozen=True)
class CoxReport:
    """The lifted algebra is a polynomial ring; generators and their degrees."""

    generators: tuple[tuple[str, DegreeVector], ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def describe(self) -> str:
        return f"polynomial ring in {self.rank} variables: " + ", ".join(g for g, _ in self.generators)


def toric_lift(fan: FanInput) -> tuple[LiftedSeed, CoxReport]:
    base = [str(i) for i in fan.base_cone]
    t = Seed(
        {v: VertexKind.HIGHLYFROZEN for v in base},
        ExchangeMatrix(base, [], [[] for _ in base]),
    )
    data = LiftingData(tuple(fan.boundary), toric_nu(fan), VertexKind.HIGHLYFROZEN)
    L = lift_seed(t, data)
    gens = tuple((str(L.seed.cluster[v]), L.grading[v]) for v in L.seed.vertices)
    return L, CoxReport(gens)
