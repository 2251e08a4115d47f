"""Laurent and upper-bound membership, seed keys and exchange-graph exploration."""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Sequence

from clusterlift.algebra.rational import RationalFunction, as_rf
from clusterlift.errors import TieExplosion
from clusterlift.matrix import is_maximal_rank
from clusterlift.seed import Seed, VertexKind, express_in_seed, mutate_seed, validate_seed

MAX_TIE_GROUP = 8


def laurent_membership(f: object, s: Seed) -> bool:
    """True iff ``f`` is a Laurent polynomial in ``s`` with only unfrozen or semifrozen inverses."""
    g = express_in_seed(as_rf(f), s)
    if not g.den.is_monomial():
        return False
    invertible = {s.names[v] for v in s.vertices if s.kinds[v] is not VertexKind.HIGHLYFROZEN}
    return set(g.den.variables) <= invertible


@dataclass(frozen=True)
class UpperBoundResult:
    """Outcome of an upper-bound test.

    ``exact`` records whether the seed has maximal rank, in which case the
    upper bound is the upper cluster algebra and ``member`` decides
    membership there; otherwise it only decides membership in the upper bound.
    """

    member: bool
    exact: bool
    failed_at: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.member


def upper_bound_membership(f: object, t: Seed) -> UpperBoundResult:
    """Laurent membership in ``t`` and in every one-step mutation of ``t``."""
    f = as_rf(f)
    failed = []
    if not laurent_membership(f, t):
        failed.append("")
    for k in t.mutable:
        if not laurent_membership(f, mutate_seed(t, k)):
            failed.append(k)
    return UpperBoundResult(not failed, is_maximal_rank(t.matrix), tuple(failed))


@dataclass(frozen=True)
class SeedKey:
    """Canonical form of a seed up to relabeling of its mutable vertices."""

    frozen: tuple[tuple[str, str, str], ...]
    variables: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def digest(self) -> str:
        return hashlib.sha256(repr((self.frozen, self.variables, self.matrix)).encode()).hexdigest()[:16]


def _key_for(s: Seed, frozen: Sequence[str], order: Sequence[str], strings: dict[str, str]):
    rows = list(frozen) + list(order)
    mat = tuple(tuple(s.matrix[r, c] for c in order) for r in rows)
    return tuple(strings[v] for v in order), mat


def seed_key(s: Seed) -> SeedKey:
    """Sort mutable vertices by variable, trying all orders inside tie groups."""
    strings = {v: str(s.cluster[v]) for v in s.vertices}
    frozen = sorted(s.frozen())
    frozen_part = tuple((v, s.kinds[v].value, strings[v]) for v in frozen)
    mutable = sorted(s.mutable, key=lambda v: strings[v])
    groups: list[list[str]] = []
    for v in mutable:
        if groups and strings[groups[-1][0]] == strings[v]:
            groups[-1].append(v)
        else:
            groups.append([v])
    big = max((len(g) for g in groups), default=0)
    if big > MAX_TIE_GROUP:
        raise TieExplosion(f"tie group of {big} mutable vertices exceeds {MAX_TIE_GROUP}")
    if big <= 1:
        variables, mat = _key_for(s, frozen, mutable, strings)
        return SeedKey(frozen_part, variables, mat)
    best = None
    for choice in product(*(permutations(g) for g in groups)):
        order = [v for grp in choice for v in grp]
        cand = _key_for(s, frozen, order, strings)
        if best is None or cand < best:
            best = cand
    return SeedKey(frozen_part, *best)


@dataclass
class ExchangeGraph:
    nodes: dict[SeedKey, Seed]
    edges: set[tuple[SeedKey, str, SeedKey]]
    complete: bool
    cap: int
    variables: set[RationalFunction] = field(default_factory=set)
    root: SeedKey | None = None
    equal_cluster_conflicts: list[tuple[SeedKey, SeedKey]] = field(default_factory=list)

    def neighbours(self, key: SeedKey) -> set[SeedKey]:
        return {b for a, _, b in self.edges if a == key}

    def is_symmetric(self) -> bool:
        """Every recorded edge has a recorded reverse edge (labels may differ)."""
        pairs = {(a, b) for a, _, b in self.edges}
        return all((b, a) in pairs for a, b in pairs)

    def to_dict(self) -> dict:
        return {
            "nodes": [
                {"key": k.digest, "provenance": list(s.provenance)} for k, s in self.nodes.items()
            ],
            "edges": sorted([a.digest, k, b.digest] for a, k, b in self.edges),
            "complete": self.complete,
            "cap": self.cap,
            "variables": sorted(str(v) for v in self.variables),
        }


def explore_exchange_graph(t: Seed, cap: int) -> ExchangeGraph:
    """Breadth-first closure of ``t`` under mutation, stopping at ``cap`` nodes."""
    if cap < 1:
        raise ValueError("cap must be positive")
    validate_seed(t)
    root = seed_key(t)
    nodes = {root: t}
    edges: set = set()
    queue = deque([root])
    complete = True
    by_cluster: dict[frozenset, SeedKey] = {frozenset(root.variables): root}
    conflicts = []
    while queue:
        a = queue.popleft()
        s = nodes[a]
        for k in s.mutable:
            m = mutate_seed(s, k)
            b = seed_key(m)
            if b not in nodes:
                if len(nodes) >= cap:
                    complete = False
                    continue
                nodes[b] = m
                queue.append(b)
                cl = frozenset(b.variables)
                if cl in by_cluster and by_cluster[cl] != b:
                    conflicts.append((by_cluster[cl], b))
                by_cluster.setdefault(cl, b)
            edges.add((a, k, b))
    variables = {s.cluster[v] for s in nodes.values() for v in s.mutable}
    return ExchangeGraph(nodes, edges, complete, cap, variables, root, conflicts)
