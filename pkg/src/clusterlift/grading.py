"""Z^D-valued degree configurations on seeds."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from clusterlift.algebra.laurent import LaurentPolynomial
from clusterlift.algebra.rational import as_rf
from clusterlift.errors import InvalidConfiguration, KeyMismatch
from clusterlift.seed import Seed, express_in_seed, mutate_seed


class DegreeVector:
    """Sparse integer vector indexed by basis labels."""

    __slots__ = ("_c",)

    def __init__(self, coords: Mapping[str, int] | None = None):
        self._c = {str(k): int(v) for k, v in (coords or {}).items() if v}

    @classmethod
    def basis(cls, label: str) -> "DegreeVector":
        return cls({label: 1})

    @property
    def coords(self) -> dict[str, int]:
        return dict(self._c)

    def __getitem__(self, label: str) -> int:
        return self._c.get(label, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "DegreeVector") -> "DegreeVector":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return DegreeVector(out)

    def __neg__(self) -> "DegreeVector":
        return DegreeVector({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "DegreeVector") -> "DegreeVector":
        return self + (-other)

    def scale(self, n: int) -> "DegreeVector":
        return DegreeVector({k: n * v for k, v in self._c.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            other = DegreeVector(other)
        if not isinstance(other, DegreeVector):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"DegreeVector({dict(sorted(self._c.items()))})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, v in sorted(self._c.items()):
            sign = "-" if v < 0 else "+"
            mag = "" if abs(v) == 1 else f"{abs(v)}*"
            parts.append(f"{sign} {mag}e[{k}]")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def weighted_sum(weights: Mapping[str, int], vectors: Mapping[str, DegreeVector]) -> DegreeVector:
    out: dict[str, int] = {}
    for v, w in weights.items():
        if w:
            for k, c in vectors[v]._c.items():
                out[k] = out.get(k, 0) + w * c
    return DegreeVector(out)


@dataclass(frozen=True)
class DegreeConfiguration:
    """Degrees of the vertices of a seed, over a named free basis."""

    degrees: Mapping[str, DegreeVector]
    basis: tuple[str, ...] = field(default=())

    def __post_init__(self):
        degs = {str(v): d if isinstance(d, DegreeVector) else DegreeVector(d) for v, d in self.degrees.items()}
        object.__setattr__(self, "degrees", degs)
        labels = set(self.basis)
        for d in degs.values():
            labels |= set(d.coords)
        basis = tuple(self.basis) + tuple(sorted(labels - set(self.basis)))
        object.__setattr__(self, "basis", basis)

    def __getitem__(self, v: str) -> DegreeVector:
        return self.degrees[v]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DegreeConfiguration):
            return NotImplemented
        return self.degrees == other.degrees

    def __hash__(self) -> int:
        return hash(frozenset(self.degrees.items()))

    @classmethod
    def zero(cls, s: Seed, basis: Sequence[str] = ()) -> "DegreeConfiguration":
        return cls({v: DegreeVector() for v in s.vertices}, tuple(basis))


def _check_keys(s: Seed, sigma: DegreeConfiguration) -> None:
    if set(sigma.degrees) != set(s.vertices):
        raise KeyMismatch(
            f"configuration keys {sorted(sigma.degrees)} differ from seed vertices {sorted(s.vertices)}"
        )


def grading_defects(s: Seed, sigma: DegreeConfiguration) -> dict[str, DegreeVector]:
    """Columns where the two sides of the grading condition differ, with their difference."""
    _check_keys(s, sigma)
    out = {}
    for k in s.mutable:
        col = s.matrix.col(k)
        diff = weighted_sum(col, sigma.degrees)
        if not diff.is_zero():
            out[k] = diff
    return out


def is_degree_configuration(s: Seed, sigma: DegreeConfiguration) -> bool:
    return not grading_defects(s, sigma)


def mutate_degree_configuration(s: Seed, sigma: DegreeConfiguration, k: str) -> DegreeConfiguration:
    """The configuration on ``mutate_seed(s, k)``: only the degree at ``k`` changes."""
    s._require_mutable(k)
    bad = grading_defects(s, sigma)
    if bad:
        raise InvalidConfiguration(f"grading condition fails in columns {sorted(bad)}")
    plus = {i: b for i, b in s.matrix.col(k).items() if b > 0}
    degs = dict(sigma.degrees)
    degs[k] = weighted_sum(plus, sigma.degrees) - sigma.degrees[k]
    return DegreeConfiguration(degs, sigma.basis)


def mutate_graded(s: Seed, sigma: DegreeConfiguration, seq: Iterable[str]) -> tuple[Seed, DegreeConfiguration]:
    for k in seq:
        sigma = mutate_degree_configuration(s, sigma, k)
        s = mutate_seed(s, k)
    return s, sigma


@dataclass(frozen=True)
class NonHomogeneous:
    """Returned by :func:`degree_of` when an element is not homogeneous."""

    numerator_degrees: tuple[DegreeVector, ...]
    denominator_degrees: tuple[DegreeVector, ...]

    def __bool__(self) -> bool:
        return False


def _monomial_degrees(p: LaurentPolynomial, by_symbol: Mapping[str, DegreeVector]) -> list[DegreeVector]:
    out = []
    for mono in p.terms:
        d = weighted_sum(dict(mono), by_symbol)
        if d not in out:
            out.append(d)
    return out


def degree_of(f: object, s: Seed, sigma: DegreeConfiguration) -> DegreeVector | NonHomogeneous:
    """Degree of ``f`` in the grading ``sigma`` of ``s``, or :class:`NonHomogeneous`."""
    _check_keys(s, sigma)
    g = express_in_seed(as_rf(f), s)
    by_symbol = {s.names[v]: sigma.degrees[v] for v in s.vertices}
    nd = _monomial_degrees(g.num, by_symbol)
    dd = _monomial_degrees(g.den, by_symbol)
    if len(nd) > 1 or len(dd) != 1:
        return NonHomogeneous(tuple(nd), tuple(dd))
    if not nd:
        # zero is homogeneous of every degree; report the zero vector
        return DegreeVector()
    return nd[0] - dd[0]
