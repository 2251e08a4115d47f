"""Registry of worked examples with their expected data."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Callable

from clusterlift.algebra.laurent import LaurentPolynomial
from clusterlift.algebra.rational import RationalFunction
from clusterlift.algebra.parse import parse_expression
from clusterlift.cases.diagonal import diagonal_compactification_lift
from clusterlift.cases.toric import FanInput, toric_lift
from clusterlift.errors import UnknownFixture
from clusterlift.grading import DegreeVector
from clusterlift.lifting import LiftedSeed, LiftingData, lift_seed
from clusterlift.matrix import IntMatrix
from clusterlift.seed import Seed, VertexKind, make_seed

# how an expected value was obtained
WORKED = "worked-example"
HAND = "hand-derived"


@dataclass(frozen=True)
class Expected:
    value: Any
    origin: str


@dataclass
class Fixture:
    name: str
    description: str
    seed: Seed
    lifted: LiftedSeed | None = None
    fan: FanInput | None = None
    expected: dict[str, Expected] = field(default_factory=dict)

    @property
    def lifting(self) -> LiftingData | None:
        return None if self.lifted is None else self.lifted.data

    def value(self, key: str) -> Any:
        return self.expected[key].value


def _deg(**coords: int) -> DegreeVector:
    return DegreeVector(coords)


def a2_seed() -> Seed:
    """Coefficient-free A2: one arrow 1 -> 2."""
    return make_seed(["1", "2"], {}, [[0, 1], [-1, 0]])


def _fano() -> Fixture:
    D = ("E1", "E2", "E3", "E4", "E5")
    nu = IntMatrix(D, ["1", "2"], [[0, -1], [1, 0], [1, 1], [0, 1], [-1, 0]])
    L = lift_seed(a2_seed(), LiftingData(D, nu))
    P = parse_expression
    # degree of the i-th variable is e_{i+1} + e_{i+2} - e_{i+4}, indices mod 5
    degs = {}
    for i in range(1, 6):
        e = lambda j: f"E{(j - 1) % 5 + 1}"  # noqa: E731
        degs[i] = DegreeVector({e(i + 1): 1, e(i + 2): 1, e(i + 4): -1})
    return Fixture(
        "fano-a2",
        "A2 seed lifted along the five boundary divisors of a degree-5 del Pezzo surface",
        a2_seed(),
        L,
        expected={
            "nu": Expected(nu, WORKED),
            "minus_nu_B": Expected(
                IntMatrix(D, ["1", "2"], [[-1, 0], [0, -1], [1, -1], [1, 0], [0, 1]]), WORKED
            ),
            "lifted_cluster": Expected({"1": P("x1*E2*E3/E5"), "2": P("x2*E3*E4/E1")}, WORKED),
            "degrees": Expected(degs, WORKED),
            "variables": Expected(
                {
                    1: P("x1"),
                    2: P("x2"),
                    3: P("(1+x2)/x1"),
                    4: P("(x1+x2+1)/(x1*x2)"),
                    5: P("(1+x1)/x2"),
                },
                WORKED,
            ),
            "mutable_variable_count": Expected(5, WORKED),
        },
    )


def chain_z_polynomials(n: int) -> list[LaurentPolynomial]:
    """x_1..x_n in z_1..z_n from x_{k+1} = z_{k+1} x_k - x_{k-1}, x_0 = 1, x_{-1} = 0."""
    prev, cur = LaurentPolynomial.constant(0), LaurentPolynomial.constant(1)
    out = []
    for k in range(1, n + 1):
        prev, cur = cur, LaurentPolynomial.variable(f"z{k}") * cur - prev
        out.append(cur)
    return out


def total_degree_nu(t: Seed, d: str = "0") -> IntMatrix:
    """Lifting matrix along the hyperplane at infinity: the total degree of each variable."""
    row = [t.cluster[v].num.total_degree() - t.cluster[v].den.total_degree() for v in t.vertices]
    return IntMatrix([d], t.vertices, [row])


def projective_chain_seed(n: int) -> Seed:
    """Chain 1 <- 2 <- ... <- n with n highly frozen and variables polynomial in z."""
    if n < 1:
        raise UnknownFixture("the projective chain needs n >= 1")
    verts = [str(k) for k in range(1, n + 1)]
    mutable = verts[:-1]
    B = [[(1 if i == j + 1 else -1 if j == i + 1 else 0) for j in range(1, n)] for i in range(1, n + 1)]
    xs = chain_z_polynomials(n)
    cluster = {v: RationalFunction.from_laurent(x) for v, x in zip(verts, xs)}
    # z_k = (x_k + x_{k-2}) / x_{k-1} with x_0 = 1 and x_{-1} = 0
    sym = {0: RationalFunction.constant(1), -1: RationalFunction.constant(0)}
    sym.update({k: RationalFunction.variable(f"x{k}") for k in range(1, n + 1)})
    chart = {f"z{k}": (sym[k] + sym[k - 2]) / sym[k - 1] for k in range(1, n + 1)}
    return make_seed(mutable, {verts[-1]: VertexKind.HIGHLYFROZEN}, B, rows=verts, cluster=cluster, chart=chart)


def _projective_chain(n: int) -> Fixture:
    t = projective_chain_seed(n)
    nu = total_degree_nu(t)
    L = lift_seed(t, LiftingData(("0",), nu, names={"0": "Z0"}))
    Z0 = RationalFunction.variable("Z0")
    partners = {str(k): Z0 * RationalFunction.variable(f"z{k + 1}") for k in range(1, n)}
    return Fixture(
        f"projective-chain-{n}",
        f"chain seed of an affine {n}-space lifted to projective {n}-space",
        t,
        L,
        expected={
            "nu": Expected(IntMatrix(["0"], t.vertices, [list(range(1, n + 1))]), WORKED),
            "lifted_row": Expected({str(k): -2 for k in range(1, n)}, HAND),
            "exchange_partners": Expected(partners, WORKED),
        },
    )


def _projective_trivial(n: int) -> Fixture:
    verts = [str(k) for k in range(1, n + 1)]
    t = Seed(
        {v: VertexKind.HIGHLYFROZEN for v in verts},
        IntMatrix(verts, [], [[] for _ in verts]),
        names={v: f"z{v}" for v in verts},
    )
    nu = IntMatrix(["0"], verts, [[1] * n])
    L = lift_seed(t, LiftingData(("0",), nu, names={"0": "Z0"}))
    return Fixture(
        f"projective-trivial-{n}",
        f"trivial seed of an affine {n}-space lifted to projective {n}-space",
        t,
        L,
        expected={"nu": Expected(nu, WORKED)},
    )


def _diag_a1() -> Fixture:
    t = make_seed(["1"], {"2": VertexKind.HIGHLYFROZEN}, [[0], [-1]])
    L = diagonal_compactification_lift(t)
    P = parse_expression
    return Fixture(
        "diag-a1",
        "A1 seed with one highly frozen coefficient, diagonally compactified",
        t,
        L,
        expected={
            "lifted_cluster": Expected({"1'": P("X1'"), "1": P("X1'*x1"), "2": P("x2")}, WORKED),
            "degrees": Expected({"1'": _deg(**{"1'": 1}), "1": _deg(**{"1'": 1}), "2": DegreeVector()}, WORKED),
            "mutated_degree": Expected(_deg(**{"1'": -1}), WORKED),
            "relation": Expected("x1 * mu_1(x)_1 = 1 + x2", WORKED),
        },
    )


def _diag_a3() -> Fixture:
    t = make_seed(["1", "2", "3"], {}, [[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    L = diagonal_compactification_lift(t, strict=False)
    arrows = {("1", "2"), ("2", "3"), ("2", "1'"), ("3", "2'"), ("2'", "1"), ("3'", "2")}
    return Fixture(
        "diag-a3",
        "A3 chain 1 -> 2 -> 3, diagonally compactified",
        t,
        L,
        expected={
            "arrows": Expected(arrows, WORKED),
            "lifted_cluster": Expected(
                {
                    **{f"{i}'": RationalFunction.variable(f"X{i}'") for i in (1, 2, 3)},
                    **{
                        str(i): RationalFunction.variable(f"X{i}'") * RationalFunction.variable(f"x{i}")
                        for i in (1, 2, 3)
                    },
                },
                WORKED,
            ),
            "degrees": Expected(
                {v: _deg(**{f"{v.rstrip(chr(39))}'": 1}) for v in ("1", "2", "3", "1'", "2'", "3'")}, WORKED
            ),
        },
    )


def label_seed() -> Seed:
    return make_seed(
        ["1", "2"],
        {"3": VertexKind.SEMIFROZEN, "4": VertexKind.HIGHLYFROZEN},
        [[0, 3], [-1, 0], [0, -2], [0, 1]],
    )


def _label_example() -> Fixture:
    return Fixture(
        "label-example",
        "seed with weighted arrows and one vertex of each frozen kind",
        label_seed(),
        expected={
            "symmetrizer": Expected({"1": 1, "2": 3}, HAND),
            "mutated_at_1": Expected([[0, -3], [1, 0], [0, -2], [0, 1]], HAND),
            "edge_labels": Expected({("1", "2"): "3,1", ("2", "3"): "2,2", ("4", "2"): "1,1"}, WORKED),
        },
    )


def _toric(name: str, fan: FanInput, nu: list[list[int]], description: str) -> Fixture:
    L, report = toric_lift(fan)
    return Fixture(
        name,
        description,
        L.base,
        L,
        fan=fan,
        expected={
            "nu": Expected(nu, WORKED),
            "polynomial_ring_rank": Expected(len(fan.rays), WORKED),
        },
    )


_STATIC: dict[str, Callable[[], Fixture]] = {
    "fano-a2": _fano,
    "diag-a1": _diag_a1,
    "diag-a3": _diag_a3,
    "label-example": _label_example,
    "toric-p1": lambda: _toric("toric-p1", FanInput(1, ((1,), (-1,)), (1,)), [[1]], "projective line"),
    "toric-p2": lambda: _toric(
        "toric-p2", FanInput(2, ((1, 0), (0, 1), (-1, -1)), (1, 2)), [[1, 1]], "projective plane"
    ),
}

_FAMILIES: dict[str, Callable[[int], Fixture]] = {
    "projective-chain": _projective_chain,
    "projective-trivial": _projective_trivial,
}


def fixture_names() -> list[str]:
    return sorted(_STATIC) + [f"{f}-<n>" for f in sorted(_FAMILIES)]


def load_fixture(name: str) -> Fixture:
    if name in _STATIC:
        return _STATIC[name]()
    m = re.fullmatch(r"([a-z-]+)-(\d+)", name)
    if m and m.group(1) in _FAMILIES:
        return _FAMILIES[m.group(1)](int(m.group(2)))
    raise UnknownFixture(f"no fixture named {name!r}; known: {', '.join(fixture_names())}")
