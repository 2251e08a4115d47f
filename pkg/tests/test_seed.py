import random

import pytest
from randseeds import random_seed, random_sequence

from clusterlift import (
    RationalFunction,
    Seed,
    VertexKind,
    apply_sequence,
    exchange_monomials,
    express_in_seed,
    is_maximal_rank,
    make_seed,
    mutate_seed,
    parse_expression as P,
    validate_seed,
)
from clusterlift.cases.fixtures import label_seed
from clusterlift.errors import MalformedSeed, NotMutable, NotSkewSymmetrizable
from clusterlift.matrix import ExchangeMatrix
from clusterlift.seed import expand_from_seed


def a2():
    return make_seed(["1", "2"], {}, [[0, 1], [-1, 0]])


def test_default_cluster():
    s = a2()
    assert s.cluster == {"1": P("x1"), "2": P("x2")}
    assert s.provenance == ()


def test_validate_examples():
    assert validate_seed(a2()) == {"1": 1, "2": 1}
    assert validate_seed(label_seed()) == {"1": 1, "2": 3}
    with pytest.raises(NotSkewSymmetrizable):
        validate_seed(make_seed(["1", "2"], {}, [[0, 1], [1, 0]]))


def test_structural_errors():
    B = ExchangeMatrix(["1", "2"], ["1"], [[0], [1]])
    with pytest.raises(MalformedSeed):
        Seed({"1": VertexKind.UNFROZEN}, B)
    with pytest.raises(MalformedSeed):
        Seed({"1": VertexKind.UNFROZEN, "2": VertexKind.UNFROZEN}, B)
    with pytest.raises(MalformedSeed):
        Seed({"1": VertexKind.HIGHLYFROZEN, "2": VertexKind.HIGHLYFROZEN}, B)


def test_exchange_monomials():
    s = a2()
    assert exchange_monomials(s, "1") == (1, P("x2"))
    assert exchange_monomials(s, "2") == (P("x1"), 1)
    iso = make_seed(["1"], {}, [[0]])
    assert exchange_monomials(iso, "1") == (1, 1)


def test_mutate_a2():
    s = mutate_seed(a2(), "1")
    assert s.cluster["1"] == P("(1+x2)/x1")
    assert s.cluster["2"] == P("x2")
    assert s.provenance == ("1",)
    assert mutate_seed(s, "1") == a2()


def test_pentagon():
    s = apply_sequence(a2(), ["1", "2", "1", "2", "1"])
    assert set(s.cluster.values()) == {P("x1"), P("x2")}


def test_apply_sequence_examples():
    s = a2()
    assert apply_sequence(s, []) == s
    assert apply_sequence(s, ["2", "2"]) == s
    t = apply_sequence(s, ["1", "2"])
    assert t.cluster["1"] == P("(1+x2)/x1")
    assert t.cluster["2"] == P("(x1+x2+1)/(x1*x2)")
    # x2 x4 = x3 + 1
    assert P("x2") * t.cluster["2"] == t.cluster["1"] + 1


def test_not_mutable():
    s = label_seed()
    with pytest.raises(NotMutable):
        mutate_seed(s, "3")
    with pytest.raises(NotMutable) as info:
        apply_sequence(s, ["1", "2", "4"])
    assert info.value.step == 2


def test_frozen_kinds_preserved():
    s = apply_sequence(label_seed(), ["1", "2", "1"])
    assert s.kinds == label_seed().kinds


def test_express_in_seed_examples():
    s = mutate_seed(a2(), "1")
    # in the new seed the symbol x1 stands for the new variable at vertex 1
    assert express_in_seed(P("x1"), s) == P("(1+x2)/x1")
    assert express_in_seed(P("x2"), s) == P("x2")
    assert express_in_seed(P("(1+x2)/x1"), s) == P("x1")


def test_express_expand_inverse_random():
    rng = random.Random(11)
    for _ in range(40):
        s = random_seed(rng, max_unfrozen=3)
        t = apply_sequence(s, random_sequence(rng, s, 4))
        names = [s.names[v] for v in s.vertices]
        f = P(names[0]) * (P(names[-1]) + 1) / (P(names[0]) + 2)
        assert expand_from_seed(express_in_seed(f, t), t) == f
        for v in t.vertices:
            assert express_in_seed(t.cluster[v], t) == P(t.names[v])


def test_random_seed_invariants():
    rng = random.Random(5)
    for _ in range(60):
        s = random_seed(rng)
        d = validate_seed(s)
        full = is_maximal_rank(s.matrix)
        t = apply_sequence(s, random_sequence(rng, s, 3))
        assert validate_seed(t) == d
        assert is_maximal_rank(t.matrix) == full
        for k in t.mutable:
            assert mutate_seed(mutate_seed(t, k), k) == t


def test_degenerate_seed():
    s = make_seed([], {"1": "highlyfrozen"}, [[]])
    assert s.mutable == ()
    assert validate_seed(s) == {}


def test_root_cluster_in_other_symbols():
    # a root cluster given by monomials in other symbols gets a chart
    s = make_seed(["1"], {"2": "highlyfrozen"}, [[0], [1]], cluster={"1": P("a*b"), "2": P("b")})
    m = mutate_seed(s, "1")
    assert m.cluster["1"] == P("(b + 1)/(a*b)")
    assert express_in_seed(P("a"), m) == P("(x2 + 1)/(x1*x2)")


def test_rational_cluster_needs_no_chart_when_variables():
    s = make_seed(["1"], {}, [[0]], cluster={"1": RationalFunction.variable("y")})
    assert mutate_seed(s, "1").cluster["1"] == P("2/y")
