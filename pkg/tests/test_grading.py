import random

import pytest
from randseeds import random_lifted, random_sequence

from clusterlift import (
    DegreeConfiguration,
    DegreeVector,
    NonHomogeneous,
    degree_of,
    is_degree_configuration,
    load_fixture,
    make_seed,
    mutate_degree_configuration,
    mutate_seed,
    parse_expression as P,
)
from clusterlift.errors import InvalidConfiguration, KeyMismatch, NotMutable
from clusterlift.grading import mutate_graded


def e(label, n=1):
    return DegreeVector({label: n})


def diag_a1():
    return load_fixture("diag-a1").lifted


def test_degree_vector_arithmetic():
    v = e("a") + e("b", 2) - e("a")
    assert v == {"b": 2}
    assert v.coords == {"b": 2}
    assert (v - v).is_zero()
    assert v.scale(-1) == -v
    assert str(e("E2") + e("E3") - e("E5")) == "e[E2] + e[E3] - e[E5]"


def test_zero_configuration_valid_and_stable():
    s = load_fixture("label-example").seed
    z = DegreeConfiguration.zero(s)
    assert is_degree_configuration(s, z)
    assert mutate_degree_configuration(s, z, "1") == z


def test_diag_a1_configuration():
    L = diag_a1()
    sigma = DegreeConfiguration({"1'": e("1'"), "1": e("1'"), "2": DegreeVector()})
    assert is_degree_configuration(L.seed, sigma)
    bad = DegreeConfiguration({"1'": e("1'"), "1": e("1'"), "2": e("1'")})
    assert not is_degree_configuration(L.seed, bad)
    with pytest.raises(InvalidConfiguration):
        mutate_degree_configuration(L.seed, bad, "1")


def test_key_mismatch():
    L = diag_a1()
    with pytest.raises(KeyMismatch):
        is_degree_configuration(L.seed, DegreeConfiguration({"1": e("1'")}))


def test_mutation_examples():
    L = diag_a1()
    mu = mutate_degree_configuration(L.seed, L.grading, "1")
    assert mu["1"] == e("1'", -1)
    back = mutate_degree_configuration(mutate_seed(L.seed, "1"), mu, "1")
    assert back == L.grading
    with pytest.raises(NotMutable):
        mutate_degree_configuration(L.seed, L.grading, "2")


def test_degree_of_examples():
    fano = load_fixture("fano-a2").lifted
    assert degree_of(fano.seed.cluster["1"], fano.seed, fano.grading) == e("E2") + e("E3") - e("E5")
    assert degree_of(P("1"), fano.seed, fano.grading) == DegreeVector()
    L = diag_a1()
    assert degree_of(P("X1'*x1 + X1'"), L.seed, L.grading) == e("1'")


def test_non_homogeneous():
    L = diag_a1()
    r = degree_of(P("X1'*x1 + 1"), L.seed, L.grading)
    assert isinstance(r, NonHomogeneous)
    assert not r
    assert set(r.numerator_degrees) == {e("1'"), DegreeVector()}


def test_mutation_preserves_condition_and_homogeneity():
    rng = random.Random(21)
    for _ in range(30):
        L = random_lifted(rng, max_unfrozen=3)
        s, sigma = L.seed, L.grading
        for k in random_sequence(rng, s, 4):
            s, sigma = mutate_graded(s, sigma, [k])
            assert is_degree_configuration(s, sigma)
            # the new variable is homogeneous in the root grading, of the iterated degree
            assert degree_of(s.cluster[k], L.seed, L.grading) == sigma[k]


def test_a2_has_no_nonzero_grading_on_mutable_vertices():
    s = make_seed(["1", "2"], {}, [[0, 1], [-1, 0]])
    assert not is_degree_configuration(s, DegreeConfiguration({"1": e("a"), "2": DegreeVector()}))
