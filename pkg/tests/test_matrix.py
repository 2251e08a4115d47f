import random

import pytest
import sympy

from clusterlift import ExchangeMatrix, IntMatrix, is_maximal_rank, mutate_matrix
from clusterlift.errors import MalformedSeed, NotMutable, NotSkewSymmetrizable
from clusterlift.matrix import determinant, inverse_unimodular, rank, skew_symmetrizer

LABEL = ExchangeMatrix(["1", "2", "3", "4"], ["1", "2"], [[0, 3], [-1, 0], [0, -2], [0, 1]])
A2 = ExchangeMatrix(["1", "2"], ["1", "2"], [[0, 1], [-1, 0]])


def test_labels_and_access():
    assert LABEL["1", "2"] == 3
    assert LABEL.col("2") == {"1": 3, "2": 0, "3": -2, "4": 1}
    assert LABEL.principal_part().entries == ((0, 3), (-1, 0))
    with pytest.raises(KeyError):
        LABEL["4", "3"]


def test_exchange_matrix_columns_must_be_rows():
    with pytest.raises(MalformedSeed):
        ExchangeMatrix(["1"], ["1", "2"], [[0, 1]])


def test_mutate_a2():
    assert mutate_matrix(A2, "1").entries == ((0, -1), (1, 0))


def test_mutate_label_example():
    assert mutate_matrix(LABEL, "1").entries == ((0, -3), (1, 0), (0, -2), (0, 1))


def test_mutate_correction_term():
    # 1 -> 2 -> 3: mutating at 2 creates the shortcut 1 -> 3
    B = ExchangeMatrix(["1", "2", "3"], ["1", "2", "3"], [[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    assert mutate_matrix(B, "2").entries == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


def test_mutate_involution_random():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 4)
        rows = [str(i) for i in range(n + 2)]
        entries = [[0] * n for _ in rows]
        for i in range(n):
            for j in range(i + 1, n):
                entries[i][j] = rng.randint(-2, 2)
                entries[j][i] = -entries[i][j]
        for r in range(n, n + 2):
            entries[r] = [rng.randint(-3, 3) for _ in range(n)]
        B = ExchangeMatrix(rows, rows[:n], entries)
        k = rng.choice(rows[:n])
        assert mutate_matrix(mutate_matrix(B, k), k) == B


def test_mutate_frozen_row():
    with pytest.raises(NotMutable):
        mutate_matrix(LABEL, "3")


def test_symmetrizers():
    assert skew_symmetrizer(A2) == {"1": 1, "2": 1}
    assert skew_symmetrizer(LABEL) == {"1": 1, "2": 3}
    with pytest.raises(NotSkewSymmetrizable):
        skew_symmetrizer(ExchangeMatrix(["1", "2"], ["1", "2"], [[0, 1], [1, 0]]))


def test_symmetrizer_cycle_inconsistency():
    # ratios around the 3-cycle multiply to 2 instead of 1
    B = ExchangeMatrix(["1", "2", "3"], ["1", "2", "3"], [[0, 1, -1], [-1, 0, 2], [1, -1, 0]])
    with pytest.raises(NotSkewSymmetrizable):
        skew_symmetrizer(B)


def test_symmetrizer_preserved_by_mutation():
    B = ExchangeMatrix(["1", "2", "3"], ["1", "2", "3"], [[0, 2, 0], [-1, 0, 1], [0, -1, 0]])
    d = skew_symmetrizer(B)
    for k in B.cols:
        assert skew_symmetrizer(mutate_matrix(B, k)) == d


def test_maximal_rank_examples():
    assert is_maximal_rank(A2)
    assert is_maximal_rank(LABEL)
    assert not is_maximal_rank(ExchangeMatrix(["1", "2"], ["1"], [[0], [0]]))


def test_rank_against_sympy():
    rng = random.Random(3)
    for _ in range(100):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)]
        assert rank(m) == sympy.Matrix(m).rank()
        if r == c:
            assert determinant(m) == sympy.Matrix(m).det()


def test_unimodular_inverse():
    m = [[1, 1], [0, 1]]
    assert inverse_unimodular(m) == [[1, -1], [0, 1]]
    with pytest.raises(ValueError):
        inverse_unimodular([[2, 0], [0, 1]])


def test_matmul_and_stack():
    A = IntMatrix(["a"], ["1", "2"], [[1, 2]])
    B = IntMatrix(["1", "2"], ["x"], [[3], [4]])
    assert (A @ B).entries == ((11,),)
    assert A.stack(IntMatrix(["b"], ["1", "2"], [[0, 1]])).rows == ("a", "b")
