"""Smoke tests for the python bindings."""

import pytest

import rectsyz


def test_partition_calculators():
    assert rectsyz.conjugate([5, 2, 1]) == [3, 2, 1, 1, 1]
    assert rectsyz.contains([3, 2], [2, 2])
    assert not rectsyz.contains([3, 2], [1, 1, 1])
    assert rectsyz.enumerate_in_rectangle(1, 1) == [[], [1]]
    assert rectsyz.count_in_rectangle(2, 2, 2) == 2
    assert rectsyz.gauss_polynomial(2, 2) == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert rectsyz.lambda_rect(4, 5, [4, 2, 1], [3, 2]) == [9, 7, 6, 5, 3, 2]


def test_rep_ring():
    assert rectsyz.schur_dim([3, 3], 2) == 1
    assert rectsyz.schur_dim([1, 1, 1], 2) == 0
    assert rectsyz.kostka([2], [1, 1]) == 1
    labels = rectsyz.cauchy_degree(2, 2, 2)
    assert labels == [([2], [2]), ([1, 1], [1, 1])]


def test_formula_engine():
    table = rectsyz.betti_table_formula(1, 2, 2, 2)
    assert table == {(0, 2): 9, (1, 3): 16, (2, 4): 9, (3, 6): 1}
    terms = rectsyz.betti_polynomial(1, 2, 2, 2)
    assert {(t["w"], t["z"]) for t in terms} == {(0, 2), (1, 3), (1, 3), (2, 4), (3, 6)}
    assert rectsyz.proj_dim_and_reg(1, 2, 2, 2) == (3, 3)
    assert rectsyz.multiplicity_poly(2, 2, 1) == {3: 1, 5: 1}


def test_oracle_engine():
    assert rectsyz.hilbert_function(1, 2, 2, 2, 3) == 20
    assert rectsyz.generator_space_dim(1, 2, 2, 2) == 9
    assert rectsyz.koszul_betti(1, 2, 2, 2, 1, 3) == 16
    table = rectsyz.betti_table_oracle(1, 2, 2, 2, 4, 6)
    assert table == {(0, 2): 9, (1, 3): 16, (2, 4): 9, (3, 6): 1}
    assert rectsyz.weight_refined_betti(1, 2, 2, 2, 0, 2, [2, 0], [2, 0]) == 1
    assert rectsyz.euler_check(1, 2, 2, 2, 6)


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        rectsyz.betti_polynomial(3, 1, 2, 2)
    with pytest.raises(ValueError):
        rectsyz.lambda_rect(2, 2, [1, 1, 1], [])
