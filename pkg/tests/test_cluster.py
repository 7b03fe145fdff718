"""Seeds with principal coefficients, mutation, Laurent expansions."""

import pytest

from clusterbrick.errors import InexactDivision, InvariantViolation
from clusterbrick.roots import cartan_of_type, positive_roots
from clusterbrick.coxeter import coxeter_words
from clusterbrick.cluster import (FPolynomial, MPoly, all_cluster_variables,
                                  c_vector, c_vectors, cluster_key, d_vector,
                                  enumerate_seeds, exact_div, f_polynomial,
                                  format_fpoly, format_laurent, g_from_F,
                                  g_vector, initial_matrix, initial_seed,
                                  mutate, principal_part, tropical_add,
                                  variable_from_g_and_F, variable_names)

A2 = cartan_of_type("A", 2)
A3 = cartan_of_type("A", 3)
B2 = cartan_of_type("B", 2)


def mono(nvars, exps, coeff=1):
    return MPoly.monomial(nvars, exps, coeff)


def test_mpoly_arithmetic():
    x = mono(2, (1, 0))
    y = mono(2, (0, 1))
    one = MPoly.constant(2, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + one) ** 2 == x * x + mono(2, (1, 0), 2) + one
    assert (x - x).is_zero()
    assert hash(x * y) == hash(y * x)
    # Laurent exponents are allowed
    inv = mono(2, (-1, 0))
    assert x * inv == one


def test_exact_division():
    x = mono(2, (1, 0))
    y = mono(2, (0, 1))
    assert exact_div(x * x - y * y, x - y) == x + y
    assert exact_div(x * y, y) == x
    with pytest.raises(InexactDivision):
        exact_div(x + y, x - y)
    with pytest.raises(InexactDivision):
        exact_div(MPoly.constant(2, 3), MPoly.constant(2, 2))


def test_exact_division_with_laurent_denominator():
    x = mono(2, (1, 0))
    xinv = mono(2, (-1, 0))
    y = mono(2, (0, 1))
    assert exact_div(x + y, xinv) == x * (x + y)


def test_tropical_add():
    assert tropical_add((1, 0), (0, 1)) == (0, 0)
    assert tropical_add((2, 3), (1, 5)) == (1, 3)
    assert tropical_add((0, 0), (0, 0)) == (0, 0)


def test_initial_matrix_goldens():
    assert initial_matrix(A2, (1, 2)) == ((0, 1), (-1, 0), (1, 0), (0, 1))
    assert initial_matrix(A2, (2, 1)) == ((0, -1), (1, 0), (1, 0), (0, 1))
    assert initial_matrix(B2, (1, 2)) == ((0, 1), (-2, 0), (1, 0), (0, 1))


def test_initial_seed_shape():
    seed = initial_seed(A2, (1, 2))
    assert seed.frozen == ((1, 0), (0, 1))
    assert seed.variables == (mono(4, (1, 0, 0, 0)), mono(4, (0, 1, 0, 0)))
    assert principal_part(seed.matrix) == ((0, 1), (-1, 0))


def test_first_mutation_golden():
    seed = mutate(initial_seed(A2, (1, 2)), 1)
    assert seed.matrix == ((0, -1), (1, 0), (-1, 1), (0, 1))
    assert seed.frozen == ((-1, 0), (1, 1))
    # new first variable is (x2 + y1) / x1
    assert seed.variables[0] == MPoly(4, {(-1, 1, 0, 0): 1, (-1, 0, 1, 0): 1})


def test_pentagon_walk_goldens():
    seed = initial_seed(A2, (1, 2))
    walk = [seed]
    for i in (1, 2, 1, 2, 1):
        walk.append(mutate(walk[-1], i))
    assert [(s.matrix, s.frozen) for s in walk] == [
        (((0, 1), (-1, 0), (1, 0), (0, 1)), ((1, 0), (0, 1))),
        (((0, -1), (1, 0), (-1, 1), (0, 1)), ((-1, 0), (1, 1))),
        (((0, 1), (-1, 0), (0, -1), (1, -1)), ((0, 1), (-1, -1))),
        (((0, -1), (1, 0), (0, -1), (-1, 0)), ((0, -1), (-1, 0))),
        (((0, 1), (-1, 0), (0, 1), (-1, 0)), ((0, -1), (1, 0))),
        (((0, -1), (1, 0), (0, 1), (1, 0)), ((0, 1), (1, 0))),
    ]
    # five alternating mutations return the initial cluster with its
    # two slots exchanged, so the pentagon closes as an unordered walk
    assert cluster_key(walk[5]) == cluster_key(walk[0])
    assert walk[5].variables == walk[0].variables[::-1]


def test_pentagon_coefficient_pairs():
    seeds = enumerate_seeds(A2, (1, 2))
    assert len(seeds) == 5
    got = {frozenset(s.frozen) for s in seeds}
    assert got == {
        frozenset({(1, 0), (0, 1)}),
        frozenset({(-1, 0), (1, 1)}),
        frozenset({(1, 0), (0, -1)}),
        frozenset({(-1, 0), (0, -1)}),
        frozenset({(-1, -1), (0, 1)}),
    }


def test_mutation_is_involution():
    for cartan, c in [(A2, (1, 2)), (B2, (2, 1)), (A3, (1, 3, 2))]:
        for seed in enumerate_seeds(cartan, c):
            for i in range(1, cartan.n + 1):
                assert mutate(mutate(seed, i), i) == seed


def test_frozen_tracks_coefficient_columns():
    for cartan, c in [(A2, (1, 2)), (B2, (1, 2)), (A3, (2, 1, 3))]:
        for seed in enumerate_seeds(cartan, c):
            for i in range(1, cartan.n + 1):
                assert seed.frozen[i - 1] == c_vector(seed, i)
            assert c_vectors(seed) == seed.frozen


def test_variable_count_and_laurent_positivity():
    variables = all_cluster_variables(A2, (1, 2))
    assert len(variables) == 5
    for v in variables:
        assert all(coeff > 0 for coeff in v.terms.values())
    assert len(all_cluster_variables(A3, (1, 3, 2))) == 9
    assert len(all_cluster_variables(B2, (1, 2))) == 6


def test_exchange_table_golden():
    # columns: d-vector, g-vector, F-polynomial terms
    expected = {
        ((-1, 0), (1, 0)): {(0, 0): 1},
        ((0, -1), (0, 1)): {(0, 0): 1},
        ((1, 0), (-1, 1)): {(0, 0): 1, (1, 0): 1},
        ((1, 1), (-1, 0)): {(0, 0): 1, (1, 0): 1, (1, 1): 1},
        ((0, 1), (0, -1)): {(0, 0): 1, (0, 1): 1},
    }
    got = {}
    for v in all_cluster_variables(A2, (1, 2)):
        got[(d_vector(v, 2), g_vector(v, 2))] = f_polynomial(v, 2).terms
    assert got == expected


def test_five_variables_include_the_double_denominator():
    # (x1 y1 y2 + x2 + y1) / (x1 x2), written term by term
    deep = MPoly(4, {(0, -1, 1, 1): 1, (-1, 0, 0, 0): 1, (-1, -1, 1, 0): 1})
    assert deep in all_cluster_variables(A2, (1, 2))


def test_d_vectors_cover_almost_positive_roots():
    for cartan, c in [(A2, (1, 2)), (A2, (2, 1)), (B2, (1, 2)),
                      (A3, (1, 3, 2)), (cartan_of_type("G", 2), (2, 1))]:
        n = cartan.n
        negs = {tuple(-1 if t == s else 0 for t in range(n))
                for s in range(n)}
        expected = negs | set(positive_roots(cartan))
        got = {d_vector(v, n) for v in all_cluster_variables(cartan, c)}
        assert got == expected


def test_variable_from_g_and_F_round_trip():
    for cartan, c in [(A2, (1, 2)), (B2, (2, 1)), (A3, (1, 3, 2))]:
        n = cartan.n
        for v in all_cluster_variables(cartan, c):
            g = g_vector(v, n)
            F = f_polynomial(v, n)
            assert variable_from_g_and_F(cartan, c, g, F) == v
            assert g_from_F(cartan, c, F, d_vector(v, n)) == g


def test_f_polynomial_shape_validation():
    with pytest.raises(InvariantViolation):
        FPolynomial(2, {(0, 0): 2})
    with pytest.raises(InvariantViolation):
        FPolynomial(2, {(1, 0): 1})
    with pytest.raises(InvariantViolation):
        FPolynomial(2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
    with pytest.raises(InvariantViolation):
        FPolynomial(2, {(0, 0): 1, (1, 0): -1, (1, 1): 1})
    ok = FPolynomial(2, {(0, 0): 1, (1, 0): 1, (1, 1): 1})
    assert ok.top_exponent() == (1, 1)
    assert ok.support() == ((0, 0), (1, 0), (1, 1))


def test_cluster_key_identifies_unordered_clusters():
    seed = initial_seed(A2, (1, 2))
    one_step = mutate(seed, 1)
    assert cluster_key(seed) != cluster_key(one_step)
    assert cluster_key(mutate(one_step, 1)) == cluster_key(seed)
    seeds = enumerate_seeds(A2, (1, 2))
    assert len({cluster_key(s) for s in seeds}) == len(seeds)


def test_seed_counts_match_catalan():
    from clusterbrick.roots import w_catalan
    for family, rank in [("A", 2), ("A", 3), ("B", 2), ("G", 2)]:
        cartan = cartan_of_type(family, rank)
        for c in coxeter_words(cartan):
            assert len(enumerate_seeds(cartan, c)) == w_catalan(family, rank)


def test_formatting():
    assert variable_names(2) == ("x1", "x2", "y1", "y2")
    F = FPolynomial(2, {(0, 0): 1, (1, 0): 1, (1, 1): 1})
    assert format_fpoly(F) == "y1*y2 + y1 + 1"
    v = MPoly(4, {(-1, 1, 0, 0): 1, (-1, 0, 1, 0): 1})
    assert format_laurent(v, 2) == "(x2 + y1)/x1"
