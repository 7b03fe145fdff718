"""Facets of the subword complex, root and weight functions, flips, bricks."""

import itertools

import pytest

from clusterbrick.errors import InvariantViolation
from clusterbrick.roots import cartan_of_type, positive_roots
from clusterbrick.coxeter import coxeter_words
from clusterbrick.subword import (antigreedy_facet, brick_vector,
                                  brute_force_facets, build_complex,
                                  coroot_function, enumerate_facets,
                                  enumerate_facets_with_tables, flip,
                                  greedy_facet, is_facet, root_function,
                                  root_table, update_after_flip,
                                  weight_function)

A2 = cartan_of_type("A", 2)
A3 = cartan_of_type("A", 3)
B2 = cartan_of_type("B", 2)


def test_word_and_position_roots_A2():
    cx = build_complex(A2, (1, 2))
    assert cx.word == (1, 2, 1, 2, 1)
    assert cx.m == 5
    assert cx.pos_root == ((-1, 0), (0, -1), (1, 0), (1, 1), (0, 1))


def test_facets_A2():
    cx = build_complex(A2, (1, 2))
    assert enumerate_facets(cx) == ((1, 2), (1, 5), (2, 3), (3, 4), (4, 5))
    assert greedy_facet(cx) == (1, 2)
    assert antigreedy_facet(cx) == (4, 5)


def test_is_facet():
    cx = build_complex(A2, (1, 2))
    assert is_facet(cx, (3, 4))
    assert not is_facet(cx, (2, 4))
    assert not is_facet(cx, (1, 3))
    assert not is_facet(cx, (3,))


def test_root_row_golden():
    cx = build_complex(A2, (1, 2))
    table = root_table(cx, (3, 4))
    assert table.roots == ((1, 0), (1, 1), (0, 1), (-1, -1), (0, 1))
    assert root_function(cx, (3, 4), 3) == (0, 1)
    assert root_function(cx, (3, 4), 4) == (-1, -1)


def test_brick_vectors_A2():
    cx = build_complex(A2, (1, 2))
    expected = {(1, 2): (1, 3), (1, 5): (3, -1), (2, 3): (-1, 4),
                (3, 4): (-2, 3), (4, 5): (-1, 1)}
    for facet, brick in expected.items():
        assert brick_vector(cx, facet) == brick


def test_flip_goldens_A2():
    cx = build_complex(A2, (1, 2))
    assert flip(cx, (1, 2), 1) == ((2, 3), 3)
    assert flip(cx, (1, 2), 2) == ((1, 5), 5)
    assert flip(cx, (3, 4), 4) == ((2, 3), 2)
    assert flip(cx, (4, 5), 4) == ((1, 5), 1)


def test_flip_is_involution():
    for cartan in (A2, B2, A3):
        for c in coxeter_words(cartan):
            cx = build_complex(cartan, c)
            for facet in enumerate_facets(cx):
                for i in facet:
                    other, j = flip(cx, facet, i)
                    back, k = flip(cx, other, j)
                    assert back == facet and k == i


def test_flip_requires_facet_position():
    cx = build_complex(A2, (1, 2))
    with pytest.raises(ValueError):
        flip(cx, (1, 2), 3)


def test_update_after_flip_matches_direct():
    for cartan, c in [(A2, (1, 2)), (B2, (1, 2)), (B2, (2, 1)),
                      (A3, (1, 3, 2))]:
        cx = build_complex(cartan, c)
        for facet in enumerate_facets(cx):
            table = root_table(cx, facet)
            for i in facet:
                other, j = flip(cx, facet, i, table)
                updated = update_after_flip(cx, facet, i, other, j, table)
                assert updated == root_table(cx, other)


def test_facets_A3_golden():
    cx = build_complex(A3, (1, 3, 2))
    assert cx.word == (1, 3, 2, 1, 3, 2, 1, 3, 2)
    assert cx.pos_root[3:] == ((1, 0, 0), (0, 0, 1), (1, 1, 1),
                               (0, 1, 1), (1, 1, 0), (0, 1, 0))
    assert enumerate_facets(cx) == (
        (1, 2, 3), (1, 2, 9), (1, 3, 5), (1, 5, 7), (1, 7, 9),
        (2, 3, 4), (2, 4, 8), (2, 8, 9), (3, 4, 5), (4, 5, 6),
        (4, 6, 8), (5, 6, 7), (6, 7, 8), (7, 8, 9))


def test_antigreedy_needs_a_sweep():
    # the last n positions are not always a facet: here the tail spells
    # a non-reduced double copy of c, and the sweep must skip earlier
    cx = build_complex(A3, (1, 2, 3))
    assert antigreedy_facet(cx) == (6, 8, 9)
    assert is_facet(cx, antigreedy_facet(cx))


def test_greedy_antigreedy_all_small_types():
    for cartan in (A2, B2, A3, cartan_of_type("G", 2)):
        for c in coxeter_words(cartan):
            cx = build_complex(cartan, c)
            facets = enumerate_facets(cx)
            assert greedy_facet(cx) == min(facets)
            assert antigreedy_facet(cx) == max(facets)


def test_brute_force_agrees_with_enumeration():
    for cartan in (A2, B2, cartan_of_type("G", 2), A3,
                   cartan_of_type("B", 3)):
        for c in coxeter_words(cartan):
            cx = build_complex(cartan, c)
            assert sorted(brute_force_facets(cx)) == sorted(
                enumerate_facets(cx))


def test_complement_roots_cover_positives():
    for cartan in (A2, B2, A3):
        for c in coxeter_words(cartan):
            cx = build_complex(cartan, c)
            pos = sorted(positive_roots(cartan))
            for facet in enumerate_facets(cx):
                table = root_table(cx, facet)
                outside = sorted(table.roots[k - 1]
                                 for k in range(1, cx.m + 1)
                                 if k not in facet)
                assert outside == pos


def test_roots_at_facet_positions_form_sign_coherent_columns():
    # each facet position carries a root whose entries share a sign
    for c in coxeter_words(A3):
        cx = build_complex(A3, c)
        for facet, table in enumerate_facets_with_tables(cx).items():
            for i in facet:
                entries = table.roots[i - 1]
                assert all(x >= 0 for x in entries) or all(
                    x <= 0 for x in entries)


def test_pointwise_functions_match_table():
    cx = build_complex(B2, (1, 2))
    for facet in enumerate_facets(cx):
        table = root_table(cx, facet)
        for k in range(1, cx.m + 1):
            assert weight_function(cx, facet, k) == table.weights[k - 1]
            assert root_function(cx, facet, k) == table.roots[k - 1]


def test_coroot_function_pairs_to_two():
    from clusterbrick.roots import pair
    for cartan, c in [(A2, (1, 2)), (B2, (1, 2)), (B2, (2, 1))]:
        cx = build_complex(cartan, c)
        for facet in enumerate_facets(cx):
            for k in range(1, cx.m + 1):
                beta = root_function(cx, facet, k)
                assert pair(cartan, beta, coroot_function(cx, facet, k)) == 2


def test_facet_counts_match_catalan_numbers():
    from clusterbrick.roots import w_catalan
    for family, rank in [("A", 2), ("A", 3), ("B", 2), ("B", 3),
                         ("G", 2), ("C", 3)]:
        cartan = cartan_of_type(family, rank)
        for c in coxeter_words(cartan):
            cx = build_complex(cartan, c)
            assert len(enumerate_facets(cx)) == w_catalan(family, rank)
