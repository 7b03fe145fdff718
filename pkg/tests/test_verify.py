"""Cross-checks between the facet walk and the mutation walk."""

import pytest

from clusterbrick.roots import CartanMatrix, cartan_of_type, w_catalan
from clusterbrick.coxeter import coxeter_words
from clusterbrick.cluster import cluster_key, initial_seed
from clusterbrick.subword import greedy_facet
from clusterbrick.verify import (Report, build_correspondence, check_names,
                                 check_typea_models, run_checks, type_label,
                                 variables_by_root)

A2 = cartan_of_type("A", 2)
A3 = cartan_of_type("A", 3)
B2 = cartan_of_type("B", 2)
G2 = cartan_of_type("G", 2)


def test_type_label():
    assert type_label(A2) == "A2"
    assert type_label(cartan_of_type("C", 3)) == "C3"
    assert type_label(cartan_of_type("F", 4)) == "F4"
    perm = CartanMatrix(((2, 0, -1), (0, 2, -1), (-1, -1, 2)))
    assert type_label(perm) == "custom3"


def test_check_names_gates_the_polygon_model():
    assert check_names(A2) == ("c-vectors", "g-vectors", "exchange",
                               "lemmas", "newton", "lattice", "minkowski",
                               "typea")
    assert check_names(B2) == check_names(A2)[:-1]


def test_all_checks_pass_on_small_types():
    for cartan, c in [(A2, (1, 2)), (A2, (2, 1)), (A3, (1, 3, 2)),
                      (B2, (1, 2)), (G2, (2, 1))]:
        for report in run_checks(cartan, c):
            assert report.passed, (report.name, report.counterexample)
            assert report.counterexample is None
            assert report.coxeter == c


def test_report_equality_ignores_elapsed():
    a = Report("newton", "A2", (1, 2), True, None, elapsed=0.5)
    b = Report("newton", "A2", (1, 2), True, None, elapsed=9.9)
    assert a == b
    assert a != Report("newton", "A2", (2, 1), True, None)


def test_run_checks_is_deterministic():
    first = run_checks(A2, (1, 2))
    second = run_checks(A2, (1, 2))
    assert first == second


def test_parallel_jobs_report_the_same():
    serial = run_checks(A3, (1, 3, 2), jobs=1)
    threaded = run_checks(A3, (1, 3, 2), jobs=4)
    assert serial == threaded


def test_run_checks_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_checks(A2, (1, 2), names=("no-such-check",))
    with pytest.raises(ValueError):
        run_checks(B2, (1, 2), names=("typea",))


def test_run_checks_subset():
    reports = run_checks(A2, (1, 2), names=("lattice", "c-vectors"))
    # results come back in the order they were asked for
    assert tuple(r.name for r in reports) == ("lattice", "c-vectors")
    assert all(r.passed for r in reports)


def test_correspondence_walk():
    for cartan, c in [(A2, (1, 2)), (B2, (2, 1)), (A3, (2, 1, 3))]:
        corr = build_correspondence(cartan, c)
        family = type_label(cartan)[0]
        assert len(corr.nodes) == w_catalan(family, cartan.n)
        start = corr.nodes[greedy_facet(corr.complex_)]
        assert start.seed == initial_seed(cartan, c)
        # all clusters distinct
        keys = {cluster_key(node.seed) for node in corr.nodes.values()}
        assert len(keys) == len(corr.nodes)
        # position-to-slot maps are bijections onto the seed slots
        for facet, node in corr.nodes.items():
            assert set(node.pos_to_slot) == set(facet)
            assert sorted(node.pos_to_slot.values()) == list(
                range(1, cartan.n + 1))


def test_variables_by_root_newton_golden():
    from clusterbrick.cluster import f_polynomial
    by_root = variables_by_root(A2, (1, 2))
    assert sorted(by_root) == [(0, 1), (1, 0), (1, 1)]
    F = f_polynomial(by_root[(1, 1)], 2)
    assert F.terms == {(0, 0): 1, (1, 0): 1, (1, 1): 1}


def test_variables_by_root_covers_positive_roots():
    from clusterbrick.roots import positive_roots
    for cartan, c in [(B2, (1, 2)), (A3, (1, 3, 2)), (G2, (1, 2))]:
        by_root = variables_by_root(cartan, c)
        assert set(by_root) == set(positive_roots(cartan))


def test_typea_model_check():
    for n in (1, 2, 3):
        for c in coxeter_words(cartan_of_type("A", n)):
            report = check_typea_models(n, c)
            assert report.passed, report.counterexample


def test_correspondence_is_cached():
    one = build_correspondence(A2, (1, 2))
    two = build_correspondence(A2, (1, 2))
    assert one is two
