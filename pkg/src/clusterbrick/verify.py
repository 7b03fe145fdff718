"""Cross-checks that run the facet model and the mutation model in lockstep.

Every check returns a Report rather than raising: a failed mathematical
statement is data (with a counterexample payload), not a crash.  Structural
problems that would make the comparison itself meaningless still raise
InvariantViolation.
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .cluster import (FPolynomial, MPoly, Seed, c_vector, cluster_key,
                      d_vector, f_polynomial, g_vector, initial_seed, mutate,
                      principal_part)
from .coxeter import Word, coxeter_words, det_int
from .errors import InvariantViolation, NotInRootLattice
from .polytope import (LatticePolytope, convex_hull_vertices,
                       equal_up_to_translation, minkowski_sum)
from .roots import (CartanMatrix, Vec, cartan_of_type, pair, reflect_weight,
                    root_to_weight_coords, w_catalan,
                    weight_diff_to_root_coords)
from .subword import (ClusterComplex, Facet, RootTable, antigreedy_facet,
                      brick_vector, build_complex, flip, greedy_facet,
                      root_table, update_after_flip)
from .typea import f_poly_via_prefixes, f_poly_via_tpaths, triangulation_of_coxeter

_FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


def type_label(cartan: CartanMatrix) -> str:
    """Family-plus-rank label such as "B3", or "custom3" when unrecognized."""
    for family in _FAMILIES:
        try:
            if cartan_of_type(family, cartan.n) == cartan:
                return f"{family}{cartan.n}"
        except Exception:
            continue
    return f"custom{cartan.n}"


def _family_rank(cartan: CartanMatrix) -> tuple[str, int] | None:
    label = type_label(cartan)
    if label.startswith("custom"):
        return None
    return label[0], cartan.n


@dataclass(frozen=True)
class Report:
    """Outcome of one check: deterministic except for the wall-clock field."""

    name: str
    label: str
    coxeter: Word
    passed: bool
    counterexample: dict | None
    elapsed: float = field(compare=False, default=0.0)


@dataclass(frozen=True)
class Node:
    """One vertex of the lockstep walk: a facet with its table, the matching
    seed, and the map from facet positions to seed slots."""

    facet: Facet
    table: RootTable
    seed: Seed
    pos_to_slot: dict


@dataclass(frozen=True)
class Correspondence:
    complex_: ClusterComplex
    nodes: dict


def _assert_position_map(complex_: ClusterComplex, node: Node) -> None:
    n = complex_.n
    for i in node.facet:
        slot = node.pos_to_slot[i]
        dv = d_vector(node.seed.variables[slot - 1], n)
        if dv != complex_.pos_root[i - 1]:
            raise InvariantViolation(
                f"facet {node.facet}: variable at position {i} has d-vector "
                f"{dv}, expected {complex_.pos_root[i - 1]}")


_CORRESPONDENCE_SPOT = 20


@lru_cache(maxsize=None)
def build_correspondence(cartan: CartanMatrix, c: Word) -> Correspondence:
    """Breadth-first walk flipping facets and mutating seeds in lockstep.

    Flipping position i of a facet corresponds to mutating the seed at the
    slot holding the variable of position i; the map position -> slot is
    carried along and re-verified at every vertex through the bijection
    between d-vectors and the almost positive roots attached to positions.
    """
    complex_ = build_complex(cartan, c)
    n = complex_.n
    start_facet = greedy_facet(complex_)
    start = Node(start_facet, root_table(complex_, start_facet),
                 initial_seed(cartan, c), {k: c[k - 1] for k in range(1, n + 1)})
    _assert_position_map(complex_, start)
    nodes = {start_facet: start}
    keys = {start_facet: cluster_key(start.seed)}
    queue = deque([start_facet])
    created = 1
    while queue:
        facet = queue.popleft()
        node = nodes[facet]
        for i in facet:
            new_facet, j = flip(complex_, facet, i, node.table)
            new_seed = mutate(node.seed, node.pos_to_slot[i])
            if new_facet in nodes:
                if cluster_key(new_seed) != keys[new_facet]:
                    raise InvariantViolation(
                        f"walk desynchronized at facet {new_facet}: two paths "
                        "give different clusters")
                continue
            new_table = update_after_flip(complex_, facet, i, new_facet, j,
                                          node.table)
            created += 1
            if created % _CORRESPONDENCE_SPOT == 0 and \
                    new_table != root_table(complex_, new_facet):
                raise InvariantViolation("incremental table drifted")
            new_map = {k: s for k, s in node.pos_to_slot.items() if k != i}
            new_map[j] = node.pos_to_slot[i]
            new_node = Node(new_facet, new_table, new_seed, new_map)
            _assert_position_map(complex_, new_node)
            nodes[new_facet] = new_node
            keys[new_facet] = cluster_key(new_seed)
            queue.append(new_facet)
    if len(set(keys.values())) != len(nodes):
        raise InvariantViolation("two facets share a cluster")
    fam = _family_rank(cartan)
    if fam is not None and len(nodes) != w_catalan(*fam):
        raise InvariantViolation(
            f"{len(nodes)} facets, expected {w_catalan(*fam)}")
    return Correspondence(complex_, nodes)


def _sorted_nodes(corr: Correspondence) -> list:
    return [corr.nodes[f] for f in sorted(corr.nodes)]


@lru_cache(maxsize=None)
def variables_by_root(cartan: CartanMatrix, c: Word) -> dict:
    """Map each positive root to its cluster variable via the position whose
    almost positive root it is, checking that all facets agree."""
    corr = build_correspondence(cartan, c)
    complex_ = corr.complex_
    n = complex_.n
    out: dict[Vec, MPoly] = {}
    for node in _sorted_nodes(corr):
        for i in node.facet:
            if i <= n:
                continue
            beta = complex_.pos_root[i - 1]
            var = node.seed.variables[node.pos_to_slot[i] - 1]
            if beta in out:
                if out[beta] != var:
                    raise InvariantViolation(
                        f"two different variables claim root {beta}")
            else:
                out[beta] = var
    if len(out) != complex_.positive_count:
        raise InvariantViolation(
            f"{len(out)} roots realized, expected {complex_.positive_count}")
    return out


def _report(name: str, cartan: CartanMatrix, c: Word, started: float,
            counterexample: dict | None) -> Report:
    return Report(name, type_label(cartan), tuple(c), counterexample is None,
                  counterexample, time.monotonic() - started)


def check_c_vectors(cartan: CartanMatrix, c: Word) -> Report:
    """c-vectors equal the root configuration; they are sign-coherent and
    form a lattice basis (determinant of absolute value one) at every facet."""
    started = time.monotonic()
    corr = build_correspondence(cartan, c)
    for node in _sorted_nodes(corr):
        rows = []
        for i in node.facet:
            expected = node.table.roots[i - 1]
            actual = c_vector(node.seed, node.pos_to_slot[i])
            rows.append(expected)
            if actual != expected:
                return _report("c-vectors", cartan, c, started, {
                    "facet": node.facet, "position": i,
                    "expected": expected, "actual": actual})
            if not (all(x >= 0 for x in actual) or all(x <= 0 for x in actual)):
                return _report("c-vectors", cartan, c, started, {
                    "facet": node.facet, "position": i,
                    "expected": "sign-coherent vector", "actual": actual})
        if abs(det_int(tuple(rows))) != 1:
            return _report("c-vectors", cartan, c, started, {
                "facet": node.facet,
                "expected": "root configuration with determinant +-1",
                "actual": rows})
    return _report("c-vectors", cartan, c, started, None)


def check_g_vectors(cartan: CartanMatrix, c: Word) -> Report:
    """g-vectors equal the weight configuration, and the weight and coroot
    configurations pair to the identity matrix (the transpose-inverse
    relation between the g- and c-matrices)."""
    started = time.monotonic()
    corr = build_correspondence(cartan, c)
    n = corr.complex_.n
    for node in _sorted_nodes(corr):
        positions = list(node.facet)
        for i in positions:
            expected = node.table.weights[i - 1]
            actual = g_vector(node.seed.variables[node.pos_to_slot[i] - 1], n)
            if actual != expected:
                return _report("g-vectors", cartan, c, started, {
                    "facet": node.facet, "position": i,
                    "expected": expected, "actual": actual})
        for a, i in enumerate(positions):
            for b, j in enumerate(positions):
                dot = sum(x * y for x, y in zip(node.table.weights[i - 1],
                                                node.table.coroots[j - 1]))
                if dot != (1 if a == b else 0):
                    return _report("g-vectors", cartan, c, started, {
                        "facet": node.facet, "position": (i, j),
                        "expected": 1 if a == b else 0, "actual": dot})
    return _report("g-vectors", cartan, c, started, None)


def check_exchange_matrix(cartan: CartanMatrix, c: Word) -> Report:
    """The principal part of every exchange matrix is recovered from the
    root and coroot configurations: entry (i,j) is the pairing of the root
    at j against the coroot at i, negated when i < j."""
    started = time.monotonic()
    corr = build_correspondence(cartan, c)
    n = corr.complex_.n
    for node in _sorted_nodes(corr):
        bpr = principal_part(node.seed.matrix)
        for i in node.facet:
            for j in node.facet:
                s, t = node.pos_to_slot[i], node.pos_to_slot[j]
                if i == j:
                    expected = 0
                else:
                    value = pair(cartan, node.table.roots[j - 1],
                                 node.table.coroots[i - 1])
                    expected = -value if i < j else value
                if bpr[s - 1][t - 1] != expected:
                    return _report("exchange", cartan, c, started, {
                        "facet": node.facet, "position": (i, j),
                        "expected": expected, "actual": bpr[s - 1][t - 1]})
    return _report("exchange", cartan, c, started, None)


def check_lemmas(cartan: CartanMatrix, c: Word) -> Report:
    """Weight rigidity and monotonicity along the flip graph.

    Shared positions of adjacent facets carry equal weights, so each column
    takes a single value on the facets containing it; along every increasing
    flip the whole weight column moves down by an element of the positive
    root cone; and the greedy-minus-antigreedy weight difference of a column
    beyond the first n is exactly its positive root.
    """
    started = time.monotonic()
    corr = build_correspondence(cartan, c)
    complex_ = corr.complex_
    n, m = complex_.n, complex_.m
    common: dict[int, Vec] = {}
    for node in _sorted_nodes(corr):
        for i in node.facet:
            w = node.table.weights[i - 1]
            if i in common:
                if common[i] != w:
                    return _report("lemmas", cartan, c, started, {
                        "lemma": "column constant on facets containing it",
                        "facet": node.facet, "position": i,
                        "expected": common[i], "actual": w})
            else:
                common[i] = w
    for node in _sorted_nodes(corr):
        for i in node.facet:
            new_facet, j = flip(complex_, node.facet, i, node.table)
            other = corr.nodes[new_facet]
            for k in node.facet:
                if k == i:
                    continue
                if node.table.weights[k - 1] != other.table.weights[k - 1]:
                    return _report("lemmas", cartan, c, started, {
                        "lemma": "rigidity on shared positions",
                        "facet": node.facet, "flip": (i, j), "position": k,
                        "expected": node.table.weights[k - 1],
                        "actual": other.table.weights[k - 1]})
            if i < j:
                for k in range(1, m + 1):
                    try:
                        diff = weight_diff_to_root_coords(
                            cartan, node.table.weights[k - 1],
                            other.table.weights[k - 1])
                    except NotInRootLattice:
                        diff = None
                    if diff is None or any(x < 0 for x in diff):
                        return _report("lemmas", cartan, c, started, {
                            "lemma": "increasing flips shift weights down",
                            "facet": node.facet, "flip": (i, j),
                            "position": k, "difference": diff})
    g_table = corr.nodes[greedy_facet(complex_)].table
    ag_table = corr.nodes[antigreedy_facet(complex_)].table
    for k in range(n + 1, m + 1):
        expected = root_to_weight_coords(cartan, complex_.pos_root[k - 1])
        actual = tuple(a - b for a, b in zip(g_table.weights[k - 1],
                                             ag_table.weights[k - 1]))
        if actual != expected:
            return _report("lemmas", cartan, c, started, {
                "lemma": "greedy minus antigreedy equals the column root",
                "position": k, "expected": expected, "actual": actual})
    return _report("lemmas", cartan, c, started, None)


def _newton_polytope(F: FPolynomial) -> LatticePolytope:
    return LatticePolytope(convex_hull_vertices(F.support()))


def _weight_column_hull(corr: Correspondence, k: int) -> LatticePolytope:
    cartan = corr.complex_.cartan
    ag = corr.nodes[antigreedy_facet(corr.complex_)].table
    points = set()
    for node in _sorted_nodes(corr):
        points.add(weight_diff_to_root_coords(
            cartan, node.table.weights[k - 1], ag.weights[k - 1]))
    return LatticePolytope(convex_hull_vertices(points))


def check_newton_conjecture(cartan: CartanMatrix, c: Word) -> Report:
    """Newton polytope of each F-polynomial equals the hull of its weight
    column shifted to start at the antigreedy facet, in root coordinates."""
    started = time.monotonic()
    corr = build_correspondence(cartan, c)
    complex_ = corr.complex_
    n, m = complex_.n, complex_.m
    by_root = variables_by_root(cartan, c)
    for k in range(n + 1, m + 1):
        beta = complex_.pos_root[k - 1]
        newton = _newton_polytope(f_polynomial(by_root[beta], n))
        column = _weight_column_hull(corr, k)
        if newton != column:
            return _report("newton", cartan, c, started, {
                "root": beta, "position": k,
                "newton_vertices": newton.vertices,
                "column_vertices": column.vertices})
    return _report("newton", cartan, c, started, None)


def check_lattice_points(cartan: CartanMatrix, c: Word) -> Report:
    """The monomials of each F-polynomial are exactly the lattice points of
    its Newton polytope."""
    started = time.monotonic()
    corr = build_correspondence(cartan, c)
    complex_ = corr.complex_
    n = complex_.n
    by_root = variables_by_root(cartan, c)
    for k in range(n + 1, complex_.m + 1):
        beta = complex_.pos_root[k - 1]
        F = f_polynomial(by_root[beta], n)
        support = set(F.support())
        points = set(_newton_polytope(F).lattice_points())
        if support != points:
            return _report("lattice", cartan, c, started, {
                "root": beta, "position": k,
                "monomials_missing": sorted(points - support),
                "monomials_extra": sorted(support - points)})
    return _report("lattice", cartan, c, started, None)


def check_minkowski_brick(cartan: CartanMatrix, c: Word) -> Report:
    """The Minkowski sum of all Newton polytopes equals the brick polytope
    translated by the negated antigreedy brick vector.

    Gated on the Newton check, since the statement presumes it.
    """
    started = time.monotonic()
    gate = check_newton_conjecture(cartan, c)
    if not gate.passed:
        payload = {"gated_on": "newton"}
        payload.update(gate.counterexample or {})
        return _report("minkowski", cartan, c, started, payload)
    corr = build_correspondence(cartan, c)
    complex_ = corr.complex_
    n = complex_.n
    by_root = variables_by_root(cartan, c)
    summands = [_newton_polytope(f_polynomial(by_root[beta], n))
                for beta in sorted(by_root)]
    total = minkowski_sum(summands)
    in_weight = LatticePolytope(convex_hull_vertices(
        [root_to_weight_coords(cartan, v) for v in total.vertices]))
    bricks = LatticePolytope(convex_hull_vertices(
        [brick_vector(complex_, node.facet, node.table)
         for node in _sorted_nodes(corr)]))
    shift = equal_up_to_translation(in_weight, bricks)
    ag = brick_vector(complex_, antigreedy_facet(complex_),
                      corr.nodes[antigreedy_facet(complex_)].table)
    if shift != ag:
        return _report("minkowski", cartan, c, started, {
            "expected_shift": ag, "actual_shift": shift,
            "minkowski_vertices": in_weight.vertices,
            "brick_vertices": bricks.vertices})
    return _report("minkowski", cartan, c, started, None)


def _weight_orbit(cartan: CartanMatrix, start: Vec) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in range(1, cartan.n + 1):
            image = reflect_weight(cartan, s, w)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def _dominates(cartan: CartanMatrix, hi: Vec, lo: Vec) -> bool:
    try:
        diff = weight_diff_to_root_coords(cartan, hi, lo)
    except NotInRootLattice:
        return False
    return all(x >= 0 for x in diff)


def check_typea_models(n: int, c: Word | None = None) -> Report:
    """All three F-polynomial models agree in type A, and every weight
    column realizes the full orbit interval between its greedy and
    antigreedy values.

    With no Coxeter word given, runs over all of them.
    """
    started = time.monotonic()
    cartan = cartan_of_type("A", n)
    words = (tuple(c),) if c is not None else coxeter_words(cartan)
    for word in words:
        corr = build_correspondence(cartan, word)
        complex_ = corr.complex_
        by_root = variables_by_root(cartan, word)
        tri = triangulation_of_coxeter(word)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                beta = tuple(1 if i <= t + 1 <= j else 0 for t in range(n))
                from_mutation = f_polynomial(by_root[beta], n)
                from_tpaths = f_poly_via_tpaths(tri, i, j)
                from_prefixes = f_poly_via_prefixes(word, i, j)
                if not (from_mutation == from_tpaths == from_prefixes):
                    return _report("typea", cartan, word, started, {
                        "root": beta, "interval": (i, j),
                        "mutation": from_mutation.terms,
                        "tpaths": from_tpaths.terms,
                        "prefixes": from_prefixes.terms})
        g_table = corr.nodes[greedy_facet(complex_)].table
        ag_table = corr.nodes[antigreedy_facet(complex_)].table
        for k in range(1, complex_.m + 1):
            realized = {node.table.weights[k - 1]
                        for node in corr.nodes.values()}
            q = complex_.word[k - 1]
            fundamental = tuple(1 if t == q - 1 else 0 for t in range(n))
            expected = {w for w in _weight_orbit(cartan, fundamental)
                        if _dominates(cartan, g_table.weights[k - 1], w)
                        and _dominates(cartan, w, ag_table.weights[k - 1])}
            if realized != expected:
                return _report("typea", cartan, word, started, {
                    "position": k,
                    "realized": sorted(realized),
                    "interval": sorted(expected)})
    return _report("typea", cartan, words[0] if len(words) == 1 else (),
                   started, None)


_CHECKS = (
    ("c-vectors", check_c_vectors),
    ("g-vectors", check_g_vectors),
    ("exchange", check_exchange_matrix),
    ("lemmas", check_lemmas),
    ("newton", check_newton_conjecture),
    ("lattice", check_lattice_points),
    ("minkowski", check_minkowski_brick),
)


def check_names(cartan: CartanMatrix) -> tuple[str, ...]:
    names = [name for name, _ in _CHECKS]
    if type_label(cartan).startswith("A"):
        names.append("typea")
    return tuple(names)


def run_checks(cartan: CartanMatrix, c: Word, names=None, jobs: int = 1
               ) -> tuple[Report, ...]:
    """Run the named checks (all applicable ones by default) and return the
    reports in registry order regardless of parallelism."""
    available = dict(_CHECKS)
    if type_label(cartan).startswith("A"):
        available["typea"] = lambda ca, word: check_typea_models(ca.n, word)
    selected = list(names) if names is not None else list(check_names(cartan))
    for name in selected:
        if name not in available:
            raise ValueError(f"unknown check {name!r}; choose from "
                             f"{', '.join(available)}")
    tasks = [(name, available[name]) for name in selected]
    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(fn, cartan, tuple(c)) for _, fn in tasks]
            return tuple(f.result() for f in futures)
    return tuple(fn(cartan, tuple(c)) for _, fn in tasks)
