"""Facets, flips, and root/weight tables of the cluster subword complex.

For a Coxeter word c the ambient word is c followed by the sorting word of
the longest element relative to c.  Facets are the size-n position sets
whose complement spells a reduced word for the longest element; positions
are 1-based.  Each position carries an almost positive root, the first n
the negated simple roots of the letters of c, the rest the positive roots
in the order the sorting word sweeps them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .coxeter import (
    Matrix,
    Word,
    apply_matrix,
    element_of_word,
    identity_matrix,
    length,
    longest_element,
    mat_mul,
    c_sorting_word,
    reflection_matrices,
    weight_reflection_matrices,
)
from .errors import InvariantViolation
from .roots import (
    CartanMatrix,
    Vec,
    coroot_to_coweight_coords,
    pair,
    positive_roots,
    root_to_weight_coords,
    transpose,
)

Facet = tuple[int, ...]


@dataclass(frozen=True)
class ClusterComplex:
    """The ambient word together with its position-to-root dictionary."""

    cartan: CartanMatrix
    c: Word
    word: Word                      # c followed by the sorting word of the longest element
    pos_root: tuple[Vec, ...]       # almost positive root at each position, simple-root coords
    longest: Matrix

    @property
    def n(self) -> int:
        return self.cartan.n

    @property
    def m(self) -> int:
        return len(self.word)

    @property
    def positive_count(self) -> int:
        return self.m - self.n


@dataclass(frozen=True)
class RootTable:
    """Cached root/weight data of one facet, one entry per position.

    Roots and coroots are in simple-root/coroot coordinates, weights and
    coweights in fundamental-weight/coweight coordinates.
    """

    facet: Facet
    roots: tuple[Vec, ...]
    weights: tuple[Vec, ...]
    coroots: tuple[Vec, ...]
    coweights: tuple[Vec, ...]


def build_complex(cartan: CartanMatrix, c: Word) -> ClusterComplex:
    n = cartan.n
    if sorted(c) != list(range(1, n + 1)):
        raise ValueError(f"Coxeter word {c} is not a permutation of 1..{n}")
    w0 = longest_element(cartan)
    sorting = c_sorting_word(cartan, c, w0)
    word = tuple(c) + sorting
    mats = reflection_matrices(cartan)
    pos_root = [tuple(-1 if t == q - 1 else 0 for t in range(n)) for q in c]
    prefix = identity_matrix(n)
    for q in sorting:
        unit = tuple(1 if t == q - 1 else 0 for t in range(n))
        pos_root.append(apply_matrix(prefix, unit))
        prefix = mat_mul(prefix, mats[q - 1])
    complex_ = ClusterComplex(cartan, tuple(c), word, tuple(pos_root), w0)
    positives = pos_root[n:]
    if sorted(positives) != sorted(positive_roots(cartan)) or len(set(positives)) != len(positives):
        raise InvariantViolation("positions do not sweep the positive roots bijectively")
    for facet, increasing in ((greedy_facet(complex_), True),
                              (antigreedy_facet(complex_), False)):
        if not is_facet(complex_, facet):
            raise InvariantViolation(f"{facet} is not a facet")
        table = root_table(complex_, facet)
        for i in facet:
            _, j = flip(complex_, facet, i, table)
            if (j > i) != increasing:
                raise InvariantViolation(
                    f"flip at {i} of {facet} goes the wrong way")
    return complex_


def greedy_facet(complex_: ClusterComplex) -> Facet:
    """Lexicographically first facet: always the first n positions."""
    return tuple(range(1, complex_.n + 1))


def antigreedy_facet(complex_: ClusterComplex) -> Facet:
    """Lexicographically last facet.

    Sweeping the word left to right and absorbing every letter that
    increases the length builds a reduced word for the longest element out
    of the earliest possible positions; the skipped positions therefore
    form the latest possible complement, which is the last facet.
    """
    n = complex_.n
    mats = reflection_matrices(complex_.cartan)
    u = identity_matrix(n)
    skipped = []
    for k, q in enumerate(complex_.word, start=1):
        unit = tuple(1 if t == q - 1 else 0 for t in range(n))
        if all(x >= 0 for x in apply_matrix(u, unit)):
            u = mat_mul(u, mats[q - 1])
        else:
            skipped.append(k)
    if u != complex_.longest or len(skipped) != n:
        raise InvariantViolation("length sweep did not absorb a longest word")
    return tuple(skipped)


def is_facet(complex_: ClusterComplex, positions: Facet) -> bool:
    """True when the complement of `positions` spells the longest element."""
    if len(positions) != complex_.n or len(set(positions)) != len(positions):
        return False
    if any(not 1 <= k <= complex_.m for k in positions):
        return False
    chosen = set(positions)
    mats = reflection_matrices(complex_.cartan)
    acc = identity_matrix(complex_.n)
    for k, q in enumerate(complex_.word, start=1):
        if k not in chosen:
            acc = mat_mul(acc, mats[q - 1])
    return acc == complex_.longest


def root_function(complex_: ClusterComplex, facet: Facet, k: int) -> Vec:
    """Product of the complement letters before position k, applied to the
    simple root of the letter at k."""
    return _entry(complex_, facet, k, "root")


def weight_function(complex_: ClusterComplex, facet: Facet, k: int) -> Vec:
    """Same prefix product applied to the fundamental weight of the letter at k."""
    return _entry(complex_, facet, k, "weight")


def coroot_function(complex_: ClusterComplex, facet: Facet, k: int) -> Vec:
    return _entry(complex_, facet, k, "coroot")


def coweight_function(complex_: ClusterComplex, facet: Facet, k: int) -> Vec:
    return _entry(complex_, facet, k, "coweight")


def _entry(complex_: ClusterComplex, facet: Facet, k: int, kind: str) -> Vec:
    if not 1 <= k <= complex_.m:
        raise ValueError(f"position {k} out of range 1..{complex_.m}")
    cartan = complex_.cartan
    n = cartan.n
    q = complex_.word[k - 1]
    chosen = set(facet)
    letters = [complex_.word[p - 1] for p in range(1, k) if p not in chosen]
    unit = tuple(1 if t == q - 1 else 0 for t in range(n))
    if kind == "root":
        from .roots import reflect_root
        v = unit
        for s in reversed(letters):
            v = reflect_root(cartan, s, v)
        return v
    if kind == "weight":
        from .roots import reflect_weight
        v = unit
        for s in reversed(letters):
            v = reflect_weight(cartan, s, v)
        return v
    if kind == "coroot":
        from .roots import reflect_coroot
        v = unit
        for s in reversed(letters):
            v = reflect_coroot(cartan, s, v)
        return v
    from .roots import reflect_coweight
    v = unit
    for s in reversed(letters):
        v = reflect_coweight(cartan, s, v)
    return v


def root_table(complex_: ClusterComplex, facet: Facet) -> RootTable:
    """Direct construction of all four rows in one left-to-right sweep."""
    cartan = complex_.cartan
    n = cartan.n
    chosen = set(facet)
    r_mats = reflection_matrices(cartan)
    w_mats = weight_reflection_matrices(cartan)
    rc_mats = reflection_matrices(transpose(cartan))
    wc_mats = weight_reflection_matrices(transpose(cartan))
    p_r = p_w = p_rc = p_wc = identity_matrix(n)
    roots, weights, coroots, coweights = [], [], [], []
    for k, q in enumerate(complex_.word, start=1):
        unit = tuple(1 if t == q - 1 else 0 for t in range(n))
        roots.append(apply_matrix(p_r, unit))
        weights.append(apply_matrix(p_w, unit))
        coroots.append(apply_matrix(p_rc, unit))
        coweights.append(apply_matrix(p_wc, unit))
        if k not in chosen:
            p_r = mat_mul(p_r, r_mats[q - 1])
            p_w = mat_mul(p_w, w_mats[q - 1])
            p_rc = mat_mul(p_rc, rc_mats[q - 1])
            p_wc = mat_mul(p_wc, wc_mats[q - 1])
    return RootTable(tuple(facet), tuple(roots), tuple(weights), tuple(coroots), tuple(coweights))


def flip(complex_: ClusterComplex, facet: Facet, i: int,
         table: RootTable | None = None) -> tuple[Facet, int]:
    """Exchange position i of `facet` for the unique partner position j.

    j is the complement position whose root is plus or minus the root at i.
    The flip is increasing exactly when i < j, which happens exactly when
    the two roots agree and are positive.
    """
    if i not in facet:
        raise ValueError(f"position {i} is not in facet {facet}")
    if table is None:
        table = root_table(complex_, facet)
    beta = table.roots[i - 1]
    neg = tuple(-x for x in beta)
    chosen = set(facet)
    j = 0
    for k in range(1, complex_.m + 1):
        if k not in chosen and table.roots[k - 1] in (beta, neg):
            j = k
            break
    if j == 0:
        raise InvariantViolation(f"no flip partner for position {i} in {facet}")
    out = tuple(sorted(set(facet) - {i} | {j}))
    return out, j


def update_after_flip(complex_: ClusterComplex, facet: Facet, i: int,
                      new_facet: Facet, j: int, table: RootTable) -> RootTable:
    """Table of the flipped facet: entries strictly between the exchanged
    positions (inclusive on the far side) are reflected along the root at i,
    all other entries are copied."""
    cartan = complex_.cartan
    beta = table.roots[i - 1]
    beta_co = table.coroots[i - 1]
    beta_w = root_to_weight_coords(cartan, beta)
    beta_cw = coroot_to_coweight_coords(cartan, beta_co)
    lo, hi = min(i, j), max(i, j)
    roots = list(table.roots)
    weights = list(table.weights)
    coroots = list(table.coroots)
    coweights = list(table.coweights)
    for k in range(lo + 1, hi + 1):
        x = roots[k - 1]
        roots[k - 1] = tuple(a - pair(cartan, x, beta_co) * b for a, b in zip(x, beta))
        w = weights[k - 1]
        coef = sum(a * b for a, b in zip(w, beta_co))
        weights[k - 1] = tuple(a - coef * b for a, b in zip(w, beta_w))
        y = coroots[k - 1]
        coroots[k - 1] = tuple(a - pair(cartan, beta, y) * b for a, b in zip(y, beta_co))
        z = coweights[k - 1]
        coef = sum(a * b for a, b in zip(beta, z))
        coweights[k - 1] = tuple(a - coef * b for a, b in zip(z, beta_cw))
    return RootTable(tuple(new_facet), tuple(roots), tuple(weights),
                     tuple(coroots), tuple(coweights))


def brick_vector(complex_: ClusterComplex, facet: Facet,
                 table: RootTable | None = None) -> Vec:
    """Sum of the weight row over all positions, fundamental-weight coords."""
    if table is None:
        table = root_table(complex_, facet)
    n = complex_.n
    return tuple(sum(w[t] for w in table.weights) for t in range(n))


def root_configuration(table: RootTable) -> tuple[Vec, ...]:
    return tuple(table.roots[i - 1] for i in table.facet)


def weight_configuration(table: RootTable) -> tuple[Vec, ...]:
    return tuple(table.weights[i - 1] for i in table.facet)


_SPOT_CHECK_EVERY = 20


def enumerate_facets_with_tables(complex_: ClusterComplex) -> dict[Facet, RootTable]:
    """All facets with cached tables, by breadth-first flips from the greedy
    facet.  Tables are built incrementally; every 20th discovery and the
    antigreedy facet are re-derived from scratch and compared."""
    greedy = greedy_facet(complex_)
    anti = antigreedy_facet(complex_)
    found: dict[Facet, RootTable] = {greedy: root_table(complex_, greedy)}
    queue = deque([greedy])
    count = 0
    while queue:
        facet = queue.popleft()
        table = found[facet]
        for i in facet:
            new_facet, j = flip(complex_, facet, i, table)
            if new_facet in found:
                continue
            new_table = update_after_flip(complex_, facet, i, new_facet, j, table)
            count += 1
            if count % _SPOT_CHECK_EVERY == 0 or new_facet == anti:
                if new_table != root_table(complex_, new_facet):
                    raise InvariantViolation(f"incremental table drifted at {new_facet}")
            found[new_facet] = new_table
            queue.append(new_facet)
    return found


def enumerate_facets(complex_: ClusterComplex) -> tuple[Facet, ...]:
    """All facets in sorted order."""
    return tuple(sorted(enumerate_facets_with_tables(complex_)))


def brute_force_facets(complex_: ClusterComplex) -> tuple[Facet, ...]:
    """All size-n position sets whose complement spells the longest element.

    Independent of the flip machinery; exponential in the word length, for
    cross-checking small ranks only.
    """
    mats = reflection_matrices(complex_.cartan)
    out = []
    for combo in combinations(range(1, complex_.m + 1), complex_.n):
        chosen = set(combo)
        acc = identity_matrix(complex_.n)
        for k, q in enumerate(complex_.word, start=1):
            if k not in chosen:
                acc = mat_mul(acc, mats[q - 1])
        if acc == complex_.longest:
            out.append(combo)
    return tuple(out)
