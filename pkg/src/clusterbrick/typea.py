"""Polygon model for type A: triangulations, crossing paths, and interval
summands.

The rank-n data lives on a convex (n+3)-gon with vertices 0..n+2 in
counterclockwise order; "clockwise from x" means x-1 modulo the size.  A
Coxeter word determines a snake triangulation by ear cutting, and the path
combinatorics below recovers F-polynomials in two independent ways: by
walking sign vectors along a crossing diagonal, and by reading prefixes of
the word restricted to an interval of labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cluster import FPolynomial
from .coxeter import Word, restricted_prefixes
from .errors import InvariantViolation
from .roots import Vec

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class Triangulation:
    """Snake triangulation of the (n+3)-gon with labeled diagonals.

    diagonals[i-1] is the diagonal labeled i.  strip lists the n+1 triangles
    in dual-path order: strip[k-1] and strip[k] share the diagonal labeled k.
    """

    n: int
    diagonals: tuple[Edge, ...]
    strip: tuple[Triangle, ...]

    @property
    def size(self) -> int:
        return self.n + 3

    def is_boundary(self, u: int, v: int) -> bool:
        return (u - v) % self.size in (1, self.size - 1)

    def diagonal_label(self, u: int, v: int) -> int | None:
        e = (min(u, v), max(u, v))
        for idx, d in enumerate(self.diagonals, start=1):
            if d == e:
                return idx
        return None


def triangulation_of_coxeter(c: Word, start: int = 0) -> Triangulation:
    """Ear-cutting construction of the snake triangulation of a Coxeter word.

    The first ear is cut at `start`.  For i from 2 to n the next ear sits at
    the clockwise neighbor of the previous one when label i occurs before
    label i-1 in c, at the counterclockwise neighbor otherwise.  Diagonal i
    is the edge closing the ear cut at step i.
    """
    n = len(c)
    size = n + 3
    position = {s: k for k, s in enumerate(c)}
    if sorted(position) != list(range(1, n + 1)):
        raise ValueError(f"{c} is not a permutation of 1..{n}")
    remaining = [(start + k) % size for k in range(size)]
    diagonals = []
    ear = start
    for i in range(1, n + 1):
        idx = remaining.index(ear)
        cw = remaining[idx - 1]
        ccw = remaining[(idx + 1) % len(remaining)]
        diagonals.append((min(cw, ccw), max(cw, ccw)))
        remaining.pop(idx)
        if i < n:
            ear = cw if position[i + 1] < position[i] else ccw
    strip = _dual_strip(n, tuple(diagonals), size)
    return Triangulation(n, tuple(diagonals), strip)


def _dual_strip(n: int, diagonals: tuple[Edge, ...], size: int) -> tuple[Triangle, ...]:
    edges = set(diagonals)
    for j in range(size):
        edges.add((min(j, (j + 1) % size), max(j, (j + 1) % size)))
    triangles = []
    for a in range(size):
        for b in range(a + 1, size):
            for cc in range(b + 1, size):
                if ((a, b) in edges and (b, cc) in edges and (a, cc) in edges):
                    triangles.append((a, b, cc))
    if len(triangles) != n + 1:
        raise InvariantViolation(f"{len(triangles)} triangles, expected {n + 1}")

    def has_diag(tri: Triangle, d: Edge) -> bool:
        return d[0] in tri and d[1] in tri

    if n == 1:
        # Both triangles of the square contain the lone diagonal; any order
        # gives the same crossing set, so take the lexicographic one.
        return tuple(sorted(triangles))

    strip = []
    for k in range(n + 1):
        if k == 0:
            want, avoid = diagonals[0], diagonals[1]
            cands = [t for t in triangles
                     if has_diag(t, want) and not has_diag(t, avoid)]
        elif k < n:
            cands = [t for t in triangles
                     if has_diag(t, diagonals[k - 1]) and has_diag(t, diagonals[k])]
        else:
            cands = [t for t in triangles
                     if has_diag(t, diagonals[n - 1]) and t != strip[n - 1]]
        if len(cands) != 1:
            raise InvariantViolation(f"dual strip not a path at step {k}: {cands}")
        strip.append(cands[0])
    return tuple(strip)


@dataclass(frozen=True)
class CrossingDiagonal:
    """An oriented diagonal with the labels it crosses, in crossing order."""

    source: int
    target: int
    crossed: tuple[int, ...]


def _crosses(size: int, e1: Edge, e2: Edge) -> bool:
    a, b = e1
    u, v = e2
    if len({a, b, u, v}) < 4:
        return False

    def between(x, lo, hi):
        return (x - lo) % size < (hi - lo) % size and x != lo
    return between(u, a, b) != between(v, a, b)


def diagonal_of_root(tri: Triangulation, i: int, j: int) -> CrossingDiagonal:
    """The diagonal crossing exactly the labels i..j, oriented to cross i
    first."""
    if not 1 <= i <= j <= tri.n:
        raise ValueError(f"need 1 <= i <= j <= {tri.n}, got ({i}, {j})")
    source = next(v for v in tri.strip[i - 1]
                  if v not in tri.diagonals[i - 1])
    target = next(v for v in tri.strip[j]
                  if v not in tri.diagonals[j - 1])
    crossed = tuple(range(i, j + 1))
    gamma = (min(source, target), max(source, target))
    actually = tuple(k for k in range(1, tri.n + 1)
                     if _crosses(tri.size, gamma, tri.diagonals[k - 1]))
    if actually != crossed:
        raise InvariantViolation(
            f"diagonal {gamma} crosses {actually}, expected {crossed}")
    return CrossingDiagonal(source, target, crossed)


Step = tuple[str, object]  # ("diag", label) or ("boundary", (u, v))


@dataclass(frozen=True)
class TPath:
    """One path: crossed labels, a sign per crossing, and all 2d+1 steps."""

    source: int
    target: int
    crossed: tuple[int, ...]
    signs: tuple[int, ...]
    steps: tuple[Step, ...]


def _reference_direction(triangle: Triangle, edge: Edge) -> tuple[int, int]:
    """Direction induced on `edge` by the counterclockwise cycle of
    `triangle` (vertices ascending is counterclockwise here)."""
    a, b, cc = triangle
    cycle = ((a, b), (b, cc), (cc, a))
    for u, v in cycle:
        if (min(u, v), max(u, v)) == edge:
            return (u, v)
    raise InvariantViolation(f"{edge} is not a side of {triangle}")


def enumerate_tpaths(tri: Triangulation, gamma: CrossingDiagonal) -> tuple[TPath, ...]:
    """All paths along gamma, one per admissible sign vector.

    A sign vector is admissible when each connector between consecutive
    diagonal travels lands on a genuine triangle side; a degenerate connector
    (end of one travel equals start of the next) kills the vector.  The
    all-positive vector comes first and the all-negative one last.
    """
    refs = []
    for label in gamma.crossed:
        after = tri.strip[label]
        refs.append(_reference_direction(after, tri.diagonals[label - 1]))
    d = len(gamma.crossed)
    out = []
    for signs in product((1, -1), repeat=d):
        travels = [ref if s == 1 else (ref[1], ref[0])
                   for ref, s in zip(refs, signs)]
        ok = True
        for k in range(d - 1):
            if travels[k][1] == travels[k + 1][0]:
                ok = False
                break
        if not ok:
            continue
        steps: list[Step] = []
        cur = gamma.source
        for k, label in enumerate(gamma.crossed):
            start, end = travels[k]
            steps.append(_edge_step(tri, cur, start))
            steps.append(("diag", label))
            cur = end
        steps.append(_edge_step(tri, cur, gamma.target))
        out.append(TPath(gamma.source, gamma.target, gamma.crossed,
                         signs, tuple(steps)))
    return tuple(out)


def _edge_step(tri: Triangulation, u: int, v: int) -> Step:
    if u == v:
        raise InvariantViolation(f"degenerate connector at vertex {u}")
    label = tri.diagonal_label(u, v)
    if label is not None:
        return ("diag", label)
    if not tri.is_boundary(u, v):
        raise InvariantViolation(f"({u}, {v}) is neither a diagonal nor a side")
    return ("boundary", (min(u, v), max(u, v)))


def monomial_of_tpath(path: TPath, n: int) -> Vec:
    """y-exponent vector: 1 at each positively traveled label."""
    out = [0] * n
    for label, s in zip(path.crossed, path.signs):
        if s == 1:
            out[label - 1] = 1
    return tuple(out)


def f_poly_via_tpaths(tri: Triangulation, i: int, j: int) -> FPolynomial:
    """F-polynomial of the root spanning labels i..j, summed over paths."""
    gamma = diagonal_of_root(tri, i, j)
    terms: dict[Vec, int] = {}
    for path in enumerate_tpaths(tri, gamma):
        m = monomial_of_tpath(path, tri.n)
        terms[m] = terms.get(m, 0) + 1
    return FPolynomial(tri.n, terms)


def f_poly_via_prefixes(c: Word, i: int, j: int) -> FPolynomial:
    """Same F-polynomial from the word side: one monomial per prefix of c
    restricted to the labels i..j."""
    n = len(c)
    terms: dict[Vec, int] = {}
    for prefix in restricted_prefixes(c, i, j):
        m = [0] * n
        for s in prefix:
            m[s - 1] = 1
        key = tuple(m)
        terms[key] = terms.get(key, 0) + 1
    return FPolynomial(n, terms)


def flip_tpath(tri: Triangulation, path: TPath, label: int) -> TPath:
    """The path with the sign at `label` toggled; raises when the toggled
    sign vector is inadmissible."""
    if label not in path.crossed:
        raise ValueError(f"label {label} not crossed by this path")
    idx = path.crossed.index(label)
    target_signs = tuple(-s if k == idx else s for k, s in enumerate(path.signs))
    gamma = CrossingDiagonal(path.source, path.target, path.crossed)
    for cand in enumerate_tpaths(tri, gamma):
        if cand.signs == target_signs:
            return cand
    raise InvariantViolation(f"no valid path with signs {target_signs}")


def loday_summands(c: Word) -> dict[tuple[int, int], tuple[Vec, ...]]:
    """For each label interval, the indicator vectors of the restricted
    prefixes: the vertex generators of the interval's summand polytope."""
    n = len(c)
    out = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            pts = []
            for prefix in restricted_prefixes(c, i, j):
                m = [0] * n
                for s in prefix:
                    m[s - 1] = 1
                pts.append(tuple(m))
            out[(i, j)] = tuple(sorted(set(pts)))
    return out


def ambient_representative(v: Vec, coordinate_sum: int) -> tuple[int, ...]:
    """Type-A vector in the permutation representation on n+1 coordinates.

    A fundamental-weight coordinate vector maps to sum_i v_i (e_1+...+e_i),
    which is only defined up to adding multiples of (1,...,1); the copy with
    the requested coordinate sum is returned.  Orbit elements of the i-th
    fundamental weight are the 0/1 vectors with i ones, so passing i here
    recovers those; brick vectors use the sum of the letters of the word.
    """
    n = len(v)
    lifted = [sum(v[i] for i in range(t, n)) for t in range(n)] + [0]
    excess = coordinate_sum - sum(lifted)
    if excess % (n + 1) != 0:
        raise ValueError(
            f"coordinate sum {coordinate_sum} unreachable from {v}")
    shift = excess // (n + 1)
    return tuple(x + shift for x in lifted)


def boundary_letter(tri: Triangulation, u: int, v: int) -> str:
    """Display letter for a boundary side; presentational only."""
    lo = min(u, v)
    if not tri.is_boundary(u, v):
        raise ValueError(f"({u}, {v}) is not a boundary side")
    if (max(u, v) - lo) % tri.size != 1:
        lo = max(u, v)
    return chr(ord("A") + lo)
