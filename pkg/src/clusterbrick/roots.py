"""Finite-type Cartan matrices and exact root/weight coordinate arithmetic.

Vectors are plain tuples of ints.  Roots live in simple-root coordinates,
weights in fundamental-weight coordinates.  The dual systems (coroots,
coweights) are the same coordinate systems taken for the transposed Cartan
matrix, which is how every *_co variant is realized.  No floats anywhere.

Node numbering is Bourbaki throughout.  Orientation conventions for the
non-symmetric entries: B_n has a[n][n-1] = -2 (last simple root short),
C_n is the transpose of B_n, F4 has a[3][2] = -2 (nodes 1, 2 long), and
G2 is [[2, -1], [-3, 2]].
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidCartanMatrix,
    InvalidCartanType,
    NotInRootLattice,
)

Vec = tuple[int, ...]

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix of finite crystallographic type.

    rows[s][t] pairs the t-th simple root against the s-th simple coroot:
    diagonal 2, off-diagonal <= 0, zero entries symmetric, products of
    opposite off-diagonal entries in {0, 1, 2, 3}.  Construction validates
    symmetrizability and positive definiteness, so it succeeds exactly for
    finite types.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _validate_cartan(rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, s: int, t: int) -> int:
        """a_{st} with 1-based node indices."""
        return self.rows[s - 1][t - 1]


def _validate_cartan(rows: tuple[tuple[int, ...], ...]) -> None:
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InvalidCartanMatrix("matrix must be square and nonempty")
    for s in range(n):
        if rows[s][s] != 2:
            raise InvalidCartanMatrix(f"diagonal entry at {s + 1} is not 2")
        for t in range(n):
            if s == t:
                continue
            a, b = rows[s][t], rows[t][s]
            if a > 0:
                raise InvalidCartanMatrix(f"positive off-diagonal entry at ({s + 1},{t + 1})")
            if (a == 0) != (b == 0):
                raise InvalidCartanMatrix(f"zero pattern not symmetric at ({s + 1},{t + 1})")
            if a * b > 3:
                raise InvalidCartanMatrix(f"entry product {a * b} > 3 at ({s + 1},{t + 1})")
    d = _symmetrizer(rows)
    for s in range(n):
        for t in range(n):
            if d[s] * rows[s][t] != d[t] * rows[t][s]:
                raise InvalidCartanMatrix("matrix is not symmetrizable")
    sym = [[d[s] * rows[s][t] for t in range(n)] for s in range(n)]
    for k in range(1, n + 1):
        minor = [row[:k] for row in sym[:k]]
        if _det_fraction(minor) <= 0:
            raise InvalidCartanMatrix("symmetrization is not positive definite (not finite type)")


def _symmetrizer(rows: tuple[tuple[int, ...], ...]) -> list[Fraction]:
    """Positive diagonal d with d[s]*a[s][t] == d[t]*a[t][s], found per component."""
    n = len(rows)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            s = stack.pop()
            for t in range(n):
                if rows[s][t] != 0 and s != t and d[t] is None:
                    d[t] = d[s] * rows[s][t] / rows[t][s]
                    stack.append(t)
    return [x if x is not None else Fraction(1) for x in d]


def _det_fraction(matrix: list[list[Fraction]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return det


def cartan_of_type(family: str, rank: int) -> CartanMatrix:
    """Cartan matrix for an irreducible finite type in Bourbaki numbering."""
    fam = str(family).strip().upper()
    if fam not in _RANK_OK or not isinstance(rank, int) or not _RANK_OK[fam](rank):
        raise InvalidCartanType(f"no finite type {family}{rank}")
    n = rank
    rows = [[2 if s == t else 0 for t in range(n)] for s in range(n)]

    def edge(s: int, t: int) -> None:
        rows[s - 1][t - 1] = -1
        rows[t - 1][s - 1] = -1

    if fam in ("A", "B", "C", "F"):
        for i in range(1, n):
            edge(i, i + 1)
        if fam == "B":
            rows[n - 1][n - 2] = -2
        elif fam == "C":
            rows[n - 2][n - 1] = -2
        elif fam == "F":
            rows[2][1] = -2
    elif fam == "D":
        for i in range(1, n - 1):
            edge(i, i + 1)
        edge(n - 2, n)
    elif fam == "E":
        for s, t in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]:
            edge(s, t)
        if n >= 7:
            edge(6, 7)
        if n == 8:
            edge(7, 8)
    else:  # G
        rows = [[2, -1], [-3, 2]]
    return CartanMatrix(tuple(tuple(row) for row in rows))


@functools.lru_cache(maxsize=None)
def transpose(cartan: CartanMatrix) -> CartanMatrix:
    n = cartan.n
    return CartanMatrix(tuple(tuple(cartan.rows[t][s] for t in range(n)) for s in range(n)))


def _check_index(cartan: CartanMatrix, s: int) -> None:
    if not 1 <= s <= cartan.n:
        raise ValueError(f"simple reflection index {s} out of range 1..{cartan.n}")


def _check_dim(cartan: CartanMatrix, v: Vec) -> None:
    if len(v) != cartan.n:
        raise ValueError(f"vector length {len(v)} does not match rank {cartan.n}")


def reflect_root(cartan: CartanMatrix, s: int, v: Vec) -> Vec:
    """Simple reflection s applied to v in simple-root coordinates."""
    _check_index(cartan, s)
    _check_dim(cartan, v)
    row = cartan.rows[s - 1]
    c = sum(row[t] * v[t] for t in range(cartan.n))
    out = list(v)
    out[s - 1] -= c
    return tuple(out)


def reflect_weight(cartan: CartanMatrix, s: int, v: Vec) -> Vec:
    """Simple reflection s applied to v in fundamental-weight coordinates."""
    _check_index(cartan, s)
    _check_dim(cartan, v)
    coef = v[s - 1]
    if coef == 0:
        return tuple(v)
    return tuple(v[t] - coef * cartan.rows[t][s - 1] for t in range(cartan.n))


def reflect_coroot(cartan: CartanMatrix, s: int, v: Vec) -> Vec:
    """Simple reflection s applied to v in simple-coroot coordinates."""
    return reflect_root(transpose(cartan), s, v)


def reflect_coweight(cartan: CartanMatrix, s: int, v: Vec) -> Vec:
    """Simple reflection s applied to v in fundamental-coweight coordinates."""
    return reflect_weight(transpose(cartan), s, v)


def mat_vec(rows: tuple[tuple[int, ...], ...], v: Vec) -> Vec:
    return tuple(sum(row[t] * v[t] for t in range(len(v))) for row in rows)


def root_to_weight_coords(cartan: CartanMatrix, v: Vec) -> Vec:
    """Rewrite simple-root coordinates in the fundamental-weight basis."""
    _check_dim(cartan, v)
    return mat_vec(cartan.rows, v)


def coroot_to_coweight_coords(cartan: CartanMatrix, v: Vec) -> Vec:
    """Rewrite simple-coroot coordinates in the fundamental-coweight basis."""
    return root_to_weight_coords(transpose(cartan), v)


def weight_diff_to_root_coords(cartan: CartanMatrix, w1: Vec, w2: Vec) -> Vec:
    """Express w1 - w2 (weight coordinates) in simple-root coordinates.

    Raises NotInRootLattice when the difference is not an integer
    combination of simple roots.
    """
    _check_dim(cartan, w1)
    _check_dim(cartan, w2)
    n = cartan.n
    aug = [[Fraction(cartan.rows[r][c]) for c in range(n)] + [Fraction(w1[r] - w2[r])]
           for r in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    sol = [aug[r][n] for r in range(n)]
    if any(x.denominator != 1 for x in sol):
        raise NotInRootLattice(f"difference {tuple(w1[i] - w2[i] for i in range(n))} is not in the root lattice")
    return tuple(int(x) for x in sol)


def pair(cartan: CartanMatrix, root_vec: Vec, coroot_vec: Vec) -> int:
    """Pairing of a root-coordinate vector against a coroot-coordinate vector."""
    _check_dim(cartan, root_vec)
    _check_dim(cartan, coroot_vec)
    n = cartan.n
    return sum(coroot_vec[s] * cartan.rows[s][t] * root_vec[t]
               for s in range(n) for t in range(n) if coroot_vec[s] and root_vec[t])


def height(v: Vec) -> int:
    return sum(v)


_CLOSURE_SWEEP_FACTOR = 10


@functools.lru_cache(maxsize=None)
def positive_roots(cartan: CartanMatrix) -> tuple[Vec, ...]:
    """All positive roots in simple-root coordinates, sorted by (height, lex).

    Computed as the simple-reflection closure of the simple roots, keeping
    the positive vectors; the sweep count is hard-capped so a non-finite
    input fails loudly instead of looping.
    """
    n = cartan.n
    simples = [tuple(1 if t == s else 0 for t in range(n)) for s in range(n)]
    known = set(simples)
    for _ in range(_CLOSURE_SWEEP_FACTOR * n * n):
        new = set()
        for beta in known:
            for s in range(1, n + 1):
                img = reflect_root(cartan, s, beta)
                if img not in known and all(x >= 0 for x in img):
                    new.add(img)
        if not new:
            break
        known |= new
    else:
        raise InvalidCartanMatrix("positive-root closure did not terminate; input is not finite type")
    return tuple(sorted(known, key=lambda v: (height(v), v)))


@functools.lru_cache(maxsize=None)
def coroot_of_root(cartan: CartanMatrix) -> dict[Vec, Vec]:
    """Map each root (simple-root coords) to its coroot (simple-coroot coords).

    Built by closing the paired orbit of (alpha_s, alpha_s-dual) under
    simultaneous reflections, so the pairing never guesses lengths.
    """
    n = cartan.n
    pairs = {}
    frontier = []
    for s in range(n):
        unit = tuple(1 if t == s else 0 for t in range(n))
        pairs[unit] = unit
        frontier.append((unit, unit))
    while frontier:
        beta, beta_co = frontier.pop()
        for s in range(1, n + 1):
            img = reflect_root(cartan, s, beta)
            if img not in pairs:
                img_co = reflect_coroot(cartan, s, beta_co)
                pairs[img] = img_co
                frontier.append((img, img_co))
    return pairs


_DEGREES_FIXED = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}


def degrees(family: str, rank: int) -> tuple[int, ...]:
    """Fundamental degrees of the reflection group of the given type."""
    fam = str(family).strip().upper()
    if fam not in _RANK_OK or not _RANK_OK[fam](rank):
        raise InvalidCartanType(f"no finite type {family}{rank}")
    if fam == "A":
        return tuple(range(2, rank + 2))
    if fam in ("B", "C"):
        return tuple(range(2, 2 * rank + 1, 2))
    if fam == "D":
        return tuple(sorted(tuple(range(2, 2 * rank - 1, 2)) + (rank,)))
    return _DEGREES_FIXED[(fam, rank)]


def coxeter_number(family: str, rank: int) -> int:
    return max(degrees(family, rank))


def w_catalan(family: str, rank: int) -> int:
    """prod (d_i + h) / d_i over the fundamental degrees, an exact integer."""
    ds = degrees(family, rank)
    h = max(ds)
    num = Fraction(1)
    for d in ds:
        num *= Fraction(d + h, d)
    if num.denominator != 1:
        raise InvalidCartanType("degree product is not an integer")  # pragma: no cover
    return int(num)
