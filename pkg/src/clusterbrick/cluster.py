"""Cluster algebra seeds with principal coefficients, in exact arithmetic.

A seed is an extended integer matrix (2n rows by n columns: exchange block on
top, coefficient block below) together with n cluster variables.  Variables
live in the Laurent ring Z[x1..xn, x1^-1..xn^-1, y1..yn], represented as
integer-coefficient polynomials over exponent tuples of length 2n (x slots
first, then y slots; x exponents may be negative).

Everything is integer or Fraction arithmetic; there is no floating point in
this module.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DimensionMismatch, InexactDivision, InvariantViolation
from .polytope import convex_hull_vertices
from .roots import CartanMatrix, Vec


def _pos(a: int) -> int:
    return a if a > 0 else 0


class MPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int]):
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if c != 0}

    @classmethod
    def constant(cls, nvars: int, value: int) -> "MPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, nvars: int, exponents, coeff: int = 1) -> "MPoly":
        e = tuple(exponents)
        if len(e) != nvars:
            raise DimensionMismatch(f"exponent tuple of length {len(e)}, expected {nvars}")
        return cls(nvars, {e: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "MPoly") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {self.terms})"


def exact_div(num: MPoly, den: MPoly) -> MPoly:
    """The quotient q with q * den == num, when it exists in the Laurent ring.

    Long division by the lex-leading term of den.  Exponents of any true
    quotient are confined to the box whose corner coordinates are the
    componentwise extremes of num minus those of den (Newton polytopes add
    under multiplication), so a candidate quotient term outside that box, a
    leading coefficient that fails to divide, or a nonzero remainder all
    certify that no exact quotient exists.
    """
    num._check(den)
    if den.is_zero():
        raise InexactDivision("division by zero polynomial")
    if num.is_zero():
        return MPoly(num.nvars, {})
    nv = num.nvars
    lo = tuple(min(e[t] for e in num.terms) - min(e[t] for e in den.terms)
               for t in range(nv))
    hi = tuple(max(e[t] for e in num.terms) - max(e[t] for e in den.terms)
               for t in range(nv))
    den_lead = max(den.terms)
    den_lc = den.terms[den_lead]
    rem = dict(num.terms)
    quo: dict[tuple[int, ...], int] = {}
    while rem:
        lead = max(rem)
        lc = rem[lead]
        q_exp = tuple(a - b for a, b in zip(lead, den_lead))
        if any(q < a or q > b for q, a, b in zip(q_exp, lo, hi)):
            raise InexactDivision("quotient would leave the exponent box")
        if lc % den_lc != 0:
            raise InexactDivision(f"coefficient {lc} not divisible by {den_lc}")
        q_c = lc // den_lc
        quo[q_exp] = quo.get(q_exp, 0) + q_c
        for e, c in den.terms.items():
            key = tuple(a + b for a, b in zip(q_exp, e))
            val = rem.get(key, 0) - q_c * c
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return MPoly(nv, quo)


class FPolynomial:
    """Polynomial in the coefficient variables y1..yn only.

    The constructor enforces the normal shape of these polynomials: all
    exponents nonnegative, all coefficients positive, constant term 1, and a
    unique maximal monomial that every other monomial divides.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[tuple[int, ...], int]):
        terms = {tuple(e): c for e, c in terms.items() if c != 0}
        for e, c in terms.items():
            if len(e) != n:
                raise DimensionMismatch(f"exponent of length {len(e)}, expected {n}")
            if any(a < 0 for a in e):
                raise InvariantViolation(f"negative exponent {e}")
            if c <= 0:
                raise InvariantViolation(f"nonpositive coefficient {c} at {e}")
        if terms.get((0,) * n) != 1:
            raise InvariantViolation("constant term is not 1")
        top = tuple(max(e[t] for e in terms) for t in range(n))
        if top not in terms:
            raise InvariantViolation("no maximal monomial divisible by all others")
        self.n = n
        self.terms = terms

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.terms))

    def top_exponent(self) -> tuple[int, ...]:
        return tuple(max(e[t] for e in self.terms) for t in range(self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"FPolynomial({self.n}, {self.terms})"


def tropical_add(m1, m2) -> Vec:
    """Componentwise minimum of two y-exponent vectors."""
    return tuple(min(a, b) for a, b in zip(m1, m2))


@dataclass(frozen=True)
class Seed:
    """Extended exchange matrix (2n x n), n cluster variables, and the n
    frozen coefficient monomials as y-exponent vectors.

    The frozen vectors follow their own mutation rule; that they stay equal
    to the columns of the coefficient block is a theorem, checked in tests
    rather than assumed here.
    """

    matrix: tuple[tuple[int, ...], ...]
    variables: tuple[MPoly, ...]
    frozen: tuple[Vec, ...]

    @property
    def n(self) -> int:
        return len(self.variables)


def initial_matrix(cartan: CartanMatrix, c) -> tuple[tuple[int, ...], ...]:
    """Extended matrix of the initial seed for the Coxeter word c.

    Exchange block: entry (s, t) is -a_st when s precedes t in c and +a_st
    otherwise; the coefficient block starts as the identity.
    """
    n = cartan.n
    position = {s: k for k, s in enumerate(c)}
    top = []
    for s in range(1, n + 1):
        row = []
        for t in range(1, n + 1):
            a = cartan.rows[s - 1][t - 1]
            if s == t or a == 0:
                row.append(0)
            elif position[s] < position[t]:
                row.append(-a)
            else:
                row.append(a)
        top.append(tuple(row))
    bottom = [tuple(1 if s == t else 0 for t in range(n)) for s in range(n)]
    return tuple(top + bottom)


def initial_seed(cartan: CartanMatrix, c) -> Seed:
    n = cartan.n
    variables = tuple(
        MPoly.monomial(2 * n, tuple(1 if t == s else 0 for t in range(2 * n)))
        for s in range(n))
    frozen = tuple(tuple(1 if t == s else 0 for t in range(n)) for s in range(n))
    return Seed(initial_matrix(cartan, c), variables, frozen)


def mutate(seed: Seed, i: int) -> Seed:
    """Mutation of the seed at slot i (1-based).

    The matrix follows the usual four-case rule on all 2n rows.  The new
    variable is the exchange binomial divided exactly by the old variable,
    with the coefficient monomials split off the stored frozen vector f_i:
    the normalization f_i/(f_i (+) 1) and 1/(f_i (+) 1) are the monomials
    y^(f_i - min(f_i,0)) and y^(-min(f_i,0)).
    """
    n = seed.n
    if not 1 <= i <= n:
        raise ValueError(f"slot {i} out of range 1..{n}")
    col = tuple(seed.matrix[k][i - 1] for k in range(2 * n))
    new_rows = []
    for k in range(2 * n):
        row = []
        for lo in range(n):
            b = seed.matrix[k][lo]
            if k == i - 1 or lo == i - 1:
                row.append(-b)
            else:
                row.append(b + _pos(col[k]) * _pos(seed.matrix[i - 1][lo])
                           - _pos(-col[k]) * _pos(-seed.matrix[i - 1][lo]))
        new_rows.append(tuple(row))
    f_i = seed.frozen[i - 1]
    floor = tropical_add(f_i, (0,) * n)
    plus = MPoly.monomial(2 * n, (0,) * n + tuple(a - b for a, b in zip(f_i, floor)))
    minus = MPoly.monomial(2 * n, (0,) * n + tuple(-b for b in floor))
    for k in range(n):
        if col[k] > 0:
            plus = plus * seed.variables[k] ** col[k]
        elif col[k] < 0:
            minus = minus * seed.variables[k] ** (-col[k])
    new_var = exact_div(plus + minus, seed.variables[i - 1])
    variables = tuple(new_var if k == i - 1 else seed.variables[k] for k in range(n))
    new_frozen = []
    for lo in range(n):
        if lo == i - 1:
            new_frozen.append(tuple(-a for a in f_i))
        else:
            b = seed.matrix[i - 1][lo]
            new_frozen.append(tuple(
                f + _pos(b) * a - b * m
                for f, a, m in zip(seed.frozen[lo], f_i, floor)))
    return Seed(tuple(new_rows), variables, tuple(new_frozen))


def principal_part(matrix) -> tuple[tuple[int, ...], ...]:
    """Top n rows of the extended matrix: the exchange block."""
    n = len(matrix[0])
    return tuple(tuple(matrix[s]) for s in range(n))


def c_vector(seed: Seed, i: int) -> Vec:
    """Column i of the coefficient block, simple-root coordinates."""
    n = seed.n
    return tuple(seed.matrix[n + s][i - 1] for s in range(n))


def c_vectors(seed: Seed) -> tuple[Vec, ...]:
    return tuple(c_vector(seed, i) for i in range(1, seed.n + 1))


def d_vector(p: MPoly, n: int) -> Vec:
    """Negated componentwise minimum of the x exponents."""
    if p.is_zero():
        raise ValueError("d-vector of zero")
    return tuple(-min(e[t] for e in p.terms) for t in range(n))


def g_vector(p: MPoly, n: int) -> Vec:
    """x exponent of the unique surviving monomial at y = 0.

    Read in fundamental-weight coordinates.
    """
    survivors = {e: c for e, c in p.terms.items() if all(a == 0 for a in e[n:])}
    if len(survivors) != 1:
        raise InvariantViolation(f"{len(survivors)} monomials survive at y=0")
    (exp, coeff), = survivors.items()
    if coeff != 1:
        raise InvariantViolation(f"y=0 monomial has coefficient {coeff}")
    return exp[:n]


def f_polynomial(p: MPoly, n: int) -> FPolynomial:
    """Specialization x1 = .. = xn = 1, collected by y exponents."""
    out: dict[tuple[int, ...], int] = {}
    for e, c in p.terms.items():
        key = e[n:]
        out[key] = out.get(key, 0) + c
    return FPolynomial(n, out)


def variable_from_g_and_F(cartan: CartanMatrix, c, g: Vec, F: FPolynomial) -> MPoly:
    """Reassemble a variable from its g-vector and F-polynomial.

    Each F term y^v contributes x^(B v + g) y^v, with B the initial exchange
    block for c.
    """
    n = cartan.n
    top = principal_part(initial_matrix(cartan, c))
    terms = {}
    for v, coeff in F.terms.items():
        xs = tuple(sum(top[s][t] * v[t] for t in range(n)) + g[s] for s in range(n))
        terms[xs + v] = coeff
    return MPoly(2 * n, terms)


def g_from_F(cartan: CartanMatrix, c, F: FPolynomial, dvec: Vec) -> Vec:
    """g-vector from the F-polynomial and the d-vector.

    g = (componentwise max of -B v over the support of F) - d, with d read in
    simple-root coordinates.  The max is computed twice, over the whole
    support and over the vertices of its convex hull, and the two must agree.
    """
    n = cartan.n
    top = principal_part(initial_matrix(cartan, c))

    def image(vs):
        pts = [tuple(-sum(top[s][t] * v[t] for t in range(n)) for s in range(n))
               for v in vs]
        return tuple(max(p[s] for p in pts) for s in range(n))

    full = image(F.terms.keys())
    hull = image(convex_hull_vertices(F.terms.keys()))
    if full != hull:
        raise InvariantViolation("componentwise max differs between support and hull")
    return tuple(a - b for a, b in zip(full, dvec))


def cluster_key(seed: Seed) -> frozenset:
    """Unordered fingerprint of the cluster (the variable set)."""
    return frozenset((p.nvars, frozenset(p.terms.items())) for p in seed.variables)


def enumerate_seeds(cartan: CartanMatrix, c, cap: int = 100000) -> tuple[Seed, ...]:
    """One seed per cluster, by breadth-first mutation from the initial seed."""
    start = initial_seed(cartan, c)
    found = {cluster_key(start): start}
    queue = deque([start])
    while queue:
        seed = queue.popleft()
        for i in range(1, seed.n + 1):
            nxt = mutate(seed, i)
            key = cluster_key(nxt)
            if key not in found:
                if len(found) >= cap:
                    raise InvariantViolation(f"more than {cap} clusters")
                found[key] = nxt
                queue.append(nxt)
    return tuple(found.values())


def all_cluster_variables(cartan: CartanMatrix, c) -> set[MPoly]:
    out: set[MPoly] = set()
    for seed in enumerate_seeds(cartan, c):
        out.update(seed.variables)
    return out


def _format_monomial(exponents, names) -> str:
    parts = []
    for e, name in zip(exponents, names):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _format_terms(terms, names) -> str:
    if not terms:
        return "0"
    chunks = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        mon = _format_monomial(e, names)
        if mon == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mon
        else:
            body = f"{abs(c)}*{mon}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def variable_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{s}" for s in range(1, n + 1)) + tuple(f"y{s}" for s in range(1, n + 1))


def format_laurent(p: MPoly, n: int) -> str:
    """Render as numerator over a monomial denominator when x exponents dip
    below zero, else as a plain polynomial."""
    if p.is_zero():
        return "0"
    names = variable_names(n)
    d = [max(0, m) for m in d_vector(p, n)]
    if all(a == 0 for a in d):
        return _format_terms(p.terms, names)
    shift = MPoly.monomial(2 * n, tuple(d) + (0,) * n)
    num = p * shift
    den = _format_monomial(tuple(d), names[:n])
    if sum(1 for a in d if a > 0) > 1 or max(d) > 1:
        den = f"({den})"
    return f"({_format_terms(num.terms, names)})/{den}"


def format_fpoly(F: FPolynomial) -> str:
    names = tuple(f"y{s}" for s in range(1, F.n + 1))
    return _format_terms(F.terms, names)
