"""Diagonal metrics of signature (p,q) and the Gram map.

The metric on an n = p+q dimensional space is diag(+1 x p, -1 x q).  The
Gram polynomial of vectors i, j is the pairing g(e_i, e_j) written out in
the coordinates x[k,a]; the symbols Y[i,j] name these pairings abstractly.
Minors of the symbolic matrix (Y[i,j]) encode the relations that hold
among the pairings when there are more vectors than dimensions.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from . import linalg
from .errors import ForeignVariable, IndexOutOfRange, MissingAssignment, SizeMismatch
from .poly import GRAM, VECTOR, Monomial, Polynomial, Variable, xvar, yvar


@dataclass(frozen=True, slots=True)
class Signature:
    """Counts of +1 and -1 entries of the diagonalized metric."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("signature counts must be non-negative")
        if self.p + self.q < 1:
            raise ValueError("the metric space must have dimension at least 1")

    @property
    def dimension(self) -> int:
        return self.p + self.q

    @property
    def diagonal(self) -> tuple[int, ...]:
        """Metric diagonal: p plus-ones followed by q minus-ones."""
        return (1,) * self.p + (-1,) * self.q

    def metric_matrix(self) -> linalg.Matrix:
        return linalg.diagonal(self.diagonal)

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True, slots=True)
class GramContext:
    """A signature together with the number m of argument vectors.

    Fixes the variable universe: x[k,a] for k <= m, a <= dimension, and
    Y[i,j] for i <= j <= m.
    """

    signature: Signature
    vectors: int

    def __post_init__(self):
        if self.vectors < 1:
            raise ValueError("need at least one argument vector")

    def x_variables(self) -> list[Variable]:
        n = self.signature.dimension
        return [xvar(k, a) for k in range(1, self.vectors + 1) for a in range(1, n + 1)]

    def gram_variables(self) -> list[Variable]:
        return [yvar(i, j) for i in range(1, self.vectors + 1) for j in range(i, self.vectors + 1)]

    def owns(self, v: Variable) -> bool:
        if v.kind == VECTOR:
            return v.first <= self.vectors and v.second <= self.signature.dimension
        return v.second <= self.vectors


def require_vector_polynomial(ctx: GramContext, f: Polynomial) -> None:
    """Raise ForeignVariable unless f uses only x[k,a] of the context."""
    for v in f.variables():
        if v.kind != VECTOR or not ctx.owns(v):
            raise ForeignVariable(f"{v} is not a vector coordinate of the context "
                                  f"(m={ctx.vectors}, n={ctx.signature.dimension})")


def require_gram_polynomial(ctx: GramContext, f: Polynomial) -> None:
    """Raise ForeignVariable unless f uses only Y[i,j] with j <= m."""
    for v in f.variables():
        if v.kind != GRAM or not ctx.owns(v):
            raise ForeignVariable(f"{v} is not a pairing symbol of the context (m={ctx.vectors})")


@functools.lru_cache(maxsize=None)
def _pairing_polynomial(sig: Signature, i: int, j: int) -> Polynomial:
    terms: dict[Monomial, Fraction] = {}
    for a in range(1, sig.dimension + 1):
        sign = 1 if a <= sig.p else -1
        mono = Monomial(((xvar(i, a), 1),)) * Monomial(((xvar(j, a), 1),))
        terms[mono] = terms.get(mono, Fraction(0)) + sign
    return Polynomial(terms)


def gram_polynomial(ctx: GramContext, i: int, j: int) -> Polynomial:
    """The pairing g(e_i, e_j) in coordinates:
    sum over the +1 axes of x[i,a]x[j,a] minus the sum over the -1 axes.

    Symmetric in i and j; indices must lie in 1..m.
    """
    m = ctx.vectors
    if not (1 <= i <= m and 1 <= j <= m):
        raise IndexOutOfRange(f"vector indices ({i},{j}) outside 1..{m}")
    return _pairing_polynomial(ctx.signature, i, j)


def minor_polynomial(rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """Determinant of the symbolic submatrix (Y[r,c]) for r in rows, c in
    cols, expanded as a polynomial in the pairing symbols.

    Alternating in the rows (and columns); duplicate indices give 0.
    """
    if len(rows) != len(cols):
        raise SizeMismatch(f"{len(rows)} rows against {len(cols)} columns")
    if len(rows) == 0:
        raise SizeMismatch("minor needs at least one row and column")
    for idx in (*rows, *cols):
        if idx < 1:
            raise IndexOutOfRange(f"vector index {idx} is not 1-based")
    size = len(rows)
    terms: dict[Monomial, Fraction] = {}
    for perm in permutations(range(size)):
        sign = _permutation_sign(perm)
        mono = Monomial()
        for t in range(size):
            mono = mono * Monomial(((yvar(rows[t], cols[perm[t]]), 1),))
        terms[mono] = terms.get(mono, Fraction(0)) + sign
    return Polynomial(terms)


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@functools.lru_cache(maxsize=None)
def _expand_monomial(sig: Signature, mono: Monomial) -> Polynomial:
    """Expansion of a Y-monomial into vector coordinates under Y[i,j] ->
    gram pairing (x-variables pass through unchanged)."""
    result = Polynomial.constant(1)
    for v, e in mono.powers:
        if v.kind == GRAM:
            result = result * _pairing_polynomial(sig, v.first, v.second) ** e
        else:
            result = result * Polynomial({Monomial(((v, e),)): Fraction(1)})
    return result


def substitute_gram(ctx: GramContext, f: Polynomial) -> Polynomial:
    """Replace every pairing symbol Y[i,j] of f by the corresponding Gram
    polynomial of the context."""
    sig = ctx.signature
    for v in f.variables():
        if v.kind == GRAM and not ctx.owns(v):
            raise ForeignVariable(f"{v} exceeds the {ctx.vectors} vectors of the context")
    acc: dict[Monomial, Fraction] = {}
    for mono, coeff in f.terms.items():
        for m, c in _expand_monomial(sig, mono).terms.items():
            acc[m] = acc.get(m, Fraction(0)) + coeff * c
    return Polynomial(acc)


def minor_vanishes(ctx: GramContext, rows: Sequence[int], cols: Sequence[int]) -> bool:
    """True when the Gram expansion of the symbolic minor is the zero
    polynomial, i.e. the minor is a genuine relation for this context."""
    for idx in (*rows, *cols):
        if not (1 <= idx <= ctx.vectors):
            raise IndexOutOfRange(f"vector index {idx} outside 1..{ctx.vectors}")
    return substitute_gram(ctx, minor_polynomial(rows, cols)).is_zero


def gram_pairs(m: int) -> list[tuple[int, int]]:
    """Index pairs (i,j), i <= j, in lexicographic order."""
    return [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]


def gram_jacobian_rank(ctx: GramContext, point: Mapping[Variable, Fraction | int]) -> int:
    """Exact rank of the Jacobian of all Gram polynomials with respect to
    the vector coordinates, evaluated at the given point.

    Rows are indexed by pairs (i,j) with i <= j, columns by coordinates
    (k,a), both in lexicographic order.  The point must assign every
    x[k,a] of the context.
    """
    sig = ctx.signature
    n, m = sig.dimension, ctx.vectors
    values: dict[tuple[int, int], Fraction] = {}
    for k in range(1, m + 1):
        for a in range(1, n + 1):
            v = xvar(k, a)
            if v not in point:
                raise MissingAssignment(f"no value assigned to {v}")
            values[(k, a)] = Fraction(point[v])
    diag = sig.diagonal
    rows = []
    for i, j in gram_pairs(m):
        row = []
        for k in range(1, m + 1):
            for a in range(1, n + 1):
                entry = Fraction(0)
                if k == i:
                    entry += diag[a - 1] * values[(j, a)]
                if k == j:
                    entry += diag[a - 1] * values[(i, a)]
                row.append(entry)
        rows.append(tuple(row))
    return linalg.rank(tuple(rows))


def random_point(ctx: GramContext, rng: random.Random, magnitude: int = 50) -> dict[Variable, Fraction]:
    """Seeded random rational assignment of every vector coordinate."""
    point = {}
    for v in ctx.x_variables():
        point[v] = Fraction(rng.randint(-magnitude, magnitude), rng.randint(1, magnitude))
    return point


def independence_rank(ctx: GramContext, seed: int, attempts: int = 5) -> int:
    """Best Gram-Jacobian rank over up to ``attempts`` random rational
    points (a special point can undershoot; a single generic point
    certifies the rank)."""
    rng = random.Random(seed)
    target = ctx.vectors * (ctx.vectors + 1) // 2
    best = 0
    for _ in range(max(1, attempts)):
        r = gram_jacobian_rank(ctx, random_point(ctx, rng))
        best = max(best, r)
        if best == target:
            break
    return best
