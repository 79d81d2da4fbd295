"""Exact rational points of the isometry group of a (p,q) metric.

Rational isometries in the identity component come from the Cayley
transform A -> (I-A)(I+A)^{-1} of rational metric-skew matrices; the
finitely many connected components (two for definite signatures, four for
indefinite ones) are reached by fixed diagonal representatives.  Sampling
is fully deterministic in (seed, magnitude): draws come from a Mersenne
Twister seeded with ``seed``, first the component index, then for each
skew basis coefficient a numerator in [-magnitude, magnitude] followed by
a denominator in [1, magnitude].
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, NotAnIsometry, NotSkew, SingularCayley
from .linalg import Matrix
from .metric import Signature


@dataclass(frozen=True, slots=True)
class Isometry:
    """An n x n rational matrix Q with Q^T G Q = G, checked at construction."""

    matrix: Matrix
    signature: Signature

    def __post_init__(self):
        object.__setattr__(self, "matrix", linalg.as_matrix(self.matrix))
        n = self.signature.dimension
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise DimensionMismatch(f"expected a {n}x{n} matrix")
        g = self.signature.metric_matrix()
        if linalg.mat_mul(linalg.mat_mul(linalg.transpose(self.matrix), g), self.matrix) != g:
            raise NotAnIsometry("matrix does not preserve the metric")

    def __matmul__(self, other: "Isometry") -> "Isometry":
        if other.signature != self.signature:
            raise DimensionMismatch("isometries of different signatures")
        return Isometry(linalg.mat_mul(self.matrix, other.matrix), self.signature)

    def inverse(self) -> "Isometry":
        # Q^{-1} = G Q^T G, exact and division-free.
        g = self.signature.metric_matrix()
        return Isometry(linalg.mat_mul(linalg.mat_mul(g, linalg.transpose(self.matrix)), g),
                        self.signature)

    def determinant(self) -> Fraction:
        return linalg.determinant(self.matrix)


@dataclass(frozen=True, slots=True)
class LieAlgebraElement:
    """An n x n rational matrix X with X^T G + G X = 0, checked at construction."""

    matrix: Matrix
    signature: Signature

    def __post_init__(self):
        object.__setattr__(self, "matrix", linalg.as_matrix(self.matrix))
        n = self.signature.dimension
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise DimensionMismatch(f"expected a {n}x{n} matrix")
        g = self.signature.metric_matrix()
        skew = linalg.mat_add(linalg.mat_mul(linalg.transpose(self.matrix), g),
                              linalg.mat_mul(g, self.matrix))
        if any(any(v != 0 for v in row) for row in skew):
            raise NotSkew("matrix is not metric-skew")


def skew_basis(sig: Signature) -> list[LieAlgebraElement]:
    """Deterministic basis of the metric-skew matrices, one element per
    index pair (a,b) with a < b in lexicographic order: +1 at position
    (b,a) and -g_a*g_b at position (a,b)."""
    n = sig.dimension
    diag = sig.diagonal
    basis = []
    for a in range(n):
        for b in range(a + 1, n):
            rows = [[Fraction(0)] * n for _ in range(n)]
            rows[b][a] = Fraction(1)
            rows[a][b] = Fraction(-diag[a] * diag[b])
            basis.append(LieAlgebraElement(tuple(tuple(r) for r in rows), sig))
    return basis


def cayley(element: LieAlgebraElement) -> Isometry:
    """The rational isometry (I-A)(I+A)^{-1}; raises SingularCayley exactly
    when det(I+A) = 0."""
    n = element.signature.dimension
    ident = linalg.identity(n)
    plus = linalg.mat_add(ident, element.matrix)
    inv = linalg.inverse(plus)
    if inv is None:
        raise SingularCayley("det(I + A) = 0")
    minus = linalg.mat_add(ident, linalg.mat_scale(element.matrix, -1))
    return Isometry(linalg.mat_mul(minus, inv), element.signature)


def component_representatives(sig: Signature) -> list[Isometry]:
    """One exact isometry per connected component of the real group.

    Definite signatures have two components, {I, flip of the last axis};
    indefinite ones have four, {I, D_s, D_t, D_s D_t} where D_s flips the
    last +1 axis and D_t the last -1 axis.
    """
    n, p, q = sig.dimension, sig.p, sig.q

    def flip(axis: int) -> Isometry:
        entries = [1] * n
        entries[axis - 1] = -1
        return Isometry(linalg.diagonal(entries), sig)

    ident = Isometry(linalg.identity(n), sig)
    if p == 0 or q == 0:
        return [ident, flip(n)]
    return [ident, flip(p), flip(n), flip(p) @ flip(n)]


def component_label(iso: Isometry) -> tuple[int, ...]:
    """Connected-component invariants: sign of det, and for indefinite
    signatures also the sign of the leading p x p block determinant."""
    sig = iso.signature
    d = 1 if iso.determinant() > 0 else -1
    if sig.p == 0 or sig.q == 0:
        return (d,)
    block = tuple(row[: sig.p] for row in iso.matrix[: sig.p])
    b = linalg.determinant(block)
    return (d, 1 if b > 0 else -1)


_CAYLEY_RETRIES = 16


@functools.lru_cache(maxsize=8192)
def sample_isometry(sig: Signature, seed: int, magnitude: int) -> Isometry:
    """Deterministic pseudo-random rational isometry.

    Draw order (Mersenne Twister seeded with ``seed``): component index
    via randrange, then per skew-basis coefficient a numerator via
    randint(-magnitude, magnitude) and a denominator via
    randint(1, magnitude).  A draw hitting det(I+A) = 0 is redrawn, at
    most 16 times, after which A = 0 is used.
    """
    if magnitude < 1:
        raise ValueError("magnitude must be a positive integer")
    rng = random.Random(seed)
    reps = component_representatives(sig)
    rep = reps[rng.randrange(len(reps))]
    basis = skew_basis(sig)
    n = sig.dimension
    point = None
    for _ in range(_CAYLEY_RETRIES):
        rows = [[Fraction(0)] * n for _ in range(n)]
        for element in basis:
            c = Fraction(rng.randint(-magnitude, magnitude), rng.randint(1, magnitude))
            if c:
                for i in range(n):
                    for j in range(n):
                        if element.matrix[i][j]:
                            rows[i][j] += c * element.matrix[i][j]
        try:
            point = cayley(LieAlgebraElement(tuple(tuple(r) for r in rows), sig))
            break
        except SingularCayley:
            continue
    if point is None:
        point = Isometry(linalg.identity(n), sig)
    return rep @ point


def is_isometry(sig: Signature, matrix: Sequence[Sequence[Fraction | int]]) -> bool:
    """True when the matrix exactly preserves the metric of the signature."""
    m = linalg.as_matrix(matrix)
    n = sig.dimension
    if len(m) != n or any(len(row) != n for row in m):
        raise DimensionMismatch(f"expected a {n}x{n} matrix")
    g = sig.metric_matrix()
    return linalg.mat_mul(linalg.mat_mul(linalg.transpose(m), g), m) == g
