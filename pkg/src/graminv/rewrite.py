"""Rewriting invariants in pairing coordinates and the relation ideal.

Every invariant polynomial in the vector coordinates is a polynomial in
the pairings Y[i,j]; with more vectors than dimensions the Y expression is
only unique modulo the ideal generated by the (n+1) x (n+1) minors of the
symbolic pairing matrix.  All three operations here (rewriting, membership
certificates, normal forms) come down to exact linear algebra inside one
graded piece at a time: the pairing substitution preserves the per-vector
block degrees, so each block-multihomogeneous component can be handled
independently and the systems stay small.

Linear algebra is done sparsely on polynomials: a triangular basis pivoted
on leading monomials, processed in a fixed graded-lex order so that the
preferred solution (free coordinates zero) is canonical.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable

from . import linalg
from .errors import NoCertificateAtDegree, NotInKernel, NotInvariantError
from .invariance import IsometryWitness, check_invariant, pullback
from .group import Isometry
from .metric import (
    GramContext,
    Signature,
    _expand_monomial,
    minor_polynomial,
    require_gram_polynomial,
    require_vector_polynomial,
    substitute_gram,
)
from .poly import Monomial, Polynomial, polynomial_sum, yvar

MinorId = tuple[tuple[int, ...], tuple[int, ...]]


def enumerate_minors(n: int, m: int) -> list[MinorId]:
    """All (rows, cols) pairs of strictly increasing (n+1)-subsets of 1..m
    with rows <= cols lexicographically (the pairing matrix is symmetric,
    so transposed pairs give equal minors).  Empty when m <= n."""
    subsets = list(itertools.combinations(range(1, m + 1), n + 1))
    return [(rows, cols) for a, rows in enumerate(subsets) for cols in subsets[a:]]


def kernel_test(ctx: GramContext, f: Polynomial) -> bool:
    """True when substituting every Y[i,j] by its Gram polynomial yields
    the zero polynomial, i.e. f is a relation among the pairings."""
    require_gram_polynomial(ctx, f)
    return substitute_gram(ctx, f).is_zero


class _SpanBasis:
    """Triangular basis of a linear span of polynomials.

    Basis entries are pivoted on their leading monomials; reduction
    eliminates every occurrence of a pivot monomial, so remainders are
    canonical (supported on the complement of the span's leading set)
    regardless of insertion order.  When tracking is enabled, every entry
    carries its expression in the originally inserted generators, which
    turns reduction into a solver with free coordinates pinned to zero.
    """

    def __init__(self, track_combinations: bool = True):
        self._by_lead: dict[Monomial, tuple[Polynomial, dict[Hashable, Fraction] | None]] = {}
        self._track = track_combinations

    def reduce(self, f: Polynomial) -> tuple[Polynomial, dict[Hashable, Fraction]]:
        """Fully reduce f modulo the span.

        Returns (remainder, combination) with
        f = remainder + sum(combination[g] * generator_g).
        """
        work = f
        combo: dict[Hashable, Fraction] = {}
        while work:
            hit = None
            for mono in sorted(work.terms, reverse=True):
                if mono in self._by_lead:
                    hit = mono
                    break
            if hit is None:
                break
            basis_poly, basis_combo = self._by_lead[hit]
            factor = work.terms[hit] / basis_poly.terms[hit]
            work = work - factor * basis_poly
            if self._track:
                for label, c in basis_combo.items():
                    combo[label] = combo.get(label, Fraction(0)) + factor * c
        return work, combo

    def insert(self, label: Hashable, f: Polynomial) -> bool:
        """Insert a generator; returns False when it was already in the span."""
        remainder, combo = self.reduce(f)
        if remainder.is_zero:
            return False
        expression = None
        if self._track:
            expression = {label: Fraction(1)}
            for lab, c in combo.items():
                expression[lab] = expression.get(lab, Fraction(0)) - c
        self._by_lead[remainder.leading_monomial()] = (remainder, expression)
        return True


@functools.lru_cache(maxsize=None)
def _pair_monomials(m: int, block_degrees: tuple[int, ...]) -> tuple[Monomial, ...]:
    """All monomials in the pairing symbols Y[i,j] (i <= j <= m) whose
    per-block degrees equal ``block_degrees``, in descending graded-lex
    order."""
    if sum(block_degrees) % 2:
        return ()
    pairs = [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]
    found: list[Monomial] = []
    exponents: dict[tuple[int, int], int] = {}

    def recurse(t: int, remaining: list[int]) -> None:
        if not any(remaining):
            found.append(Monomial.of({yvar(i, j): e for (i, j), e in exponents.items()}))
            return
        if t == len(pairs):
            return
        i, j = pairs[t]
        # Pairs are in lex order, so blocks before i can no longer be reduced.
        if any(remaining[b] for b in range(i - 1)):
            return
        if i == j:
            top = remaining[i - 1] // 2
        else:
            top = min(remaining[i - 1], remaining[j - 1])
        for e in range(top, -1, -1):
            if e:
                exponents[(i, j)] = e
            remaining[i - 1] -= e
            remaining[j - 1] -= e
            recurse(t + 1, remaining)
            remaining[i - 1] += e
            remaining[j - 1] += e
            exponents.pop((i, j), None)

    recurse(0, list(block_degrees))
    return tuple(sorted(found, reverse=True))


@functools.lru_cache(maxsize=None)
def _rewrite_basis(sig: Signature, m: int, block_degrees: tuple[int, ...]) -> _SpanBasis:
    """Triangular basis of the coordinate expansions of all candidate
    Y-monomials of one block multidegree, labels being the monomials."""
    basis = _SpanBasis(track_combinations=True)
    for mono in _pair_monomials(m, block_degrees):
        basis.insert(mono, _expand_monomial(sig, mono))
    return basis


def rewrite_invariant(ctx: GramContext, f: Polynomial) -> Polynomial:
    """Express an invariant polynomial in the pairing symbols.

    Works one block-multihomogeneous part at a time: candidate Y-monomials
    of the matching multidegree are expanded into coordinates and the part
    is solved for exactly.  The solution is canonical (free coordinates
    zero under the fixed monomial order) and is returned in normal form,
    so the output is deterministic even when relations make it non-unique.

    Raises NotInvariantError, with a verifiable witness attached, when f
    is not invariant: any nonzero part of odd total degree is rejected
    immediately (negating every vector flips it), and an inconsistent
    linear system triggers the exact checker for a witness.
    """
    require_vector_polynomial(ctx, f)
    if f.is_zero:
        return Polynomial.zero()
    pieces: list[Polynomial] = []
    for degs, part in f.multihomogeneous_parts(ctx.vectors).items():
        if sum(degs) % 2:
            negation = Isometry(linalg.mat_scale(linalg.identity(ctx.signature.dimension), -1),
                                ctx.signature)
            difference = pullback(ctx, negation, f) - f
            raise NotInvariantError(
                f"part of odd total degree {sum(degs)} cannot be invariant",
                IsometryWitness(negation, difference),
            )
        basis = _rewrite_basis(ctx.signature, ctx.vectors, degs)
        remainder, combo = basis.reduce(part)
        if not remainder.is_zero:
            verdict = check_invariant(ctx, f)
            if verdict.invariant:
                raise RuntimeError("rewrite system inconsistent for an invariant polynomial")
            raise NotInvariantError("polynomial is not invariant", verdict.witness)
        pieces.append(Polynomial({mono: c for mono, c in combo.items()}))
    return normal_form(ctx, polynomial_sum(pieces)).representative


@dataclass(frozen=True)
class MembershipCertificate:
    """Cofactors expressing a relation as a combination of minors:
    sum of combination[(rows, cols)] * minor_polynomial(rows, cols)
    equals the certified polynomial exactly."""

    combination: dict[MinorId, Polynomial]

    def expand(self) -> Polynomial:
        """Re-expand the combination by plain polynomial arithmetic."""
        return polynomial_sum(
            cofactor * minor_polynomial(rows, cols)
            for (rows, cols), cofactor in self.combination.items()
        )


def _minor_block_degrees(minor: MinorId, m: int) -> tuple[int, ...]:
    degs = [0] * m
    for idx in (*minor[0], *minor[1]):
        degs[idx - 1] += 1
    return tuple(degs)


@functools.lru_cache(maxsize=None)
def _certificate_basis(sig: Signature, m: int, block_degrees: tuple[int, ...]) -> _SpanBasis:
    """Triangular basis of cofactor-times-minor products of one block
    multidegree, labels being (minor id, cofactor monomial) pairs."""
    basis = _SpanBasis(track_combinations=True)
    for minor in enumerate_minors(sig.dimension, m):
        minor_poly = minor_polynomial(*minor)
        minor_degs = _minor_block_degrees(minor, m)
        wanted = tuple(d - md for d, md in zip(block_degrees, minor_degs))
        if any(d < 0 for d in wanted):
            continue
        for mono in _pair_monomials(m, wanted):
            basis.insert((minor, mono), Polynomial({mono: Fraction(1)}) * minor_poly)
    return basis


def membership_certificate(ctx: GramContext, f: Polynomial) -> MembershipCertificate:
    """Certify that a relation lies in the ideal generated by the minors.

    The certificate is found per block-multihomogeneous component with
    cofactors of the complementary degree (the ideal is generated in one
    degree, so components are independent).  Raises NotInKernel when the
    Gram expansion of f is nonzero, and NoCertificateAtDegree if a graded
    system is inconsistent, which would be a reportable finding rather
    than a request to search higher degrees.
    """
    if not kernel_test(ctx, f):
        raise NotInKernel("polynomial does not expand to zero")
    cofactors: dict[MinorId, Polynomial] = {}
    for degs, piece in f.multihomogeneous_parts(ctx.vectors).items():
        basis = _certificate_basis(ctx.signature, ctx.vectors, degs)
        remainder, combo = basis.reduce(piece)
        if not remainder.is_zero:
            raise NoCertificateAtDegree(
                f"no cofactor combination at block multidegree {degs}")
        for (minor, mono), c in combo.items():
            term = Polynomial({mono: c})
            cofactors[minor] = cofactors.get(minor, Polynomial.zero()) + term
    return MembershipCertificate({m_id: p for m_id, p in cofactors.items() if not p.is_zero})


@dataclass(frozen=True)
class NormalForm:
    """Canonical coset representative modulo the relation ideal: the
    unique element of f + ideal supported on standard monomials (those
    outside the ideal's leading-term set under graded-lex order)."""

    representative: Polynomial
    context: GramContext


@functools.lru_cache(maxsize=None)
def _ideal_basis(sig: Signature, m: int, block_degrees: tuple[int, ...]) -> _SpanBasis:
    basis = _SpanBasis(track_combinations=False)
    for minor in enumerate_minors(sig.dimension, m):
        minor_poly = minor_polynomial(*minor)
        minor_degs = _minor_block_degrees(minor, m)
        wanted = tuple(d - md for d, md in zip(block_degrees, minor_degs))
        if any(d < 0 for d in wanted):
            continue
        for mono in _pair_monomials(m, wanted):
            basis.insert(None, Polynomial({mono: Fraction(1)}) * minor_poly)
    return basis


def normal_form(ctx: GramContext, f: Polynomial) -> NormalForm:
    """Reduce f to the canonical representative of its coset modulo the
    ideal of minors.  Two polynomials get equal normal forms exactly when
    their difference passes kernel_test."""
    require_gram_polynomial(ctx, f)
    pieces = []
    for degs, piece in f.multihomogeneous_parts(ctx.vectors).items():
        basis = _ideal_basis(ctx.signature, ctx.vectors, degs)
        remainder, _ = basis.reduce(piece)
        pieces.append(remainder)
    return NormalForm(polynomial_sum(pieces), ctx)
