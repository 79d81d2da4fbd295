"""Deciding isometry invariance of polynomials in several vector arguments.

The exact decision combines two finite checks: the polynomial must be
annihilated by every basis element of the Lie algebra (which settles the
identity component) and fixed by the pullback of every component
representative.  The randomized check instead pulls the polynomial back
along seeded random rational isometries; it can prove non-invariance but
only suggests invariance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import Isometry, LieAlgebraElement, component_representatives, sample_isometry, skew_basis
from .metric import GramContext, require_vector_polynomial
from .poly import Polynomial, xvar


@dataclass(frozen=True, slots=True)
class LieAlgebraWitness:
    """A Lie algebra element whose derivative of the polynomial is nonzero."""

    element: LieAlgebraElement
    derivative: Polynomial


@dataclass(frozen=True, slots=True)
class IsometryWitness:
    """An isometry Q with f(Q v) - f(v) nonzero."""

    isometry: Isometry
    difference: Polynomial


@dataclass(frozen=True, slots=True)
class InvarianceVerdict:
    invariant: bool
    witness: LieAlgebraWitness | IsometryWitness | None = None

    def __post_init__(self):
        if not self.invariant:
            if self.witness is None:
                raise ValueError("a negative verdict requires a witness")
            attached = (self.witness.derivative if isinstance(self.witness, LieAlgebraWitness)
                        else self.witness.difference)
            if attached.is_zero:
                raise ValueError("witness polynomial must be nonzero")


def lie_derivative(ctx: GramContext, element: LieAlgebraElement, f: Polynomial) -> Polynomial:
    """Infinitesimal action of a Lie algebra element on f:
    sum over vectors k and indices a, b of X[a,b] * x[k,b] * df/dx[k,a].

    Vanishes for every basis element exactly when f is invariant under the
    identity component.
    """
    require_vector_polynomial(ctx, f)
    n = ctx.signature.dimension
    x = element.matrix
    result = Polynomial.zero()
    for k in range(1, ctx.vectors + 1):
        for a in range(1, n + 1):
            df = f.partial(xvar(k, a))
            if df.is_zero:
                continue
            linear = Polynomial.zero()
            for b in range(1, n + 1):
                if x[a - 1][b - 1]:
                    linear = linear + x[a - 1][b - 1] * Polynomial.variable(xvar(k, b))
            result = result + df * linear
    return result


def pullback(ctx: GramContext, iso: Isometry, f: Polynomial) -> Polynomial:
    """f composed with the isometry applied to every argument vector,
    i.e. substitute x[k,a] -> sum_b Q[a,b] x[k,b]."""
    require_vector_polynomial(ctx, f)
    n = ctx.signature.dimension
    q = iso.matrix
    images = {}
    for k in range(1, ctx.vectors + 1):
        for a in range(1, n + 1):
            image = Polynomial.zero()
            for b in range(1, n + 1):
                if q[a - 1][b - 1]:
                    image = image + q[a - 1][b - 1] * Polynomial.variable(xvar(k, b))
            images[xvar(k, a)] = image
    return f.substitute(images)


def check_invariant(ctx: GramContext, f: Polynomial) -> InvarianceVerdict:
    """Exact invariance decision.

    Walks the skew basis first, then the component representatives, in
    their deterministic orders, and reports the first failure as a
    witness; invariant means every check passed.
    """
    require_vector_polynomial(ctx, f)
    for element in skew_basis(ctx.signature):
        derivative = lie_derivative(ctx, element, f)
        if not derivative.is_zero:
            return InvarianceVerdict(False, LieAlgebraWitness(element, derivative))
    for rep in component_representatives(ctx.signature):
        moved = pullback(ctx, rep, f)
        if moved != f:
            return InvarianceVerdict(False, IsometryWitness(rep, moved - f))
    return InvarianceVerdict(True)


def randomized_invariance_check(
    ctx: GramContext,
    f: Polynomial,
    trials: int,
    seed: int,
    magnitude: int = 5,
) -> InvarianceVerdict:
    """One-sided randomized invariance test.

    Pulls f back along ``trials`` isometries sampled with derived seeds
    seed, seed+1, ...; the first disagreement is returned as a witness.
    A positive verdict is probabilistic: rational points are dense enough
    that a nonzero difference polynomial is overwhelmingly likely to show
    up, but no proof of invariance is produced.
    """
    if trials < 1:
        raise ValueError("at least one trial is required")
    require_vector_polynomial(ctx, f)
    for t in range(trials):
        iso = sample_isometry(ctx.signature, seed + t, magnitude)
        moved = pullback(ctx, iso, f)
        if moved != f:
            return InvarianceVerdict(False, IsometryWitness(iso, moved - f))
    return InvarianceVerdict(True)
