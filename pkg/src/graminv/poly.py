"""Sparse multivariate polynomials with exact rational coefficients.

Two families of variables share one namespace:

  x[k,a]  coordinate a of argument vector k        (k, a >= 1)
  Y[i,j]  symmetric pairing symbol, i <= j          (i, j >= 1)

Variables are totally ordered (all x before all Y, then lexicographically
by index pair) and monomials are compared in graded lexicographic order
over that variable order.  A polynomial is a canonical mapping from
monomials to nonzero ``Fraction`` coefficients, so two polynomials are
equal exactly when their term mappings coincide.

Everything here is immutable after construction and all operations are
pure, so values can be shared freely between threads.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import IndexOutOfRange, MissingAssignment

Scalar = Union[int, Fraction]

VECTOR = "x"
GRAM = "Y"


@functools.total_ordering
@dataclass(frozen=True, slots=True)
class Variable:
    """A vector coordinate x[k,a] or a pairing symbol Y[i,j].

    Pairing symbols are normalized to ``first <= second`` at construction,
    so Y[2,1] and Y[1,2] are the same variable.
    """

    kind: str
    first: int
    second: int

    def __post_init__(self):
        if self.kind not in (VECTOR, GRAM):
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.first < 1 or self.second < 1:
            raise IndexOutOfRange(f"variable indices are 1-based, got {self}")
        if self.kind == GRAM and self.first > self.second:
            lo, hi = self.second, self.first
            object.__setattr__(self, "first", lo)
            object.__setattr__(self, "second", hi)

    @property
    def is_gram(self) -> bool:
        return self.kind == GRAM

    def _key(self) -> tuple[int, int, int]:
        return (0 if self.kind == VECTOR else 1, self.first, self.second)

    def __lt__(self, other: "Variable") -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        return f"{self.kind}[{self.first},{self.second}]"

    def __repr__(self) -> str:
        return str(self)


def xvar(k: int, a: int) -> Variable:
    """Coordinate a of argument vector k."""
    return Variable(VECTOR, k, a)


def yvar(i: int, j: int) -> Variable:
    """Pairing symbol for vectors i and j (order of i, j irrelevant)."""
    return Variable(GRAM, i, j)


@functools.total_ordering
class Monomial:
    """A product of variable powers, stored as a sorted tuple of
    (variable, exponent) pairs with all exponents positive.  The empty
    tuple is the monomial 1.  Immutable; the hash is precomputed because
    monomials are the dictionary keys of every polynomial."""

    __slots__ = ("powers", "_hash")

    def __init__(self, powers: Iterable[tuple[Variable, int]] = ()):
        powers = tuple(powers)
        for idx, (v, e) in enumerate(powers):
            if e <= 0:
                raise ValueError(f"exponent of {v} must be positive, got {e}")
            if idx > 0 and not powers[idx - 1][0] < v:
                raise ValueError("monomial powers must be sorted by variable")
        self.powers = powers
        self._hash = hash(powers)

    @classmethod
    def of(cls, exponents: Mapping[Variable, int]) -> "Monomial":
        """Canonical monomial from a variable -> exponent mapping
        (zero exponents are dropped)."""
        items = tuple(sorted((v, e) for v, e in exponents.items() if e != 0))
        return cls(items)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.powers == other.powers

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_constant(self) -> bool:
        return not self.powers

    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    def exponent(self, v: Variable) -> int:
        for w, e in self.powers:
            if w == v:
                return e
        return 0

    def variables(self) -> tuple[Variable, ...]:
        return tuple(v for v, _ in self.powers)

    def block_degrees(self, m: int) -> tuple[int, ...]:
        """Degree contributed to each of the m vector blocks.

        x[k,a] adds its exponent to block k; Y[i,j] adds its exponent to
        blocks i and j (twice to block i when i = j).
        """
        degs = [0] * m
        for v, e in self.powers:
            if v.kind == VECTOR:
                if v.first > m:
                    raise IndexOutOfRange(f"{v} exceeds the {m} vector blocks")
                degs[v.first - 1] += e
            else:
                if v.second > m:
                    raise IndexOutOfRange(f"{v} exceeds the {m} vector blocks")
                degs[v.first - 1] += e
                degs[v.second - 1] += e
        return tuple(degs)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return _monomial_product(self, other)

    def __lt__(self, other: "Monomial") -> bool:
        # Graded lexicographic: lower total degree first; amongst equal
        # degrees the monomial with the larger exponent on the earliest
        # variable is the larger monomial.
        da, db = self.degree(), other.degree()
        if da != db:
            return da < db
        a, b = self.powers, other.powers
        i = j = 0
        while i < len(a) and j < len(b):
            va, ea = a[i]
            vb, eb = b[j]
            if va == vb:
                if ea != eb:
                    return ea < eb
                i += 1
                j += 1
            elif va < vb:
                return False  # self has positive power on an earlier variable
            else:
                return True
        if i < len(a):
            return False
        if j < len(b):
            return True
        return False

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.powers)

    def __repr__(self) -> str:
        return str(self)


@functools.lru_cache(maxsize=None)
def _monomial_product(a: Monomial, b: Monomial) -> Monomial:
    # Products repeat heavily (substitution images share supports), so the
    # merge of the two sorted power tuples is worth caching globally.
    merged: list[tuple[Variable, int]] = []
    pa, pb = a.powers, b.powers
    i = j = 0
    while i < len(pa) and j < len(pb):
        if pa[i][0] == pb[j][0]:
            merged.append((pa[i][0], pa[i][1] + pb[j][1]))
            i += 1
            j += 1
        elif pa[i][0] < pb[j][0]:
            merged.append(pa[i])
            i += 1
        else:
            merged.append(pb[j])
            j += 1
    merged.extend(pa[i:])
    merged.extend(pb[j:])
    return Monomial(tuple(merged))


_ONE = Monomial()


class Polynomial:
    """Canonical sparse polynomial: mapping from monomials to nonzero
    rational coefficients.  Instances are immutable; arithmetic returns
    new values."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        canonical: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(mono, Monomial):
                    raise TypeError(f"term key must be a Monomial, got {type(mono).__name__}")
                c = coeff if type(coeff) is Fraction else Fraction(coeff)
                if c != 0:
                    canonical[mono] = c
        self._terms = canonical

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # Internal: trusts the dict to be canonical already.
        p = object.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls({_ONE: Fraction(value)})

    @classmethod
    def variable(cls, v: Variable) -> "Polynomial":
        return cls({Monomial(((v, 1),)): Fraction(1)})

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        """The term mapping.  Treat as read-only."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def leading_monomial(self) -> Monomial | None:
        """Largest monomial in graded lexicographic order, None for 0."""
        return max(self._terms) if self._terms else None

    def total_degree(self) -> int:
        """Largest monomial degree; 0 for the zero polynomial."""
        return max((m.degree() for m in self._terms), default=0)

    def variables(self) -> tuple[Variable, ...]:
        seen = set()
        for mono in self._terms:
            seen.update(mono.variables())
        return tuple(sorted(seen))

    def sorted_terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in descending graded lexicographic order."""
        for mono in sorted(self._terms, reverse=True):
            yield mono, self._terms[mono]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = _coerce(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        get = out.get
        for mono, coeff in other._terms.items():
            prev = get(mono)
            total = coeff if prev is None else prev + coeff
            if total:
                out[mono] = total
            elif prev is not None:
                del out[mono]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return Polynomial._raw({})
            return Polynomial._raw({m: c * v for m, v in self._terms.items()})
        out: dict[Monomial, Fraction] = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _monomial_product(m1, m2)
                c = c1 * c2
                prev = get(m)
                out[m] = c if prev is None else prev + c
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("polynomial exponents must be non-negative")
        result = Polynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == _coerce(other)._terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- calculus and substitution ---------------------------------------

    def partial(self, v: Variable) -> "Polynomial":
        """Formal partial derivative with respect to v."""
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            e = mono.exponent(v)
            if e == 0:
                continue
            lowered = {w: k for w, k in mono.powers}
            lowered[v] = e - 1
            m = Monomial.of(lowered)
            out[m] = out.get(m, Fraction(0)) + coeff * e
        return Polynomial._raw({m: c for m, c in out.items() if c})

    def substitute(self, mapping: Mapping[Variable, "Polynomial | Scalar"]) -> "Polynomial":
        """Image under the ring homomorphism sending each mapped variable
        to its image polynomial; unmapped variables stay fixed."""
        if not mapping:
            return self
        images = {v: _coerce(p) for v, p in mapping.items()}
        pow_cache: dict[tuple[Variable, int], Polynomial] = {}
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            fixed: list[tuple[Variable, int]] = []
            factors: list[Polynomial] = []
            for v, e in mono.powers:
                if v in images:
                    powed = pow_cache.get((v, e))
                    if powed is None:
                        powed = images[v] ** e
                        pow_cache[(v, e)] = powed
                    factors.append(powed)
                else:
                    fixed.append((v, e))
            if factors:
                product = factors[0]
                for factor in factors[1:]:
                    product = product * factor
                base = Monomial(tuple(fixed))
                for m, c in product._terms.items():
                    mm = _monomial_product(base, m)
                    cc = coeff * c
                    prev = acc.get(mm)
                    acc[mm] = cc if prev is None else prev + cc
            else:
                prev = acc.get(mono)
                acc[mono] = coeff if prev is None else prev + coeff
        return Polynomial._raw({m: c for m, c in acc.items() if c})

    def evaluate(self, point: Mapping[Variable, Scalar]) -> Fraction:
        """Exact value at a point assigning every variable of the polynomial."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for v, e in mono.powers:
                if v not in point:
                    raise MissingAssignment(f"no value assigned to {v}")
                value *= Fraction(point[v]) ** e
            total += value
        return total

    # -- grading ----------------------------------------------------------

    def multihomogeneous_parts(self, m: int) -> dict[tuple[int, ...], "Polynomial"]:
        """Split into parts of constant per-block degree over m vector blocks.

        The parts sum to the polynomial; the zero polynomial has no parts.
        """
        buckets: dict[tuple[int, ...], dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            degs = mono.block_degrees(m)
            buckets.setdefault(degs, {})[mono] = coeff
        return {degs: Polynomial._raw(terms) for degs, terms in sorted(buckets.items())}

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for mono, coeff in self.sorted_terms():
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if mono.is_constant:
                body = _fraction_text(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{_fraction_text(mag)}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _coerce(value: "Polynomial | Scalar") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def polynomial_sum(values: Iterable[Polynomial]) -> Polynomial:
    """Sum of many polynomials with a single accumulator pass."""
    acc: dict[Monomial, Fraction] = {}
    for p in values:
        for m, c in p.terms.items():
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
    return Polynomial._raw({m: c for m, c in acc.items() if c})
