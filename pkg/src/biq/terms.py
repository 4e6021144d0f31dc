"""Term lattice for a coprime base pair (p, q).

The objects of study are the integers p^a * q^b with nonnegative exponents.
For coprime bases the exponent pair determines the value uniquely, so the
terms below a bound form a small grid (polylog-sized in the bound) that the
counting and search modules enumerate exactly.  Exponent ranges are found by
repeated integer multiplication, never by floating-point logarithms; floats
enter only in the explicit density estimate.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass


@dataclass(frozen=True)
class BasePair:
    """Coprime base pair in the canonical orientation q > p >= 2."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2 or self.q < 2:
            raise ValueError(f"bases must be integers >= 2, got ({self.p}, {self.q})")
        if self.q <= self.p:
            raise ValueError(f"canonical orientation is q > p, got ({self.p}, {self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"bases must be coprime, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class Term:
    """A lattice point (alpha, beta) together with its value p^alpha * q^beta."""

    alpha: int
    beta: int
    value: int


@dataclass(frozen=True)
class TermGrid:
    """All terms of a base pair with value <= bound, ascending by value.

    Immutable after construction; `values` is the parallel tuple of term
    values, so membership counts reduce to a binary search.
    """

    base: BasePair
    bound: int
    terms: tuple[Term, ...]
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def count_upto(self, x: int) -> int:
        """|E(x)|: number of terms with value <= x.  Requires x <= bound."""
        if x > self.bound:
            raise ValueError(f"count_upto({x}) beyond grid bound {self.bound}")
        return bisect_right(self.values, x)


def enumerate_terms(base: BasePair, bound: int) -> TermGrid:
    """Enumerate every (alpha, beta) with p^alpha * q^beta <= bound.

    Outer loop over alpha, inner over beta, then one sort by value.  All
    bounds are exact integer comparisons, so powers land on the right side
    of the cut even when a float log would be off by an ulp.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    terms = []
    alpha = 0
    pa = 1
    while pa <= bound:
        beta = 0
        v = pa
        while v <= bound:
            terms.append(Term(alpha, beta, v))
            beta += 1
            v *= base.q
        alpha += 1
        pa *= base.p
    terms.sort(key=lambda t: t.value)
    return TermGrid(
        base=base,
        bound=bound,
        terms=tuple(terms),
        values=tuple(t.value for t in terms),
    )


def grid_cardinality_estimate(base: BasePair, bound: int) -> float:
    """Leading-order size of the term grid: (log B)^2 / (2 log p log q).

    Diagnostic companion to the exact count; the gap is O(log B).
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    lb = math.log(bound)
    return lb * lb / (2.0 * math.log(base.p) * math.log(base.q))


def exact_grid_count(base: BasePair, bound: int) -> int:
    """|E(bound)| as the exact double sum over alpha of (beta range + 1).

    Independent of enumerate_terms (no term list is built); used to
    cross-check the enumeration.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    total = 0
    pa = 1
    while pa <= bound:
        total += floor_log(bound // pa, base.q) + 1
        pa *= base.p
    return total


def floor_log(n: int, base: int) -> int:
    """Largest k with base**k <= n, by repeated multiplication."""
    if n < 1:
        raise ValueError(f"floor_log needs n >= 1, got {n}")
    if base < 2:
        raise ValueError(f"floor_log needs base >= 2, got {base}")
    k = 0
    power = base
    while power <= n:
        k += 1
        power *= base
    return k
