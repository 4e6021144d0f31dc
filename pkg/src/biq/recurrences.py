"""Scalable exact tabulations.

For base p = 2 and odd q the count f(n) of distinct-term sums satisfies a
halving recurrence: it is constant except at multiples of q, where it grows
by f(n/q).  The same shape tabulates the m-ary partition numbers for any
m >= 2.  Two auxiliary sequences drive the ratio analysis: the block value
g(n) (an integer sequence with a ceiling recurrence) and the exact-rational
growth bound h(n).  Everything here is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .tables import (
    KIND_B_M,
    KIND_F_PQ,
    KIND_G_SEQ,
    PRODUCER_RECURRENCE,
    CountTable,
    HSequence,
)


def _require_odd_q(q: int) -> None:
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be an odd integer >= 3, got {q}")


def _require_positive(n_max: int) -> None:
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")


def tabulate_f2q(q: int, n_max: int) -> CountTable:
    """Tabulate f(0..n_max) for base (2, q), q odd:

        f(n) = f(n-1)            if q does not divide n,
        f(n) = f(n-1) + f(n/q)   otherwise,

    with f(0) = f(1) = 1.  Exact agreement with the subset-sum oracle is
    enforced by the test suite.
    """
    _require_odd_q(q)
    _require_positive(n_max)
    vals = [1] * (n_max + 1)
    for n in range(q, n_max + 1):
        if n % q:
            vals[n] = vals[n - 1]
        else:
            vals[n] = vals[n - 1] + vals[n // q]
    return CountTable(
        kind=KIND_F_PQ, p=2, q=q, n_max=n_max,
        producer=PRODUCER_RECURRENCE, values=tuple(vals),
    )


def tabulate_mary(m: int, n_max: int) -> CountTable:
    """Tabulate the m-ary partition numbers b_m(0..n_max) by the same
    recurrence shape: b(n) = b(n-1) unless m | n, then b(n-1) + b(n/m)."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    _require_positive(n_max)
    vals = [1] * (n_max + 1)
    for n in range(m, n_max + 1):
        if n % m:
            vals[n] = vals[n - 1]
        else:
            vals[n] = vals[n - 1] + vals[n // m]
    return CountTable(
        kind=KIND_B_M, p=0, q=m, n_max=n_max,
        producer=PRODUCER_RECURRENCE, values=tuple(vals),
    )


def tabulate_g(q: int, n_max: int) -> CountTable:
    """Tabulate the block-value sequence g(0..n_max) for base (2, q):

        g(0) = 0,  g(1) = 1,  g(n+1) = g(n) + g(ceil((n+1)/q)).

    g(n) equals the common value of f on the block [qn-q, qn-1], which the
    verification suite cross-checks against tabulate_f2q.
    """
    _require_odd_q(q)
    _require_positive(n_max)
    vals = [0] * (n_max + 1)
    vals[1] = 1
    for n in range(2, n_max + 1):
        vals[n] = vals[n - 1] + vals[(n + q - 1) // q]
    return CountTable(
        kind=KIND_G_SEQ, p=2, q=q, n_max=n_max,
        producer=PRODUCER_RECURRENCE, values=tuple(vals),
    )


def tabulate_h(q: int, n_max: int) -> HSequence:
    """Tabulate the exact-rational sequence h(1..n_max) for odd q:

        h(i) = i for 1 <= i <= q, then
        h(n+1) = h(n) + 1                          if q does not divide n,
        h(n+1) = h(n) * (1 - 1/h(n/q + 1)) + 1     otherwise.

    Fractions are reduced at every step.  The reciprocal is always safe:
    h never drops below 1, asserted as an internal check.
    """
    _require_odd_q(q)
    if n_max < q:
        raise ValueError(f"n_max must be >= q = {q}, got {n_max}")
    vals = [Fraction(0)] * (n_max + 1)
    for i in range(1, q + 1):
        vals[i] = Fraction(i)
    one = Fraction(1)
    for n in range(q, n_max):
        if n % q:
            vals[n + 1] = vals[n] + 1
        else:
            pivot = vals[n // q + 1]
            assert pivot >= 1, f"h({n // q + 1}) = {pivot} < 1"
            vals[n + 1] = vals[n] * (one - 1 / pivot) + 1
    return HSequence(q=q, values=tuple(vals))
