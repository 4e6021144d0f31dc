"""Immutable tabulations shared by the oracles, recurrences, and analytics.

A CountTable is a dense sequence of exact integer counts indexed 0..n_max,
stamped with what it tabulates (kind), for which bases, and which engine
produced it.  The stamp is what the disk cache round-trips, and a stamp
mismatch is always a cache miss.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

KIND_F_PQ = "f_pq"
KIND_B_M = "b_m"
KIND_G_SEQ = "g_seq"
KIND_ANTICHAIN = "antichain"
KINDS = (KIND_F_PQ, KIND_B_M, KIND_G_SEQ, KIND_ANTICHAIN)

PRODUCER_ORACLE_DP = "oracle_dp"
PRODUCER_RECURRENCE = "recurrence"
PRODUCERS = (PRODUCER_ORACLE_DP, PRODUCER_RECURRENCE)

# index-0 convention per kind: 1 counts the empty expression/partition,
# the g sequence starts at 0 by definition
_VALUE_AT_ZERO = {KIND_F_PQ: 1, KIND_B_M: 1, KIND_G_SEQ: 0, KIND_ANTICHAIN: 1}


@dataclass(frozen=True)
class CountTable:
    """Exact counts values[0..n_max].

    `p` is 0 for m-ary partition tables, where only q (= m) is meaningful.
    """

    kind: str
    p: int
    q: int
    n_max: int
    producer: str
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")
        if self.producer not in PRODUCERS:
            raise ValueError(f"unknown producer {self.producer!r}")
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if len(self.values) != self.n_max + 1:
            raise ValueError(
                f"table length {len(self.values)} != n_max + 1 = {self.n_max + 1}"
            )
        if self.values[0] != _VALUE_AT_ZERO[self.kind]:
            raise ValueError(
                f"values[0] must be {_VALUE_AT_ZERO[self.kind]} for kind {self.kind}"
            )

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class HSequence:
    """Exact-rational growth-bound sequence h(1..n_max) for an odd q >= 3.

    Seeds h(i) = i for 1 <= i <= q; every later value stays >= 2, which the
    constructor verifies so downstream reciprocals are always safe.  Index 0
    is an unused placeholder.
    """

    q: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.q < 3 or self.q % 2 == 0:
            raise ValueError(f"q must be an odd integer >= 3, got {self.q}")
        if len(self.values) < self.q + 1:
            raise ValueError("sequence must extend at least to index q")
        for i in range(1, self.q + 1):
            if self.values[i] != i:
                raise ValueError(f"h({i}) must equal {i}, got {self.values[i]}")
        for n in range(2, len(self.values)):
            if self.values[n] < 2:
                raise ValueError(f"h({n}) = {self.values[n]} < 2 breaks the invariant")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 1:
            raise IndexError("h is defined for n >= 1")
        return self.values[n]
