"""Ground-truth counting oracles.

Both counters are dense dynamic programs over exact Python integers.  They
exist to validate the fast recurrences on small ranges, so they favour
auditability over speed and refuse ranges that a recurrence should serve.
"""

from __future__ import annotations

from collections.abc import Iterable

from .tables import (
    KIND_B_M,
    KIND_F_PQ,
    PRODUCER_ORACLE_DP,
    CountTable,
)
from .terms import BasePair, enumerate_terms

# memory guard: a dense big-integer array beyond this is almost certainly a
# mistake; the recurrence engine is the scalable path
ORACLE_CAP = 100_000


def _check_range(n_max: int, cap: int) -> None:
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > cap:
        raise ValueError(
            f"oracle refuses n_max = {n_max} > cap = {cap}; "
            "use the recurrence engine or raise the cap explicitly"
        )


def distinct_sum_counts(values: Iterable[int], n_max: int) -> list[int]:
    """0/1-knapsack counting: ways to pick a subset of `values` summing to n.

    Each value is processed once with a descending index sweep; the result is
    independent of the processing order.  Index 0 counts the empty subset.
    """
    dp = [0] * (n_max + 1)
    dp[0] = 1
    for value in values:
        for i in range(n_max, value - 1, -1):
            c = dp[i - value]
            if c:
                dp[i] += c
    return dp


def count_distinct_representations(
    base: BasePair, n_max: int, cap: int = ORACLE_CAP
) -> CountTable:
    """Tabulate, for 0 <= n <= n_max, the number of ways to write n as a sum
    of distinct terms p^a * q^b."""
    _check_range(n_max, cap)
    dp = distinct_sum_counts(enumerate_terms(base, n_max).values, n_max)
    return CountTable(
        kind=KIND_F_PQ,
        p=base.p,
        q=base.q,
        n_max=n_max,
        producer=PRODUCER_ORACLE_DP,
        values=tuple(dp),
    )


def count_mary_partitions_oracle(
    m: int, n_max: int, cap: int = ORACLE_CAP
) -> CountTable:
    """Tabulate b_m(0..n_max): partitions of n into powers of m, parts repeatable."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    _check_range(n_max, cap)
    dp = [0] * (n_max + 1)
    dp[0] = 1
    power = 1
    while power <= n_max:
        for i in range(power, n_max + 1):
            dp[i] += dp[i - power]
        power *= m
    return CountTable(
        kind=KIND_B_M,
        p=0,
        q=m,
        n_max=n_max,
        producer=PRODUCER_ORACLE_DP,
        values=tuple(dp),
    )
