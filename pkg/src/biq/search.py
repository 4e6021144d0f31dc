"""Constructive representation searches over the term grid.

find_representation answers: can n be written as a sum of distinct terms
p^a * q^b, all strictly above a threshold?  The depth-first search tries
terms largest-first with suffix-sum and residual-reachability pruning, so an
exhausted search is a proof of non-existence while a node budget keeps
inconclusive searches bounded.

The antichain variants add the divisibility-free condition: no chosen term
divides another.  On the exponent grid (coprime bases) divisibility is
componentwise comparison of exponents, so an antichain is exactly a set
whose beta values strictly decrease as alpha increases.  That ordering
drives both the finder and the exact counter.
"""

from __future__ import annotations

import math
import warnings
from bisect import bisect_right
from dataclasses import dataclass

from .tables import KIND_ANTICHAIN, PRODUCER_ORACLE_DP, CountTable
from .terms import BasePair, Term, enumerate_terms

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET = "budget"

DEFAULT_BUDGET = 10_000_000
ANTICHAIN_COUNT_CAP = 10_000
NAIVE_ANTICHAIN_CAP = 100

BASE_2_3 = BasePair(2, 3)


@dataclass(frozen=True)
class Representation:
    """A set of distinct terms summing exactly to target, ascending by value."""

    base: BasePair
    target: int
    terms: tuple[Term, ...]
    antichain: bool = False


@dataclass(frozen=True)
class SearchResult:
    status: str  # found | exhausted | budget
    representation: Representation | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def exhausted(self) -> bool:
        return self.status == EXHAUSTED


def representation_defects(rep: Representation, min_term: int = 0) -> list[str]:
    """Re-validate a representation independently of how it was found.

    Checks sum, term-value integrity, distinctness, the strict threshold,
    and (when flagged) pairwise non-divisibility by direct integer
    divisibility, not the exponent shortcut the search uses.  Returns
    human-readable defects; empty means valid.
    """
    defects = []
    values = [t.value for t in rep.terms]
    for t in rep.terms:
        if t.alpha < 0 or t.beta < 0:
            defects.append(f"negative exponent in ({t.alpha}, {t.beta})")
        if t.value != rep.base.p**t.alpha * rep.base.q**t.beta:
            defects.append(f"value {t.value} != p^{t.alpha} q^{t.beta}")
    if len(set(values)) != len(values):
        defects.append("duplicate term values")
    if sum(values) != rep.target:
        defects.append(f"sum {sum(values)} != target {rep.target}")
    low = [v for v in values if v <= min_term]
    if low:
        defects.append(f"terms {low} not strictly above threshold {min_term}")
    if rep.antichain:
        for a in values:
            for b in values:
                if a != b and b % a == 0:
                    defects.append(f"{a} divides {b}")
    return defects


def find_representation(
    base: BasePair, n: int, min_term: int = 0, budget: int = DEFAULT_BUDGET
) -> SearchResult:
    """Find a sum of distinct terms equal to n using only values > min_term.

    Deterministic: candidates are tried largest-first and the first complete
    sum is returned.  Status `exhausted` proves no representation exists at
    this threshold; `budget` means the node limit stopped the search first.
    """
    if n < 1:
        raise ValueError(f"target must be >= 1, got {n}")
    if min_term > n:
        raise ValueError(f"min_term = {min_term} exceeds target {n}")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")

    grid = enumerate_terms(base, n)
    start = bisect_right(grid.values, min_term)
    cand = grid.terms[start:][::-1]  # strictly above threshold, largest first
    values = [t.value for t in cand]
    k = len(values)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + values[i]

    chosen: list[int] = []
    nodes = 0
    # stack entries: (candidate index, residual, committed choices at entry)
    stack: list[tuple[int, int, int]] = [(0, n, 0)]
    while stack:
        i, residual, depth = stack.pop()
        del chosen[depth:]
        nodes += 1
        if nodes > budget:
            return SearchResult(BUDGET, None, nodes - 1)
        if residual == 0:
            terms = tuple(sorted((cand[j] for j in chosen), key=lambda t: t.value))
            rep = Representation(base=base, target=n, terms=terms)
            defects = representation_defects(rep, min_term)
            assert not defects, defects
            return SearchResult(FOUND, rep, nodes)
        while i < k and values[i] > residual:
            i += 1  # reachability: jump to the first term that fits
        if i == k or suffix[i] < residual:
            continue  # dead branch: remaining terms cannot reach the residual
        stack.append((i + 1, residual, len(chosen)))  # skip values[i]
        chosen.append(i)
        stack.append((i + 1, residual - values[i], len(chosen)))  # take values[i]
    return SearchResult(EXHAUSTED, None, nodes)


def lemma_threshold(n: int, eps: float = 0.5, c: float = 1.0) -> float:
    """Threshold preset c * n / (log n)^(1+eps) for representability probes."""
    if n < 3:
        raise ValueError(f"threshold preset needs n >= 3, got {n}")
    return c * n / math.log(n) ** (1.0 + eps)


@dataclass(frozen=True)
class ThresholdSweep:
    """Largest integer threshold at which a representation still exists."""

    base: BasePair
    n: int
    max_threshold: int | None  # None: not representable even with all terms
    representation: Representation | None
    budget_hits: int  # searches that ended inconclusively during the sweep


def max_feasible_threshold(
    base: BasePair, n: int, budget: int = DEFAULT_BUDGET
) -> ThresholdSweep:
    """Bisect the largest T such that find_representation(base, n, T) succeeds.

    Feasibility is monotone (raising the threshold only removes candidate
    terms), so bisection is sound.  Budget-limited outcomes are treated as
    infeasible and counted, keeping the reported threshold conservative.
    """
    budget_hits = 0

    def feasible(t: int) -> SearchResult:
        nonlocal budget_hits
        res = find_representation(base, n, min_term=t, budget=budget)
        if res.status == BUDGET:
            budget_hits += 1
        return res

    lo_res = feasible(0)
    if not lo_res.found:
        return ThresholdSweep(base, n, None, None, budget_hits)
    lo, best = 0, lo_res.representation
    hi = n  # value > n is impossible for a term <= n, so n is infeasible
    while hi - lo > 1:
        mid = (lo + hi) // 2
        res = feasible(mid)
        if res.found:
            lo, best = mid, res.representation
        else:
            hi = mid
    return ThresholdSweep(base, n, lo, best, budget_hits)


# ---------------------------------------------------------------------------
# divisibility-antichain variants (natural habitat: base (2, 3))
# ---------------------------------------------------------------------------


def _positions_by_alpha(
    base: BasePair, bound: int, min_term: int
) -> list[list[Term]]:
    """Candidate terms > min_term grouped by alpha (ascending); within a
    group beta descends, so the largest value is tried first."""
    groups: dict[int, list[Term]] = {}
    for t in enumerate_terms(base, bound).terms:
        if t.value > min_term:
            groups.setdefault(t.alpha, []).append(t)
    positions = [sorted(groups[a], key=lambda t: -t.beta) for a in sorted(groups)]
    return positions


def find_antichain_representation(
    n: int,
    base: BasePair = BASE_2_3,
    min_term: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Find a representation of n in which no term divides another.

    Positions are scanned by alpha ascending; each chosen beta must be
    strictly below the previous one, which is equivalent to the antichain
    condition.  Bases other than (2, 3) are searchable but carry no
    completeness guarantee, so they trigger a warning.
    """
    if n < 2:
        raise ValueError(
            f"antichain search needs n >= 2 (n = 1 is the trivial singleton), got {n}"
        )
    if min_term > n:
        raise ValueError(f"min_term = {min_term} exceeds target {n}")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    if base != BASE_2_3:
        warnings.warn(
            f"antichain completeness is only guaranteed for base (2, 3); "
            f"searching ({base.p}, {base.q}) anyway",
            stacklevel=2,
        )

    positions = _positions_by_alpha(base, n, min_term)
    npos = len(positions)
    # loose upper bound on what positions i.. can still contribute
    suffix_max = [0] * (npos + 1)
    for i in range(npos - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + positions[i][0].value
    # betas still available from position i on, for memo-key normalization
    beta_ceiling = [0] * (npos + 1)
    for i in range(npos - 1, -1, -1):
        beta_ceiling[i] = max(beta_ceiling[i + 1], positions[i][0].beta + 1)

    nodes = 0
    failed: set[tuple[int, int, int]] = set()
    chosen: list[Term] = []

    class _OutOfBudget(Exception):
        pass

    def dfs(i: int, residual: int, beta_limit: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _OutOfBudget
        if residual == 0:
            return True
        if i == npos or suffix_max[i] < residual:
            return False
        key = (i, residual, min(beta_limit, beta_ceiling[i]))
        if key in failed:
            return False
        for t in positions[i]:
            if t.beta >= beta_limit or t.value > residual:
                continue
            chosen.append(t)
            if dfs(i + 1, residual - t.value, t.beta):
                return True
            chosen.pop()
        if dfs(i + 1, residual, beta_limit):
            return True
        failed.add(key)
        return False

    unbounded = beta_ceiling[0] + 1
    try:
        ok = dfs(0, n, unbounded)
    except _OutOfBudget:
        return SearchResult(BUDGET, None, nodes - 1)
    if not ok:
        return SearchResult(EXHAUSTED, None, nodes)
    terms = tuple(sorted(chosen, key=lambda t: t.value))
    rep = Representation(base=base, target=n, terms=terms, antichain=True)
    defects = representation_defects(rep, min_term)
    assert not defects, defects
    return SearchResult(FOUND, rep, nodes)


def count_antichain_representations(
    n_max: int, cap: int = ANTICHAIN_COUNT_CAP
) -> CountTable:
    """Exact antichain-representation counts for every n <= n_max, base (2, 3).

    Layered DP over alpha positions processed in reverse: ways[b][r] counts
    selections from the remaining positions summing to r with all chosen
    betas < b.  Index 0 counts the empty selection.  Validated against
    count_antichain_naive on small ranges.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > cap:
        raise ValueError(
            f"antichain counting refuses n_max = {n_max} > cap = {cap}"
        )
    positions = _positions_by_alpha(BASE_2_3, n_max, 0)
    beta_max = max(t.beta for pos in positions for t in pos)
    nb = beta_max + 2  # beta limits 0..beta_max+1; the last means unbounded
    ways = [[0] * (n_max + 1) for _ in range(nb)]
    for b in range(nb):
        ways[b][0] = 1
    for pos in reversed(positions):
        nxt = [row[:] for row in ways]  # skipping this position
        for t in pos:
            source = ways[t.beta]  # after choosing t the limit becomes t.beta
            v = t.value
            for b in range(t.beta + 1, nb):
                row = nxt[b]
                for r in range(v, n_max + 1):
                    c = source[r - v]
                    if c:
                        row[r] += c
        ways = nxt
    return CountTable(
        kind=KIND_ANTICHAIN, p=2, q=3, n_max=n_max,
        producer=PRODUCER_ORACLE_DP, values=tuple(ways[nb - 1]),
    )


def count_antichain_naive(n_max: int, cap: int = NAIVE_ANTICHAIN_CAP) -> tuple[int, ...]:
    """Antichain counts by exhaustive subset search, for cross-checking.

    Walks every divisibility-free subset with sum <= n_max directly, so it is
    exponential and guarded by a small cap.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > cap:
        raise ValueError(f"naive antichain enumeration capped at {cap}")
    values = enumerate_terms(BASE_2_3, n_max).values
    counts = [0] * (n_max + 1)
    counts[0] = 1  # empty selection
    chosen: list[int] = []

    def rec(start: int, total: int) -> None:
        for i in range(start, len(values)):
            v = values[i]
            if total + v > n_max:
                break  # values ascend, nothing later fits either
            if any(v % c == 0 or c % v == 0 for c in chosen):
                continue
            chosen.append(v)
            counts[total + v] += 1
            rec(i + 1, total + v)
            chosen.pop()

    rec(0, 0)
    return tuple(counts)
