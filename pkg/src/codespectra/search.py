"""Exhaustive search for the largest weight spectrum at fixed parameters.

The search space is every [n,k]_q code, represented as a size-n multiset of
nonzero columns. Two reductions keep it exact but small:

- columns are taken up to weight-preserving scalars (replacing a column v by
  c*v with w(c*x) = w(x) for all x never changes any codeword's weight), so
  only one representative per scalar orbit is enumerated;
- distinct weights are counted over one message per scalar orbit, since
  messages u and c*u give codewords of equal weight.

Every code has a generator matrix whose columns are orbit representatives,
so the maximum over canonical multisets is the maximum over codes. The walk
itself lives in the kernel (compiled or pure Python); work is partitioned by
the first column index, which makes multi-worker runs deterministic.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from . import kernel
from .constructions import ColumnMultiset
from .errors import BudgetExceeded
from .field import PrimeField, validate_prime
from .weights import (
    WeightFunction,
    achievable_weights,
    constants,
    weight_preserving_scalars,
)
from .bounds import mws_min_length

DEFAULT_SEARCH_BUDGET = 5_000_000
WITNESS_CAP = 16


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one exhaustive search."""

    n: int
    k: int
    q: int
    wf: WeightFunction
    budget: int = DEFAULT_SEARCH_BUDGET
    workers: int = 1

    def __post_init__(self):
        validate_prime(self.q)
        if self.wf.q != self.q:
            raise ValueError(
                f"weight function is over Z_{self.wf.q}, search over Z_{self.q}"
            )
        if self.k < 1 or self.n < self.k:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be positive")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive search at fixed (n, k, q, weight)."""

    n: int
    k: int
    q: int
    weight_name: str
    l_value: int
    witnesses: tuple[ColumnMultiset, ...]
    is_mws_attained: bool
    is_fws_attained: bool
    multisets_examined: int
    total_multisets: int
    exhaustive: bool


def canonical_columns(
    k: int, q: int | PrimeField, wf: WeightFunction
) -> list[tuple[int, ...]]:
    """Lexicographically sorted orbit representatives of nonzero columns.

    Orbits are under multiplication by the weight-preserving scalars of wf;
    each representative is the lexicographically least vector of its orbit.
    """
    q = q.q if isinstance(q, PrimeField) else validate_prime(q).q
    if wf.q != q:
        raise ValueError(f"weight function is over Z_{wf.q}, not Z_{q}")
    scalars = weight_preserving_scalars(wf)
    seen: set[tuple[int, ...]] = set()
    reps: list[tuple[int, ...]] = []
    for vec in product(range(q), repeat=k):
        if not any(vec) or vec in seen:
            continue
        reps.append(vec)
        for c in scalars:
            seen.add(tuple((c * x) % q for x in vec))
    return reps


def _weight_table(cc: list[tuple[int, ...]], wf: WeightFunction) -> np.ndarray:
    # colw[j][i] = symbol weight of the codeword coordinate column j gives
    # message i; canonical messages are the same orbit representatives.
    q = wf.q
    table = wf.table
    out = [
        [table[sum(u * v for u, v in zip(msg, col)) % q] for msg in cc]
        for col in cc
    ]
    return np.array(out, dtype=np.intc)


def _shard_task(args):
    colw, cols, q, n, k, maxw, lo, hi, cap = args
    return kernel.enumerate_shard(colw, cols, q, n, k, maxw, lo, hi, cap)


def _witness_multiset(
    idx_tuple: tuple[int, ...], cc: list[tuple[int, ...]], q: int, k: int
) -> ColumnMultiset:
    chosen = sorted(cc[j] for j in idx_tuple)
    blocks: list[tuple[tuple[int, ...], int]] = []
    for col in chosen:
        if blocks and blocks[-1][0] == col:
            blocks[-1] = (col, blocks[-1][1] + 1)
        else:
            blocks.append((col, 1))
    return ColumnMultiset(q, k, tuple(blocks))


def optimal_spectrum(spec: SearchSpec, *, reverse: bool = False) -> SearchResult:
    """Largest spectrum size over all [n,k]_q codes, by exhaustive search.

    Enumerates every size-n multiset of canonical columns (the full space is
    C(P+n-1, n); BudgetExceeded reports the required count when it is over
    budget), skips rank-deficient ones, and tracks the maximum with up to 16
    witnesses in enumeration order. ``reverse`` walks columns in reverse
    lexicographic order instead; the result must not depend on it.
    """
    n, k, q, wf = spec.n, spec.k, spec.q, spec.wf
    cc = canonical_columns(k, q, wf)
    if reverse:
        cc = list(reversed(cc))
    P = len(cc)
    total = comb(P + n - 1, n)
    if total > spec.budget:
        raise BudgetExceeded(
            f"{total} column multisets exceed the search budget {spec.budget}",
            required=total,
        )
    cons = constants(wf)
    colw = _weight_table(cc, wf)
    cols = np.array(cc, dtype=np.intc)
    maxw = n * cons.m
    if spec.workers == 1 or P == 1:
        shards = [
            kernel.enumerate_shard(colw, cols, q, n, k, maxw, 0, P, WITNESS_CAP)
        ]
    else:
        payloads = [
            (colw, cols, q, n, k, maxw, lo, lo + 1, WITNESS_CAP)
            for lo in range(P)
        ]
        with ProcessPoolExecutor(max_workers=min(spec.workers, P)) as ex:
            shards = list(ex.map(_shard_task, payloads))
    best = max(s[0] for s in shards)
    witness_idx: list[tuple[int, ...]] = []
    evaluated = 0
    for s_best, s_wits, s_eval in shards:
        evaluated += s_eval
        if s_best == best:
            for t in s_wits:
                if len(witness_idx) < WITNESS_CAP:
                    witness_idx.append(t)
    witnesses = tuple(_witness_multiset(t, cc, q, k) for t in witness_idx)
    target = (q**k - 1) // (q - 1) * cons.delta
    return SearchResult(
        n=n,
        k=k,
        q=q,
        weight_name=wf.name,
        l_value=best,
        witnesses=witnesses,
        is_mws_attained=best == target,
        is_fws_attained=best == len(achievable_weights(wf, n)),
        multisets_examined=evaluated,
        total_multisets=total,
        exhaustive=True,
    )


@dataclass(frozen=True)
class MwsLengthScan:
    """Result of scanning lengths upward until a maximum spectrum appears."""

    found_n: int | None
    per_n: tuple[tuple[int, SearchResult], ...]
    budget_exceeded_at: int | None = None


def min_mws_length(
    k: int,
    q: int | PrimeField,
    wf: WeightFunction,
    n_max: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    workers: int = 1,
    *,
    reverse: bool = False,
) -> MwsLengthScan:
    """Least n <= n_max admitting an MWS code, by per-length searches.

    Starts at the proven lower bound (never below k) and walks upward until
    the maximum spectrum size is attained. Spectrum maxima are not assumed
    monotone in n, so every scanned length gets its own exhaustive result.
    On BudgetExceeded the lengths finished so far are returned with the
    offending n marked.
    """
    q = q.q if isinstance(q, PrimeField) else validate_prime(q).q
    report = mws_min_length(wf, k, q)
    start = report.exact if report.exact is not None else report.lower
    start = max(k, start if start is not None else k)
    per_n: list[tuple[int, SearchResult]] = []
    found: int | None = None
    for n in range(start, n_max + 1):
        spec = SearchSpec(n=n, k=k, q=q, wf=wf, budget=budget, workers=workers)
        try:
            res = optimal_spectrum(spec, reverse=reverse)
        except BudgetExceeded:
            return MwsLengthScan(
                found_n=None, per_n=tuple(per_n), budget_exceeded_at=n
            )
        per_n.append((n, res))
        if res.is_mws_attained:
            found = n
            break
    return MwsLengthScan(found_n=found, per_n=tuple(per_n))
