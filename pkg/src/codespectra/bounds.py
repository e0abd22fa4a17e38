"""Closed-form bounds and exact values for extremal spectrum questions.

Every report carries a ``source`` string naming the argument that produced
each number, because the answers mix exact values with one-sided bounds and
the caller must see which is which.

Quantities, for a weight function over Z_q and dimension k:

- L(k,q):   the largest spectrum size over all lengths;
- L(n,k,q): the largest spectrum size at a fixed length n;
- M(k,q):   the least length admitting a maximum-spectrum (MWS) code;
- N(k,q):   the largest length admitting a full-spectrum (FWS) code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .checked import checked_geometric_sum, checked_pow
from .errors import NotInitialSegment
from .field import PrimeField, validate_prime
from .weights import WeightFunction, constants, matching_builtin_name


@dataclass(frozen=True)
class BoundReport:
    """One bounded quantity: lower/upper limits, exact value when settled."""

    quantity: str
    lower: int | None
    upper: int | None
    exact: int | None
    source: str

    def __post_init__(self):
        lo = self.lower if self.lower is not None else self.exact
        hi = self.upper if self.upper is not None else self.exact
        if self.exact is not None:
            if (lo is not None and lo > self.exact) or (
                hi is not None and hi < self.exact
            ):
                raise ValueError("exact value lies outside the stated bounds")
        if lo is not None and hi is not None and lo > hi:
            raise ValueError("lower bound exceeds upper bound")


def _as_q(q: int | PrimeField) -> int:
    return q.q if isinstance(q, PrimeField) else validate_prime(q).q


def _projective_count(k: int, q: int) -> int:
    return (checked_pow(q, k, "q**k") - 1) // (q - 1)


def spectrum_ceiling(
    wf: WeightFunction, k: int, q: int | PrimeField, n: int | None = None
) -> BoundReport:
    """Upper limit on the spectrum size L(k,q), or L(n,k,q) when n is given.

    Two ceilings apply: nonzero words of length n weigh between 1 and m*n,
    and the (q**k - 1)/(q - 1) projective lines each contribute at most
    delta distinct values. Exact values are known for the built-ins.
    """
    q = _as_q(q)
    if wf.q != q:
        raise ValueError(f"weight function is over Z_{wf.q}, not Z_{q}")
    cons = constants(wf)
    ceiling = _projective_count(k, q) * cons.delta
    exact = None
    name = matching_builtin_name(wf)
    if name == "hamming":
        exact = _projective_count(k, q)
        src = "one weight per projective line: (q**k - 1)/(q - 1), attained"
    elif name == "lee":
        if q == 2:
            exact = checked_pow(2, k, "2**k") - 1
            src = "at q=2 the Lee weight is the Hamming weight: 2**k - 1, attained"
        else:
            exact = (checked_pow(q, k, "q**k") - 1) // 2
            src = (
                "one weight per sign class: (q**k - 1)/2, attained by the "
                "unit-and-pair-sum construction"
            )
    elif name == "manhattan":
        exact = checked_pow(q, k, "q**k") - 1
        src = (
            "one weight per nonzero message: q**k - 1, attained by the "
            "unit-block construction"
        )
    else:
        src = (
            f"projective-line ceiling (q**k - 1)/(q - 1) * delta = {ceiling}; "
            "attainment unknown for a custom weight"
        )
    if n is None:
        return BoundReport(
            quantity=f"L({wf.name},k={k},q={q})",
            lower=None,
            upper=ceiling,
            exact=exact,
            source=src,
        )
    length_cap = n * cons.m
    upper = min(length_cap, exact if exact is not None else ceiling)
    return BoundReport(
        quantity=f"L({wf.name},n={n},k={k},q={q})",
        lower=None,
        upper=upper,
        exact=None,
        source=(
            f"min of the word-weight range m*n = {length_cap} and the "
            f"dimension ceiling {exact if exact is not None else ceiling}; "
            "attainment at fixed n is a search question"
        ),
    )


def fws_max_length(
    wf: WeightFunction, k: int, q: int | PrimeField
) -> BoundReport:
    """Exact largest length of a full-spectrum code: ((m+1)**k - 1)/m.

    Holds for initial-segment weights; raises NotInitialSegment otherwise.
    """
    q = _as_q(q)
    if wf.q != q:
        raise ValueError(f"weight function is over Z_{wf.q}, not Z_{q}")
    cons = constants(wf)
    if not cons.initial_segment:
        raise NotInitialSegment(
            "the full-spectrum length formula needs symbol weights 1..m"
        )
    m = cons.m
    exact = (checked_pow(m + 1, k, "(m+1)**k") - 1) // m
    return BoundReport(
        quantity=f"N({wf.name},k={k},q={q})",
        lower=exact,
        upper=exact,
        exact=exact,
        source=(
            "complete-sequence block multiplicities reach ((m+1)**k - 1)/m "
            "and longer codes would need a weight above m*n coverage"
        ),
    )


def mws_min_length(
    wf: WeightFunction, k: int, q: int | PrimeField
) -> BoundReport:
    """Bounds on the least length of a maximum-spectrum code.

    Generic lower bound: an MWS code has (q**k - 1)/(q - 1) * delta distinct
    weights, all at most m*n, so n >= ceil of that count over m. The Lee
    weight (q odd) gets a sharper additive term from pairwise-intersecting
    supports, and an upper bound from the unit-and-pair-sum construction;
    the Manhattan value is exact.
    """
    q = _as_q(q)
    if wf.q != q:
        raise ValueError(f"weight function is over Z_{wf.q}, not Z_{q}")
    cons = constants(wf)
    proj = _projective_count(k, q)
    target = proj * cons.delta
    generic_lower = -(-target // cons.m)  # ceil
    name = matching_builtin_name(wf)
    quantity = f"M({wf.name},k={k},q={q})"
    if name == "manhattan":
        exact = proj
        return BoundReport(
            quantity=quantity,
            lower=exact,
            upper=exact,
            exact=exact,
            source=(
                "q**k - 1 distinct weights need n*(q-1) >= q**k - 1, and the "
                "unit-block construction meets that length"
            ),
        )
    if name == "lee":
        if q == 2:
            lower = checked_pow(2, k, "2**k") - 1
            return BoundReport(
                quantity=quantity,
                lower=lower,
                upper=None,
                exact=None,
                source=(
                    "at q=2 the Lee weight is the Hamming weight and 2**k - 1 "
                    "distinct weights need n >= 2**k - 1"
                ),
            )
        lower = proj + -(-2 * (k - 1) // (q - 1))
        alpha = (q + 1) // 2
        terms = k * (k + 1) // 2
        upper = checked_geometric_sum(alpha, terms, "lee construction length")
        src = (
            "lower: weight count plus pairwise-intersecting supports, "
            "n >= (q**k - 1)/(q - 1) + ceil(2(k-1)/(q-1)); upper: length of "
            "the unit-and-pair-sum construction, sum of ((q+1)/2)**i for "
            "i < k(k+1)/2"
        )
        if k >= 3:
            src += (
                "; note: chaining only prefix sums instead of all pair sums "
                "looks shorter but fails to separate sign classes once a "
                "prefix sum vanishes, so the pairwise length is reported"
            )
        return BoundReport(
            quantity=quantity, lower=lower, upper=upper, exact=None, source=src
        )
    if name == "hamming":
        return BoundReport(
            quantity=quantity,
            lower=proj,
            upper=None,
            exact=None,
            source=(
                "(q**k - 1)/(q - 1) distinct weights need n at least that "
                "count; no construction is bundled for the Hamming case"
            ),
        )
    return BoundReport(
        quantity=quantity,
        lower=generic_lower,
        upper=None,
        exact=None,
        source=(
            "generic counting bound: (q**k - 1)/(q - 1) * delta distinct "
            "weights, each at most m*n"
        ),
    )


def sandwich_check(M: int, r: int, m: int, n: int, observed: int) -> bool:
    """Whether an observed spectrum size fits ceil((M-1)/r) <= size <= m*n.

    M is the number of codewords (q**k), r the largest multiplicity of a
    single weight, m the largest symbol weight. Every spectrum must pass.
    """
    if min(M, r, m, n) < 1:
        raise ValueError("sandwich parameters must be positive")
    lower = -(-(M - 1) // r)
    return lower <= observed <= m * n
