"""Weight spectra of linear codes: distributions, the full/maximum spectrum
predicates, and support structure checks.

The spectrum of a code is the set of weights of its nonzero codewords. Two
extremes are of interest:

- full (FWS): the spectrum equals the set of weights achievable by arbitrary
  words of that length, i.e. nothing achievable is missed;
- maximum (MWS): the spectrum has the largest size any code of that dimension
  can have, (q**k - 1)/(q - 1) * delta, one value per scalar class of every
  projective line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .constructions import ColumnMultiset
from .errors import NotFWS, NotInitialSegment, SizeOverflow
from .field import DEFAULT_ENUMERATION_BUDGET, GeneratorMatrix, iter_message_codewords
from .weights import WeightFunction, achievable_weights, constants


@dataclass(frozen=True)
class WeightSpectrum:
    """The sorted spectrum and weight distribution of an [n,k]_q code."""

    weights: tuple[int, ...]
    distribution: Mapping[int, int]
    n: int
    k: int
    q: int
    weight_name: str

    def __post_init__(self):
        if list(self.weights) != sorted(set(self.weights)):
            raise ValueError("weights must be strictly increasing")
        if set(self.distribution) != set(self.weights):
            raise ValueError("distribution keys must equal the weight set")
        total = sum(self.distribution.values())
        expected = self.q**self.k - 1
        if total != expected:
            raise ValueError(
                f"distribution counts sum to {total}, expected q**k - 1 = {expected}"
            )

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def max_count(self) -> int:
        """Largest multiplicity of a single weight (the r of the sandwich)."""
        return max(self.distribution.values())


def _spectrum_from_weights(weight_counts, n, k, q, wf) -> WeightSpectrum:
    dist = dict(sorted(weight_counts.items()))
    ws = WeightSpectrum(
        weights=tuple(dist),
        distribution=dist,
        n=n,
        k=k,
        q=q,
        weight_name=wf.name,
    )
    cons = constants(wf)
    ceiling = min(n * cons.m, (q**k - 1) // (q - 1) * cons.delta)
    if ws.size > ceiling:
        raise AssertionError(
            f"spectrum size {ws.size} exceeds the ceiling {ceiling}; "
            "this is a bug"
        )
    return ws


def spectrum(
    G: GeneratorMatrix,
    wf: WeightFunction,
    max_codewords: int = DEFAULT_ENUMERATION_BUDGET,
) -> WeightSpectrum:
    """Exact weight spectrum of the code generated by G.

    Enumerates all q**k messages (budget-guarded) and reports true counts
    over nonzero codewords.
    """
    if wf.q != G.q:
        raise ValueError(f"weight function is over Z_{wf.q}, matrix over Z_{G.q}")
    total = G.q**G.k
    if total > max_codewords:
        raise SizeOverflow(
            f"q**k = {total} codewords exceeds the enumeration budget {max_codewords}"
        )
    table = wf.table
    counts: dict[int, int] = {}
    first = True
    for word in iter_message_codewords(G.row_entries(), G.q):
        if first:
            first = False  # the zero message comes first, skip it
            continue
        w = 0
        for x in word:
            w += table[x]
        counts[w] = counts.get(w, 0) + 1
    return _spectrum_from_weights(counts, G.n, G.k, G.q, wf)


def multiset_spectrum(
    cm: ColumnMultiset,
    wf: WeightFunction,
    max_codewords: int = DEFAULT_ENUMERATION_BUDGET,
) -> WeightSpectrum:
    """Spectrum computed per block: O(q**k * #blocks), independent of n.

    Equals ``spectrum(expand(cm), wf)``; used when block multiplicities make
    the expanded matrix long.
    """
    if wf.q != cm.q:
        raise ValueError(f"weight function is over Z_{wf.q}, multiset over Z_{cm.q}")
    q, k = cm.q, cm.k
    total = q**k
    if total > max_codewords:
        raise SizeOverflow(
            f"q**k = {total} codewords exceeds the enumeration budget {max_codewords}"
        )
    table = wf.table
    cols = [col for col, _ in cm.columns]
    mults = [mult for _, mult in cm.columns]
    counts: dict[int, int] = {}
    first = True
    for dots in iter_message_codewords(_transpose(cols, k), q):
        if first:
            first = False
            continue
        w = 0
        for d, mult in zip(dots, mults):
            w += table[d] * mult
        counts[w] = counts.get(w, 0) + 1
    return _spectrum_from_weights(counts, cm.n, k, q, wf)


def _transpose(cols, k):
    # Rows of the block matrix whose j-th column is block j's column vector,
    # so message enumeration yields the per-block dot products directly.
    return [tuple(col[i] for col in cols) for i in range(k)]


def spectrum_is_fws(ws: WeightSpectrum, wf: WeightFunction) -> bool:
    """Whether the spectrum covers everything achievable at its length.

    The spectrum is always a subset of the achievable set, so cardinality
    equality suffices; for initial-segment weights that is size == m*n.
    """
    cons = constants(wf)
    if cons.initial_segment:
        return ws.size == cons.m * ws.n
    return ws.size == len(achievable_weights(wf, ws.n))


def spectrum_is_mws(ws: WeightSpectrum, wf: WeightFunction) -> bool:
    """Whether the spectrum size meets (q**k - 1)/(q - 1) * delta."""
    cons = constants(wf)
    return ws.size == (ws.q**ws.k - 1) // (ws.q - 1) * cons.delta


def is_fws(
    G: GeneratorMatrix,
    wf: WeightFunction,
    max_codewords: int = DEFAULT_ENUMERATION_BUDGET,
) -> bool:
    return spectrum_is_fws(spectrum(G, wf, max_codewords), wf)


def is_mws(
    G: GeneratorMatrix,
    wf: WeightFunction,
    max_codewords: int = DEFAULT_ENUMERATION_BUDGET,
) -> bool:
    return spectrum_is_mws(spectrum(G, wf, max_codewords), wf)


@dataclass(frozen=True)
class SupportSummary:
    """Support facts about the nonzero codewords of a code."""

    min_support: int
    pairwise_intersecting: bool


def support_properties(
    G: GeneratorMatrix, max_codewords: int = DEFAULT_ENUMERATION_BUDGET
) -> SupportSummary:
    """Minimum support size and whether all supports pairwise intersect.

    Scalar multiples share a support, so one codeword per projective message
    class suffices: messages whose first nonzero digit is 1.
    """
    q, k = G.q, G.k
    if q**k > max_codewords:
        raise SizeOverflow(
            f"q**k = {q**k} codewords exceeds the enumeration budget {max_codewords}"
        )
    rows = G.row_entries()
    supports = []
    for idx, word in enumerate(iter_message_codewords(rows, q)):
        if idx == 0:
            continue
        if not _first_nonzero_digit_is_one(idx, q, k):
            continue
        mask = 0
        for j, x in enumerate(word):
            if x:
                mask |= 1 << j
        supports.append(mask)
    min_support = min(mask.bit_count() for mask in supports)
    pairwise = all(
        supports[a] & supports[b]
        for a in range(len(supports))
        for b in range(a + 1, len(supports))
    )
    return SupportSummary(min_support=min_support, pairwise_intersecting=pairwise)


def _first_nonzero_digit_is_one(index: int, q: int, k: int) -> bool:
    # Messages are enumerated lexicographically, so index is the base-q value
    # of the message digits (most significant first).
    digits = []
    for _ in range(k):
        digits.append(index % q)
        index //= q
    for d in reversed(digits):
        if d:
            return d == 1
    return False


def verify_basis_bound(G: GeneratorMatrix, wf: WeightFunction) -> bool:
    """Basis-support inequality satisfied by every full-spectrum code.

    For each row v taken as the distinguished basis vector, with T the union
    of the other rows' supports and s' the number of support coordinates v
    has outside T, checks s' <= m * |T| + 1. Requires an initial-segment
    weight and an FWS code (NotInitialSegment / NotFWS otherwise).
    """
    cons = constants(wf)
    if not cons.initial_segment:
        raise NotInitialSegment(
            "the basis-support bound is stated for initial-segment weights"
        )
    if not is_fws(G, wf):
        raise NotFWS("the basis-support bound needs a full-weight-spectrum code")
    rows = G.row_entries()
    masks = []
    for row in rows:
        mask = 0
        for j, x in enumerate(row):
            if x:
                mask |= 1 << j
        masks.append(mask)
    for i in range(G.k):
        rest = 0
        for j, mask in enumerate(masks):
            if j != i:
                rest |= mask
        s_prime = (masks[i] & ~rest).bit_count()
        t = rest.bit_count()
        if s_prime > cons.m * t + 1:
            return False
    return True
