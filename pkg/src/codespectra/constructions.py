"""Generator-matrix constructions with extremal weight spectra.

Matrices are described as column multisets: a list of (column, multiplicity)
blocks. The three families built here:

- ``general_fws``: unit-vector blocks whose multiplicities form a complete
  sequence, so the code's weights cover every achievable value (full
  spectrum) at any admissible length.
- ``lee_mws``: unit vectors followed by all pair sums e_i + e_j, block b
  repeated ((q+1)/2)**b times; under the Lee weight the k*(k+1)/2 blocks act
  as digits in base (q+1)/2, separating all message pairs up to sign
  (maximum spectrum).
- ``manhattan_mws``: unit blocks with multiplicities q**(i-1); weights are
  exactly the base-q expansions 1..q**k - 1 (maximum and full spectrum).
"""

from __future__ import annotations

from dataclasses import dataclass

from .checked import checked, checked_geometric_sum, checked_pow
from .errors import NotInitialSegment, NotOdd, OutOfRange, ParseError, RankDeficient, ZeroColumn
from .field import GeneratorMatrix, PrimeField, matrix_rank, validate_prime
from .weights import WeightFunction, builtin, constants


@dataclass(frozen=True)
class ColumnMultiset:
    """A k x n generator matrix given as (column, multiplicity) blocks."""

    q: int
    k: int
    columns: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        validate_prime(self.q)
        if self.k < 1:
            raise ValueError(f"k={self.k} must be positive")
        if not self.columns:
            raise ValueError("a column multiset needs at least one block")
        for col, mult in self.columns:
            if len(col) != self.k:
                raise ValueError(f"column {col} does not have k={self.k} entries")
            if any(not 0 <= x < self.q for x in col):
                raise ValueError(f"column {col} has entries outside Z_{self.q}")
            if all(x == 0 for x in col):
                raise ZeroColumn(f"column {col} is identically zero")
            if mult < 1:
                raise ValueError(f"column {col} has multiplicity {mult} < 1")
        rank = matrix_rank([col for col, _ in self.columns], self.q)
        if rank != self.k:
            raise RankDeficient(
                f"distinct columns span rank {rank} < k = {self.k}"
            )

    @property
    def n(self) -> int:
        return sum(mult for _, mult in self.columns)


def expand(cm: ColumnMultiset) -> GeneratorMatrix:
    """The explicit k x n matrix: each block's column repeated in order."""
    rows = []
    for i in range(cm.k):
        row = []
        for col, mult in cm.columns:
            row.extend([col[i]] * mult)
        rows.append(row)
    return GeneratorMatrix.from_rows(cm.q, rows)


def _unit(k: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(k))


def _as_q(q: int | PrimeField) -> int:
    return q.q if isinstance(q, PrimeField) else validate_prime(q).q


def general_fws(
    k: int, q: int | PrimeField, wf: WeightFunction, n: int
) -> ColumnMultiset:
    """Full-weight-spectrum code of any admissible length n.

    Needs an initial-segment weight (symbol weights cover 1..m). Unit vector
    e_i is repeated a_i times with the greedy rule

        a_1 = 1,  a_i = min(m*(a_1+...+a_{i-1}) + 1, n - assigned - (k - i)),

    which keeps every a_i within the complete-sequence cap m*prefix + 1 (so
    weights cover 1..m*n) while spending the full length n. Admissible range:
    k <= n <= ((m+1)**k - 1)/m.
    """
    q = _as_q(q)
    if k < 1:
        raise OutOfRange(f"k={k} must be positive")
    if wf.q != q:
        raise ValueError(f"weight function is over Z_{wf.q}, not Z_{q}")
    cons = constants(wf)
    if not cons.initial_segment:
        raise NotInitialSegment(
            "symbol weights must cover every value 1..m for this construction"
        )
    m = cons.m
    n_max = (checked_pow(m + 1, k, "(m+1)**k") - 1) // m
    if not k <= n <= n_max:
        raise OutOfRange(
            f"n={n} is outside the admissible range {k}..{n_max} "
            f"for k={k}, m={m}"
        )
    mults = []
    assigned = 0
    for i in range(1, k + 1):
        cap = m * assigned + 1
        take = min(cap, n - assigned - (k - i))
        mults.append(take)
        assigned += take
    blocks = tuple((_unit(k, i), mults[i]) for i in range(k))
    return ColumnMultiset(q, k, blocks)


def lee_mws(k: int, q: int | PrimeField) -> ColumnMultiset:
    """Maximum-Lee-spectrum code: (q**k - 1)/2 distinct weights, q odd.

    Blocks are e_1, ..., e_k followed by the pair sums e_i + e_j for every
    i < j in lexicographic order; block number b (0-based) is repeated
    alpha**b times with alpha = (q+1)/2. Every block's Lee weight is a digit
    below alpha, so two codewords u*G and v*G of equal weight have equal
    digits: |u_i| = |v_i| for every i and |u_i + u_j| = |v_i + v_j| for
    every pair i < j, which forces u = +-v (pairwise sums pin the relative
    signs of all nonzero entries at once; sums over a proper subset of the
    pairs would not, since a vanishing partial sum erases the sign of the
    next entry). Hence the k*(k+1)/2 blocks give all (q**k - 1)/2 sign
    classes distinct weights.
    """
    q = _as_q(q)
    if q == 2:
        raise NotOdd("this construction needs an odd prime alphabet")
    if k < 1:
        raise OutOfRange(f"k={k} must be positive")
    alpha = (q + 1) // 2
    cols = [_unit(k, i) for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            cols.append(tuple(1 if t in (i, j) else 0 for t in range(k)))
    checked_geometric_sum(alpha, len(cols), "lee construction length")
    blocks = tuple(
        (col, checked_pow(alpha, i, "lee block multiplicity"))
        for i, col in enumerate(cols)
    )
    return ColumnMultiset(q, k, blocks)


def manhattan_mws(k: int, q: int | PrimeField) -> ColumnMultiset:
    """Maximum-Manhattan-spectrum code of length (q**k - 1)/(q - 1).

    Unit vector e_i repeated q**(i-1) times; the weight of message u is its
    base-q value sum u_i * q**(i-1), so all q**k - 1 nonzero messages get
    distinct weights and the spectrum is exactly 1..q**k - 1 (also full).
    At q=2 the Manhattan and Hamming weights coincide and this is the usual
    binary construction.
    """
    q = _as_q(q)
    if k < 1:
        raise OutOfRange(f"k={k} must be positive")
    checked_geometric_sum(q, k, "manhattan construction length")
    blocks = tuple(
        (_unit(k, i), checked_pow(q, i, "manhattan block multiplicity"))
        for i in range(k)
    )
    return ColumnMultiset(q, k, blocks)


def manhattan_fws(k: int, q: int | PrimeField, n: int) -> ColumnMultiset:
    """Full-Manhattan-spectrum code of any admissible length.

    The Manhattan weight is an initial segment (values 1..q-1), so this is
    ``general_fws`` with m = q - 1: admissible n is k..(q**k - 1)/(q - 1).
    """
    q = _as_q(q)
    return general_fws(k, q, builtin("manhattan", q), n)


def format_multiset_lines(cm: ColumnMultiset) -> list[str]:
    """One line per block: ``c1 c2 ... ck ^ mult``."""
    return [
        " ".join(str(x) for x in col) + f" ^ {mult}" for col, mult in cm.columns
    ]


def parse_multiset_lines(lines: list[str], q: int) -> ColumnMultiset:
    """Parse ``c1 ... ck ^ mult`` lines back into a ColumnMultiset."""
    q = _as_q(q)
    blocks = []
    k = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "^" not in line:
            raise ParseError(f"line {lineno}: expected 'c1 ... ck ^ mult'")
        left, _, right = line.partition("^")
        toks = left.split()
        try:
            col = tuple(int(t) for t in toks)
            mult = int(right.strip())
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field") from None
        if k is None:
            k = len(col)
        elif len(col) != k:
            raise ParseError(
                f"line {lineno}: column has {len(col)} entries, expected {k}"
            )
        blocks.append((col, mult))
    if not blocks:
        raise ParseError("no column blocks found")
    return ColumnMultiset(q, k, tuple(blocks))
