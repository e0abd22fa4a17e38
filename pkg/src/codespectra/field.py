"""Arithmetic over the prime field Z_q: vectors, generator matrices, rank,
and codeword enumeration.

Field elements are canonical integers in ``0..q-1`` and all arithmetic
reduces eagerly, so component weight functions can read representatives
directly. Everything here is exact integer work; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NotPrime, RankDeficient, SizeOverflow, ZeroColumn

# Cap on q**k for full codeword enumeration; callers may pass their own.
DEFAULT_ENUMERATION_BUDGET = 1 << 24


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field Z_q for a prime q; the validated alphabet context."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not _is_prime(self.q):
            raise NotPrime(f"alphabet size {self.q!r} is not a prime number")

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def inverse(self, x: int) -> int:
        """Multiplicative inverse of a nonzero element."""
        return pow(x, -1, self.q)


def validate_prime(q: int) -> PrimeField:
    """Return the field context for q, raising NotPrime otherwise."""
    return PrimeField(q)


@dataclass(frozen=True)
class FieldVector:
    """An immutable vector over Z_q with entries already reduced."""

    q: int
    entries: tuple[int, ...]

    def __post_init__(self):
        for x in self.entries:
            if not 0 <= x < self.q:
                raise ValueError(
                    f"entry {x} is not a canonical element of Z_{self.q}"
                )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


@dataclass(frozen=True)
class GeneratorMatrix:
    """A full-rank k x n generator matrix over Z_q with no zero column."""

    q: int
    rows: tuple[FieldVector, ...]

    def __post_init__(self):
        if not self.rows:
            raise RankDeficient("a generator matrix needs at least one row")
        n = len(self.rows[0])
        for r in self.rows:
            if r.q != self.q:
                raise ValueError("row alphabet does not match the matrix")
            if len(r) != n:
                raise ValueError("rows have inconsistent lengths")
        k = len(self.rows)
        if k > n:
            raise RankDeficient(f"k={k} rows cannot be independent in length {n}")
        entries = self.row_entries()
        for j in range(n):
            if all(entries[i][j] == 0 for i in range(k)):
                raise ZeroColumn(f"column {j} is identically zero")
        r = matrix_rank(entries, self.q)
        if r != k:
            raise RankDeficient(f"rank {r} < k = {k}")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def row_entries(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r.entries for r in self.rows)

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]]) -> "GeneratorMatrix":
        field = validate_prime(q)
        return cls(field.q, tuple(FieldVector(field.q, tuple(r)) for r in rows))


def matrix_rank(rows: Sequence[Sequence[int]], q: int) -> int:
    """Rank of an integer matrix over Z_q by Gaussian elimination.

    Accepts any rectangular candidate (entries are reduced defensively), so it
    can vet matrices before a GeneratorMatrix is built.
    """
    validate_prime(q)
    work = [[x % q for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    for row in work:
        if len(row) != ncols:
            raise ValueError("rows have inconsistent lengths")
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(work)):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = pow(work[rank][col], -1, q)
        work[rank] = [(x * inv) % q for x in work[rank]]
        lead = work[rank]
        for i in range(len(work)):
            f = work[i][col]
            if i != rank and f:
                work[i] = [(a - f * b) % q for a, b in zip(work[i], lead)]
        rank += 1
        if rank == len(work):
            break
    return rank


def iter_message_codewords(
    rows: Sequence[Sequence[int]], q: int
) -> Iterator[tuple[int, ...]]:
    """Yield uG for every message u in lexicographic order, zero first.

    Internal fast path shared by enumeration and spectrum computation; yields
    plain tuples and performs no budget checks.
    """
    k = len(rows)
    n = len(rows[0])

    def rec(i: int, partial: list[int]) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield tuple(partial)
            return
        row = rows[i]
        cur = partial
        for a in range(q):
            yield from rec(i + 1, cur)
            if a < q - 1:
                cur = [(x + y) % q for x, y in zip(cur, row)]

    yield from rec(0, [0] * n)


def enumerate_codewords(
    G: GeneratorMatrix, max_codewords: int = DEFAULT_ENUMERATION_BUDGET
) -> Iterator[FieldVector]:
    """Stream all q**k codewords of G in lexicographic message order.

    The zero codeword comes first. Raises SizeOverflow when q**k exceeds
    ``max_codewords`` (default 2**24) so a typo in k cannot hang the caller.
    """
    total = G.q**G.k
    if total > max_codewords:
        raise SizeOverflow(
            f"q**k = {total} codewords exceeds the enumeration budget "
            f"{max_codewords}"
        )
    for word in iter_message_codewords(G.row_entries(), G.q):
        yield FieldVector(G.q, word)
