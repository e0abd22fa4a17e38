"""Component-wise weight functions over Z_q and their derived constants.

A weight function assigns a nonnegative integer to every symbol, zero exactly
on the zero symbol; the weight of a word is the plain integer sum of its
symbol weights. Built-ins:

- ``hamming``:   1 on every nonzero symbol
- ``lee``:       min(x, q - x), the cyclic distance to zero
- ``manhattan``: the canonical representative x itself

Two constants drive everything downstream. ``m`` is the largest symbol
weight, so m*n caps any word weight. ``delta`` is the number of distinct
scalar-action tuples (w(c*1), ..., w(c*(q-1))) over nonzero scalars c: the
weights of the q-1 nonzero multiples of a fixed word take at most ``delta``
distinct values, which caps the spectrum of a whole line and hence of a code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .checked import checked
from .errors import NotPrime, ParseError, UnknownWeightName
from .field import PrimeField, validate_prime

BUILTIN_NAMES = ("hamming", "lee", "manhattan")


@dataclass(frozen=True)
class WeightFunction:
    """A symbol-weight table over Z_q; table[x] is the weight of symbol x."""

    q: int
    table: tuple[int, ...]
    name: str = "custom"

    def __post_init__(self):
        validate_prime(self.q)
        if len(self.table) != self.q:
            raise ValueError(
                f"weight table has {len(self.table)} entries, expected {self.q}"
            )
        if self.table[0] != 0:
            raise ValueError("the zero symbol must have weight 0")
        for x in range(1, self.q):
            if not isinstance(self.table[x], int) or self.table[x] <= 0:
                raise ValueError(
                    f"symbol {x} has weight {self.table[x]!r}; nonzero symbols "
                    "need positive integer weights"
                )

    def symbol_weight(self, x: int) -> int:
        return self.table[x]


@dataclass(frozen=True)
class WeightConstants:
    """Derived constants of a weight function.

    m: largest symbol weight.
    delta: number of distinct scalar-action tuples, the per-line spectrum cap.
    initial_segment: whether the nonzero symbol weights are exactly {1..m}.
    """

    m: int
    delta: int
    initial_segment: bool


def _builtin_table(name: str, q: int) -> tuple[int, ...]:
    if name == "hamming":
        return (0,) + (1,) * (q - 1)
    if name == "lee":
        return tuple(min(x, q - x) for x in range(q))
    if name == "manhattan":
        return tuple(range(q))
    raise UnknownWeightName(
        f"no built-in weight named {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
    )


def builtin(name: str, q: int | PrimeField) -> WeightFunction:
    """One of the built-in weight functions over Z_q."""
    field = q if isinstance(q, PrimeField) else validate_prime(q)
    return WeightFunction(field.q, _builtin_table(name, field.q), name)


def matching_builtin_name(wf: WeightFunction) -> str | None:
    """The built-in name whose table equals wf's, preferring wf's own name."""
    if wf.name in BUILTIN_NAMES and wf.table == _builtin_table(wf.name, wf.q):
        return wf.name
    for name in BUILTIN_NAMES:
        if wf.table == _builtin_table(name, wf.q):
            return name
    return None


def word_weight(wf: WeightFunction, v) -> int:
    """Weight of a word: the sum of its symbol weights."""
    entries = getattr(v, "entries", v)
    table = wf.table
    return sum(table[x] for x in entries)


def scalar_action_tuple(wf: WeightFunction, c: int) -> tuple[int, ...]:
    """The tuple (w(c*1), ..., w(c*(q-1))) describing how scalar c reweighs."""
    q = wf.q
    return tuple(wf.table[(c * b) % q] for b in range(1, q))


def weight_preserving_scalars(wf: WeightFunction) -> tuple[int, ...]:
    """Nonzero scalars whose action leaves every symbol weight unchanged.

    These form a subgroup of the multiplicative group; multiplying any word by
    one of them never changes its weight, which is what makes column and
    message canonicalization in the search sound.
    """
    identity = scalar_action_tuple(wf, 1)
    return tuple(
        c for c in range(1, wf.q) if scalar_action_tuple(wf, c) == identity
    )


def constants(wf: WeightFunction) -> WeightConstants:
    m = max(wf.table)
    classes = {scalar_action_tuple(wf, c) for c in range(1, wf.q)}
    initial = set(wf.table[1:]) == set(range(1, m + 1))
    return WeightConstants(m=m, delta=len(classes), initial_segment=initial)


def achievable_weights(wf: WeightFunction, n: int) -> tuple[int, ...]:
    """All weights of nonzero words of length n, sorted ascending.

    Dynamic program over coordinates: each coordinate contributes one symbol
    weight. For initial-segment weights this is exactly 1..m*n.
    """
    if n < 1:
        raise ValueError(f"length n={n} must be positive")
    m = max(wf.table)
    checked(m * n, "maximum word weight m*n")
    values = sorted(set(wf.table))
    sums = {0}
    for _ in range(n):
        sums = {s + v for s in sums for v in values}
    sums.discard(0)
    return tuple(sorted(sums))


def delta_witness_multiplicities(wf: WeightFunction) -> tuple[int, ...]:
    """Coordinate multiplicities certifying that delta is attained.

    A word holding symbol b exactly R**(b-1) times, R = m*q + 1, has weight
    sum_b w(c*b) * R**(b-1) under scalar c. The per-symbol weights are digits
    below R, so distinct scalar-action tuples give distinct weights and the
    word's scalar multiples take exactly ``delta`` distinct weight values.
    """
    q = wf.q
    radix = max(wf.table) * q + 1
    mults = []
    power = 1
    for _ in range(1, q):
        mults.append(checked(power, "delta witness multiplicity"))
        power *= radix
    return tuple(mults)


def parse_weight_table(text: str) -> WeightFunction:
    """Parse a custom weight table: one line ``q v1 v2 ... v_{q-1}``.

    v_x is the weight of symbol x; the zero symbol is implicit. Blank lines
    and lines starting with ``#`` are ignored.
    """
    lines = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("weight table is empty: expected a line 'q v1 ... v_{q-1}'")
    if len(lines) > 1:
        raise ParseError(
            f"line {lines[1][0]}: weight table must be a single data line"
        )
    lineno, line = lines[0]
    fields = line.split()
    values = []
    for col, tok in enumerate(fields, start=1):
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(
                f"line {lineno}, column {col}: {tok!r} is not an integer"
            ) from None
    q = values[0]
    try:
        validate_prime(q)
    except NotPrime:
        raise ParseError(
            f"line {lineno}, column 1: alphabet size {q} is not prime"
        ) from None
    if len(values) != q:
        raise ParseError(
            f"line {lineno}: expected {q - 1} symbol weights after q={q}, "
            f"got {len(values) - 1}"
        )
    try:
        return WeightFunction(q, (0,) + tuple(values[1:]), "custom")
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def format_weight_table(wf: WeightFunction) -> str:
    return " ".join(str(x) for x in (wf.q,) + wf.table[1:])
