"""Checked integer helpers.

Sizes derived from the parameters (code lengths, block multiplicities,
enumeration counts) grow geometrically, so every such value is passed through
a signed 64-bit guard instead of silently producing numbers no downstream
consumer could enumerate.
"""

from __future__ import annotations

from .errors import SizeOverflow

INT64_MAX = 2**63 - 1


def checked(value: int, what: str) -> int:
    """Return ``value`` unchanged, raising SizeOverflow beyond 64-bit range."""
    if value > INT64_MAX:
        raise SizeOverflow(f"{what} = {value} exceeds the 64-bit range")
    return value


def checked_pow(base: int, exp: int, what: str) -> int:
    return checked(base**exp, what)


def checked_geometric_sum(ratio: int, terms: int, what: str) -> int:
    """Sum of ratio**i for i in range(terms), guarded term by term."""
    total = 0
    power = 1
    for _ in range(terms):
        total = checked(total + power, what)
        power = checked(power * ratio, what)
    return total
