"""Arithmetic and word kernel for the infinite Fibonacci word.

The Fibonacci word is the fixed point starting with ``a`` of the morphism
a -> ab, b -> a.  Everything downstream (square/cube position sets, block
recursions, closed-form counts) reduces to Fibonacci numbers, golden-ratio
floors and occurrence-position formulas, so this module keeps all of that
bit-exact: arbitrary-precision integers only, never a float.

Positions are 1-based throughout, matching the usual w[i..j] convention
for words.  All functions are pure except for append-only memo caches
(Fibonacci table, materialized word prefix); cache writes are idempotent,
so concurrent readers are safe.
"""

from __future__ import annotations

import os
from bisect import bisect_right
from dataclasses import dataclass
from math import isqrt

__all__ = [
    "CapacityError",
    "DEFAULT_MATERIALIZE_LIMIT",
    "PositionRange",
    "SingularWordDescriptor",
    "fib",
    "fib_le",
    "fib_product_identity_check",
    "last_letter",
    "letter_at",
    "materialize_limit",
    "phi_floor",
    "pos_kernel",
    "pos_letter",
    "prefix",
    "singular_word",
]

DEFAULT_MATERIALIZE_LIMIT = 10**7


class CapacityError(Exception):
    """An operation would materialize more of the word than the cap allows."""


def materialize_limit() -> int:
    """Current word-materialization cap (env FIBSQ_MATERIALIZE_LIMIT overrides)."""
    value = os.environ.get("FIBSQ_MATERIALIZE_LIMIT")
    if value is None:
        return DEFAULT_MATERIALIZE_LIMIT
    return int(value)


@dataclass(frozen=True)
class PositionRange:
    """Inclusive interval [lo, hi] of 1-based positions; empty when hi == lo - 1."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.hi < self.lo - 1:
            raise ValueError(f"bad range [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))


@dataclass(frozen=True)
class SingularWordDescriptor:
    """Singular word of a given order: a palindrome of Fibonacci length."""

    order: int
    content: str
    last_letter_delta: str


# f(-2) = 0, f(-1) = 1, f(m+1) = f(m) + f(m-1); stored shifted by 2.
_FIBS: list[int] = [0, 1, 1, 2]


def fib(m: int) -> int:
    """m-th Fibonacci number with f(-2)=0, f(-1)=1, f(0)=1, f(1)=2, ..."""
    if m < -2:
        raise ValueError(f"fib index must be >= -2, got {m}")
    while len(_FIBS) <= m + 2:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS[m + 2]


def fib_le(x: int) -> int:
    """Largest m with fib(m) <= x, for x >= 1 (duplicates resolve to the larger m)."""
    if x < 1:
        raise ValueError(f"fib_le needs x >= 1, got {x}")
    while _FIBS[-1] <= x:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return bisect_right(_FIBS, x) - 3


def fib_product_identity_check(m: int, k: int) -> bool:
    """Check fib(m)*fib(k) + fib(m-1)*fib(k-1) == fib(m+k+1)."""
    if m < -1 or k < -1:
        raise ValueError("indices must be >= -1")
    return fib(m) * fib(k) + fib(m - 1) * fib(k - 1) == fib(m + k + 1)


# Longest materialized prefix; grown by word concatenation F(k+1) = F(k)F(k-1).
_WORD: list[str] = ["a", "ab"]


def prefix(n: int) -> str:
    """First n letters of the Fibonacci word."""
    if n < 0:
        raise ValueError(f"prefix length must be >= 0, got {n}")
    if n > materialize_limit():
        raise CapacityError(
            f"prefix({n}) exceeds materialization limit {materialize_limit()}"
        )
    while len(_WORD[1]) < n:
        _WORD[0], _WORD[1] = _WORD[1], _WORD[1] + _WORD[0]
    return _WORD[1][:n]


def letter_at(n: int) -> str:
    """Letter at 1-based position n of the Fibonacci word."""
    if n < 1:
        raise ValueError(f"positions are 1-based, got {n}")
    return prefix(n)[n - 1]


def phi_floor(p: int) -> int:
    """floor(phi * p) for phi = (sqrt(5)-1)/2, computed exactly.

    Uses floor(p*(sqrt(5)-1)/2) == floor((isqrt(5*p*p) - p) / 2), valid
    because sqrt(5*p*p) is irrational for p >= 1.  No floating point, so
    the value is correct for arbitrarily large p.
    """
    if p < 1:
        raise ValueError(f"phi_floor needs p >= 1, got {p}")
    return (isqrt(5 * p * p) - p) // 2


def pos_letter(x: str, p: int) -> int:
    """Position of the p-th occurrence of letter x in the Fibonacci word."""
    if p < 1:
        raise ValueError(f"occurrence index must be >= 1, got {p}")
    if x == "a":
        return p + phi_floor(p)
    if x == "b":
        return 2 * p + phi_floor(p)
    raise ValueError(f"letter must be 'a' or 'b', got {x!r}")


def last_letter(m: int) -> str:
    """Last letter of the m-th morphism iterate: 'a' exactly when m is even."""
    if m < -1:
        raise ValueError(f"index must be >= -1, got {m}")
    return "a" if m % 2 == 0 else "b"


def singular_word(m: int) -> SingularWordDescriptor:
    """Singular word of order m >= -1 (palindrome of length fib(m))."""
    if m < -1:
        raise ValueError(f"singular word order must be >= -1, got {m}")
    if m == -1:
        content = "a"
    else:
        # last_letter(m+1) followed by the m-th iterate minus its last letter
        content = last_letter(m + 1) + prefix(fib(m))[:-1]
    return SingularWordDescriptor(order=m, content=content, last_letter_delta=last_letter(m))


def pos_kernel(m: int, p: int) -> int:
    """Ending position of the p-th occurrence of the order-m singular word."""
    if m < -1:
        raise ValueError(f"singular word order must be >= -1, got {m}")
    if p < 1:
        raise ValueError(f"occurrence index must be >= 1, got {p}")
    return p * fib(m + 1) + (phi_floor(p) + 1) * fib(m) - 1
