"""Brute-force ground truth for repetitions in the Fibonacci word.

Deliberately naive: occurrences are found by literal substring equality
over a materialized prefix, with no indexing structures, so the results
are trustworthy enough to adjudicate every fast path.  Quadratic cost per
sweep is fine at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fibword import (
    CapacityError,
    SingularWordDescriptor,
    fib,
    materialize_limit,
    prefix,
    singular_word,
)

__all__ = [
    "FULL_SWEEP_DEFAULT",
    "OccurrenceRecord",
    "ReturnWordDecomposition",
    "distinct_powers",
    "enumerate_powers",
    "find_occurrence",
    "kernel",
    "return_words",
    "verify_return_structure",
]

# Advisory scale for exhaustive sweeps; single lookups may go further.
FULL_SWEEP_DEFAULT = 10**4


@dataclass(frozen=True, order=True)
class OccurrenceRecord:
    """One repetition occurrence: the factor of length power*root_length
    ending at ``end`` consists of ``power`` identical blocks."""

    end: int
    root_length: int
    power: int


@dataclass(frozen=True)
class ReturnWordDecomposition:
    """First few return words of a factor plus the occurrence starts they span."""

    factor: str
    returns: tuple[str, ...]
    occurrence_starts: tuple[int, ...]


def enumerate_powers(n: int, power: int) -> list[OccurrenceRecord]:
    """All power-repetition occurrences ending at positions <= n.

    Deterministic order: end ascending, then root length ascending.  A
    window of length power*L ending at ``end`` is a power iff the window
    equals itself shifted by L, which is the single slice comparison below.
    """
    if power < 2:
        raise ValueError(f"power must be >= 2, got {power}")
    word = prefix(n).encode()
    found: list[OccurrenceRecord] = []
    for end in range(power, n + 1):
        for root in range(1, end // power + 1):
            if word[end - 1] != word[end - 1 - root]:
                continue
            base = end - power * root
            if word[base : end - root] == word[base + root : end]:
                found.append(OccurrenceRecord(end, root, power))
    return found


def distinct_powers(n: int, power: int) -> set[str]:
    """Distinct roots w such that w**power occurs within the length-n prefix."""
    word = prefix(n)
    return {
        word[occ.end - power * occ.root_length : occ.end - (power - 1) * occ.root_length]
        for occ in enumerate_powers(n, power)
    }


def find_occurrence(w: str, p: int = 1) -> int:
    """1-based start of the p-th occurrence of factor w; ValueError if w is
    not a factor of the Fibonacci word.

    Any genuine factor of length L recurs within every window of length a
    small multiple of L, so scanning prefix(4L + 64) suffices; the window
    is raised once before giving up, so a miss never comes from a window
    that was merely too small.
    """
    if not w or set(w) - {"a", "b"}:
        raise ValueError(f"not a word over {{a, b}}: {w!r}")
    if p < 1:
        raise ValueError(f"occurrence index must be >= 1, got {p}")
    for window in (4 * len(w) + 64, 16 * len(w) + 256):
        window = min(window * max(p, 1), materialize_limit())
        text = prefix(window)
        pos = -1
        for _ in range(p):
            pos = text.find(w, pos + 1)
            if pos < 0:
                break
        if pos >= 0:
            return pos + 1
    raise ValueError(f"{w!r} is not a factor (searched the first {window} letters)")


def kernel(w: str) -> SingularWordDescriptor:
    """Maximal singular word occurring in factor w; it must occur exactly once."""
    find_occurrence(w)  # also validates factor-ness
    best: SingularWordDescriptor | None = None
    m = -1
    while fib(m) <= len(w):
        cand = singular_word(m)
        if cand.content in w:
            best = cand
        m += 1
    if best is None:
        raise ValueError(f"no singular word inside {w!r}")
    first = w.find(best.content)
    if w.find(best.content, first + 1) >= 0:
        raise AssertionError(f"kernel {best.content!r} occurs twice in {w!r}")
    return best


def _occurrence_starts(w: str, count: int) -> list[int]:
    """1-based starts of the first ``count`` occurrences of factor w."""
    window = 4 * len(w) + 64
    while True:
        text = prefix(min(window, materialize_limit()))
        starts: list[int] = []
        pos = -1
        while len(starts) < count:
            pos = text.find(w, pos + 1)
            if pos < 0:
                break
            starts.append(pos + 1)
        if len(starts) == count:
            return starts
        if window >= materialize_limit():
            raise CapacityError(
                f"needed {count} occurrences of {w!r} within the first "
                f"{materialize_limit()} letters, found {len(starts)}"
            )
        window *= 4


def return_words(w: str, count: int) -> ReturnWordDecomposition:
    """First ``count`` return words of factor w.

    The p-th return word spans from the start of the p-th occurrence up to
    just before the start of the (p+1)-th.
    """
    if not w or set(w) - {"a", "b"}:
        raise ValueError(f"not a word over {{a, b}}: {w!r}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    starts = _occurrence_starts(w, count + 1)
    text = prefix(starts[-1] - 1)
    rets = tuple(text[starts[i] - 1 : starts[i + 1] - 1] for i in range(count))
    return ReturnWordDecomposition(factor=w, returns=rets, occurrence_starts=tuple(starts))


def verify_return_structure(w: str, count: int) -> bool:
    """True iff the return-word sequence of w, coded over two letters by
    order of first appearance, reproduces the Fibonacci word itself."""
    decomposition = return_words(w, count)
    coding: dict[str, str] = {}
    coded = []
    for ret in decomposition.returns:
        if ret not in coding:
            if len(coding) == 2:
                return False
            coding[ret] = "ab"[len(coding)]
        coded.append(coding[ret])
    return "".join(coded) == prefix(count)
