"""Exact counting of squares and cubes in Fibonacci-word prefixes.

Four counting functions over the length-n prefix: distinct squares,
square occurrences, distinct cubes, cube occurrences.  Each has a fast
integer-exact path (closed forms plus block recursions) and every path is
cross-validated against the brute-force oracle in :mod:`fibsq.oracle`.
"""

from .fibword import (
    CapacityError,
    PositionRange,
    SingularWordDescriptor,
    fib,
    letter_at,
    phi_floor,
    pos_kernel,
    pos_letter,
    prefix,
    singular_word,
)

__version__ = "0.1.0"
