"""Integer partitions with a fixed largest part, and Luschny's Partition
transformation over them.

The transformation maps an argument sequence a_1, a_2, ... (a rule giving a
rational for every index j >= 1) to a triangular array:

    P(n, k)(a) = sum over partitions q of n with largest part q_0 = k of
                 (-1)^(q_0) * prod_{j=0..len(q)-1} C(q_j, q_{j+1}) * a_{j+1}^(q_j)

with the trailing part q_{len(q)} taken as 0.  The three argument families
used by the Ward triangles are provided as named rules.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator

from .exact_arith import binomial

# Rule mapping index j >= 1 to the j-th argument term.
ArgumentRule = Callable[[int], Fraction]


def constant_one(j: int) -> Fraction:
    """a_j = 1: the rule behind the Lah-flavoured triangles."""
    return Fraction(1)


def ward_first_kind(j: int) -> Fraction:
    """a_j = j/(j+1): the rule behind first-kind Ward triangles."""
    return Fraction(j, j + 1)


def ward_second_kind(j: int) -> Fraction:
    """a_j = 1/(j+1): the rule behind second-kind Ward triangles."""
    return Fraction(1, j + 1)


def _bounded_partitions(total: int, cap: int) -> Iterator[tuple[int, ...]]:
    # Partitions of `total` with every part <= cap, in decreasing
    # lexicographic order.
    if total == 0:
        yield ()
        return
    for first in range(min(cap, total), 0, -1):
        for rest in _bounded_partitions(total - first, first):
            yield (first, *rest)


def enumerate_partitions(n: int, k: int) -> list[tuple[int, ...]]:
    """All partitions of n whose largest part is exactly k.

    Parts are weakly decreasing tuples of positive integers, listed in
    decreasing lexicographic order.  Empty for k > n and for k = 0 with
    n > 0; the single empty partition for n = k = 0.
    """
    if n < 0 or k < 0:
        raise ValueError(f"partition bounds must be nonnegative, got ({n}, {k})")
    if n == 0 and k == 0:
        return [()]
    if k == 0 or k > n:
        return []
    return [(k, *rest) for rest in _bounded_partitions(n - k, k)]


def partition_transform(n: int, k: int, rule: ArgumentRule) -> Fraction:
    """Evaluate the Partition transformation at (n, k) for one argument rule.

    Returns 1 for n = k = 0 (boundary convention) and 0 whenever the
    enumeration is empty.
    """
    if n == 0 and k == 0:
        return Fraction(1)
    sign = -1 if k % 2 else 1
    total = Fraction(0)
    for q in enumerate_partitions(n, k):
        parts = (*q, 0)
        term = Fraction(1)
        for j in range(len(q)):
            term *= binomial(parts[j], parts[j + 1]) * rule(j + 1) ** parts[j]
        total += sign * term
    return total
