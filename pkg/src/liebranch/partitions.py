"""Counting solutions of linear Diophantine equations with unit weights.

How many ways can a target integer be written as a nonnegative integer
combination of a fixed set of part sizes?  Order does not matter.  The
classic coin-change dynamic program answers this exactly in
O(target * len(parts)) integer operations.
"""

from __future__ import annotations


def count_partitions(target, parts):
    """Number of multisets over ``parts`` summing to ``target``.

    ``parts`` must be a nonempty collection of distinct positive integers;
    ``target`` a nonnegative integer.  Counts are exact (Python ints).
    """
    if not isinstance(target, int) or target < 0:
        raise ValueError(f"target must be a nonnegative integer, got {target!r}")
    parts = list(parts)
    if not parts:
        raise ValueError("parts must be nonempty")
    if any(not isinstance(p, int) or p < 1 for p in parts):
        raise ValueError(f"parts must be positive integers, got {parts!r}")
    if len(set(parts)) != len(parts):
        raise ValueError(f"parts must be distinct, got {parts!r}")
    ways = [0] * (target + 1)
    ways[0] = 1
    for p in parts:
        for value in range(p, target + 1):
            ways[value] += ways[value - p]
    return ways[target]
