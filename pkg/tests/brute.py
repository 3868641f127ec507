"""Brute-force counting oracles, independent of every recurrence in the package."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import permutations


def set_partitions(n: int):
    """All partitions of {0..n-1}, as lists of blocks (restricted growth strings)."""
    def rec(i, blocks):
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def cycle_count(perm) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


@lru_cache(maxsize=None)
def partition_counts(n: int) -> tuple[int, ...]:
    """(S(n,0), ..., S(n,n)) by enumerating set partitions."""
    out = [0] * (n + 1)
    for part in set_partitions(n):
        out[len(part)] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def cycle_counts(n: int) -> tuple[int, ...]:
    """Unsigned Stirling numbers of the first kind by counting permutations."""
    out = [0] * (n + 1)
    for perm in permutations(range(n)):
        out[cycle_count(perm)] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def ordered_list_counts(n: int) -> tuple[int, ...]:
    """Lah numbers: partitions into k nonempty linearly ordered blocks."""
    out = [0] * (n + 1)
    for part in set_partitions(n):
        out[len(part)] += math.prod(math.factorial(len(b)) for b in part)
    return tuple(out)
