"""Counting and listing integer partitions into exactly k positive parts.

Counts are exact Python integers and come from the recurrence
``count(n, k) = count(n - 1, k - 1) + count(n - k, k)`` (split on whether the
smallest part equals 1).  A shared memo table backs the module-level
functions; workers that want isolation can hold their own
:class:`PartitionTable`.
"""

from __future__ import annotations


class PartitionTable:
    """Memoized partition counts; read-only sharing is safe once warmed."""

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int], int] = {(0, 0): 1}

    def count(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n or (k == 0 and n > 0):
            return 0
        memo = self._memo
        key = (n, k)
        cached = memo.get(key)
        if cached is not None:
            return cached
        # iterative fill along the recurrence to keep recursion depth flat
        stack = [key]
        while stack:
            top_n, top_k = stack[-1]
            if (top_n, top_k) in memo:
                stack.pop()
                continue
            if top_k <= 0 or top_k > top_n:
                memo[(top_n, top_k)] = 1 if top_n == top_k == 0 else 0
                stack.pop()
                continue
            left = (top_n - 1, top_k - 1)
            right = (top_n - top_k, top_k) if top_n - top_k >= top_k else None
            missing = [p for p in (left, right) if p is not None and p not in memo]
            if missing:
                stack.extend(missing)
                continue
            total = memo[left]
            if right is not None:
                total += memo[right]
            memo[(top_n, top_k)] = total
            stack.pop()
        return memo[key]

    def warm(self, n_max: int) -> None:
        for n in range(n_max + 1):
            for k in range(n + 1):
                self.count(n, k)


_TABLE = PartitionTable()


def partition_count(n: int, k: int) -> int:
    """Number of non-decreasing positive k-tuples summing to n (0 out of range)."""
    return _TABLE.count(n, k)


def warm(n_max: int) -> None:
    """Pre-fill the shared table for all arguments up to ``n_max``."""
    _TABLE.warm(n_max)


def enumerate_partitions(n: int, k: int) -> list[tuple[int, ...]]:
    """All non-decreasing positive k-tuples summing to n, in lexicographic order."""
    if k == 0:
        return [()] if n == 0 else []
    out: list[tuple[int, ...]] = []
    parts: list[int] = []

    def extend(remaining: int, slots: int, minimum: int) -> None:
        if slots == 1:
            if remaining >= minimum:
                out.append(tuple(parts + [remaining]))
            return
        first = minimum
        while first * slots <= remaining:
            parts.append(first)
            extend(remaining - first, slots - 1, first)
            parts.pop()
            first += 1

    extend(n, k, 1)
    return out
