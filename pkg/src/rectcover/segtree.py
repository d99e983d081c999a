"""Segment tree with lazy range add and a (max, leftmost argmax) readout.

Used by the sweep-line clique search to maintain overlap depth per
elementary x-interval. The tree covers a fixed array of ``size`` zeros;
``add`` applies a delta to a half-open index range and ``peek_max`` returns
the current global maximum together with the smallest index attaining it.
"""

from __future__ import annotations

__all__ = ["MaxAddSegmentTree"]


class MaxAddSegmentTree:
    """Range add / global max over ``size`` integer cells, all starting at 0.

    Internally a 1-indexed recursive tree with lazy propagation. Each node
    stores the maximum over its span and the leftmost cell index attaining
    it; ties always resolve to the left, so ``peek_max`` is deterministic.
    """

    __slots__ = ("_n", "_mx", "_mi", "_lazy")

    def __init__(self, size: int):
        if size <= 0:
            raise ValueError(f"size must be positive, got {size}")
        self._n = size
        self._mx = [0] * (4 * size)
        self._mi = [0] * (4 * size)
        self._lazy = [0] * (4 * size)
        self._build(1, 0, size)

    @property
    def size(self) -> int:
        return self._n

    def _build(self, node: int, lo: int, hi: int) -> None:
        if hi - lo == 1:
            self._mi[node] = lo
            return
        mid = (lo + hi) // 2
        self._build(2 * node, lo, mid)
        self._build(2 * node + 1, mid, hi)
        self._mi[node] = self._mi[2 * node]

    def add(self, lo: int, hi: int, delta: int) -> None:
        """Add ``delta`` to every cell in the half-open range [lo, hi)."""
        if not (0 <= lo < hi <= self._n):
            raise ValueError(f"bad range [{lo}, {hi}) for size {self._n}")
        self._add(1, 0, self._n, lo, hi, delta)

    def _add(self, node: int, nlo: int, nhi: int, lo: int, hi: int, delta: int) -> None:
        if lo <= nlo and nhi <= hi:
            self._mx[node] += delta
            self._lazy[node] += delta
            return
        self._push(node)
        mid = (nlo + nhi) // 2
        if lo < mid:
            self._add(2 * node, nlo, mid, lo, min(hi, mid), delta)
        if hi > mid:
            self._add(2 * node + 1, mid, nhi, max(lo, mid), hi, delta)
        left, right = 2 * node, 2 * node + 1
        if self._mx[left] >= self._mx[right]:
            self._mx[node] = self._mx[left]
            self._mi[node] = self._mi[left]
        else:
            self._mx[node] = self._mx[right]
            self._mi[node] = self._mi[right]

    def _push(self, node: int) -> None:
        lz = self._lazy[node]
        if lz:
            for child in (2 * node, 2 * node + 1):
                self._mx[child] += lz
                self._lazy[child] += lz
            self._lazy[node] = 0

    def peek_max(self) -> tuple[int, int]:
        """Return (maximum value, leftmost cell index attaining it)."""
        return self._mx[1], self._mi[1]
