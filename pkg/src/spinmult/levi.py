"""Inductive multiplicity formula for an arbitrary Levi subalgebra h(c) of sl(n).

The first coordinate of the first block is peeled off: its row sum fixes how
many of the remaining cross-block coordinates (the set J) gain a half, and the
remaining coordinates form a smaller problem for c' = (c_1 - 1, c_2, ..., c_k).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import ValidationError
from .rootsys import Composition, Weight, canonical_blocks, normalize_doubled


@dataclass(frozen=True)
class LeviQuery:
    c: Composition
    doubled_b: Weight

    def __post_init__(self):
        if len(self.doubled_b) != self.c.n:
            raise ValidationError(
                f"weight has length {len(self.doubled_b)} but composition {self.c} sums to {self.c.n}"
            )


class _Memo:
    def __init__(self):
        self._table: dict = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        value = self._table.get(key)
        with self._lock:
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
        return value

    def put(self, key, value):
        with self._lock:
            self._table[key] = value

    def clear(self):
        with self._lock:
            self._table.clear()
            self.hits = self.misses = 0

    def __len__(self):
        return len(self._table)


_memo = _Memo()


def clear_memo() -> None:
    _memo.clear()


def memo_stats() -> dict[str, int]:
    return {"entries": len(_memo), "hits": _memo.hits, "misses": _memo.misses}


def _sigma(parts: Sequence[int]) -> list[int]:
    n = sum(parts)
    return [n - size for size in parts for _ in range(size)]


def _feasible(parts: tuple[int, ...], doubled: tuple[int, ...]) -> bool:
    # row sum a_i = b_i + sigma_i / 2 must be an integer in [0, sigma_i]
    for s, w in zip(_sigma(parts), doubled):
        twice_row = w + s
        if twice_row % 2 or not 0 <= twice_row <= 2 * s:
            return False
    return True


def _mult(parts: tuple[int, ...], doubled: tuple[int, ...]) -> int:
    if len(parts) == 1:
        return 1 if not any(doubled) else 0
    if not _feasible(parts, doubled):
        return 0
    key = (parts, normalize_doubled(parts, doubled))
    cached = _memo.get(key)
    if cached is not None:
        return cached

    n = sum(parts)
    c1 = parts[0]
    k1 = (doubled[0] + n - c1) // 2
    head = doubled[1:c1]
    tail = doubled[c1:]
    rest = tuple(p for p in (c1 - 1,) + parts[1:] if p)
    total = 0
    # the new weight gains +1/2 on J and -1/2 elsewhere among the later blocks
    lowered = [w - 1 for w in tail]
    for J in combinations(range(len(tail)), k1):
        shifted = lowered[:]
        for j in J:
            shifted[j] += 2
        total += _mult(rest, head + tuple(shifted))
    _memo.put(key, total)
    return total


def mult_levi(q: LeviQuery | Composition | Sequence[int], w: Weight | Sequence[int] | None = None) -> int:
    """Multiplicity of the weight in the spin module of h(c).

    Accepts either a ``LeviQuery`` or ``(composition, weight)``; a raw weight
    sequence is read as doubled coordinates. A composition given as a plain
    sequence may list its blocks in any order, and the weight follows that order.
    """
    if not isinstance(q, LeviQuery):
        if w is None:
            raise ValidationError("a weight is required")
        doubled = w.doubled if isinstance(w, Weight) else tuple(w)
        if isinstance(q, Composition):
            q = LeviQuery(q, Weight(doubled))
        else:
            q = LeviQuery(*canonical_blocks(q, doubled))
    return _mult(q.c.parts, q.doubled_b.doubled)
