"""Maximal parabolic case h = gl(p) x gl(q): 0/1 matrices with prescribed margins.

The multiplicity of mu(alpha, beta) is the number of p x q binary matrices with
row sums alpha and column sums beta, equivalently the number of row tableaux of
shape alpha and content beta.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import ValidationError
from .rootsys import Composition, Partition, Weight, dominance_leq, dual_partition, is_partition, strip_zeros

BinMatrix = tuple[tuple[int, ...], ...]

ENUMERATION_MAX_BOXES = 64


@dataclass(frozen=True)
class MarginPair:
    p: int
    q: int
    alpha: Partition
    beta: Partition

    def __init__(self, p: int, q: int, alpha: Sequence[int], beta: Sequence[int]):
        alpha = strip_zeros(tuple(alpha))
        beta = strip_zeros(tuple(beta))
        if p < 1 or q < 1:
            raise ValidationError(f"block sizes must be positive, got p={p}, q={q}")
        for name, part in (("alpha", alpha), ("beta", beta)):
            if not is_partition(part):
                raise ValidationError(f"{name} is not a partition: {part}")
        if len(alpha) > p or len(beta) > q:
            raise ValidationError(f"alpha needs at most {p} parts and beta at most {q}")
        if sum(alpha) != sum(beta):
            raise ValidationError(f"alpha and beta have different totals {sum(alpha)} != {sum(beta)}")
        if (alpha and alpha[0] > q) or (beta and beta[0] > p):
            raise ValidationError("a row sum exceeds q or a column sum exceeds p")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def m(self) -> int:
        return sum(self.alpha)

    def padded(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (
            self.alpha + (0,) * (self.p - len(self.alpha)),
            self.beta + (0,) * (self.q - len(self.beta)),
        )


def mu_of_margins(mp: MarginPair) -> Weight:
    alpha, beta = mp.padded()
    return Weight([2 * a - mp.q for a in alpha] + [mp.p - 2 * b for b in reversed(beta)])


def canonical_levi_weight(mp: MarginPair) -> tuple[Composition, Weight]:
    """The same weight for the canonical (nondecreasing) block order.

    Swapping the two blocks is a Weyl group element, so multiplicities carry over.
    """
    w = mu_of_margins(mp).doubled
    if mp.p > mp.q:
        w = w[mp.p:] + w[:mp.p]
    return Composition((mp.p, mp.q)), Weight(w)


def margins_of_weight(p: int, q: int, w: Weight | Sequence[int]) -> MarginPair:
    doubled = w.doubled if isinstance(w, Weight) else tuple(w)
    if len(doubled) != p + q:
        raise ValidationError(f"weight has length {len(doubled)}, expected {p + q}")
    first, last = doubled[:p], doubled[p:]
    for block in (first, last):
        if any(x < y for x, y in zip(block, block[1:])):
            raise ValidationError("each block of the weight must be nonincreasing")
    if any((x + q) % 2 for x in first) or any((p - x) % 2 for x in last):
        raise ValidationError("weight does not come from integral margins")
    alpha = [(x + q) // 2 for x in first]
    beta = [(p - x) // 2 for x in reversed(last)]
    if any(not 0 <= a <= q for a in alpha) or any(not 0 <= b <= p for b in beta):
        raise ValidationError("margins out of range")
    return MarginPair(p, q, alpha, beta)


def count_margin_matrices(mp: MarginPair) -> int:
    """Number of binary matrices with the given margins, by a column-by-column DP."""
    alpha, beta = mp.padded()
    return _count(tuple(sorted(alpha, reverse=True)), beta)


def _count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    @lru_cache(maxsize=None)
    def step(j: int, state: tuple[int, ...]) -> int:
        if j == len(cols):
            return 1 if not any(state) else 0
        need = cols[j]
        if sum(state) != sum(cols[j:]):
            return 0
        groups = sorted(Counter(x for x in state if x > 0).items(), reverse=True)
        zeros = sum(1 for x in state if x == 0)
        total = 0

        def choose(idx, left, acc, weight):
            nonlocal total
            if idx == len(groups):
                if left == 0:
                    nxt = tuple(sorted(acc + [0] * zeros, reverse=True))
                    total += weight * step(j + 1, nxt)
                return
            value, g = groups[idx]
            for k in range(min(g, left) + 1):
                choose(idx + 1, left - k, acc + [value] * (g - k) + [value - 1] * k, weight * comb(g, k))

        choose(0, need, [], 1)
        return total

    return step(0, rows)


def vanishing_test(mp: MarginPair) -> bool:
    """True iff the weight occurs, i.e. beta is dominated by the dual of alpha."""
    return dominance_leq(mp.beta, dual_partition(mp.alpha))


@dataclass(frozen=True)
class RowTableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows if r)


def _gate(mp: MarginPair, max_boxes: int | None) -> None:
    bound = ENUMERATION_MAX_BOXES if max_boxes is None else max_boxes
    if mp.m > bound:
        raise ValidationError(f"enumeration limited to {bound} boxes, got {mp.m}")


def row_tableaux(mp: MarginPair, max_boxes: int | None = None) -> list[RowTableau]:
    """All fillings of shape alpha with beta_v copies of v, strictly increasing along rows."""
    _gate(mp, max_boxes)
    alpha, beta = mp.padded()
    residual = list(beta)
    out: list[RowTableau] = []
    rows: list[tuple[int, ...]] = []

    def rec(i):
        if i == mp.p:
            if not any(residual):
                out.append(RowTableau(tuple(rows)))
            return
        # remaining rows must be able to absorb what is left of every value
        if any(r > mp.p - i for r in residual):
            return
        available = [v for v in range(mp.q) if residual[v] > 0]
        for values in combinations(available, alpha[i]):
            for v in values:
                residual[v] -= 1
            rows.append(tuple(v + 1 for v in values))
            rec(i + 1)
            rows.pop()
            for v in values:
                residual[v] += 1

    rec(0)
    return out


def matrix_to_tableau(a: Sequence[Sequence[int]]) -> RowTableau:
    for row in a:
        if any(x not in (0, 1) for x in row):
            raise ValidationError("matrix entries must be 0 or 1")
    return RowTableau(tuple(tuple(j + 1 for j, x in enumerate(row) if x) for row in a))


def tableau_to_matrix(t: RowTableau | Sequence[Sequence[int]], p: int, q: int) -> BinMatrix:
    rows = t.rows if isinstance(t, RowTableau) else tuple(tuple(r) for r in t)
    if len(rows) > p:
        raise ValidationError(f"tableau has {len(rows)} rows, more than p={p}")
    out = []
    for i in range(p):
        row = rows[i] if i < len(rows) else ()
        if any(not 1 <= v <= q for v in row):
            raise ValidationError(f"tableau entry out of range 1..{q}: {row}")
        present = set(row)
        out.append(tuple(1 if j + 1 in present else 0 for j in range(q)))
    return tuple(out)


def margin_matrices(mp: MarginPair, max_boxes: int | None = None) -> list[BinMatrix]:
    return [tableau_to_matrix(t, mp.p, mp.q) for t in row_tableaux(mp, max_boxes)]


def margin_pairs(p: int, q: int) -> list[MarginPair]:
    """Every (alpha, beta) with alpha in a p x q box (<= p parts) and beta with <= q parts <= p."""
    out = []
    for m in range(p * q + 1):
        for alpha in _partitions_in_box(m, p, q):
            for beta in _partitions_in_box(m, q, p):
                out.append(MarginPair(p, q, alpha, beta))
    return out


def _partitions_in_box(total: int, max_parts: int, max_size: int) -> list[Partition]:
    out: list[Partition] = []

    def rec(left, cap, prefix):
        if left == 0:
            out.append(prefix)
            return
        if len(prefix) == max_parts:
            return
        for part in range(min(cap, left), 0, -1):
            rec(left - part, part, prefix + (part,))

    rec(total, max_size, ())
    return out


def format_matrix(a: Sequence[Sequence[int]]) -> str:
    return "\n".join("".join(str(x) for x in row) for row in a)


def parse_matrix(text: str) -> BinMatrix:
    rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if any(set(r) - {"0", "1"} for r in rows):
        raise ValidationError("matrix rows must consist of 0/1 characters")
    if len({len(r) for r in rows}) > 1:
        raise ValidationError("matrix rows have different lengths")
    return tuple(tuple(int(ch) for ch in r) for r in rows)
