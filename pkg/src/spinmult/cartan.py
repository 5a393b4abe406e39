"""The Cartan case h = t of sl(n): dominant spin weights as partitions of C(n,2).

``N(lambda)`` is the multiplicity of the dominant weight attached to lambda. Two
independent routes compute it: the marking recursion (peel n-1 boxes made of
one whole row plus rightmost boxes of other rows) and a weighted sum over spin
tableaux.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, isqrt
from typing import Iterable, Sequence

from .errors import ValidationError
from .rootsys import Partition, Weight, dominance_leq, is_partition, strip_zeros


def _n_from_total(total: int) -> int | None:
    if total == 0:
        return 1
    n = (1 + isqrt(1 + 8 * total)) // 2
    return n if n * (n - 1) // 2 == total else None


@dataclass(frozen=True)
class SpinPartition:
    """A partition of C(n,2) with at most n parts, stored padded to length n."""

    parts: tuple[int, ...]
    n: int

    def __init__(self, parts: Iterable[int], n: int | None = None):
        parts = strip_zeros(tuple(int(x) for x in parts))
        if not is_partition(parts):
            raise ValidationError(f"not a partition: {parts}")
        total = sum(parts)
        if n is None:
            n = _n_from_total(total)
            if n is None:
                raise ValidationError(f"{total} is not a binomial coefficient C(n,2)")
        if n < 1 or total != n * (n - 1) // 2:
            raise ValidationError(f"partition {parts} has total {total}, expected C({n},2)")
        if len(parts) > n:
            raise ValidationError(f"partition {parts} has more than {n} parts")
        object.__setattr__(self, "parts", parts + (0,) * (n - len(parts)))
        object.__setattr__(self, "n", n)

    @property
    def stripped(self) -> Partition:
        return strip_zeros(self.parts)

    def in_P(self) -> bool:
        return dominance_leq(self.parts, staircase(self.n))

    def __str__(self) -> str:
        return ",".join(map(str, self.stripped)) or "0"


def _coerce(lp, n: int | None = None) -> SpinPartition:
    return lp if isinstance(lp, SpinPartition) else SpinPartition(lp, n)


def staircase(n: int) -> Partition:
    return tuple(range(n - 1, -1, -1))


def spin_partitions(n: int) -> list[SpinPartition]:
    """All of Part(C(n,2); n), in descending lexicographic order."""
    total = n * (n - 1) // 2
    out: list[SpinPartition] = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(SpinPartition(prefix, n))
            return
        if len(prefix) == n:
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(total, total, ())
    return out


def p_partitions(n: int) -> list[SpinPartition]:
    """The partitions dominated by the staircase, i.e. the dominant spin weights."""
    return [lp for lp in spin_partitions(n) if lp.in_P()]


def mu_of_partition(lp) -> Weight:
    lp = _coerce(lp)
    return Weight(2 * x - (lp.n - 1) for x in lp.parts)


def partition_of_dominant_weight(n: int, w: Weight | Sequence[int]) -> SpinPartition:
    doubled = w.doubled if isinstance(w, Weight) else tuple(w)
    if len(doubled) != n:
        raise ValidationError(f"weight has length {len(doubled)}, expected {n}")
    if any(x < y for x, y in zip(doubled, doubled[1:])):
        raise ValidationError("weight is not dominant (coordinates must be nonincreasing)")
    parts = []
    for x in doubled:
        twice = x + n - 1
        if twice % 2 or not 0 <= twice <= 2 * (n - 1):
            raise ValidationError(f"coordinate {x}/2 does not give an integral row length in [0, {n - 1}]")
        parts.append(twice // 2)
    return SpinPartition(parts, n)


# -- marking recursion ---------------------------------------------------------

def markings(lp, p: int) -> list[tuple[SpinPartition, int]]:
    """The p-markings of lambda grouped by the partition left after removing them.

    Returns ``(lambda - beta, count)`` pairs, largest partition first.
    """
    lp = _coerce(lp)
    n = lp.n
    if not 1 <= p <= n:
        raise ValidationError(f"row index p={p} out of range 1..{n}")
    if n == 1:
        return []
    grouped = _grouped_markings(lp.parts, p - 1)
    return [(SpinPartition(parts, n - 1), count) for parts, count in grouped]


@lru_cache(maxsize=None)
def _grouped_markings(parts: tuple[int, ...], row: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    n = len(parts)
    need = n - 1 - parts[row]
    if need < 0:
        return ()
    others = [x for i, x in enumerate(parts) if i != row]
    zeros = sum(1 for x in others if x == 0)
    sizes = sorted(Counter(x for x in others if x > 0).items(), reverse=True)
    result: Counter = Counter()

    def rec(idx, left, chosen, weight):
        if idx == len(sizes):
            if left == 0:
                rows = []
                for (value, group), k in zip(sizes, chosen):
                    rows += [value] * (group - k) + [value - 1] * k
                rows += [0] * zeros
                result[tuple(sorted(rows, reverse=True))] += weight
            return
        value, group = sizes[idx]
        for k in range(min(group, left) + 1):
            rec(idx + 1, left - k, chosen + (k,), weight * comb(group, k))

    rec(0, need, (), 1)
    return tuple(sorted(result.items(), reverse=True))


@lru_cache(maxsize=None)
def _n_lambda(parts: tuple[int, ...]) -> int:
    n = len(parts)
    if n == 1:
        return 1
    return sum(count * _n_lambda(rest) for rest, count in _grouped_markings(parts, n - 1))


def n_lambda_inductive(lp, p: int | None = None, n: int | None = None) -> int:
    """N(lambda) by the marking recursion, expanding row ``p`` (default: the last row) first."""
    lp = _coerce(lp, n)
    if p is None or lp.n == 1:
        return _n_lambda(lp.parts)
    return sum(count * _n_lambda(rest.parts) for rest, count in markings(lp, p))


# -- spin tableaux -------------------------------------------------------------

@dataclass(frozen=True)
class SpinTableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows if r)


def spin_tableaux(lp, n: int | None = None) -> list[SpinTableau]:
    """All spin tableaux of shape lambda, built by peeling the largest entry."""
    lp = _coerce(lp, n)
    return [SpinTableau(rows) for rows in _tableaux(lp.parts)]


@lru_cache(maxsize=None)
def _tableaux(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = len(shape)
    if n == 1:
        return (((),),)
    top = n - 1
    need = top - shape[-1]
    if need < 0:
        return ()
    eligible = [i for i in range(n - 1) if shape[i] > 0]
    out = []
    for chosen in combinations(eligible, need):
        inner = list(shape[:-1])
        for i in chosen:
            inner[i] -= 1
        # the boxes holding the top entry must leave a Young diagram behind
        if any(x < y for x, y in zip(inner, inner[1:])):
            continue
        marked = set(chosen)
        last = (top,) * shape[-1]
        for sub in _tableaux(tuple(inner)):
            rows = tuple(r + (top,) if i in marked else r for i, r in enumerate(sub))
            out.append(rows + (last,))
    return tuple(out)


def n_tau(t: SpinTableau | Sequence[Sequence[int]]) -> int:
    """Product of the binomial labels of a spin tableau (1 for the empty tableau)."""
    rows = t.rows if isinstance(t, SpinTableau) else tuple(tuple(r) for r in t)
    width = max((len(r) for r in rows), default=0)
    total = 1
    for j in range(width):
        column = [r[j] for r in rows if len(r) > j]
        for i in sorted(set(column)):
            b = sum(1 for v in column[:i] if v == i)
            a = b
            for r, v in enumerate(column):
                if v < i and (len(rows[r]) <= j + 1 or rows[r][j + 1] > i):
                    a += 1
            total *= comb(a, b)
    return total


def n_lambda_tableaux(lp, n: int | None = None) -> int:
    lp = _coerce(lp, n)
    return sum(n_tau(t) for t in spin_tableaux(lp))


def is_spin_tableau(rows: Sequence[Sequence[int]]) -> bool:
    """Direct check of the defining conditions (used to validate enumerations)."""
    n = len(rows)
    counts = Counter()
    for r, row in enumerate(rows):
        for v in row:
            if not 1 <= v <= n - 1 or r > v:  # entry v must sit in rows 1..v+1
                return False
            counts[v] += 1
        if any(x > y for x, y in zip(row, row[1:])):
            return False
        big = [v for v in row if v >= r + 1]
        if any(x >= y for x, y in zip(big, big[1:])):
            return False
    if any(counts[i] != i for i in range(1, n)):
        return False
    for r in range(n - 1):
        for j, v in enumerate(rows[r + 1]):
            if j >= len(rows[r]) or rows[r][j] > v:
                return False
    return True


# -- special cases -------------------------------------------------------------

def lift_partition(mu, n: int | None = None) -> Partition:
    """A partition with first row n-1 and every other row equal to or one less than mu's.

    Follows the constructive induction on (n-1) - mu_1; the result is dominated
    by the staircase and padded to n parts.
    """
    lp = _coerce(mu, n)
    if not lp.in_P():
        raise ValidationError(f"{lp} is not dominated by the staircase of size {lp.n}")
    n = lp.n
    if n == 1:
        return (0,)
    stair = [n - 1 - i for i in range(n)]
    bounds = [sum(stair[: j + 1]) for j in range(n)]

    def star(seq: tuple[int, ...]) -> tuple[int, ...]:
        if seq[0] == n - 1:
            return seq
        k = len(seq)
        t, acc = 0, 0
        while t < k and acc + seq[t] < bounds[t]:
            acc += seq[t]
            t += 1
        if t == k:
            head = star((seq[0] + 1,) + seq[1 : k - 1])
            return head + (seq[k - 1] - 1,)
        head = star((seq[0] + 1,) + seq[1:t])
        return head + (seq[t] - 1,) + seq[t + 1 :]

    out = star(lp.stripped)
    return tuple(out) + (0,) * (n - len(out))


def split_n_lambda(mu, pi, m: int | None = None, p: int | None = None) -> tuple[Partition, int]:
    """Glue mu (size m) above pi (size p) shifted by p; N multiplies."""
    mu = _coerce(mu, m)
    pi = _coerce(pi, p)
    m, p = mu.n, pi.n
    if pi.parts[0] > p + mu.parts[-1]:
        raise ValidationError(f"need pi_1 <= p + mu_m, got {pi.parts[0]} > {p} + {mu.parts[-1]}")
    lam = tuple(p + x for x in mu.parts) + pi.parts
    lp = SpinPartition(lam, m + p)
    if lp.in_P() != (mu.in_P() and pi.in_P()):
        raise AssertionError(f"dominance of {lam} disagrees with its factors")
    return lam, n_lambda_inductive(mu) * n_lambda_inductive(pi)


def rho_shift_mult(n: int, i: int, j: int) -> tuple[Partition, int]:
    """Partition and multiplicity of rho minus the root e_i - e_j (1-indexed, j - i > 1)."""
    if not 1 <= i < j <= n:
        raise ValidationError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    if j - i <= 1:
        raise ValidationError("simple root: rho minus a simple root is not dominant")
    lam = list(staircase(n))
    lam[i - 1] -= 1
    lam[j - 1] += 1
    lam = tuple(lam)
    if not is_partition(lam):
        raise AssertionError(f"{lam} is not dominant")
    shifted = list(staircase_weight(n))
    shifted[i - 1] -= 2
    shifted[j - 1] += 2
    if mu_of_partition(SpinPartition(lam, n)).doubled != tuple(shifted):
        raise AssertionError("moved-box partition does not match rho - (e_i - e_j)")
    return lam, 2 ** (j - i - 1)


def staircase_weight(n: int) -> tuple[int, ...]:
    """Doubled coordinates of rho: (n-1, n-3, ..., -(n-1))."""
    return tuple(n - 1 - 2 * i for i in range(n))

