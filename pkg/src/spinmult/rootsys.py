"""Type A bookkeeping: compositions, Levi contexts, partitions and weights.

Weights are stored with doubled coordinates (entry ``i`` holds ``2*b_i``) so
every half-integer weight is an exact integer vector.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

from .errors import ValidationError

Partition = tuple[int, ...]


@dataclass(frozen=True)
class Composition:
    """Block sizes of a Levi subalgebra, kept in nondecreasing order."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValidationError("composition must have at least one part")
        if any(p < 1 for p in parts):
            raise ValidationError(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class Weight:
    """Integer vector of doubled coordinates summing to zero."""

    doubled: tuple[int, ...]

    def __init__(self, doubled: Iterable[int]):
        doubled = tuple(int(x) for x in doubled)
        if sum(doubled) != 0:
            raise ValidationError(f"weight coordinates must sum to 0: {format_weight(doubled)}")
        object.__setattr__(self, "doubled", doubled)

    @classmethod
    def from_text(cls, text: str) -> "Weight":
        return cls(parse_weight(text))

    @classmethod
    def from_halves(cls, coords: Iterable) -> "Weight":
        """Build from actual coordinates (ints, Fractions or strings like '3/2')."""
        return cls(_double(Fraction(c)) for c in coords)

    def __len__(self) -> int:
        return len(self.doubled)

    def __neg__(self) -> "Weight":
        return Weight(-x for x in self.doubled)

    def __str__(self) -> str:
        return format_weight(self.doubled)


@dataclass(frozen=True)
class LeviContext:
    """Ambient data for the Levi subalgebra h(c) of sl(n)."""

    c: Composition
    block_of: tuple[int, ...] = field(repr=False)
    phi_q_plus: tuple[tuple[int, int], ...] = field(repr=False)
    sigma: tuple[int, ...] = field(repr=False)
    rho_doubled: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.c.n

    @property
    def num_roots(self) -> int:
        return len(self.phi_q_plus)

    def block_slices(self) -> list[slice]:
        out, start = [], 0
        for size in self.c.parts:
            out.append(slice(start, start + size))
            start += size
        return out

    def is_cartan(self) -> bool:
        return all(p == 1 for p in self.c.parts)


def build_context(c: Composition | Iterable[int]) -> LeviContext:
    if not isinstance(c, Composition):
        c = Composition(c)
    n = c.n
    block_of = tuple(b for b, size in enumerate(c.parts) for _ in range(size))
    # lexicographic (i, j) order fixes the bit index of every root
    roots = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if block_of[i] != block_of[j]
    )
    sigma = tuple(n - c.parts[block_of[i]] for i in range(n))
    rho = tuple(n - 1 - 2 * i for i in range(n))
    return LeviContext(c, block_of, roots, sigma, rho)


def _pad(a: Sequence[int], length: int) -> list[int]:
    return list(a) + [0] * (length - len(a))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is dominated by ``b``; partitions of different totals are incomparable."""
    if sum(a) != sum(b):
        return False
    length = max(len(a), len(b))
    pa = accumulate(_pad(a, length))
    pb = accumulate(_pad(b, length))
    return all(x <= y for x, y in zip(pa, pb))


def dual_partition(a: Sequence[int]) -> Partition:
    top = max(a, default=0)
    return tuple(sum(1 for x in a if x >= j) for j in range(1, top + 1))


def strip_zeros(a: Sequence[int]) -> Partition:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def is_partition(a: Sequence[int]) -> bool:
    return all(x >= 0 for x in a) and all(x >= y for x, y in zip(a, a[1:]))


def canonical_blocks(parts: Sequence[int], doubled: Sequence[int]) -> tuple[Composition, Weight]:
    """Reorder the blocks of a weight so its composition is nondecreasing.

    Permuting whole blocks is a Weyl group element that maps the roots of q to
    roots of q up to sign, so multiplicities are unchanged.
    """
    parts = tuple(int(p) for p in parts)
    doubled = tuple(doubled)
    if sum(parts) != len(doubled):
        raise ValidationError(f"weight has length {len(doubled)} but the composition sums to {sum(parts)}")
    starts = list(accumulate((0,) + parts[:-1]))
    order = sorted(range(len(parts)), key=lambda b: parts[b])
    out: list[int] = []
    for b in order:
        out.extend(doubled[starts[b]:starts[b] + parts[b]])
    return Composition(parts), Weight(out)


def normalize_weight(ctx: LeviContext, w: Weight | Sequence[int]) -> Weight:
    """Canonical representative under block permutations and equal-size block swaps."""
    doubled = w.doubled if isinstance(w, Weight) else tuple(w)
    if len(doubled) != ctx.n:
        raise ValidationError(f"weight has length {len(doubled)}, expected {ctx.n}")
    return Weight(normalize_doubled(ctx.c.parts, doubled))


def normalize_doubled(parts: Sequence[int], doubled: Sequence[int]) -> tuple[int, ...]:
    # assumes parts nondecreasing, so equal-size blocks are contiguous
    blocks, start = [], 0
    for size in parts:
        blocks.append(tuple(sorted(doubled[start:start + size], reverse=True)))
        start += size
    out: list[int] = []
    i = 0
    while i < len(blocks):
        j = i
        while j < len(blocks) and parts[j] == parts[i]:
            j += 1
        for blk in sorted(blocks[i:j], reverse=True):
            out.extend(blk)
        i = j
    return tuple(out)


# -- text forms ---------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    """Parse '3,2,2,2,1' or shorthand like '2^5' / '3^2,2,1^2'."""
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return ()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        try:
            if "^" in token:
                value, exp = token.split("^")
                parts.extend([int(value)] * int(exp))
            else:
                parts.append(int(token))
        except ValueError:
            raise ValidationError(f"malformed partition: {text!r}") from None
    if not is_partition(parts):
        raise ValidationError(f"not a nonincreasing sequence of nonnegative integers: {text!r}")
    return tuple(parts)


def format_partition(a: Sequence[int]) -> str:
    return ",".join(map(str, a))


def _double(x: Fraction) -> int:
    d = 2 * x
    if d.denominator != 1:
        raise ValidationError(f"coordinate {x} is not a half-integer")
    return int(d)


def parse_weight(text: str) -> tuple[int, ...]:
    """Parse '3/2,1/2,-1,-1' into doubled coordinates (3, 1, -2, -2)."""
    try:
        coords = [Fraction(tok.strip()) for tok in text.split(",") if tok.strip()]
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"malformed weight: {text!r}") from None
    return tuple(_double(c) for c in coords)


def format_weight(doubled: Sequence[int]) -> str:
    return ",".join(str(Fraction(x, 2)) for x in doubled)
