"""Exhaustive ground truth: every subset A of the roots of q, and its weight mu(A).

The enumeration walks all 2^m subsets in Gray-code order so each step toggles
a single root. A weight is tracked through the row sums of its 0/1 matrix
encoding, packed into one mixed-radix integer.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import OracleTooLargeError, ValidationError
from .rootsys import LeviContext, Weight

DEFAULT_ORACLE_MAX = 30


def oracle_max() -> int:
    raw = os.environ.get("SPINMULT_ORACLE_MAX")
    if raw is None:
        return DEFAULT_ORACLE_MAX
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"SPINMULT_ORACLE_MAX must be an integer, got {raw!r}") from None


def check_guard(ctx: LeviContext, max_roots: int | None = None) -> None:
    bound = oracle_max() if max_roots is None else max_roots
    if ctx.num_roots > bound:
        raise OracleTooLargeError(ctx.num_roots, bound)


@dataclass(frozen=True)
class RootSubset:
    """Subset of ``ctx.phi_q_plus``; bit k set means the k-th root is in A."""

    bits: int
    width: int

    def __post_init__(self):
        if self.width < 0 or self.bits < 0 or self.bits >> self.width:
            raise ValidationError(f"bits {self.bits:#x} do not fit in width {self.width}")

    @classmethod
    def from_roots(cls, ctx: LeviContext, roots: Iterable[tuple[int, int]]) -> "RootSubset":
        index = {r: k for k, r in enumerate(ctx.phi_q_plus)}
        bits = 0
        for r in roots:
            r = tuple(r)
            if r not in index:
                raise ValidationError(f"{r} is not a root of q for c={ctx.c}")
            bits |= 1 << index[r]
        return cls(bits, ctx.num_roots)

    @classmethod
    def empty(cls, ctx: LeviContext) -> "RootSubset":
        return cls(0, ctx.num_roots)

    @classmethod
    def full(cls, ctx: LeviContext) -> "RootSubset":
        return cls((1 << ctx.num_roots) - 1, ctx.num_roots)

    def __contains__(self, k: int) -> bool:
        return bool((self.bits >> k) & 1)

    def indices(self) -> list[int]:
        return [k for k in range(self.width) if (self.bits >> k) & 1]


def _check_width(ctx: LeviContext, A: RootSubset) -> None:
    if A.width != ctx.num_roots:
        raise ValidationError(f"subset has width {A.width}, context has {ctx.num_roots} roots")


def mu_of_subset(ctx: LeviContext, A: RootSubset) -> Weight:
    _check_width(ctx, A)
    out = [0] * ctx.n
    for k, (i, j) in enumerate(ctx.phi_q_plus):
        s = -1 if k in A else 1
        out[i] += s
        out[j] -= s
    return Weight(out)


# -- mixed-radix packing of row sums -------------------------------------------

def _places(ctx: LeviContext) -> list[int]:
    places, acc = [], 1
    for s in ctx.sigma:
        places.append(acc)
        acc *= s + 1
    return places


def _kernel_inputs(ctx: LeviContext) -> tuple[list[int], int]:
    places = _places(ctx)
    base = sum(places[i] for i, _ in ctx.phi_q_plus)
    delta = [places[j] - places[i] for i, j in ctx.phi_q_plus]
    return delta, base


def _encode(ctx: LeviContext, doubled: Sequence[int]) -> int | None:
    code = 0
    for place, s, w in zip(_places(ctx), ctx.sigma, doubled):
        twice_row = w + s
        if twice_row % 2 or not 0 <= twice_row <= 2 * s:
            return None
        code += place * (twice_row // 2)
    return code


def _decode(ctx: LeviContext, code: int) -> tuple[int, ...]:
    out = []
    for s in ctx.sigma:
        code, row = divmod(code, s + 1)
        out.append(2 * row - s)
    return tuple(out)


def _chunks(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step, extra = divmod(total, pieces)
    out, start = [], 0
    for p in range(pieces):
        stop = start + step + (1 if p < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def _chunk_counts(args):
    delta, base, start, stop, backend = args
    return kernels.gray_code_counts(delta, base, start, stop, backend)


def _chunk_match(args):
    delta, base, start, stop, target, backend = args
    return kernels.gray_code_match(delta, base, start, stop, target, backend)


def _run(fn, jobs, workers):
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(job) for job in jobs]


def enumerate_code_counts(
    ctx: LeviContext,
    *,
    workers: int = 1,
    chunks: int | None = None,
    backend: str | None = None,
    max_roots: int | None = None,
) -> Counter:
    """Packed-code -> count over all subsets; partial chunk maps are merged by addition."""
    check_guard(ctx, max_roots)
    delta, base = _kernel_inputs(ctx)
    total = 1 << ctx.num_roots
    jobs = [(delta, base, a, b, backend) for a, b in _chunks(total, chunks or workers or 1)]
    merged: Counter = Counter()
    for part in _run(_chunk_counts, jobs, workers):
        merged.update(part)
    return merged


def enumerate_weight_counts(
    ctx: LeviContext,
    *,
    workers: int = 1,
    chunks: int | None = None,
    backend: str | None = None,
    max_roots: int | None = None,
) -> dict[Weight, int]:
    """Every weight of the spin module with its multiplicity, in descending lexicographic order."""
    codes = enumerate_code_counts(
        ctx, workers=workers, chunks=chunks, backend=backend, max_roots=max_roots
    )
    decoded = {_decode(ctx, code): count for code, count in codes.items()}
    return {Weight(w): decoded[w] for w in sorted(decoded, reverse=True)}


def brute_multiplicity(
    ctx: LeviContext,
    w: Weight | Sequence[int],
    *,
    workers: int = 1,
    backend: str | None = None,
    max_roots: int | None = None,
) -> int:
    """Number of subsets A with mu(A) = w."""
    doubled = w.doubled if isinstance(w, Weight) else tuple(w)
    if len(doubled) != ctx.n:
        raise ValidationError(f"weight has length {len(doubled)}, expected {ctx.n}")
    check_guard(ctx, max_roots)
    if sum(doubled) != 0:
        return 0
    target = _encode(ctx, doubled)
    if target is None:
        return 0
    delta, base = _kernel_inputs(ctx)
    jobs = [
        (delta, base, a, b, target, backend)
        for a, b in _chunks(1 << ctx.num_roots, workers or 1)
    ]
    return sum(_run(_chunk_match, jobs, workers))


# -- Cartan-case structure -----------------------------------------------------

def _require_cartan(ctx: LeviContext) -> None:
    if not ctx.is_cartan():
        raise ValidationError(f"saturation is defined only for the Cartan case, got c={ctx.c}")


def is_saturated(ctx: LeviContext, A: RootSubset) -> bool:
    """Closure of A and of its complement under the type A sum (i,j)+(j,l)=(i,l)."""
    _require_cartan(ctx)
    _check_width(ctx, A)
    n = ctx.n
    index = {r: k for k, r in enumerate(ctx.phi_q_plus)}

    def inside(i, j):
        return index[(i, j)] in A

    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                a, b, s = inside(i, j), inside(j, l), inside(i, l)
                if a and b and not s:
                    return False
                if not a and not b and s:
                    return False
    return True


def in_weyl_orbit_of_rho(n: int, w: Weight | Sequence[int]) -> bool:
    doubled = w.doubled if isinstance(w, Weight) else tuple(w)
    if len(doubled) != n:
        raise ValidationError(f"weight has length {len(doubled)}, expected {n}")
    return sorted(doubled) == list(range(-(n - 1), n, 2))
