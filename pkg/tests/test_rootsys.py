import pytest
from hypothesis import given, strategies as st

from spinmult.errors import ValidationError
from spinmult.rootsys import (
    Composition,
    Weight,
    build_context,
    canonical_blocks,
    dominance_leq,
    dual_partition,
    format_partition,
    format_weight,
    normalize_weight,
    parse_partition,
    parse_weight,
)


def partitions_of(total, max_parts=None):
    out = []

    def rec(left, cap, prefix):
        if left == 0:
            out.append(prefix)
            return
        if max_parts is not None and len(prefix) == max_parts:
            return
        for part in range(min(cap, left), 0, -1):
            rec(left - part, part, prefix + (part,))

    rec(total, total, ())
    return out


def test_composition_sorts_and_validates():
    assert Composition((2, 1, 1)).parts == (1, 1, 2)
    assert Composition((3,)).n == 3
    with pytest.raises(ValidationError):
        Composition(())
    with pytest.raises(ValidationError):
        Composition((1, 0))


def test_weight_zero_sum():
    assert Weight((3, 1, -2, -2)).doubled == (3, 1, -2, -2)
    with pytest.raises(ValidationError):
        Weight((1, 0))
    assert (-Weight((3, -3))).doubled == (-3, 3)


@pytest.mark.parametrize(
    "c, sigma, roots",
    [((1, 1, 2), (3, 3, 2, 2), 5), ((1, 3), (3, 1, 1, 1), 3), ((4,), (0, 0, 0, 0), 0)],
)
def test_build_context(c, sigma, roots):
    ctx = build_context(c)
    assert ctx.sigma == sigma
    assert ctx.num_roots == roots


@pytest.mark.parametrize("c", [(1,), (1, 1), (1, 2), (2, 2), (1, 1, 3), (1, 2, 3), (1,) * 6])
def test_context_invariants(c):
    ctx = build_context(c)
    n = ctx.n
    assert ctx.num_roots == (n * n - sum(x * x for x in c)) // 2
    assert sum(ctx.sigma) == 2 * ctx.num_roots
    assert sum(ctx.rho_doubled) == 0
    assert list(ctx.phi_q_plus) == sorted(ctx.phi_q_plus)
    assert all(ctx.block_of[i] != ctx.block_of[j] for i, j in ctx.phi_q_plus)


def test_dominance_examples():
    assert dominance_leq((2, 2, 2, 2, 2), (4, 3, 2, 1, 0))
    assert dominance_leq((3, 2, 1), (3, 2, 1))
    assert not dominance_leq((4, 4, 2), (4, 3, 2, 1))
    assert not dominance_leq((2, 1), (2, 2))


@pytest.mark.parametrize("total", range(1, 8))
def test_dominance_is_partial_order(total):
    parts = partitions_of(total)
    for a in parts:
        assert dominance_leq(a, a)
        for b in parts:
            if a != b and dominance_leq(a, b):
                assert not dominance_leq(b, a)
            for c in parts:
                if dominance_leq(a, b) and dominance_leq(b, c):
                    assert dominance_leq(a, c)


@pytest.mark.parametrize("total", range(0, 9))
def test_dual_involution_and_order_reversing(total):
    parts = partitions_of(total)
    for a in parts:
        assert dual_partition(dual_partition(a)) == a
        for b in parts:
            if dominance_leq(a, b):
                assert dominance_leq(dual_partition(b), dual_partition(a))


def test_dual_examples():
    assert dual_partition((3, 1)) == (2, 1, 1)
    assert dual_partition(()) == ()
    assert dual_partition((2, 2)) == (2, 2)


def test_normalize_examples():
    assert normalize_weight(build_context((1, 1, 2)), (1, 3, -2, -2)).doubled == (3, 1, -2, -2)
    assert normalize_weight(build_context((2, 2)), (0, 2, -2, 0)).doubled == (2, 0, 0, -2)
    ctx = build_context((1, 1, 2))
    assert normalize_weight(ctx, (3, 1, -2, -2)).doubled == (3, 1, -2, -2)


@given(st.lists(st.integers(-6, 6), min_size=6, max_size=6), st.sampled_from([(1, 1, 4), (2, 2, 2), (1, 2, 3), (3, 3), (1,) * 6]))
def test_normalize_idempotent_and_blockwise(coords, c):
    coords[-1] -= sum(coords)
    ctx = build_context(c)
    once = normalize_weight(ctx, coords)
    assert normalize_weight(ctx, once) == once

    def block_multisets(w):
        out, start = [], 0
        for size in ctx.c.parts:
            out.append((size, tuple(sorted(w[start:start + size]))))
            start += size
        return sorted(out)

    assert block_multisets(once.doubled) == block_multisets(coords)


def test_canonical_blocks_reorders_weight():
    c, w = canonical_blocks((2, 1), (1, 1, -2))
    assert c.parts == (1, 2)
    assert w.doubled == (-2, 1, 1)
    with pytest.raises(ValidationError):
        canonical_blocks((2, 1), (0, 0))


def test_partition_text():
    assert parse_partition("2^5") == (2, 2, 2, 2, 2)
    assert parse_partition("3^2,2,1^2") == (3, 3, 2, 1, 1)
    assert parse_partition("") == ()
    assert format_partition((3, 2, 1)) == "3,2,1"
    for bad in ("1,2", "a", "2^x", "-1"):
        with pytest.raises(ValidationError):
            parse_partition(bad)


def test_weight_text():
    assert parse_weight("3/2,1/2,-1,-1") == (3, 1, -2, -2)
    assert format_weight((3, 1, -2, -2)) == "3/2,1/2,-1,-1"
    assert Weight.from_text("1/2,-1/2").doubled == (1, -1)
    with pytest.raises(ValidationError):
        parse_weight("1/3,-1/3")
    with pytest.raises(ValidationError):
        parse_weight("x")
