from collections import Counter
from itertools import product

import pytest

from spinmult.cartan import (
    SpinPartition,
    is_spin_tableau,
    lift_partition,
    markings,
    mu_of_partition,
    n_lambda_inductive,
    n_lambda_tableaux,
    n_tau,
    p_partitions,
    partition_of_dominant_weight,
    rho_shift_mult,
    spin_partitions,
    spin_tableaux,
    split_n_lambda,
    staircase,
)
from spinmult.errors import ValidationError
from spinmult.oracle import brute_multiplicity
from spinmult.rootsys import Weight, build_context, dominance_leq

from test_rootsys import partitions_of


def test_spin_partition_validation():
    assert SpinPartition((2, 1)).n == 3
    assert SpinPartition((), 1).parts == (0,)
    assert SpinPartition((3, 2, 1)).parts == (3, 2, 1, 0)
    for bad in [(4, 4, 2), (1, 2), (2,)]:
        with pytest.raises(ValidationError):
            SpinPartition(bad, 4)
    with pytest.raises(ValidationError):
        SpinPartition((1, 1, 1, 1, 1, 1, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_partition_lists(n, weight_counts):
    total = n * (n - 1) // 2
    expected = [lam for lam in partitions_of(total) if len(lam) <= n] if total else [()]
    assert [lp.stripped for lp in spin_partitions(n)] == expected
    # P(n) is in bijection with the dominant weights the oracle produces
    dominant = [w for w in weight_counts((1,) * n) if list(w.doubled) == sorted(w.doubled, reverse=True)]
    assert sorted(mu_of_partition(lp).doubled for lp in p_partitions(n)) == sorted(w.doubled for w in dominant)


def test_weight_conversion_examples():
    for n in range(1, 7):
        rho = tuple(n - 1 - 2 * i for i in range(n))
        assert mu_of_partition(SpinPartition(staircase(n), n)).doubled == rho
        assert partition_of_dominant_weight(n, rho).parts == staircase(n)
    assert mu_of_partition((1, 1, 1)).doubled == (0, 0, 0)
    assert mu_of_partition((2, 2, 1, 1)).doubled == (1, 1, -1, -1)
    assert partition_of_dominant_weight(5, (0,) * 5).parts == (2,) * 5
    with pytest.raises(ValidationError):
        partition_of_dominant_weight(5, (1, 1, 1, 1, -4))
    with pytest.raises(ValidationError):
        partition_of_dominant_weight(3, (0, 2, -2))


@pytest.mark.parametrize("n", range(1, 7))
def test_weight_conversion_round_trip(n):
    for lp in spin_partitions(n):
        if lp.parts[0] > n - 1:
            continue
        w = mu_of_partition(lp)
        assert partition_of_dominant_weight(n, w) == lp


def test_markings_examples():
    got = {rest.stripped: k for rest, k in markings((3, 3, 2, 1, 1), 5)}
    assert got == {(2, 2, 1, 1): 1, (2, 2, 2): 1, (3, 2, 1): 2}
    for n in range(2, 7):
        got = markings(staircase(n), n)
        assert [(rest.parts, k) for rest, k in got] == [(staircase(n - 1), 1)]
    assert [(rest.parts, k) for rest, k in markings((1, 0), 1)] == [((0,), 1)]
    with pytest.raises(ValidationError):
        markings((2, 1, 0), 4)


def test_markings_count_agrees_with_direct_choice():
    # the grouped count equals the number of distinct extra-row sets
    from itertools import combinations

    for n in range(2, 7):
        for lp in spin_partitions(n):
            for p in range(1, n + 1):
                need = n - 1 - lp.parts[p - 1]
                rows = [i for i in range(n) if i != p - 1 and lp.parts[i] > 0]
                direct = Counter()
                if need >= 0:
                    for extra in combinations(rows, need):
                        rest = list(lp.parts)
                        rest[p - 1] = 0
                        for i in extra:
                            rest[i] -= 1
                        direct[tuple(sorted(rest, reverse=True))[: n - 1]] += 1
                grouped = {rest.parts: k for rest, k in markings(lp, p)}
                assert grouped == dict(direct)


@pytest.mark.parametrize(
    "lam, value",
    [((2, 1), 1), ((1, 1, 1), 2), ((3, 2, 2, 2, 1), 14), ((2, 2, 2, 2, 2), 24)],
)
def test_n_lambda_examples(lam, value):
    assert n_lambda_inductive(lam) == value
    assert n_lambda_tableaux(lam) == value


def test_n_lambda_wrong_total():
    with pytest.raises(ValidationError):
        n_lambda_inductive((4, 4, 2), n=4)


@pytest.mark.parametrize("n", range(1, 7))
def test_triple_agreement_support_parity(n, weight_counts):
    counts = weight_counts((1,) * n)
    top = staircase(n)
    for lp in spin_partitions(n):
        value = n_lambda_inductive(lp)
        assert value == n_lambda_tableaux(lp) == counts.get(mu_of_partition(lp), 0)
        assert (value != 0) == lp.in_P()
        if lp.parts == top:
            assert value == 1
        elif value:
            assert value % 2 == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_p_independence(n):
    for lp in spin_partitions(n):
        values = {n_lambda_inductive(lp, p=p) for p in range(1, n + 1)}
        assert len(values) == 1


def _rows(*words):
    return tuple(tuple(int(ch) for ch in w) for w in words)


def test_tableaux_fixtures():
    got = {t.rows: n_tau(t) for t in spin_tableaux((2, 2, 2, 2, 2))}
    assert got == {
        _rows("12", "23", "34", "34", "44"): 12,
        _rows("13", "23", "24", "34", "44"): 12,
    }
    got = {t.rows for t in spin_tableaux((4, 2, 2, 1, 1))}
    assert got == {_rows("1234", "23", "34", "4", "4"), _rows("1234", "24", "34", "3", "4")}


SEVEN_CUBES = [
    (("123", "234", "345", "456", "456", "556", "666"), 6),
    (("124", "234", "345", "356", "456", "556", "666"), 6),
    (("123", "245", "345", "346", "456", "556", "666"), 12),
    (("124", "235", "345", "346", "456", "556", "666"), 36),
    (("125", "235", "345", "346", "446", "556", "666"), 12),
    (("134", "234", "235", "456", "456", "556", "666"), 6),
    (("134", "234", "245", "356", "456", "556", "666"), 6),
    (("134", "235", "245", "346", "456", "556", "666"), 36),
    (("135", "235", "245", "346", "446", "556", "666"), 12),
]


def test_seven_cubes_labels():
    got = {t.rows: n_tau(t) for t in spin_tableaux((3,) * 7)}
    assert got == {_rows(*words): 20 * k for words, k in SEVEN_CUBES}
    assert got[_rows(*SEVEN_CUBES[0][0])] == 120
    assert sum(got.values()) == 2640


def test_n_tau_empty():
    assert n_tau(()) == 1
    assert n_tau(((),)) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_tableaux_satisfy_definition(n):
    for lp in p_partitions(n):
        rows = [t.rows for t in spin_tableaux(lp)]
        assert len(set(rows)) == len(rows)
        for r in rows:
            assert is_spin_tableau(r)
            assert tuple(len(x) for x in r) == lp.parts


def test_is_spin_tableau_rejects():
    assert not is_spin_tableau(((2, 1), (1,), ()))
    assert not is_spin_tableau(((1, 1), (2,), ()))
    assert is_spin_tableau(((1, 2), (2,), ()))


def _lift_candidates(lp):
    n = lp.n
    rest = lp.parts[1:]
    out = []
    for choice in product(*[(x - 1, x) if x > 0 else (0,) for x in rest]):
        cand = (n - 1,) + choice
        if sum(cand) != sum(lp.parts):
            continue
        if any(a < b for a, b in zip(cand, cand[1:])):
            continue
        if dominance_leq(cand, staircase(n)):
            out.append(cand)
    return out


@pytest.mark.parametrize("n", range(1, 8))
def test_lift_partition_constraints(n):
    for lp in p_partitions(n):
        out = lift_partition(lp)
        assert out in _lift_candidates(lp), (lp, out)


def test_lift_examples():
    assert lift_partition((4, 3, 2, 1)) == (4, 3, 2, 1, 0)
    assert lift_partition((2, 2, 2, 2, 2)) == (4, 2, 2, 1, 1)
    assert lift_partition((2, 2, 1, 1)) == (3, 2, 1, 0)
    with pytest.raises(ValidationError):
        lift_partition((3, 3), n=4)


def test_split_examples():
    lam, value = split_n_lambda((2, 2, 1, 1), (1, 1, 1))
    assert lam == (5, 5, 4, 4, 1, 1, 1)
    assert value == 8 == n_lambda_inductive(lam)
    assert split_n_lambda(staircase(3), staircase(4))[1] == 1
    lam, value = split_n_lambda((1, 0), (1, 0))
    assert lam == (3, 2, 1, 0)
    assert value == n_lambda_inductive(lam) == 1
    with pytest.raises(ValidationError):
        split_n_lambda((1, 0), (6, 0, 0, 0))


def test_split_exhaustive():
    checked = 0
    for m in range(1, 7):
        for p in range(1, 8 - m):
            for mu in spin_partitions(m):
                for pi in spin_partitions(p):
                    if pi.parts[0] > p + mu.parts[-1]:
                        continue
                    lam, value = split_n_lambda(mu, pi)
                    assert value == n_lambda_inductive(lam, n=m + p)
                    checked += 1
    assert checked > 100


def test_rho_shift_examples():
    assert rho_shift_mult(4, 1, 3) == ((2, 2, 2, 0), 2)
    assert rho_shift_mult(5, 1, 5) == ((3, 3, 2, 1, 1), 8)
    with pytest.raises(ValidationError):
        rho_shift_mult(5, 2, 3)
    with pytest.raises(ValidationError):
        rho_shift_mult(5, 0, 3)


@pytest.mark.parametrize("n", range(3, 7))
def test_rho_shift_against_oracle(n, weight_counts):
    counts = weight_counts((1,) * n)
    ctx = build_context((1,) * n)
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            lam, value = rho_shift_mult(n, i, j)
            w = list(ctx.rho_doubled)
            w[i - 1] -= 2
            w[j - 1] += 2
            assert counts[Weight(w)] == value
            assert n_lambda_inductive(lam) == value


def test_zero_weight_seven(weight_counts):
    ctx = build_context((1,) * 7)
    assert brute_multiplicity(ctx, (0,) * 7) == 2640
