"""Cross-checks of every formula against the exhaustive oracle."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from . import cartan, levi, oracle, twoblock
from .rootsys import Composition, build_context, normalize_weight


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: str | None = None

    def record(self, ok: bool, detail) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = detail() if callable(detail) else str(detail)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def compositions(n: int) -> list[Composition]:
    """Canonical compositions of n (nondecreasing parts), in lexicographic order."""
    out = []

    def rec(left, low, prefix):
        if left == 0:
            out.append(Composition(prefix))
            return
        for part in range(low, left + 1):
            rec(left - part, part, prefix + (part,))

    rec(n, 1, ())
    return out


def check_cartan(max_n: int) -> list[CheckResult]:
    agree = CheckResult(f"cartan n<={max_n}: inductive = tableaux = oracle")
    support = CheckResult(f"cartan n<={max_n}: N != 0 iff dominated by staircase")
    parity = CheckResult(f"cartan n<={max_n}: N = 1 at staircase, even elsewhere")
    p_indep = CheckResult(f"cartan n<={max_n}: marking recursion independent of row p")
    for n in range(1, max_n + 1):
        counts = oracle.enumerate_weight_counts(build_context((1,) * n))
        for lp in cartan.spin_partitions(n):
            ind = cartan.n_lambda_inductive(lp)
            tab = cartan.n_lambda_tableaux(lp) if lp.in_P() else 0
            ora = counts.get(cartan.mu_of_partition(lp), 0)
            agree.record(ind == tab == ora, lambda: f"lambda={lp}: inductive={ind} tableaux={tab} oracle={ora}")
            support.record((ind != 0) == lp.in_P(), lambda: f"lambda={lp}: N={ind}")
            if lp.in_P():
                is_top = lp.parts == cartan.staircase(n)
                parity.record(ind == 1 if is_top else ind % 2 == 0, lambda: f"lambda={lp}: N={ind}")
            for p in range(1, n + 1):
                other = cartan.n_lambda_inductive(lp, p=p)
                p_indep.record(other == ind, lambda: f"lambda={lp}, p={p}: {other} != {ind}")
    return [agree, support, parity, p_indep]


def check_levi(max_n: int) -> list[CheckResult]:
    agree = CheckResult(f"levi n<={max_n}: recursion = oracle on every weight")
    mass = CheckResult(f"levi n<={max_n}: multiplicities sum to 2^|roots|")
    sym = CheckResult(f"levi n<={max_n}: mult(-w) = mult(w) and block-permutation invariance")
    for n in range(1, max_n + 1):
        for c in compositions(n):
            ctx = build_context(c)
            counts = oracle.enumerate_weight_counts(ctx)
            total = 0
            for w, count in counts.items():
                got = levi.mult_levi(c, w)
                total += got
                agree.record(got == count, lambda: f"c={c} w={w}: recursion={got} oracle={count}")
                neg = counts.get(-w, 0)
                canon = counts.get(normalize_weight(ctx, w), 0)
                sym.record(neg == count and canon == count, lambda: f"c={c} w={w}")
            mass.record(total == 1 << ctx.num_roots, lambda: f"c={c}: {total} != 2^{ctx.num_roots}")
    return [agree, mass, sym]


def _distinct_perms(seq) -> int:
    return len(set(permutations(seq)))


def check_maxparab(max_size: int) -> list[CheckResult]:
    agree = CheckResult(f"maxparab p+q<={max_size}: matrices = row tableaux = oracle")
    vanish = CheckResult(f"maxparab p+q<={max_size}: count > 0 iff beta dominated by dual(alpha)")
    mass = CheckResult(f"maxparab p+q<={max_size}: orbit-weighted counts sum to 2^(pq)")
    for n in range(2, max_size + 1):
        for p in range(1, n):
            q = n - p
            counts = oracle.enumerate_weight_counts(build_context((p, q)))
            total = 0
            for mp in twoblock.margin_pairs(p, q):
                c, w = twoblock.canonical_levi_weight(mp)
                dp = twoblock.count_margin_matrices(mp)
                rt = len(twoblock.row_tableaux(mp))
                ora = counts.get(w, 0)
                agree.record(dp == rt == ora, lambda: f"p={p} q={q} alpha={mp.alpha} beta={mp.beta}: dp={dp} rt={rt} oracle={ora}")
                vanish.record((dp > 0) == twoblock.vanishing_test(mp), lambda: f"p={p} q={q} alpha={mp.alpha} beta={mp.beta}")
                a, b = mp.padded()
                total += dp * _distinct_perms(a) * _distinct_perms(b)
            mass.record(total == 1 << (p * q), lambda: f"p={p} q={q}: {total}")
    return [agree, vanish, mass]


def run(cartan_n: int | None = None, levi_n: int | None = None, maxparab: int | None = None) -> list[CheckResult]:
    results: list[CheckResult] = []
    if cartan_n:
        results += check_cartan(cartan_n)
    if levi_n:
        results += check_levi(levi_n)
    if maxparab:
        results += check_maxparab(maxparab)
    return results
