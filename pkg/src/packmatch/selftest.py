"""Randomised invariant checks runnable without pytest (``packmatch selftest``)."""

from __future__ import annotations

import math
import random
from typing import Callable, Iterator, TextIO

from .dm3 import solve_dm3
from .instances import WDM, WSP, check_solution, gen_random, to_wsp
from .kernel import kernel_bound, kernelize
from .oracle import brute_force_solve, check_representation
from .repset import RepQuery, Triple, represent
from .wdm import solve_wdm
from .wsp import solve_wsp


def _weight(sol):
    return None if sol is None else sol.total_weight


def _solver_cases(seed: int, n: int) -> Iterator[str]:
    for k in range(n):
        rng = random.Random(seed * 1_000_003 + k)
        q, p = rng.choice([2, 3]), rng.randint(1, 3)
        if rng.random() < 0.5:
            sizes = [rng.randint(2, 4) for _ in range(q)]
            inst = gen_random(rng.randrange(2**31), WDM, q, p, sizes,
                              rng.randint(1, min(20, math.prod(sizes))), -20, 20)
            got = solve_wdm(inst)
        else:
            size = rng.randint(q + 1, 9)
            inst = gen_random(rng.randrange(2**31), WSP, q, p, size,
                              rng.randint(1, min(20, math.comb(size, q))), -20, 20)
            got = solve_wsp(inst)
        want = brute_force_solve(inst)
        if _weight(got) != _weight(want):
            yield f"case {k}: solver {_weight(got)} != oracle {_weight(want)}"
        elif got is not None and check_solution(inst, got):
            yield f"case {k}: invalid solution {got}"


def _dm3_cases(seed: int, n: int) -> Iterator[str]:
    for k in range(n):
        rng = random.Random(seed * 1_000_003 + k)
        p = rng.randint(1, 3)
        size = rng.randint(p, p + 1)
        inst = gen_random(rng.randrange(2**31), WDM, 3, p, [size] * 3,
                          rng.randint(1, min(15, size**3)), 1, 1)
        got, want = solve_dm3(inst), brute_force_solve(inst)
        if (got is None) != (want is None):
            yield f"case {k}: dm3 verdict differs from oracle"
        elif got is not None and check_solution(inst, got):
            yield f"case {k}: invalid solution {got}"


def _repset_cases(seed: int, n: int) -> Iterator[str]:
    for k in range(n):
        rng = random.Random(seed * 1_000_003 + k)
        size, s, r = rng.randint(1, 10), rng.randint(0, 3), rng.randint(0, 3)
        if s > size:
            continue
        fam = [Triple(tuple(sorted(rng.sample(range(size), s))), j, rng.randint(-5, 5))
               for j in range(rng.randint(0, 30))]
        kept = represent(RepQuery(size, s, r), fam)
        if len(kept) > math.comb(s + r, s):
            yield f"case {k}: kept {len(kept)} > C({s + r},{s})"
        bad = check_representation(size, s, r, fam, kept)
        if bad is not None:
            yield f"case {k}: blocker {bad.Y} unserved"


def _kernel_cases(seed: int, n: int) -> Iterator[str]:
    for k in range(n):
        rng = random.Random(seed * 1_000_003 + k)
        kind = rng.choice([WDM, WSP])
        p = rng.randint(1, 2)
        if kind == WDM:
            inst = gen_random(rng.randrange(2**31), WDM, 3, p, [5] * 3, 60, -20, 20)
        else:
            inst = gen_random(rng.randrange(2**31), WSP, 3, p, 10, 60, -20, 20)
        res = kernelize(inst)
        if res.kernel.m > kernel_bound(3, p):
            yield f"case {k}: kernel has {res.kernel.m} members"
        if res.kernel.universe_size > 3 * res.kernel.m:
            yield f"case {k}: kernel universe too large"
        if _weight(brute_force_solve(res.kernel)) != _weight(brute_force_solve(inst)):
            yield f"case {k}: kernel changed the optimum"


def _special_case(seed: int, n: int) -> Iterator[str]:
    for k in range(n):
        rng = random.Random(seed * 1_000_003 + k)
        q, p = rng.choice([2, 3]), rng.randint(1, 3)
        inst = gen_random(rng.randrange(2**31), WDM, q, p, [4] * q, 12, -20, 20)
        if _weight(solve_wdm(inst)) != _weight(solve_wsp(to_wsp(inst))):
            yield f"case {k}: WDM and WSP optima differ"


SUITES: list[tuple[str, Callable[[int, int], Iterator[str]], int]] = [
    ("repset", _repset_cases, 200),
    ("solvers", _solver_cases, 100),
    ("dm3", _dm3_cases, 60),
    ("kernel", _kernel_cases, 20),
    ("wdm-as-wsp", _special_case, 30),
]


def run_selftest(out: TextIO, quick: bool = False, seed: int = 0) -> bool:
    ok = True
    for name, suite, n in SUITES:
        if quick:
            n = max(1, n // 10)
        failures = list(suite(seed, n))
        status = "PASS" if not failures else "FAIL"
        out.write(f"{status} {name} ({n} cases)\n")
        for msg in failures:
            out.write(f"  {msg}\n")
        ok = ok and not failures
    return ok
