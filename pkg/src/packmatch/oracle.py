"""Brute-force reference solver and exhaustive representation checker.

Both are deliberately naive. They are the ground truth the DP solvers are
tested against, so they share no code with them beyond the data model.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .instances import Instance, Solution
from .repset import Triple


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_combinations: int = 5_000_000

    def __post_init__(self):
        if self.max_combinations <= 0:
            raise ValueError("budget must be positive")


def brute_force_solve(inst: Instance, budget: OracleBudget = OracleBudget()) -> Optional[Solution]:
    """Try every ``p``-subset of members; keep the heaviest disjoint one.

    Ties go to the lexicographically smallest index vector. ``None`` means no
    ``p`` pairwise-disjoint members exist.
    """
    total = math.comb(inst.m, inst.p)
    if total > budget.max_combinations:
        raise BudgetExceeded(f"C({inst.m}, {inst.p}) = {total} exceeds {budget.max_combinations}")
    masks = [sum(1 << x for x in mem.elements) for mem in inst.members]
    weights = [mem.weight for mem in inst.members]
    best: Optional[tuple[int, tuple[int, ...]]] = None
    for combo in itertools.combinations(range(inst.m), inst.p):
        seen = 0
        for i in combo:
            if seen & masks[i]:
                break
            seen |= masks[i]
        else:
            w = sum(weights[i] for i in combo)
            if best is None or w > best[0]:
                best = (w, combo)
    if best is None:
        return None
    return Solution(best[1], best[0])


@dataclass(frozen=True)
class Counterexample:
    Y: tuple[int, ...]
    unserved: Triple


def check_representation(
    universe_size: int,
    s: int,
    r: int,
    family: Sequence[Triple],
    sub: Sequence[Triple],
    max_blockers: int = 2_000_000,
) -> Optional[Counterexample]:
    """Exhaustively test that ``sub`` max ``r``-represents ``family``.

    Returns ``None`` on success, else a blocker ``Y`` together with a triple of
    ``family`` avoiding ``Y`` that nothing in ``sub`` matches. Blockers range
    over subsets of the elements that occur in some ``X``: elements outside
    every ``X`` never change which triples avoid ``Y``.
    """
    for t in list(family) + list(sub):
        if len(t.X) != s:
            raise ValueError(f"triple with |X|={len(t.X)} in a family of {s}-sets")
        if any(not 0 <= x < universe_size for x in t.X):
            raise ValueError("element id out of range")
    support = sorted({x for t in family for x in t.X} | {x for t in sub for x in t.X})
    count = sum(math.comb(len(support), k) for k in range(min(r, len(support)) + 1))
    if count > max_blockers:
        raise BudgetExceeded(f"{count} blockers exceed {max_blockers}")

    def packed(fam):
        return [(sum(1 << x for x in t.X), t.W, t) for t in fam]

    full, part = packed(family), packed(sub)
    for k in range(min(r, len(support)) + 1):
        for Y in itertools.combinations(support, k):
            ymask = sum(1 << y for y in Y)
            best = None
            for mask, w, t in full:
                if not mask & ymask and (best is None or w > best.W):
                    best = t
            if best is None:
                continue
            if not any(not mask & ymask and w >= best.W for mask, w, _ in part):
                return Counterexample(Y, best)
    return None


def disjoint_subsets(inst: Instance, candidates: Sequence[int], i: int) -> list[tuple[int, ...]]:
    """All ``i``-subsets of ``candidates`` (member indices) that are pairwise disjoint."""
    out = []
    for combo in itertools.combinations(sorted(candidates), i):
        seen: set[int] = set()
        ok = True
        for m in combo:
            elems = set(inst.members[m].elements)
            if seen & elems:
                ok = False
                break
            seen |= elems
        if ok:
            out.append(combo)
    return out
