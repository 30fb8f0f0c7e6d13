"""Unweighted 3-dimensional p-matching, recursing on p.

A (p-1)-matching ``P`` found recursively pins down most of some solution:
if a p-matching exists, one exists that reuses at least ``2(p-1)`` of the
elements covered by ``P``. For each coordinate ``t`` the elements of ``P``
outside ``U_t`` (``P_t``) are tracked exactly as a bitmask, and only the
remaining ``r`` free elements go into the representative families.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from .instances import WDM, Instance, InstanceError, Solution, validate
from .repset import RepEngine, Triple

MAX_P = 6


def _check(inst: Instance) -> None:
    if inst.kind != WDM or inst.q != 3:
        raise InstanceError("dm3 needs a WDM instance with q = 3")
    problems = validate(inst)
    if problems:
        raise InstanceError("; ".join(problems))
    if len({m.weight for m in inst.members}) > 1:
        raise InstanceError("dm3 needs all member weights equal")


def _subset_order(n: int) -> list[int]:
    return sorted(range(1 << n), key=lambda mask: (bin(mask).count("1"), mask))


def dm3_table(
    inst: Instance,
    matching: tuple[int, ...],
    t: int,
    r: int,
    engine: RepEngine,
    p: Optional[int] = None,
) -> tuple[dict[tuple[int, int, int], list[Triple]], list[int]]:
    """DP cells ``M[u, i, P]`` for coordinate ``t`` (0-based) and budget ``r``.

    ``matching`` is the recursively found (p-1)-matching. Returns the cells,
    keyed by ``(u, i, mask)`` where ``mask`` indexes into the returned list
    ``P_t`` (ascending ids), and ``P_t`` itself.
    """
    p = inst.p if p is None else p
    P_t = sorted(x for i in matching for c, x in enumerate(inst.members[i].elements) if c != t)
    bit = {x: 1 << n for n, x in enumerate(P_t)}
    masks = [sum(1 << x for x in m.elements) for m in inst.members]
    pmask = [sum(bit.get(x, 0) for x in m.elements) for m in inst.members]
    free = [
        tuple(sorted(x for c, x in enumerate(m.elements) if c != t and x not in bit))
        for m in inst.members
    ]
    U_t = inst.universes[t]
    by_anchor: dict[int, list[int]] = {u: [] for u in U_t}
    for m in inst.members:
        by_anchor[m.elements[t]].append(m.index)
    subsets = [P for P in _subset_order(len(P_t)) if 2 - r <= bin(P).count("1") <= 2 * p - r]

    def tri(members: tuple[int, ...]) -> Triple:
        return Triple(tuple(sorted(x for i in members for x in free[i])), members, 1)

    M: dict[tuple[int, int, int], list[Triple]] = {}
    prev: Optional[int] = None
    for u in U_t:
        for P in subsets:
            size = bin(P).count("1")
            s1 = 2 - size
            if s1 >= 0:
                fam = list(M.get((prev, 1, P), ()))
                fam += [tri((S,)) for S in by_anchor[u] if pmask[S] == P]
                M[u, 1, P] = engine.represent(s1, r - s1, fam)
            if prev is None:
                continue
            for i in range(2, min(p, (size + r) // 2) + 1):
                s = 2 * i - size
                if s < 0:
                    # i members hold at most 2i elements of P_t
                    continue
                A = list(M.get((prev, i, P), ()))
                for S in by_anchor[u]:
                    if pmask[S] & ~P:
                        continue
                    for part in M.get((prev, i - 1, P & ~pmask[S]), ()):
                        if any(masks[m] & masks[S] for m in part.payload):
                            continue
                        A.append(tri(part.payload + (S,)))
                M[u, i, P] = engine.represent(s, r - s, A)
        prev = u
    return M, P_t


def solve_dm3(
    inst: Instance, engine: Optional[RepEngine] = None, threads: int = 1
) -> Optional[Solution]:
    """Some ``p`` pairwise-disjoint tuples of ``inst``, or ``None`` if none exist."""
    _check(inst)
    engine = engine or RepEngine(inst.universe_size)
    found = _solve(inst, inst.p, engine, threads)
    if found is None:
        return None
    weight = inst.members[0].weight
    return Solution(tuple(sorted(found)), weight * inst.p)


def _solve(inst: Instance, p: int, engine: RepEngine, threads: int) -> Optional[tuple[int, ...]]:
    if not inst.members:
        return None
    if p == 1:
        return (0,)
    matching = _solve(inst, p - 1, engine, threads)
    if matching is None:
        return None
    jobs = [(t, r) for t in range(3) for r in range((2 * p + 4) // 3 + 1)]

    def attempt(job):
        t, r = job
        M, P_t = dm3_table(inst, matching, t, r, engine, p)
        last = inst.universes[t][-1]
        for P in _subset_order(len(P_t)):
            cell = M.get((last, p, P))
            if cell:
                return cell[0].payload
        return None

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(attempt, jobs))
        return next((res for res in results if res is not None), None)
    for job in jobs:
        res = attempt(job)
        if res is not None:
            return res
    return None
