"""Representative-set DP over members grouped by an anchor element.

Shared by the WDM and WSP solvers. Every member is stored so that its
anchor (first coordinate for WDM, smallest element for WSP) is
``elements[0]`` and its ``j`` leading elements are the prefix ``S_j``. A
partial solution's element set omits anchors: anchors of earlier members
precede every later anchor, so they cannot be hit again.

Radii are ``coef * (p - i)`` for a cell holding ``i`` members, with
``coef = q - 1`` for WDM and ``q`` for WSP.
"""

from __future__ import annotations

import bisect
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .instances import Instance, MemberRecord, Solution
from .repset import RepEngine, Triple


@dataclass(frozen=True)
class Pending:
    """Payload of a partial solution whose newest member is only a prefix."""

    members: tuple[int, ...]
    member: int
    j: int


def tri(inst: Instance, members: tuple[int, ...]) -> Triple:
    X = sorted(x for i in members for x in inst.members[i].elements[1:])
    return Triple(tuple(X), members, sum(inst.members[i].weight for i in members))


def add_member(
    inst: Instance,
    i: int,
    S: MemberRecord,
    partials: Sequence[Triple],
    engine: RepEngine,
    coef: int,
    check_anchor: bool,
) -> list[Triple]:
    """Extend each ``(i-1)``-member partial by ``S``, one element at a time."""
    q, p = inst.q, inst.p
    anchor = S.elements[0]
    layer = []
    for t in partials:
        if check_anchor and any(anchor in inst.members[m].elements for m in t.payload):
            continue
        layer.append(Triple(t.X, Pending(t.payload, S.index, 1), t.W + S.weight))
    for j in range(2, q + 1):
        u_j = S.elements[j - 1]
        grown = []
        for t in layer:
            pos = bisect.bisect_left(t.X, u_j)
            if pos < len(t.X) and t.X[pos] == u_j:
                continue
            X = t.X[:pos] + (u_j,) + t.X[pos:]
            grown.append(Triple(X, Pending(t.payload.members, S.index, j), t.W))
        s = (q - 1) * (i - 1) + (j - 1)
        r = coef * (p - i) + (q - j)
        layer = engine.represent(s, r, grown)
    return [Triple(t.X, t.payload.members + (S.index,), t.W) for t in layer]


def anchored_table(
    inst: Instance,
    anchors: Sequence[int],
    engine: RepEngine,
    coef: int,
    check_anchor: bool,
    threads: int = 1,
) -> dict[tuple[int, int], list[Triple]]:
    """Fill ``M[u, i]`` for every anchor ``u`` (ascending) and ``1 <= i <= p``."""
    q, p = inst.q, inst.p
    by_anchor: dict[int, list[MemberRecord]] = {u: [] for u in anchors}
    for mem in inst.members:
        by_anchor[mem.elements[0]].append(mem)

    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    M: dict[tuple[int, int], list[Triple]] = {}
    prev: Optional[int] = None
    try:
        for u in anchors:
            S_u = by_anchor[u]
            if prev is not None and not S_u:
                # re-representing an already representative cell returns it unchanged
                for i in range(1, p + 1):
                    M[u, i] = M[prev, i]
                prev = u
                continue
            fam = list(M[prev, 1]) if prev is not None else []
            fam += [tri(inst, (S.index,)) for S in S_u]
            M[u, 1] = engine.represent(q - 1, coef * (p - 1), fam)
            for i in range(2, p + 1):
                if prev is None:
                    M[u, i] = []
                    continue

                def extend(S, i=i):
                    return add_member(inst, i, S, M[prev, i - 1], engine, coef, check_anchor)

                added = pool.map(extend, S_u) if pool else map(extend, S_u)
                A = list(M[prev, i])
                for part in added:
                    A += part
                M[u, i] = engine.represent((q - 1) * i, coef * (p - i), A)
            prev = u
    finally:
        if pool:
            pool.shutdown()
    return M


def best_of(cell: Sequence[Triple]) -> Optional[Solution]:
    if not cell:
        return None
    best = max(cell, key=lambda t: t.W)
    return Solution(tuple(sorted(best.payload)), best.W)
