"""Shared brute-force helpers for the test suite."""

from __future__ import annotations

import math

from packmatch.oracle import check_representation, disjoint_subsets
from packmatch.repset import Triple


def weight(sol):
    return None if sol is None else sol.total_weight


def anchored_sol(inst, u, i):
    """tri(SOL_{u,i}): i disjoint members anchored at or before u, anchors dropped."""
    cands = [m.index for m in inst.members if m.elements[0] <= u]
    out = []
    for combo in disjoint_subsets(inst, cands, i):
        X = tuple(sorted(x for m in combo for x in inst.members[m].elements[1:]))
        out.append(Triple(X, combo, inst.weight_of(combo)))
    return out


def cell_violations(inst, M, coef):
    """Check every anchored DP cell against the brute-forced partial solutions."""
    q, p = inst.q, inst.p
    bad = []
    for (u, i), cell in M.items():
        sol = anchored_sol(inst, u, i)
        legal = {t.payload for t in sol}
        s, r = (q - 1) * i, coef * (p - i)
        for t in cell:
            if tuple(sorted(t.payload)) not in legal:
                bad.append((u, i, "illegal partial", t.payload))
        if len(cell) > math.comb(s + r, s):
            bad.append((u, i, "too many", len(cell)))
        cex = check_representation(inst.universe_size, s, r, sol, cell)
        if cex is not None:
            bad.append((u, i, "unserved", cex.Y))
    return bad
