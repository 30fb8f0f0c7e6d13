"""Exact weighted q-dimensional p-matching by a representative-set DP.

Members are swept by first coordinate in ascending id order. Cell
``M[u, i]`` keeps partial solutions of ``i`` disjoint tuples whose first
elements are at most ``u``; it is pruned to a family that
``(q-1)(p-i)``-represents all such partial solutions, so the heaviest entry
of ``M[u_g, p]`` is an optimum.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .instances import WDM, Instance, InstanceError, MemberRecord, Solution, validate
from .repset import RepEngine, Triple
from ._anchored import add_member, anchored_table, best_of


def _check(inst: Instance) -> None:
    if inst.kind != WDM:
        raise InstanceError(f"expected a WDM instance, got {inst.kind}")
    problems = validate(inst)
    if problems:
        raise InstanceError("; ".join(problems))


def wdm_add(
    inst: Instance,
    i: int,
    S: MemberRecord,
    partials: Sequence[Triple],
    engine: Optional[RepEngine] = None,
) -> list[Triple]:
    """Add tuple ``S`` to every ``(i-1)``-tuple partial in ``partials``.

    The first coordinate is attached without a disjointness test: partials
    only hold tuples with smaller first elements and the universes are
    disjoint. Each later coordinate is added only where it is new, followed
    by a representative pruning.
    """
    engine = engine or RepEngine(inst.universe_size)
    return add_member(inst, i, S, partials, engine, inst.q - 1, check_anchor=False)


def wdm_table(
    inst: Instance, engine: Optional[RepEngine] = None, threads: int = 1
) -> dict[tuple[int, int], list[Triple]]:
    """All DP cells ``M[u, i]``, keyed by ``(u, i)`` with ``u`` in ``U_1``."""
    _check(inst)
    engine = engine or RepEngine(inst.universe_size)
    return anchored_table(inst, inst.universes[0], engine, inst.q - 1, False, threads)


def solve_wdm(
    inst: Instance, engine: Optional[RepEngine] = None, threads: int = 1
) -> Optional[Solution]:
    """Maximum-weight set of ``p`` disjoint tuples, or ``None`` if none exists."""
    M = wdm_table(inst, engine, threads)
    if not inst.universes[0]:
        return None
    return best_of(M[inst.universes[0][-1], inst.p])
