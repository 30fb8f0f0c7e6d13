"""Exact weighted q-set p-packing by a representative-set DP.

Same sweep as the WDM solver, anchored on each set's smallest element. A set
anchored later may still contain non-smallest elements of earlier sets, so
the radius grows to ``q(p-i)`` and the anchor itself is checked against the
partial solution before a set is attached.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .instances import WSP, Instance, InstanceError, MemberRecord, Solution, validate
from .repset import RepEngine, Triple
from ._anchored import add_member, anchored_table, best_of


def _check(inst: Instance) -> None:
    if inst.kind != WSP:
        raise InstanceError(f"expected a WSP instance, got {inst.kind}")
    problems = validate(inst)
    if problems:
        raise InstanceError("; ".join(problems))


def wsp_add(
    inst: Instance,
    i: int,
    S: MemberRecord,
    partials: Sequence[Triple],
    engine: Optional[RepEngine] = None,
) -> list[Triple]:
    engine = engine or RepEngine(inst.universe_size)
    return add_member(inst, i, S, partials, engine, inst.q, check_anchor=True)


def wsp_table(
    inst: Instance, engine: Optional[RepEngine] = None, threads: int = 1
) -> dict[tuple[int, int], list[Triple]]:
    _check(inst)
    engine = engine or RepEngine(inst.universe_size)
    return anchored_table(inst, inst.universes[0], engine, inst.q, True, threads)


def solve_wsp(
    inst: Instance, engine: Optional[RepEngine] = None, threads: int = 1
) -> Optional[Solution]:
    """Maximum-weight set of ``p`` disjoint sets, or ``None`` if none exists."""
    M = wsp_table(inst, engine, threads)
    if not inst.universes[0]:
        return None
    return best_of(M[inst.universes[0][-1], inst.p])
