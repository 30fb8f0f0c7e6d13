"""Weight-preserving kernels for WDM and WSP.

One representative computation over whole members (``s = q``,
``r = q(p-1)``) keeps at most ``C(qp, q)`` of them: for any solution, each
member can be swapped in turn for a kept member that is at least as heavy
and avoids the other ``p - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .instances import (
    WDM,
    WSP,
    Instance,
    InstanceError,
    build_instance,
    serialize_instance,
    validate,
)
from .repset import RepEngine, Triple


@dataclass(frozen=True)
class KernelResult:
    kernel: Instance
    member_map: tuple[int, ...]   # kernel member index -> original index
    element_map: tuple[int, ...]  # kernel element id -> original element id

    def lift(self, picked) -> tuple[int, ...]:
        return tuple(sorted(self.member_map[i] for i in picked))


def kernel_bound(q: int, p: int) -> int:
    return math.comb(q * p, q)


def _kernelize(inst: Instance, kind: str) -> KernelResult:
    if inst.kind != kind:
        raise InstanceError(f"expected a {kind} instance, got {inst.kind}")
    problems = validate(inst)
    if problems:
        raise InstanceError("; ".join(problems))
    q, p = inst.q, inst.p
    if inst.m <= kernel_bound(q, p):
        return KernelResult(inst, tuple(range(inst.m)), tuple(range(inst.universe_size)))

    family = [Triple(tuple(sorted(m.elements)), m.index, m.weight) for m in inst.members]
    kept = RepEngine(inst.universe_size).represent(q, q * (p - 1), family)
    member_map = tuple(sorted(t.payload for t in kept))
    rows = [[inst.label(x) for x in inst.members[i].elements] for i in member_map]
    weights = [inst.members[i].weight for i in member_map]
    kernel = build_instance(kind, q, p, rows, weights)
    by_label = {e.label: e.id for e in inst.elements}
    element_map = tuple(by_label[e.label] for e in kernel.elements)
    return KernelResult(kernel, member_map, element_map)


def kernelize_wdm(inst: Instance) -> KernelResult:
    return _kernelize(inst, WDM)


def kernelize_wsp(inst: Instance) -> KernelResult:
    return _kernelize(inst, WSP)


def kernelize(inst: Instance) -> KernelResult:
    return _kernelize(inst, inst.kind)


def format_kernel(res: KernelResult) -> str:
    """Kernel instance text followed by comment-prefixed index maps."""
    lines = [serialize_instance(res.kernel).rstrip("\n")]
    lines += [f"# MAPM {k} {o}" for k, o in enumerate(res.member_map)]
    lines += [f"# MAPE {k} {res.kernel.label(k)}" for k in range(len(res.element_map))]
    return "\n".join(lines) + "\n"


def parse_kernel_maps(text: str) -> tuple[dict[int, int], dict[int, str]]:
    members: dict[int, int] = {}
    elements: dict[int, str] = {}
    for line in text.splitlines():
        tok = line.lstrip("#").split()
        if line.startswith("#") and len(tok) == 3 and tok[0] == "MAPM":
            members[int(tok[1])] = int(tok[2])
        elif line.startswith("#") and len(tok) == 3 and tok[0] == "MAPE":
            elements[int(tok[1])] = tok[2]
    return members, elements
