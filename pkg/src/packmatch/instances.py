"""Problem instances for weighted matching (WDM) and set packing (WSP).

Element labels are interned to dense ids in first-appearance order. That
order is the ascending order every solver iterates in.
"""

from __future__ import annotations

import io
import math
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO

WDM = "WDM"
WSP = "WSP"
KINDS = (WDM, WSP)


class InstanceError(ValueError):
    """Malformed or invalid instance input."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class ElementRef:
    id: int
    coord: Optional[int]  # 1..q for WDM, None for WSP
    label: str


@dataclass(frozen=True)
class MemberRecord:
    index: int
    elements: tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class Instance:
    kind: str
    q: int
    p: int
    elements: tuple[ElementRef, ...]
    universes: tuple[tuple[int, ...], ...]
    members: tuple[MemberRecord, ...]

    @property
    def universe_size(self) -> int:
        return len(self.elements)

    @property
    def m(self) -> int:
        return len(self.members)

    def label(self, eid: int) -> str:
        return self.elements[eid].label

    def weight_of(self, picked: Iterable[int]) -> int:
        return sum(self.members[i].weight for i in picked)


@dataclass(frozen=True)
class Solution:
    picked: tuple[int, ...]
    total_weight: int


def build_instance(
    kind: str,
    q: int,
    p: int,
    rows: Sequence[Sequence[str]],
    weights: Sequence[int],
    line_numbers: Optional[Sequence[int]] = None,
) -> Instance:
    """Intern labelled rows into an :class:`Instance` and validate it.

    Ids follow first appearance, scanning rows in order. For WSP each set is
    stored with its element ids ascending, so the ``j`` smallest elements
    form a prefix. This keeps ``parse(serialize(x)) == x``.
    """
    if kind not in KINDS:
        raise InstanceError(f"unknown instance kind {kind!r}")
    def where(index: int) -> Optional[int]:
        return line_numbers[index] if line_numbers is not None else None

    ids: dict[str, int] = {}
    coord_of: dict[str, Optional[int]] = {}
    members = []
    for index, (row, weight) in enumerate(zip(rows, weights)):
        if len(row) != q:
            raise InstanceError(
                f"member {index} has {len(row)} elements, expected {q}", where(index)
            )
        elems = []
        for pos, lab in enumerate(row):
            coord = pos + 1 if kind == WDM else None
            if lab not in ids:
                ids[lab] = len(ids)
                coord_of[lab] = coord
            elif coord_of[lab] != coord:
                raise InstanceError(
                    f"element {lab!r} appears in coordinates {coord_of[lab]} and {coord}",
                    where(index),
                )
            elems.append(ids[lab])
        if kind == WSP:
            if len(set(elems)) != q:
                raise InstanceError(f"duplicate element in set {index}", where(index))
            elems.sort()
        members.append(MemberRecord(index, tuple(elems), int(weight)))

    elements = tuple(ElementRef(i, coord_of[lab], lab) for lab, i in ids.items())
    if kind == WDM:
        universes = tuple(
            tuple(e.id for e in elements if e.coord == c) for c in range(1, q + 1)
        )
    else:
        universes = (tuple(range(len(elements))),)
    inst = Instance(kind, q, p, elements, universes, tuple(members))
    problems = validate(inst)
    if problems:
        raise InstanceError("; ".join(problems))
    return inst


def validate(inst: Instance) -> list[str]:
    """Return every invariant violation of ``inst`` (empty list when valid)."""
    out: list[str] = []
    if inst.kind not in KINDS:
        out.append(f"unknown kind {inst.kind!r}")
        return out
    if inst.q < 2:
        out.append(f"q must be >= 2, got {inst.q}")
    if inst.p < 1:
        out.append(f"p must be >= 1, got {inst.p}")
    n = len(inst.elements)
    for i, e in enumerate(inst.elements):
        if e.id != i:
            out.append(f"element {e.label!r} has id {e.id}, expected {i}")
        if inst.kind == WDM and not (e.coord is not None and 1 <= e.coord <= inst.q):
            out.append(f"element {e.label!r} has bad coordinate {e.coord}")
    if inst.kind == WDM and len(inst.universes) != inst.q:
        out.append(f"expected {inst.q} universes, got {len(inst.universes)}")
    declared = [x for u in inst.universes for x in u]
    if sorted(declared) != list(range(n)):
        out.append("universes do not partition the element ids")

    used: set[int] = set()
    for k, mem in enumerate(inst.members):
        if mem.index != k:
            out.append(f"member at position {k} has index {mem.index}")
        if len(mem.elements) != inst.q:
            out.append(f"member {k} has {len(mem.elements)} elements, expected {inst.q}")
            continue
        if any(not 0 <= x < n for x in mem.elements):
            out.append(f"member {k} references an unknown element")
            continue
        used.update(mem.elements)
        if inst.kind == WDM:
            for pos, x in enumerate(mem.elements):
                if inst.elements[x].coord != pos + 1:
                    out.append(
                        f"member {k}: element {inst.elements[x].label!r} of "
                        f"U_{inst.elements[x].coord} in coordinate {pos + 1}"
                    )
        elif len(set(mem.elements)) != inst.q:
            out.append(f"member {k} repeats an element")
    for e in inst.elements:
        if e.id not in used:
            out.append(f"element {e.label!r} appears in no member")
    return out


def check_solution(inst: Instance, sol: Solution) -> list[str]:
    """Violations of the Solution invariants for ``sol`` against ``inst``."""
    out = []
    if len(sol.picked) != inst.p or len(set(sol.picked)) != len(sol.picked):
        out.append(f"expected {inst.p} distinct members, got {list(sol.picked)}")
    if any(not 0 <= i < inst.m for i in sol.picked):
        out.append("picked index out of range")
        return out
    seen: set[int] = set()
    for i in sol.picked:
        elems = set(inst.members[i].elements)
        if seen & elems:
            out.append(f"member {i} overlaps an earlier pick")
        seen |= elems
    if inst.weight_of(sol.picked) != sol.total_weight:
        out.append("total weight does not match picked members")
    return out


# --- text I/O -----------------------------------------------------------


def parse_instance(text: str | TextIO) -> Instance:
    if not isinstance(text, str):
        text = text.read()
    header = None
    rows: list[list[str]] = []
    weights: list[int] = []
    where: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if header is None:
            if len(tok) != 3 or tok[0] not in KINDS:
                raise InstanceError("expected header 'WDM <q> <p>' or 'WSP <q> <p>'", lineno)
            try:
                q, p = int(tok[1]), int(tok[2])
            except ValueError:
                raise InstanceError("q and p must be integers", lineno) from None
            if q < 2 or p < 1:
                raise InstanceError("need q >= 2 and p >= 1", lineno)
            header = (tok[0], q, p)
            tag = "T" if tok[0] == WDM else "S"
            continue
        kind, q, _ = header
        if tok[0] != tag:
            raise InstanceError(f"expected a '{tag}' line for {kind}, got {tok[0]!r}", lineno)
        if len(tok) != q + 2:
            raise InstanceError(f"expected {q} elements and a weight", lineno)
        try:
            w = int(tok[-1])
        except ValueError:
            raise InstanceError(f"bad weight {tok[-1]!r}", lineno) from None
        if kind == WSP and len(set(tok[1:-1])) != q:
            raise InstanceError("duplicate element in set", lineno)
        rows.append(tok[1:-1])
        weights.append(w)
        where.append(lineno)
    if header is None:
        raise InstanceError("empty input: missing header")
    return build_instance(header[0], header[1], header[2], rows, weights, where)


def serialize_instance(inst: Instance) -> str:
    buf = io.StringIO()
    buf.write(f"{inst.kind} {inst.q} {inst.p}\n")
    tag = "T" if inst.kind == WDM else "S"
    for mem in inst.members:
        labels = " ".join(inst.label(x) for x in mem.elements)
        buf.write(f"{tag} {labels} {mem.weight}\n")
    return buf.getvalue()


def format_solution(sol: Optional[Solution]) -> str:
    if sol is None:
        return "REJECT\n"
    lines = [f"WEIGHT {sol.total_weight}"]
    lines += [f"PICK {i}" for i in sol.picked]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Optional[Solution]:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if lines == [["REJECT"]]:
        return None
    if not lines or lines[0][0] != "WEIGHT":
        raise ValueError("solution must start with WEIGHT or be REJECT")
    picks = tuple(int(tok[1]) for tok in lines[1:] if tok[0] == "PICK")
    return Solution(picks, int(lines[0][1]))


def to_wsp(inst: Instance) -> Instance:
    """Re-encode a WDM instance as WSP with the same members and weights."""
    rows = [[inst.label(x) for x in mem.elements] for mem in inst.members]
    return build_instance(WSP, inst.q, inst.p, rows, [m.weight for m in inst.members])


# --- generators ---------------------------------------------------------


def _sizes(kind: str, q: int, universe_sizes: int | Sequence[int]) -> list[int]:
    if isinstance(universe_sizes, int):
        sizes = [universe_sizes] * (q if kind == WDM else 1)
    else:
        sizes = list(universe_sizes)
    want = q if kind == WDM else 1
    if len(sizes) != want:
        raise ValueError(f"{kind} needs {want} universe size(s), got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError("universe sizes must be >= 1")
    return sizes


def _capacity(kind: str, q: int, sizes: list[int]) -> int:
    return math.prod(sizes) if kind == WDM else math.comb(sizes[0], q)


def _draw(rng: random.Random, kind: str, q: int, sizes: list[int]) -> tuple[int, ...]:
    if kind == WDM:
        return tuple(rng.randrange(s) for s in sizes)
    return tuple(sorted(rng.sample(range(sizes[0]), q)))


def _labels(kind: str, key: tuple[int, ...]) -> list[str]:
    if kind == WDM:
        return [f"{chr(ord('a') + c) if c < 26 else f'c{c}_'}{x}" for c, x in enumerate(key)]
    return [f"e{x}" for x in key]


def gen_random(
    seed: int,
    kind: str,
    q: int,
    p: int,
    universe_sizes: int | Sequence[int],
    m: int,
    weight_lo: int,
    weight_hi: int,
) -> Instance:
    """Draw ``m`` distinct members uniformly at random.

    Duplicates are resampled; elements that end up unused are pruned.
    """
    sizes = _sizes(kind, q, universe_sizes)
    if m < 1:
        raise ValueError("m must be >= 1")
    if weight_lo > weight_hi:
        raise ValueError("weight_lo > weight_hi")
    if kind == WSP and sizes[0] < q:
        raise ValueError(f"universe of size {sizes[0]} has no {q}-subsets")
    cap = _capacity(kind, q, sizes)
    if m > cap:
        raise ValueError(f"requested {m} members but only {cap} distinct ones exist")
    rng = random.Random(seed)
    keys: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    while len(keys) < m:
        key = _draw(rng, kind, q, sizes)
        if key in seen:
            continue
        seen.add(key)
        keys.append(key)
    weights = [rng.randint(weight_lo, weight_hi) for _ in keys]
    return build_instance(kind, q, p, [_labels(kind, k) for k in keys], weights)


def gen_planted(
    seed: int,
    kind: str,
    q: int,
    p: int,
    universe_sizes: int | Sequence[int],
    m_extra: int,
    weight_lo: int,
    weight_hi: int,
) -> tuple[Instance, int]:
    """Plant ``p`` disjoint members, then add ``m_extra`` random distinct ones.

    Returns the instance and the planted total weight, a lower bound on the
    optimum.
    """
    sizes = _sizes(kind, q, universe_sizes)
    if weight_lo > weight_hi:
        raise ValueError("weight_lo > weight_hi")
    if kind == WDM and min(sizes) < p:
        raise ValueError(f"every universe needs at least p={p} elements")
    if kind == WSP and sizes[0] < q * p:
        raise ValueError(f"universe needs at least q*p={q * p} elements")
    cap = _capacity(kind, q, sizes)
    if p + m_extra > cap:
        raise ValueError(f"requested {p + m_extra} members but only {cap} distinct ones exist")
    rng = random.Random(seed)
    if kind == WDM:
        cols = [rng.sample(range(s), p) for s in sizes]
        planted = [tuple(col[k] for col in cols) for k in range(p)]
    else:
        pool = rng.sample(range(sizes[0]), q * p)
        planted = [tuple(sorted(pool[k * q:(k + 1) * q])) for k in range(p)]
    seen = set(planted)
    extra: list[tuple[int, ...]] = []
    while len(extra) < m_extra:
        key = _draw(rng, kind, q, sizes)
        if key in seen:
            continue
        seen.add(key)
        extra.append(key)
    keyed = [(k, True) for k in planted] + [(k, False) for k in extra]
    rng.shuffle(keyed)
    weights = [rng.randint(weight_lo, weight_hi) for _ in keyed]
    planted_weight = sum(w for (_, is_planted), w in zip(keyed, weights) if is_planted)
    inst = build_instance(kind, q, p, [_labels(kind, k) for k, _ in keyed], weights)
    return inst, planted_weight
