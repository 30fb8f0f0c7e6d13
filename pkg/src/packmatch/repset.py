"""Max r-representative subfamilies over a uniform matroid.

The rank-``k`` uniform matroid on ``U`` (``k = s + r``) is represented by the
``k x |U|`` Vandermonde matrix over GF(prime) with node ``id(u)`` for element
``u``. An ``s``-set ``X`` is embedded as the vector of all ``s x s`` minors of
its columns (its exterior product). For a blocker ``Y`` the map
``v -> v ^ wedge(Y)`` is linear and kills ``wedge(X)`` exactly when ``X`` meets
``Y``, so a greedy max-weight basis of the minor vectors keeps, for every
blocker, some heaviest member avoiding it. At most ``C(s+r, s)`` triples
survive.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

import numpy as np

# products of two residues must fit in int64
MAX_PRIME = 2**31 - 1


@dataclass(frozen=True, eq=False)
class Triple:
    """An element set ``X``, the partial solution it encodes and its weight."""

    X: tuple[int, ...]
    payload: Any
    W: int


@dataclass(frozen=True)
class RepQuery:
    universe_size: int
    s: int
    r: int


def smallest_prime_at_least(n: int) -> int:
    n = max(n, 2)
    while True:
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            return n
        n += 1


@lru_cache(maxsize=None)
def _subset_tables(k: int, s: int):
    """Colex-ordered t-subsets of rows 0..k-1 for t = 0..s, with Laplace links.

    For each level t >= 1 returns ``(child, row, sign)`` arrays of shape
    ``(C(k, t), t)``: expanding the minor on rows ``J`` along its last column,
    term ``a`` uses row ``J[a]``, the minor on ``J - {J[a]}`` one level down,
    and cofactor sign ``(-1)^(a + t - 1)``.
    """
    index: list[dict[tuple[int, ...], int]] = []
    for t in range(s + 1):
        subs = sorted(itertools.combinations(range(k), t), key=lambda J: J[::-1])
        index.append({J: n for n, J in enumerate(subs)})
    levels = []
    for t in range(1, s + 1):
        subs = list(index[t])
        child = np.empty((len(subs), t), dtype=np.int64)
        row = np.empty((len(subs), t), dtype=np.int64)
        for n, J in enumerate(subs):
            for a in range(t):
                child[n, a] = index[t - 1][J[:a] + J[a + 1:]]
                row[n, a] = J[a]
        sign = np.array([(-1) ** (a + t - 1) for a in range(t)], dtype=np.int64)
        levels.append((child, row, sign))
    return [list(ix) for ix in index], levels


class FieldMatrixContext:
    """Vandermonde representation of the rank ``s + r`` uniform matroid."""

    def __init__(self, universe_size: int, s: int, r: int):
        if s < 0 or r < 0:
            raise ValueError(f"s and r must be non-negative, got s={s}, r={r}")
        self.universe_size = universe_size
        self.s = s
        self.r = r
        self.k = s + r
        self.prime = smallest_prime_at_least(universe_size)
        if self.prime > MAX_PRIME:
            raise ValueError(f"universe of size {universe_size} is too large")
        self.dim = math.comb(self.k, s)
        subsets, self._levels = _subset_tables(self.k, s)
        self.row_subsets = subsets[s]

    def node(self, u: int) -> int:
        return u

    def _check(self, X: Sequence[int]) -> None:
        if len(X) != self.s:
            raise ValueError(f"expected a set of size {self.s}, got {len(X)}")
        if any(b <= a for a, b in zip(X, X[1:])):
            raise ValueError(f"element set {tuple(X)} is not strictly ascending")
        if X and not (0 <= X[0] and X[-1] < self.universe_size):
            raise ValueError(f"element id out of range in {tuple(X)}")

    def minor_vector(self, X: Sequence[int]) -> np.ndarray:
        return self.minor_vectors([X])[0]

    def minor_vectors(self, Xs: Sequence[Sequence[int]]) -> np.ndarray:
        """Minor vectors of a batch of sorted ``s``-sets, shape ``(len(Xs), dim)``."""
        for X in Xs:
            self._check(X)
        p = self.prime
        cols = np.asarray(Xs, dtype=np.int64).reshape(len(Xs), self.s)
        vec = np.ones((len(Xs), 1), dtype=np.int64)
        for t, (child, row, sign) in enumerate(self._levels, start=1):
            node = cols[:, t - 1] % p
            pw = np.empty((len(Xs), self.k), dtype=np.int64)
            pw[:, 0] = 1
            for i in range(1, self.k):
                pw[:, i] = pw[:, i - 1] * node % p
            terms = pw[:, row] * vec[:, child] % p
            vec = (terms * sign).sum(axis=-1) % p
        return vec


class _Basis:
    """Row-reduced echelon basis over GF(prime), grown one vector at a time."""

    def __init__(self, dim: int, prime: int):
        self.prime = prime
        self.rows = np.zeros((0, dim), dtype=np.int64)
        self.pivots: list[int] = []
        self._chunk = max(1, (2**62) // ((prime - 1) ** 2 or 1))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, v: np.ndarray) -> bool:
        p = self.prime
        v = v % p
        if self.pivots:
            coef = v[self.pivots]
            for lo in range(0, len(coef), self._chunk):
                hi = lo + self._chunk
                v = (v - coef[lo:hi] @ self.rows[lo:hi]) % p
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = v * pow(int(v[c]), p - 2, p) % p
        if self.rank:
            self.rows = (self.rows - np.outer(self.rows[:, c], v) % p) % p
        self.rows = np.vstack([self.rows, v])
        self.pivots.append(c)
        return True


def _greedy(ctx: FieldMatrixContext, family: Sequence[Triple]) -> list[Triple]:
    if not family:
        return []
    order = sorted(range(len(family)), key=lambda n: -family[n].W)
    vecs = ctx.minor_vectors([family[n].X for n in order])
    basis = _Basis(ctx.dim, ctx.prime)
    kept = []
    for n, v in zip(order, vecs):
        if basis.insert(v):
            kept.append(family[n])
            if basis.rank == ctx.dim:
                break
    return kept


def represent(query: RepQuery, family: Sequence[Triple]) -> list[Triple]:
    """Return a subfamily of ``family`` that max ``r``-represents it.

    Triples are scanned by weight descending, then position; each one whose
    minor vector is independent of those already kept is kept. The result
    has at most ``C(s + r, s)`` triples, the same objects as the input.
    """
    ctx = FieldMatrixContext(query.universe_size, query.s, query.r)
    return _greedy(ctx, family)


class RepEngine:
    """``represent`` bound to one universe, with cached contexts and stats.

    The solvers take an engine so they can share field tables across the
    many calls of one run and report the largest family they kept.
    """

    def __init__(self, universe_size: int):
        self.universe_size = universe_size
        self._contexts: dict[tuple[int, int], FieldMatrixContext] = {}
        self._lock = threading.Lock()
        self.calls = 0
        self.peak = 0

    def context(self, s: int, r: int) -> FieldMatrixContext:
        ctx = self._contexts.get((s, r))
        if ctx is None:
            ctx = FieldMatrixContext(self.universe_size, s, r)
            with self._lock:
                ctx = self._contexts.setdefault((s, r), ctx)
        return ctx

    def represent(self, s: int, r: int, family: Sequence[Triple]) -> list[Triple]:
        kept = _greedy(self.context(s, r), family)
        with self._lock:
            self.calls += 1
            self.peak = max(self.peak, len(kept))
        return kept
