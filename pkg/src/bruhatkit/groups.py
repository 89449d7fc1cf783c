"""
Group backends shared by the interval/graph layer.

Two backends expose one small protocol (identity, mult, inverse, length,
leq, interval enumeration, reflection-edge test, serialization): the
symmetric group S_n and right-angled Coxeter groups.  The symmetric
backend caches per-rank lookup tables (windows, lengths, pairwise order)
so that whole-group sweeps stay cheap.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import perms
from .racg import RacgPresentation, DEFAULT_INTERVAL_CAP


class SymmetricUniverse:
    """Cached tables for one S_n: canonical element order plus bulk
    rank-matrix comparisons; build once, share everywhere."""

    def __init__(self, n: int):
        self.n = n
        self.windows: list[perms.Perm] = perms.all_perms(n)
        self.index: dict[perms.Perm, int] = {w: i for i, w in enumerate(self.windows)}
        self.lengths = np.fromiter(
            (perms.length(w) for w in self.windows), dtype=np.int32
        )
        flat = np.empty((len(self.windows), n * n), dtype=np.int8)
        for i, w in enumerate(self.windows):
            rm = perms.rank_matrix(w)
            flat[i] = [entry for row in rm for entry in row]
        self._rank_flat = flat
        self.transpositions = [
            (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
        ]
        self._leq: np.ndarray | None = None
        self._trans_table: np.ndarray | None = None

    @property
    def size(self) -> int:
        return len(self.windows)

    @property
    def leq(self) -> np.ndarray:
        """Boolean matrix leq[i, j] == (windows[i] <= windows[j])."""
        if self._leq is None:
            m = np.empty((self.size, self.size), dtype=bool)
            for j in range(self.size):
                m[:, j] = (self._rank_flat <= self._rank_flat[j]).all(axis=1)
            self._leq = m
        return self._leq

    @property
    def trans_table(self) -> np.ndarray:
        """trans_table[i, k] = index of windows[i] * t for the k-th transposition."""
        if self._trans_table is None:
            tbl = np.empty((self.size, len(self.transpositions)), dtype=np.int32)
            for i, w in enumerate(self.windows):
                lst = list(w)
                for k, (a, b) in enumerate(self.transpositions):
                    lst[a - 1], lst[b - 1] = lst[b - 1], lst[a - 1]
                    tbl[i, k] = self.index[tuple(lst)]
                    lst[a - 1], lst[b - 1] = lst[b - 1], lst[a - 1]
            self._trans_table = tbl
        return self._trans_table

    def interval_indices(self, u: perms.Perm, v: perms.Perm) -> np.ndarray:
        mask = self.leq[self.index[u], :] & self.leq[:, self.index[v]]
        return np.nonzero(mask)[0]


@lru_cache(maxsize=None)
def symmetric_universe(n: int) -> SymmetricUniverse:
    return SymmetricUniverse(n)


class SymmetricBackend:
    """S_n backend over one-line windows."""

    kind = "symmetric"

    def __init__(self, n: int):
        self.n = n

    @property
    def universe(self) -> SymmetricUniverse:
        return symmetric_universe(self.n)

    def identity(self):
        return perms.identity(self.n)

    def mult(self, x, y):
        return perms.compose(x, y)

    def inverse(self, x):
        return perms.inverse(x)

    def length(self, x) -> int:
        return perms.length(x)

    def leq(self, u, v) -> bool:
        return perms.bruhat_leq(u, v)

    def serialize(self, x) -> str:
        return perms.to_string(x)

    def parse(self, text: str):
        w = perms.from_string(text)
        if len(w) != self.n:
            raise ValueError(f"expected rank {self.n}, got {len(w)}")
        return w

    def sort_key(self, x):
        return (perms.length(x), x)

    def generators(self) -> range:
        return range(1, self.n)

    def simple(self, i: int):
        return perms.simple(self.n, i)

    def left_descents(self, x) -> frozenset[int]:
        return perms.left_descents(x)

    def right_descents(self, x) -> frozenset[int]:
        return perms.right_descents(x)

    def support(self, x) -> frozenset[int]:
        return perms.support(x)

    def interval_elements(self, u, v) -> list:
        uni = self.universe
        return [uni.windows[i] for i in uni.interval_indices(u, v)]

    def reflection_edges(self, elements: list, index: dict) -> list[tuple[int, int]]:
        """Edges among ``elements`` (positions into the list) given by
        right multiplication by a transposition."""
        uni = self.universe
        tbl = uni.trans_table
        ids = [uni.index[x] for x in elements]
        pos_of = {g: p for p, g in enumerate(ids)}
        edges = []
        for p, g in enumerate(ids):
            for h in tbl[g]:
                q = pos_of.get(int(h))
                if q is not None and q > p:
                    edges.append((p, q))
        return edges

    def all_elements(self) -> list:
        return list(self.universe.windows)


class RacgBackend:
    """Right-angled backend over normal-form words."""

    kind = "racg"

    def __init__(self, presentation: RacgPresentation, interval_cap: int = DEFAULT_INTERVAL_CAP):
        self.presentation = presentation
        self.interval_cap = interval_cap
        self._reflection_cache: dict[tuple, bool] = {}

    def identity(self):
        return ()

    def mult(self, x, y):
        return self.presentation.mult(x, y)

    def inverse(self, x):
        return self.presentation.inverse(x)

    def length(self, x) -> int:
        return len(x)

    def leq(self, u, v) -> bool:
        return self.presentation.bruhat_leq(u, v)

    def serialize(self, x) -> str:
        return self.presentation.element_to_string(x)

    def parse(self, text: str):
        return self.presentation.element_from_string(text)

    def sort_key(self, x):
        return (len(x), x)

    def generators(self) -> range:
        return range(1, self.presentation.generator_count + 1)

    def simple(self, i: int):
        return (i,)

    def left_descents(self, x) -> frozenset[int]:
        return self.presentation.left_descent_set(x)

    def right_descents(self, x) -> frozenset[int]:
        return self.presentation.right_descent_set(x)

    def support(self, x) -> frozenset[int]:
        return frozenset(x)

    def interval_elements(self, u, v) -> list:
        p = self.presentation
        below = p.lower_interval(v, cap=self.interval_cap)
        return sorted((x for x in below if p.bruhat_leq(u, x)), key=self.sort_key)

    def _is_reflection_pair(self, x, y) -> bool:
        t = self.presentation.mult(self.presentation.inverse(x), y)
        hit = self._reflection_cache.get(t)
        if hit is None:
            hit = self.presentation.is_reflection(t)
            self._reflection_cache[t] = hit
        return hit

    def reflection_edges(self, elements: list, index: dict) -> list[tuple[int, int]]:
        edges = []
        for p in range(len(elements)):
            for q in range(p + 1, len(elements)):
                # reflection edges change length by an odd amount
                if (len(elements[p]) - len(elements[q])) % 2 == 0:
                    continue
                if self._is_reflection_pair(elements[p], elements[q]):
                    edges.append((p, q))
        return edges


def parabolic_decompose_generic(backend, w, J: frozenset[int]):
    """w = w^J * w_J over any backend, by peeling right descents from J."""
    quot = w
    while True:
        ds = backend.right_descents(quot) & J
        if not ds:
            break
        quot = backend.mult(quot, backend.simple(min(ds)))
    return quot, backend.mult(backend.inverse(quot), w)


def disjoint_support_split(backend, w):
    """
    A factorization w = w' * w'' with disjoint supports and both parts
    nontrivial, or None.  Scans parabolic decompositions over all proper
    generator subsets (deterministically, smallest subset first).
    """
    gens = sorted(backend.generators())
    subsets = []
    for mask in range(1, 1 << len(gens)):
        subsets.append(frozenset(g for k, g in enumerate(gens) if mask >> k & 1))
    subsets.sort(key=lambda J: (len(J), sorted(J)))
    for J in subsets:
        if len(J) == len(gens):
            continue
        quot, part = parabolic_decompose_generic(backend, w, J)
        if (
            part != backend.identity()
            and quot != backend.identity()
            and not (backend.support(quot) & backend.support(part))
        ):
            return quot, part
    return None
