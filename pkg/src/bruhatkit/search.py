"""
Bitset-based color refinement and isomorphism backtracking.

One engine serves three callers: Bruhat-graph automorphism search
(undirected, with a pinned vertex image), poset anti-automorphism search
(Hasse digraph against its reversal), and orbit computations.  Vertex
sets are encoded as Python ints; vertex invariants ("colors") are plain
ints canonicalized per refinement round, so two independent runs over
isomorphic inputs produce comparable colors.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

DEFAULT_BUDGET = 2_000_000


class SearchBudgetExceeded(RuntimeError):
    """Backtracking node budget ran out: the answer is unknown, not 'no'."""


def bits(mask: int):
    """Iterate set bit positions of a Python-int bitset."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def refine_colors(
    out: Sequence[int],
    inn: Sequence[int] | None,
    init: Sequence,
) -> list[int]:
    """
    Iterated neighborhood refinement to a stable coloring.  ``out``/``inn``
    are adjacency bitsets (pass ``inn=None`` for undirected graphs);
    ``init`` is any list of comparable canonical keys.
    """
    n = len(out)
    directed = inn is not None
    order = {key: i for i, key in enumerate(sorted(set(init)))}
    colors = [order[key] for key in init]
    while True:
        sigs = []
        for v in range(n):
            so = tuple(sorted(Counter(colors[u] for u in bits(out[v])).items()))
            if directed:
                si = tuple(sorted(Counter(colors[u] for u in bits(inn[v])).items()))
                sigs.append((colors[v], so, si))
            else:
                sigs.append((colors[v], so))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[sig] for sig in sigs]
        if new == colors:
            return colors
        colors = new


def refine_joint(
    out_a: Sequence[int],
    inn_a: Sequence[int] | None,
    init_a: Sequence,
    out_b: Sequence[int],
    inn_b: Sequence[int] | None,
    init_b: Sequence,
) -> tuple[list[int], list[int]]:
    """Refine two graphs with one shared color table, so colors are
    directly comparable between the two sides."""
    na, nb = len(out_a), len(out_b)
    directed = inn_a is not None
    order = {key: i for i, key in enumerate(sorted(set(init_a) | set(init_b)))}
    ca = [order[key] for key in init_a]
    cb = [order[key] for key in init_b]

    def signature(colors, out, inn, v):
        so = tuple(sorted(Counter(colors[u] for u in bits(out[v])).items()))
        if directed:
            si = tuple(sorted(Counter(colors[u] for u in bits(inn[v])).items()))
            return (colors[v], so, si)
        return (colors[v], so)

    while True:
        sig_a = [signature(ca, out_a, inn_a, v) for v in range(na)]
        sig_b = [signature(cb, out_b, inn_b, v) for v in range(nb)]
        order = {sig: i for i, sig in enumerate(sorted(set(sig_a) | set(sig_b)))}
        new_a = [order[s] for s in sig_a]
        new_b = [order[s] for s in sig_b]
        if new_a == ca and new_b == cb:
            return ca, cb
        ca, cb = new_a, new_b


def find_isomorphism(
    out_a: Sequence[int],
    inn_a: Sequence[int] | None,
    out_b: Sequence[int],
    inn_b: Sequence[int] | None,
    colors_a: Sequence[int],
    colors_b: Sequence[int],
    pins: dict[int, int] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[int] | None:
    """
    Color-respecting digraph isomorphism A -> B by backtracking, or None.
    ``pins`` forces specific vertex images.  Raises SearchBudgetExceeded
    when the node budget runs out before the search space is exhausted.
    """
    n = len(out_a)
    if len(out_b) != n:
        return None
    if Counter(colors_a) != Counter(colors_b):
        return None
    directed = inn_a is not None
    if not directed:
        inn_a, inn_b = out_a, out_b
    pins = pins or {}
    for s, d in pins.items():
        if colors_a[s] != colors_b[d]:
            return None

    class_b: dict[int, int] = {}
    for v, c in enumerate(colors_b):
        class_b[c] = class_b.get(c, 0) | (1 << v)
    full = (1 << n) - 1

    # assignment order: pins first, then growing along adjacency so every new
    # vertex is constrained by earlier ones (small color class breaks ties)
    order: list[int] = list(pins)
    seen = set(order)
    cls_size = Counter(colors_a)
    pool = sorted(range(n), key=lambda v: (cls_size[colors_a[v]], v))
    touched = 0
    for v in order:
        touched |= out_a[v] | inn_a[v]
    while len(order) < n:
        nxt = next((v for v in pool if v not in seen and touched >> v & 1), None)
        if nxt is None:  # disconnected remainder
            nxt = next(v for v in pool if v not in seen)
        order.append(nxt)
        seen.add(nxt)
        touched |= out_a[nxt] | inn_a[nxt]

    mapping = [-1] * n
    used = 0
    nodes = 0

    def candidates(idx: int) -> int:
        v = order[idx]
        cand = class_b[colors_a[v]] & ~used & full
        if v in pins:
            cand &= 1 << pins[v]
        for j in range(idx):
            a = order[j]
            b = mapping[a]
            ov = out_a[a] >> v & 1
            iv = inn_a[a] >> v & 1
            if ov and iv:
                cand &= out_b[b] & inn_b[b]
            elif ov:
                cand &= out_b[b] & ~inn_b[b]
            elif iv:
                cand &= inn_b[b] & ~out_b[b]
            else:
                cand &= ~(out_b[b] | inn_b[b])
            if not cand:
                return 0
        return cand

    def rec(idx: int) -> bool:
        nonlocal used, nodes
        if idx == n:
            return True
        for b in bits(candidates(idx)):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"isomorphism search exceeded {budget} nodes")
            v = order[idx]
            mapping[v] = b
            used |= 1 << b
            if rec(idx + 1):
                return True
            used &= ~(1 << b)
            mapping[v] = -1
        return False

    if rec(0):
        return mapping
    return None


def color_histogram(colors: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Canonical multiset view of a coloring, for quick non-isomorphism tests."""
    return tuple(sorted(Counter(colors).items()))
