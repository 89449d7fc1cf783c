"""
Intervals, Bruhat graphs, Hasse diagrams, and poset-level predicates,
generic over the symmetric and right-angled backends.

All objects are immutable after construction; adjacency lives in Python-int
bitsets indexed by interval position (canonical order: by length, then by
serialized element).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .search import (
    SearchBudgetExceeded,
    bits,
    find_isomorphism,
    popcount,
    refine_joint,
)

SELF_DUAL_DEFAULT_BUDGET = 2_000_000


class NotComparableError(ValueError):
    """Raised when asked for [u, v] with u not below v."""


@dataclass(frozen=True)
class Interval:
    """Explicit element set of [u, v] with rank labels and internal order."""

    backend: object
    bottom: object
    top: object
    elements: tuple
    lengths: tuple[int, ...]
    index: dict = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def rank_of(self, x) -> int:
        return self.lengths[self.index[x]] - self.lengths[0]

    @property
    def height(self) -> int:
        return self.lengths[-1] - self.lengths[0]

    def rank_sizes(self) -> list[int]:
        sizes = [0] * (self.height + 1)
        base = self.lengths[0]
        for ell in self.lengths:
            sizes[ell - base] += 1
        return sizes

    def leq_masks(self) -> list[int]:
        """up_set[i] = bitset of positions j with elements[i] <= elements[j]."""
        if not hasattr(self, "_leq_masks"):
            masks = []
            for i, x in enumerate(self.elements):
                m = 0
                for j, y in enumerate(self.elements):
                    if self.lengths[i] <= self.lengths[j] and self.backend.leq(x, y):
                        m |= 1 << j
                masks.append(m)
            object.__setattr__(self, "_leq_masks", masks)
        return self._leq_masks

    def leq_in(self, i: int, j: int) -> bool:
        return bool(self.leq_masks()[i] >> j & 1)

    def serialize(self, i: int) -> str:
        return self.backend.serialize(self.elements[i])


def build_interval(backend, u, v) -> Interval:
    """
    Enumerate [u, v]; raises NotComparableError unless u <= v.

    Type A filters the ambient group through cached rank-matrix tables;
    the right-angled backend filters the subword-generated lower set of v.
    """
    if not backend.leq(u, v):
        raise NotComparableError(
            f"{backend.serialize(u)} is not below {backend.serialize(v)}"
        )
    elements = tuple(backend.interval_elements(u, v))
    lengths = tuple(backend.length(x) for x in elements)
    index = {x: i for i, x in enumerate(elements)}
    return Interval(backend, u, v, elements, lengths, index)


def build_interval_by_cover_bfs(backend, u, v) -> Interval:
    """
    Test-oracle construction: descend from v along covers, then filter >= u.
    Only for the symmetric backend (it needs cover enumeration).
    """
    from . import perms

    if not backend.leq(u, v):
        raise NotComparableError("bottom not below top")
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for y in perms.covers_down(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    elements = tuple(
        sorted((x for x in seen if backend.leq(u, x)), key=backend.sort_key)
    )
    lengths = tuple(backend.length(x) for x in elements)
    return Interval(backend, u, v, elements, lengths, {x: i for i, x in enumerate(elements)})


@dataclass(frozen=True)
class BruhatGraph:
    """Undirected reflection-edge graph on an interval."""

    interval: Interval
    adj: tuple[int, ...]  # bitsets by interval position

    @property
    def size(self) -> int:
        return self.interval.size

    def edge_count(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in bits(self.adj[i]) if j > i]

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self.adj]

    def is_regular(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) <= 1


@dataclass(frozen=True)
class HasseDiagram:
    """Cover-edge graph of the interval, kept with its orientation."""

    interval: Interval
    adj: tuple[int, ...]        # undirected cover adjacency
    up: tuple[int, ...]         # up[i] = covers above element i
    down: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.interval.size

    def edge_count(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def cover_pairs(self) -> list[tuple[int, int]]:
        """(lower, upper) pairs."""
        return [(i, j) for i in range(self.size) for j in bits(self.up[i])]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in bits(self.adj[i]) if j > i]


def build_bruhat_graph(iv: Interval) -> BruhatGraph:
    adj = [0] * iv.size
    for p, q in iv.backend.reflection_edges(list(iv.elements), iv.index):
        adj[p] |= 1 << q
        adj[q] |= 1 << p
    return BruhatGraph(iv, tuple(adj))


def build_hasse_diagram(iv: Interval) -> HasseDiagram:
    """Cover edges: length difference one plus comparability."""
    size = iv.size
    up = [0] * size
    down = [0] * size
    adj = [0] * size
    by_rank: dict[int, list[int]] = {}
    for i, ell in enumerate(iv.lengths):
        by_rank.setdefault(ell, []).append(i)
    masks = iv.leq_masks()
    for ell, lows in sorted(by_rank.items()):
        highs = by_rank.get(ell + 1, [])
        for i in lows:
            for j in highs:
                if masks[i] >> j & 1:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
    return HasseDiagram(iv, tuple(adj), tuple(up), tuple(down))


def distance_sets(g: BruhatGraph, x) -> list[set]:
    """BFS layers N_d(x) as sets of elements; N_0 = {x}."""
    iv = g.interval
    if x not in iv.index:
        raise ValueError(f"{iv.backend.serialize(x)} is not in the interval")
    start = iv.index[x]
    layers = []
    seen = 1 << start
    frontier = 1 << start
    while frontier:
        layers.append({iv.elements[i] for i in bits(frontier)})
        nxt = 0
        for i in bits(frontier):
            nxt |= g.adj[i]
        frontier = nxt & ~seen
        seen |= frontier
    return layers


def is_rank_symmetric(iv: Interval) -> bool:
    """
    >>> from .groups import SymmetricBackend
    >>> b = SymmetricBackend(3)
    >>> is_rank_symmetric(build_interval(b, (1, 2, 3), (3, 2, 1)))
    True
    """
    sizes = iv.rank_sizes()
    return sizes == sizes[::-1]


def self_dual_map(iv: Interval, budget: int = SELF_DUAL_DEFAULT_BUDGET) -> list[int] | None:
    """
    An order-reversing bijection of the interval (as a position map), or
    None when none exists.  Found by matching the Hasse digraph against its
    reversal, with joint (rank, up/down degree) refinement for pruning.
    Raises SearchBudgetExceeded when the node budget runs out.
    """
    h = build_hasse_diagram(iv)
    height = iv.height
    ranks = [ell - iv.lengths[0] for ell in iv.lengths]
    init_a = [
        (ranks[i], popcount(h.up[i]), popcount(h.down[i])) for i in range(iv.size)
    ]
    # the dual poset flips rank and swaps up with down
    init_b = [
        (height - ranks[i], popcount(h.down[i]), popcount(h.up[i]))
        for i in range(iv.size)
    ]
    colors_a, colors_b = refine_joint(h.up, h.down, init_a, h.down, h.up, init_b)
    return find_isomorphism(
        h.up, h.down, h.down, h.up, colors_a, colors_b, budget=budget
    )


def is_self_dual(iv: Interval, budget: int = SELF_DUAL_DEFAULT_BUDGET) -> bool:
    """True iff the interval carries an order-reversing bijection."""
    return self_dual_map(iv, budget=budget) is not None


def hexagon_violation(g: BruhatGraph, sample_budget: int | None = None):
    """
    Search for six distinct vertices x1..x6 carrying the edge pattern
    x1-x2, x1-x3, x2-x4, x2-x5, x3-x4, x3-x5, x4-x6, x5-x6 but missing the
    edge x1-x6.  Returns the offending 6-tuple of elements, or None.

    The scan is exhaustive; ``sample_budget`` caps the number of examined
    configurations (None = unlimited), counting each (x2, x3, x1, x4, x5)
    choice once.
    """
    adj = g.adj
    n = g.size
    examined = 0
    for b in range(n):
        for c in range(b + 1, n):
            common = adj[b] & adj[c]
            if popcount(common) < 3:
                continue
            commons = list(bits(common))
            for x1 in commons:
                rest = [v for v in commons if v != x1]
                for ii, x4 in enumerate(rest):
                    for x5 in rest[ii + 1 :]:
                        examined += 1
                        if sample_budget is not None and examined > sample_budget:
                            return None
                        tops = adj[x4] & adj[x5] & ~(
                            (1 << x1) | (1 << b) | (1 << c) | (1 << x4) | (1 << x5)
                        )
                        bad = tops & ~adj[x1] & ~(1 << x1)
                        if bad:
                            x6 = next(bits(bad))
                            els = g.interval.elements
                            return (els[x1], els[b], els[c], els[x4], els[x5], els[x6])
    return None


def hexagon_property_check(g: BruhatGraph, sample_budget: int | None = None) -> bool:
    """True iff no hexagon-closure violation was found."""
    return hexagon_violation(g, sample_budget) is None


# -- exports ---------------------------------------------------------------


def graph_to_dot(graph, name: str = "bruhat") -> str:
    """DOT text with serialized-element labels and rank attributes."""
    iv = graph.interval
    lines = [f"graph {name} {{"]
    for i in range(iv.size):
        label = iv.serialize(i)
        lines.append(f'  n{i} [label="{label}" rank={iv.rank_of(iv.elements[i])}];')
    for i, j in graph.edges():
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_adjacency_json(graph) -> str:
    iv = graph.interval
    payload = {
        "bottom": iv.serialize(0),
        "top": iv.serialize(iv.size - 1),
        "nodes": [
            {"id": i, "element": iv.serialize(i), "rank": iv.rank_of(iv.elements[i])}
            for i in range(iv.size)
        ],
        "edges": [[i, j] for i, j in graph.edges()],
    }
    return json.dumps(payload, sort_keys=True)
