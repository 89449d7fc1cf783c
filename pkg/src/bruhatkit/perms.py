"""
Exact arithmetic and Bruhat-order primitives for the symmetric group S_n.

Permutations are tuples in one-line notation with 1-based values, so
``(3, 5, 1, 4, 2)`` is the map 1->3, 2->5, 3->1, 4->4, 5->2.  All functions
are pure; tuples are hashable and safe to share between threads.

Generator indices are 1-based as well: ``i`` stands for the adjacent
transposition swapping ``i`` and ``i+1``, and generator subsets are plain
sets/frozensets of such indices.
"""

from __future__ import annotations

from itertools import permutations as _itertools_permutations
from typing import Iterable, Sequence

Perm = tuple[int, ...]
GeneratorSet = frozenset[int]


class RankMismatchError(ValueError):
    """Raised when two permutations of different ranks are combined."""


def perm(window: Iterable[int]) -> Perm:
    """
    Validate and freeze a one-line window.

    >>> perm([3, 5, 1, 4, 2])
    (3, 5, 1, 4, 2)
    >>> perm([1, 1, 2])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation window: (1, 1, 2)
    """
    w = tuple(window)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation window: {w}")
    return w


def identity(n: int) -> Perm:
    """
    >>> identity(4)
    (1, 2, 3, 4)
    """
    return tuple(range(1, n + 1))


def is_identity(w: Perm) -> bool:
    return all(w[i] == i + 1 for i in range(len(w)))


def simple(n: int, i: int) -> Perm:
    """
    The simple reflection s_i in S_n (swaps i and i+1).

    >>> simple(3, 1)
    (2, 1, 3)
    """
    return transposition(n, i, i + 1)


def transposition(n: int, i: int, j: int) -> Perm:
    """
    The transposition t_{ij} with 1 <= i < j <= n.

    >>> transposition(4, 2, 4)
    (1, 4, 3, 2)
    """
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}) in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def compose(p: Perm, q: Perm) -> Perm:
    """
    Functional composition: ``compose(p, q)(i) == p(q(i))``.

    >>> compose(simple(3, 1), simple(3, 2))
    (2, 3, 1)
    """
    if len(p) != len(q):
        raise RankMismatchError(f"rank mismatch: {len(p)} vs {len(q)}")
    return tuple(p[v - 1] for v in q)


def inverse(w: Perm) -> Perm:
    """
    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """
    Coxeter length = inversion count.

    >>> length((3, 5, 1, 4, 2))
    6
    >>> length(identity(5))
    0
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def right_descents(w: Perm) -> GeneratorSet:
    """
    >>> sorted(right_descents((3, 4, 5, 2, 1)))
    [3, 4]
    """
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def left_descents(w: Perm) -> GeneratorSet:
    """
    Left descents are the right descents of the inverse.

    >>> sorted(left_descents((3, 4, 5, 2, 1)))
    [1, 2]
    """
    return right_descents(inverse(w))


def descents(w: Perm, side: str) -> GeneratorSet:
    """Descent set on ``side`` ("left" or "right")."""
    if side == "right":
        return right_descents(w)
    if side == "left":
        return left_descents(w)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def support(w: Perm) -> GeneratorSet:
    """
    Simple generators appearing in every reduced word of ``w``.

    ``s_i`` lies in the support iff ``w`` does not stabilize {1..i}.

    >>> sorted(support((2, 1, 4, 3)))
    [1, 3]
    """
    n = len(w)
    supp = []
    seen_max = 0
    for i in range(1, n):
        seen_max = max(seen_max, w[i - 1])
        if seen_max > i:
            supp.append(i)
    return frozenset(supp)


def rank_matrix(w: Perm) -> tuple[tuple[int, ...], ...]:
    """
    Dot-counting matrix with entry [i][j] = #{a <= i : w(a) >= j}
    (1-based in the math, 0-based indexing into the returned tuples).

    >>> rm = rank_matrix((3, 5, 1, 4, 2))
    >>> [rm[0][j] for j in range(5)]   # i = 1 row
    [1, 1, 1, 0, 0]
    >>> [rm[4][j] for j in range(5)]   # i = 5 row
    [5, 4, 3, 2, 1]
    """
    n = len(w)
    rows = []
    prev = [0] * n
    for i in range(n):
        cur = list(prev)
        for j in range(w[i]):
            cur[j] += 1
        rows.append(tuple(cur))
        prev = cur
    return tuple(rows)


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """
    Strong Bruhat order via entrywise rank-matrix comparison.

    >>> bruhat_leq((1, 3, 2), (2, 3, 1))
    True
    >>> bruhat_leq((4, 3, 2, 1), (4, 3, 1, 2))
    False
    """
    if len(u) != len(v):
        raise RankMismatchError(f"rank mismatch: {len(u)} vs {len(v)}")
    ru = rank_matrix(u)
    rv = rank_matrix(v)
    n = len(u)
    for i in range(n):
        rui = ru[i]
        rvi = rv[i]
        for j in range(n):
            if rui[j] > rvi[j]:
                return False
    return True


def is_cover(u: Perm, v: Perm) -> bool:
    """
    Cover relation u <. v: v = u * t_{ij} with u(i) < u(j) and no value of u
    between them at an intermediate position.

    >>> is_cover((2, 1, 3), (2, 3, 1))
    True
    >>> is_cover((1, 2, 3), (3, 2, 1))
    False
    """
    if len(u) != len(v):
        raise RankMismatchError(f"rank mismatch: {len(u)} vs {len(v)}")
    diff = [k for k in range(len(u)) if u[k] != v[k]]
    if len(diff) != 2:
        return False
    i, j = diff
    if u[i] != v[j] or u[j] != v[i] or u[i] >= u[j]:
        return False
    lo, hi = u[i], u[j]
    return not any(lo < u[k] < hi for k in range(i + 1, j))


def covers_down(w: Perm) -> list[Perm]:
    """All u with u <. w."""
    n = len(w)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                u = list(w)
                u[i], u[j] = u[j], u[i]
                ut = tuple(u)
                if is_cover(ut, w):
                    out.append(ut)
    return out


def covers_up(w: Perm) -> list[Perm]:
    """All v with w <. v."""
    n = len(w)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] < w[j]:
                v = list(w)
                v[i], v[j] = v[j], v[i]
                vt = tuple(v)
                if is_cover(w, vt):
                    out.append(vt)
    return out


def reduced_word(w: Perm) -> tuple[int, ...]:
    """
    One reduced word, by greedy right-descent peeling (smallest descent first).

    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    >>> reduced_word(identity(3))
    ()
    """
    n = len(w)
    cur = list(w)
    peeled = []
    while True:
        for i in range(n - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                peeled.append(i + 1)
                break
        else:
            break
    return tuple(reversed(peeled))


def product_of_word(n: int, word: Sequence[int]) -> Perm:
    """
    Multiply out a word in the simple generators, left to right.

    >>> product_of_word(3, (1, 2, 1))
    (3, 2, 1)
    """
    w = list(range(1, n + 1))
    # right-multiplying by s_i swaps entries i, i+1
    for i in word:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def longest_element(n: int, J: Iterable[int] | None = None) -> Perm:
    """
    Longest element w_0(J) of the parabolic subgroup generated by J
    (J = all generators when omitted): each maximal run of consecutive
    generators reverses its window segment.

    >>> longest_element(4)
    (4, 3, 2, 1)
    >>> longest_element(4, {1, 3})
    (2, 1, 4, 3)
    >>> longest_element(4, set())
    (1, 2, 3, 4)
    """
    js = set(range(1, n)) if J is None else set(J)
    if not js <= set(range(1, n)):
        raise ValueError(f"generator indices out of range for S_{n}: {sorted(js)}")
    w = list(range(1, n + 1))
    i = 1
    while i < n:
        if i in js:
            j = i
            while j in js:
                j += 1
            # run i..j-1 of generators reverses positions i..j
            w[i - 1 : j] = reversed(w[i - 1 : j])
            i = j + 1
        else:
            i += 1
    return tuple(w)


def parabolic_decompose(w: Perm, J: Iterable[int]) -> tuple[Perm, Perm]:
    """
    Split w = w^J * w_J with w_J in W_J, lengths adding, w^J having no
    right descent in J.

    >>> parabolic_decompose((2, 3, 1), {1})
    ((2, 3, 1), (1, 2, 3))
    >>> parabolic_decompose((3, 4, 5, 2, 1), {2, 3, 4})
    ((3, 1, 2, 4, 5), (1, 4, 5, 3, 2))
    """
    js = set(J)
    n = len(w)
    quot = list(w)
    word = []
    # bubble within J until no right descent from J remains
    changed = True
    while changed:
        changed = False
        for i in sorted(js):
            if quot[i - 1] > quot[i]:
                quot[i - 1], quot[i] = quot[i], quot[i - 1]
                word.append(i)
                changed = True
    wj_up = tuple(quot)
    wj = compose(inverse(wj_up), w)
    return wj_up, wj


def parabolic_subgroup(n: int, J: Iterable[int]) -> list[Perm]:
    """All elements of W_J (windows in S_n permuting only J's runs)."""
    js = set(J)
    runs = []
    i = 1
    while i < n:
        if i in js:
            j = i
            while j in js:
                j += 1
            runs.append(list(range(i, j + 1)))
            i = j + 1
        else:
            i += 1
    elements = [identity(n)]
    for run in runs:
        new = []
        for base in elements:
            for arrangement in _itertools_permutations(run):
                w = list(base)
                for pos, val in zip(run, arrangement):
                    w[pos - 1] = base[val - 1]
                new.append(tuple(w))
        elements = new
    return elements


def is_bp_decomposition(w: Perm, J: Iterable[int]) -> bool:
    """
    Billey-Postnikov test: supp(w^J) ∩ J ⊆ D_L(w_J).

    >>> is_bp_decomposition((3, 4, 5, 2, 1), {2, 3, 4})
    True
    >>> is_bp_decomposition((3, 4, 5, 2, 1), set())
    True
    """
    js = frozenset(J)
    wj_up, wj = parabolic_decompose(w, js)
    return (support(wj_up) & js) <= left_descents(wj)


def bp_by_maximality(w: Perm, J: Iterable[int]) -> bool:
    """
    Independent BP test: w_J is the maximum of W_J ∩ [e, w].

    Enumerates the parabolic subgroup, so only suitable at desk scale.
    """
    js = frozenset(J)
    _, wj = parabolic_decompose(w, js)
    below = [x for x in parabolic_subgroup(len(w), js) if bruhat_leq(x, w)]
    return all(bruhat_leq(x, wj) for x in below)


def contains_pattern(w: Perm, p: Perm) -> bool:
    """
    Classical pattern containment: some subsequence of w is
    order-isomorphic to p.  Depth-first search with a feasibility prune;
    adequate for n <= 10 and |p| <= 5.

    >>> contains_pattern((3, 5, 1, 4, 2), (3, 4, 1, 2))
    True
    >>> contains_pattern((1, 2, 3, 4), (2, 1))
    False
    >>> contains_pattern((3, 4, 1, 2), (3, 4, 1, 2))
    True
    """
    n, k = len(w), len(p)
    if k > n:
        raise RankMismatchError(f"pattern rank {k} exceeds word rank {n}")
    if k == 0:
        return True

    # relative-order checks use the pattern's pairwise comparisons
    def extend(chosen: list[int], start: int) -> bool:
        d = len(chosen)
        if d == k:
            return True
        if n - start < k - d:
            return False
        for pos in range(start, n):
            ok = True
            for prev in range(d):
                if (w[chosen[prev]] < w[pos]) != (p[prev] < p[d]):
                    ok = False
                    break
            if ok and extend(chosen + [pos], pos + 1):
                return True
        return False

    return extend([], 0)


def avoids_all(w: Perm, patterns: Iterable[Perm]) -> bool:
    """True iff w contains none of the patterns (longer patterns skipped)."""
    return not any(
        len(p) <= len(w) and contains_pattern(w, p) for p in patterns
    )


def all_perms(n: int) -> list[Perm]:
    """All of S_n sorted by (length, window) — the canonical sweep order."""
    return sorted(_itertools_permutations(range(1, n + 1)), key=lambda w: (length(w), w))


def subword_leq_oracle(u: Perm, v: Perm) -> bool:
    """
    Subword-property oracle for Bruhat order, independent of rank matrices:
    u <= v iff a fixed reduced word of v has a subword of length l(u) whose
    product is u.  Exponential in l(v); test-scale only.
    """
    if len(u) != len(v):
        raise RankMismatchError(f"rank mismatch: {len(u)} vs {len(v)}")
    word = reduced_word(v)
    lu = length(u)
    n = len(u)
    if lu > len(word):
        return False
    found: set[tuple[int, Perm]] = {(0, identity(n))}
    for letter in word:
        s = simple(n, letter)
        found |= {(c + 1, compose(x, s)) for (c, x) in found if c < lu}
    return (lu, u) in found


def to_string(w: Perm) -> str:
    """
    One-line serialization: digits for n <= 9, comma-separated otherwise.

    >>> to_string((3, 5, 1, 4, 2))
    '35142'
    >>> to_string(tuple(range(1, 11)))
    '1,2,3,4,5,6,7,8,9,10'
    """
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def from_string(text: str) -> Perm:
    """
    Parse the serialization produced by :func:`to_string`.

    >>> from_string('35142')
    (3, 5, 1, 4, 2)
    >>> from_string('3,5,1,4,2')
    (3, 5, 1, 4, 2)
    """
    text = text.strip()
    if "," in text:
        vals = [int(part) for part in text.split(",")]
    else:
        vals = [int(ch) for ch in text]
    return perm(vals)
