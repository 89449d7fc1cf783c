"""
Words-modulo-commutation arithmetic for right-angled Coxeter groups.

A presentation fixes r involutive generators, numbered 1..r, plus a set of
commuting pairs; every non-commuting pair generates an infinite dihedral
group.  Elements are tuples of generator indices in a canonical normal
form: the lexicographically least reduced word of the commutation class.
Normal forms are computed eagerly, so tuple equality is group equality.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]

DEFAULT_INTERVAL_CAP = 16


class PresentationMismatchError(ValueError):
    """Raised when elements of different presentations are combined."""


class RacgPresentation:
    """Immutable presentation: generator count + commuting pairs."""

    def __init__(self, generator_count: int, commuting_pairs: Iterable[tuple[int, int]]):
        if generator_count < 1:
            raise ValueError("need at least one generator")
        self.generator_count = generator_count
        pairs = set()
        for a, b in commuting_pairs:
            if a == b:
                raise ValueError(f"commuting pair must be irreflexive: ({a}, {b})")
            if not (1 <= a <= generator_count and 1 <= b <= generator_count):
                raise ValueError(f"generator out of range: ({a}, {b})")
            pairs.add((min(a, b), max(a, b)))
        self.commuting_pairs = frozenset(pairs)
        # commutes[s] = set of generators commuting with s (s excluded)
        self.commutes: dict[int, frozenset[int]] = {
            s: frozenset(
                t
                for t in range(1, generator_count + 1)
                if t != s and ((min(s, t), max(s, t)) in pairs)
            )
            for s in range(1, generator_count + 1)
        }
        self._leq_cache: dict[tuple[Word, Word], bool] = {}

    def __repr__(self) -> str:
        return (
            f"RacgPresentation({self.generator_count}, "
            f"{sorted(self.commuting_pairs)})"
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RacgPresentation)
            and self.generator_count == other.generator_count
            and self.commuting_pairs == other.commuting_pairs
        )

    def __hash__(self) -> int:
        return hash((self.generator_count, self.commuting_pairs))

    def commute(self, s: int, t: int) -> bool:
        return t in self.commutes[s]

    # -- normal form ----------------------------------------------------

    def _check_letters(self, word: Sequence[int]) -> None:
        for s in word:
            if not 1 <= s <= self.generator_count:
                raise ValueError(f"letter out of range: {s}")

    def _reduce(self, word: Sequence[int]) -> list[int]:
        # cancel equal letters separated only by commuting letters, repeat
        out = list(word)
        changed = True
        while changed:
            changed = False
            for i in range(len(out)):
                s = out[i]
                for j in range(i + 1, len(out)):
                    if out[j] == s:
                        del out[j]
                        del out[i]
                        changed = True
                        break
                    if out[j] not in self.commutes[s]:
                        break
                if changed:
                    break
        return out

    def normalize(self, word: Sequence[int]) -> Word:
        """
        Fully reduce, then pick the lexicographically least reduced word of
        the commutation class (greedy smallest-available-letter extraction).

        >>> p = RacgPresentation(3, [(1, 2)])
        >>> p.normalize((2, 1))
        (1, 2)
        >>> p.normalize((3, 3))
        ()
        >>> p.normalize((1, 3, 1))
        (1, 3, 1)
        """
        self._check_letters(word)
        rest = self._reduce(word)
        out: list[int] = []
        while rest:
            best_pos = None
            blocked: set[int] = set()
            for pos, s in enumerate(rest):
                if s in blocked:
                    continue
                # s can move to the front iff all earlier letters commute with it
                if all(rest[k] in self.commutes[s] for k in range(pos)):
                    if best_pos is None or s < rest[best_pos]:
                        best_pos = pos
                blocked.add(s)
            out.append(rest.pop(best_pos))  # type: ignore[arg-type]
        return tuple(out)

    # -- group operations ------------------------------------------------

    def identity(self) -> Word:
        return ()

    def mult(self, u: Word, v: Word) -> Word:
        return self.normalize(u + v)

    def inverse(self, w: Word) -> Word:
        # generators are involutions, so reversing a word inverts it
        return self.normalize(tuple(reversed(w)))

    def length(self, w: Word) -> int:
        return len(w)

    def left_descent_set(self, w: Word) -> frozenset[int]:
        """
        s is a left descent iff its first occurrence commutes past every
        earlier letter of a reduced word.

        >>> p = RacgPresentation(2, [])
        >>> p.left_descent_set((1, 2, 1))
        frozenset({1})
        """
        out = set()
        blocked: set[int] = set()
        for pos, s in enumerate(w):
            if s in blocked:
                continue
            if all(w[k] in self.commutes[s] for k in range(pos)):
                out.add(s)
            blocked.add(s)
        return frozenset(out)

    def right_descent_set(self, w: Word) -> frozenset[int]:
        return self.left_descent_set(tuple(reversed(w)))

    def support(self, w: Word) -> frozenset[int]:
        return frozenset(w)

    def alternating_element(self, s: int, t: int, m: int) -> Word:
        """
        The alternating word s t s t ... with m letters; requires a
        non-commuting pair, so the word is reduced of length m.

        >>> p = RacgPresentation(2, [])
        >>> p.alternating_element(1, 2, 3)
        (1, 2, 1)
        """
        if m < 1:
            raise ValueError("need m >= 1")
        if s == t:
            raise ValueError("need distinct generators")
        if self.commute(s, t):
            raise ValueError(f"generators {s} and {t} commute")
        return self.normalize(tuple(s if k % 2 == 0 else t for k in range(m)))

    # -- Bruhat order -----------------------------------------------------

    def bruhat_leq(self, u: Word, v: Word) -> bool:
        """
        Strong order via the lifting-property recursion on a left descent
        of v.

        >>> p = RacgPresentation(2, [])
        >>> p.bruhat_leq((1, 2), (1, 2, 1))
        True
        >>> p.bruhat_leq((1, 2), (2, 1))
        False
        """
        key = (u, v)
        cached = self._leq_cache.get(key)
        if cached is not None:
            return cached
        if len(u) > len(v):
            result = False
        elif len(u) == 0:
            result = True
        elif u == v:
            result = True
        else:
            s = min(self.left_descent_set(v))
            sv = self.mult((s,), v)
            if s in self.left_descent_set(u):
                result = self.bruhat_leq(self.mult((s,), u), sv)
            else:
                result = self.bruhat_leq(u, sv)
        self._leq_cache[key] = result
        return result

    def lower_interval(self, v: Word, cap: int = DEFAULT_INTERVAL_CAP) -> set[Word]:
        """
        {u : u <= v} by normalizing every subword of one reduced word of v.

        >>> p = RacgPresentation(2, [])
        >>> sorted(p.lower_interval((1, 2, 1)))
        [(), (1,), (1, 2), (1, 2, 1), (2,), (2, 1)]
        """
        if len(v) > cap:
            raise ValueError(f"interval cap exceeded: l(v)={len(v)} > {cap}")
        out: set[Word] = set()
        n = len(v)
        for mask in range(1 << n):
            sub = tuple(v[i] for i in range(n) if mask >> i & 1)
            out.add(self.normalize(sub))
        return out

    def subword_leq_oracle(self, u: Word, v: Word) -> bool:
        """Independent oracle: u <= v iff some subword of v normalizes to u
        without cancellation (length l(u))."""
        n = len(v)
        lu = len(u)
        for mask in range(1 << n):
            if bin(mask).count("1") != lu:
                continue
            sub = tuple(v[i] for i in range(n) if mask >> i & 1)
            if self.normalize(sub) == u:
                return True
        return lu == 0

    def is_reflection(self, w: Word) -> bool:
        """
        Reflection test by cyclic reduction: strip equal conjugating letters
        from both ends (up to commutation) until a single generator remains.

        >>> p = RacgPresentation(2, [])
        >>> p.is_reflection((1, 2, 1))
        True
        >>> p.is_reflection((1, 2))
        False
        >>> p = RacgPresentation(2, [(1, 2)])
        >>> p.is_reflection((1, 2))   # commuting product is an involution but not a reflection
        False
        """
        w = self.normalize(w)
        if len(w) % 2 == 0:
            return False
        return self._cyclically_reduces_to_letter(w)

    def _cyclically_reduces_to_letter(self, w: Word) -> bool:
        if len(w) == 1:
            return True
        for s in self.left_descent_set(w) & self.right_descent_set(w):
            stripped = self.mult((s,), self.mult(w, (s,)))
            if len(stripped) == len(w) - 2 and self._cyclically_reduces_to_letter(stripped):
                return True
        return False

    # -- serialization ----------------------------------------------------

    def element_to_string(self, w: Word) -> str:
        """Space-separated generator indices; empty word is 'e'."""
        return " ".join(str(s) for s in w) if w else "e"

    def element_from_string(self, text: str) -> Word:
        text = text.strip()
        if text in ("", "e"):
            return ()
        return self.normalize(tuple(int(part) for part in text.split()))


def parse_presentation(text: str) -> RacgPresentation:
    """
    File format: first non-comment line is the generator count, each further
    line one commuting pair "i j".

    >>> parse_presentation("3\\n1 2\\n2 3\\n").commuting_pairs == frozenset({(1, 2), (2, 3)})
    True
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty presentation file")
    count = int(lines[0])
    pairs = []
    for line in lines[1:]:
        a, b = line.split()
        pairs.append((int(a), int(b)))
    return RacgPresentation(count, pairs)


def presentation_to_string(p: RacgPresentation) -> str:
    lines = [str(p.generator_count)]
    lines += [f"{a} {b}" for a, b in sorted(p.commuting_pairs)]
    return "\n".join(lines) + "\n"


# Named commutation graphs used as harness defaults (the paper does not
# single out test presentations, so these are the artifact's choice).
def preset_presentation(name: str) -> RacgPresentation:
    """
    >>> preset_presentation('dihedral').generator_count
    2
    """
    presets: dict[str, tuple[int, list[tuple[int, int]]]] = {
        "dihedral": (2, []),
        "path3": (3, [(1, 2), (2, 3)]),
        "path4": (4, [(1, 2), (2, 3), (3, 4)]),
        "cycle4": (4, [(1, 2), (2, 3), (3, 4), (1, 4)]),
        "star4": (4, [(1, 2), (1, 3), (1, 4)]),
        "complete4": (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
        "k23": (5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
    }
    if name not in presets:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(presets)}")
    count, pairs = presets[name]
    return RacgPresentation(count, pairs)


def elements_up_to_length(
    p: RacgPresentation, maxlen: int, limit: int | None = None
) -> list[Word]:
    """
    All elements with l(w) <= maxlen in canonical (length, word) order,
    by breadth-first right multiplication.  ``limit`` truncates the result
    (deterministically) for explosive presentations.
    """
    seen: set[Word] = {()}
    frontier: list[Word] = [()]
    for _ in range(maxlen):
        new = []
        for w in frontier:
            for s in range(1, p.generator_count + 1):
                x = p.mult(w, (s,))
                if len(x) == len(w) + 1 and x not in seen:
                    seen.add(x)
                    new.append(x)
        frontier = new
    out = sorted(seen, key=lambda w: (len(w), w))
    if limit is not None:
        out = out[:limit]
    return out
