"""Gauss double-occurrence words and their chord diagrams.

A knot projection with ``n`` double points is recorded by walking once around
the curve and writing down the label of each double point as it is met.  The
result is a cyclic word of length ``2n`` in which every label occurs exactly
twice.  The word is stored linearly, but everything in this package treats it
as a circle; :func:`canonical_form` picks one representative per class under
rotation, reversal and relabelling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from subchord.errors import EmptyToken, LabelNotTwice

_SPLIT = re.compile(r"\s*,\s*|\s+")
_TOKEN = re.compile(r"^[A-Za-z0-9]+$")


@dataclass(frozen=True)
class GaussWord:
    """A cyclic double-occurrence word.

    ``letters`` holds the labels in traversal order.  Labels are integers;
    :func:`parse_gauss_word` maps alphanumeric tokens onto them.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        counts: dict[int, int] = {}
        for a in letters:
            counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, c in counts.items() if c != 2)
        if bad:
            raise LabelNotTwice(f"labels {bad} do not occur exactly twice")

    @property
    def n(self) -> int:
        return len(self.letters) // 2

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters))

    def labels(self) -> list[int]:
        """Labels in order of first occurrence."""
        seen: list[int] = []
        for a in self.letters:
            if a not in seen:
                seen.append(a)
        return seen

    def positions(self) -> dict[int, tuple[int, int]]:
        """Map each label to its two (0-based) positions, smaller first."""
        pos: dict[int, list[int]] = {}
        for i, a in enumerate(self.letters):
            pos.setdefault(a, []).append(i)
        return {a: (p[0], p[1]) for a, p in pos.items()}

    def rotate(self, k: int) -> GaussWord:
        if not self.letters:
            return self
        k %= len(self.letters)
        return GaussWord(self.letters[k:] + self.letters[:k])

    def reverse(self) -> GaussWord:
        return GaussWord(self.letters[::-1])

    def relabel(self, mapping) -> GaussWord:
        return GaussWord(tuple(mapping[a] for a in self.letters))


def word(letters: Iterable[int] | str) -> GaussWord:
    """Convenience constructor: accepts a string or an iterable of labels."""
    if isinstance(letters, str):
        return parse_gauss_word(letters)
    if isinstance(letters, GaussWord):
        return letters
    return GaussWord(tuple(letters))


def parse_gauss_word(text: str) -> GaussWord:
    """Parse whitespace- or comma-separated labels.

    Purely numeric input keeps its integer labels.  Otherwise tokens are
    numbered 1, 2, ... in order of first occurrence.

    >>> str(parse_gauss_word("1 2 3 1 2 3"))
    '1 2 3 1 2 3'
    >>> parse_gauss_word("").n
    0
    """
    text = text.strip()
    if not text:
        return GaussWord(())
    tokens = _SPLIT.split(text)
    for t in tokens:
        if not _TOKEN.match(t):
            raise EmptyToken(f"malformed token {t!r} in {text!r}")
    if all(t.isdigit() for t in tokens):
        return GaussWord(tuple(int(t) for t in tokens))
    names: dict[str, int] = {}
    for t in tokens:
        names.setdefault(t, len(names) + 1)
    return GaussWord(tuple(names[t] for t in tokens))


def normalize(seq: Sequence[int]) -> tuple[int, ...]:
    """Relabel to 1..n in order of first occurrence."""
    m: dict[int, int] = {}
    out = []
    for a in seq:
        b = m.get(a)
        if b is None:
            b = m[a] = len(m) + 1
        out.append(b)
    return tuple(out)


def canonical_letters(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least normalized word over rotations and reversal."""
    L = len(seq)
    if L == 0:
        return ()
    best: list[int] | None = None
    for s in (tuple(seq), tuple(seq[::-1])):
        doubled = s + s
        for r in range(L):
            m: dict[int, int] = {}
            cand: list[int] = []
            # `state` 0: tied with best so far, -1: already smaller
            state = 0 if best is not None else -1
            for i in range(r, r + L):
                a = doubled[i]
                b = m.get(a)
                if b is None:
                    b = m[a] = len(m) + 1
                if state == 0:
                    c = best[i - r]
                    if b > c:
                        state = 1
                        break
                    if b < c:
                        state = -1
                cand.append(b)
            if state == -1:
                best = cand
    return tuple(best)


def canonical_form(w: GaussWord) -> GaussWord:
    """Canonical representative under rotation, reversal and relabelling.

    >>> str(canonical_form(parse_gauss_word("2 3 1 2 3 1")))
    '1 2 3 1 2 3'
    """
    return GaussWord(canonical_letters(w.letters))


def is_canonical(w: GaussWord) -> bool:
    return canonical_letters(w.letters) == w.letters


@dataclass(frozen=True)
class ChordDiagram:
    """Chords as pairs of circle positions ``1..2n`` (1-based)."""

    size: int
    chords: tuple[tuple[int, int], ...]


def chord_diagram(w: GaussWord) -> ChordDiagram:
    pos = w.positions()
    chords = tuple(sorted((p + 1, q + 1) for p, q in pos.values()))
    return ChordDiagram(len(w), chords)


def chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Whether two chords given by sorted endpoint pairs alternate."""
    (p, q), (r, s) = a, b
    return (p < r < q < s) or (r < p < s < q)


@dataclass(frozen=True)
class InterlacementGraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def neighbors(self, v: int) -> set[int]:
        return {u for e in self.edges if v in e for u in e if u != v}

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj


def interlacement(w: GaussWord) -> InterlacementGraph:
    pos = w.positions()
    labels = w.labels()
    edges = set()
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if chords_cross(pos[a], pos[b]):
                edges.add(frozenset((a, b)))
    return InterlacementGraph(tuple(labels), frozenset(edges))


def interlace_degrees(letters: Sequence[int]) -> dict[int, int]:
    """Interlacement degree of each label: letters seen exactly once
    strictly between its two occurrences."""
    first: dict[int, int] = {}
    for i, a in enumerate(letters):
        first.setdefault(a, i)
    deg = {}
    for a, p in first.items():
        seen: set[int] = set()
        q = p + 1
        while letters[q] != a:
            b = letters[q]
            if b in seen:
                seen.remove(b)
            else:
                seen.add(b)
            q += 1
        deg[a] = len(seen)
    return deg


def connected_sum(w1: GaussWord, w2: GaussWord) -> GaussWord:
    """Concatenate ``w1`` and a copy of ``w2`` relabelled past ``max(w1)``."""
    shift = max(w1.letters, default=0)
    m = {a: shift + i + 1 for i, a in enumerate(w2.labels())}
    return GaussWord(w1.letters + tuple(m[a] for a in w2.letters))


def _shortest_closed_arc(items: list[tuple[int, int]]):
    """(start, length) of a shortest proper closed cyclic arc, or None."""
    L = len(items)
    best = None
    for i in range(L):
        open_: set[int] = set()
        for k in range(1, L):
            if best is not None and k >= best[1]:
                break
            a = items[(i + k - 1) % L][1]
            if a in open_:
                open_.remove(a)
            else:
                open_.add(a)
            if not open_:
                best = (i, k)
                break
    return best


def decompose(w: GaussWord) -> list[GaussWord]:
    """Split ``w`` into connected-sum factors.

    A factor is a cyclic arc that carries only complete chords.  Shortest such
    arcs are cut out one at a time; each is prime (or the one-crossing curve).
    Factors keep their original labels and are ordered by first position.
    """
    cur = list(enumerate(w.letters))
    factors: list[list[tuple[int, int]]] = []
    while cur:
        arc = _shortest_closed_arc(cur)
        if arc is None:
            factors.append(cur)
            break
        i, k = arc
        idx = {(i + j) % len(cur) for j in range(k)}
        factors.append([cur[j] for j in sorted(idx)])
        cur = [cur[j] for j in range(len(cur)) if j not in idx]
    out = []
    for f in factors:
        f = sorted(f)
        out.append((f[0][0], GaussWord(tuple(a for _, a in f))))
    return [g for _, g in sorted(out, key=lambda t: t[0])]


def is_reduced(w: GaussWord) -> bool:
    """No chord is disjoint from all others (no nugatory double point)."""
    return all(d > 0 for d in interlace_degrees(w.letters).values())


def is_prime(w: GaussWord) -> bool:
    return w.n >= 1 and _shortest_closed_arc(list(enumerate(w.letters))) is None
