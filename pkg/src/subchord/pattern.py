"""Counting embedded sub-chord diagrams.

A pattern is a small chord diagram, kept up to rotation, reflection and
relabelling.  ``count_pattern`` looks at every chord subset of the right size
and compares the induced circular arrangement with the pattern.
``graph_counts`` reaches the five named counts from the interlacement graph
alone and serves as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from functools import lru_cache
from itertools import combinations

from subchord.word import GaussWord, canonical_letters, chords_cross, normalize, word


@dataclass(frozen=True)
class Pattern:
    name: str
    letters: tuple[int, ...]

    @classmethod
    def of(cls, name: str, text: str) -> Pattern:
        return cls(name, canonical_letters(word(text).letters))

    @property
    def size(self) -> int:
        return len(self.letters) // 2


CROSS = Pattern.of("cross", "A B A B")
TRIPLE = Pattern.of("triple", "A B C A B C")
H = Pattern.of("h", "A B C A C B")
III = Pattern.of("iii", "A B C D A D C B")
HH = Pattern.of("hh", "A B C D B A D C")

NAMED = (CROSS, TRIPLE, H, III, HH)


@dataclass(frozen=True)
class PatternCounts:
    cross: int = 0
    triple: int = 0
    h: int = 0
    iii: int = 0
    hh: int = 0

    def as_dict(self) -> dict[str, int]:
        return asdict(self)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def __add__(self, other: PatternCounts) -> PatternCounts:
        return PatternCounts(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other: PatternCounts) -> PatternCounts:
        return PatternCounts(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    @classmethod
    def from_dict(cls, d) -> PatternCounts:
        return cls(**{f.name: int(d[f.name]) for f in fields(cls)})


COLUMNS = tuple(f.name for f in fields(PatternCounts))


@lru_cache(maxsize=None)
def _canon_small(normalized: tuple[int, ...]) -> tuple[int, ...]:
    return canonical_letters(normalized)


def _induced(letters, subset) -> tuple[int, ...]:
    return normalize([a for a in letters if a in subset])


def count_pattern(w: GaussWord, p: Pattern) -> int:
    """Number of chord subsets of ``w`` arranged like ``p`` on the circle."""
    k = p.size
    labels = w.labels()
    count = 0
    for sub in combinations(labels, k):
        if _canon_small(_induced(w.letters, frozenset(sub))) == p.letters:
            count += 1
    return count


@lru_cache(maxsize=200_000)
def _named(letters: tuple[int, ...], max_size: int = 4) -> PatternCounts:
    labels = list(dict.fromkeys(letters))
    by_size: dict[int, dict[tuple[int, ...], str]] = {}
    for p in NAMED:
        if p.size <= max_size:
            by_size.setdefault(p.size, {})[p.letters] = p.name
    tally = dict.fromkeys(COLUMNS, 0)
    for k, table in by_size.items():
        for sub in combinations(labels, k):
            name = table.get(_canon_small(_induced(letters, frozenset(sub))))
            if name is not None:
                tally[name] += 1
    return PatternCounts(**tally)


def count_named(w: GaussWord) -> PatternCounts:
    """The five named counts (cross, triple, h, iii, hh) of ``w``.

    >>> count_named(word("1 2 3 4 2 1 4 3"))
    PatternCounts(cross=4, triple=0, h=4, iii=0, hh=1)
    """
    return _named(w.letters)


def count_small(w: GaussWord) -> PatternCounts:
    """Only the 2- and 3-chord counts; ``iii`` and ``hh`` are left at zero.

    Enough for lambda, and much cheaper on long words.
    """
    return _named(w.letters, 3)


def graph_counts(w: GaussWord) -> PatternCounts:
    """Named counts read off the interlacement graph.

    cross = edges, triple = triangles, h = 3-sets spanning a path,
    iii = 4-sets spanning a star K_{1,3}, hh = 4-sets spanning a 4-cycle.
    """
    pos = w.positions()
    labels = w.labels()
    idx = {a: i for i, a in enumerate(labels)}
    n = len(labels)
    adj = [[False] * n for _ in range(n)]
    for a, b in combinations(labels, 2):
        if chords_cross(pos[a], pos[b]):
            adj[idx[a]][idx[b]] = adj[idx[b]][idx[a]] = True

    cross = sum(adj[i][j] for i, j in combinations(range(n), 2))
    triple = h = 0
    for s in combinations(range(n), 3):
        e = sum(adj[i][j] for i, j in combinations(s, 2))
        triple += e == 3
        h += e == 2
    iii = hh = 0
    for s in combinations(range(n), 4):
        e = sum(adj[i][j] for i, j in combinations(s, 2))
        if e not in (3, 4):
            continue
        degs = sorted(sum(adj[i][j] for j in s if j != i) for i in s)
        if degs == [1, 1, 1, 3]:
            iii += 1
        elif degs == [2, 2, 2, 2]:
            hh += 1
    return PatternCounts(cross, triple, h, iii, hh)
