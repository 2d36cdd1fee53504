"""Flypes on Gauss words.

A flype site is a double point ``Q`` next to a tangle ``T``: a set of labels
occupying two disjoint arcs of the circle (the tangle's two strands) with no
chord leaving them.  One strand end sits next to each occurrence of ``Q``
(the west ends); the other two ends (east) lead away from ``Q``.

Rotating the tangle by a half turn and passing ``Q`` to its far side keeps
every connection between the four tangle ends and the rest of the curve, so
each strand is still entered from the same end.  On the word this only moves
the two letters ``Q`` from the west gaps to the east gaps.

Geometric condition: both ``T`` and the rest of the curve, with and without
``Q``, must be connected through their own edges.  Then the four cut edges
bound a disk around ``T`` and another around ``T + Q``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from subchord.embed import is_realizable
from subchord.errors import PostconditionViolation, SiteInvalid
from subchord.invariant import lambda_from_counts
from subchord.pattern import count_named
from subchord.word import GaussWord, canonical_letters


@dataclass(frozen=True)
class FlypeSite:
    """``arcs`` are (start, length) position runs; ``west``/``east`` are gaps.

    ``case`` is ``Case1`` when both west ends lie on one strand (that strand
    leaves Q and comes straight back), ``Case5`` when they lie on different
    strands.  An empty ``arcs`` is the identity flype.
    """

    q: int
    case: str
    arcs: tuple[tuple[int, int], ...] = ()
    west: tuple[int, ...] = ()
    east: tuple[int, ...] = ()

    @property
    def trivial(self) -> bool:
        return not self.arcs

    def as_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _arc_positions(start: int, length: int, L: int) -> list[int]:
    return [(start + i) % L for i in range(length)]


def _connected(letters, L, members: set[int]) -> bool:
    """Labels in ``members`` connected by edges with both ends in ``members``."""
    if not members:
        return True
    parent = {a: a for a in members}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k in range(L):
        a, b = letters[k], letters[(k + 1) % L]
        if a in members and b in members:
            parent[find(a)] = find(b)
    return len({find(a) for a in members}) == 1


def _arcs_avoiding(L: int, forbidden: set[int]):
    for start in range(L):
        if start in forbidden:
            continue
        for length in range(1, L):
            if (start + length - 1) % L in forbidden:
                break
            yield start, length


def list_flype_sites(w: GaussWord) -> list[FlypeSite]:
    """All flype sites of ``w``, plus one identity site per label."""
    letters = w.letters
    L = len(letters)
    pos = w.positions()
    labels = w.labels()
    sites = []
    for q in labels:
        sites.append(FlypeSite(q, "Case5"))
        i, j = pos[q]
        arcs = list(_arcs_avoiding(L, {i, j}))
        for x, a1 in enumerate(arcs):
            p1 = set(_arc_positions(*a1, L))
            for a2 in arcs[x + 1:]:
                p2 = set(_arc_positions(*a2, L))
                if p1 & p2:
                    continue
                site = _make_site(w, q, i, j, a1, a2, p1 | p2, pos)
                if site is not None:
                    sites.extend(site)
    return sites


def _make_site(w, q, i, j, a1, a2, ps, pos):
    letters = w.letters
    L = len(letters)
    tangle = {letters[p] for p in ps}
    if any(pos[a][0] not in ps or pos[a][1] not in ps for a in tangle):
        return None
    # strand ends as (gap, arc index, position across the gap)
    ends = []
    for idx, (s, ln) in enumerate((a1, a2)):
        last = (s + ln - 1) % L
        ends.append(((s - 1) % L, idx, (s - 1) % L))
        ends.append((last, idx, (last + 1) % L))
    if len({e[0] for e in ends}) < 4:
        return None  # touching arcs form a single strand
    at_i = [e for e in range(4) if ends[e][2] == i]
    at_j = [e for e in range(4) if ends[e][2] == j]
    if not at_i or not at_j:
        return None
    rest = set(w.labels()) - tangle
    if not _connected(letters, L, tangle) or not _connected(letters, L, rest):
        return None
    if not _connected(letters, L, rest - {q}):
        return None
    out = []
    for ei in at_i:
        for ej in at_j:
            if ei == ej:
                continue
            west_ends = (ei, ej)
            east_ends = tuple(e for e in range(4) if e not in west_ends)
            case = "Case1" if ends[ei][1] == ends[ej][1] else "Case5"
            out.append(
                FlypeSite(
                    q,
                    case,
                    (tuple(a1), tuple(a2)),
                    tuple(sorted(ends[e][0] for e in west_ends)),
                    tuple(sorted(ends[e][0] for e in east_ends)),
                )
            )
    return out


def apply_flype(w: GaussWord, f: FlypeSite, check: bool = True) -> GaussWord:
    """Move ``Q`` from the west gaps to the east gaps.

    With ``check`` the result must be realizable with the same five counts and
    lambda, otherwise ``PostconditionViolation`` is raised.
    """
    if f.trivial:
        if f.q not in w.positions():
            raise SiteInvalid(f"label {f.q} not in {w}")
        return w
    if f not in list_flype_sites(w):
        raise SiteInvalid(f"{f} is not a flype site of {w}")
    return _checked(w, f, _rewrite(w, f), check)


def _rewrite(w: GaussWord, f: FlypeSite) -> GaussWord:
    letters = w.letters
    qpos = set(w.positions()[f.q])
    east = set(f.east)
    out = []
    for k in range(len(letters)):
        if k not in qpos:
            out.append(letters[k])
        if k in east:
            out.append(f.q)
    return GaussWord(tuple(out))


def _checked(w: GaussWord, f: FlypeSite, result: GaussWord, check: bool) -> GaussWord:
    if check:
        before = count_named(w)
        after = count_named(result)
        if not is_realizable(result):
            raise PostconditionViolation(f"flype {f} of {w} gave unrealizable {result}")
        if before != after or lambda_from_counts(before) != lambda_from_counts(after):
            raise PostconditionViolation(f"flype {f} of {w} changed counts {before} -> {after}")
    return result


def flype_neighbours(w: GaussWord) -> set[tuple[int, ...]]:
    """Canonical forms reachable from ``w`` by one non-trivial flype."""
    return {
        canonical_letters(_checked(w, f, _rewrite(w, f), True).letters)
        for f in list_flype_sites(w)
        if not f.trivial
    }
